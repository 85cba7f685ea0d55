#include "nmaw/stencil/thomas.hpp"

#include <cmath>
#include <string>

#include "nmaw/error.hpp"

namespace nmaw::stencil {

void thomas_solve(std::span<const double> sub, std::span<const double> diag,
                  std::span<const double> super, std::span<const double> rhs,
                  std::span<double> x, std::span<double> scratch, KernelCounters* counters) {
  const std::size_t n = diag.size();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "empty tridiagonal system");
  if (sub.size() != n || super.size() != n || rhs.size() != n || x.size() != n) {
    throw Error(ErrorKind::InvalidArgument, "tridiagonal bands differ in length");
  }
  if (scratch.size() < 2 * n) throw Error(ErrorKind::InvalidArgument, "scratch too small");

  double* cp = scratch.data();      // eliminated super-diagonal
  double* dp = scratch.data() + n;  // eliminated right-hand side

  const auto check_pivot = [](double pivot, std::size_t row) {
    if (!(std::abs(pivot) >= kSingularPivot)) {
      throw Error(ErrorKind::SingularPivot, "pivot " + std::to_string(pivot) + " at row " +
                                                std::to_string(row));
    }
  };

  std::uint64_t flops = 0;
  check_pivot(diag[0], 0);
  if (n > 1) {
    cp[0] = super[0] / diag[0];
    ++flops;
  }
  dp[0] = rhs[0] / diag[0];
  ++flops;
  for (std::size_t k = 1; k < n; ++k) {
    const double pivot = diag[k] - sub[k] * cp[k - 1];
    check_pivot(pivot, k);
    if (k + 1 < n) {
      cp[k] = super[k] / pivot;
      ++flops;
    }
    dp[k] = (rhs[k] - sub[k] * dp[k - 1]) / pivot;
    flops += 5;
  }

  x[n - 1] = dp[n - 1];
  for (std::size_t k = n - 1; k-- > 0;) {
    x[k] = dp[k] - cp[k] * x[k + 1];
    flops += 2;
  }

  if (counters) {
    counters->flops += flops;
    counters->bytes_read += 4 * n * sizeof(double);
    counters->bytes_written += n * sizeof(double);
  }
}

std::vector<double> thomas_solve(std::span<const double> sub, std::span<const double> diag,
                                 std::span<const double> super, std::span<const double> rhs,
                                 KernelCounters* counters) {
  std::vector<double> x(diag.size());
  std::vector<double> scratch(2 * diag.size());
  thomas_solve(sub, diag, super, rhs, x, scratch, counters);
  return x;
}

double residual_inf_norm(const TridiagonalSystem& system, std::span<const double> x) {
  const std::size_t n = system.size();
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    double row = system.diag[k] * x[k];
    if (k > 0) row += system.sub[k] * x[k - 1];
    if (k + 1 < n) row += system.super[k] * x[k + 1];
    worst = std::max(worst, std::abs(row - system.rhs[k]));
  }
  return worst;
}

}  // namespace nmaw::stencil
