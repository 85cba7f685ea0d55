#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nmaw/counters.hpp"

namespace nmaw::stencil {

// Pivots smaller than this in magnitude raise Error{SingularPivot}.
inline constexpr double kSingularPivot = 1e-300;

// Tridiagonal system T x = d. sub[0] and super[n-1] lie outside the matrix
// and are ignored.
struct TridiagonalSystem {
  std::vector<double> sub;
  std::vector<double> diag;
  std::vector<double> super;
  std::vector<double> rhs;

  std::size_t size() const noexcept { return diag.size(); }
};

// Thomas algorithm: forward elimination then back substitution, 8n-7 flops
// (the eliminated super-diagonal is not formed for the last row).
//
// `scratch` needs 2n doubles. Throws Error{InvalidArgument} on empty or
// mismatched spans and Error{SingularPivot} on a vanishing pivot.
void thomas_solve(std::span<const double> sub, std::span<const double> diag,
                  std::span<const double> super, std::span<const double> rhs,
                  std::span<double> x, std::span<double> scratch,
                  KernelCounters* counters = nullptr);

std::vector<double> thomas_solve(std::span<const double> sub, std::span<const double> diag,
                                 std::span<const double> super, std::span<const double> rhs,
                                 KernelCounters* counters = nullptr);

inline std::vector<double> thomas_solve(const TridiagonalSystem& system,
                                        KernelCounters* counters = nullptr) {
  return thomas_solve(system.sub, system.diag, system.super, system.rhs, counters);
}

// max_k |(T x - d)_k|.
double residual_inf_norm(const TridiagonalSystem& system, std::span<const double> x);

}  // namespace nmaw::stencil
