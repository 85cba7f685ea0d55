#include "nmaw/stencil/vadvc.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "nmaw/error.hpp"

namespace nmaw::stencil {

namespace {

bool same_shape(const Grid3D<float>& a, const Grid3D<float>& b) {
  return a.dims() == b.dims() && a.halo() == b.halo();
}

// Assembles column (i, j) into caller-owned bands; returns the flop count.
std::uint64_t assemble_into(const VadvcFields& f, std::size_t i, std::size_t j, double* a,
                            double* b, double* c, double* d, std::uint64_t& loads) {
  const std::size_t depth = f.dims().depth;
  const double dtr = f.dtr_inv;
  std::uint64_t flops = 0;

  if (depth == 1) {
    a[0] = 0.0;
    c[0] = 0.0;
    b[0] = dtr;
    d[0] = dtr * f.u_pos(i, j, 0);
    loads += 1;
    return 1;
  }

  for (std::size_t k = 0; k < depth; ++k) {
    const bool first = k == 0;
    const bool last = k + 1 == depth;
    const double us = f.u_stage(i, j, k);
    double ak = 0.0;
    double ck = 0.0;
    double bk = dtr;
    double dk = dtr * f.u_pos(i, j, k);
    flops += 1;
    loads += 2;
    if (!first) {
      ak = -0.25 * static_cast<double>(f.wcon(i, j, k));
      bk -= ak;
      dk -= ak * (static_cast<double>(f.u_stage(i, j, k - 1)) - us);
      flops += 5;
      loads += 2;
    }
    if (!last) {
      ck = 0.25 * static_cast<double>(f.wcon(i, j, k + 1));
      bk -= ck;
      dk -= ck * (static_cast<double>(f.u_stage(i, j, k + 1)) - us);
      flops += 5;
      loads += 2;
    }
    a[k] = ak;
    b[k] = bk;
    c[k] = ck;
    d[k] = dk;
  }
  return flops;
}

struct ColumnScratch {
  explicit ColumnScratch(std::size_t depth)
      : a(depth), b(depth), c(depth), d(depth), x(depth), sweep(2 * depth) {}
  std::vector<double> a, b, c, d, x, sweep;
};

void solve_into(const VadvcFields& f, std::size_t i, std::size_t j, ColumnScratch& s,
                Grid3D<float>& out, KernelCounters& counters) {
  std::uint64_t loads = 0;
  counters.flops += assemble_into(f, i, j, s.a.data(), s.b.data(), s.c.data(), s.d.data(), loads);
  KernelCounters solve;
  try {
    thomas_solve(s.a, s.b, s.c, s.d, s.x, s.sweep, &solve);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SingularPivot) throw;
    throw Error(ErrorKind::SingularPivot, std::string(e.what()) + " in column (" +
                                              std::to_string(i) + ", " + std::to_string(j) + ")");
  }
  counters.flops += solve.flops;
  const std::size_t depth = f.dims().depth;
  for (std::size_t k = 0; k < depth; ++k) out(i, j, k) = static_cast<float>(s.x[k]);
  counters.bytes_read += loads * sizeof(float);
  counters.bytes_written += depth * sizeof(float);
}

}  // namespace

VadvcFields make_vadvc_fields(Grid3D<float> u, Grid3D<float> u_stage, Grid3D<float> u_pos,
                              Grid3D<float> wcon, double dtr_inv) {
  if (!(dtr_inv > 0.0) || !std::isfinite(dtr_inv)) {
    throw Error(ErrorKind::InvalidArgument, "dtr_inv must be positive and finite");
  }
  const auto cap = static_cast<float>(kWconCapFraction * dtr_inv);
  for (float& w : wcon.values()) w = std::clamp(w, -cap, cap);
  VadvcFields fields{std::move(u), std::move(u_stage), std::move(u_pos), std::move(wcon),
                     dtr_inv};
  check_vadvc_fields(fields);
  return fields;
}

void check_vadvc_fields(const VadvcFields& f) {
  if (!same_shape(f.u, f.u_stage) || !same_shape(f.u, f.u_pos) || !same_shape(f.u, f.wcon)) {
    throw Error(ErrorKind::DimensionMismatch, "vadvc fields differ in shape");
  }
  if (!(f.dtr_inv > 0.0) || !std::isfinite(f.dtr_inv)) {
    throw Error(ErrorKind::InvalidArgument, "dtr_inv must be positive and finite");
  }
  const double cap = kWconCapFraction * f.dtr_inv;
  for (const float w : f.wcon.values()) {
    if (std::abs(static_cast<double>(w)) > cap * (1.0 + 1e-6)) {
      throw Error(ErrorKind::InvalidArgument, "wcon magnitude exceeds the dominance cap");
    }
  }
}

TridiagonalSystem assemble_column(const VadvcFields& fields, std::size_t i, std::size_t j,
                                  KernelCounters* counters) {
  const std::size_t depth = fields.dims().depth;
  TridiagonalSystem system{std::vector<double>(depth), std::vector<double>(depth),
                           std::vector<double>(depth), std::vector<double>(depth)};
  std::uint64_t loads = 0;
  const std::uint64_t flops =
      assemble_into(fields, i, j, system.sub.data(), system.diag.data(), system.super.data(),
                    system.rhs.data(), loads);
  if (counters) {
    counters->flops += flops;
    counters->bytes_read += loads * sizeof(float);
  }
  return system;
}

std::vector<double> solve_column(const VadvcFields& fields, std::size_t i, std::size_t j) {
  return thomas_solve(assemble_column(fields, i, j));
}

KernelCounters vadvc_column_counters(std::size_t depth) {
  KernelCounters c;
  if (depth == 0) return c;
  if (depth == 1) {
    c.flops = 2;
    c.bytes_read = sizeof(float);
  } else {
    c.flops = 19 * depth - 17;
    c.bytes_read = (6 * depth - 4) * sizeof(float);
  }
  c.bytes_written = depth * sizeof(float);
  return c;
}

Grid3D<float> vadvc_reference(const VadvcFields& fields, KernelCounters* counters) {
  check_vadvc_fields(fields);
  Grid3D<float> out = fields.u;
  ColumnScratch scratch(fields.dims().depth);
  KernelCounters local;
  for (std::size_t i = out.row_begin(); i < out.row_end(); ++i) {
    for (std::size_t j = out.col_begin(); j < out.col_end(); ++j) {
      solve_into(fields, i, j, scratch, out, local);
    }
  }
  if (counters) *counters += local;
  return out;
}

Grid3D<float> vadvc_optimized(const VadvcFields& fields, unsigned workers,
                              KernelCounters* counters) {
  check_vadvc_fields(fields);
  if (workers == 0) throw Error(ErrorKind::InvalidArgument, "workers must be positive");
  Grid3D<float> out = fields.u;

  const std::size_t i0 = out.row_begin();
  const std::size_t rows = out.row_end() - i0;
  const std::size_t nthreads = std::min<std::size_t>(workers, rows);
  std::vector<KernelCounters> partial(nthreads);
  std::exception_ptr failure;
  std::mutex failure_mutex;

  const auto work = [&](std::size_t t) {
    try {
      ColumnScratch scratch(fields.dims().depth);
      const std::size_t begin = i0 + rows * t / nthreads;
      const std::size_t end = i0 + rows * (t + 1) / nthreads;
      for (std::size_t i = begin; i < end; ++i) {
        for (std::size_t j = out.col_begin(); j < out.col_end(); ++j) {
          solve_into(fields, i, j, scratch, out, partial[t]);
        }
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };

  if (nthreads == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t) threads.emplace_back(work, t);
    for (auto& th : threads) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  if (counters) {
    for (const auto& c : partial) *counters += c;
  }
  return out;
}

}  // namespace nmaw::stencil
