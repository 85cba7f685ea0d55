#pragma once

// Independent reference computations for the test suites. None of these call
// into the library's algorithms; they re-derive results from definitions.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

// Maze entry from its four-case definition, 1-based row i in 1..2E+1 and
// column j in 1..m. A query index outside 1..m is an obstacle.
inline int maze_entry(const std::string& ref, const std::string& query, int e, int i, int j) {
  const int m = static_cast<int>(ref.size());
  int q = 0;
  if (i == e + 1) {
    q = j;
  } else if (i >= 1 && i <= e) {
    q = j - i;
  } else {
    q = j + i - e - 1;
  }
  if (q < 1 || q > m) return 1;
  return query[static_cast<std::size_t>(q - 1)] == ref[static_cast<std::size_t>(j - 1)] ? 0 : 1;
}

// Full (m+1) x (n+1) Levenshtein table, unit costs.
inline int levenshtein(const std::string& a, const std::string& b) {
  std::vector<int> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = static_cast<int>(j);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = static_cast<int>(i);
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const int sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({sub, prev[j] + 1, cur[j - 1] + 1});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

// Fewest obstacles over every routing through a 0/1 maze (rows x cols),
// considering every row choice at every checkpoint. A routing picks a row,
// runs along its zeros, and either leaves the maze or pays one obstacle and
// resumes one column later. Results per checkpoint are memoised, which
// keeps the search exhaustive without exponential cost.
inline int min_obstacles_exhaustive(const std::vector<std::vector<int>>& maze) {
  const std::size_t cols = maze.front().size();
  std::vector<int> best(cols + 2, 0);  // best[c]: from checkpoint c; 0 past the end
  for (std::size_t c = cols; c-- > 0;) {
    int b = static_cast<int>(cols) + 1;
    for (const auto& row : maze) {
      std::size_t end = c;
      while (end < cols && row[end] == 0) ++end;
      b = std::min(b, end >= cols ? 0 : 1 + best[end + 1]);
    }
    best[c] = b;
  }
  return best[0];
}

// Every routing's obstacle count, by plain recursion (small mazes only).
inline void all_routing_costs(const std::vector<std::vector<int>>& maze, std::size_t checkpoint,
                              int so_far, std::vector<int>& costs) {
  const std::size_t cols = maze.front().size();
  if (checkpoint >= cols) {
    costs.push_back(so_far);
    return;
  }
  for (const auto& row : maze) {
    std::size_t end = checkpoint;
    while (end < cols && row[end] == 0) ++end;
    if (end >= cols) {
      costs.push_back(so_far);
    } else {
      all_routing_costs(maze, end + 1, so_far + 1, costs);
    }
  }
}

// Dense Gaussian elimination with partial pivoting on the full n x n matrix.
inline std::vector<double> dense_solve(const std::vector<double>& sub,
                                       const std::vector<double>& diag,
                                       const std::vector<double>& super,
                                       const std::vector<double>& rhs) {
  const std::size_t n = diag.size();
  std::vector<std::vector<double>> a(n, std::vector<double>(n + 1, 0.0));
  for (std::size_t r = 0; r < n; ++r) {
    a[r][r] = diag[r];
    if (r > 0) a[r][r - 1] = sub[r];
    if (r + 1 < n) a[r][r + 1] = super[r];
    a[r][n] = rhs[r];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(a[r][c]) > std::abs(a[pivot][c])) pivot = r;
    }
    std::swap(a[c], a[pivot]);
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = a[r][c] / a[c][c];
      for (std::size_t k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<double> x(n);
  for (std::size_t r = n; r-- > 0;) {
    double s = a[r][n];
    for (std::size_t k = r + 1; k < n; ++k) s -= a[r][k] * x[k];
    x[r] = s / a[r][r];
  }
  return x;
}

// Dense residual max_r |sum_c T[r][c] x[c] - d[r]|.
inline double dense_residual(const std::vector<double>& sub, const std::vector<double>& diag,
                             const std::vector<double>& super, const std::vector<double>& rhs,
                             const std::vector<double>& x) {
  const std::size_t n = diag.size();
  double worst = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    double s = diag[r] * x[r];
    if (r > 0) s += sub[r] * x[r - 1];
    if (r + 1 < n) s += super[r] * x[r + 1];
    worst = std::max(worst, std::abs(s - rhs[r]));
  }
  return worst;
}

// Horizontal diffusion at one interior point of a plane stored row-major
// (rows x cols), evaluated straight from the stencil definition.
template <typename T>
T hdiff_point(const std::vector<T>& in, const std::vector<T>& coeff, std::size_t cols,
              std::size_t i, std::size_t j) {
  const auto at = [&](std::size_t r, std::size_t c) { return in[r * cols + c]; };
  const auto lap = [&](std::size_t r, std::size_t c) {
    return T(4) * at(r, c) - (at(r - 1, c) + at(r + 1, c) + at(r, c - 1) + at(r, c + 1));
  };
  const auto flux_x = [&](std::size_t r, std::size_t c) {
    const T f = lap(r + 1, c) - lap(r, c);
    return f * (at(r + 1, c) - at(r, c)) > T(0) ? T(0) : f;
  };
  const auto flux_y = [&](std::size_t r, std::size_t c) {
    const T f = lap(r, c + 1) - lap(r, c);
    return f * (at(r, c + 1) - at(r, c)) > T(0) ? T(0) : f;
  };
  return at(i, j) - coeff[i * cols + j] * (flux_x(i, j) - flux_x(i - 1, j) + flux_y(i, j) -
                                           flux_y(i, j - 1));
}

}  // namespace oracle
