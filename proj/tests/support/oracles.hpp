#pragma once

// Independent reference computations used to freeze and cross-check
// expected values. Nothing here calls into the solver, the spatial grid or
// the union-find used by the library.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <deque>
#include <limits>
#include <optional>
#include <vector>

namespace sdn::oracle {

struct Pt {
  double col, row;
  int y;  // +1 / -1
};

inline double d2(const Pt& a, const Pt& b) {
  return (a.col - b.col) * (a.col - b.col) + (a.row - b.row) * (a.row - b.row);
}

// O(n^2) scan for each point's squared distance to the closest point of
// the other class.
inline std::vector<double> nearest_opposite_d2(const std::vector<Pt>& pts) {
  std::vector<double> out(pts.size(), std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (pts[i].y != pts[j].y) out[i] = std::min(out[i], d2(pts[i], pts[j]));
    }
  }
  return out;
}

inline std::vector<double> sigmas(const std::vector<Pt>& pts, double T, double safety) {
  auto d = nearest_opposite_d2(pts);
  for (auto& v : d) v = safety * v / std::log(1.0 / T);
  return d;
}

inline std::vector<std::vector<double>> gram(const std::vector<Pt>& pts, const std::vector<double>& s) {
  const std::size_t n = pts.size();
  std::vector<std::vector<double>> q(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      q[i][j] = pts[i].y * pts[j].y * std::exp(-d2(pts[i], pts[j]) / std::min(s[i], s[j]));
    }
  }
  return q;
}

inline double objective(const std::vector<std::vector<double>>& q, const std::vector<double>& a) {
  double lin = 0.0, quad = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    lin += a[i];
    for (std::size_t j = 0; j < a.size(); ++j) quad += a[i] * a[j] * q[i][j];
  }
  return lin - 0.5 * quad;
}

struct Optimum {
  double value = -std::numeric_limits<double>::infinity();
  std::vector<double> alpha;
};

// Grid search: alpha_0..alpha_{n-2} on a uniform grid over [0, C], the last
// coordinate fixed by sum alpha y = 0 and rejected when outside the box.
inline Optimum grid_search(const std::vector<Pt>& pts, const std::vector<double>& s, double C, double step) {
  const auto q = gram(pts, s);
  const std::size_t n = pts.size();
  const long ticks = static_cast<long>(std::floor(C / step + 1e-9));
  Optimum best;
  std::vector<double> a(n, 0.0);
  std::vector<long> idx(n - 1, 0);
  while (true) {
    double balance = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      a[i] = double(idx[i]) * step;
      balance += a[i] * pts[i].y;
    }
    a[n - 1] = -balance * pts[n - 1].y;
    if (a[n - 1] >= 0.0 && a[n - 1] <= C) {
      const double v = objective(q, a);
      if (v > best.value) best = {v, a};
    }
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] > ticks) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return best;
}

// Solves m x = rhs in place by Gaussian elimination with partial pivoting.
inline std::optional<std::vector<double>> solve(std::vector<std::vector<double>> m, std::vector<double> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(m[r][c]) > std::abs(m[p][c])) p = r;
    }
    if (std::abs(m[p][c]) < 1e-12) return std::nullopt;
    std::swap(m[p], m[c]);
    std::swap(rhs[p], rhs[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const double f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
      rhs[r] -= f * rhs[c];
    }
  }
  for (std::size_t c = 0; c < n; ++c) rhs[c] /= m[c][c];
  return rhs;
}

// Exact maximum by enumerating every face of the box (each alpha at 0, at C
// or free) and solving the equality-constrained stationarity system on the
// free coordinates. 3^n faces; fine for n <= 8.
inline Optimum active_set_enumeration(const std::vector<Pt>& pts, const std::vector<double>& s, double C) {
  const auto q = gram(pts, s);
  const std::size_t n = pts.size();
  std::size_t faces = 1;
  for (std::size_t i = 0; i < n; ++i) faces *= 3;
  Optimum best;
  for (std::size_t code = 0; code < faces; ++code) {
    std::vector<int> state(n);
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i, c /= 3) state[i] = int(c % 3);  // 0: lower, 1: upper, 2: free

    std::vector<double> a(n, 0.0);
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < n; ++i) {
      if (state[i] == 1) a[i] = C;
      if (state[i] == 2) free.push_back(i);
    }
    double fixed_balance = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (state[i] != 2) fixed_balance += a[i] * pts[i].y;
    }

    if (free.empty()) {
      if (std::abs(fixed_balance) > 1e-12) continue;
    } else {
      // [Q_FF  y_F][a_F]   [1 - Q_F,fixed a_fixed]
      // [y_F^T  0 ][ nu] = [-fixed_balance       ]
      const std::size_t m = free.size();
      std::vector<std::vector<double>> sys(m + 1, std::vector<double>(m + 1, 0.0));
      std::vector<double> rhs(m + 1, 0.0);
      for (std::size_t r = 0; r < m; ++r) {
        const std::size_t i = free[r];
        for (std::size_t k = 0; k < m; ++k) sys[r][k] = q[i][free[k]];
        sys[r][m] = pts[i].y;
        sys[m][r] = pts[i].y;
        rhs[r] = 1.0;
        for (std::size_t j = 0; j < n; ++j) {
          if (state[j] != 2) rhs[r] -= q[i][j] * a[j];
        }
      }
      rhs[m] = -fixed_balance;
      const auto x = solve(sys, rhs);
      if (!x) continue;
      bool inside = true;
      for (std::size_t r = 0; r < m; ++r) {
        if ((*x)[r] < -1e-9 || (*x)[r] > C + 1e-9) inside = false;
        a[free[r]] = std::clamp((*x)[r], 0.0, C);
      }
      if (!inside) continue;
    }
    const double v = objective(q, a);
    if (v > best.value) best = {v, a};
  }
  return best;
}

// Connected components of "circles i and j intersect" by breadth-first
// search. Component labels follow the smallest member index.
inline std::vector<std::size_t> overlap_components(const std::vector<double>& col, const std::vector<double>& row,
                                                   const std::vector<double>& radius) {
  const std::size_t n = col.size();
  const std::size_t none = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> label(n, none);
  std::size_t next = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (label[s] != none) continue;
    std::deque<std::size_t> queue{s};
    label[s] = next;
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < n; ++j) {
        if (label[j] != none) continue;
        const double dc = col[i] - col[j], dr = row[i] - row[j];
        const double reach = radius[i] + radius[j];
        if (dc * dc + dr * dr <= reach * reach) {
          label[j] = next;
          queue.push_back(j);
        }
      }
    }
    ++next;
  }
  return label;
}

}  // namespace sdn::oracle
