#include "ga/lp.hpp"

#include <algorithm>
#include <cstddef>
#include <span>

namespace ga::lp {

namespace {

class Tableau {
 public:
  // Builds the phase-one tableau with one artificial per row. A column that
  // is already a unit vector replaces the artificial of its row.
  explicit Tableau(const System& sys) : m_(sys.rows.size()), n_(sys.cols) {
    width_ = n_ + m_ + 1;
    t_.assign(m_, Vec(width_, Rational(0)));
    basis_.resize(m_);
    for (std::size_t r = 0; r < m_; ++r) {
      const bool flip = sgn(sys.rhs[r]) < 0;
      for (std::size_t c = 0; c < n_; ++c) t_[r][c] = flip ? Rational(-sys.rows[r][c]) : sys.rows[r][c];
      t_[r][n_ + r] = 1;
      t_[r][width_ - 1] = flip ? Rational(-sys.rhs[r]) : sys.rhs[r];
      basis_[r] = n_ + r;
    }
    for (std::size_t c = 0; c < n_; ++c) {
      std::size_t row = m_;
      bool unit = true;
      for (std::size_t r = 0; r < m_ && unit; ++r) {
        if (sgn(t_[r][c]) == 0) continue;
        if (t_[r][c] != 1 || row != m_) unit = false;
        row = r;
      }
      if (unit && row != m_ && basis_[row] >= n_) basis_[row] = c;
    }
  }

  // Phase one. Returns false when infeasible. On success all artificials
  // have left the basis and redundant rows are dropped.
  bool make_feasible() {
    Vec cost(width_ - 1, Rational(0));
    for (std::size_t r = 0; r < m_; ++r) cost[n_ + r] = 1;
    // Artificials never re-enter.
    if (!optimize(cost, n_)) throw ConsistencyError("phase one cannot be unbounded");
    Rational value = 0;
    for (std::size_t r = 0; r < m_; ++r) value += cost[basis_[r]] * t_[r][width_ - 1];
    if (sgn(value) != 0) return false;
    for (std::size_t r = 0; r < m_;) {
      if (basis_[r] < n_) {
        ++r;
        continue;
      }
      std::size_t c = 0;
      while (c < n_ && sgn(t_[r][c]) == 0) ++c;
      if (c == n_) {
        t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
        --m_;
        continue;
      }
      pivot(r, c);
      ++r;
    }
    return true;
  }

  // Minimizes cost over columns [0, limit). Returns false if unbounded.
  // Columns with nonzero reduced cost under any of `locked` stay out, which
  // keeps earlier objectives at their optimum.
  bool optimize(const Vec& cost, std::size_t limit, std::span<const Vec> locked = {}) {
    while (true) {
      std::size_t enter = limit;
      for (std::size_t c = 0; c < limit && enter == limit; ++c) {
        if (is_basic(c)) continue;
        if (std::any_of(locked.begin(), locked.end(), [&](const Vec& l) { return sgn(reduced_cost(l, c)) != 0; })) continue;
        if (sgn(reduced_cost(cost, c)) < 0) enter = c;
      }
      if (enter == limit) return true;
      std::size_t leave = m_;
      Rational best;
      for (std::size_t r = 0; r < m_; ++r) {
        if (sgn(t_[r][enter]) <= 0) continue;
        Rational ratio = t_[r][width_ - 1] / t_[r][enter];
        if (leave == m_ || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == m_) return false;
      pivot(leave, enter);
    }
  }

  Vec solution() const {
    Vec x(n_, Rational(0));
    for (std::size_t r = 0; r < m_; ++r) {
      if (basis_[r] < n_) x[basis_[r]] = t_[r][width_ - 1];
    }
    return x;
  }

  std::size_t columns() const { return n_; }

 private:
  Rational reduced_cost(const Vec& cost, std::size_t c) const {
    Rational reduced = cost[c];
    for (std::size_t r = 0; r < m_; ++r) {
      if (sgn(t_[r][c]) != 0 && sgn(cost[basis_[r]]) != 0) reduced -= cost[basis_[r]] * t_[r][c];
    }
    return reduced;
  }

  bool is_basic(std::size_t c) const {
    for (auto b : basis_) {
      if (b == c) return true;
    }
    return false;
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rational inv = 1 / t_[row][col];
    for (auto& x : t_[row]) {
      if (sgn(x) != 0) x *= inv;
    }
    for (std::size_t r = 0; r < m_; ++r) {
      if (r == row || sgn(t_[r][col]) == 0) continue;
      const Rational f = t_[r][col];
      for (std::size_t c = 0; c < width_; ++c) {
        if (sgn(t_[row][c]) != 0) t_[r][c] -= f * t_[row][c];
      }
    }
    basis_[row] = col;
  }

  std::size_t m_;
  std::size_t n_;
  std::size_t width_;
  std::vector<Vec> t_;
  std::vector<std::size_t> basis_;
};

}  // namespace

std::optional<Vec> feasible_point(const System& sys) {
  Tableau t(sys);
  if (!t.make_feasible()) return std::nullopt;
  return t.solution();
}

std::optional<Vec> minimize(const System& sys, const Vec& cost) {
  Tableau t(sys);
  if (!t.make_feasible()) return std::nullopt;
  Vec full(sys.cols + sys.rows.size(), Rational(0));
  for (std::size_t c = 0; c < sys.cols; ++c) full[c] = cost[c];
  if (!t.optimize(full, sys.cols)) throw ConsistencyError("minimize: objective unbounded below");
  return t.solution();
}

std::optional<Vec> lex_minimize(const System& sys, std::span<const Vec> costs) {
  Tableau t(sys);
  if (!t.make_feasible()) return std::nullopt;
  std::vector<Vec> full;
  for (const auto& cost : costs) {
    Vec f(sys.cols + sys.rows.size(), Rational(0));
    for (std::size_t c = 0; c < sys.cols; ++c) f[c] = cost[c];
    if (!t.optimize(f, sys.cols, full)) throw ConsistencyError("lex_minimize: objective unbounded below");
    full.push_back(std::move(f));
  }
  return t.solution();
}

std::optional<Vec> lexmin(System sys, std::size_t count) {
  std::optional<Vec> x;
  for (std::size_t i = 0; i < count; ++i) {
    Vec cost(sys.cols, Rational(0));
    cost[i] = 1;
    x = minimize(sys, cost);
    if (!x) return std::nullopt;
    Vec row(sys.cols, Rational(0));
    row[i] = 1;
    sys.rows.push_back(std::move(row));
    sys.rhs.push_back((*x)[i]);
  }
  if (!x) x = feasible_point(sys);
  return x;
}

}  // namespace ga::lp
