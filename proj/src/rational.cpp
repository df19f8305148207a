#include "ga/rational.hpp"

#include <algorithm>

namespace ga {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!valid_int(num, true)) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  std::string num_str(num);
  if (!num_str.empty() && num_str[0] == '+') num_str.erase(0, 1);
  if (slash == std::string_view::npos) return Rational(mpz_class(num_str));
  const std::string_view den = text.substr(slash + 1);
  if (!valid_int(den, false)) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  mpz_class d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational q(mpz_class(num_str), d);
  q.canonicalize();
  return q;
}

Rational dot(const Vec& a, const Vec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  }
  return s;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Vec primitive(const Vec& v) {
  mpz_class lcm = 1;
  for (const auto& q : v) {
    if (q.get_den() != 1) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  }
  mpz_class g = 0;
  for (const auto& q : v) {
    if (sgn(q) == 0) continue;
    if (lcm == 1) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num_mpz_t());
      if (g == 1) return v;
    } else {
      const mpz_class num = q.get_num() * (lcm / q.get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    }
  }
  if (g == 0) return v;
  Vec out;
  out.reserve(v.size());
  for (const auto& q : v) out.emplace_back(mpz_class(q.get_num() * (lcm / q.get_den()) / g));
  return out;
}

Vec primitive_line(const Vec& v) {
  Vec out = primitive(v);
  for (const auto& q : out) {
    if (sgn(q) == 0) continue;
    if (sgn(q) < 0) {
      for (auto& r : out) r = -r;
    }
    break;
  }
  return out;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<Vec>& rows, std::size_t dim) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < dim && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || sgn(rows[i][c]) == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = c; j < dim; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

}  // namespace

std::size_t rank(std::vector<Vec> rows) {
  if (rows.empty()) return 0;
  const std::size_t dim = rows.front().size();
  return rref(rows, dim).size();
}

std::vector<Vec> kernel_basis(std::vector<Vec> rows, std::size_t dim) {
  const auto pivots = rref(rows, dim);
  std::vector<bool> is_pivot(dim, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < dim; ++free) {
    if (is_pivot[free]) continue;
    Vec v(dim, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][free];
    basis.push_back(primitive(v));
  }
  return basis;
}

}  // namespace ga
