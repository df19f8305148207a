#include "ga/atoms.hpp"

#include <algorithm>

#include "ga/lp.hpp"

namespace ga {

MaximalSet::MaximalSet(std::vector<Vec> chain) : chain_(std::move(chain)) {
  if (chain_.empty()) throw PreconditionError("lexicographic chain must be nonempty");
  const std::size_t n = chain_.front().size();
  if (n == 0) throw PreconditionError("pmf over an empty space");
  for (const auto& p : chain_) {
    if (p.size() != n) throw SpaceMismatch("pmfs in a chain must share one space");
    Rational total = 0;
    for (const auto& q : p) {
      if (sgn(q) < 0) throw PreconditionError("pmf has a negative mass");
      total += q;
    }
    if (total != 1) throw PreconditionError("pmf masses must sum to 1");
  }
  if (rank(chain_) != n) throw PreconditionError("not maximal: chain expectations have a nontrivial common kernel");
}

int lex_sign(const Gamble& f, const std::vector<Vec>& chain) {
  for (const auto& p : chain) {
    const int s = sgn(dot(p, f.values()));
    if (s != 0) return s;
  }
  return 0;
}

bool lex_member(const Gamble& f, const MaximalSet& m) {
  require_same_space(f.space(), m.space(), "lex_member");
  return lex_sign(f, m.chain()) > 0;
}

bool dominates(const MaximalSet& m, const PhiElement& p) {
  require_same_space(m.space(), p.space(), "dominates");
  if (p.is_top()) throw PreconditionError("dominates: Top is dominated by no maximal set");
  const auto& gens = p.cone().generators();
  return std::all_of(gens.begin(), gens.end(), [&](const Gamble& g) { return lex_member(g, m); });
}

namespace {

void require_separable(const PhiElement& p, const Gamble& f) {
  require_same_space(p.space(), f.space(), "separation");
  if (p.is_top()) throw PreconditionError("separation: input must be coherent");
  if (f.is_zero()) throw PreconditionError("separation: target gamble is zero");
  if (phi_member(f, p)) throw PreconditionError("separation: target gamble is already desirable");
}

// Lexicographically smallest ℓ >= 0 with ℓ.g >= 0 for g in `keep_nonneg` and
// ℓ.pin = target, normalized to a pmf. nullopt if infeasible.
std::optional<Vec> separating_pmf(std::size_t n, const std::vector<Gamble>& keep_nonneg, const Vec& pin,
                                  const Rational& target) {
  lp::System sys;
  sys.cols = n + keep_nonneg.size();
  for (std::size_t j = 0; j < keep_nonneg.size(); ++j) {
    Vec row(sys.cols, Rational(0));
    for (std::size_t w = 0; w < n; ++w) row[w] = keep_nonneg[j][w];
    row[n + j] = -1;
    sys.rows.push_back(std::move(row));
    sys.rhs.push_back(0);
  }
  Vec row(sys.cols, Rational(0));
  for (std::size_t w = 0; w < n; ++w) row[w] = pin[w];
  sys.rows.push_back(std::move(row));
  sys.rhs.push_back(target);
  auto sol = lp::lexmin(std::move(sys), n);
  if (!sol) return std::nullopt;
  Vec ell(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(n));
  Rational total = 0;
  for (const auto& q : ell) total += q;
  for (auto& q : ell) q /= total;
  return ell;
}

}  // namespace

PhiElement separating_superset(const PhiElement& p, const Gamble& f) {
  require_separable(p, f);
  auto gens = p.cone().generators();
  gens.push_back(-f);
  auto out = closure(p.space(), gens);
#ifndef NDEBUG
  if (out.is_top() || phi_member(f, out)) throw ConsistencyError("separating_superset: separation failed");
#endif
  return out;
}

MaximalSet extend_to_maximal(const PhiElement& p, const Gamble& f) {
  require_separable(p, f);
  const std::size_t n = p.space().size();
  // f lies outside the closed cone, so some functional in its dual is
  // negative on f. The dual sits in the orthant because the cone holds L⁺.
  auto first = separating_pmf(n, p.cone().generators(), f.values(), Rational(-1));
  if (!first) throw ConsistencyError("extend_to_maximal: no separating functional for a non-member");
  std::vector<Vec> chain{*first};

  // Generators not yet decided stay in the kernel of the chain so far; each
  // new functional stays nonnegative on them and breaks the kernel further.
  while (rank(chain) < n) {
    std::vector<Gamble> active;
    for (const auto& g : p.cone().generators()) {
      if (lex_sign(g, chain) == 0) active.push_back(g);
    }
    std::optional<Vec> next;
    for (const auto& h : kernel_basis(chain, n)) {
      next = separating_pmf(n, active, h, Rational(1));
      if (!next) next = separating_pmf(n, active, h, Rational(-1));
      if (next) break;
    }
    if (!next) throw ConsistencyError("extend_to_maximal: cannot extend the chain");
    chain.push_back(std::move(*next));
  }
  MaximalSet m(std::move(chain));
#ifndef NDEBUG
  if (!dominates(m, p) || lex_member(f, m)) throw ConsistencyError("extend_to_maximal: postcondition failed");
#endif
  return m;
}

Gamble blockwise_min(const Gamble& g, const Partition& x) {
  require_same_space(g.space(), x.space(), "blockwise_min");
  Vec mins;
  for (const auto& block : x.blocks()) {
    Rational m = g[block.front()];
    for (World w : block) m = std::min(m, g[w]);
    mins.push_back(m);
  }
  return Gamble::lift(x, mins);
}

bool local_atom_member(const Gamble& g, const Partition& x, const MaximalSet& m) {
  require_same_space(g.space(), x.space(), "local_atom_member");
  require_same_space(g.space(), m.space(), "local_atom_member");
  if (g.is_positive()) return true;
  const Gamble low = blockwise_min(g, x);
  if (low.is_zero()) return false;
  std::vector<Vec> marginals;
  for (const auto& p : m.chain()) {
    Vec q(x.block_count(), Rational(0));
    for (World w = 0; w < p.size(); ++w) q[x.block_of(w)] += p[w];
    marginals.push_back(std::move(q));
  }
  Vec low_blocks;
  for (const auto& block : x.blocks()) low_blocks.push_back(low[block.front()]);
  for (const auto& q : marginals) {
    const int s = sgn(dot(q, low_blocks));
    if (s != 0) return s > 0;
  }
  return false;
}

}  // namespace ga

namespace ga {

using nlohmann::json;

Report atoms_suite(std::span<const MaximalSet> ms, std::span<const PhiElement> corpus,
                   std::span<const Gamble> gambles, std::span<const Partition> questions) {
  Report report;
  for (std::size_t mi = 0; mi < ms.size(); ++mi) {
    const auto& m = ms[mi];
    const auto space = m.space();
    bool units = true;
    for (World u = 0; u < space.size(); ++u) units = units && lex_member(Gamble::unit(space, u), m);
    report.check("atoms.d1", units, [&] { return json{{"maximal", mi}}; });
    report.check("atoms.d2", !lex_member(Gamble::zero(space), m), [&] { return json{{"maximal", mi}}; });
    for (std::size_t gi = 0; gi < gambles.size(); ++gi) {
      const auto& f = gambles[gi];
      if (f.space() != space || f.is_zero()) continue;
      auto w = [&] { return json{{"maximal", mi}, {"gamble", gi}}; };
      report.check("atoms.trichotomy", lex_member(f, m) != lex_member(-f, m), w);
      const auto& g = gambles[(gi + 1) % gambles.size()];
      if (g.space() == space && lex_member(f, m) && lex_member(g, m)) {
        report.check("atoms.d3", lex_member(f.scaled(Rational(5, 3)), m), w);
        report.check("atoms.d4", lex_member(f + g, m), w);
      }
    }
  }

  for (std::size_t pi = 0; pi < corpus.size(); ++pi) {
    const auto& p = corpus[pi];
    if (p.is_top()) continue;
    for (std::size_t mi = 0; mi < ms.size(); ++mi) {
      const auto& m = ms[mi];
      if (m.space() != p.space()) continue;
      auto w = [&] { return json{{"element", pi}, {"maximal", mi}}; };
      if (dominates(m, p)) {
        report.check("atoms.dichotomy", true, w);
        continue;
      }
      bool witnessed = false;
      for (const auto& g : p.cone().generators()) {
        if (lex_member(g, m)) continue;
        const Gamble neg = -g;
        witnessed = lex_member(neg, m) && combine(p, closure(p.space(), std::span(&neg, 1))).is_top();
        break;
      }
      report.check("atoms.dichotomy", witnessed, w);
    }

    for (std::size_t gi = 0; gi < gambles.size(); ++gi) {
      const auto& f = gambles[gi];
      if (f.space() != p.space() || f.is_zero() || phi_member(f, p)) continue;
      auto w = [&] { return json{{"element", pi}, {"gamble", gi}}; };
      const auto sup = separating_superset(p, f);
      report.check("atoms.separating_superset", !sup.is_top() && phi_leq(p, sup) && !phi_member(f, sup), w);
      const auto m = extend_to_maximal(p, f);
      report.check("atoms.separation", dominates(m, p) && !lex_member(f, m), w);
    }

    for (std::size_t xi = 0; xi < questions.size(); ++xi) {
      const auto& x = questions[xi];
      if (x.space() != p.space()) continue;
      const auto local = extract(x, p);
      for (std::size_t mi = 0; mi < ms.size(); ++mi) {
        const auto& m = ms[mi];
        if (m.space() != p.space()) continue;
        auto w = [&] { return json{{"element", pi}, {"question", xi}, {"maximal", mi}}; };
        bool ok = true;
        for (const auto& g : local.cone().generators()) {
          if (local_atom_member(g, x, m)) continue;
          const Gamble neg = -g;
          ok = is_measurable(g, x) && local_atom_member(neg, x, m) &&
               combine(local, closure(p.space(), std::span(&neg, 1))).is_top();
          break;
        }
        report.check("atoms.local", ok, w);
      }
    }
  }
  return report;
}

}  // namespace ga
