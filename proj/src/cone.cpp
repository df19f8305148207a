#include "ga/cone.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <optional>
#include <set>

#include "ga/lp.hpp"

namespace ga {

ConeV::ConeV(PossibilitySpace space, std::vector<Gamble> generators) : space_(space) {
  std::set<Vec> seen;
  for (auto& g : generators) {
    require_same_space(g.space(), space, "ConeV");
    if (g.is_zero()) continue;
    Vec p = primitive(g.values());
    if (seen.insert(p).second) generators_.emplace_back(std::move(p));
  }
}

ConeV ConeV::orthant(PossibilitySpace space) {
  std::vector<Gamble> gens;
  for (World w = 0; w < space.size(); ++w) gens.push_back(Gamble::unit(space, w));
  return ConeV(space, std::move(gens));
}

bool ConeH::contains(const Gamble& f) const {
  require_same_space(f.space(), space, "ConeH::contains");
  return std::all_of(inequalities.begin(), inequalities.end(),
                     [&](const Vec& a) { return sgn(dot(a, f.values())) >= 0; }) &&
         std::all_of(equalities.begin(), equalities.end(),
                     [&](const Vec& b) { return sgn(dot(b, f.values())) == 0; });
}

namespace dd {

namespace {

using Bits = boost::dynamic_bitset<>;

struct Ray {
  Vec v;
  Bits tight;
};

// Move v along `line` until it lies in the hyperplane a.x = 0.
void slide(Vec& v, const Vec& line, const Rational& a_line, const Rational& a_v) {
  const Rational t = a_v / a_line;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(line[i]) != 0) v[i] -= t * line[i];
  }
  v = primitive(v);
}

}  // namespace

Generators enumerate(std::size_t dim, std::span<const Vec> inequalities, std::span<const Vec> equalities) {
  const std::size_t n_ineq = inequalities.size();
  std::vector<Vec> lines;
  for (std::size_t i = 0; i < dim; ++i) {
    Vec e(dim, Rational(0));
    e[i] = 1;
    lines.push_back(std::move(e));
  }
  std::vector<Ray> rays;
  // Equalities that cut a line lower the dimension of the pointed part.
  std::size_t cut = 0;

  auto add_constraint = [&](const Vec& a, bool equality, std::size_t bit) {
    // A line crossing the hyperplane: it absorbs the constraint without any
    // adjacency work.
    std::size_t pick = lines.size();
    Rational a_pick;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      a_pick = dot(a, lines[i]);
      if (sgn(a_pick) != 0) {
        pick = i;
        break;
      }
    }
    if (pick != lines.size()) {
      Vec l = lines[pick];
      if (sgn(a_pick) < 0) {
        for (auto& x : l) x = -x;
        a_pick = -a_pick;
      }
      lines.erase(lines.begin() + static_cast<std::ptrdiff_t>(pick));
      if (equality) ++cut;
      for (auto& other : lines) {
        const Rational t = dot(a, other);
        if (sgn(t) != 0) slide(other, l, a_pick, t);
      }
      for (auto& r : rays) {
        const Rational t = dot(a, r.v);
        if (sgn(t) != 0) slide(r.v, l, a_pick, t);
        if (!equality) r.tight.set(bit);
      }
      if (!equality) {
        Bits tight(n_ineq);
        for (std::size_t b = 0; b < bit; ++b) tight.set(b);
        rays.push_back({primitive(l), std::move(tight)});
      }
      return;
    }

    std::vector<std::size_t> pos, neg, zero;
    std::vector<Rational> value(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
      value[i] = dot(a, rays[i].v);
      const int s = sgn(value[i]);
      (s > 0 ? pos : s < 0 ? neg : zero).push_back(i);
    }
    // Adjacent rays share at least d - 2 tight constraints.
    const std::size_t pointed = dim - cut - lines.size();
    const std::size_t need = pointed >= 2 ? pointed - 2 : 0;
    std::vector<Ray> next;
    auto keep = [&](std::size_t i, bool on_plane) {
      Ray r = rays[i];
      if (on_plane && !equality) r.tight.set(bit);
      next.push_back(std::move(r));
    };
    if (!equality) {
      for (auto i : pos) keep(i, false);
    }
    for (auto i : zero) keep(i, true);
    for (auto p : pos) {
      for (auto q : neg) {
        const Bits common = rays[p].tight & rays[q].tight;
        if (common.count() < need) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r != p && r != q && common.is_subset_of(rays[r].tight)) adjacent = false;
        }
        if (!adjacent) continue;
        Vec v(dim);
        const Rational& vp = value[p];
        const Rational mq = -value[q];
        for (std::size_t i = 0; i < dim; ++i) v[i] = vp * rays[q].v[i] + mq * rays[p].v[i];
        Bits tight = common;
        if (!equality) tight.set(bit);
        next.push_back({primitive(v), std::move(tight)});
      }
    }
    rays = std::move(next);
  };

  for (const auto& e : equalities) add_constraint(e, true, 0);
  for (std::size_t i = 0; i < n_ineq; ++i) add_constraint(inequalities[i], false, i);

  Generators out;
  std::set<Vec> unique_rays;
  for (auto& r : rays) {
    if (!is_zero(r.v)) unique_rays.insert(std::move(r.v));
  }
  out.rays.assign(unique_rays.begin(), unique_rays.end());
  for (auto& l : lines) out.lines.push_back(primitive_line(l));
  std::sort(out.lines.begin(), out.lines.end());
  return out;
}

}  // namespace dd

ConeH dd_convert(const ConeV& c) {
  const std::size_t n = c.space().size();
  std::vector<Vec> rows;
  for (const auto& g : c.generators()) rows.push_back(g.values());
  auto dual = dd::enumerate(n, rows, {});
  return ConeH{c.space(), std::move(dual.rays), std::move(dual.lines)};
}

ConeV dd_convert_back(const ConeH& h) {
  auto gens = dd::enumerate(h.space.size(), h.inequalities, h.equalities);
  std::vector<Gamble> out;
  for (auto& r : gens.rays) out.emplace_back(std::move(r));
  for (auto& l : gens.lines) {
    out.emplace_back(l);
    for (auto& x : l) x = -x;
    out.emplace_back(std::move(l));
  }
  return ConeV(h.space, std::move(out));
}

bool cone_member(const Gamble& f, const ConeV& c) {
  require_same_space(f.space(), c.space(), "cone_member");
  return cone_member(f, c.generators());
}

bool cone_member(const Gamble& f, std::span<const Gamble> gens) {
  if (f.is_zero()) return true;
  for (const auto& g : gens) require_same_space(f.space(), g.space(), "cone_member");
  if (gens.empty()) return false;
  lp::System sys;
  sys.cols = gens.size();
  for (World w = 0; w < f.size(); ++w) {
    Vec row(gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) row[j] = gens[j][w];
    sys.rows.push_back(std::move(row));
    sys.rhs.push_back(f[w]);
  }
  return lp::feasible_point(sys).has_value();
}

bool zero_nontrivial(const ConeV& c) {
  const auto& gens = c.generators();
  if (gens.empty()) return false;
  lp::System sys;
  sys.cols = gens.size();
  for (World w = 0; w < c.space().size(); ++w) {
    Vec row(gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) row[j] = gens[j][w];
    sys.rows.push_back(std::move(row));
    sys.rhs.push_back(0);
  }
  // Weights on nonnegative generators alone never cancel, so normalizing
  // over the others loses nothing.
  Vec sum(gens.size(), Rational(0));
  bool any = false;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (std::any_of(gens[j].values().begin(), gens[j].values().end(), [](const Rational& q) { return sgn(q) < 0; })) {
      sum[j] = 1;
      any = true;
    }
  }
  if (!any) return false;
  sys.rows.push_back(std::move(sum));
  sys.rhs.push_back(1);
  return lp::feasible_point(sys).has_value();
}

ConeV cone_intersect(const ConeV& a, const ConeV& b) {
  require_same_space(a.space(), b.space(), "cone_intersect");
  ConeH ha = dd_convert(a);
  ConeH hb = dd_convert(b);
  ha.inequalities.insert(ha.inequalities.end(), hb.inequalities.begin(), hb.inequalities.end());
  ha.equalities.insert(ha.equalities.end(), hb.equalities.begin(), hb.equalities.end());
  return dd_convert_back(ha);
}

namespace {

// Inner approximation from the block indicators. Each facet of the current
// cone is either valid for the trace or cut by it; in the second case the
// lexicographic minimum over the normalized section is a new extreme ray.
// nullopt when c misses a unit gamble or contains a line.
std::optional<ConeV> try_orthant_trace(const ConeV& c, const MeasurableSubspace& m) {
  const auto& x = m.partition;
  const std::size_t n = c.space().size();
  const std::size_t k = x.block_count();

  std::vector<bool> has_unit(n, false);
  std::vector<const Gamble*> others;
  for (const auto& g : c.generators()) {
    std::size_t nonzero = 0;
    World at = 0;
    for (World w = 0; w < n; ++w) {
      if (sgn(g[w]) != 0) {
        ++nonzero;
        at = w;
      }
    }
    if (nonzero == 1 && sgn(g[at]) > 0) {
      has_unit[at] = true;
    } else {
      others.push_back(&g);
    }
  }
  if (std::find(has_unit.begin(), has_unit.end(), false) != has_unit.end()) return std::nullopt;
  const std::size_t mo = others.size();

  // b.g >= 1 on every generator, b = 1 + s with s >= 0.
  lp::System norm;
  norm.cols = n + mo;
  for (std::size_t j = 0; j < mo; ++j) {
    Vec row(norm.cols, Rational(0));
    Rational rhs = 1;
    for (World w = 0; w < n; ++w) {
      row[w] = (*others[j])[w];
      rhs -= (*others[j])[w];
    }
    row[n + j] = -1;
    norm.rows.push_back(std::move(row));
    norm.rhs.push_back(std::move(rhs));
  }
  const auto s = lp::feasible_point(norm);
  if (!s) return std::nullopt;

  std::vector<Gamble> out;
  for (std::size_t b = 0; b < k; ++b) {
    Vec e(k, Rational(0));
    e[b] = 1;
    out.push_back(Gamble::lift(x, e));
  }
  if (std::all_of(others.begin(), others.end(), [&](const Gamble* g) { return is_measurable(*g, x); })) {
    for (const auto* g : others) out.push_back(*g);
    return ConeV(c.space(), std::move(out));
  }

  // Variables: multipliers of the other generators, then of the units. The
  // value on block b is read at its first world.
  const std::size_t cols = mo + n;
  const auto& blocks = x.blocks();
  auto value_at = [&](World w) {
    Vec row(cols, Rational(0));
    for (std::size_t j = 0; j < mo; ++j) row[j] = (*others[j])[w];
    row[mo + w] = 1;
    return row;
  };
  std::vector<Vec> y_of(k);
  lp::System sys;
  sys.cols = cols;
  Vec normal(cols, Rational(0));
  for (std::size_t b = 0; b < k; ++b) {
    y_of[b] = value_at(blocks[b].front());
    Rational weight = 0;
    for (World w : blocks[b]) weight += 1 + (*s)[w];
    for (std::size_t i = 0; i < cols; ++i) normal[i] += weight * y_of[b][i];
    for (std::size_t i = 1; i < blocks[b].size(); ++i) {
      Vec row = value_at(blocks[b][i]);
      for (std::size_t j = 0; j < cols; ++j) row[j] -= y_of[b][j];
      sys.rows.push_back(std::move(row));
      sys.rhs.push_back(0);
    }
  }
  sys.rows.push_back(std::move(normal));
  sys.rhs.push_back(1);

  std::set<Vec> rays;
  for (std::size_t b = 0; b < k; ++b) {
    Vec e(k, Rational(0));
    e[b] = 1;
    rays.insert(std::move(e));
  }
  std::set<Vec> valid;
  for (;;) {
    const std::vector<Vec> current(rays.begin(), rays.end());
    const auto facets = dd::enumerate(k, current, {});
    if (!facets.lines.empty()) throw ConsistencyError("orthant_trace: inner cone is not full-dimensional");
    bool grew = false;
    for (const auto& a : facets.rays) {
      if (valid.contains(a)) continue;
      std::vector<Vec> costs{Vec(cols, Rational(0))};
      for (std::size_t b = 0; b < k; ++b) {
        for (std::size_t i = 0; i < cols; ++i) costs[0][i] += a[b] * y_of[b][i];
      }
      const auto lowest = lp::minimize(sys, costs[0]);
      if (!lowest) throw ConsistencyError("orthant_trace: normalized section is empty");
      if (sgn(dot(costs[0], *lowest)) >= 0) {
        valid.insert(a);
        continue;
      }
      costs.insert(costs.end(), y_of.begin(), y_of.end());
      const auto vertex = lp::lex_minimize(sys, costs);
      Vec y(k);
      for (std::size_t b = 0; b < k; ++b) y[b] = dot(y_of[b], *vertex);
      if (rays.insert(primitive(y)).second) grew = true;
    }
    if (!grew) break;
  }
  out.clear();
  for (const auto& r : rays) out.push_back(Gamble::lift(x, r));
  return ConeV(c.space(), std::move(out));
}

}  // namespace

ConeV orthant_trace(const ConeV& c, const MeasurableSubspace& m) {
  require_same_space(c.space(), m.partition.space(), "orthant_trace");
  auto t = try_orthant_trace(c, m);
  if (!t) throw PreconditionError("orthant_trace: cone misses a unit gamble or contains a line");
  return std::move(*t);
}

// c ∩ L_x is the image of P = {(y, λ) : lift(y) = Σ λ_j g_j, λ >= 0} under
// (y, λ) ↦ y, with y the per-block values. P is pointed, so its extreme rays
// project onto a generating set of the image. Unit generators e_w are folded
// in as slack: row w becomes an inequality instead of carrying a multiplier.
ConeV intersect_subspace(const ConeV& c, const MeasurableSubspace& m, Pruning pruning) {
  require_same_space(c.space(), m.partition.space(), "intersect_subspace");
  if (auto t = try_orthant_trace(c, m)) return pruning == Pruning::minimal ? prune_redundant(*t) : std::move(*t);
  const auto& x = m.partition;
  const std::size_t n = c.space().size();
  const std::size_t blocks = x.block_count();

  std::vector<bool> has_unit(n, false);
  std::vector<const Gamble*> others;
  for (const auto& g : c.generators()) {
    std::size_t nonzero = 0;
    World at = 0;
    for (World w = 0; w < n; ++w) {
      if (sgn(g[w]) != 0) {
        ++nonzero;
        at = w;
      }
    }
    if (nonzero == 1 && sgn(g[at]) > 0) {
      has_unit[at] = true;
    } else {
      others.push_back(&g);
    }
  }

  const std::size_t dim = blocks + others.size();
  // Worlds in one block on which every generator agrees give identical rows.
  std::vector<Vec> ineq, eq;
  std::set<Vec> seen_ineq, seen_eq;
  for (World w = 0; w < n; ++w) {
    Vec row(dim, Rational(0));
    row[x.block_of(w)] = 1;
    for (std::size_t j = 0; j < others.size(); ++j) row[blocks + j] = -(*others[j])[w];
    if (has_unit[w]) {
      if (seen_ineq.insert(row).second) ineq.push_back(std::move(row));
    } else if (seen_eq.insert(row).second) {
      eq.push_back(std::move(row));
    }
  }
  for (std::size_t j = 0; j < others.size(); ++j) {
    Vec row(dim, Rational(0));
    row[blocks + j] = 1;
    ineq.push_back(std::move(row));
  }

  auto gens = dd::enumerate(dim, ineq, eq);
  std::vector<Gamble> out;
  auto project = [&](const Vec& v) {
    Vec y(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(blocks));
    if (!is_zero(y)) out.push_back(Gamble::lift(x, y));
  };
  for (const auto& r : gens.rays) project(r);
  if (!gens.lines.empty()) throw ConsistencyError("intersect_subspace: multiplier cone is not pointed");
  ConeV result(c.space(), std::move(out));
  return pruning == Pruning::minimal ? prune_redundant(result) : result;
}

ConeV prune_redundant(const ConeV& c) {
  std::vector<Gamble> kept = c.generators();
  for (std::size_t i = kept.size(); i-- > 0;) {
    std::vector<Gamble> rest;
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (j != i) rest.push_back(kept[j]);
    }
    if (cone_member(kept[i], rest)) kept = std::move(rest);
  }
  return ConeV(c.space(), std::move(kept));
}

}  // namespace ga
