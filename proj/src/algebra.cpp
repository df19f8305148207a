#include "ga/algebra.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "ga/serialize.hpp"

namespace ga {

using nlohmann::json;

PhiElement combine(const PhiElement& a, const PhiElement& b) {
  require_same_space(a.space(), b.space(), "combine");
  if (a.is_top() || b.is_top()) return PhiElement::top(a.space());
  auto gens = a.cone().generators();
  const auto& more = b.cone().generators();
  gens.insert(gens.end(), more.begin(), more.end());
  return closure(a.space(), gens);
}

PhiElement extract(const Partition& x, const PhiElement& p) {
  require_same_space(x.space(), p.space(), "extract");
  if (p.is_top()) return p;
  const ConeV trace = intersect_subspace(p.cone(), MeasurableSubspace(x), Pruning::none);
  return closure(p.space(), trace.generators());
}

bool is_support(const Partition& x, const PhiElement& p) { return phi_equal(extract(x, p), p); }

QuestionSet::QuestionSet(PossibilitySpace space, std::vector<Partition> partitions) : space_(space) {
  std::set<Partition> unique;
  for (auto& p : partitions) {
    require_same_space(p.space(), space, "QuestionSet");
    unique.insert(std::move(p));
  }
  if (unique.empty()) throw PreconditionError("QuestionSet needs at least one partition");
  partitions_.assign(unique.begin(), unique.end());
  for (const auto& a : partitions_) {
    for (const auto& b : partitions_) {
      if (!unique.contains(join(a, b))) throw PreconditionError("QuestionSet is not closed under join");
    }
  }
  contains_top_ = unique.contains(Partition::top(space));
}

QuestionSet QuestionSet::join_closure(PossibilitySpace space, std::vector<Partition> generators) {
  std::set<Partition> all(generators.begin(), generators.end());
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Partition> snapshot(all.begin(), all.end());
    for (const auto& a : snapshot) {
      for (const auto& b : snapshot) grew = all.insert(join(a, b)).second || grew;
    }
  }
  return QuestionSet(space, std::vector<Partition>(all.begin(), all.end()));
}

bool QuestionSet::contains(const Partition& p) const {
  return std::binary_search(partitions_.begin(), partitions_.end(), p);
}

std::size_t QuestionSet::index_of(const Partition& p) const {
  auto it = std::lower_bound(partitions_.begin(), partitions_.end(), p);
  if (it == partitions_.end() || *it != p) throw PreconditionError("partition is not a member of the QuestionSet");
  return static_cast<std::size_t>(it - partitions_.begin());
}

Report::Tally& Report::tally(const std::string& law) {
  for (auto& t : tallies_) {
    if (t.law == law) return t;
  }
  tallies_.push_back({law, 0, 0});
  return tallies_.back();
}

void Report::append(const Report& other) {
  failures_.insert(failures_.end(), other.failures_.begin(), other.failures_.end());
  for (const auto& t : other.tallies_) {
    auto& mine = tally(t.law);
    mine.checked += t.checked;
    mine.failed += t.failed;
  }
}

std::size_t Report::checked(const std::string& law) const {
  for (const auto& t : tallies_) {
    if (t.law == law) return t.checked;
  }
  return 0;
}

std::string Report::to_json_lines() const {
  std::string out;
  for (const auto& r : failures_) {
    out += json{{"law", r.law}, {"witness", r.witness}, {"pass", r.pass}}.dump();
    out += '\n';
  }
  for (const auto& t : tallies_) {
    out += json{{"law", t.law}, {"checked", t.checked}, {"failed", t.failed}, {"pass", t.failed == 0}}.dump();
    out += '\n';
  }
  return out;
}

AlgebraOps AlgebraOps::standard() {
  return AlgebraOps{[](const PhiElement& a, const PhiElement& b) { return ga::combine(a, b); },
                    [](const Partition& x, const PhiElement& p) { return ga::extract(x, p); }};
}

Report q_separoid_suite(std::span<const Partition> ps) {
  Report report;
  auto w = [](const Partition& x, const Partition& y, const Partition& z) {
    return json{{"x", json_io::to_json(x)}, {"y", json_io::to_json(y)}, {"z", json_io::to_json(z)}};
  };
  for (const auto& x : ps) {
    for (const auto& y : ps) {
      report.check("separoid.self", cond_independent(x, y, y), [&] { return w(x, y, y); });
      for (const auto& z : ps) {
        const bool ci = cond_independent(x, y, z);
        report.check("separoid.join_equivalence", ci == cond_independent(join(x, z), join(y, z), z),
                     [&] { return w(x, y, z); });
        if (!ci) continue;
        report.check("separoid.symmetry", cond_independent(y, x, z), [&] { return w(x, y, z); });
        report.check("separoid.join_given", cond_independent(x, join(y, z), z), [&] { return w(x, y, z); });
        for (const auto& coarser : ps) {
          if (!leq(coarser, y)) continue;
          report.check("separoid.decomposition", cond_independent(x, coarser, z), [&] {
            auto j = w(x, y, z);
            j["y_coarser"] = json_io::to_json(coarser);
            return j;
          });
        }
      }
    }
  }
  return report;
}

namespace {

bool in_phi(const PhiElement& p) {
  if (p.is_top()) return true;
  const auto space = p.space();
  for (World w = 0; w < space.size(); ++w) {
    if (!cone_member(Gamble::unit(space, w), p.cone())) return false;
  }
  return !zero_nontrivial(p.cone());
}

class AxiomRun {
 public:
  AxiomRun(const QuestionSet& q, std::vector<PhiElement> corpus, const AlgebraOps& ops, Report& report)
      : q_(q), corpus_(std::move(corpus)), ops_(ops), report_(report), cache_(corpus_.size()) {
    for (auto& row : cache_) row.resize(q_.size());
  }

  void run() {
    const std::size_t n = corpus_.size();
    for (std::size_t i = 0; i < n; ++i) {
      pairs_.emplace_back(i, (i + 1) % n);
      if (n > 3) pairs_.emplace_back(i, (i + 3) % n);
    }
    semigroup();
    report_.append(q_separoid_suite(q_.partitions()));
    quantifier();
    supports();
    extraction_laws();
    extraction_axiom();
    generalized_independence();
    meets();
    order();
  }

 private:
  const Partition& Q(std::size_t i) const { return q_[i]; }

  const PhiElement& ext(std::size_t d, std::size_t x) {
    auto& slot = cache_[d][x];
    if (!slot) slot = ops_.extract(Q(x), corpus_[d]);
    return *slot;
  }

  bool supported(std::size_t d, std::size_t x) { return phi_equal(ext(d, x), corpus_[d]); }

  const PhiElement& comb(std::size_t a, std::size_t b) {
    auto key = std::minmax(a, b);
    auto it = combos_.find(key);
    if (it == combos_.end()) it = combos_.emplace(key, ops_.combine(corpus_[a], corpus_[b])).first;
    return it->second;
  }

  json values(std::initializer_list<std::pair<const char*, const PhiElement*>> named) const {
    json j = json::object();
    for (const auto& [name, p] : named) j[name] = json_io::to_json(*p);
    return j;
  }

  void semigroup() {
    const auto space = q_.space();
    const auto unit = PhiElement::unit(space);
    const auto top = PhiElement::top(space);
    for (std::size_t i = 0; i < corpus_.size(); ++i) {
      const auto& d = corpus_[i];
      const auto self = ops_.combine(d, d);
      report_.check("semigroup.idempotent", phi_equal(self, d), [&] { return json{{"D", i}, {"values", values({{"D", &d}, {"D.D", &self}})}}; });
      const auto with_unit = ops_.combine(d, unit);
      report_.check("semigroup.unit", phi_equal(with_unit, d), [&] { return json{{"D", i}, {"values", values({{"D", &d}, {"D.1", &with_unit}})}}; });
      report_.check("semigroup.null", ops_.combine(d, top).is_top(), [&] { return json{{"D", i}}; });
    }
    for (auto [a, b] : pairs_) {
      const auto ab = ops_.combine(corpus_[a], corpus_[b]);
      const auto ba = ops_.combine(corpus_[b], corpus_[a]);
      report_.check("semigroup.closed", in_phi(ab), [&] { return json{{"D1", a}, {"D2", b}, {"values", values({{"D1.D2", &ab}})}}; });
      report_.check("semigroup.commutative", phi_equal(ab, ba), [&] { return json{{"D1", a}, {"D2", b}, {"values", values({{"D1.D2", &ab}, {"D2.D1", &ba}})}}; });
      report_.check("order.join_upper_bound", phi_leq(corpus_[a], ab) && phi_leq(corpus_[b], ab),
                    [&] { return json{{"D1", a}, {"D2", b}}; });
    }
    const std::size_t n = corpus_.size();
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = (i + 1) % n, k = (i + 2) % n;
      const auto left = ops_.combine(ops_.combine(corpus_[i], corpus_[j]), corpus_[k]);
      const auto right = ops_.combine(corpus_[i], ops_.combine(corpus_[j], corpus_[k]));
      report_.check("semigroup.associative", phi_equal(left, right), [&] {
        return json{{"D1", i}, {"D2", j}, {"D3", k}, {"values", values({{"(D1.D2).D3", &left}, {"D1.(D2.D3)", &right}})}};
      });
    }
  }

  void quantifier() {
    const auto space = q_.space();
    const auto top = PhiElement::top(space);
    for (std::size_t x = 0; x < q_.size(); ++x) {
      report_.check("quantifier.null", ops_.extract(Q(x), top).is_top(), [&] { return json{{"x", x}}; });
      for (std::size_t d = 0; d < corpus_.size(); ++d) {
        const auto& e = ext(d, x);
        report_.check("quantifier.closed", in_phi(e), [&] { return json{{"x", x}, {"D", d}, {"values", values({{"eps_x(D)", &e}})}}; });
        const auto back = ops_.combine(e, corpus_[d]);
        report_.check("quantifier.absorb", phi_equal(back, corpus_[d]), [&] {
          return json{{"x", x}, {"D", d}, {"values", values({{"D", &corpus_[d]}, {"eps_x(D).D", &back}})}};
        });
      }
      for (auto [a, b] : pairs_) {
        const auto& e1 = ext(a, x);
        const auto lhs = ops_.extract(Q(x), ops_.combine(e1, corpus_[b]));
        const auto rhs = ops_.combine(e1, ext(b, x));
        report_.check("quantifier.distribute", phi_equal(lhs, rhs), [&] {
          return json{{"x", x}, {"D1", a}, {"D2", b}, {"values", values({{"lhs", &lhs}, {"rhs", &rhs}})}};
        });
      }
    }
  }

  void supports() {
    for (std::size_t d = 0; d < corpus_.size(); ++d) {
      std::vector<bool> sup(q_.size());
      for (std::size_t x = 0; x < q_.size(); ++x) sup[x] = supported(d, x);
      report_.check("support.exists", std::find(sup.begin(), sup.end(), true) != sup.end(), [&] { return json{{"D", d}}; });
      for (std::size_t x = 0; x < q_.size(); ++x) {
        if (!sup[x]) continue;
        for (std::size_t y = 0; y < q_.size(); ++y) {
          if (leq(Q(x), Q(y))) {
            report_.check("support.upward_closed", sup[y], [&] { return json{{"D", d}, {"x", x}, {"y", y}}; });
          }
        }
      }
    }
  }

  void extraction_laws() {
    const auto space = q_.space();
    const auto unit = PhiElement::unit(space);
    for (std::size_t x = 0; x < q_.size(); ++x) {
      const auto eu = ops_.extract(Q(x), unit);
      report_.check("extract.unit", phi_equal(eu, unit), [&] { return json{{"x", x}, {"values", values({{"eps_x(1)", &eu}})}}; });
      for (std::size_t d = 0; d < corpus_.size(); ++d) {
        const auto& e = ext(d, x);
        report_.check("extract.null_iff", e.is_top() == corpus_[d].is_top(), [&] { return json{{"x", x}, {"D", d}}; });
        const auto again = ops_.extract(Q(x), e);
        report_.check("extract.self_support", phi_equal(again, e), [&] { return json{{"x", x}, {"D", d}}; });
        for (std::size_t y = 0; y < q_.size(); ++y) {
          if (!leq(Q(x), Q(y))) continue;
          report_.check("extract.monotone_in_question", phi_leq(e, ext(d, y)), [&] { return json{{"x", x}, {"y", y}, {"D", d}}; });
          const auto fine_of_coarse = ops_.extract(Q(y), e);
          report_.check("extract.finer_keeps_coarse", phi_equal(fine_of_coarse, e), [&] { return json{{"x", x}, {"y", y}, {"D", d}}; });
          const auto coarse_of_fine = ops_.extract(Q(x), ext(d, y));
          report_.check("extract.coarse_of_fine", phi_equal(coarse_of_fine, e), [&] { return json{{"x", x}, {"y", y}, {"D", d}}; });
        }
      }
      for (auto [a, b] : pairs_) {
        if (!supported(a, x) || !supported(b, x)) continue;
        const auto& ab = comb(a, b);
        report_.check("extract.common_support", phi_equal(ops_.extract(Q(x), ab), ab), [&] { return json{{"x", x}, {"D1", a}, {"D2", b}}; });
      }
    }
    for (auto [a, b] : pairs_) {
      const auto& ab = comb(a, b);
      for (std::size_t x = 0; x < q_.size(); ++x) {
        if (!supported(a, x)) continue;
        for (std::size_t y = 0; y < q_.size(); ++y) {
          if (!supported(b, y)) continue;
          const std::size_t xy = q_.index_of(join(Q(x), Q(y)));
          const bool sup = phi_equal(ops_.extract(Q(xy), ab), ab);
          const auto split = ops_.combine(ext(a, xy), ext(b, xy));
          report_.check("extract.join_support", sup && phi_equal(split, ab), [&] {
            return json{{"x", x}, {"y", y}, {"D1", a}, {"D2", b}, {"values", values({{"D1.D2", &ab}, {"split", &split}})}};
          });
        }
      }
    }
  }

  void extraction_axiom() {
    for (std::size_t x = 0; x < q_.size(); ++x) {
      for (std::size_t y = 0; y < q_.size(); ++y) {
        for (std::size_t z = 0; z < q_.size(); ++z) {
          const auto xz = join(Q(x), Q(z));
          const auto yz_p = join(Q(y), Q(z));
          if (!cond_independent(xz, yz_p, Q(z))) continue;
          const std::size_t yz = q_.index_of(yz_p);
          for (std::size_t d = 0; d < corpus_.size(); ++d) {
            if (!supported(d, x)) continue;
            const auto rhs = ops_.extract(yz_p, ext(d, z));
            report_.check("extraction.independence", phi_equal(ext(d, yz), rhs), [&] {
              return json{{"x", x}, {"y", y}, {"z", z}, {"D", d}, {"values", values({{"lhs", &ext(d, yz)}, {"rhs", &rhs}})}};
            });
          }
        }
      }
    }
  }

  void generalized_independence() {
    for (std::size_t x = 0; x < q_.size(); ++x) {
      for (std::size_t y = 0; y < q_.size(); ++y) {
        for (std::size_t z = 0; z < q_.size(); ++z) {
          if (!cond_independent(Q(x), Q(y), Q(z))) continue;
          for (std::size_t d = 0; d < corpus_.size(); ++d) {
            if (!supported(d, x)) continue;
            const auto rhs = ops_.extract(Q(y), ext(d, z));
            report_.check("independence.extract", phi_equal(ext(d, y), rhs), [&] {
              return json{{"x", x}, {"y", y}, {"z", z}, {"D", d}};
            });
          }
          for (auto [a, b] : pairs_) {
            for (auto [d1, d2] : {std::pair{a, b}, std::pair{b, a}}) {
              if (!supported(d1, x) || !supported(d2, y)) continue;
              const auto lhs = ops_.extract(Q(z), comb(d1, d2));
              const auto rhs = ops_.combine(ext(d1, z), ext(d2, z));
              report_.check("independence.combine", phi_equal(lhs, rhs), [&] {
                return json{{"x", x}, {"y", y}, {"z", z}, {"D1", d1}, {"D2", d2}, {"values", values({{"lhs", &lhs}, {"rhs", &rhs}})}};
              });
            }
          }
        }
      }
    }
  }

  void meets() {
    const std::size_t n = corpus_.size();
    for (std::size_t x = 0; x < q_.size(); ++x) {
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> family = {i, (i + 1) % n};
        if (i % 5 == 0) family.push_back((i + 2) % n);
        std::vector<PhiElement> ds, es;
        for (auto f : family) {
          ds.push_back(corpus_[f]);
          es.push_back(ext(f, x));
        }
        const auto lhs = ops_.extract(Q(x), phi_meet(ds));
        const auto rhs = phi_meet(es);
        report_.check("meet.extract_commutes", phi_equal(lhs, rhs), [&] {
          return json{{"x", x}, {"family", family}, {"values", values({{"lhs", &lhs}, {"rhs", &rhs}})}};
        });
      }
    }
  }

  void order() {
    for (std::size_t x = 0; x < q_.size(); ++x) {
      for (std::size_t d = 0; d < corpus_.size(); ++d) {
        report_.check("order.extract_below", phi_leq(ext(d, x), corpus_[d]), [&] { return json{{"x", x}, {"D", d}}; });
      }
      for (auto [a, b] : pairs_) {
        const auto& ab = comb(a, b);
        report_.check("order.extract_monotone", phi_leq(ext(a, x), ops_.extract(Q(x), ab)), [&] {
          return json{{"x", x}, {"D1", a}, {"D2", b}};
        });
      }
    }
  }

  const QuestionSet& q_;
  std::vector<PhiElement> corpus_;
  const AlgebraOps& ops_;
  Report& report_;
  std::vector<std::vector<std::optional<PhiElement>>> cache_;
  std::map<std::pair<std::size_t, std::size_t>, PhiElement> combos_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

}  // namespace

Report axiom_suite(const QuestionSet& q, std::span<const PhiElement> corpus, const AlgebraOps& ops) {
  Report report;
  std::vector<PhiElement> kept;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    require_same_space(corpus[i].space(), q.space(), "axiom_suite");
    bool has_support = q.contains_top();
    for (std::size_t x = 0; x < q.size() && !has_support; ++x) has_support = phi_equal(ops.extract(q[x], corpus[i]), corpus[i]);
    if (has_support) {
      kept.push_back(corpus[i]);
    } else {
      report.check("corpus.unsupported", true);
    }
  }
  if (kept.empty()) return report;
  AxiomRun(q, std::move(kept), ops, report).run();
  return report;
}

}  // namespace ga

namespace ga {

Report closure_suite(std::span<const std::vector<Gamble>> sets) {
  Report report;
  const std::size_t n = sets.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& k1 = sets[i];
    const auto& k2 = sets[(i + 1) % n];
    if (k1.empty()) continue;
    const auto space = k1.front().space();
    auto w = [&] { return json{{"set", i}}; };
    const auto c1 = closure(space, k1);

    bool extensive = true;
    for (const auto& k : k1) extensive = extensive && phi_member(k, c1);
    report.check("closure.extensive", extensive, w);
    const auto again = c1.is_top() ? c1 : closure(space, c1.cone().generators());
    report.check("closure.idempotent", phi_equal(again, c1), w);

    if (k2.empty() || k2.front().space() != space) continue;
    std::vector<Gamble> both = k1;
    both.insert(both.end(), k2.begin(), k2.end());
    const auto c12 = closure(space, both);
    report.check("closure.monotone", phi_leq(c1, c12), w);
    std::vector<Gamble> via = c1.is_top() ? std::vector<Gamble>{Gamble::zero(space)} : c1.cone().generators();
    via.insert(via.end(), k2.begin(), k2.end());
    report.check("closure.union_identity", phi_equal(closure(space, via), c12), w);

    if (c1.is_top()) continue;
    const auto& gens = c1.cone().generators();
    bool d1 = true;
    for (World u = 0; u < space.size(); ++u) d1 = d1 && phi_member(Gamble::unit(space, u), c1);
    report.check("coherence.d1", d1, w);
    report.check("coherence.d2", !phi_member(Gamble::zero(space), c1) && !zero_nontrivial(c1.cone()), w);
    for (std::size_t a = 0; a < gens.size(); ++a) {
      const auto& f = gens[a];
      const auto& g = gens[(a + 1) % gens.size()];
      report.check("coherence.d3", phi_member(f.scaled(Rational(3, 7)), c1), w);
      if (!(f + g).is_zero()) report.check("coherence.d4", phi_member(f + g, c1), w);
    }
  }
  return report;
}

}  // namespace ga
