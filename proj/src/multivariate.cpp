#include "ga/multivariate.hpp"

#include <bit>
#include <map>

namespace ga {

using nlohmann::json;

namespace {

std::size_t product(const std::vector<std::size_t>& domains) {
  std::size_t n = 1;
  for (auto d : domains) {
    if (d == 0) throw PreconditionError("variable domain must be nonempty");
    n *= d;
  }
  return n;
}

}  // namespace

VariableSystem::VariableSystem(std::vector<std::size_t> domains)
    : domains_(std::move(domains)), space_(product(domains_)) {
  if (domains_.empty()) throw PreconditionError("a variable system needs at least one variable");
  if (domains_.size() > kMaxVariables) throw PreconditionError("too many variables");
  const std::size_t n = space_.size();
  cylinders_.reserve(std::size_t{1} << domains_.size());
  std::vector<std::size_t> labels(n);
  for (VarMask s = 0; s <= full_mask(); ++s) {
    for (World w = 0; w < n; ++w) {
      const auto values = values_of(w);
      std::size_t key = 0;
      for (std::size_t i = 0; i < domains_.size(); ++i) {
        if (s & (VarMask{1} << i)) key = key * domains_[i] + values[i];
      }
      labels[w] = key;
    }
    cylinders_.push_back(Partition::from_labels(labels));
  }
}

std::vector<std::size_t> VariableSystem::values_of(World w) const {
  if (w >= space_.size()) throw PreconditionError("world out of range");
  std::vector<std::size_t> values(domains_.size());
  for (std::size_t i = domains_.size(); i-- > 0;) {
    values[i] = w % domains_[i];
    w /= domains_[i];
  }
  return values;
}

World VariableSystem::world_of(std::span<const std::size_t> values) const {
  if (values.size() != domains_.size()) throw PreconditionError("value tuple has the wrong length");
  World w = 0;
  for (std::size_t i = 0; i < domains_.size(); ++i) {
    if (values[i] >= domains_[i]) throw PreconditionError("value out of range");
    w = w * domains_[i] + values[i];
  }
  return w;
}

VarMask VariableSystem::mask_of(std::span<const std::size_t> variables) const {
  VarMask m = 0;
  for (auto v : variables) {
    if (v >= domains_.size()) throw PreconditionError("variable index out of range");
    m |= VarMask{1} << v;
  }
  return m;
}

const Partition& VariableSystem::cylinder(VarMask s) const {
  if (s & ~full_mask()) throw PreconditionError("variable index out of range");
  return cylinders_[s];
}

bool subset_ci(const VariableSystem& sys, VarMask s, VarMask t, VarMask r) {
  // A variable with a single value carries no information.
  VarMask informative = 0;
  for (std::size_t i = 0; i < sys.variable_count(); ++i) {
    if (sys.domains()[i] > 1) informative |= VarMask{1} << i;
  }
  const bool by_sets = ((s | r) & (t | r) & informative) == (r & informative);
  const bool by_partitions = cond_independent(sys.cylinder(s), sys.cylinder(t), sys.cylinder(r));
  if (by_sets != by_partitions) throw ConsistencyError("subset independence disagrees with the partition predicate");
  return by_sets;
}

PhiElement commuting_extract_compose(const Partition& x, const Partition& y, const PhiElement& p) {
  if (!commutes(x, y)) throw PreconditionError("partitions do not commute");
  auto direct = extract(meet(x, y), p);
  if (!phi_equal(extract(x, extract(y, p)), direct) || !phi_equal(extract(y, extract(x, p)), direct)) {
    throw ConsistencyError("extraction composition disagrees with extraction to the meet");
  }
  return direct;
}

Report commutative_suite(const VariableSystem& sys, std::span<const PhiElement> corpus) {
  Report report;
  const VarMask full = sys.full_mask();
  const LabeledAlgebra alg(QuestionSet(sys.space(), sys.cylinders()));

  for (VarMask s = 0; s <= full; ++s) {
    for (VarMask t = 0; t <= full; ++t) {
      const auto& x = sys.cylinder(s);
      const auto& y = sys.cylinder(t);
      auto w = [&] { return json{{"S", s}, {"T", t}}; };
      report.check("multivariate.commute", commutes(x, y), w);
      report.check("multivariate.meet", meet(x, y) == sys.cylinder(s & t), w);
      report.check("multivariate.join", join(x, y) == sys.cylinder(s | t), w);
      for (VarMask r = 0; r <= full; ++r) {
        bool agree = true;
        try {
          subset_ci(sys, s, t, r);
        } catch (const ConsistencyError&) {
          agree = false;
        }
        report.check("multivariate.subset_ci", agree, [&] { return json{{"S", s}, {"T", t}, {"R", r}}; });
      }
    }
  }

  // ε_S(p) for every S and p, reused across pairs, and the pieces they form.
  std::vector<std::vector<PhiElement>> extracted(corpus.size());
  std::vector<std::vector<LabeledPiece>> pieces(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    extracted[i].reserve(full + 1);
    for (VarMask s = 0; s <= full; ++s) {
      extracted[i].push_back(extract(sys.cylinder(s), corpus[i]));
      pieces[i].push_back(alg.piece(extracted[i].back(), sys.cylinder(s)));
    }
  }

  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const std::size_t j = (i + 1) % corpus.size();
    for (VarMask s = 0; s <= full; ++s) {
      for (VarMask t = 0; t <= full; ++t) {
        const auto& x = sys.cylinder(s);
        const auto& y = sys.cylinder(t);
        auto w = [&] { return json{{"element", i}, {"S", s}, {"T", t}}; };
        report.check("commutative.extraction", phi_equal(extract(y, extracted[i][s]), extracted[i][s & t]), w);

        const auto& d1 = pieces[i][s];
        const auto& d2 = pieces[j][t];
        const auto lhs = alg.transport(x, alg.combine(d1, d2));
        const auto rhs = alg.combine(d1, alg.transport(meet(x, y), d2));
        report.check("commutative.combination", piece_equal(lhs, rhs), w);
      }
    }
  }
  return report;
}

}  // namespace ga
