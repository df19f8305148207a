#include "ga/labeled.hpp"

#include "ga/serialize.hpp"

namespace ga {

using nlohmann::json;

const ConeV& TildePiece::trace() const {
  if (!trace_) throw PreconditionError("Top trace has no cone");
  return *trace_;
}

bool piece_equal(const LabeledPiece& a, const LabeledPiece& b) {
  return a.label() == b.label() && phi_equal(a.content(), b.content());
}

namespace {

bool same_cone(const ConeV& a, const ConeV& b) {
  auto inside = [](const ConeV& x, const ConeV& y) {
    for (const auto& g : x.generators()) {
      if (!cone_member(g, y)) return false;
    }
    return true;
  };
  return inside(a, b) && inside(b, a);
}

}  // namespace

bool tilde_equal(const TildePiece& a, const TildePiece& b) {
  if (a.label() != b.label() || a.is_top() != b.is_top()) return false;
  return a.is_top() || same_cone(a.trace(), b.trace());
}

void LabeledAlgebra::require_label(const Partition& x) const {
  if (!q_.contains(x)) throw PreconditionError("label is not a member of the question set");
}

LabeledPiece LabeledAlgebra::piece(PhiElement content, Partition label) const {
  require_label(label);
  if (!is_support(label, content)) throw PreconditionError("label does not support the content");
  return LabeledPiece(std::move(content), std::move(label));
}

TildePiece LabeledAlgebra::tilde_piece(std::optional<ConeV> trace, Partition label) const {
  require_label(label);
  if (trace) {
    for (const auto& g : trace->generators()) {
      if (!is_measurable(g, label)) throw PreconditionError("trace generator is not label-measurable");
    }
    const auto closed = closure(label.space(), trace->generators());
    if (closed.is_top()) throw PreconditionError("trace closes to Top; use the Top marker");
    if (!same_cone(intersect_subspace(closed.cone(), MeasurableSubspace(label)), *trace)) {
      throw PreconditionError("trace is not the trace of its own closure");
    }
  }
  return TildePiece(std::move(trace), std::move(label));
}

LabeledPiece LabeledAlgebra::combine(const LabeledPiece& a, const LabeledPiece& b) const {
  return LabeledPiece(ga::combine(a.content(), b.content()), join(a.label(), b.label()));
}

LabeledPiece LabeledAlgebra::transport(const Partition& y, const LabeledPiece& a) const {
  require_label(y);
  return LabeledPiece(extract(y, a.content()), y);
}

TildePiece LabeledAlgebra::trace_of(const PhiElement& d, const Partition& x) const {
  if (d.is_top()) return TildePiece(std::nullopt, x);
  return TildePiece(intersect_subspace(d.cone(), MeasurableSubspace(x)), x);
}

TildePiece LabeledAlgebra::to_tilde(const LabeledPiece& a) const { return trace_of(a.content(), a.label()); }

LabeledPiece LabeledAlgebra::from_tilde(const TildePiece& t) const {
  if (t.is_top()) return LabeledPiece(PhiElement::top(t.label().space()), t.label());
  return LabeledPiece(closure(t.label().space(), t.trace().generators()), t.label());
}

TildePiece LabeledAlgebra::tilde_combine(const TildePiece& a, const TildePiece& b) const {
  const auto joined = ga::combine(from_tilde(a).content(), from_tilde(b).content());
  return trace_of(joined, join(a.label(), b.label()));
}

TildePiece LabeledAlgebra::tilde_transport(const Partition& y, const TildePiece& t) const {
  require_label(y);
  return trace_of(from_tilde(t).content(), y);
}

Report labeled_suite(const LabeledAlgebra& alg, std::span<const LabeledPiece> pieces) {
  Report report;
  const auto& q = alg.questions();
  const auto space = q.space();
  const auto unit = PhiElement::unit(space);
  const auto top = PhiElement::top(space);
  const std::size_t n = pieces.size();
  auto unit_at = [&](const Partition& x) { return alg.piece(unit, x); };
  auto top_at = [&](const Partition& x) { return alg.piece(top, x); };
  auto w = [](std::initializer_list<std::pair<const char*, std::size_t>> idx) {
    json j = json::object();
    for (const auto& [k, v] : idx) j[k] = v;
    return j;
  };

  for (std::size_t x = 0; x < q.size(); ++x) {
    for (std::size_t y = 0; y < q.size(); ++y) {
      const auto uu = alg.combine(unit_at(q[x]), unit_at(q[y]));
      report.check("labeled.unit_join", piece_equal(uu, unit_at(join(q[x], q[y]))), [&] { return w({{"x", x}, {"y", y}}); });
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = pieces[i];
    const auto& x = a.label();
    const auto& b = pieces[(i + 1) % n];
    const auto& c = pieces[(i + 2) % n];

    const auto ab = alg.combine(a, b);
    report.check("labeled.labeling_combine", ab.label() == join(x, b.label()), [&] { return w({{"piece", i}}); });
    report.check("labeled.commutative", piece_equal(ab, alg.combine(b, a)), [&] { return w({{"piece", i}}); });
    report.check("labeled.associative", piece_equal(alg.combine(ab, c), alg.combine(a, alg.combine(b, c))),
                 [&] { return w({{"piece", i}}); });
    report.check("labeled.unit", piece_equal(alg.combine(a, unit_at(x)), a), [&] { return w({{"piece", i}}); });
    report.check("labeled.null", piece_equal(alg.combine(a, top_at(x)), top_at(x)), [&] { return w({{"piece", i}}); });
    report.check("labeled.identity", piece_equal(alg.transport(x, a), a), [&] { return w({{"piece", i}}); });

    for (std::size_t yi = 0; yi < q.size(); ++yi) {
      const auto& y = q[yi];
      const auto ty = alg.transport(y, a);
      report.check("labeled.labeling_transport", ty.label() == y, [&] { return w({{"piece", i}, {"y", yi}}); });
      report.check("labeled.null_iff", ty.content().is_top() == a.content().is_top(), [&] { return w({{"piece", i}, {"y", yi}}); });
      // (D,y)·(1,x) = t_{x∨y}(D,y), read with the piece labeled y.
      const auto joined = alg.combine(a, unit_at(y));
      report.check("labeled.unit_transport", piece_equal(joined, alg.transport(join(x, y), a)),
                   [&] { return w({{"piece", i}, {"y", yi}}); });
      if (leq(y, x)) {
        report.check("labeled.idempotency", piece_equal(alg.combine(ty, a), a), [&] { return w({{"piece", i}, {"y", yi}}); });
      }
      for (std::size_t zi = 0; zi < q.size(); ++zi) {
        const auto& z = q[zi];
        if (!cond_independent(x, y, z)) continue;
        report.check("labeled.transport", piece_equal(ty, alg.transport(y, alg.transport(z, a))), [&] {
          return w({{"piece", i}, {"y", yi}, {"z", zi}});
        });
        for (std::size_t k = 0; k < n; ++k) {
          const auto& other = pieces[k];
          if (other.label() != y) continue;
          const auto lhs = alg.transport(z, alg.combine(a, other));
          const auto rhs = alg.combine(alg.transport(z, a), alg.transport(z, other));
          report.check("labeled.combination", piece_equal(lhs, rhs), [&] {
            return w({{"piece", i}, {"other", k}, {"z", zi}});
          });
          break;
        }
      }
    }

    // Ψ ↔ Ψ̃
    const auto t = alg.to_tilde(a);
    report.check("iso.round_trip", piece_equal(alg.from_tilde(t), a), [&] { return w({{"piece", i}}); });
    report.check("iso.trace_round_trip", tilde_equal(alg.to_tilde(alg.from_tilde(t)), t), [&] { return w({{"piece", i}}); });
    if (!t.is_top()) {
      bool measurable = true;
      for (const auto& g : t.trace().generators()) measurable = measurable && is_measurable(g, x);
      report.check("iso.trace_measurable", measurable, [&] { return w({{"piece", i}}); });
    }
    report.check("iso.preserves_combine", tilde_equal(alg.to_tilde(ab), alg.tilde_combine(t, alg.to_tilde(b))),
                 [&] { return w({{"piece", i}}); });
    for (std::size_t yi = 0; yi < q.size(); ++yi) {
      report.check("iso.preserves_transport",
                   tilde_equal(alg.to_tilde(alg.transport(q[yi], a)), alg.tilde_transport(q[yi], t)),
                   [&] { return w({{"piece", i}, {"y", yi}}); });
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i || pieces[k].label() != x) continue;
      const bool same_image = tilde_equal(alg.to_tilde(pieces[k]), t);
      report.check("iso.injective", same_image == piece_equal(pieces[k], a), [&] { return w({{"piece", i}, {"other", k}}); });
    }
  }
  return report;
}

}  // namespace ga
