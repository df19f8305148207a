#pragma once

#include <optional>
#include <span>

#include "ga/algebra.hpp"

namespace ga {

/// (D, x) with x a support of D.
class LabeledPiece {
 public:
  const PhiElement& content() const { return content_; }
  const Partition& label() const { return label_; }

 private:
  friend class LabeledAlgebra;
  LabeledPiece(PhiElement content, Partition label) : content_(std::move(content)), label_(std::move(label)) {}

  PhiElement content_;
  Partition label_;
};

/// (D ∩ L_x, x). The trace of a Top piece is all of L_x, which a cone with the
/// origin excluded cannot hold; it is kept as an empty optional instead.
class TildePiece {
 public:
  bool is_top() const { return !trace_; }
  /// Precondition: !is_top().
  const ConeV& trace() const;
  const Partition& label() const { return label_; }

 private:
  friend class LabeledAlgebra;
  TildePiece(std::optional<ConeV> trace, Partition label) : trace_(std::move(trace)), label_(std::move(label)) {}

  std::optional<ConeV> trace_;
  Partition label_;
};

bool piece_equal(const LabeledPiece& a, const LabeledPiece& b);
bool tilde_equal(const TildePiece& a, const TildePiece& b);

/// Both labeled views over a fixed question set. Every label must belong to
/// the question set.
class LabeledAlgebra {
 public:
  explicit LabeledAlgebra(QuestionSet q) : q_(std::move(q)) {}

  const QuestionSet& questions() const { return q_; }

  /// Throws PreconditionError unless label ∈ Q and label supports content.
  LabeledPiece piece(PhiElement content, Partition label) const;
  /// Throws PreconditionError unless label ∈ Q, every generator is
  /// label-measurable, and the trace is closed under re-tracing.
  TildePiece tilde_piece(std::optional<ConeV> trace, Partition label) const;

  /// (D₁·D₂, x ∨ y)
  LabeledPiece combine(const LabeledPiece& a, const LabeledPiece& b) const;
  /// (ε_y(D), y)
  LabeledPiece transport(const Partition& y, const LabeledPiece& a) const;

  TildePiece to_tilde(const LabeledPiece& a) const;
  LabeledPiece from_tilde(const TildePiece& t) const;
  /// ((C(t₁)·C(t₂)) ∩ L_{x∨y}, x ∨ y)
  TildePiece tilde_combine(const TildePiece& a, const TildePiece& b) const;
  /// (C(t) ∩ L_y, y)
  TildePiece tilde_transport(const Partition& y, const TildePiece& t) const;

 private:
  void require_label(const Partition& x) const;
  TildePiece trace_of(const PhiElement& d, const Partition& x) const;

  QuestionSet q_;
};

/// Labeled axioms (labeling, semigroup, unit and null, transport and
/// combination under x⊥y|z, identity, idempotency) plus the Ψ ↔ Ψ̃
/// round trips and operation preservation, over the given pieces.
Report labeled_suite(const LabeledAlgebra& alg, std::span<const LabeledPiece> pieces);

}  // namespace ga
