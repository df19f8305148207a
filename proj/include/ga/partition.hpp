#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "ga/rational.hpp"

namespace ga {

using World = std::size_t;

/// A finite set of worlds 0..size-1.
class PossibilitySpace {
 public:
  explicit PossibilitySpace(std::size_t size);

  std::size_t size() const { return size_; }
  auto operator<=>(const PossibilitySpace&) const = default;

 private:
  std::size_t size_;
};

void require_same_space(const PossibilitySpace& a, const PossibilitySpace& b, const char* what);

/// A partition of the worlds into disjoint nonempty blocks. Blocks are kept
/// sorted internally and ordered by smallest element, so two partitions are
/// equal as values iff they are equal as mathematical partitions.
class Partition {
 public:
  /// Validates cover and disjointness, then canonicalizes.
  static Partition from_blocks(PossibilitySpace space, std::vector<std::vector<World>> blocks);
  /// labels[w] is an arbitrary tag; worlds with equal tags share a block.
  static Partition from_labels(std::span<const std::size_t> labels);
  /// The single-block partition {Ω}: the coarsest question.
  static Partition bottom(PossibilitySpace space);
  /// All singletons: the finest question.
  static Partition top(PossibilitySpace space);

  const PossibilitySpace& space() const { return space_; }
  const std::vector<std::vector<World>>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }
  std::size_t block_of(World w) const { return block_of_[w]; }
  bool same_block(World a, World b) const { return block_of_[a] == block_of_[b]; }

  bool operator==(const Partition& other) const { return blocks_ == other.blocks_; }
  auto operator<=>(const Partition& other) const { return blocks_ <=> other.blocks_; }

 private:
  Partition(PossibilitySpace space, std::vector<std::vector<World>> blocks);

  PossibilitySpace space_;
  std::vector<std::vector<World>> blocks_;
  std::vector<std::size_t> block_of_;
};

/// Dense boolean relation on the worlds of a space.
class Relation {
 public:
  explicit Relation(PossibilitySpace space);
  static Relation of(const Partition& p);

  std::size_t size() const { return n_; }
  bool at(World a, World b) const { return bits_[a * n_ + b] != 0; }
  void set(World a, World b) { bits_[a * n_ + b] = 1; }
  bool is_equivalence() const;
  /// Classes of an equivalence relation; throws PreconditionError otherwise.
  Partition classes() const;

  bool operator==(const Relation&) const = default;

 private:
  std::size_t n_;
  std::vector<unsigned char> bits_;
};

/// Question order: x <= y iff y is finer than x.
bool leq(const Partition& x, const Partition& y);
Partition join(const Partition& x, const Partition& y);
/// Finest common coarsening, by union-find over both equivalences.
Partition meet(const Partition& x, const Partition& y);
/// {(a,b) : exists c with a ≡x c ≡y b}.
Relation star_product(const Partition& x, const Partition& y);
bool commutes(const Partition& x, const Partition& y);

/// Every choice of one block per partition has a common world. Needs n >= 2.
bool independent(std::span<const Partition> ps);
/// For every block B of `given`, blocks meeting B pairwise-independently
/// meet jointly inside B. Needs n >= 1.
bool cond_independent(std::span<const Partition> ps, const Partition& given);
/// Two-partition shorthand for x ⊥ y | z.
bool cond_independent(const Partition& x, const Partition& y, const Partition& z);

/// Closure of `gens` together with top and bottom under join and meet.
/// `gens` must be nonempty and share one space.
std::vector<Partition> generated_sublattice(std::span<const Partition> gens);

/// Every partition of an n-world space, in restricted-growth-string order.
std::vector<Partition> all_partitions(PossibilitySpace space);

}  // namespace ga
