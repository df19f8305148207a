#include "ga/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace ga {

PossibilitySpace::PossibilitySpace(std::size_t size) : size_(size) {
  if (size == 0) throw PreconditionError("possibility space must have at least one world");
}

void require_same_space(const PossibilitySpace& a, const PossibilitySpace& b, const char* what) {
  if (a != b) {
    throw SpaceMismatch(std::string(what) + ": spaces of size " + std::to_string(a.size()) + " and " +
                        std::to_string(b.size()) + " are incompatible");
  }
}

Partition::Partition(PossibilitySpace space, std::vector<std::vector<World>> blocks)
    : space_(space), blocks_(std::move(blocks)), block_of_(space.size()) {
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    for (World w : blocks_[b]) block_of_[w] = b;
  }
}

Partition Partition::from_blocks(PossibilitySpace space, std::vector<std::vector<World>> blocks) {
  std::vector<bool> seen(space.size(), false);
  for (auto& block : blocks) {
    if (block.empty()) throw PreconditionError("partition blocks must be nonempty");
    for (World w : block) {
      if (w >= space.size()) throw PreconditionError("world index " + std::to_string(w) + " out of range");
      if (seen[w]) throw PreconditionError("world " + std::to_string(w) + " appears in more than one block");
      seen[w] = true;
    }
    std::sort(block.begin(), block.end());
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw PreconditionError("partition blocks do not cover the space");
  }
  std::sort(blocks.begin(), blocks.end());
  return Partition(space, std::move(blocks));
}

Partition Partition::from_labels(std::span<const std::size_t> labels) {
  PossibilitySpace space(labels.size());
  std::map<std::size_t, std::size_t> index;
  std::vector<std::vector<World>> blocks;
  for (World w = 0; w < labels.size(); ++w) {
    auto [it, fresh] = index.emplace(labels[w], blocks.size());
    if (fresh) blocks.emplace_back();
    blocks[it->second].push_back(w);
  }
  // First-appearance order is already by smallest element.
  return Partition(space, std::move(blocks));
}

Partition Partition::bottom(PossibilitySpace space) {
  std::vector<World> all(space.size());
  std::iota(all.begin(), all.end(), World{0});
  return Partition(space, {all});
}

Partition Partition::top(PossibilitySpace space) {
  std::vector<std::vector<World>> blocks;
  for (World w = 0; w < space.size(); ++w) blocks.push_back({w});
  return Partition(space, std::move(blocks));
}

Relation::Relation(PossibilitySpace space) : n_(space.size()), bits_(n_ * n_, 0) {}

Relation Relation::of(const Partition& p) {
  Relation r(p.space());
  for (const auto& block : p.blocks()) {
    for (World a : block) {
      for (World b : block) r.set(a, b);
    }
  }
  return r;
}

bool Relation::is_equivalence() const {
  for (World a = 0; a < n_; ++a) {
    if (!at(a, a)) return false;
    for (World b = 0; b < n_; ++b) {
      if (at(a, b) != at(b, a)) return false;
      if (!at(a, b)) continue;
      for (World c = 0; c < n_; ++c) {
        if (at(b, c) && !at(a, c)) return false;
      }
    }
  }
  return true;
}

Partition Relation::classes() const {
  if (!is_equivalence()) throw PreconditionError("relation is not an equivalence relation");
  std::vector<std::size_t> labels(n_);
  for (World a = 0; a < n_; ++a) {
    World first = 0;
    while (!at(a, first)) ++first;
    labels[a] = first;
  }
  return Partition::from_labels(labels);
}

bool leq(const Partition& x, const Partition& y) {
  require_same_space(x.space(), y.space(), "leq");
  for (const auto& block : y.blocks()) {
    const auto b = x.block_of(block.front());
    for (World w : block) {
      if (x.block_of(w) != b) return false;
    }
  }
  return true;
}

Partition join(const Partition& x, const Partition& y) {
  require_same_space(x.space(), y.space(), "join");
  const std::size_t n = x.space().size();
  std::vector<std::size_t> labels(n);
  for (World w = 0; w < n; ++w) labels[w] = x.block_of(w) * y.block_count() + y.block_of(w);
  return Partition::from_labels(labels);
}

Partition meet(const Partition& x, const Partition& y) {
  require_same_space(x.space(), y.space(), "meet");
  const std::size_t n = x.space().size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto unite = [&](const Partition& p) {
    for (const auto& block : p.blocks()) {
      for (World w : block) parent[find(w)] = find(block.front());
    }
  };
  unite(x);
  unite(y);
  std::vector<std::size_t> labels(n);
  for (World w = 0; w < n; ++w) labels[w] = find(w);
  return Partition::from_labels(labels);
}

Relation star_product(const Partition& x, const Partition& y) {
  require_same_space(x.space(), y.space(), "star_product");
  Relation r(x.space());
  const std::size_t n = x.space().size();
  for (World a = 0; a < n; ++a) {
    for (World mid : x.blocks()[x.block_of(a)]) {
      for (World b : y.blocks()[y.block_of(mid)]) r.set(a, b);
    }
  }
  return r;
}

bool commutes(const Partition& x, const Partition& y) { return star_product(x, y) == star_product(y, x); }

namespace {

// Odometer over one block choice per partition, restricted to blocks that
// meet `within`. Returns false as soon as some choice has empty intersection.
bool all_choices_meet(std::span<const Partition> ps, const std::vector<World>& within) {
  std::vector<std::vector<std::size_t>> candidates(ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i) {
    std::vector<bool> hit(ps[i].block_count(), false);
    for (World w : within) hit[ps[i].block_of(w)] = true;
    for (std::size_t b = 0; b < hit.size(); ++b) {
      if (hit[b]) candidates[i].push_back(b);
    }
  }
  std::vector<std::size_t> pick(ps.size(), 0);
  while (true) {
    const bool met = std::any_of(within.begin(), within.end(), [&](World w) {
      for (std::size_t i = 0; i < ps.size(); ++i) {
        if (ps[i].block_of(w) != candidates[i][pick[i]]) return false;
      }
      return true;
    });
    if (!met) return false;
    std::size_t i = 0;
    while (i < ps.size() && ++pick[i] == candidates[i].size()) pick[i++] = 0;
    if (i == ps.size()) return true;
  }
}

void require_all_same(std::span<const Partition> ps, const PossibilitySpace& space, const char* what) {
  for (const auto& p : ps) require_same_space(p.space(), space, what);
}

}  // namespace

bool independent(std::span<const Partition> ps) {
  if (ps.size() < 2) throw PreconditionError("independent: need at least two partitions");
  require_all_same(ps, ps.front().space(), "independent");
  return all_choices_meet(ps, Partition::bottom(ps.front().space()).blocks().front());
}

bool cond_independent(std::span<const Partition> ps, const Partition& given) {
  if (ps.empty()) throw PreconditionError("cond_independent: need at least one partition");
  require_all_same(ps, given.space(), "cond_independent");
  return std::all_of(given.blocks().begin(), given.blocks().end(),
                     [&](const std::vector<World>& block) { return all_choices_meet(ps, block); });
}

bool cond_independent(const Partition& x, const Partition& y, const Partition& z) {
  const Partition ps[] = {x, y};
  return cond_independent(ps, z);
}

std::vector<Partition> generated_sublattice(std::span<const Partition> gens) {
  if (gens.empty()) throw PreconditionError("generated_sublattice: no generators");
  const auto space = gens.front().space();
  std::set<Partition> seen{Partition::top(space), Partition::bottom(space)};
  for (const auto& g : gens) {
    require_same_space(g.space(), space, "generated_sublattice");
    seen.insert(g);
  }
  std::vector<Partition> out(seen.begin(), seen.end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      for (auto c : {join(out[i], out[j]), meet(out[i], out[j])}) {
        if (seen.insert(c).second) out.push_back(std::move(c));
      }
    }
  }
  return out;
}

std::vector<Partition> all_partitions(PossibilitySpace space) {
  const std::size_t n = space.size();
  std::vector<Partition> out;
  std::vector<std::size_t> rgs(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t max_label) {
    if (i == n) {
      out.push_back(Partition::from_labels(rgs));
      return;
    }
    for (std::size_t l = 0; l <= max_label + 1; ++l) {
      rgs[i] = l;
      rec(i + 1, std::max(max_label, l));
    }
  };
  rgs[0] = 0;
  rec(1, 0);
  return out;
}

}  // namespace ga
