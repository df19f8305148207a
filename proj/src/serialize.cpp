#include "ga/serialize.hpp"

#include <string>

namespace ga::json_io {

namespace {

void expect(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return parse_rational(j.dump());
  throw std::invalid_argument("expected a rational as a string \"p/q\" or an integer, got " + j.dump());
}

json to_json(const Partition& p) { return p.blocks(); }

Partition partition_from_json(PossibilitySpace space, const json& j) {
  expect(j.is_array(), "partition must be an array of blocks");
  std::vector<std::vector<World>> blocks;
  for (const auto& b : j) {
    expect(b.is_array(), "partition block must be an array of world indices");
    std::vector<World> block;
    for (const auto& w : b) {
      expect(w.is_number_unsigned(), "world index must be a nonnegative integer");
      block.push_back(w.get<World>());
    }
    blocks.push_back(std::move(block));
  }
  return Partition::from_blocks(space, std::move(blocks));
}

json to_json(const Gamble& f) {
  json out = json::array();
  for (const auto& q : f.values()) out.push_back(to_json(q));
  return out;
}

Gamble gamble_from_json(PossibilitySpace space, const json& j) {
  expect(j.is_array(), "gamble must be an array of rationals");
  expect(j.size() == space.size(), "gamble has " + std::to_string(j.size()) + " values, space has " +
                                       std::to_string(space.size()) + " worlds");
  Vec v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return Gamble(std::move(v));
}

std::vector<Gamble> gambles_from_json(PossibilitySpace space, const json& j) {
  expect(j.is_array(), "expected an array of gambles");
  std::vector<Gamble> out;
  for (const auto& g : j) out.push_back(gamble_from_json(space, g));
  return out;
}

json to_json(const ConeV& c) {
  json gens = json::array();
  for (const auto& g : c.generators()) gens.push_back(to_json(g));
  return {{"generators", gens}};
}

ConeV cone_from_json(PossibilitySpace space, const json& j) {
  expect(j.is_object() && j.contains("generators"), "cone must be {\"generators\": [...]}");
  return ConeV(space, gambles_from_json(space, j.at("generators")));
}

json to_json(const PhiElement& p) {
  if (p.is_top()) return {{"kind", "top"}};
  json gens = json::array();
  for (const auto& g : p.extra_generators()) gens.push_back(to_json(g));
  return {{"kind", "coherent"}, {"generators", gens}};
}

PhiElement phi_from_json(PossibilitySpace space, const json& j) {
  expect(j.is_object() && j.contains("kind"), "element must carry a \"kind\"");
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "top") return PhiElement::top(space);
  expect(kind == "coherent", "unknown element kind '" + kind + "'");
  auto gens = gambles_from_json(space, j.at("generators"));
  for (World w = 0; w < space.size(); ++w) gens.push_back(Gamble::unit(space, w));
  return PhiElement::coherent(ConeV(space, std::move(gens)));
}

}  // namespace ga::json_io
