// ga: batch front end for the desirable-gambles information algebra.
//
// Reads a JSON problem file, runs one command, and writes the result to
// stdout (or --out). Exit codes: 0 success, 1 law failures, 2 bad input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ga/algebra.hpp"
#include "ga/atoms.hpp"
#include "ga/labeled.hpp"
#include "ga/multivariate.hpp"
#include "ga/random.hpp"
#include "ga/serialize.hpp"

namespace {

using nlohmann::json;
using namespace ga;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t max_dim() {
  const char* env = std::getenv("GA_MAX_DIM");
  if (!env) return 12;
  try {
    return std::stoul(env);
  } catch (const std::exception&) {
    throw InputError(std::string("GA_MAX_DIM is not a number: ") + env);
  }
}

json parse_json(const std::string& text, const std::string& where) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(where + ": byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

class Problem {
 public:
  Problem(const std::string& path) : space_(1) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    doc_ = parse_json(buf.str(), path);
    if (!doc_.is_object()) throw InputError(path + ": top level must be an object");

    if (doc_.contains("variables")) {
      const auto& v = doc_["variables"];
      if (!v.is_object() || !v.contains("domains")) throw InputError("variables needs a \"domains\" array");
      vars_.emplace(v["domains"].get<std::vector<std::size_t>>());
      space_ = vars_->space();
      if (doc_.contains("space") && doc_["space"].get<std::size_t>() != space_.size()) {
        throw InputError("space size disagrees with the variable domains");
      }
    } else if (doc_.contains("space")) {
      space_ = PossibilitySpace(doc_["space"].get<std::size_t>());
    } else {
      throw InputError(path + ": needs \"space\" or \"variables\"");
    }
    if (space_.size() > max_dim()) {
      throw InputError("space has " + std::to_string(space_.size()) + " worlds, above GA_MAX_DIM = " +
                       std::to_string(max_dim()));
    }
    for (auto& [name, blocks] : section("partitions").items()) {
      partitions_.emplace(name, json_io::partition_from_json(space_, blocks));
    }
  }

  const PossibilitySpace& space() const { return space_; }
  const std::optional<VariableSystem>& variables() const { return vars_; }

  /// A named partition, "top", "bottom", "vars:i,j,..." for a cylinder, or
  /// an inline block list.
  Partition partition(const std::string& ref) const {
    if (auto it = partitions_.find(ref); it != partitions_.end()) return it->second;
    if (ref == "top") return Partition::top(space_);
    if (ref == "bottom") return Partition::bottom(space_);
    if (ref.rfind("vars:", 0) == 0) {
      if (!vars_) throw InputError("cylinder reference without a variable system: " + ref);
      std::vector<std::size_t> ids;
      std::stringstream ss(ref.substr(5));
      for (std::string tok; std::getline(ss, tok, ',');) {
        if (!tok.empty()) ids.push_back(std::stoul(tok));
      }
      return vars_->cylinder(ids);
    }
    if (!ref.empty() && ref.front() == '[') return json_io::partition_from_json(space_, parse_json(ref, "argument"));
    throw InputError("unknown partition: " + ref);
  }

  /// A named gamble set, a named single gamble, or an inline list.
  std::vector<Gamble> gamble_set(const std::string& ref) const {
    const auto& sets = section("sets");
    if (sets.contains(ref)) return json_io::gambles_from_json(space_, sets[ref]);
    const auto& gambles = section("gambles");
    if (gambles.contains(ref)) return {json_io::gamble_from_json(space_, gambles[ref])};
    if (!ref.empty() && ref.front() == '[') {
      const auto j = parse_json(ref, "argument");
      if (!j.empty() && j.front().is_array()) return json_io::gambles_from_json(space_, j);
      return {json_io::gamble_from_json(space_, j)};
    }
    throw InputError("unknown gamble set: " + ref);
  }

  Gamble gamble(const std::string& ref) const {
    const auto& gambles = section("gambles");
    if (gambles.contains(ref)) return json_io::gamble_from_json(space_, gambles[ref]);
    if (!ref.empty() && ref.front() == '[') return json_io::gamble_from_json(space_, parse_json(ref, "argument"));
    throw InputError("unknown gamble: " + ref);
  }

  /// Join closure of the named partitions, the cylinders, top and bottom,
  /// or of "questions" when given.
  QuestionSet questions() const {
    std::vector<Partition> gens{Partition::top(space_), Partition::bottom(space_)};
    if (doc_.contains("questions")) {
      for (const auto& ref : doc_["questions"]) gens.push_back(partition(ref.get<std::string>()));
    } else {
      for (const auto& [name, p] : partitions_) gens.push_back(p);
      if (vars_) gens.insert(gens.end(), vars_->cylinders().begin(), vars_->cylinders().end());
    }
    return QuestionSet::join_closure(space_, std::move(gens));
  }

  /// {"label": partition ref or blocks, "content": set ref or gamble list}.
  LabeledPiece piece(const LabeledAlgebra& alg, const std::string& ref) const {
    const auto& pieces = section("pieces");
    if (!pieces.contains(ref)) throw InputError("unknown piece: " + ref);
    const auto& j = pieces[ref];
    if (!j.contains("label") || !j.contains("content")) throw InputError("piece " + ref + " needs label and content");
    const auto label = j["label"].is_string() ? partition(j["label"].get<std::string>())
                                              : json_io::partition_from_json(space_, j["label"]);
    const auto content = j["content"].is_string() ? gamble_set(j["content"].get<std::string>())
                                                  : json_io::gambles_from_json(space_, j["content"]);
    return alg.piece(closure(space_, content), label);
  }

 private:
  const json& section(const char* key) const {
    static const json empty = json::object();
    if (!doc_.contains(key)) return empty;
    if (!doc_[key].is_object()) throw InputError(std::string("\"") + key + "\" must be an object");
    return doc_[key];
  }

  json doc_;
  PossibilitySpace space_;
  std::optional<VariableSystem> vars_;
  std::map<std::string, Partition> partitions_;
};

json piece_json(const LabeledPiece& p) {
  return json{{"label", json_io::to_json(p.label())}, {"content", json_io::to_json(p.content())}};
}

Report run_axioms(const Problem& prob, std::uint64_t seed, std::size_t count) {
  Sampler rng(seed);
  const auto space = prob.space();
  const auto q = prob.questions();

  std::vector<std::vector<Gamble>> sets;
  for (std::size_t i = 0; i < count; ++i) sets.push_back(rng.gamble_set(space, 6));
  Report report = closure_suite(sets);

  std::vector<PhiElement> corpus;
  for (std::size_t i = 0; i < count; ++i) corpus.push_back(rng.coherent(space, 1 + rng.index(3)));
  report.append(axiom_suite(q, corpus));

  const LabeledAlgebra alg(q);
  std::vector<LabeledPiece> pieces;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& x = q[i % q.size()];
    pieces.push_back(alg.piece(extract(x, corpus[i]), x));
  }
  report.append(labeled_suite(alg, pieces));

  if (prob.variables()) report.append(commutative_suite(*prob.variables(), corpus));

  std::vector<MaximalSet> ms;
  std::vector<Gamble> gambles;
  for (std::size_t i = 0; i < count; ++i) {
    ms.emplace_back(rng.chain(space.size(), 1 + rng.index(2)));
    gambles.push_back(rng.nonzero_gamble(space));
  }
  report.append(atoms_suite(ms, corpus, gambles, q.partitions()));
  return report;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact information algebra of coherent sets of desirable gambles"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string space_file;
  std::string out_file;
  std::uint64_t seed = 0;
  std::size_t count = 50;
  app.add_option("--space-file", space_file, "JSON problem file")->required();
  app.add_option("--out", out_file, "write output here instead of stdout");
  app.add_option("--seed", seed, "random seed for axioms");
  app.add_option("--count", count, "random elements per suite for axioms");

  std::vector<std::string> args;
  std::string given;
  auto add = [&](const char* name, const char* help, std::size_t n) {
    auto* sub = app.add_subcommand(name, help);
    auto* opt = sub->add_option("args", args)->required()->allow_extra_args(false);
    if (n) opt->expected(static_cast<int>(n));
    return sub;
  };
  auto* coherence = add("coherence", "coherent or contradictory", 1);
  auto* combine_cmd = add("combine", "closure of the union of two sets", 2);
  auto* extract_cmd = add("extract", "extract a set to a partition", 2);
  auto* transport_cmd = add("transport", "transport a labeled piece", 2);
  auto* independence = app.add_subcommand("independence", "(conditional) independence of partitions");
  independence->add_option("parts", args)->required()->allow_extra_args(false)->expected(2, 64);
  independence->add_option("--given", given, "conditioning partition");
  auto* commutes_cmd = add("commutes", "whether two partitions commute", 2);
  auto* atoms = app.add_subcommand("atoms", "maximal sets");
  atoms->require_subcommand(1);
  auto* separate = atoms->add_subcommand("separate", "maximal chain containing a set and excluding a gamble");
  separate->add_option("args", args)->required()->allow_extra_args(false)->expected(2);
  auto* axioms = app.add_subcommand("axioms", "run every law suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::ofstream file;
  if (!out_file.empty()) {
    file.open(out_file);
    if (!file) {
      std::cerr << "cannot write " << out_file << "\n";
      return 2;
    }
  }
  std::ostream& out = out_file.empty() ? std::cout : file;

  try {
    const Problem prob(space_file);
    const auto space = prob.space();
    if (*coherence) {
      out << (closure(space, prob.gamble_set(args[0])).is_top() ? "contradictory" : "coherent") << "\n";
    } else if (*combine_cmd) {
      const auto a = closure(space, prob.gamble_set(args[0]));
      const auto b = closure(space, prob.gamble_set(args[1]));
      out << json_io::to_json(ga::combine(a, b)).dump() << "\n";
    } else if (*extract_cmd) {
      out << json_io::to_json(extract(prob.partition(args[0]), closure(space, prob.gamble_set(args[1])))).dump() << "\n";
    } else if (*transport_cmd) {
      const LabeledAlgebra alg(prob.questions());
      out << piece_json(alg.transport(prob.partition(args[0]), prob.piece(alg, args[1]))).dump() << "\n";
    } else if (*independence) {
      std::vector<Partition> ps;
      for (const auto& a : args) ps.push_back(prob.partition(a));
      const bool ind = given.empty() ? ga::independent(ps) : cond_independent(ps, prob.partition(given));
      out << (ind ? "independent" : "dependent") << "\n";
    } else if (*commutes_cmd) {
      out << (commutes(prob.partition(args[0]), prob.partition(args[1])) ? "commuting" : "non-commuting") << "\n";
    } else if (*separate) {
      const auto p = closure(space, prob.gamble_set(args[0]));
      const auto m = extend_to_maximal(p, prob.gamble(args[1]));
      json chain = json::array();
      for (const auto& pmf : m.chain()) {
        json row = json::array();
        for (const auto& v : pmf) row.push_back(json_io::to_json(v));
        chain.push_back(row);
      }
      out << json{{"chain", chain}}.dump() << "\n";
    } else if (*axioms) {
      const auto report = run_axioms(prob, seed, count);
      out << report.to_json_lines();
      return report.all_pass() ? 0 : 1;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: malformed problem file: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
