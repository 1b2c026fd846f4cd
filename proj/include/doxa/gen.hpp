#ifndef DOXA_GEN_HPP
#define DOXA_GEN_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "doxa/formula.hpp"
#include "doxa/game.hpp"

namespace doxa {

struct GenConfig {
  std::uint64_t seed = 0;
  std::size_t max_states = 6;
  std::size_t max_variables = 3;
  std::size_t max_actors = 2;
  std::size_t max_actions = 3;
  std::size_t max_mech_entries = 8;
  std::size_t max_formula_depth = 4;
  std::uint64_t trials = 200;

  void validate() const {
    if (max_states < 1 || max_variables < 1 || max_actors < 1 || max_actions < 1 ||
        max_formula_depth < 1)
      throw std::invalid_argument(
          "GenConfig counts must be >= 1 (max_mech_entries and trials may be 0)");
  }
};

// mt19937_64 is specified bit-for-bit by the standard, so the corpus drawn
// from a seed is identical on every platform. No std::*_distribution here:
// those are implementation-defined.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }
  bool chance(std::uint32_t num, std::uint32_t den) { return below(den) < num; }

private:
  std::mt19937_64 eng_;
};

// splitmix64-style mixing for deriving independent streams.
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  std::uint64_t z = a;
  for (const std::uint64_t w : {b, c}) {
    z += 0x9e3779b97f4a7c15ULL + w;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
  }
  return z;
}

inline const std::vector<std::string>& fuzz_atom_pool() {
  static const std::vector<std::string> pool = {"p", "q", "r"};
  return pool;
}

inline NameSet gen_subset(const NameSet& universe, Rng& rng) {
  std::vector<std::string> out;
  for (const auto& item : universe)
    if (rng.chance(1, 2)) out.push_back(item);
  return NameSet(std::move(out));
}

inline NameSet gen_nonempty_subset(const NameSet& universe, Rng& rng) {
  NameSet s = gen_subset(universe, rng);
  if (s.empty() && !universe.empty())
    s = NameSet({universe.items()[rng.below(universe.size())]});
  return s;
}

// Random game within the config bounds: random value-tag partitions, random
// trustworthy sets, random valuation of the three-atom pool, random mechanism
// entries with per-actor wildcards (probability 1/3).
inline Game gen_game(const GenConfig& cfg, Rng& rng) {
  cfg.validate();
  const std::size_t n_states = 1 + rng.below(cfg.max_states);
  const std::size_t n_vars = 1 + rng.below(cfg.max_variables);
  const std::size_t n_actors = 1 + rng.below(cfg.max_actors);
  const std::size_t n_actions = 1 + rng.below(cfg.max_actions);
  const std::size_t n_entries = rng.below(cfg.max_mech_entries + 1);

  std::vector<std::string> vars, actors, actions, states;
  for (std::size_t i = 0; i < n_vars; ++i) vars.push_back("x" + std::to_string(i + 1));
  for (std::size_t i = 0; i < n_actors; ++i) actors.push_back("a" + std::to_string(i + 1));
  for (std::size_t i = 0; i < n_actions; ++i) actions.push_back("act" + std::to_string(i + 1));
  for (std::size_t i = 0; i < n_states; ++i) states.push_back("w" + std::to_string(i + 1));

  // Per-variable partition granularity; tags drawn from t0..t(k-1).
  std::vector<std::size_t> granularity;
  for (std::size_t v = 0; v < n_vars; ++v) granularity.push_back(1 + rng.below(n_states));

  nlohmann::ordered_json doc;
  doc["variables"] = vars;
  doc["actors"] = actors;
  doc["actions"] = actions;
  doc["states"] = nlohmann::ordered_json::array();
  for (std::size_t s = 0; s < n_states; ++s) {
    nlohmann::ordered_json sj;
    sj["name"] = states[s];
    nlohmann::ordered_json values;
    for (std::size_t v = 0; v < n_vars; ++v)
      values[vars[v]] = "t" + std::to_string(rng.below(granularity[v]));
    sj["values"] = std::move(values);
    std::vector<std::string> trustworthy;
    for (std::size_t v = 0; v < n_vars; ++v)
      if (rng.chance(1, 2)) trustworthy.push_back(vars[v]);
    sj["trustworthy"] = trustworthy;
    std::vector<std::string> atoms;
    for (const auto& p : fuzz_atom_pool())
      if (rng.chance(1, 2)) atoms.push_back(p);
    sj["atoms"] = atoms;
    doc["states"].push_back(std::move(sj));
  }
  doc["mechanism"] = nlohmann::ordered_json::array();
  for (std::size_t e = 0; e < n_entries; ++e) {
    nlohmann::ordered_json ej;
    ej["from"] = states[rng.below(n_states)];
    nlohmann::ordered_json profile = nlohmann::ordered_json::object();
    for (std::size_t a = 0; a < n_actors; ++a)
      if (!rng.chance(1, 3)) profile[actors[a]] = actions[rng.below(n_actions)];
    ej["profile"] = std::move(profile);
    ej["to"] = states[rng.below(n_states)];
    doc["mechanism"].push_back(std::move(ej));
  }
  return Game::from_json(doc);
}

// Uniform recursive sample over the five core constructors plus sugar, depth
// bounded; datasets and coalitions drawn from the given universes.
inline Formula gen_formula(std::size_t depth, const VarSet& vars, const ActorSet& actors,
                           Rng& rng) {
  if (depth == 0) return atom(fuzz_atom_pool()[rng.below(fuzz_atom_pool().size())]);
  switch (rng.below(12)) {
    case 0: return atom(fuzz_atom_pool()[rng.below(fuzz_atom_pool().size())]);
    case 1: return neg(gen_formula(depth - 1, vars, actors, rng));
    case 2: {
      const Formula l = gen_formula(depth - 1, vars, actors, rng);
      const Formula r = gen_formula(depth - 1, vars, actors, rng);
      return impl(l, r);
    }
    case 3: {
      NameSet trust = gen_subset(vars, rng);
      NameSet data = gen_subset(vars, rng);
      return belief(std::move(trust), std::move(data), gen_formula(depth - 1, vars, actors, rng));
    }
    case 4: {
      NameSet coalition = gen_subset(actors, rng);
      NameSet ante = gen_subset(vars, rng);
      NameSet post = gen_subset(vars, rng);
      NameSet data = gen_subset(vars, rng);
      return strategy(std::move(coalition), std::move(ante), std::move(post), std::move(data),
                      gen_formula(depth - 1, vars, actors, rng));
    }
    case 5: {
      const Formula l = gen_formula(depth - 1, vars, actors, rng);
      const Formula r = gen_formula(depth - 1, vars, actors, rng);
      return conj(l, r);
    }
    case 6: {
      const Formula l = gen_formula(depth - 1, vars, actors, rng);
      const Formula r = gen_formula(depth - 1, vars, actors, rng);
      return disj(l, r);
    }
    case 7: {
      const Formula l = gen_formula(depth - 1, vars, actors, rng);
      const Formula r = gen_formula(depth - 1, vars, actors, rng);
      return equiv(l, r);
    }
    case 8: {
      NameSet data = gen_subset(vars, rng);
      return know(std::move(data), gen_formula(depth - 1, vars, actors, rng));
    }
    case 9: {
      NameSet coalition = gen_subset(actors, rng);
      NameSet trust = gen_subset(vars, rng);
      NameSet data = gen_subset(vars, rng);
      return single_strategy(std::move(coalition), std::move(trust), std::move(data),
                             gen_formula(depth - 1, vars, actors, rng));
    }
    case 10: return top();
    default: return bottom();
  }
}

inline Formula gen_formula(const GenConfig& cfg, const Game& g, Rng& rng) {
  return gen_formula(cfg.max_formula_depth, g.variables(), g.actors(), rng);
}

}  // namespace doxa

#endif  // DOXA_GEN_HPP
