#ifndef DOXA_FUZZ_HPP
#define DOXA_FUZZ_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "doxa/axioms.hpp"
#include "doxa/checker.hpp"
#include "doxa/formula.hpp"
#include "doxa/gen.hpp"

namespace doxa {

struct FuzzFailure {
  std::uint64_t trial = 0;
  std::string state;
  std::string instance;
  std::string other;             // second route for equivalence checks
  nlohmann::ordered_json game;   // loadable replay file
  std::string note;
};

struct SchemaReport {
  std::string schema;
  std::uint64_t trials = 0;
  std::vector<FuzzFailure> failures;
};

struct FuzzReport {
  std::vector<SchemaReport> schemas;

  std::uint64_t total_failures() const {
    std::uint64_t n = 0;
    for (const auto& s : schemas) n += s.failures.size();
    return n;
  }
};

inline nlohmann::ordered_json report_to_json(const FuzzReport& report) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const SchemaReport& s : report.schemas) {
    nlohmann::ordered_json sj;
    sj["schema"] = s.schema;
    sj["trials"] = s.trials;
    sj["failures"] = nlohmann::ordered_json::array();
    for (const FuzzFailure& f : s.failures) {
      nlohmann::ordered_json fj;
      fj["trial"] = f.trial;
      fj["state"] = f.state;
      fj["instance"] = f.instance;
      if (!f.other.empty()) fj["other"] = f.other;
      if (!f.note.empty()) fj["note"] = f.note;
      fj["game"] = f.game;
      sj["failures"].push_back(std::move(fj));
    }
    out.push_back(std::move(sj));
  }
  return out;
}

namespace detail {

// A fuzz obligation: a formula expected to be valid, or two evaluation routes
// expected to agree at every state.
struct FuzzCase {
  Formula primary;
  std::optional<Formula> other;
  std::optional<Axiom> schema;  // set when primary must match this schema
};

struct FuzzSchema {
  std::string name;
  FuzzCase (*make)(const Game&, const GenConfig&, Rng&);
};

inline Formula fuzz_subformula(const Game& g, const GenConfig& cfg, Rng& rng) {
  const std::size_t depth = cfg.max_formula_depth < 2 ? cfg.max_formula_depth : 2;
  return desugar(gen_formula(depth, g.variables(), g.actors(), rng));
}

inline const std::vector<FuzzSchema>& fuzz_schemas() {
  static const std::vector<FuzzSchema> schemas = {
      {"Truth",
       [](const Game& g, const GenConfig& cfg, Rng& rng) {
         const Formula f = fuzz_subformula(g, cfg, rng);
         const NameSet x = gen_subset(g.variables(), rng);
         return FuzzCase{impl(belief({}, x, f), f), std::nullopt, Axiom::Truth};
       }},
      {"NegativeIntrospection",
       [](const Game& g, const GenConfig& cfg, Rng& rng) {
         const Formula f = fuzz_subformula(g, cfg, rng);
         const NameSet t = gen_subset(g.variables(), rng);
         const NameSet x = gen_subset(g.variables(), rng);
         const Formula l = neg(belief(t, x, f));
         return FuzzCase{impl(l, belief({}, x, l)), std::nullopt, Axiom::NegativeIntrospection};
       }},
      {"Distributivity",
       [](const Game& g, const GenConfig& cfg, Rng& rng) {
         const Formula f = fuzz_subformula(g, cfg, rng);
         const Formula h = fuzz_subformula(g, cfg, rng);
         const NameSet t = gen_subset(g.variables(), rng);
         const NameSet x = gen_subset(g.variables(), rng);
         return FuzzCase{impl(belief(t, x, impl(f, h)), impl(belief(t, x, f), belief(t, x, h))),
                         std::nullopt, Axiom::Distributivity};
       }},
      {"Trust",
       [](const Game& g, const GenConfig& cfg, Rng& rng) {
         const Formula f = fuzz_subformula(g, cfg, rng);
         const NameSet t = gen_subset(g.variables(), rng);
         const NameSet x = gen_subset(g.variables(), rng);
         const NameSet y = gen_subset(g.variables(), rng);
         return FuzzCase{belief(t, x, impl(belief(t, y, f), f)), std::nullopt, Axiom::Trust};
       }},
      {"MonotonicityB",
       [](const Game& g, const GenConfig& cfg, Rng& rng) {
         const Formula f = fuzz_subformula(g, cfg, rng);
         // Supersets first, subsets of them next: side conditions hold by
         // construction.
         const NameSet t_big = gen_subset(g.variables(), rng);
         const NameSet x_big = gen_subset(g.variables(), rng);
         const NameSet t = gen_subset(t_big, rng);
         const NameSet x = gen_subset(x_big, rng);
         return FuzzCase{impl(belief(t, x, f), belief(t_big, x_big, f)), std::nullopt,
                         Axiom::MonotonicityB};
       }},
      {"MonotonicityS",
       [](const Game& g, const GenConfig& cfg, Rng& rng) {
         const Formula f = fuzz_subformula(g, cfg, rng);
         const NameSet c_big = gen_subset(g.actors(), rng);
         const NameSet t_big = gen_subset(g.variables(), rng);
         const NameSet x_big = gen_subset(g.variables(), rng);
         const NameSet c = gen_subset(c_big, rng);
         const NameSet t = gen_subset(t_big, rng);
         const NameSet x = gen_subset(x_big, rng);
         return FuzzCase{impl(strategy(c, t, t, x, f), strategy(c_big, t_big, t_big, x_big, f)),
                         std::nullopt, Axiom::MonotonicityS};
       }},
      {"Cooperation",
       [](const Game& g, const GenConfig& cfg, Rng& rng) {
         const Formula f = fuzz_subformula(g, cfg, rng);
         const Formula h = fuzz_subformula(g, cfg, rng);
         const NameSet t = gen_subset(g.variables(), rng);
         const NameSet x = gen_subset(g.variables(), rng);
         const NameSet c = gen_subset(g.actors(), rng);
         std::vector<std::string> rest;
         for (const auto& a : g.actors())
           if (!c.contains(a)) rest.push_back(a);
         const NameSet d = gen_subset(NameSet(rest), rng);
         return FuzzCase{impl(strategy(c, t, t, x, impl(f, h)),
                              impl(strategy(d, t, t, x, f),
                                   strategy(c.united(d), t, t, x, h))),
                         std::nullopt, Axiom::Cooperation};
       }},
      {"StrategicIntrospection",
       [](const Game& g, const GenConfig& cfg, Rng& rng) {
         const Formula f = fuzz_subformula(g, cfg, rng);
         const NameSet c = gen_subset(g.actors(), rng);
         const NameSet t = gen_subset(g.variables(), rng);
         const NameSet x = gen_subset(g.variables(), rng);
         const Formula sigma = strategy(c, t, t, x, f);
         const Formula beta = belief(t, x, sigma);
         return FuzzCase{neg(impl(impl(sigma, beta), neg(impl(beta, sigma)))), std::nullopt,
                         Axiom::StrategicIntrospection};
       }},
      {"BeliefInUnavoidability",
       [](const Game& g, const GenConfig& cfg, Rng& rng) {
         const Formula f = fuzz_subformula(g, cfg, rng);
         const NameSet t = gen_subset(g.variables(), rng);
         const NameSet x = gen_subset(g.variables(), rng);
         const NameSet y = gen_subset(g.variables(), rng);
         return FuzzCase{impl(belief(t, x, strategy({}, t, t, y, f)), strategy({}, t, t, x, f)),
                         std::nullopt, Axiom::BeliefInUnavoidability};
       }},
      {"PublicBelief",
       [](const Game& g, const GenConfig& cfg, Rng& rng) {
         const Formula f = fuzz_subformula(g, cfg, rng);
         const NameSet t = gen_subset(g.variables(), rng);
         return FuzzCase{impl(belief(t, {}, f), strategy({}, t, t, {}, f)), std::nullopt,
                         Axiom::PublicBelief};
       }},
      {"GeneralizedPublicBelief",
       [](const Game& g, const GenConfig& cfg, Rng& rng) {
         const Formula f = fuzz_subformula(g, cfg, rng);
         const NameSet t = gen_subset(g.variables(), rng);
         return FuzzCase{impl(belief(t, {}, f), strategy({}, {}, t, {}, f)), std::nullopt,
                         Axiom::GeneralizedPublicBelief};
       }},
      {"PositiveIntrospection",
       [](const Game& g, const GenConfig& cfg, Rng& rng) {
         const Formula f = fuzz_subformula(g, cfg, rng);
         const NameSet t = gen_subset(g.variables(), rng);
         const NameSet x = gen_subset(g.variables(), rng);
         return FuzzCase{impl(belief(t, x, f), belief({}, x, belief(t, x, f))), std::nullopt,
                         std::nullopt};
       }},
      {"StrategyTrustCollapse",
       [](const Game& g, const GenConfig& cfg, Rng& rng) {
         const Formula f = fuzz_subformula(g, cfg, rng);
         const NameSet c = gen_subset(g.actors(), rng);
         const NameSet t = gen_subset(g.variables(), rng);
         const NameSet x = gen_subset(g.variables(), rng);
         return FuzzCase{desugar(single_strategy(c, t, x, f)), strategy(c, t, t, x, f),
                         std::nullopt};
       }},
      {"KnowledgeBeliefCollapse",
       [](const Game& g, const GenConfig& cfg, Rng& rng) {
         const Formula f = fuzz_subformula(g, cfg, rng);
         const NameSet x = gen_subset(g.variables(), rng);
         return FuzzCase{desugar(know(x, f)), belief({}, x, f), std::nullopt};
       }},
  };
  return schemas;
}

// Negative control: the Truth shape with a forced nonempty trust superscript,
// which the semantics does not validate.
inline FuzzCase make_corrupted_truth(const Game& g, const GenConfig& cfg, Rng& rng) {
  const Formula f = fuzz_subformula(g, cfg, rng);
  const NameSet t = gen_nonempty_subset(g.variables(), rng);
  const NameSet x = gen_subset(g.variables(), rng);
  return FuzzCase{impl(belief(t, x, f), f), std::nullopt, std::nullopt};
}

}  // namespace detail

inline std::vector<std::string> fuzz_schema_names() {
  std::vector<std::string> names;
  for (const auto& s : detail::fuzz_schemas()) names.push_back(s.name);
  return names;
}

inline constexpr const char* kCorruptedTruthSchema = "CorruptedTruth";

// Instantiates every schema over random games and checks it at every state.
// The report is deterministic in the seed; per-(schema, trial) streams are
// independent, so a --schema run reproduces the same trials as a full run.
inline FuzzReport fuzz_soundness(const GenConfig& cfg,
                                 const std::optional<std::string>& only_schema = std::nullopt) {
  cfg.validate();
  const auto& all = detail::fuzz_schemas();

  struct Selected {
    std::string name;
    detail::FuzzCase (*make)(const Game&, const GenConfig&, Rng&);
    std::uint64_t stream;  // per-schema stream id, stable across filtered runs
  };
  std::vector<Selected> selected;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (only_schema && *only_schema != all[i].name) continue;
    selected.push_back({all[i].name, all[i].make, i});
  }
  if (only_schema && *only_schema == kCorruptedTruthSchema)
    selected.push_back({kCorruptedTruthSchema, detail::make_corrupted_truth, all.size()});
  if (only_schema && selected.empty())
    throw std::invalid_argument("unknown fuzz schema: " + *only_schema);

  FuzzReport report;
  for (const Selected& schema : selected) {
    SchemaReport sr;
    sr.schema = schema.name;
    sr.trials = cfg.trials;
    for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
      Rng rng(mix_seed(cfg.seed, schema.stream, trial));
      const Game game = gen_game(cfg, rng);
      const detail::FuzzCase fc = schema.make(game, cfg, rng);

      if (fc.schema && !match_axiom(fc.primary, *fc.schema)) {
        FuzzFailure fail;
        fail.trial = trial;
        fail.instance = fc.primary.str();
        fail.note = "generated instance does not match its own schema";
        fail.game = game.to_json();
        sr.failures.push_back(std::move(fail));
        continue;
      }

      if (fc.other) {
        const auto lhs = evaluate_all(game, fc.primary);
        const auto rhs = evaluate_all(game, *fc.other);
        for (const auto& [state, value] : lhs) {
          if (value == rhs.at(state)) continue;
          FuzzFailure fail;
          fail.trial = trial;
          fail.state = state;
          fail.instance = fc.primary.str();
          fail.other = fc.other->str();
          fail.note = "evaluation routes disagree";
          fail.game = game.to_json();
          sr.failures.push_back(std::move(fail));
        }
      } else {
        for (const auto& [state, value] : evaluate_all(game, fc.primary)) {
          if (value) continue;
          FuzzFailure fail;
          fail.trial = trial;
          fail.state = state;
          fail.instance = fc.primary.str();
          fail.game = game.to_json();
          sr.failures.push_back(std::move(fail));
        }
      }
    }
    report.schemas.push_back(std::move(sr));
  }
  return report;
}

}  // namespace doxa

#endif  // DOXA_FUZZ_HPP
