#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "doxa/checker.hpp"
#include "doxa/formula.hpp"
#include "doxa/fuzz.hpp"
#include "doxa/game.hpp"
#include "doxa/gen.hpp"
#include "doxa/parse.hpp"
#include "doxa/proofs.hpp"

using namespace doxa;

TEST_CASE("config validation") {
  GenConfig cfg;
  cfg.max_states = 0;
  REQUIRE_THROWS_AS(cfg.validate(), std::invalid_argument);
  GenConfig ok;
  ok.max_mech_entries = 0;
  ok.trials = 0;
  REQUIRE_NOTHROW(ok.validate());
}

TEST_CASE("generation is deterministic in the seed") {
  GenConfig cfg;
  cfg.seed = 42;
  Rng r1(cfg.seed), r2(cfg.seed);
  const Game g1 = gen_game(cfg, r1);
  const Game g2 = gen_game(cfg, r2);
  REQUIRE(g1.to_json().dump() == g2.to_json().dump());
  const Formula f1 = gen_formula(cfg, g1, r1);
  const Formula f2 = gen_formula(cfg, g2, r2);
  REQUIRE(f1 == f2);

  GenConfig small;
  small.trials = 5;
  small.seed = 9;
  const auto a = report_to_json(fuzz_soundness(small)).dump();
  const auto b = report_to_json(fuzz_soundness(small)).dump();
  REQUIRE(a == b);
}

TEST_CASE("bounded generation shapes") {
  GenConfig cfg;
  cfg.max_states = 1;
  cfg.max_mech_entries = 0;
  Rng rng(3);
  const Game g = gen_game(cfg, rng);
  REQUIRE(g.states().size() == 1);
  REQUIRE(g.mechanism().empty());
  REQUIRE(g.successors(g.states()[0].name, {}).empty());

  const Formula leaf = gen_formula(0, g.variables(), g.actors(), rng);
  REQUIRE(leaf.kind() == Kind::Atom);
}

TEST_CASE("generated games satisfy the structural invariants") {
  GenConfig cfg;
  Rng rng(42);
  for (int trial = 0; trial < 1000; ++trial) {
    const Game g = gen_game(cfg, rng);  // from_json re-validates every invariant
    REQUIRE(!g.actions().empty());
    REQUIRE(g.states().size() >= 1);
    for (const State& s : g.states()) {
      REQUIRE(s.trustworthy.subset_of(g.variables()));
      REQUIRE(s.values.size() == g.variables().size());
    }
  }
}

TEST_CASE("generated formulas stay inside the declared universe") {
  GenConfig cfg;
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Game g = gen_game(cfg, rng);
    const Formula f = gen_formula(cfg, g, rng);
    VarSet vars;
    ActorSet actors;
    collect_names(f, vars, actors);
    REQUIRE(vars.subset_of(g.variables()));
    REQUIRE(actors.subset_of(g.actors()));
    REQUIRE(parse(f.str()) == f);
  }
}

TEST_CASE("fuzz with zero trials yields an empty report") {
  GenConfig cfg;
  cfg.trials = 0;
  const FuzzReport report = fuzz_soundness(cfg);
  REQUIRE(report.schemas.size() == 14);
  REQUIRE(report.total_failures() == 0);
  for (const auto& s : report.schemas) REQUIRE(s.trials == 0);
}

TEST_CASE("soundness fuzzing finds no counterexamples") {
  GenConfig cfg;
  cfg.trials = 40;
  cfg.seed = 1;
  const FuzzReport report = fuzz_soundness(cfg);
  for (const auto& s : report.schemas) {
    INFO(s.schema);
    REQUIRE(s.failures.empty());
  }
}

TEST_CASE("schema filter selects one schema and rejects unknown names") {
  GenConfig cfg;
  cfg.trials = 10;
  const FuzzReport report = fuzz_soundness(cfg, std::string("Trust"));
  REQUIRE(report.schemas.size() == 1);
  REQUIRE(report.schemas[0].schema == "Trust");
  REQUIRE_THROWS_AS(fuzz_soundness(cfg, std::string("NoSuch")), std::invalid_argument);
}

TEST_CASE("theorem conclusions are semantically valid on random games") {
  // Hypothesis-free derivations prove theorems; their conclusions must hold
  // at every state of every game whose names they mention.
  GenConfig cfg;
  Rng rng(77);
  const auto proofs = builtin_proofs();
  for (int trial = 0; trial < 40; ++trial) {
    const Game g = gen_game(cfg, rng);
    const ActorSet c = gen_subset(g.actors(), rng);
    const VarSet t = gen_subset(g.variables(), rng);
    const VarSet x = gen_subset(g.variables(), rng);
    const Formula body = gen_formula(2, g.variables(), g.actors(), rng);
    for (const auto& np : proofs) {
      const Derivation d = np.instantiate(c, t, x, body);
      REQUIRE(check_derivation(d).ok);
      REQUIRE(d.hypotheses.empty());
      for (const auto& [state, value] : evaluate_all(g, d.conclusion())) {
        INFO(np.name << " at " << state << ": " << d.conclusion().str());
        REQUIRE(value);
      }
    }
  }
}

TEST_CASE("corrupted truth control finds counterexamples that replay") {
  GenConfig cfg;
  cfg.trials = 200;
  cfg.seed = 0;
  const FuzzReport report = fuzz_soundness(cfg, std::string(kCorruptedTruthSchema));
  REQUIRE(report.schemas.size() == 1);
  REQUIRE(report.total_failures() >= 1);

  const FuzzFailure& fail = report.schemas[0].failures.front();
  const Game replay = Game::load(fail.game.dump());
  REQUIRE_FALSE(satisfies(replay, fail.state, parse(fail.instance)));
}
