#include <catch2/catch_amalgamated.hpp>

#include <optional>
#include <string>
#include <vector>

#include "doxa/bundled.hpp"
#include "doxa/checker.hpp"
#include "doxa/gen.hpp"
#include "doxa/parse.hpp"

using namespace doxa;

TEST_CASE("patriot reproduction") {
  const Game g = Game::load(patriot_game_text());
  REQUIRE(satisfies(g, "w1", parse("[patriot]{x,v,t}{x,v,t} destroyed")));
  REQUIRE(satisfies(g, "w1", parse("B{x,v,t}{x,v,t} can_intercept")));
  REQUIRE(satisfies(g, "w1", parse("B{x,v,t}{x,v,t} [patriot]{x,v,t}{x,v,t} destroyed")));
  REQUIRE(satisfies(g, "w1", parse("p -> p")));
  // Without trusting t, the belief in interception is not informed: w1 itself
  // (where s1 misses) is in the class.
  REQUIRE_FALSE(satisfies(g, "w1", parse("B{x,v}{x,v,t} can_intercept")));

  const auto witness = find_strategy(g, "w1", {"patriot"}, {"x", "v", "t"}, {"x", "v", "t"},
                                     {"x", "v", "t"}, parse("destroyed"));
  REQUIRE(witness.has_value());
  REQUIRE(witness->assignment.at("patriot") == "s1");

  const auto all = evaluate_all(g, parse("B{}{}destroyed"));
  for (const auto& [state, value] : all) REQUIRE_FALSE(value);
  const auto atoms = evaluate_all(g, parse("can_intercept"));
  REQUIRE(atoms == std::map<std::string, bool>{
                       {"w1", false}, {"w2", true}, {"w3", false}, {"w4", false}});
}

TEST_CASE("check_formula reports the witness for strategy formulas") {
  const Game g = Game::load(patriot_game_text());
  const CheckResult r = check_formula(g, "w1", parse("[patriot]{x,v,t}{x,v,t} destroyed"));
  REQUIRE(r.verdict);
  REQUIRE(r.witness.has_value());
  REQUIRE(r.witness->assignment.at("patriot") == "s1");
  const CheckResult miss = check_formula(g, "w3", parse("[patriot]{x,v,t}{x,v,t} destroyed"));
  REQUIRE(miss.verdict);  // no transitions from w3: vacuously guaranteed
}

TEST_CASE("verify_profile produces mechanism counterexamples") {
  const Game g = Game::load(patriot_game_text());
  const VarSet all{"x", "v", "t"};
  const CheckResult ok =
      verify_profile(g, "w1", {"patriot"}, all, all, all, parse("destroyed"),
                     ActionProfile{{{"patriot", "s1"}}});
  REQUIRE(ok.verdict);
  const CheckResult bad =
      verify_profile(g, "w1", {"patriot"}, all, all, all, parse("destroyed"),
                     ActionProfile{{{"patriot", "s2"}}});
  REQUIRE_FALSE(bad.verdict);
  REQUIRE(bad.counterexample.has_value());
  const auto& cex = *bad.counterexample;
  REQUIRE(cex.from == "w2");
  REQUIRE(cex.to == "w4");
  // The triple is a member of M: some entry matches it.
  bool member = false;
  for (const MechanismEntry& e : g.mechanism()) {
    if (e.from != cex.from || e.to != cex.to) continue;
    bool matches = true;
    for (const auto& [actor, action] : e.profile)
      matches = matches && cex.profile.assignment.at(actor) == action;
    member = member || matches;
  }
  REQUIRE(member);
  REQUIRE_THROWS_AS(verify_profile(g, "w1", {"patriot"}, all, all, all, parse("destroyed"),
                                   ActionProfile{{{"zz", "s1"}}}),
                    EvalError);
}

TEST_CASE("single-state game and vacuous beliefs") {
  const Game g = Game::load(R"({"variables":[],"actors":["a"],"actions":["m"],
    "states":[{"name":"w","values":{},"trustworthy":[],"atoms":[]}],"mechanism":[]})");
  REQUIRE_FALSE(satisfies(g, "w", parse("B{}{}p")));
  REQUIRE(satisfies(g, "w", parse("B{}{}!p")));
}

TEST_CASE("empty coalition with unreachable trust is vacuously true") {
  // No state has t trustworthy, so no transition survives the ex ante filter
  // and the unique empty profile guarantees anything, even a formula false
  // everywhere.
  const Game g = Game::load(R"({"variables":["t"],"actors":["a"],"actions":["m"],
    "states":[{"name":"w1","values":{"t":"0"},"trustworthy":[],"atoms":[]},
              {"name":"w2","values":{"t":"0"},"trustworthy":[],"atoms":[]}],
    "mechanism":[{"from":"w1","profile":{},"to":"w2"}]})");
  REQUIRE(satisfies(g, "w1", parse("[]{t}{t}p")));
  REQUIRE(naive_satisfies(g, "w1", parse("[]{t}{t}p")));
  // With no trust requirement the transition counts and p fails.
  REQUIRE_FALSE(satisfies(g, "w1", parse("[]{}{t}p")));
}

TEST_CASE("evaluate_all on an empty-state game is empty") {
  const Game g =
      Game::load(R"({"variables":[],"actors":[],"actions":["m"],"states":[],"mechanism":[]})");
  REQUIRE(evaluate_all(g, parse("p")).empty());
}

TEST_CASE("find_strategy with the empty coalition") {
  const Game g = Game::load(patriot_game_text());
  const auto witness = find_strategy(g, "w1", {}, {}, {}, {}, parse("true"));
  REQUIRE(witness.has_value());
  REQUIRE(witness->assignment.empty());
  // The empty profile cannot force 'destroyed' from w1.
  REQUIRE_FALSE(find_strategy(g, "w1", {}, {}, {}, {}, parse("destroyed")).has_value());
}

TEST_CASE("voting game four-statement pattern") {
  const Game g = Game::load(voting5_game_text());
  const std::string w = kVotingCurrentState;
  REQUIRE(satisfies(g, w, parse("[alice]{yea;n}{yea} approved")));
  REQUIRE_FALSE(satisfies(g, w, parse("[alice]{yea;n}{} approved")));
  REQUIRE_FALSE(satisfies(g, w, parse("[alice]{;n}{yea} approved")));
  REQUIRE_FALSE(satisfies(g, w, parse("[alice]{yea;}{yea} approved")));
  REQUIRE(satisfies(g, w, parse("[alice]{nay;n}{nay} rejected")));

  const auto witness = find_strategy(g, w, {"alice"}, {"yea"}, {"n"}, {"yea"}, parse("approved"));
  REQUIRE(witness.has_value());
  REQUIRE(witness->assignment.at("alice") == "yes");
  REQUIRE_FALSE(find_strategy(g, w, {"alice"}, {}, {"n"}, {"yea"}, parse("approved")).has_value());
}

TEST_CASE("undeclared names are rejected") {
  const Game g = Game::load(patriot_game_text());
  REQUIRE_THROWS_AS(satisfies(g, "w1", parse("B{zz}{x}p")), EvalError);
  REQUIRE_THROWS_AS(satisfies(g, "w1", parse("[nobody]{x}{x}p")), EvalError);
  REQUIRE_THROWS_AS(satisfies(g, "w9", parse("p")), GameError);
  REQUIRE_THROWS_AS(find_strategy(g, "w1", {"zz"}, {}, {}, {}, parse("p")), EvalError);
  // Unknown atoms are simply false everywhere.
  REQUIRE_FALSE(satisfies(g, "w1", parse("never_mentioned")));
}

TEST_CASE("coalition enumeration budget is enforced") {
  const Game g = Game::load(R"({"variables":[],"actors":["a","b","c","d"],"actions":["m1","m2"],
    "states":[{"name":"w","values":{},"trustworthy":[],"atoms":[]}],"mechanism":[]})");
  CheckOptions opts;
  opts.coalition_budget = 8;
  REQUIRE_THROWS_AS(satisfies(g, "w", parse("[a,b,c,d]{}{}p"), opts), EvalError);
  REQUIRE_THROWS_AS(naive_satisfies(g, "w", parse("[a,b,c,d]{}{}p"), opts), EvalError);
  opts.coalition_budget = 16;
  REQUIRE_NOTHROW(satisfies(g, "w", parse("[a,b,c,d]{}{}p"), opts));
}

TEST_CASE("memoized checker agrees with the naive oracle") {
  const Game patriot = Game::load(patriot_game_text());
  const std::vector<std::string> formulas = {
      "[patriot]{x,v,t}{x,v,t} destroyed",
      "B{x,v,t}{x,v,t} can_intercept",
      "B{}{}destroyed",
      "K{x}can_intercept",
      "!B{t}{x,v}destroyed -> can_intercept | destroyed",
      "[patriot]{t;v}{x} (destroyed & !can_intercept)",
      "[]{}{} true",
  };
  for (const State& s : patriot.states())
    for (const auto& text : formulas) {
      INFO(s.name << " |= " << text);
      REQUIRE(satisfies(patriot, s.name, parse(text)) ==
              naive_satisfies(patriot, s.name, parse(text)));
    }

  GenConfig cfg;
  cfg.max_formula_depth = 3;
  Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const Game g = gen_game(cfg, rng);
    const Formula f = gen_formula(cfg, g, rng);
    const std::string w = g.states()[rng.below(g.states().size())].name;
    INFO(w << " |= " << f.str());
    REQUIRE(satisfies(g, w, f) == naive_satisfies(g, w, f));
  }
}

TEST_CASE("semantic properties on random games") {
  GenConfig cfg;
  cfg.max_formula_depth = 2;
  Rng rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    const Game g = gen_game(cfg, rng);
    const Formula f = desugar(gen_formula(cfg, g, rng));
    const VarSet t = gen_subset(g.variables(), rng);
    const VarSet x = gen_subset(g.variables(), rng);
    const VarSet t_big = t.united(gen_subset(g.variables(), rng));
    const VarSet x_big = x.united(gen_subset(g.variables(), rng));
    const ActorSet c = gen_subset(g.actors(), rng);
    const ActorSet c_big = c.united(gen_subset(g.actors(), rng));

    for (const State& s : g.states()) {
      const std::string& w = s.name;
      // negation flips
      REQUIRE(satisfies(g, w, neg(f)) == !satisfies(g, w, f));
      // Truth axiom semantics (trust-free belief is knowledge)
      if (satisfies(g, w, belief({}, x, f))) REQUIRE(satisfies(g, w, f));
      // negative introspection semantics
      if (!satisfies(g, w, belief(t, x, f)))
        REQUIRE(satisfies(g, w, belief({}, x, neg(belief(t, x, f)))));
      // monotonicity for both modalities
      if (satisfies(g, w, belief(t, x, f))) REQUIRE(satisfies(g, w, belief(t_big, x_big, f)));
      if (satisfies(g, w, strategy(c, t, t, x, f)))
        REQUIRE(satisfies(g, w, strategy(c_big, t_big, t_big, x_big, f)));
      // two-superscript collapse and K sugar
      REQUIRE(satisfies(g, w, single_strategy(c, t, x, f)) ==
              satisfies(g, w, strategy(c, t, t, x, f)));
      REQUIRE(satisfies(g, w, know(x, f)) == satisfies(g, w, belief({}, x, f)));
    }
  }
}

TEST_CASE("witness soundness on random games") {
  GenConfig cfg;
  cfg.max_formula_depth = 2;
  Rng rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    const Game g = gen_game(cfg, rng);
    const Formula goal = gen_formula(cfg, g, rng);
    const ActorSet c = gen_subset(g.actors(), rng);
    const VarSet a = gen_subset(g.variables(), rng);
    const VarSet p = gen_subset(g.variables(), rng);
    const VarSet x = gen_subset(g.variables(), rng);
    const std::string w = g.states()[rng.below(g.states().size())].name;

    const auto witness = find_strategy(g, w, c, a, p, x, goal);
    const bool holds = satisfies(g, w, strategy(c, a, p, x, desugar(goal)));
    REQUIRE(witness.has_value() == holds);
    if (witness) {
      const CheckResult re = verify_profile(g, w, c, a, p, x, goal, *witness);
      REQUIRE(re.verdict);
    }
  }
}
