#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>
#include <vector>

#include "doxa/bundled.hpp"
#include "doxa/game.hpp"
#include "doxa/gen.hpp"

using namespace doxa;

namespace {

Game tiny_game(const std::string& mechanism) {
  return Game::load(R"({"variables":["x"],"actors":["a"],"actions":["m1","m2"],
    "states":[{"name":"w1","values":{"x":"0"},"trustworthy":["x"],"atoms":[]},
              {"name":"w2","values":{"x":"1"},"trustworthy":[],"atoms":[]}],
    "mechanism":[)" + mechanism + "]}");
}

}  // namespace

TEST_CASE("patriot game loads and answers indistinguishability") {
  const Game g = Game::load(patriot_game_text());
  REQUIRE(g.states().size() == 4);
  REQUIRE(g.variables() == NameSet{"t", "v", "x"});
  REQUIRE(g.indist("w1", "w2", {"x", "v", "t"}));
  REQUIRE_FALSE(g.indist("w1", "w3", {"x"}));
  for (const State& s : g.states()) {
    REQUIRE(g.indist(s.name, s.name, {"x", "v", "t"}));
    for (const State& u : g.states()) REQUIRE(g.indist(s.name, u.name, {}));
  }
  REQUIRE_THROWS_AS(g.indist("w1", "nope", {"x"}), GameError);
  REQUIRE_THROWS_AS(g.indist("w1", "w2", {"zz"}), GameError);
}

TEST_CASE("load rejects malformed documents") {
  REQUIRE_THROWS_AS(Game::load("not json"), GameError);
  // empty action set
  REQUIRE_THROWS_WITH(
      Game::load(R"({"variables":[],"actors":[],"actions":[],"states":[],"mechanism":[]})"),
      Catch::Matchers::ContainsSubstring("nonempty"));
  // mechanism referencing an undeclared state
  REQUIRE_THROWS_WITH(tiny_game(R"({"from":"w9","profile":{},"to":"w1"})"),
                      Catch::Matchers::ContainsSubstring("w9"));
  // duplicate state name
  REQUIRE_THROWS_WITH(
      Game::load(R"({"variables":[],"actors":[],"actions":["m"],"mechanism":[],
        "states":[{"name":"w","values":{},"trustworthy":[],"atoms":[]},
                  {"name":"w","values":{},"trustworthy":[],"atoms":[]}]})"),
      Catch::Matchers::ContainsSubstring("duplicate state"));
  // missing field
  REQUIRE_THROWS_WITH(Game::load(R"({"variables":[],"actors":[],"actions":["m"],"states":[]})"),
                      Catch::Matchers::ContainsSubstring("mechanism"));
  // unknown key
  REQUIRE_THROWS_WITH(
      Game::load(
          R"({"variables":[],"actors":[],"actions":["m"],"states":[],"mechanism":[],"extra":1})"),
      Catch::Matchers::ContainsSubstring("unknown key"));
  // value for an undeclared variable
  REQUIRE_THROWS_AS(
      Game::load(R"({"variables":["x"],"actors":[],"actions":["m"],"mechanism":[],
        "states":[{"name":"w","values":{"x":"0","y":"0"},"trustworthy":[],"atoms":[]}]})"),
      GameError);
  // missing value for a declared variable
  REQUIRE_THROWS_AS(
      Game::load(R"({"variables":["x"],"actors":[],"actions":["m"],"mechanism":[],
        "states":[{"name":"w","values":{},"trustworthy":[],"atoms":[]}]})"),
      GameError);
  // trustworthy outside the universe
  REQUIRE_THROWS_AS(
      Game::load(R"({"variables":["x"],"actors":[],"actions":["m"],"mechanism":[],
        "states":[{"name":"w","values":{"x":"0"},"trustworthy":["y"],"atoms":[]}]})"),
      GameError);
  // duplicate declarations
  REQUIRE_THROWS_AS(
      Game::load(R"({"variables":["x","x"],"actors":[],"actions":["m"],"states":[],"mechanism":[]})"),
      GameError);
  // undeclared actor / action in a profile
  REQUIRE_THROWS_AS(tiny_game(R"({"from":"w1","profile":{"zz":"m1"},"to":"w2"})"), GameError);
  REQUIRE_THROWS_AS(tiny_game(R"({"from":"w1","profile":{"a":"zz"},"to":"w2"})"), GameError);
}

TEST_CASE("empty state set is a valid game") {
  const Game g =
      Game::load(R"({"variables":[],"actors":[],"actions":["m"],"states":[],"mechanism":[]})");
  REQUIRE(g.states().empty());
}

TEST_CASE("successors expand wildcards against the constraint") {
  const Game patriot = Game::load(patriot_game_text());
  const auto hit = patriot.successors("w2", ActionProfile{{{"patriot", "s1"}}});
  REQUIRE(hit.size() == 1);
  REQUIRE(hit[0].second == "w3");
  REQUIRE(hit[0].first.assignment.at("patriot") == "s1");

  // termination: no matching mechanism entries
  const Game stuck = tiny_game("");
  REQUIRE(stuck.successors("w1", {}).empty());

  // one wildcard entry, two actions, one actor: two complete profiles
  const Game wild = tiny_game(R"({"from":"w1","profile":{},"to":"w2"})");
  const auto out = wild.successors("w1", {});
  REQUIRE(out.size() == 2);
  std::set<std::string> acts;
  for (const auto& [delta, to] : out) {
    REQUIRE(to == "w2");
    acts.insert(delta.assignment.at("a"));
  }
  REQUIRE(acts == std::set<std::string>{"m1", "m2"});

  // "*" is an explicit wildcard
  const Game star = tiny_game(R"({"from":"w1","profile":{"a":"*"},"to":"w2"})");
  REQUIRE(star.successors("w1", {}).size() == 2);

  REQUIRE_THROWS_AS(wild.successors("nope", {}), GameError);
  REQUIRE_THROWS_AS(wild.successors("w1", ActionProfile{{{"zz", "m1"}}}), GameError);
}

TEST_CASE("indistinguishability is an equivalence relation on random games") {
  GenConfig cfg;
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Game g = gen_game(cfg, rng);
    const std::size_t n = g.states().size();
    for (const auto& var : g.variables()) {
      const VarSet x{var};
      for (std::size_t w = 0; w < n; ++w) {
        REQUIRE(g.indist(w, w, x));
        for (std::size_t u = 0; u < n; ++u) {
          REQUIRE(g.indist(w, u, x) == g.indist(u, w, x));
          for (std::size_t v = 0; v < n; ++v)
            if (g.indist(w, u, x) && g.indist(u, v, x)) REQUIRE(g.indist(w, v, x));
        }
      }
    }
  }
}

TEST_CASE("indistinguishability over unions and subsets") {
  GenConfig cfg;
  Rng rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const Game g = gen_game(cfg, rng);
    const VarSet x = gen_subset(g.variables(), rng);
    const VarSet y = gen_subset(g.variables(), rng);
    const VarSet both = x.united(y);
    for (std::size_t w = 0; w < g.states().size(); ++w) {
      for (std::size_t u = 0; u < g.states().size(); ++u) {
        REQUIRE(g.indist(w, u, both) == (g.indist(w, u, x) && g.indist(w, u, y)));
        REQUIRE(g.indist(w, u, {}));
        if (g.indist(w, u, both)) REQUIRE(g.indist(w, u, x));  // monotone
      }
    }
  }
}

TEST_CASE("successor enumeration matches brute force over complete profiles") {
  GenConfig cfg;
  cfg.max_actors = 2;
  cfg.max_actions = 3;
  Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const Game g = gen_game(cfg, rng);

    // All complete profiles.
    std::vector<ActionProfile> all = {{}};
    for (const auto& actor : g.actors()) {
      std::vector<ActionProfile> next;
      for (const auto& base : all)
        for (const auto& action : g.actions()) {
          ActionProfile p = base;
          p.assignment[actor] = action;
          next.push_back(p);
        }
      all = std::move(next);
    }

    // Random constraint over a random coalition.
    ActionProfile constraint;
    for (const auto& actor : g.actors())
      if (rng.chance(1, 2)) constraint.assignment[actor] = g.actions()[rng.below(g.actions().size())];

    for (const State& state : g.states()) {
      std::set<std::pair<std::string, std::string>> expected;
      for (const ActionProfile& delta : all) {
        bool agrees = true;
        for (const auto& [actor, action] : constraint.assignment)
          agrees = agrees && delta.assignment.at(actor) == action;
        if (!agrees) continue;
        for (const MechanismEntry& e : g.mechanism()) {
          if (e.from != state.name) continue;
          bool matches = true;
          for (const auto& [actor, action] : e.profile)
            matches = matches && delta.assignment.at(actor) == action;
          if (matches) expected.insert({delta.str(), e.to});
        }
      }
      std::set<std::pair<std::string, std::string>> got;
      for (const auto& [delta, to] : g.successors(state.name, constraint))
        got.insert({delta.str(), to});
      REQUIRE(got == expected);
    }
  }
}
