#ifndef DOXA_BUNDLED_HPP
#define DOXA_BUNDLED_HPP

#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "doxa/derivation.hpp"
#include "doxa/formula.hpp"
#include "doxa/proofs.hpp"

namespace doxa {

// One-shot interception game with a single actor. States w1 and w2 carry the
// same data readings, but the time variable is only trustworthy in w2; firing
// s1 destroys the target from w2 and misses from w1.
inline const char* patriot_game_text() {
  return R"({
  "variables": ["x", "v", "t"],
  "actors": ["patriot"],
  "actions": ["s1", "s2"],
  "states": [
    {"name": "w1",
     "values": {"x": "r1", "v": "r1", "t": "r1"},
     "trustworthy": ["x", "v"],
     "atoms": []},
    {"name": "w2",
     "values": {"x": "r1", "v": "r1", "t": "r1"},
     "trustworthy": ["x", "v", "t"],
     "atoms": ["can_intercept"]},
    {"name": "w3",
     "values": {"x": "hit", "v": "hit", "t": "hit"},
     "trustworthy": ["x", "v", "t"],
     "atoms": ["destroyed"]},
    {"name": "w4",
     "values": {"x": "miss", "v": "miss", "t": "miss"},
     "trustworthy": ["x", "v", "t"],
     "atoms": []}
  ],
  "mechanism": [
    {"from": "w1", "profile": {"patriot": "s1"}, "to": "w4"},
    {"from": "w1", "profile": {"patriot": "s2"}, "to": "w4"},
    {"from": "w2", "profile": {"patriot": "s1"}, "to": "w3"},
    {"from": "w2", "profile": {"patriot": "s2"}, "to": "w4"}
  ]
}
)";
}

// Five-member voting game: four committed members m1..m4, one undecided
// actor alice, approval when the announced yes count reaches 3.
//
// Pre-vote states pre_r<R>_<dddd> pair a published forecast (R members plan
// to vote yes) with the committed members' true dispositions d in {y,n}; the
// forecast variables yea/nay are trustworthy exactly when the forecast is
// right. Votes lead to out_t<T>_n<A>: T true yes votes, A announced by the
// tally, with n trustworthy exactly when A == T. approved/rejected follow the
// announced count. The designated current state is pre_r2_yynn.
inline nlohmann::ordered_json voting5_game_json() {
  nlohmann::ordered_json doc;
  doc["variables"] = {"yea", "nay", "n"};
  doc["actors"] = {"alice", "m1", "m2", "m3", "m4"};
  doc["actions"] = {"yes", "no"};

  const auto pre_name = [](int forecast, unsigned mask) {
    std::string name = "pre_r" + std::to_string(forecast) + "_";
    for (int i = 0; i < 4; ++i) name += (mask >> i) & 1u ? 'y' : 'n';
    return name;
  };
  const auto out_name = [](int truth, int announced) {
    return "out_t" + std::to_string(truth) + "_n" + std::to_string(announced);
  };
  const auto popcount = [](unsigned mask) {
    int n = 0;
    for (int i = 0; i < 4; ++i) n += (mask >> i) & 1u;
    return n;
  };

  doc["states"] = nlohmann::ordered_json::array();
  for (int forecast = 0; forecast <= 4; ++forecast) {
    for (unsigned mask = 0; mask < 16; ++mask) {
      nlohmann::ordered_json sj;
      sj["name"] = pre_name(forecast, mask);
      sj["values"] = {{"yea", std::to_string(forecast)},
                      {"nay", std::to_string(4 - forecast)},
                      {"n", "-"}};
      sj["trustworthy"] = popcount(mask) == forecast
                              ? nlohmann::ordered_json::array({"yea", "nay"})
                              : nlohmann::ordered_json::array();
      sj["atoms"] = nlohmann::ordered_json::array();
      doc["states"].push_back(std::move(sj));
    }
  }
  for (int truth = 0; truth <= 5; ++truth) {
    for (int announced = 0; announced <= 5; ++announced) {
      nlohmann::ordered_json sj;
      sj["name"] = out_name(truth, announced);
      sj["values"] = {{"yea", "-"}, {"nay", "-"}, {"n", std::to_string(announced)}};
      sj["trustworthy"] = announced == truth ? nlohmann::ordered_json::array({"n"})
                                             : nlohmann::ordered_json::array();
      sj["atoms"] = nlohmann::ordered_json::array({announced >= 3 ? "approved" : "rejected"});
      doc["states"].push_back(std::move(sj));
    }
  }

  doc["mechanism"] = nlohmann::ordered_json::array();
  for (int forecast = 0; forecast <= 4; ++forecast) {
    for (unsigned mask = 0; mask < 16; ++mask) {
      for (const bool alice_yes : {true, false}) {
        const int truth = popcount(mask) + (alice_yes ? 1 : 0);
        nlohmann::ordered_json profile;
        profile["alice"] = alice_yes ? "yes" : "no";
        for (int i = 0; i < 4; ++i)
          profile["m" + std::to_string(i + 1)] = (mask >> i) & 1u ? "yes" : "no";
        // The tally announcement is nondeterministic; n is only trustworthy
        // where it matches the true count.
        for (int announced = 0; announced <= 5; ++announced) {
          nlohmann::ordered_json ej;
          ej["from"] = pre_name(forecast, mask);
          ej["profile"] = profile;
          ej["to"] = out_name(truth, announced);
          doc["mechanism"].push_back(std::move(ej));
        }
      }
    }
  }
  return doc;
}

inline std::string voting5_game_text() { return voting5_game_json().dump(2) + "\n"; }

inline constexpr const char* kVotingCurrentState = "pre_r2_yynn";

inline std::string lemma1_proof_text() {
  const Derivation d = positive_introspection_proof({"t"}, {"x"}, atom("p"));
  return derivation_to_json(d).dump(2) + "\n";
}

// Writes patriot.game, voting5.game, and lemma1.proof into dir.
inline void write_examples(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const auto write = [&](const std::filesystem::path& name, const std::string& text) {
    std::ofstream out(dir / name, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + (dir / name).string());
    out << text;
  };
  write("patriot.game", patriot_game_text());
  write("voting5.game", voting5_game_text());
  write("lemma1.proof", lemma1_proof_text());
}

}  // namespace doxa

#endif  // DOXA_BUNDLED_HPP
