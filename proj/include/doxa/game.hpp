#ifndef DOXA_GAME_HPP
#define DOXA_GAME_HPP

#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"

#include "doxa/formula.hpp"

namespace doxa {

struct GameError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct State {
  std::string name;
  std::map<std::string, std::string> values;  // variable -> opaque tag, total on the universe
  VarSet trustworthy;
  std::set<std::string> atoms;
};

// One pattern of the mechanism relation. Actors missing from `profile` are
// wildcards; an entry stands for every complete profile that matches it.
struct MechanismEntry {
  std::string from;
  std::map<std::string, std::string> profile;
  std::string to;
};

// Action assignment for a coalition; the complete profiles of a game are the
// ones whose domain is the whole actor universe.
struct ActionProfile {
  std::map<std::string, std::string> assignment;

  ActorSet domain() const {
    std::vector<std::string> names;
    names.reserve(assignment.size());
    for (const auto& [actor, _] : assignment) names.push_back(actor);
    return ActorSet(std::move(names));
  }

  bool operator==(const ActionProfile&) const = default;

  std::string str() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [actor, action] : assignment) {
      if (!first) out += ", ";
      first = false;
      out += actor + "->" + action;
    }
    return out + "}";
  }
};

class Game {
public:
  static Game load(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw GameError("game file is not valid JSON");
    return from_json(doc);
  }

  static Game from_json(const nlohmann::json& doc);

  nlohmann::ordered_json to_json() const;

  const VarSet& variables() const { return variables_; }
  const ActorSet& actors() const { return actors_; }
  const std::vector<std::string>& actions() const { return actions_; }
  const std::vector<State>& states() const { return states_; }
  const std::vector<MechanismEntry>& mechanism() const { return mechanism_; }

  bool has_state(const std::string& name) const { return state_index_.count(name) != 0; }

  std::size_t state_index(const std::string& name) const {
    const auto it = state_index_.find(name);
    if (it == state_index_.end()) throw GameError("unknown state: " + name);
    return it->second;
  }

  const State& state(const std::string& name) const { return states_[state_index(name)]; }

  bool has_action(const std::string& name) const {
    for (const auto& a : actions_)
      if (a == name) return true;
    return false;
  }

  // w ~_X u: the states agree on the value of every variable in X.
  bool indist(std::size_t w, std::size_t u, const VarSet& x) const {
    const State& sw = states_[w];
    const State& su = states_[u];
    for (const auto& var : x)
      if (sw.values.at(var) != su.values.at(var)) return false;
    return true;
  }

  bool indist(const std::string& w, const std::string& u, const VarSet& x) const {
    for (const auto& var : x)
      if (!variables_.contains(var)) throw GameError("unknown variable: " + var);
    return indist(state_index(w), state_index(u), x);
  }

  // Calls fn(complete_profile, to_index) for every (delta, v) with
  // (u, delta, v) in M and delta agreeing with `constraint` on its domain.
  // Wildcards are expanded one profile at a time; fn returning false stops the
  // walk. Entries may produce the same concrete pair more than once.
  template <class Fn>
  bool for_each_successor(std::size_t u, const ActionProfile& constraint, Fn&& fn) const {
    const std::string& from = states_[u].name;
    for (const MechanismEntry& entry : mechanism_) {
      if (entry.from != from) continue;
      // The profile pattern and the constraint must agree where both bind.
      bool compatible = true;
      for (const auto& [actor, action] : constraint.assignment) {
        const auto it = entry.profile.find(actor);
        if (it != entry.profile.end() && it->second != action) {
          compatible = false;
          break;
        }
      }
      if (!compatible) continue;

      std::vector<std::string> free_actors;
      ActionProfile base;
      for (const auto& actor : actors_) {
        const auto bound = entry.profile.find(actor);
        if (bound != entry.profile.end()) {
          base.assignment[actor] = bound->second;
        } else if (const auto fixed = constraint.assignment.find(actor);
                   fixed != constraint.assignment.end()) {
          base.assignment[actor] = fixed->second;
        } else {
          free_actors.push_back(actor);
        }
      }
      const std::size_t to = state_index_.at(entry.to);

      // Odometer over the unconstrained actors.
      std::vector<std::size_t> idx(free_actors.size(), 0);
      while (true) {
        ActionProfile delta = base;
        for (std::size_t i = 0; i < free_actors.size(); ++i)
          delta.assignment[free_actors[i]] = actions_[idx[i]];
        if (!fn(delta, to)) return false;
        std::size_t i = free_actors.size();
        while (i > 0 && ++idx[i - 1] == actions_.size()) idx[--i] = 0;
        if (i == 0) break;
      }
    }
    return true;
  }

  // Materialized, duplicate-free successor list. Prefer for_each_successor
  // when only part of the expansion is needed.
  std::vector<std::pair<ActionProfile, std::string>> successors(const std::string& u,
                                                                const ActionProfile& constraint) const {
    for (const auto& [actor, action] : constraint.assignment) {
      if (!actors_.contains(actor)) throw GameError("unknown actor: " + actor);
      if (!has_action(action)) throw GameError("unknown action: " + action);
    }
    std::set<std::pair<std::map<std::string, std::string>, std::string>> seen;
    for_each_successor(state_index(u), constraint, [&](const ActionProfile& delta, std::size_t to) {
      seen.emplace(delta.assignment, states_[to].name);
      return true;
    });
    std::vector<std::pair<ActionProfile, std::string>> out;
    out.reserve(seen.size());
    for (const auto& [assignment, to] : seen) out.emplace_back(ActionProfile{assignment}, to);
    return out;
  }

private:
  VarSet variables_;
  ActorSet actors_;
  std::vector<std::string> actions_;
  std::vector<State> states_;
  std::vector<MechanismEntry> mechanism_;
  std::unordered_map<std::string, std::size_t> state_index_;
};

namespace detail {

inline void reject_unknown_keys(const nlohmann::json& obj, std::initializer_list<const char*> allowed,
                                const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed)
      if (key == a) ok = true;
    if (!ok) throw GameError("unknown key \"" + key + "\" in " + where);
  }
}

inline const nlohmann::json& require_field(const nlohmann::json& obj, const char* key,
                                           const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw GameError("missing field \"" + std::string(key) + "\" in " + where);
  return *it;
}

inline std::vector<std::string> string_list(const nlohmann::json& arr, const std::string& where) {
  if (!arr.is_array()) throw GameError(where + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& item : arr) {
    if (!item.is_string()) throw GameError(where + " must be an array of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

inline NameSet unique_name_set(const nlohmann::json& arr, const std::string& where) {
  auto list = string_list(arr, where);
  NameSet set(list);
  if (set.size() != list.size()) throw GameError("duplicate name in " + where);
  return set;
}

}  // namespace detail

inline Game Game::from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw GameError("game document must be a JSON object");
  detail::reject_unknown_keys(doc, {"variables", "actors", "actions", "states", "mechanism"},
                              "game document");

  Game g;
  g.variables_ = detail::unique_name_set(detail::require_field(doc, "variables", "game document"),
                                         "\"variables\"");
  g.actors_ = detail::unique_name_set(detail::require_field(doc, "actors", "game document"),
                                      "\"actors\"");
  g.actions_ = detail::string_list(detail::require_field(doc, "actions", "game document"),
                                   "\"actions\"");
  if (g.actions_.empty()) throw GameError("\"actions\" must be nonempty");
  if (NameSet(g.actions_).size() != g.actions_.size())
    throw GameError("duplicate name in \"actions\"");

  const auto& states = detail::require_field(doc, "states", "game document");
  if (!states.is_array()) throw GameError("\"states\" must be an array");
  for (const auto& sj : states) {
    if (!sj.is_object()) throw GameError("state must be an object");
    detail::reject_unknown_keys(sj, {"name", "values", "trustworthy", "atoms"}, "state");
    State s;
    const auto& name = detail::require_field(sj, "name", "state");
    if (!name.is_string()) throw GameError("state \"name\" must be a string");
    s.name = name.get<std::string>();
    if (g.state_index_.count(s.name)) throw GameError("duplicate state name: " + s.name);

    const auto& values = detail::require_field(sj, "values", "state " + s.name);
    if (!values.is_object()) throw GameError("\"values\" of state " + s.name + " must be an object");
    for (const auto& [var, tag] : values.items()) {
      if (!g.variables_.contains(var))
        throw GameError("state " + s.name + " assigns undeclared variable: " + var);
      if (!tag.is_string()) throw GameError("value tags must be strings (state " + s.name + ")");
      s.values[var] = tag.get<std::string>();
    }
    for (const auto& var : g.variables_)
      if (!s.values.count(var))
        throw GameError("state " + s.name + " missing value for variable: " + var);

    s.trustworthy = detail::unique_name_set(detail::require_field(sj, "trustworthy", "state " + s.name),
                                            "\"trustworthy\" of state " + s.name);
    if (!s.trustworthy.subset_of(g.variables_))
      throw GameError("state " + s.name + " marks an undeclared variable trustworthy");

    for (const auto& a :
         detail::string_list(detail::require_field(sj, "atoms", "state " + s.name),
                             "\"atoms\" of state " + s.name))
      s.atoms.insert(a);

    g.state_index_[s.name] = g.states_.size();
    g.states_.push_back(std::move(s));
  }

  const auto& mech = detail::require_field(doc, "mechanism", "game document");
  if (!mech.is_array()) throw GameError("\"mechanism\" must be an array");
  for (const auto& ej : mech) {
    if (!ej.is_object()) throw GameError("mechanism entry must be an object");
    detail::reject_unknown_keys(ej, {"from", "profile", "to"}, "mechanism entry");
    MechanismEntry e;
    const auto& from = detail::require_field(ej, "from", "mechanism entry");
    const auto& to = detail::require_field(ej, "to", "mechanism entry");
    if (!from.is_string() || !to.is_string())
      throw GameError("mechanism \"from\"/\"to\" must be strings");
    e.from = from.get<std::string>();
    e.to = to.get<std::string>();
    if (!g.state_index_.count(e.from))
      throw GameError("mechanism references undeclared state: " + e.from);
    if (!g.state_index_.count(e.to))
      throw GameError("mechanism references undeclared state: " + e.to);

    const auto& profile = detail::require_field(ej, "profile", "mechanism entry");
    if (!profile.is_object()) throw GameError("mechanism \"profile\" must be an object");
    for (const auto& [actor, action] : profile.items()) {
      if (!g.actors_.contains(actor))
        throw GameError("mechanism profile mentions undeclared actor: " + actor);
      if (!action.is_string()) throw GameError("mechanism profile actions must be strings");
      const std::string act = action.get<std::string>();
      if (act == "*") continue;  // explicit wildcard, same as omitting the actor
      if (!g.has_action(act))
        throw GameError("mechanism profile uses undeclared action: " + act);
      e.profile[actor] = act;
    }
    g.mechanism_.push_back(std::move(e));
  }
  return g;
}

inline nlohmann::ordered_json Game::to_json() const {
  nlohmann::ordered_json doc;
  doc["variables"] = variables_.items();
  doc["actors"] = actors_.items();
  doc["actions"] = actions_;
  doc["states"] = nlohmann::ordered_json::array();
  for (const State& s : states_) {
    nlohmann::ordered_json sj;
    sj["name"] = s.name;
    sj["values"] = s.values;
    sj["trustworthy"] = s.trustworthy.items();
    sj["atoms"] = std::vector<std::string>(s.atoms.begin(), s.atoms.end());
    doc["states"].push_back(std::move(sj));
  }
  doc["mechanism"] = nlohmann::ordered_json::array();
  for (const MechanismEntry& e : mechanism_) {
    nlohmann::ordered_json ej;
    ej["from"] = e.from;
    ej["profile"] = e.profile;
    ej["to"] = e.to;
    doc["mechanism"].push_back(std::move(ej));
  }
  return doc;
}

}  // namespace doxa

#endif  // DOXA_GAME_HPP
