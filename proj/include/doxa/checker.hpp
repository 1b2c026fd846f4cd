#ifndef DOXA_CHECKER_HPP
#define DOXA_CHECKER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "doxa/formula.hpp"
#include "doxa/game.hpp"

namespace doxa {

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CheckOptions {
  // Hard cap on |actions|^|coalition| when searching strategy witnesses.
  std::uint64_t coalition_budget = 1'000'000;
};

struct CheckResult {
  struct Counterexample {
    std::string from;
    ActionProfile profile;  // complete, member of M together with from/to
    std::string to;
  };
  bool verdict = false;
  std::optional<ActionProfile> witness;          // present for true strategy verdicts
  std::optional<Counterexample> counterexample;  // present for failed profile checks
};

namespace detail {

inline void check_coalition_budget(std::size_t n_actions, std::size_t coalition_size,
                                   std::uint64_t budget) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < coalition_size; ++i) {
    // count * n_actions would exceed the budget (and possibly overflow).
    if (count > budget / n_actions)
      throw EvalError("coalition enumeration budget exceeded: |actions|^|coalition| > " +
                      std::to_string(budget));
    count *= n_actions;
  }
  if (count > budget)
    throw EvalError("coalition enumeration budget exceeded: |actions|^|coalition| > " +
                    std::to_string(budget));
}

// Enumerates coalition profiles in lexicographic order (sorted actors, action
// declaration order) and returns the first one accepted by `works`.
template <class Pred>
std::optional<ActionProfile> first_profile(const std::vector<std::string>& actions,
                                           const ActorSet& coalition, Pred&& works) {
  const auto& members = coalition.items();
  std::vector<std::size_t> idx(members.size(), 0);
  while (true) {
    ActionProfile s;
    for (std::size_t i = 0; i < members.size(); ++i) s.assignment[members[i]] = actions[idx[i]];
    if (works(s)) return s;
    std::size_t i = members.size();
    while (i > 0 && ++idx[i - 1] == actions.size()) idx[--i] = 0;
    if (i == 0) return std::nullopt;
  }
}

inline void validate_names(const Game& g, const Formula& f) {
  VarSet vars;
  ActorSet actors;
  collect_names(f, vars, actors);
  for (const auto& v : vars)
    if (!g.variables().contains(v)) throw EvalError("undeclared variable: " + v);
  for (const auto& a : actors)
    if (!g.actors().contains(a)) throw EvalError("undeclared actor: " + a);
}

// Structural subformula index over a desugared formula: one id per distinct
// subformula, so the memo table is keyed on structural identity.
class SubformulaIndex {
public:
  struct Entry {
    const FormulaNode* node = nullptr;
    std::size_t a = 0, b = 0;  // child ids (valid per kind)
  };

  explicit SubformulaIndex(Formula root) : root_(std::move(root)) { root_id_ = add(root_); }

  std::size_t root_id() const { return root_id_; }
  std::size_t size() const { return entries_.size(); }
  const Entry& operator[](std::size_t id) const { return entries_[id]; }

private:
  std::size_t add(const Formula& f) {
    const std::string key = f.str();
    if (const auto it = ids_.find(key); it != ids_.end()) return it->second;
    Entry e;
    e.node = f.node();
    switch (f.kind()) {
      case Kind::Neg:
      case Kind::Belief:
      case Kind::Strategy: e.a = add(f.body()); break;
      case Kind::Impl:
        e.a = add(f.lhs());
        e.b = add(f.rhs());
        break;
      case Kind::Atom: break;
      default: throw std::invalid_argument("checker requires a desugared formula");
    }
    const std::size_t id = entries_.size();
    entries_.push_back(e);
    ids_.emplace(key, id);
    return id;
  }

  Formula root_;  // keeps every node alive
  std::vector<Entry> entries_;
  std::unordered_map<std::string, std::size_t> ids_;
  std::size_t root_id_ = 0;
};

// One evaluation run: a game, a desugared formula, and a memo table shared
// across states. Not thread-safe; make one per concurrent evaluation.
class Evaluator {
public:
  Evaluator(const Game& g, const Formula& f, CheckOptions opts)
      : game_(g), opts_(opts), index_(desugar(f)) {
    validate_names(g, f);
    memo_.assign(g.states().size(), std::vector<signed char>(index_.size(), -1));
  }

  std::size_t root_id() const { return index_.root_id(); }
  const FormulaNode* node(std::size_t id) const { return index_[id].node; }
  std::size_t child_a(std::size_t id) const { return index_[id].a; }

  bool eval_root(std::size_t state) { return eval(state, index_.root_id()); }

  bool eval(std::size_t state, std::size_t id) {
    signed char& slot = memo_[state][id];
    if (slot >= 0) return slot != 0;
    const auto& entry = index_[id];
    bool value = false;
    switch (entry.node->kind) {
      case Kind::Atom: value = game_.states()[state].atoms.count(entry.node->name) != 0; break;
      case Kind::Neg: value = !eval(state, entry.a); break;
      case Kind::Impl: value = !eval(state, entry.a) || eval(state, entry.b); break;
      case Kind::Belief: {
        value = true;
        for (std::size_t u = 0; u < game_.states().size(); ++u) {
          if (!game_.indist(state, u, entry.node->data)) continue;
          if (!entry.node->trust.subset_of(game_.states()[u].trustworthy)) continue;
          if (!eval(u, entry.a)) {
            value = false;
            break;
          }
        }
        break;
      }
      case Kind::Strategy:
        value = find_witness(state, entry.node->coalition, entry.node->ante, entry.node->post,
                             entry.node->data, entry.a)
                    .has_value();
        break;
      default: throw std::invalid_argument("checker requires a desugared formula");
    }
    slot = value ? 1 : 0;
    return value;
  }

  // First profile (lexicographic order) under which every matching transition
  // lands in a body-satisfying state.
  std::optional<ActionProfile> find_witness(std::size_t w, const ActorSet& coalition,
                                            const VarSet& ante, const VarSet& post,
                                            const VarSet& data, std::size_t body_id) {
    check_coalition_budget(game_.actions().size(), coalition.size(), opts_.coalition_budget);
    return first_profile(game_.actions(), coalition, [&](const ActionProfile& s) {
      return profile_ok(w, coalition, ante, post, data, body_id, s, nullptr);
    });
  }

  // Checks one profile against the universal condition. Only mechanism
  // entries can falsify it, so this walks M and intersects each entry's
  // pattern with s instead of expanding complete profiles.
  bool profile_ok(std::size_t w, const ActorSet& coalition, const VarSet& ante, const VarSet& post,
                  const VarSet& data, std::size_t body_id, const ActionProfile& s,
                  CheckResult::Counterexample* cex) {
    for (const MechanismEntry& entry : game_.mechanism()) {
      const std::size_t u = game_.state_index(entry.from);
      if (!game_.indist(w, u, data)) continue;
      if (!ante.subset_of(game_.states()[u].trustworthy)) continue;
      const std::size_t v = game_.state_index(entry.to);
      if (!post.subset_of(game_.states()[v].trustworthy)) continue;
      bool compatible = true;
      for (const auto& member : coalition) {
        const auto bound = entry.profile.find(member);
        if (bound != entry.profile.end() && bound->second != s.assignment.at(member)) {
          compatible = false;
          break;
        }
      }
      if (!compatible) continue;
      if (!eval(v, body_id)) {
        if (cex) {
          cex->from = entry.from;
          cex->to = entry.to;
          ActionProfile delta;
          for (const auto& actor : game_.actors()) {
            if (const auto bound = entry.profile.find(actor); bound != entry.profile.end())
              delta.assignment[actor] = bound->second;
            else if (coalition.contains(actor))
              delta.assignment[actor] = s.assignment.at(actor);
            else
              delta.assignment[actor] = game_.actions().front();
          }
          cex->profile = std::move(delta);
        }
        return false;
      }
    }
    return true;
  }

private:
  const Game& game_;
  CheckOptions opts_;
  SubformulaIndex index_;
  std::vector<std::vector<signed char>> memo_;
};

}  // namespace detail

inline bool satisfies(const Game& g, const std::string& state, const Formula& f,
                      const CheckOptions& opts = {}) {
  const std::size_t w = g.state_index(state);
  detail::Evaluator ev(g, f, opts);
  return ev.eval_root(w);
}

// One memo table shared by every state.
inline std::map<std::string, bool> evaluate_all(const Game& g, const Formula& f,
                                                const CheckOptions& opts = {}) {
  detail::Evaluator ev(g, f, opts);
  std::map<std::string, bool> out;
  for (std::size_t w = 0; w < g.states().size(); ++w)
    out[g.states()[w].name] = ev.eval_root(w);
  return out;
}

inline std::optional<ActionProfile> find_strategy(const Game& g, const std::string& state,
                                                  const ActorSet& coalition, const VarSet& ante,
                                                  const VarSet& post, const VarSet& data,
                                                  const Formula& goal,
                                                  const CheckOptions& opts = {}) {
  for (const auto& a : coalition)
    if (!g.actors().contains(a)) throw EvalError("undeclared actor: " + a);
  for (const VarSet* set : {&ante, &post, &data})
    for (const auto& v : *set)
      if (!g.variables().contains(v)) throw EvalError("undeclared variable: " + v);
  const std::size_t w = g.state_index(state);
  detail::Evaluator ev(g, goal, opts);
  return ev.find_witness(w, coalition, ante, post, data, ev.root_id());
}

// Re-checks the universal condition under a given profile; on failure reports
// a transition (u, delta, v) in M witnessing the violation.
inline CheckResult verify_profile(const Game& g, const std::string& state,
                                  const ActorSet& coalition, const VarSet& ante,
                                  const VarSet& post, const VarSet& data, const Formula& goal,
                                  const ActionProfile& s, const CheckOptions& opts = {}) {
  if (s.domain() != coalition) throw EvalError("profile domain must equal the coalition");
  for (const auto& [actor, action] : s.assignment)
    if (!g.has_action(action)) throw EvalError("undeclared action: " + action);
  const std::size_t w = g.state_index(state);
  detail::Evaluator ev(g, goal, opts);
  CheckResult result;
  CheckResult::Counterexample cex;
  result.verdict = ev.profile_ok(w, coalition, ante, post, data, ev.root_id(), s, &cex);
  if (result.verdict)
    result.witness = s;
  else
    result.counterexample = std::move(cex);
  return result;
}

// Verdict plus a witness profile when the formula is a strategy modality.
inline CheckResult check_formula(const Game& g, const std::string& state, const Formula& f,
                                 const CheckOptions& opts = {}) {
  const std::size_t w = g.state_index(state);
  detail::Evaluator ev(g, f, opts);
  CheckResult result;
  result.verdict = ev.eval_root(w);
  const FormulaNode* root = ev.node(ev.root_id());
  if (result.verdict && root->kind == Kind::Strategy)
    result.witness = ev.find_witness(w, root->coalition, root->ante, root->post, root->data,
                                     ev.child_a(ev.root_id()));
  return result;
}

// Reference semantics: direct unmemoized recursion over Definition-style
// quantifiers, expanding mechanism entries into complete profiles. Used for
// cross-validation only.
inline bool naive_satisfies(const Game& g, const std::string& state, const Formula& f,
                            const CheckOptions& opts = {}) {
  detail::validate_names(g, f);
  const Formula core = desugar(f);

  struct Rec {
    const Game& g;
    const CheckOptions& opts;

    bool eval(std::size_t w, const Formula& f) const {
      switch (f.kind()) {
        case Kind::Atom: return g.states()[w].atoms.count(f.atom_name()) != 0;
        case Kind::Neg: return !eval(w, f.body());
        case Kind::Impl: return !eval(w, f.lhs()) || eval(w, f.rhs());
        case Kind::Belief: {
          for (std::size_t u = 0; u < g.states().size(); ++u) {
            if (!g.indist(w, u, f.data())) continue;
            if (!f.trust().subset_of(g.states()[u].trustworthy)) continue;
            if (!eval(u, f.body())) return false;
          }
          return true;
        }
        case Kind::Strategy: {
          detail::check_coalition_budget(g.actions().size(), f.coalition().size(),
                                         opts.coalition_budget);
          const Formula body = f.body();
          const auto witness =
              detail::first_profile(g.actions(), f.coalition(), [&](const ActionProfile& s) {
                for (std::size_t u = 0; u < g.states().size(); ++u) {
                  if (!g.indist(w, u, f.data())) continue;
                  if (!f.ante().subset_of(g.states()[u].trustworthy)) continue;
                  bool ok = true;
                  g.for_each_successor(u, s, [&](const ActionProfile&, std::size_t v) {
                    if (f.post().subset_of(g.states()[v].trustworthy) && !eval(v, body)) {
                      ok = false;
                      return false;
                    }
                    return true;
                  });
                  if (!ok) return false;
                }
                return true;
              });
          return witness.has_value();
        }
        default: throw std::invalid_argument("naive_satisfies requires a desugared formula");
      }
    }
  };

  return Rec{g, opts}.eval(g.state_index(state), core);
}

}  // namespace doxa

#endif  // DOXA_CHECKER_HPP
