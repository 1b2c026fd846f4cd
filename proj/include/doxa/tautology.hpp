#ifndef DOXA_TAUTOLOGY_HPP
#define DOXA_TAUTOLOGY_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "doxa/formula.hpp"

namespace doxa {

struct AbstractionTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

// Propositional skeleton of a desugared formula: maximal subformulas that are
// not negations or implications (atoms and modal formulas) become letters.
struct Skeleton {
  enum class Op { Letter, Neg, Impl } op;
  std::size_t letter = 0;
  std::unique_ptr<Skeleton> a, b;
};

inline std::unique_ptr<Skeleton> abstract_prop(const Formula& f,
                                               std::unordered_map<std::string, std::size_t>& letters,
                                               std::size_t limit) {
  auto node = std::make_unique<Skeleton>();
  switch (f.kind()) {
    case Kind::Neg:
      node->op = Skeleton::Op::Neg;
      node->a = abstract_prop(f.body(), letters, limit);
      return node;
    case Kind::Impl:
      node->op = Skeleton::Op::Impl;
      node->a = abstract_prop(f.lhs(), letters, limit);
      node->b = abstract_prop(f.rhs(), letters, limit);
      return node;
    case Kind::Atom:
    case Kind::Belief:
    case Kind::Strategy: {
      node->op = Skeleton::Op::Letter;
      const auto [it, inserted] = letters.try_emplace(f.str(), letters.size());
      node->letter = it->second;
      if (inserted && letters.size() > limit)
        throw AbstractionTooLarge("propositional abstraction exceeds " + std::to_string(limit) +
                                  " distinct letters");
      return node;
    }
    default:
      throw std::invalid_argument("is_prop_tautology requires a desugared formula");
  }
}

inline bool eval_skeleton(const Skeleton& s, std::uint32_t assignment) {
  switch (s.op) {
    case Skeleton::Op::Letter: return (assignment >> s.letter) & 1u;
    case Skeleton::Op::Neg: return !eval_skeleton(*s.a, assignment);
    case Skeleton::Op::Impl: return !eval_skeleton(*s.a, assignment) || eval_skeleton(*s.b, assignment);
  }
  return false;
}

}  // namespace detail

// Decides propositional validity of a desugared formula by exhaustive truth
// table over its abstraction letters. Throws AbstractionTooLarge past 20
// distinct letters.
inline bool is_prop_tautology(const Formula& f) {
  std::unordered_map<std::string, std::size_t> letters;
  const auto skeleton = detail::abstract_prop(f, letters, 20);
  const std::uint32_t combos = 1u << letters.size();
  for (std::uint32_t mask = 0; mask < combos; ++mask)
    if (!detail::eval_skeleton(*skeleton, mask)) return false;
  return true;
}

}  // namespace doxa

#endif  // DOXA_TAUTOLOGY_HPP
