#ifndef DOXA_TESTS_SUPPORT_HPP
#define DOXA_TESTS_SUPPORT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "doxa/derivation.hpp"
#include "doxa/formula.hpp"
#include "doxa/gen.hpp"

namespace doxa_tests {

// Small propositional formula over atoms a, b, c using only ! and ->.
inline doxa::Formula random_prop_formula(doxa::Rng& rng, std::size_t depth) {
  static const char* names[] = {"a", "b", "c"};
  if (depth == 0 || rng.chance(1, 3)) return doxa::atom(names[rng.below(3)]);
  if (rng.chance(1, 2)) return doxa::neg(random_prop_formula(rng, depth - 1));
  const doxa::Formula l = random_prop_formula(rng, depth - 1);
  const doxa::Formula r = random_prop_formula(rng, depth - 1);
  return doxa::impl(l, r);
}

// Random derivation using hypotheses, tautologies, and Modus Ponens only.
// Hypotheses are chained implications half the time so that MP steps with
// hypothesis-dependent major premises occur.
inline doxa::Derivation random_mp_derivation(doxa::Rng& rng) {
  using namespace doxa;
  std::vector<Formula> hyps;
  const std::size_t n_hyps = 1 + rng.below(3);
  for (std::size_t i = 0; i < n_hyps; ++i) {
    if (!hyps.empty() && rng.chance(1, 2))
      hyps.push_back(impl(hyps.back(), random_prop_formula(rng, 2)));
    else
      hyps.push_back(random_prop_formula(rng, 2));
  }

  Derivation d;
  d.hypotheses = hyps;
  std::vector<Formula> proved;
  const auto add = [&](const Formula& f, Rule r) {
    d.lines.push_back({f, r});
    proved.push_back(f);
    return proved.size();  // 1-based index of the added line
  };

  // Weakening step: from line i proving alpha, derive beta -> alpha.
  const auto weaken = [&](std::size_t i, const Formula& beta) {
    const Formula alpha = proved[i - 1];
    const std::size_t t = add(impl(alpha, impl(beta, alpha)), Rule::taut());
    return add(impl(beta, alpha), Rule::mp(i, t));
  };

  const std::size_t first = rng.below(hyps.size());
  add(hyps[first], Rule::hyp(first));

  const std::size_t steps = 3 + rng.below(6);
  for (std::size_t s = 0; s < steps; ++s) {
    switch (rng.below(4)) {
      case 0: {
        const std::size_t h = rng.below(hyps.size());
        add(hyps[h], Rule::hyp(h));
        break;
      }
      case 1: {
        const Formula f = random_prop_formula(rng, 2);
        add(impl(f, f), Rule::taut());
        break;
      }
      case 2:
        weaken(1 + rng.below(proved.size()), random_prop_formula(rng, 2));
        break;
      case 3: {
        // Direct MP where two existing lines fit together.
        bool done = false;
        for (std::size_t j = 0; j < proved.size() && !done; ++j) {
          if (proved[j].kind() != Kind::Impl) continue;
          for (std::size_t i = 0; i < proved.size(); ++i) {
            if (proved[i] == proved[j].lhs()) {
              add(proved[j].rhs(), Rule::mp(i + 1, j + 1));
              done = true;
              break;
            }
          }
        }
        if (!done) weaken(1 + rng.below(proved.size()), random_prop_formula(rng, 2));
        break;
      }
    }
  }
  return d;
}

}  // namespace doxa_tests

#endif  // DOXA_TESTS_SUPPORT_HPP
