#ifndef DOXA_TRANSFORM_HPP
#define DOXA_TRANSFORM_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "doxa/derivation.hpp"
#include "doxa/formula.hpp"

namespace doxa {

class DerivationBuilder {
public:
  explicit DerivationBuilder(std::vector<Formula> hypotheses) {
    d_.hypotheses = std::move(hypotheses);
  }
  // Appends a line and returns its 1-based index.
  std::size_t add(Formula f, Rule r) {
    d_.lines.push_back({std::move(f), r});
    return d_.lines.size();
  }
  const Formula& formula(std::size_t line) const { return d_.lines[line - 1].formula; }
  Derivation take() { return std::move(d_); }

private:
  Derivation d_;
};

namespace detail {

inline Derivation desugared_derivation(const Derivation& d) {
  Derivation out;
  out.hypotheses.reserve(d.hypotheses.size());
  for (const Formula& h : d.hypotheses) out.hypotheses.push_back(desugar(h));
  out.lines.reserve(d.lines.size());
  for (const ProofLine& line : d.lines) out.lines.push_back({desugar(line.formula), line.rule});
  return out;
}

inline DerivationReport require_valid(const Derivation& d, const char* who) {
  DerivationReport rep = check_derivation(d);
  if (!rep.ok)
    throw std::invalid_argument(std::string(who) + ": input derivation invalid at line " +
                                std::to_string(rep.line) + ": " + rep.reason);
  return rep;
}

inline Rule remap_rule(const Rule& r, const std::vector<std::size_t>& line_map) {
  switch (r.kind) {
    case RuleKind::ModusPonens: return Rule::mp(line_map[r.premise], line_map[r.implication]);
    case RuleKind::Necessitation: return Rule::nec(line_map[r.premise]);
    default: return r;
  }
}

}  // namespace detail

// Turns a proof of F,phi |- psi into a proof of F |- phi -> psi, following the
// four-case induction on proof length. Every occurrence of phi among the
// hypotheses is discharged.
inline Derivation deduction_transform(const Derivation& d_in, const Formula& phi_in) {
  const Derivation d = detail::desugared_derivation(d_in);
  const Formula phi = desugar(phi_in);
  const DerivationReport rep = detail::require_valid(d, "deduction_transform");

  bool found = false;
  for (const Formula& h : d.hypotheses) found = found || h == phi;
  if (!found)
    throw std::invalid_argument("deduction_transform: formula is not among the hypotheses");

  std::vector<Formula> new_hyps;
  std::vector<std::size_t> hyp_map(d.hypotheses.size(), 0);
  for (std::size_t i = 0; i < d.hypotheses.size(); ++i) {
    if (d.hypotheses[i] == phi) continue;
    hyp_map[i] = new_hyps.size();
    new_hyps.push_back(d.hypotheses[i]);
  }

  DerivationBuilder b(std::move(new_hyps));
  const std::size_t n = d.lines.size();

  // Hypothesis-independent lines form a closed subderivation; replay it
  // verbatim so Necessitation premises stay available.
  std::vector<std::size_t> copy_of(n + 1, 0);
  for (std::size_t k = 0; k < n; ++k) {
    if (rep.depends[k]) continue;
    copy_of[k + 1] = b.add(d.lines[k].formula, detail::remap_rule(d.lines[k].rule, copy_of));
  }

  std::vector<std::size_t> result_of(n + 1, 0);
  for (std::size_t k = 0; k < n; ++k) {
    const Formula& fk = d.lines[k].formula;
    const Rule& rule = d.lines[k].rule;
    if (!rep.depends[k]) {
      // Case 1: a theorem line; weaken.
      const std::size_t t = b.add(impl(fk, impl(phi, fk)), Rule::taut());
      result_of[k + 1] = b.add(impl(phi, fk), Rule::mp(copy_of[k + 1], t));
    } else if (rule.kind == RuleKind::Hypothesis) {
      if (d.hypotheses[rule.index] == phi) {
        // Case 3: the discharged hypothesis itself.
        result_of[k + 1] = b.add(impl(phi, fk), Rule::taut());
      } else {
        // Case 2: a surviving hypothesis; weaken.
        const std::size_t h = b.add(fk, Rule::hyp(hyp_map[rule.index]));
        const std::size_t t = b.add(impl(fk, impl(phi, fk)), Rule::taut());
        result_of[k + 1] = b.add(impl(phi, fk), Rule::mp(h, t));
      }
    } else {
      // Case 4: a hypothesis-dependent Modus Ponens; distribute phi.
      const Formula& fi = d.lines[rule.premise - 1].formula;
      const std::size_t t = b.add(
          impl(impl(phi, fi), impl(impl(phi, impl(fi, fk)), impl(phi, fk))), Rule::taut());
      const std::size_t step =
          b.add(impl(impl(phi, impl(fi, fk)), impl(phi, fk)), Rule::mp(result_of[rule.premise], t));
      result_of[k + 1] = b.add(impl(phi, fk), Rule::mp(result_of[rule.implication], step));
    }
  }
  return b.take();
}

namespace detail {

// Shared skeleton of the two lifting transformers: discharge everything,
// promote the resulting theorem under the modality, then peel the antecedents
// back off against the lifted hypotheses.
template <class LiftFn, class PromoteFn, class PeelFn>
Derivation lift_derivation(const Derivation& d_in, const char* who, LiftFn&& lift,
                           PromoteFn&& promote, PeelFn&& peel) {
  Derivation work = desugared_derivation(d_in);
  require_valid(work, who);
  const std::vector<Formula> original = work.hypotheses;

  std::vector<Formula> antecedents;  // chain order: outermost first
  while (!work.hypotheses.empty()) {
    const Formula h = work.hypotheses.back();
    work = deduction_transform(work, h);
    antecedents.insert(antecedents.begin(), h);
  }
  const Formula chain = work.conclusion();

  std::vector<Formula> lifted;
  lifted.reserve(original.size());
  for (const Formula& h : original) lifted.push_back(lift(h));

  DerivationBuilder b(std::move(lifted));
  std::vector<std::size_t> line_map(work.lines.size() + 1, 0);
  for (std::size_t k = 0; k < work.lines.size(); ++k)
    line_map[k + 1] = b.add(work.lines[k].formula, remap_rule(work.lines[k].rule, line_map));

  std::size_t cur = promote(b, chain, line_map[work.lines.size()]);

  Formula rest = chain;
  for (const Formula& a : antecedents) {
    const Formula next = rest.rhs();  // rest == impl(a, next) by construction
    const std::size_t step = peel(b, cur, a, next);
    std::size_t hyp_index = 0;
    for (std::size_t i = 0; i < original.size(); ++i)
      if (original[i] == a) {
        hyp_index = i;
        break;
      }
    const std::size_t h = b.add(lift(a), Rule::hyp(hyp_index));
    cur = b.add(lift(next), Rule::mp(h, step));
    rest = next;
  }
  return b.take();
}

}  // namespace detail

// phi_1,..,phi_n |- psi  becomes  B{T}{X}phi_1,..,B{T}{X}phi_n |- B{T}{X}psi.
inline Derivation b_lift_transform(const Derivation& d, const VarSet& trust, const VarSet& data) {
  const auto lift = [&](const Formula& f) { return belief(trust, data, f); };
  return detail::lift_derivation(
      d, "b_lift_transform", lift,
      [&](DerivationBuilder& b, const Formula& chain, std::size_t chain_line) {
        const std::size_t nec = b.add(belief({}, {}, chain), Rule::nec(chain_line));
        const std::size_t mono =
            b.add(impl(belief({}, {}, chain), lift(chain)), Rule::ax(Axiom::MonotonicityB));
        return b.add(lift(chain), Rule::mp(nec, mono));
      },
      [&](DerivationBuilder& b, std::size_t cur, const Formula& a, const Formula& next) {
        const std::size_t dist = b.add(
            impl(lift(impl(a, next)), impl(lift(a), lift(next))), Rule::ax(Axiom::Distributivity));
        return b.add(impl(lift(a), lift(next)), Rule::mp(cur, dist));
      });
}

// Same lifting for the empty-coalition strategy modality []{T}{X}, via the
// derived S-Necessitation rule (Necessitation + Public Belief + Monotonicity)
// and Cooperation with C = D = {}.
inline Derivation box_lift_transform(const Derivation& d, const VarSet& trust,
                                     const VarSet& data) {
  const auto lift = [&](const Formula& f) { return strategy({}, trust, trust, data, f); };
  return detail::lift_derivation(
      d, "box_lift_transform", lift,
      [&](DerivationBuilder& b, const Formula& chain, std::size_t chain_line) {
        const std::size_t nec = b.add(belief({}, {}, chain), Rule::nec(chain_line));
        const Formula boxed = strategy({}, {}, {}, {}, chain);
        const std::size_t pb =
            b.add(impl(belief({}, {}, chain), boxed), Rule::ax(Axiom::PublicBelief));
        const std::size_t base = b.add(boxed, Rule::mp(nec, pb));
        const std::size_t mono = b.add(impl(boxed, lift(chain)), Rule::ax(Axiom::MonotonicityS));
        return b.add(lift(chain), Rule::mp(base, mono));
      },
      [&](DerivationBuilder& b, std::size_t cur, const Formula& a, const Formula& next) {
        const std::size_t coop = b.add(
            impl(lift(impl(a, next)), impl(lift(a), lift(next))), Rule::ax(Axiom::Cooperation));
        return b.add(impl(lift(a), lift(next)), Rule::mp(cur, coop));
      });
}

}  // namespace doxa

#endif  // DOXA_TRANSFORM_HPP
