#ifndef DOXA_PROOFS_HPP
#define DOXA_PROOFS_HPP

#include <functional>
#include <string>
#include <vector>

#include "doxa/derivation.hpp"
#include "doxa/formula.hpp"
#include "doxa/transform.hpp"

namespace doxa {

namespace detail {

// Emits B{T}{X}phi -> B{}{X}B{T}{X}phi (positive introspection for B) and
// returns its line. Transcribes the contraposition / negative-introspection /
// Necessitation / Monotonicity / Distributivity argument.
inline std::size_t emit_positive_introspection(DerivationBuilder& b, const VarSet& trust,
                                               const VarSet& data, const Formula& phi) {
  const Formula a = belief(trust, data, phi);
  const Formula na = neg(a);
  const Formula u = belief({}, data, na);   // B{}{X}!a
  const Formula nu = neg(u);
  const Formula v = belief({}, data, nu);   // B{}{X}!B{}{X}!a
  const Formula ba = belief({}, data, a);   // B{}{X}a

  const auto l1 = b.add(impl(u, na), Rule::ax(Axiom::Truth));
  const auto l2 = b.add(impl(impl(u, na), impl(a, nu)), Rule::taut());
  const auto l3 = b.add(impl(a, nu), Rule::mp(l1, l2));
  const auto l4 = b.add(impl(nu, v), Rule::ax(Axiom::NegativeIntrospection));
  const auto l5 = b.add(impl(impl(a, nu), impl(impl(nu, v), impl(a, v))), Rule::taut());
  const auto l6 = b.add(impl(impl(nu, v), impl(a, v)), Rule::mp(l3, l5));
  const auto l7 = b.add(impl(a, v), Rule::mp(l4, l6));
  const auto l8 = b.add(impl(na, u), Rule::ax(Axiom::NegativeIntrospection));
  const auto l9 = b.add(impl(impl(na, u), impl(nu, a)), Rule::taut());
  const auto l10 = b.add(impl(nu, a), Rule::mp(l8, l9));
  const auto l11 = b.add(belief({}, {}, impl(nu, a)), Rule::nec(l10));
  const auto l12 = b.add(impl(belief({}, {}, impl(nu, a)), belief({}, data, impl(nu, a))),
                         Rule::ax(Axiom::MonotonicityB));
  const auto l13 = b.add(belief({}, data, impl(nu, a)), Rule::mp(l11, l12));
  const auto l14 =
      b.add(impl(belief({}, data, impl(nu, a)), impl(v, ba)), Rule::ax(Axiom::Distributivity));
  const auto l15 = b.add(impl(v, ba), Rule::mp(l13, l14));
  const auto l16 = b.add(impl(impl(a, v), impl(impl(v, ba), impl(a, ba))), Rule::taut());
  const auto l17 = b.add(impl(impl(v, ba), impl(a, ba)), Rule::mp(l7, l16));
  return b.add(impl(a, ba), Rule::mp(l15, l17));
}

}  // namespace detail

// |- B{T}{X}phi -> B{}{X}B{T}{X}phi
inline Derivation positive_introspection_proof(const VarSet& trust, const VarSet& data,
                                               const Formula& phi) {
  DerivationBuilder b({});
  detail::emit_positive_introspection(b, trust, data, desugar(phi));
  return b.take();
}

// |- [C]{T}{X}phi -> B{}{X}[C]{T}{X}phi
inline Derivation strategic_introspection_plus_proof(const ActorSet& coalition,
                                                     const VarSet& trust, const VarSet& data,
                                                     const Formula& phi_in) {
  const Formula phi = desugar(phi_in);
  const Formula sigma = strategy(coalition, trust, trust, data, phi);
  const Formula beta = belief(trust, data, sigma);
  const Formula si = neg(impl(impl(sigma, beta), neg(impl(beta, sigma))));  // sigma <-> beta
  const Formula bb = belief({}, data, beta);
  const Formula bs = belief({}, data, sigma);

  DerivationBuilder b({});
  const auto l1 = b.add(si, Rule::ax(Axiom::StrategicIntrospection));
  const auto l2 = b.add(impl(si, impl(beta, sigma)), Rule::taut());
  const auto l3 = b.add(impl(beta, sigma), Rule::mp(l1, l2));
  const auto l4 = b.add(belief({}, {}, impl(beta, sigma)), Rule::nec(l3));
  const auto l5 = b.add(impl(belief({}, {}, impl(beta, sigma)), belief({}, data, impl(beta, sigma))),
                        Rule::ax(Axiom::MonotonicityB));
  const auto l6 = b.add(belief({}, data, impl(beta, sigma)), Rule::mp(l4, l5));
  const auto l7 = b.add(impl(belief({}, data, impl(beta, sigma)), impl(bb, bs)),
                        Rule::ax(Axiom::Distributivity));
  const auto l8 = b.add(impl(bb, bs), Rule::mp(l6, l7));
  const auto intro = detail::emit_positive_introspection(b, trust, data, sigma);  // beta -> bb
  const auto p1 = b.add(impl(si, impl(sigma, beta)), Rule::taut());
  const auto p2 = b.add(impl(sigma, beta), Rule::mp(l1, p1));
  const auto h1 = b.add(impl(impl(sigma, beta), impl(impl(beta, bb), impl(sigma, bb))), Rule::taut());
  const auto h2 = b.add(impl(impl(beta, bb), impl(sigma, bb)), Rule::mp(p2, h1));
  const auto h3 = b.add(impl(sigma, bb), Rule::mp(intro, h2));
  const auto h4 = b.add(impl(impl(sigma, bb), impl(impl(bb, bs), impl(sigma, bs))), Rule::taut());
  const auto h5 = b.add(impl(impl(bb, bs), impl(sigma, bs)), Rule::mp(h3, h4));
  b.add(impl(sigma, bs), Rule::mp(l8, h5));
  return b.take();
}

// The derived rule |- phi  =>  |- []{T}{X}phi, shipped as its instance for the
// theorem phi -> phi.
inline Derivation s_necessitation_proof(const VarSet& trust, const VarSet& data,
                                        const Formula& phi_in) {
  const Formula kernel = impl(desugar(phi_in), desugar(phi_in));
  DerivationBuilder b({});
  const auto l1 = b.add(kernel, Rule::taut());
  const auto l2 = b.add(belief({}, {}, kernel), Rule::nec(l1));
  const auto l3 = b.add(impl(belief({}, {}, kernel), strategy({}, {}, {}, {}, kernel)),
                        Rule::ax(Axiom::PublicBelief));
  const auto l4 = b.add(strategy({}, {}, {}, {}, kernel), Rule::mp(l2, l3));
  const auto l5 = b.add(impl(strategy({}, {}, {}, {}, kernel), strategy({}, trust, trust, data, kernel)),
                        Rule::ax(Axiom::MonotonicityS));
  b.add(strategy({}, trust, trust, data, kernel), Rule::mp(l4, l5));
  return b.take();
}

struct NamedProof {
  std::string name;
  std::function<Derivation(const ActorSet& coalition, const VarSet& trust, const VarSet& data,
                           const Formula& phi)>
      instantiate;
};

// Parameterized derivation templates; every instantiation passes
// check_derivation.
inline std::vector<NamedProof> builtin_proofs() {
  return {
      {"positive_introspection",
       [](const ActorSet&, const VarSet& t, const VarSet& x, const Formula& phi) {
         return positive_introspection_proof(t, x, phi);
       }},
      {"strategic_introspection_plus",
       [](const ActorSet& c, const VarSet& t, const VarSet& x, const Formula& phi) {
         return strategic_introspection_plus_proof(c, t, x, phi);
       }},
      {"s_necessitation",
       [](const ActorSet&, const VarSet& t, const VarSet& x, const Formula& phi) {
         return s_necessitation_proof(t, x, phi);
       }},
  };
}

}  // namespace doxa

#endif  // DOXA_PROOFS_HPP
