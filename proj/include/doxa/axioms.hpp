#ifndef DOXA_AXIOMS_HPP
#define DOXA_AXIOMS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "doxa/formula.hpp"

namespace doxa {

enum class Axiom {
  Truth,                   // B{}{X}p -> p
  NegativeIntrospection,   // !B{T}{X}p -> B{}{X}!B{T}{X}p
  Distributivity,          // B{T}{X}(p -> q) -> (B{T}{X}p -> B{T}{X}q)
  Trust,                   // B{T}{X}(B{T}{Y}p -> p)
  MonotonicityB,           // B{T}{X}p -> B{T'}{X'}p          T<=T', X<=X'
  MonotonicityS,           // [C]{T}{X}p -> [C']{T'}{X'}p     plus C<=C'
  Cooperation,             // [C]{T}{X}(p->q) -> ([D]{T}{X}p -> [C+D]{T}{X}q)  C,D disjoint
  StrategicIntrospection,  // [C]{T}{X}p <-> B{T}{X}[C]{T}{X}p  (desugared form)
  BeliefInUnavoidability,  // B{T}{X}[]{T}{Y}p -> []{T}{X}p
  PublicBelief,            // B{T}{}p -> []{T}{}p
  GeneralizedPublicBelief, // B{T}{}p -> []{;T}{}p
};

inline constexpr Axiom kAllAxioms[] = {
    Axiom::Truth,        Axiom::NegativeIntrospection,  Axiom::Distributivity,
    Axiom::Trust,        Axiom::MonotonicityB,          Axiom::MonotonicityS,
    Axiom::Cooperation,  Axiom::StrategicIntrospection, Axiom::BeliefInUnavoidability,
    Axiom::PublicBelief, Axiom::GeneralizedPublicBelief,
};

inline std::string_view axiom_name(Axiom a) {
  switch (a) {
    case Axiom::Truth: return "Truth";
    case Axiom::NegativeIntrospection: return "NegativeIntrospection";
    case Axiom::Distributivity: return "Distributivity";
    case Axiom::Trust: return "Trust";
    case Axiom::MonotonicityB: return "MonotonicityB";
    case Axiom::MonotonicityS: return "MonotonicityS";
    case Axiom::Cooperation: return "Cooperation";
    case Axiom::StrategicIntrospection: return "StrategicIntrospection";
    case Axiom::BeliefInUnavoidability: return "BeliefInUnavoidability";
    case Axiom::PublicBelief: return "PublicBelief";
    case Axiom::GeneralizedPublicBelief: return "GeneralizedPublicBelief";
  }
  return "?";
}

inline std::optional<Axiom> axiom_from_name(std::string_view name) {
  for (Axiom a : kAllAxioms)
    if (axiom_name(a) == name) return a;
  return std::nullopt;
}

namespace detail {

inline bool is_kind(const Formula& f, Kind k) { return f.valid() && f.kind() == k; }

// [C]{T;T}{X} with equal superscripts, the desugared image of [C]{T}{X}.
inline bool is_plain_strategy(const Formula& f) {
  return is_kind(f, Kind::Strategy) && f.ante() == f.post();
}

inline bool match_truth(const Formula& f) {
  if (!is_kind(f, Kind::Impl)) return false;
  const Formula l = f.lhs();
  return is_kind(l, Kind::Belief) && l.trust().empty() && l.body() == f.rhs();
}

inline bool match_negative_introspection(const Formula& f) {
  if (!is_kind(f, Kind::Impl)) return false;
  const Formula l = f.lhs();
  const Formula r = f.rhs();
  if (!is_kind(l, Kind::Neg) || !is_kind(l.body(), Kind::Belief)) return false;
  if (!is_kind(r, Kind::Belief) || !r.trust().empty()) return false;
  return r.data() == l.body().data() && r.body() == l;
}

inline bool match_distributivity(const Formula& f) {
  if (!is_kind(f, Kind::Impl)) return false;
  const Formula l = f.lhs();
  const Formula r = f.rhs();
  if (!is_kind(l, Kind::Belief) || !is_kind(l.body(), Kind::Impl)) return false;
  if (!is_kind(r, Kind::Impl)) return false;
  const Formula rl = r.lhs();
  const Formula rr = r.rhs();
  if (!is_kind(rl, Kind::Belief) || !is_kind(rr, Kind::Belief)) return false;
  if (rl.trust() != l.trust() || rr.trust() != l.trust()) return false;
  if (rl.data() != l.data() || rr.data() != l.data()) return false;
  return rl.body() == l.body().lhs() && rr.body() == l.body().rhs();
}

inline bool match_trust(const Formula& f) {
  if (!is_kind(f, Kind::Belief) || !is_kind(f.body(), Kind::Impl)) return false;
  const Formula inner = f.body().lhs();
  if (!is_kind(inner, Kind::Belief)) return false;
  return inner.trust() == f.trust() && inner.body() == f.body().rhs();
}

inline bool match_monotonicity_b(const Formula& f) {
  if (!is_kind(f, Kind::Impl)) return false;
  const Formula l = f.lhs();
  const Formula r = f.rhs();
  if (!is_kind(l, Kind::Belief) || !is_kind(r, Kind::Belief)) return false;
  return l.body() == r.body() && l.trust().subset_of(r.trust()) && l.data().subset_of(r.data());
}

inline bool match_monotonicity_s(const Formula& f) {
  if (!is_kind(f, Kind::Impl)) return false;
  const Formula l = f.lhs();
  const Formula r = f.rhs();
  if (!is_plain_strategy(l) || !is_plain_strategy(r)) return false;
  return l.body() == r.body() && l.coalition().subset_of(r.coalition()) &&
         l.ante().subset_of(r.ante()) && l.data().subset_of(r.data());
}

inline bool match_cooperation(const Formula& f) {
  if (!is_kind(f, Kind::Impl) || !is_kind(f.rhs(), Kind::Impl)) return false;
  const Formula s1 = f.lhs();
  const Formula s2 = f.rhs().lhs();
  const Formula s3 = f.rhs().rhs();
  if (!is_plain_strategy(s1) || !is_plain_strategy(s2) || !is_plain_strategy(s3)) return false;
  if (s1.ante() != s2.ante() || s1.ante() != s3.ante()) return false;
  if (s1.data() != s2.data() || s1.data() != s3.data()) return false;
  if (!s1.coalition().disjoint_with(s2.coalition())) return false;
  if (s3.coalition() != s1.coalition().united(s2.coalition())) return false;
  if (!is_kind(s1.body(), Kind::Impl)) return false;
  return s1.body().lhs() == s2.body() && s1.body().rhs() == s3.body();
}

// The fixed desugaring of (s <-> b): !((s -> b) -> !(b -> s)).
inline bool match_strategic_introspection(const Formula& f) {
  if (!is_kind(f, Kind::Neg) || !is_kind(f.body(), Kind::Impl)) return false;
  const Formula fwd = f.body().lhs();
  const Formula negbwd = f.body().rhs();
  if (!is_kind(fwd, Kind::Impl) || !is_kind(negbwd, Kind::Neg)) return false;
  const Formula bwd = negbwd.body();
  if (!is_kind(bwd, Kind::Impl)) return false;
  const Formula strat = fwd.lhs();
  const Formula bel = fwd.rhs();
  if (bwd.lhs() != bel || bwd.rhs() != strat) return false;
  if (!is_plain_strategy(strat) || !is_kind(bel, Kind::Belief)) return false;
  return bel.trust() == strat.ante() && bel.data() == strat.data() && bel.body() == strat;
}

inline bool match_belief_in_unavoidability(const Formula& f) {
  if (!is_kind(f, Kind::Impl)) return false;
  const Formula l = f.lhs();
  const Formula r = f.rhs();
  if (!is_kind(l, Kind::Belief) || !is_plain_strategy(r)) return false;
  const Formula inner = l.body();
  if (!is_plain_strategy(inner)) return false;
  if (!inner.coalition().empty() || !r.coalition().empty()) return false;
  if (inner.ante() != l.trust() || r.ante() != l.trust()) return false;
  if (r.data() != l.data()) return false;
  return inner.body() == r.body();
}

inline bool match_public_belief(const Formula& f) {
  if (!is_kind(f, Kind::Impl)) return false;
  const Formula l = f.lhs();
  const Formula r = f.rhs();
  if (!is_kind(l, Kind::Belief) || !l.data().empty()) return false;
  if (!is_plain_strategy(r) || !r.coalition().empty() || !r.data().empty()) return false;
  return r.ante() == l.trust() && r.body() == l.body();
}

inline bool match_generalized_public_belief(const Formula& f) {
  if (!is_kind(f, Kind::Impl)) return false;
  const Formula l = f.lhs();
  const Formula r = f.rhs();
  if (!is_kind(l, Kind::Belief) || !l.data().empty()) return false;
  if (!is_kind(r, Kind::Strategy) || !r.coalition().empty() || !r.data().empty()) return false;
  return r.ante().empty() && r.post() == l.trust() && r.body() == l.body();
}

}  // namespace detail

// Structural schema match on a desugared formula; subset and disjointness
// side conditions are checked on the concrete sets.
inline bool match_axiom(const Formula& f, Axiom schema) {
  switch (schema) {
    case Axiom::Truth: return detail::match_truth(f);
    case Axiom::NegativeIntrospection: return detail::match_negative_introspection(f);
    case Axiom::Distributivity: return detail::match_distributivity(f);
    case Axiom::Trust: return detail::match_trust(f);
    case Axiom::MonotonicityB: return detail::match_monotonicity_b(f);
    case Axiom::MonotonicityS: return detail::match_monotonicity_s(f);
    case Axiom::Cooperation: return detail::match_cooperation(f);
    case Axiom::StrategicIntrospection: return detail::match_strategic_introspection(f);
    case Axiom::BeliefInUnavoidability: return detail::match_belief_in_unavoidability(f);
    case Axiom::PublicBelief: return detail::match_public_belief(f);
    case Axiom::GeneralizedPublicBelief: return detail::match_generalized_public_belief(f);
  }
  return false;
}

inline bool match_axiom(const Formula& f, std::string_view schema_name) {
  const auto schema = axiom_from_name(schema_name);
  if (!schema) throw std::invalid_argument("unknown axiom schema: " + std::string(schema_name));
  return match_axiom(f, *schema);
}

}  // namespace doxa

#endif  // DOXA_AXIOMS_HPP
