#ifndef DOXA_DOXA_HPP
#define DOXA_DOXA_HPP

#include "doxa/axioms.hpp"
#include "doxa/bundled.hpp"
#include "doxa/checker.hpp"
#include "doxa/derivation.hpp"
#include "doxa/formula.hpp"
#include "doxa/fuzz.hpp"
#include "doxa/game.hpp"
#include "doxa/gen.hpp"
#include "doxa/parse.hpp"
#include "doxa/proofs.hpp"
#include "doxa/tautology.hpp"
#include "doxa/transform.hpp"

#endif  // DOXA_DOXA_HPP
