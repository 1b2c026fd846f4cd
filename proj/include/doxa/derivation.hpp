#ifndef DOXA_DERIVATION_HPP
#define DOXA_DERIVATION_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "doxa/axioms.hpp"
#include "doxa/formula.hpp"
#include "doxa/parse.hpp"
#include "doxa/tautology.hpp"

namespace doxa {

struct ProofError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class RuleKind { Tautology, AxiomInstance, Hypothesis, ModusPonens, Necessitation };

struct Rule {
  RuleKind kind = RuleKind::Tautology;
  Axiom axiom = Axiom::Truth;      // AxiomInstance
  std::size_t index = 0;           // Hypothesis: 0-based index into hypotheses
  std::size_t premise = 0;         // ModusPonens: the line proving the antecedent; Necessitation
  std::size_t implication = 0;     // ModusPonens: the line proving the implication

  static Rule taut() { return {}; }
  static Rule ax(Axiom a) { return {RuleKind::AxiomInstance, a, 0, 0, 0}; }
  static Rule hyp(std::size_t index) { return {RuleKind::Hypothesis, Axiom::Truth, index, 0, 0}; }
  static Rule mp(std::size_t premise, std::size_t implication) {
    return {RuleKind::ModusPonens, Axiom::Truth, 0, premise, implication};
  }
  static Rule nec(std::size_t premise) {
    return {RuleKind::Necessitation, Axiom::Truth, 0, premise, 0};
  }
};

struct ProofLine {
  Formula formula;
  Rule rule;
};

// Hilbert-style derivation of the final line from the hypotheses and the
// theorems of the system. Line references in rules are 1-based.
struct Derivation {
  std::vector<Formula> hypotheses;
  std::vector<ProofLine> lines;

  const Formula& conclusion() const { return lines.back().formula; }
};

struct DerivationOptions {
  bool allow_generalized_public_belief = false;
};

struct DerivationReport {
  bool ok = true;
  std::size_t line = 0;  // 1-based index of the first failing line
  std::string reason;
  std::vector<bool> depends;  // per line: whether it depends on a hypothesis

  static DerivationReport failure(std::size_t line, std::string reason) {
    DerivationReport r;
    r.ok = false;
    r.line = line;
    r.reason = std::move(reason);
    return r;
  }
};

// Validates every line. Necessitation is restricted to lines that do not
// depend on hypotheses: with hypotheses in play only Modus Ponens applies.
inline DerivationReport check_derivation(const Derivation& d, const DerivationOptions& opts = {}) {
  if (d.lines.empty()) return DerivationReport::failure(0, "derivation has no lines");

  std::vector<Formula> hyps;
  hyps.reserve(d.hypotheses.size());
  for (const Formula& h : d.hypotheses) hyps.push_back(desugar(h));

  std::vector<Formula> formulas;
  std::vector<bool> depends;
  formulas.reserve(d.lines.size());
  depends.reserve(d.lines.size());

  for (std::size_t k = 0; k < d.lines.size(); ++k) {
    const std::size_t line_no = k + 1;
    const Formula f = desugar(d.lines[k].formula);
    const Rule& rule = d.lines[k].rule;
    bool dep = false;
    switch (rule.kind) {
      case RuleKind::Tautology: {
        bool taut = false;
        try {
          taut = is_prop_tautology(f);
        } catch (const AbstractionTooLarge& e) {
          return DerivationReport::failure(line_no, e.what());
        }
        if (!taut) return DerivationReport::failure(line_no, "not a propositional tautology");
        break;
      }
      case RuleKind::AxiomInstance: {
        if (rule.axiom == Axiom::GeneralizedPublicBelief && !opts.allow_generalized_public_belief)
          return DerivationReport::failure(line_no,
                                           "GeneralizedPublicBelief is disabled in this system");
        if (!match_axiom(f, rule.axiom))
          return DerivationReport::failure(
              line_no, "formula is not an instance of " + std::string(axiom_name(rule.axiom)));
        break;
      }
      case RuleKind::Hypothesis: {
        if (rule.index >= hyps.size())
          return DerivationReport::failure(line_no, "hypothesis index out of range");
        if (!(f == hyps[rule.index]))
          return DerivationReport::failure(line_no, "formula differs from the cited hypothesis");
        dep = true;
        break;
      }
      case RuleKind::ModusPonens: {
        if (rule.premise == 0 || rule.premise > k || rule.implication == 0 ||
            rule.implication > k)
          return DerivationReport::failure(line_no, "premise reference out of range");
        const Formula& antecedent = formulas[rule.premise - 1];
        const Formula& implication = formulas[rule.implication - 1];
        if (!(implication == impl(antecedent, f)))
          return DerivationReport::failure(line_no,
                                           "conclusion does not follow by Modus Ponens");
        dep = depends[rule.premise - 1] || depends[rule.implication - 1];
        break;
      }
      case RuleKind::Necessitation: {
        if (rule.premise == 0 || rule.premise > k)
          return DerivationReport::failure(line_no, "premise reference out of range");
        if (depends[rule.premise - 1])
          return DerivationReport::failure(
              line_no, "Necessitation applied to a hypothesis-dependent line");
        if (!(f == belief({}, {}, formulas[rule.premise - 1])))
          return DerivationReport::failure(line_no,
                                           "conclusion does not follow by Necessitation");
        break;
      }
    }
    formulas.push_back(f);
    depends.push_back(dep);
  }

  DerivationReport report;
  report.depends = std::move(depends);
  return report;
}

// --- proof file format ------------------------------------------------------
//
// { "hypotheses": ["B{t}{x}p"],
//   "lines": [ {"formula": "...", "rule": "Taut"},
//              {"formula": "...", "rule": "Axiom:Trust"},
//              {"formula": "...", "rule": "MP", "premises": [1, 2]},
//              {"formula": "...", "rule": "Nec", "premise": 3},
//              {"formula": "...", "rule": "Hyp", "index": 0} ] }
//
// Line references are 1-based; hypothesis indices are 0-based.

namespace detail {

inline void reject_unknown_proof_keys(const nlohmann::json& obj,
                                      std::initializer_list<const char*> allowed,
                                      const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed)
      if (key == a) ok = true;
    if (!ok) throw ProofError("unknown key \"" + key + "\" in " + where);
  }
}

inline std::size_t proof_index(const nlohmann::json& v, const std::string& where) {
  if (!v.is_number_unsigned()) throw ProofError(where + " must be a nonnegative integer");
  return v.get<std::size_t>();
}

}  // namespace detail

inline Derivation derivation_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ProofError("proof document must be a JSON object");
  detail::reject_unknown_proof_keys(doc, {"hypotheses", "lines"}, "proof document");

  Derivation d;
  if (const auto it = doc.find("hypotheses"); it != doc.end()) {
    if (!it->is_array()) throw ProofError("\"hypotheses\" must be an array");
    for (const auto& h : *it) {
      if (!h.is_string()) throw ProofError("hypotheses must be formula strings");
      d.hypotheses.push_back(parse(h.get<std::string>()));
    }
  }

  const auto lines = doc.find("lines");
  if (lines == doc.end() || !lines->is_array())
    throw ProofError("proof document needs a \"lines\" array");
  for (const auto& lj : *lines) {
    if (!lj.is_object()) throw ProofError("proof line must be an object");
    const std::string where = "proof line " + std::to_string(d.lines.size() + 1);
    detail::reject_unknown_proof_keys(lj, {"formula", "rule", "premises", "premise", "index"},
                                      where);
    const auto fj = lj.find("formula");
    const auto rj = lj.find("rule");
    if (fj == lj.end() || !fj->is_string()) throw ProofError(where + " needs a \"formula\" string");
    if (rj == lj.end() || !rj->is_string()) throw ProofError(where + " needs a \"rule\" string");

    ProofLine line;
    line.formula = parse(fj->get<std::string>());
    const std::string rule = rj->get<std::string>();
    if (rule == "Taut") {
      line.rule = Rule::taut();
    } else if (rule.rfind("Axiom:", 0) == 0) {
      const auto schema = axiom_from_name(rule.substr(6));
      if (!schema) throw ProofError(where + ": unknown axiom schema \"" + rule.substr(6) + "\"");
      line.rule = Rule::ax(*schema);
    } else if (rule == "Hyp") {
      const auto idx = lj.find("index");
      if (idx == lj.end()) throw ProofError(where + ": Hyp needs an \"index\"");
      line.rule = Rule::hyp(detail::proof_index(*idx, where + " \"index\""));
    } else if (rule == "MP") {
      const auto prem = lj.find("premises");
      if (prem == lj.end() || !prem->is_array() || prem->size() != 2)
        throw ProofError(where + ": MP needs \"premises\": [antecedent, implication]");
      line.rule = Rule::mp(detail::proof_index((*prem)[0], where + " premise"),
                           detail::proof_index((*prem)[1], where + " premise"));
    } else if (rule == "Nec") {
      const auto prem = lj.find("premise");
      if (prem == lj.end()) throw ProofError(where + ": Nec needs a \"premise\"");
      line.rule = Rule::nec(detail::proof_index(*prem, where + " \"premise\""));
    } else {
      throw ProofError(where + ": unknown rule \"" + rule + "\"");
    }
    d.lines.push_back(std::move(line));
  }
  return d;
}

inline Derivation derivation_from_text(const std::string& text) {
  nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ProofError("proof file is not valid JSON");
  return derivation_from_json(doc);
}

inline nlohmann::ordered_json derivation_to_json(const Derivation& d) {
  nlohmann::ordered_json doc;
  doc["hypotheses"] = nlohmann::ordered_json::array();
  for (const Formula& h : d.hypotheses) doc["hypotheses"].push_back(h.str());
  doc["lines"] = nlohmann::ordered_json::array();
  for (const ProofLine& line : d.lines) {
    nlohmann::ordered_json lj;
    lj["formula"] = line.formula.str();
    switch (line.rule.kind) {
      case RuleKind::Tautology: lj["rule"] = "Taut"; break;
      case RuleKind::AxiomInstance:
        lj["rule"] = "Axiom:" + std::string(axiom_name(line.rule.axiom));
        break;
      case RuleKind::Hypothesis:
        lj["rule"] = "Hyp";
        lj["index"] = line.rule.index;
        break;
      case RuleKind::ModusPonens:
        lj["rule"] = "MP";
        lj["premises"] = {line.rule.premise, line.rule.implication};
        break;
      case RuleKind::Necessitation:
        lj["rule"] = "Nec";
        lj["premise"] = line.rule.premise;
        break;
    }
    doc["lines"].push_back(std::move(lj));
  }
  return doc;
}

}  // namespace doxa

#endif  // DOXA_DERIVATION_HPP
