// doxa - model checking and proof checking for trust-based belief and
// doxastic strategy modalities over finite games.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "doxa/doxa.hpp"

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitEval = 2;
constexpr int kExitUsage = 64;
constexpr int kExitFile = 66;

struct FileError {
  std::string path;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError{path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Comma-separated identifiers, with optional surrounding braces: "a,b", "{a,b}",
// "" and "{}" both mean the empty set.
doxa::NameSet parse_name_set(std::string text) {
  if (!text.empty() && text.front() == '{' && text.back() == '}')
    text = text.substr(1, text.size() - 2);
  std::vector<std::string> names;
  std::string current;
  for (const char c : text + ",") {
    if (c == ',') {
      if (!current.empty()) names.push_back(current);
      current.clear();
    } else if (c != ' ' && c != '\t') {
      current += c;
    }
  }
  return doxa::NameSet(std::move(names));
}

nlohmann::ordered_json profile_json(const doxa::ActionProfile& s) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (const auto& [actor, action] : s.assignment) out[actor] = action;
  return out;
}

int run_check(const std::string& game_path, const std::string& state, const std::string& formula,
              std::uint64_t budget, bool json_output) {
  const doxa::Game game = doxa::Game::load(read_file(game_path));
  const doxa::Formula f = doxa::parse(formula);
  doxa::CheckOptions opts;
  opts.coalition_budget = budget;
  const doxa::CheckResult result = doxa::check_formula(game, state, f, opts);
  if (json_output) {
    nlohmann::ordered_json out;
    out["verdict"] = result.verdict;
    if (result.witness) out["witness"] = profile_json(*result.witness);
    std::cout << out.dump() << "\n";
  } else {
    std::cout << (result.verdict ? "true" : "false") << "\n";
    if (result.witness) std::cout << "witness: " << result.witness->str() << "\n";
  }
  return result.verdict ? kExitTrue : kExitFalse;
}

int run_synth(const std::string& game_path, const std::string& state, const std::string& coalition,
              const std::string& ante, const std::string& post, const std::string& data,
              const std::string& goal, std::uint64_t budget, bool json_output) {
  const doxa::Game game = doxa::Game::load(read_file(game_path));
  doxa::CheckOptions opts;
  opts.coalition_budget = budget;
  const auto witness =
      doxa::find_strategy(game, state, parse_name_set(coalition), parse_name_set(ante),
                          parse_name_set(post), parse_name_set(data), doxa::parse(goal), opts);
  if (json_output) {
    nlohmann::ordered_json out;
    out["witness"] = witness ? profile_json(*witness) : nlohmann::ordered_json();
    std::cout << out.dump() << "\n";
  } else {
    std::cout << (witness ? witness->str() : "none") << "\n";
  }
  return witness ? kExitTrue : kExitFalse;
}

int run_prove(const std::string& proof_path, bool allow_gpb, bool json_output) {
  const doxa::Derivation d = doxa::derivation_from_text(read_file(proof_path));
  doxa::DerivationOptions opts;
  opts.allow_generalized_public_belief = allow_gpb;
  const doxa::DerivationReport report = doxa::check_derivation(d, opts);
  if (json_output) {
    nlohmann::ordered_json out;
    out["valid"] = report.ok;
    if (!report.ok) {
      out["line"] = report.line;
      out["reason"] = report.reason;
    }
    std::cout << out.dump() << "\n";
  } else if (report.ok) {
    std::cout << "valid\n";
  } else {
    std::cout << "invalid at line " << report.line << ": " << report.reason << "\n";
  }
  return report.ok ? kExitTrue : kExitFalse;
}

int run_fuzz(const doxa::GenConfig& cfg, const std::optional<std::string>& schema,
             const std::string& out_path) {
  const doxa::FuzzReport report = doxa::fuzz_soundness(cfg, schema);
  const std::string text = doxa::report_to_json(report).dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw FileError{out_path};
    out << text;
  }
  const auto failures = report.total_failures();
  if (failures) std::cerr << "fuzz: " << failures << " counterexample(s) found\n";
  return failures == 0 ? kExitTrue : kExitFalse;
}

int run_examples(const std::string& dir, bool json_output) {
  doxa::write_examples(dir);
  const std::vector<std::string> names = {"patriot.game", "voting5.game", "lemma1.proof"};
  if (json_output) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& n : names) out.push_back((std::filesystem::path(dir) / n).string());
    std::cout << out.dump() << "\n";
  } else {
    for (const auto& n : names)
      std::cout << (std::filesystem::path(dir) / n).string() << "\n";
  }
  return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"model checker and proof checker for doxastic strategy logic"};
  app.require_subcommand(1);

  std::string game_path, state, formula, proof_path, goal;
  std::string coalition, ante, post, data;
  std::string out_path, dir = ".";
  std::string format = "text";
  std::optional<std::string> schema;
  std::uint64_t budget = doxa::CheckOptions{}.coalition_budget;
  bool allow_gpb = false;
  doxa::GenConfig cfg;

  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* check = app.add_subcommand("check", "evaluate a formula at a state of a game");
  check->add_option("--game", game_path, "game file")->required();
  check->add_option("--state", state, "state name")->required();
  check->add_option("--formula", formula, "formula text")->required();
  check->add_option("--budget", budget, "coalition enumeration budget");
  add_format(check);

  CLI::App* synth = app.add_subcommand("synth", "synthesize a witness strategy profile");
  synth->add_option("--game", game_path, "game file")->required();
  synth->add_option("--state", state, "state name")->required();
  synth->add_option("--coalition", coalition, "coalition, comma-separated")->required();
  synth->add_option("--ante", ante, "ex ante trusted dataset");
  synth->add_option("--post", post, "ex post trusted dataset");
  synth->add_option("--data", data, "informing dataset");
  synth->add_option("--goal", goal, "goal formula")->required();
  synth->add_option("--budget", budget, "coalition enumeration budget");
  add_format(synth);

  CLI::App* prove = app.add_subcommand("prove", "validate a derivation file");
  prove->add_option("--proof", proof_path, "proof file")->required();
  prove->add_flag("--allow-generalized-public-belief", allow_gpb,
                  "accept the GeneralizedPublicBelief schema");
  add_format(prove);

  CLI::App* fuzz = app.add_subcommand("fuzz", "fuzz axiom schemas over random games");
  fuzz->add_option("--seed", cfg.seed, "rng seed");
  fuzz->add_option("--trials", cfg.trials, "trials per schema");
  std::string schema_arg;
  fuzz->add_option("--schema", schema_arg, "restrict to one schema (or CorruptedTruth)");
  fuzz->add_option("--max-states", cfg.max_states, "max states per game");
  fuzz->add_option("--max-variables", cfg.max_variables, "max variables per game");
  fuzz->add_option("--max-actors", cfg.max_actors, "max actors per game");
  fuzz->add_option("--max-actions", cfg.max_actions, "max actions per game");
  fuzz->add_option("--max-mech-entries", cfg.max_mech_entries, "max mechanism entries");
  fuzz->add_option("--max-depth", cfg.max_formula_depth, "max formula depth");
  fuzz->add_option("--out", out_path, "write the report to a file");

  CLI::App* examples = app.add_subcommand("examples", "write the bundled example files");
  examples->add_option("--dir", dir, "output directory");
  add_format(examples);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    const bool json_output = format == "json";
    if (check->parsed()) return run_check(game_path, state, formula, budget, json_output);
    if (synth->parsed())
      return run_synth(game_path, state, coalition, ante, post, data, goal, budget, json_output);
    if (prove->parsed()) return run_prove(proof_path, allow_gpb, json_output);
    if (fuzz->parsed()) {
      if (!schema_arg.empty()) schema = schema_arg;
      return run_fuzz(cfg, schema, out_path);
    }
    if (examples->parsed()) return run_examples(dir, json_output);
  } catch (const FileError& e) {
    std::cerr << "error: cannot open " << e.path << "\n";
    return kExitFile;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitEval;
  }
  return kExitUsage;
}
