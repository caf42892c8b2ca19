// basiq — command-line front door for the sequent kernel, prover, and
// quantum semantics. Exit codes: 0 success/proved/checked, 1 refuted/
// check-failed/exhausted, 2 parse or usage error.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "basiq/formula.hpp"
#include "basiq/kernel.hpp"
#include "basiq/quantum.hpp"
#include "basiq/search.hpp"
#include "basiq/syntax.hpp"
#include "basiq/variant.hpp"

namespace {

using nlohmann::json;

// The demonstration derivation shipped inside the binary: the EPR step
// collapses the first qubit of an entangled pair to a bare atom; atom
// reflection and par formation then recover the disjunction of outcomes.
constexpr const char* kEprDemoScript =
    "par-form: ((A & A^) @ (B & B^)) |- (A % B)\n"
    "  @-atom.refl: ((A & A^) @ (B & B^)) |- A, B\n"
    "    EPR: ((A & A^) @ (B & B^)) |- (A @ (B & B^))\n"
    "      id: ((A & A^) @ (B & B^)) |- ((A & A^) @ (B & B^))\n"
    "      &-expl.refl.1: (A & A^) |- A\n"
    "        id: A |- A\n";

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

basiq::LogicVariant variant_of(const std::string& name) {
  return *basiq::parse_variant(name);  // validated by CLI11 before dispatch
}

int report_parse_error(const std::string& where, const basiq::ParseError& e) {
  std::cerr << where << ":" << e.span.line << ":" << e.span.col << ": " << e.message << "\n";
  return 2;
}

basiq::BellStateKind kind_of(const std::string& name) {
  if (name == "PhiPlus") return basiq::BellStateKind::PhiPlus;
  if (name == "PhiMinus") return basiq::BellStateKind::PhiMinus;
  if (name == "PsiPlus") return basiq::BellStateKind::PsiPlus;
  return basiq::BellStateKind::PsiMinus;
}

struct NodeRow {
  std::string path;
  int indent = 0;
  const basiq::DerivationScript* node = nullptr;
  const basiq::CheckFailure* fail = nullptr;
};

void collect_rows(const basiq::DerivationScript& s, const std::string& path, int indent,
                  const std::map<std::string, const basiq::CheckFailure*>& fails,
                  std::vector<NodeRow>& out) {
  NodeRow row;
  row.path = path;
  row.indent = indent;
  row.node = &s;
  auto it = fails.find(path);
  row.fail = it == fails.end() ? nullptr : it->second;
  out.push_back(row);
  for (size_t i = 0; i < s.children.size(); ++i) {
    collect_rows(s.children[i], path + "." + std::to_string(i), indent + 1, fails, out);
  }
}

int run_check(const std::string& file, const std::string& vname, const std::string& format) {
  auto text = read_file(file);
  if (!text) {
    std::cerr << "cannot read file: " << file << "\n";
    return 2;
  }
  auto parsed = basiq::parse_derivation(*text);
  if (!parsed.ok()) return report_parse_error(file, parsed.error());
  basiq::LogicVariant v = variant_of(vname);
  basiq::CheckReport rep = basiq::check_script(parsed.value(), v);

  std::map<std::string, const basiq::CheckFailure*> fails;
  for (const auto& f : rep.failures) fails[f.path] = &f;
  std::vector<NodeRow> rows;
  collect_rows(parsed.value(), "0", 0, fails, rows);

  if (format == "json") {
    json j;
    j["command"] = "check";
    j["file"] = file;
    j["variant"] = basiq::variant_name(v);
    j["ok"] = rep.ok;
    j["nodes"] = rep.nodes;
    j["failures"] = json::array();
    for (const NodeRow& r : rows) {
      if (!r.fail) continue;
      json f;
      f["path"] = r.path;
      f["line"] = r.fail->line;
      f["rule"] = r.node->rule;
      f["kind"] = basiq::step_error_kind_name(r.fail->error.kind);
      f["detail"] = r.fail->error.detail;
      j["failures"].push_back(f);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "check " << file << " under " << basiq::variant_name(v) << "\n";
    for (const NodeRow& r : rows) {
      std::cout << std::string(static_cast<size_t>(r.indent) * 2, ' ') << r.node->rule << ": "
                << basiq::print_sequent(r.node->sequent) << "  [" << r.path << "] ";
      if (r.fail) {
        std::cout << "FAIL " << basiq::step_error_kind_name(r.fail->error.kind) << ": "
                  << r.fail->error.detail << "\n";
      } else {
        std::cout << "ok\n";
      }
    }
    if (rep.ok) {
      std::cout << "ok: all " << rep.nodes << " nodes check\n";
    } else {
      std::cout << "FAIL: " << rep.failures.size() << " of " << rep.nodes
                << " nodes rejected\n";
    }
  }
  return rep.ok ? 0 : 1;
}

int run_prove(const std::string& goal_text, const std::string& vname, int depth,
              long long max_nodes, const std::string& format) {
  auto goal = basiq::parse_sequent(goal_text);
  if (!goal.ok()) return report_parse_error("<sequent>", goal.error());
  basiq::LogicVariant v = variant_of(vname);
  basiq::SearchConfig cfg;
  cfg.max_depth = depth;
  cfg.max_nodes = max_nodes;
  basiq::SearchResult r = basiq::prove(goal.value(), v, cfg);

  bool recheck_ok = false;
  std::string script;
  if (r.proved()) {
    recheck_ok = basiq::check_derivation(*r.proof, v).ok;
    script = basiq::print_derivation(basiq::to_script(*r.proof));
  }

  if (format == "json") {
    json j;
    j["command"] = "prove";
    j["goal"] = basiq::print_sequent(goal.value());
    j["variant"] = basiq::variant_name(v);
    j["proved"] = r.proved();
    j["depth"] = r.depth;
    j["nodes_explored"] = r.nodes_explored;
    j["node_cap_hit"] = r.node_cap_hit;
    if (r.proved()) {
      j["recheck_ok"] = recheck_ok;
      j["proof"] = script;
    } else {
      j["proof"] = nullptr;
    }
    std::cout << j.dump(2) << "\n";
  } else if (r.proved()) {
    std::cout << "# proved: " << basiq::print_sequent(goal.value()) << "\n"
              << "# variant " << basiq::variant_name(v) << ", depth " << r.depth << ", nodes "
              << r.nodes_explored << ", re-check " << (recheck_ok ? "ok" : "FAILED") << "\n"
              << script;
  } else {
    std::cout << "exhausted: no proof of '" << basiq::print_sequent(goal.value())
              << "' under " << basiq::variant_name(v) << " within depth " << r.depth
              << " (nodes explored " << r.nodes_explored
              << (r.node_cap_hit ? ", node cap hit" : "") << ")\n"
              << "evidence grade: bounded search only, not a refutation\n";
  }
  if (!r.proved()) return 1;
  if (!recheck_ok) {
    std::cerr << "internal error: proof failed re-check\n";
    return 1;
  }
  return 0;
}

int run_equiv(const std::string& lhs_text, const std::string& rhs_text,
              const std::string& vname, int depth, long long max_nodes,
              const std::string& format) {
  auto lhs = basiq::parse_formula(lhs_text);
  if (!lhs.ok()) return report_parse_error("<lhs>", lhs.error());
  auto rhs = basiq::parse_formula(rhs_text);
  if (!rhs.ok()) return report_parse_error("<rhs>", rhs.error());
  basiq::LogicVariant v = variant_of(vname);
  basiq::SearchConfig cfg;
  cfg.max_depth = depth;
  cfg.max_nodes = max_nodes;
  basiq::EquivResult e = basiq::equivalent(lhs.value(), rhs.value(), v, cfg);

  if (format == "json") {
    json j;
    j["command"] = "equiv";
    j["lhs"] = lhs.value().text();
    j["rhs"] = rhs.value().text();
    j["variant"] = basiq::variant_name(v);
    j["equiv"] = e.equiv();
    j["depth"] = depth;
    j["nodes_explored"] = e.nodes_explored;
    j["proof_lr"] =
        e.lr ? json(basiq::print_derivation(basiq::to_script(*e.lr))) : json(nullptr);
    j["proof_rl"] =
        e.rl ? json(basiq::print_derivation(basiq::to_script(*e.rl))) : json(nullptr);
    std::cout << j.dump(2) << "\n";
  } else if (e.equiv()) {
    std::cout << "Equiv: " << lhs.value().text() << "  ~  " << rhs.value().text()
              << "  under " << basiq::variant_name(v) << " (nodes " << e.nodes_explored
              << ")\n";
    std::cout << "# left-to-right\n" << basiq::print_derivation(basiq::to_script(*e.lr));
    std::cout << "# right-to-left\n" << basiq::print_derivation(basiq::to_script(*e.rl));
  } else {
    std::cout << "Unresolved: " << lhs.value().text() << "  vs  " << rhs.value().text()
              << "  under " << basiq::variant_name(v) << " at depth " << depth
              << " (nodes explored " << e.nodes_explored << ")\n"
              << "evidence grade: bounded search only, not a refutation\n";
  }
  return e.equiv() ? 0 : 1;
}

int run_epr_demo(const std::string& kind_name, int trials, std::uint64_t seed,
                 const std::string& format) {
  basiq::BellStateKind kind = kind_of(kind_name);
  double correlation = basiq::epr_correlation(kind, trials, seed);

  struct TrialRow {
    int trial, alice, bob;
  };
  std::vector<TrialRow> trace;
  int shown = trials < 10 ? trials : 10;
  for (int t = 0; t < shown; ++t) {
    basiq::QState s = basiq::bell_state(kind);
    auto first = basiq::measure(s, 0, seed + static_cast<std::uint64_t>(t));
    auto second = basiq::measure(first.post_state, 1, seed + static_cast<std::uint64_t>(t));
    trace.push_back({t, first.outcome, second.outcome});
  }

  auto parsed = basiq::parse_derivation(kEprDemoScript);
  basiq::CheckReport rep = basiq::check_script(parsed.value(), basiq::kVariantB);

  if (format == "json") {
    json j;
    j["command"] = "epr-demo";
    j["kind"] = kind_name;
    j["trials"] = trials;
    j["seed"] = seed;
    j["correlation"] = correlation;
    j["trace"] = json::array();
    for (const TrialRow& t : trace) {
      j["trace"].push_back({{"trial", t.trial}, {"alice", t.alice}, {"bob", t.bob}});
    }
    j["fixture_variant"] = "B";
    j["fixture_ok"] = rep.ok;
    j["fixture_nodes"] = rep.nodes;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "EPR demonstration -- Bell state " << basiq::bell_state_name(kind) << ", "
              << trials << " trials, seed " << seed << "\n";
    std::cout << "physical side: Alice measures qubit 0, Bob then measures qubit 1\n";
    for (const TrialRow& t : trace) {
      std::cout << "  trial " << t.trial << ": alice=" << t.alice << " bob=" << t.bob
                << (t.alice == t.bob ? "  (equal)" : "  (different)") << "\n";
    }
    if (trials > shown) std::cout << "  ... (" << (trials - shown) << " more trials)\n";
    std::cout << "equal-outcome fraction: " << correlation << "\n";
    std::cout << "logical side: the shipped EPR derivation under variant B\n";
    std::istringstream lines(kEprDemoScript);
    for (std::string line; std::getline(lines, line);) {
      std::cout << "  " << line << "\n";
    }
    std::cout << "fixture check: " << (rep.ok ? "ok" : "FAILED") << " (" << rep.nodes
              << " nodes)\n";
  }
  return rep.ok ? 0 : 1;
}

int run_variants(const std::string& format) {
  if (format == "json") {
    json j;
    j["command"] = "variants";
    j["variants"] = json::array();
    for (basiq::LogicVariant v : basiq::kAllVariants) {
      json row;
      row["name"] = basiq::variant_name(v);
      row["structural_rules"] = v.structural;
      row["left_contexts"] = v.left;
      row["right_contexts"] = v.right;
      row["entanglement_rules"] = basiq::rule_enabled(basiq::RuleName::ENT_FORM, v);
      row["epr_rule"] = basiq::rule_enabled(basiq::RuleName::EPR, v);
      row["description"] = basiq::variant_description(v);
      j["variants"].push_back(row);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "variant  structural  left-ctx  right-ctx  @-rules  EPR   description\n";
    for (basiq::LogicVariant v : basiq::kAllVariants) {
      std::string name = basiq::variant_name(v);
      name.resize(9, ' ');
      auto cell = [](bool b, size_t w) {
        std::string s = b ? "yes" : "no";
        s.resize(w, ' ');
        return s;
      };
      std::cout << name << cell(v.structural, 12) << cell(v.left, 10) << cell(v.right, 11)
                << cell(basiq::rule_enabled(basiq::RuleName::ENT_FORM, v), 9)
                << cell(basiq::rule_enabled(basiq::RuleName::EPR, v), 6)
                << basiq::variant_description(v) << "\n";
    }
  }
  return 0;
}

int run_parse(const std::string& file, const std::string& format) {
  auto text = read_file(file);
  if (!text) {
    std::cerr << "cannot read file: " << file << "\n";
    return 2;
  }
  auto items = basiq::parse_blf(*text);
  if (!items.ok()) return report_parse_error(file, items.error());

  if (format == "json") {
    json j;
    j["command"] = "parse";
    j["file"] = file;
    j["items"] = json::array();
    for (const basiq::BlfItem& it : items.value()) {
      json row;
      row["line"] = it.line;
      if (std::holds_alternative<basiq::Formula>(it.value)) {
        row["kind"] = "formula";
        row["text"] = std::get<basiq::Formula>(it.value).text();
      } else {
        row["kind"] = "sequent";
        row["text"] = basiq::print_sequent(std::get<basiq::Sequent>(it.value));
      }
      j["items"].push_back(row);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    for (const basiq::BlfItem& it : items.value()) {
      if (std::holds_alternative<basiq::Formula>(it.value)) {
        std::cout << "line " << it.line << ": formula " << std::get<basiq::Formula>(it.value).text()
                  << "\n";
      } else {
        std::cout << "line " << it.line << ": sequent "
                  << basiq::print_sequent(std::get<basiq::Sequent>(it.value)) << "\n";
      }
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "basiq -- sequent kernel, bounded prover, and quantum cross-checks\n"
      "for Basic logic with the entanglement connective"};
  app.require_subcommand(1);

  auto variant_check = CLI::Validator(
      [](std::string& s) {
        return basiq::parse_variant(s) ? std::string{}
                                       : "unknown variant '" + s + "' (use B, BL, BR, BRL, "
                                         "BS, BSL, BSR, or BSRL)";
      },
      "VARIANT");
  auto format_check = CLI::IsMember({"text", "json"});
  auto kind_check = CLI::IsMember({"PhiPlus", "PhiMinus", "PsiPlus", "PsiMinus"});

  std::string file, goal, lhs, rhs;
  std::string variant = "B", format = "text", kind = "PhiPlus";
  int depth = 8, trials = 10000;
  long long max_nodes = 1'000'000;
  std::uint64_t seed = 42;

  CLI::App* check = app.add_subcommand("check", "Check a derivation file (.blp)");
  check->add_option("file", file, "derivation file")->required();
  check->add_option("--variant", variant, "logic variant (default B)")->check(variant_check);
  check->add_option("--format", format, "text or json")->check(format_check);

  CLI::App* prove = app.add_subcommand("prove", "Search for a proof of a sequent");
  prove->add_option("sequent", goal, "goal sequent, e.g. '(A & A^) |- A'")->required();
  prove->add_option("--variant", variant, "logic variant (default B)")->check(variant_check);
  prove->add_option("--depth", depth, "max proof height (default 8)")
      ->envname("BASIQ_DEPTH");
  prove->add_option("--max-nodes", max_nodes, "search node budget (default 1000000)");
  prove->add_option("--format", format, "text or json")->check(format_check);

  CLI::App* equiv = app.add_subcommand("equiv", "Decide bounded equivalence of two formulas");
  equiv->add_option("lhs", lhs, "first formula")->required();
  equiv->add_option("rhs", rhs, "second formula")->required();
  equiv->add_option("--variant", variant, "logic variant (default B)")->check(variant_check);
  equiv->add_option("--depth", depth, "max proof height (default 8)")
      ->envname("BASIQ_DEPTH");
  equiv->add_option("--max-nodes", max_nodes, "search node budget (default 1000000)");
  equiv->add_option("--format", format, "text or json")->check(format_check);

  CLI::App* epr = app.add_subcommand("epr-demo", "Run the EPR correlation demonstration");
  epr->add_option("--kind", kind, "Bell state kind (default PhiPlus)")->check(kind_check);
  epr->add_option("--trials", trials, "number of trials (default 10000)")
      ->check(CLI::PositiveNumber);
  epr->add_option("--seed", seed, "base RNG seed (default 42)");
  epr->add_option("--format", format, "text or json")->check(format_check);

  CLI::App* variants = app.add_subcommand("variants", "List the eight logic variants");
  variants->add_option("--format", format, "text or json")->check(format_check);

  CLI::App* parse = app.add_subcommand("parse", "Parse a formula/sequent list file (.blf)");
  parse->add_option("file", file, "list file")->required();
  parse->add_option("--format", format, "text or json")->check(format_check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (check->parsed()) return run_check(file, variant, format);
  if (prove->parsed()) return run_prove(goal, variant, depth, max_nodes, format);
  if (equiv->parsed()) return run_equiv(lhs, rhs, variant, depth, max_nodes, format);
  if (epr->parsed()) return run_epr_demo(kind, trials, seed, format);
  if (variants->parsed()) return run_variants(format);
  if (parse->parsed()) return run_parse(file, format);
  return 2;
}
