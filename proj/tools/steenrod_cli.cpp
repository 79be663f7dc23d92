// steenrod: command line front end for the Steenrod algebra engine.
//
// Exit codes: 0 success or all checks passed, 1 a verification check
// failed, 2 usage, parse or semantic error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "steenrod/action.hpp"
#include "steenrod/adem.hpp"
#include "steenrod/errors.hpp"
#include "steenrod/expression.hpp"
#include "steenrod/ideal.hpp"
#include "steenrod/models.hpp"
#include "steenrod/presentation.hpp"
#include "steenrod/suite.hpp"

namespace {

using namespace steenrod;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

RingPresentation load_ring(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open ring file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_presentation(text.str());
  } catch (const ParseError& e) {
    throw UsageError(path + ": parse error: " + e.what());
  } catch (const SemanticError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

struct Options {
  std::string expr;
  std::string element;
  std::string ring_path;
  std::string which = "left";
  std::uint64_t degree = 0;
  std::uint64_t degree_cap = default_ideal_degree_cap;
  std::string selector;
  std::string format = "text";
  int j_max = 5;
  std::optional<int> s, j, c, l;
  std::uint64_t seed = default_seed;
  std::size_t cases = 1000;
  bool timings = true;
  std::string model;
};

int cmd_normalize(const Options& o) {
  std::cout << to_admissible(parse_steenrod(o.expr)).to_string() << '\n';
  return exit_ok;
}

int cmd_act(const Options& o) {
  const RingPresentation ring = load_ring(o.ring_path);
  const AdemElement e = parse_steenrod(o.expr);
  const RingElement u = parse_ring_element(ring, o.element);
  std::cout << ring.format(act(ring, e, u)) << '\n';
  return exit_ok;
}

int cmd_ideal(const Options& o) {
  const AdemElement e = parse_steenrod(o.expr);
  const bool member = o.which == "left" ? in_left_ideal_sq1(e) : in_two_sided_ideal_sq1(e, o.degree_cap);
  std::cout << (member ? "yes" : "no") << '\n';
  return exit_ok;
}

int cmd_basis(const Options& o) {
  if (o.ring_path.empty()) {
    for (const auto& w : basis_in_degree(o.degree)) std::cout << w.to_string() << '\n';
    return exit_ok;
  }
  const RingPresentation ring = load_ring(o.ring_path);
  for (const auto& m : ring_basis_in_degree(ring, o.degree)) std::cout << ring.format(m) << '\n';
  return exit_ok;
}

VerificationReport run_selector(const Options& o) {
  if (o.selector == "all") {
    SuiteConfig cfg;
    cfg.j_max = o.j_max;
    cfg.ideal_degree_cap = o.degree_cap;
    cfg.properties.seed = o.seed;
    cfg.properties.cases = o.cases;
    return run_full_suite(cfg);
  }
  VerificationReport report;
  if (o.selector == "lemma-3-1") {
    report = verify_lemma_3_1(o.j_max);
  } else if (o.selector == "lemma-4-1") {
    if (o.s || o.j) {
      const int s = o.s.value_or(o.j.value_or(0));
      report = verify_lemma_4_1(s, o.j.value_or(s));
    } else {
      for (int s = 2; s <= 5; ++s) report.append(verify_lemma_4_1(s, s));
    }
  } else if (o.selector == "prop-5-3") {
    report = verify_cover_dimensions();
    report.append(verify_prop_5_3());
  } else if (o.selector == "thm-4-3") {
    if (o.c || o.l) {
      if (!o.c || !o.l) throw UsageError("thm-4-3 needs both --c and --l");
      report = verify_theorem_4_3(*o.c, *o.l);
    } else {
      for (const auto& [c, l] : {std::pair{1, 3}, {1, 4}, {2, 5}, {2, 6}}) report.append(verify_theorem_4_3(c, l));
    }
  } else if (o.selector == "thm-5-4") {
    if (o.l) {
      report = verify_theorem_5_4(*o.l);
    } else {
      report = verify_theorem_5_4(3);
      report.append(verify_theorem_5_4(4));
    }
  } else if (o.selector == "remark-4-4") {
    if (o.s) {
      report = verify_remark_4_4(*o.s);
    } else {
      report = verify_remark_4_4(1);
      report.append(verify_remark_4_4(3));
    }
  } else if (o.selector == "ideal") {
    report = verify_two_sided_ideal(o.degree_cap);
  } else if (o.selector == "controls") {
    report = negative_controls();
  } else if (o.selector == "falsified") {
    // the raw falsified variants; expected to fail
    for (const auto& variant : falsified_variants()) report.append(variant.second);
  } else {
    throw UsageError("unknown selector '" + o.selector + "'");
  }
  return report;
}

int cmd_verify(const Options& o) {
  const VerificationReport report = run_selector(o);
  if (o.format == "json-lines")
    std::cout << report.to_json_lines();
  else
    std::cout << report.to_text(o.timings);
  return report.passed() ? exit_ok : exit_failed;
}

int cmd_model(const Options& o) {
  for (const auto& b : bundled_rings()) {
    if (b.ring.name() == o.model || b.file == o.model) {
      std::cout << write_presentation(b.ring);
      return exit_ok;
    }
  }
  if (o.model == "list") {
    for (const auto& b : bundled_rings()) std::cout << b.ring.name() << '\n';
    return exit_ok;
  }
  throw UsageError("unknown model '" + o.model + "' (try 'list')");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mod 2 Steenrod algebra calculator and verification suite"};
  app.require_subcommand(1);
  Options o;

  auto* normalize = app.add_subcommand("normalize", "Print the admissible form of a Steenrod expression");
  normalize->add_option("expr", o.expr, "e.g. \"Sq2 Sq2 + S3\"")->required();

  auto* act = app.add_subcommand("act", "Apply a Steenrod expression to a ring element");
  act->add_option("--ring", o.ring_path, "Ring presentation file")->required();
  act->add_option("expr", o.expr)->required();
  act->add_option("element", o.element)->required();

  auto* ideal = app.add_subcommand("ideal", "Decide membership in A Sq1 (left) or A Sq1 A (two-sided)");
  ideal->add_option("expr", o.expr)->required();
  ideal->add_option("--which", o.which)->check(CLI::IsMember({"left", "two-sided"}))->capture_default_str();
  ideal->add_option("--degree-cap", o.degree_cap, "Largest degree for the two-sided test")->capture_default_str();

  auto* basis = app.add_subcommand("basis", "List the admissible basis, or a ring's monomial basis, in a degree");
  basis->add_option("degree", o.degree)->required();
  basis->add_option("--ring", o.ring_path, "Ring presentation file");

  auto* verify = app.add_subcommand("verify", "Run verification checks");
  verify
      ->add_option("selector", o.selector,
                   "lemma-3-1, lemma-4-1, prop-5-3, thm-4-3, thm-5-4, remark-4-4, ideal, controls, falsified or all")
      ->required();
  verify->add_option("--j-max", o.j_max)->capture_default_str();
  verify->add_option("--s", o.s);
  verify->add_option("--j", o.j);
  verify->add_option("--c", o.c);
  verify->add_option("--l", o.l);
  verify->add_option("--format", o.format)->check(CLI::IsMember({"text", "json-lines"}))->capture_default_str();
  verify->add_option("--seed", o.seed)->capture_default_str();
  verify->add_option("--cases", o.cases, "Random cases per property")->capture_default_str();
  verify->add_option("--degree-cap", o.degree_cap)->capture_default_str();
  verify->add_flag("!--no-timings", o.timings, "Omit the timing column");

  auto* model = app.add_subcommand("model", "Print a bundled ring presentation");
  model->add_option("name", o.model, "Model name, or 'list'")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*normalize) return cmd_normalize(o);
    if (*act) return cmd_act(o);
    if (*ideal) return cmd_ideal(o);
    if (*basis) return cmd_basis(o);
    if (*verify) return cmd_verify(o);
    if (*model) return cmd_model(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
  } catch (const SemanticError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return exit_usage;
}
