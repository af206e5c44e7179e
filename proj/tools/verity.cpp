// Command-line front end: load a workspace (membership model plus named
// sentence definitions), classify sentences against the least fixed
// point, run the fixed-point constructions, and audit the adequacy norms.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "verity/errors.hpp"
#include "verity/fixpoint.hpp"
#include "verity/norms.hpp"
#include "verity/render.hpp"
#include "verity/workspace.hpp"

namespace {

using namespace verity;

struct Options {
  WorkspaceOptions ws;
  bool json = false;
  EvalOptions eval;
  std::size_t max_universe = 16;
};

Json base_output(const std::string& command, const CodeRegistry& reg,
                 const Universe& universe) {
  Json out;
  out["command"] = command;
  out["universe"] = universe_json(reg, universe);
  out["stages"] = nullptr;
  out["classification"] = nullptr;
  out["violations"] = Json::array();
  out["result"] = Json::object();
  return out;
}

void emit(const Json& out) { std::cout << out.dump(2) << '\n'; }

void print_universe(const Workspace& ws, const Universe& universe) {
  std::cout << "universe: " << universe.sentences.size() << " sentence(s)\n";
  for (const Sentence& s : universe.sentences) {
    Code c = ws.registry.code_of(s);
    std::cout << "  #" << c << "  " << pretty(ws.registry, s);
    if (auto name = ws.registry.alias_name(c)) std::cout << "   [" << *name
                                                         << ']';
    std::cout << '\n';
  }
}

void print_classification(const Workspace& ws,
                          const std::map<Code, Classification>& cls) {
  std::cout << "classification:\n";
  for (const auto& [code, verdict] : cls)
    std::cout << "  #" << code << "  "
              << pretty(ws.registry, ws.registry.sentence_of(code)) << "  =>  "
              << classification_name(verdict) << '\n';
}

int cmd_classify(const Options& opt, const std::string& query, bool explain_it,
                 const std::string& command) {
  Workspace ws = load_workspace(opt.ws);
  Sentence q = query_sentence(ws, query);
  std::vector<Sentence> seeds = ws.defined_sentences();
  seeds.push_back(q);
  Universe universe = referenced_closure(ws.registry, seeds);
  FixedPointReport report = lfp(ws.model, ws.registry, universe, opt.eval);
  Code qc = ws.registry.code_of(q);
  Classification verdict = report.classification.at(qc);
  Trace trace = explain(ws.model, ws.registry, report.fixed_point, q,
                        opt.eval);
  if (opt.json) {
    Json out = base_output(command, ws.registry, universe);
    out["stages"] = stages_json(report.trace);
    out["classification"] = classification_json(ws.registry,
                                                report.classification);
    out["result"]["query"] = {{"code", qc},
                              {"text", pretty(ws.registry, q)},
                              {"verdict", classification_name(verdict)}};
    out["result"]["fixed_point"] = set_json(report.fixed_point);
    out["result"]["trace"] =
        explain_it ? trace_json(ws.registry, trace) : Json(nullptr);
    emit(out);
  } else {
    print_universe(ws, universe);
    std::cout << "least fixed point: "
              << render_set(ws.registry, report.fixed_point) << '\n';
    std::cout << pretty(ws.registry, q) << "  =>  "
              << classification_name(verdict) << '\n';
    if (explain_it) {
      std::cout << "derivation at the fixed point:\n"
                << render_trace_text(ws.registry, trace);
    }
  }
  return 0;
}

int cmd_lfp(const Options& opt) {
  Workspace ws = load_workspace(opt.ws);
  Universe universe = referenced_closure(ws.registry, ws.defined_sentences());
  FixedPointReport report = lfp(ws.model, ws.registry, universe, opt.eval);
  if (opt.json) {
    Json out = base_output("lfp", ws.registry, universe);
    out["stages"] = stages_json(report.trace);
    out["classification"] = classification_json(ws.registry,
                                                report.classification);
    out["result"]["fixed_point"] = set_json(report.fixed_point);
    emit(out);
  } else {
    print_universe(ws, universe);
    std::cout << "stages:\n" << render_stages_text(ws.registry, report.trace);
    std::cout << "least fixed point: "
              << render_set(ws.registry, report.fixed_point) << '\n';
    print_classification(ws, report.classification);
  }
  return 0;
}

int cmd_extend(const Options& opt, const std::vector<std::string>& seeds) {
  Workspace ws = load_workspace(opt.ws);
  Universe universe = referenced_closure(ws.registry, ws.defined_sentences());
  TruthSet seed = alias_set(ws, seeds);
  FixedPointReport report;
  try {
    report =
        extend_from_sound(ws.model, ws.registry, universe, seed, opt.eval);
  } catch (const SoundnessError& e) {
    std::cerr << "error: " << e.what() << "\n"
              << "derivation of the offending member at the seed:\n"
              << render_trace_text(ws.registry, e.why);
    return 1;
  }
  if (opt.json) {
    Json out = base_output("extend", ws.registry, universe);
    out["stages"] = stages_json(report.trace);
    out["classification"] = classification_json(ws.registry,
                                                report.classification);
    out["result"]["seed"] = set_json(seed);
    out["result"]["fixed_point"] = set_json(report.fixed_point);
    emit(out);
  } else {
    print_universe(ws, universe);
    std::cout << "seed: " << render_set(ws.registry, seed) << '\n';
    std::cout << "stages:\n" << render_stages_text(ws.registry, report.trace);
    std::cout << "smallest fixed point containing the seed: "
              << render_set(ws.registry, report.fixed_point) << '\n';
    print_classification(ws, report.classification);
  }
  return 0;
}

int cmd_soundify(const Options& opt, const std::vector<std::string>& names) {
  Workspace ws = load_workspace(opt.ws);
  Universe universe = referenced_closure(ws.registry, ws.defined_sentences());
  TruthSet target = alias_set(ws, names);
  GreatestSoundReport report =
      greatest_sound_subset(ws.model, ws.registry, universe, target, opt.eval);
  if (opt.json) {
    Json out = base_output("soundify", ws.registry, universe);
    out["stages"] = stages_json(report.trace);
    out["classification"] = classification_json(ws.registry,
                                                report.classification);
    out["result"]["target"] = set_json(target);
    out["result"]["greatest_sound_subset"] = set_json(report.result);
    emit(out);
  } else {
    print_universe(ws, universe);
    std::cout << "target: " << render_set(ws.registry, target) << '\n';
    std::cout << "stages:\n" << render_stages_text(ws.registry, report.trace);
    std::cout << "greatest sound subset: "
              << render_set(ws.registry, report.result) << '\n';
    print_classification(ws, report.classification);
  }
  return 0;
}

int cmd_enumerate(const Options& opt) {
  Workspace ws = load_workspace(opt.ws);
  Universe universe = referenced_closure(ws.registry, ws.defined_sentences());
  std::vector<TruthSet> points = enumerate_fixed_points(
      ws.model, ws.registry, universe, opt.max_universe, opt.eval);
  if (opt.json) {
    Json out = base_output("enumerate", ws.registry, universe);
    Json list = Json::array();
    for (const TruthSet& p : points) list.push_back(set_json(p));
    out["result"]["fixed_points"] = std::move(list);
    out["result"]["count"] = points.size();
    emit(out);
  } else {
    print_universe(ws, universe);
    std::cout << points.size() << " fixed point(s):\n";
    for (const TruthSet& p : points)
      std::cout << "  " << render_set(ws.registry, p) << '\n';
  }
  return 0;
}

int cmd_norms(const Options& opt, bool all_fixed_points,
              std::size_t samples) {
  Workspace ws = load_workspace(opt.ws);
  Universe universe = referenced_closure(ws.registry, ws.defined_sentences());
  std::vector<std::pair<std::string, FixedPointReport>> reports;
  reports.emplace_back(
      "least fixed point",
      lfp(ws.model, ws.registry, universe, opt.eval));
  if (all_fixed_points) {
    std::vector<TruthSet> points = enumerate_fixed_points(
        ws.model, ws.registry, universe, opt.max_universe, opt.eval);
    for (const TruthSet& p : points) {
      if (p == reports.front().second.fixed_point) continue;
      FixedPointReport r;
      r.fixed_point = p;
      r.universe = universe;
      r.trace.stages.push_back(p);
      r.classification =
          classify_universe(ws.model, ws.registry, p, universe, opt.eval);
      reports.emplace_back("fixed point " + render_set(ws.registry, p),
                           std::move(r));
    }
  }
  bool all_pass = true;
  Json cards = Json::array();
  Json violations = Json::array();
  for (const auto& [label, report] : reports) {
    auto card =
        norm_report_card(ws.model, ws.registry, report, samples, opt.eval);
    for (const NormCheckResult& r : card) {
      all_pass = all_pass && r.pass;
      for (const NormViolation& v : r.violations) {
        Json vj;
        vj["at"] = label;
        vj["norm"] = r.norm;
        if (v.code) vj["code"] = *v.code;
        vj["detail"] = v.detail;
        violations.push_back(std::move(vj));
      }
    }
    if (opt.json) {
      Json e;
      e["at"] = label;
      e["fixed_point"] = set_json(report.fixed_point);
      e["norms"] = norm_card_json(card);
      cards.push_back(std::move(e));
    } else {
      std::cout << "norms at " << label << ":\n"
                << render_norm_card_text(card);
    }
  }
  if (opt.json) {
    Json out = base_output("norms", ws.registry, universe);
    out["violations"] = std::move(violations);
    out["result"]["reports"] = std::move(cards);
    emit(out);
  } else if (!all_pass) {
    std::cout << "norm violations found\n";
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"truth-predicate workbench over finite membership models"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--model", opt.ws.model_path, "model file (default model.txt)")
      ->each([&](const std::string&) { opt.ws.model_path_explicit = true; });
  app.add_option("--defs", opt.ws.defs_path,
                 "definitions file (default defs.txt)")
      ->each([&](const std::string&) { opt.ws.defs_path_explicit = true; });
  app.add_option("--rank", opt.ws.rank,
                 "rank of the synthesized default model (1-5)")
      ->default_val(4);
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--full-semantics", opt.eval.full_quantified_t,
               "give the quantified-T forms their fixed-point verdicts "
               "instead of the literal finite-set reading");
  app.add_option("--max-universe", opt.max_universe,
                 "enumeration bound on tracked sentences")
      ->default_val(16);

  std::string query;
  bool explain_flag = false;
  auto* classify = app.add_subcommand(
      "classify", "classify a sentence or alias at the least fixed point");
  classify->add_option("sentence", query, "sentence text or alias")
      ->required();
  classify->add_flag("--explain", explain_flag, "print the derivation");

  std::string explain_query;
  auto* explain_cmd = app.add_subcommand(
      "explain", "classify and print the rule-by-rule derivation");
  explain_cmd->add_option("sentence", explain_query, "sentence text or alias")
      ->required();

  auto* lfp_cmd =
      app.add_subcommand("lfp", "compute the least fixed point stage by stage");

  std::vector<std::string> seeds;
  auto* extend = app.add_subcommand(
      "extend", "smallest fixed point containing a sound seed set");
  extend->add_option("--seed", seeds, "alias of a seed member (repeatable)")
      ->required();

  std::vector<std::string> target;
  auto* soundify = app.add_subcommand(
      "soundify", "greatest sound subset of a target set");
  soundify->add_option("--set", target, "alias of a target member (repeatable)")
      ->required();

  auto* enumerate =
      app.add_subcommand("enumerate", "all fixed points by brute force");

  bool all_fixed_points = false;
  std::size_t samples = 1000;
  auto* norms =
      app.add_subcommand("norms", "audit the adequacy norms (a)-(j)");
  norms->add_flag("--all-fixed-points", all_fixed_points,
                  "audit every enumerated fixed point, not just the least");
  norms->add_option("--samples", samples,
                    "sample count for the compositionality norm")
      ->default_val(1000);

  CLI11_PARSE(app, argc, argv);

  opt.json = format == "json";
  try {
    if (classify->parsed())
      return cmd_classify(opt, query, explain_flag, "classify");
    if (explain_cmd->parsed())
      return cmd_classify(opt, explain_query, true, "explain");
    if (lfp_cmd->parsed()) return cmd_lfp(opt);
    if (extend->parsed()) return cmd_extend(opt, seeds);
    if (soundify->parsed()) return cmd_soundify(opt, target);
    if (enumerate->parsed()) return cmd_enumerate(opt);
    if (norms->parsed())
      return cmd_norms(opt, all_fixed_points, samples);
  } catch (const ParseError& e) {
    std::cerr << "parse error at offset " << e.offset << ": " << e.what()
              << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
