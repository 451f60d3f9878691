#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lamlab/cbneed.hpp"
#include "lamlab/derivation.hpp"
#include "lamlab/derivation_dyn.hpp"
#include "lamlab/harness.hpp"
#include "lamlab/json_io.hpp"
#include "lamlab/neededness.hpp"
#include "lamlab/reduction.hpp"
#include "lamlab/residuals.hpp"

using namespace lamlab;
using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw LamError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json load_json(const std::string& path) { return json::parse(read_file(path)); }

void print_trace_text(const StrategyResult& res) {
  std::cout << print_term(res.trace.initial) << "\n";
  for (const TraceStep& s : res.trace.steps)
    std::cout << "  " << s.occ.display() << " -> " << print_term(s.after) << "\n";
  std::cout << (res.status == StrategyStatus::Normalized ? "normalized" : "fuel exhausted")
            << " (" << res.trace.size() << " steps)\n";
}

Strategy strategy_from_name(const std::string& name) {
  if (name == "name") return Strategy::Name;
  if (name == "head") return Strategy::Head;
  return Strategy::Leftmost;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lambda-calculus laboratory: strategies, residuals, neededness, "
               "intersection typings and call-by-need"};
  app.require_subcommand(1);
  int exit_code = 0;

  std::string term_src;
  std::string file_path;
  int fuel = 10000;
  bool as_json = false;

  auto* parse_cmd = app.add_subcommand("parse", "parse a term and echo it");
  parse_cmd->add_option("term", term_src, "term, closures t[x/u] allowed")->required();
  parse_cmd->add_flag("--json", as_json, "emit the JSON encoding");
  parse_cmd->callback([&] {
    Term t = parse_term(term_src, true);
    if (as_json)
      std::cout << term_to_json(t).dump(2) << "\n";
    else
      std::cout << print_term(t) << "\n";
  });

  std::string strategy = "name";
  std::string trace_fmt = "text";
  auto* reduce_cmd = app.add_subcommand("reduce", "run a deterministic strategy");
  reduce_cmd->add_option("--strategy", strategy, "name | head | leftmost")
      ->check(CLI::IsMember({"name", "head", "leftmost"}));
  reduce_cmd->add_option("--fuel", fuel, "step budget (default 10000)");
  reduce_cmd->add_option("--trace", trace_fmt, "json | text")
      ->check(CLI::IsMember({"json", "text"}));
  reduce_cmd->add_option("term", term_src)->required();
  reduce_cmd->callback([&] {
    StrategyResult res = run_strategy(parse_term(term_src), strategy_from_name(strategy), fuel);
    if (trace_fmt == "json")
      std::cout << trace_to_json(res).dump(2) << "\n";
    else
      print_trace_text(res);
  });

  std::string of_occ;
  std::string after_occ;
  std::string trace_file;
  auto* residuals_cmd = app.add_subcommand("residuals", "track a position through reduction");
  residuals_cmd->add_option("--of", of_occ, "position to track")->required();
  residuals_cmd->add_option("--after", after_occ, "redex occurrence to contract");
  residuals_cmd->add_option("--trace", trace_file, "reduction trace JSON file");
  residuals_cmd->add_option("term", term_src);
  residuals_cmd->callback([&] {
    Occurrence p = Occurrence::parse(of_occ);
    if (after_occ.empty() == trace_file.empty())
      throw LamError("give exactly one of --after or --trace");
    if (!after_occ.empty()) {
      if (term_src.empty()) throw LamError("--after needs the term");
      Term t = parse_term(term_src);
      std::cout << display(residuals_step(t, p, Occurrence::parse(after_occ))) << "\n";
    } else {
      StrategyResult res = trace_from_json(load_json(trace_file));
      std::cout << display(residuals_trace({p}, res.trace)) << "\n";
    }
  });

  std::string occ;
  auto* needed_cmd = app.add_subcommand("needed", "classify a redex occurrence");
  needed_cmd->add_option("--occ", occ, "redex occurrence")->required();
  needed_cmd->add_option("--fuel", fuel, "step budget (default 10000)");
  needed_cmd->add_option("term", term_src)->required();
  needed_cmd->callback([&] {
    Term t = parse_term(term_src);
    Occurrence r = Occurrence::parse(occ);
    NeedReport report = classify_full(t, r, fuel);
    std::cout << "needed:           " << to_string(report.flags.needed) << "\n";
    std::cout << "head needed:      " << to_string(report.flags.head_needed) << "\n";
    std::cout << "weak-head needed: " << to_string(report.flags.whnd_needed) << "\n";
    auto witness = [&](const char* label, const StrategyResult& res) {
      std::cout << label << " trace (" << (used_in(r, res.trace) ? "uses" : "avoids")
                << " the redex):\n";
      print_trace_text(res);
    };
    witness("leftmost", report.leftmost);
    witness("head", report.head);
    witness("name", report.name);
  });

  auto* typecheck_cmd = app.add_subcommand("typecheck", "validate a derivation JSON file");
  typecheck_cmd->add_option("file", file_path, "derivation JSON, - for stdin")->required();
  typecheck_cmd->callback([&] {
    Derivation d = derivation_from_json(load_json(file_path));
    validate(d);
    std::cout << "ok: " << print_judgement(d) << "\n";
  });

  auto* toc_cmd = app.add_subcommand("toc", "typed occurrences of a derivation JSON file");
  toc_cmd->add_option("file", file_path, "derivation JSON, - for stdin")->required();
  toc_cmd->callback([&] {
    Derivation d = derivation_from_json(load_json(file_path));
    validate(d);
    std::cout << display(typed_occurrences(d)) << "\n";
  });

  auto* infer_cmd = app.add_subcommand("infer", "principal derivation of a normalising term");
  infer_cmd->add_option("--fuel", fuel, "step budget (default 10000)");
  infer_cmd->add_option("term", term_src)->required();
  infer_cmd->callback([&] {
    std::optional<Derivation> d = infer_principal(parse_term(term_src), fuel);
    if (!d) {
      std::cerr << "no weak-head normal form within fuel; not typable as far as we can tell\n";
      exit_code = 1;
      return;
    }
    std::cout << derivation_to_json(*d).dump(2) << "\n";
  });

  auto* whnd_cmd = app.add_subcommand("whnd-redexes",
                                      "weak-head needed redexes, read off the principal typing");
  whnd_cmd->add_option("--fuel", fuel, "step budget (default 10000)");
  whnd_cmd->add_option("term", term_src)->required();
  whnd_cmd->callback([&] {
    std::optional<OccurrenceSet> s = whnd_redexes_by_typing(parse_term(term_src), fuel);
    if (!s) {
      std::cerr << "no weak-head normal form within fuel\n";
      exit_code = 1;
      return;
    }
    std::cout << display(*s) << "\n";
  });

  bool want_trace = false;
  auto* cbneed_cmd = app.add_subcommand("cbneed", "evaluate with call-by-need");
  cbneed_cmd->add_option("--fuel", fuel, "step budget (default 10000)");
  cbneed_cmd->add_flag("--trace", want_trace, "emit the full trace as JSON");
  cbneed_cmd->add_option("term", term_src, "term, closures t[x/u] allowed")->required();
  cbneed_cmd->callback([&] {
    NeedResult res = eval_need(parse_term(term_src, true), fuel);
    if (want_trace) {
      std::cout << need_result_to_json(res).dump(2) << "\n";
      return;
    }
    switch (res.outcome) {
      case NeedOutcome::Answer:
        std::cout << "answer (" << res.steps.size() << " steps): " << print_term(res.final_term)
                  << "\n";
        std::cout << "unfolded: " << print_term(unfold(res.final_term)) << "\n";
        break;
      case NeedOutcome::Stuck:
        std::cout << "stuck on " << res.stuck_var << " (" << res.steps.size()
                  << " steps): " << print_term(res.final_term) << "\n";
        break;
      case NeedOutcome::FuelExhausted:
        std::cout << "fuel exhausted (" << res.steps.size() << " steps)\n";
        break;
    }
  });

  std::string corpus_file;
  std::string out_file;
  int equiv_fuel = 2000;
  auto* equiv_cmd = app.add_subcommand(
      "equiv-check", "check typable / name / weak-head-needed / need agreement on a corpus");
  equiv_cmd->add_option("--corpus", corpus_file,
                        "corpus spec JSON {seed, max_size, count, closed_only, include_zoo}");
  equiv_cmd->add_option("--fuel", equiv_fuel, "step budget per checker (default 2000)");
  equiv_cmd->add_option("--out", out_file, "write the report JSON here");
  equiv_cmd->callback([&] {
    CorpusSpec spec;
    if (!corpus_file.empty()) {
      json j = load_json(corpus_file);
      spec.seed = j.value("seed", spec.seed);
      spec.max_size = j.value("max_size", spec.max_size);
      spec.count = j.value("count", spec.count);
      spec.closed_only = j.value("closed_only", spec.closed_only);
      spec.include_zoo = j.value("include_zoo", spec.include_zoo);
    }
    EquivalenceReport report = run_corpus(spec, equiv_fuel);
    json rows = json::array();
    for (const EquivalenceRow& row : report.rows)
      rows.push_back(json{{"term", print_term(row.term)},
                          {"typable", to_string(row.typable)},
                          {"wn_name", to_string(row.wn_name)},
                          {"wn_whnd", to_string(row.wn_whnd)},
                          {"wn_need", to_string(row.wn_need)},
                          {"mismatches", row.mismatches}});
    json report_json{{"fuel", equiv_fuel},
                     {"terms", report.rows.size()},
                     {"mismatch_count", report.mismatch_count},
                     {"rows", rows}};
    if (out_file.empty()) {
      std::cout << report_json.dump(2) << "\n";
    } else {
      std::ofstream out(out_file);
      if (!out) throw LamError("cannot write " + out_file);
      out << report_json.dump(2) << "\n";
      std::cout << "checked " << report.rows.size() << " terms, " << report.mismatch_count
                << " mismatches -> " << out_file << "\n";
    }
    if (report.mismatch_count > 0) exit_code = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const LamError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "json error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
