// Command-line front door: parse logic-program inputs, dispatch one of the
// update semantics, and render answer sets, transforms, comparisons, graph
// verdicts, or the property regression report.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "updlp/alt_semantics.hpp"
#include "updlp/dynlp.hpp"
#include "updlp/minimality.hpp"
#include "updlp/parser.hpp"
#include "updlp/postulates.hpp"
#include "updlp/solver.hpp"
#include "updlp/update.hpp"

namespace {

using nlohmann::json;

constexpr int kExitSat = 0;
constexpr int kExitUnsat = 1;
constexpr int kExitError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Every input file may hold several layers split by "#update." lines; the
// layers of all files are concatenated in argument order.
updlp::UpdateSequence load_sequence(const std::vector<std::string>& files,
                                    updlp::Mode mode) {
  std::vector<updlp::Program> layers;
  for (const auto& f : files) {
    std::string text = read_file(f);
    try {
      auto part = updlp::parse_sequence(text, mode);
      for (auto& p : part.programs) layers.push_back(std::move(p));
    } catch (const updlp::ParseError& e) {
      throw UsageError(f + ": " + e.what());
    }
  }
  return updlp::make_sequence(std::move(layers), mode);
}

std::size_t resolve_atom_cap(bool cli_set, std::size_t cli_value) {
  if (cli_set) return cli_value;
  if (const char* env = std::getenv("UPD_ATOM_CAP")) {
    std::string raw(env);
    std::size_t value = 0;
    std::size_t used = 0;
    try {
      value = std::stoul(raw, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != raw.size() || value == 0)
      throw UsageError("UPD_ATOM_CAP: invalid capacity bound '" + raw + "'");
    return value;
  }
  return updlp::kDefaultAtomCap;
}

std::vector<std::string> sorted_literals(const updlp::Interpretation& s) {
  std::vector<std::string> out;
  out.reserve(s.lits.size());
  for (const auto& l : s.lits) out.push_back(updlp::to_string(l));
  std::sort(out.begin(), out.end());
  return out;
}

std::string braces(const std::vector<std::string>& literals) {
  std::string out = "{";
  for (std::size_t i = 0; i < literals.size(); ++i) {
    if (i) out += ", ";
    out += literals[i];
  }
  return out + "}";
}

struct RejectedRule {
  int layer = 0;
  int position = 0;
  std::string text;
};

struct AnswerRecord {
  std::vector<std::string> literals;
  std::vector<RejectedRule> rejected;
};

std::vector<RejectedRule> rejected_of(const updlp::UpdateSequence& seq,
                                      const updlp::Interpretation& s) {
  std::vector<RejectedRule> out;
  for (const auto& name : updlp::rej(seq, s).total()) {
    const updlp::Rule* r = updlp::find_rule(seq, name);
    out.push_back({name.layer, name.position, r ? updlp::render(*r) : ""});
  }
  return out;
}

int emit_records(const std::vector<AnswerRecord>& records, bool structured,
                 bool show_rejected) {
  if (structured) {
    json arr = json::array();
    for (const auto& rec : records) {
      json rejected = json::array();
      for (const auto& r : rec.rejected)
        rejected.push_back(
            {{"layer", r.layer}, {"position", r.position}, {"rule-text", r.text}});
      arr.push_back({{"literals", rec.literals}, {"rejected", rejected}});
    }
    std::cout << arr.dump(2) << "\n";
  } else if (records.empty()) {
    std::cout << "no answer sets\n";
  } else {
    for (std::size_t i = 0; i < records.size(); ++i) {
      std::cout << "answer set " << (i + 1) << ": " << braces(records[i].literals)
                << "\n";
      if (!show_rejected) continue;
      if (records[i].rejected.empty()) {
        std::cout << "  rejected: none\n";
        continue;
      }
      for (const auto& r : records[i].rejected)
        std::cout << "  rejected (" << r.layer << "," << r.position
                  << "): " << r.text << "\n";
    }
  }
  return records.empty() ? kExitUnsat : kExitSat;
}

updlp::Interpretation total_view(const updlp::GeneralizedInterpretation& m) {
  updlp::Interpretation s;
  for (const auto& atom : m.universe)
    s.lits.insert(m.pos.count(atom) ? updlp::pos(atom) : updlp::sneg(atom));
  return s;
}

// ---------------------------------------------------------------------------
// solve
// ---------------------------------------------------------------------------

struct SolveConfig {
  std::vector<std::string> files;
  std::string semantics = "update";
  std::string mode = "elp";
  std::string format = "text";
  std::string method = "direct";
  bool show_rejected = false;
  int state = 0;
  bool state_set = false;
  std::size_t atom_cap = updlp::kDefaultAtomCap;
  bool cap_set = false;
};

int run_solve(const SolveConfig& cfg) {
  const bool glp = cfg.mode == "glp";
  if (glp && cfg.semantics != "dynamic" && cfg.semantics != "update")
    throw UsageError(
        "--mode=glp supports --semantics=dynamic or --semantics=update");
  if (cfg.semantics == "justified" && !cfg.state_set)
    throw UsageError("--semantics=justified requires --state");
  const bool rejection_semantics = cfg.semantics == "update" ||
                                   cfg.semantics == "minimal" ||
                                   cfg.semantics == "strict";
  if (cfg.show_rejected && !rejection_semantics)
    throw UsageError(
        "--show-rejected requires --semantics=update, minimal, or strict");

  std::size_t cap = resolve_atom_cap(cfg.cap_set, cfg.atom_cap);
  auto seq = load_sequence(cfg.files, glp ? updlp::Mode::Glp : updlp::Mode::Elp);
  auto method = cfg.method == "direct" ? updlp::MinimalityMethod::Direct
                                       : updlp::MinimalityMethod::TestProgram;

  std::vector<AnswerRecord> records;
  auto append_family = [&](const updlp::AnswerSetList& family,
                           const updlp::UpdateSequence& rej_source,
                           bool with_rejected) {
    for (const auto& s : family) {
      AnswerRecord rec;
      rec.literals = sorted_literals(s);
      if (with_rejected) rec.rejected = rejected_of(rej_source, s);
      records.push_back(std::move(rec));
    }
  };

  if (glp) {
    if (cfg.semantics == "dynamic") {
      for (const auto& m : updlp::dynamic_stable_models(seq, cap)) {
        AnswerRecord rec;
        rec.literals.assign(m.pos.begin(), m.pos.end());
        records.push_back(std::move(rec));
      }
    } else {
      auto translated = updlp::q_translate(seq);
      append_family(updlp::update_answer_sets(translated, cap), translated,
                    cfg.show_rejected);
    }
  } else if (cfg.semantics == "update") {
    append_family(updlp::update_answer_sets(seq, cap), seq, cfg.show_rejected);
  } else if (cfg.semantics == "minimal") {
    append_family(updlp::minimal_answer_sets(seq, method, cap), seq,
                  cfg.show_rejected);
  } else if (cfg.semantics == "strict") {
    append_family(updlp::strictly_minimal_answer_sets(seq, method, cap), seq,
                  cfg.show_rejected);
  } else if (cfg.semantics == "dynamic") {
    append_family(updlp::dynamic_answer_sets(seq, cap), seq, false);
  } else if (cfg.semantics == "inheritance") {
    append_family(updlp::inh_answer_sets(updlp::to_inheritance(seq), cap), seq,
                  false);
  } else {
    append_family(updlp::justified_updates(seq, cfg.state, cap), seq, false);
  }

  return emit_records(records, cfg.format == "structured", cfg.show_rejected);
}

// ---------------------------------------------------------------------------
// transform
// ---------------------------------------------------------------------------

struct TransformConfig {
  std::vector<std::string> files;
  std::string semantics = "update";
  std::string mode = "elp";
  bool simplify = false;
};

int run_transform(const TransformConfig& cfg) {
  const bool glp = cfg.mode == "glp";
  if (glp && cfg.semantics != "dynamic" && cfg.semantics != "update")
    throw UsageError(
        "--mode=glp supports --semantics=dynamic or --semantics=update");
  if (!glp && cfg.semantics != "update")
    throw UsageError("transform supports --semantics=update unless --mode=glp");

  auto seq = load_sequence(cfg.files, glp ? updlp::Mode::Glp : updlp::Mode::Elp);
  updlp::Program out;
  if (glp && cfg.semantics == "dynamic") {
    out = updlp::build_dynamic_program(seq);
  } else if (glp) {
    out = updlp::build_update_program(updlp::q_translate(seq), {cfg.simplify});
  } else {
    out = updlp::build_update_program(seq, {cfg.simplify});
  }
  std::string text = updlp::render(out);
  if (!text.empty()) std::cout << text << "\n";
  return kExitSat;
}

// ---------------------------------------------------------------------------
// compare
// ---------------------------------------------------------------------------

struct CompareConfig {
  std::vector<std::string> files;
  std::string mode = "elp";
  std::size_t atom_cap = updlp::kDefaultAtomCap;
  bool cap_set = false;
};

void print_family(const std::string& label, const updlp::AnswerSetList& family) {
  std::cout << label << ": " << family.size() << "\n";
  for (std::size_t i = 0; i < family.size(); ++i)
    std::cout << "answer set " << (i + 1) << ": "
              << braces(sorted_literals(family[i])) << "\n";
}

int run_compare(const CompareConfig& cfg) {
  const bool glp = cfg.mode == "glp";
  std::size_t cap = resolve_atom_cap(cfg.cap_set, cfg.atom_cap);
  auto seq = load_sequence(cfg.files, glp ? updlp::Mode::Glp : updlp::Mode::Elp);

  updlp::AnswerSetList update_side, dynamic_side;
  if (glp) {
    update_side = updlp::update_answer_sets(updlp::q_translate(seq), cap);
    for (const auto& m : updlp::dynamic_stable_models(seq, cap))
      dynamic_side.push_back(total_view(m));
  } else {
    update_side = updlp::update_answer_sets(seq, cap);
    dynamic_side = updlp::dynamic_answer_sets(seq, cap);
  }

  auto minus = [](const updlp::AnswerSetList& a, const updlp::AnswerSetList& b) {
    updlp::AnswerSetList out;
    for (const auto& s : a)
      if (std::find(b.begin(), b.end(), s) == b.end()) out.push_back(s);
    return out;
  };
  auto update_only = minus(update_side, dynamic_side);
  auto dynamic_only = minus(dynamic_side, update_side);

  print_family("update answer sets", update_side);
  print_family("dynamic answer sets", dynamic_side);
  print_family("only update", update_only);
  print_family("only dynamic", dynamic_only);
  std::cout << "dynamic contained in update: "
            << (dynamic_only.empty() ? "yes" : "no") << "\n";
  return update_side.empty() ? kExitUnsat : kExitSat;
}

// ---------------------------------------------------------------------------
// graph-check
// ---------------------------------------------------------------------------

struct GraphConfig {
  std::vector<std::string> files;
  std::string mode = "glp";
  std::size_t atom_cap = updlp::kDefaultAtomCap;
  bool cap_set = false;
};

int run_graph_check(const GraphConfig& cfg) {
  const bool glp = cfg.mode == "glp";
  std::size_t cap = resolve_atom_cap(cfg.cap_set, cfg.atom_cap);
  auto seq = load_sequence(cfg.files, glp ? updlp::Mode::Glp : updlp::Mode::Elp);
  updlp::CoincidenceReport report =
      glp ? updlp::coincidence_check(seq, cap)
          : updlp::coincidence_check_elp(seq, cap);

  std::cout << "certificate: " << (report.certificate ? "yes" : "no") << "\n";
  std::cout << "records: " << report.records.size() << "\n";
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    const auto& r = report.records[i];
    std::cout << "record " << (i + 1) << ": "
              << braces(sorted_literals(r.answer_set))
              << " graph=" << (r.graph_verdict ? "yes" : "no")
              << " fixpoint=" << (r.fixpoint_verdict ? "yes" : "no");
    if (!r.note.empty()) std::cout << " (" << r.note << ")";
    std::cout << "\n";
  }
  std::cout << "verdicts agree: " << (report.all_agree() ? "yes" : "no") << "\n";
  return report.all_agree() ? kExitSat : kExitUnsat;
}

// ---------------------------------------------------------------------------
// postulates
// ---------------------------------------------------------------------------

struct PostulatesConfig {
  std::string id;
  unsigned seed = 1;
  int rounds = 200;
  std::string format = "text";
  std::size_t atom_cap = updlp::kDefaultAtomCap;
  bool cap_set = false;
};

int run_postulates(const PostulatesConfig& cfg) {
  std::size_t cap = resolve_atom_cap(cfg.cap_set, cfg.atom_cap);
  if (cfg.rounds < 1) throw UsageError("--rounds must be positive");
  auto rep = updlp::run_regression_suite(cfg.seed, cfg.rounds, cap);

  // Undecided catalogue rows carry no checks but still belong in the table.
  for (const auto& entry : updlp::postulate_catalogue()) {
    if (entry.verdict != "not interpretable") continue;
    updlp::RegressionEntry e;
    e.id = entry.id;
    e.kind = "catalogue";
    e.expected = entry.verdict;
    e.note = "skipped";
    rep.entries.push_back(std::move(e));
  }

  std::vector<updlp::RegressionEntry> rows;
  for (const auto& e : rep.entries)
    if (cfg.id.empty() || e.id == cfg.id) rows.push_back(e);
  if (rows.empty()) throw UsageError("unknown postulate id: " + cfg.id);

  int failed = 0;
  for (const auto& e : rows)
    if (!e.as_expected) ++failed;

  if (cfg.format == "structured") {
    json arr = json::array();
    for (const auto& e : rows)
      arr.push_back({{"id", e.id},
                     {"kind", e.kind},
                     {"expected", e.expected},
                     {"result", e.as_expected ? "pass" : "fail"},
                     {"premises-hold", e.premises_hold},
                     {"note", e.note}});
    json out = {{"entries", arr},
                {"checked", static_cast<int>(rows.size())},
                {"failed", failed}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << std::left << std::setw(22) << "id" << std::setw(11) << "kind"
              << std::setw(20) << "expected" << std::setw(8) << "result"
              << "note\n";
    for (const auto& e : rows) {
      std::string result =
          e.kind == "catalogue" ? "skip" : (e.as_expected ? "pass" : "FAIL");
      std::cout << std::left << std::setw(22) << e.id << std::setw(11) << e.kind
                << std::setw(20) << e.expected << std::setw(8) << result
                << e.note << "\n";
    }
    std::cout << "checked: " << rows.size() << "  failed: " << failed << "\n";
  }
  return failed == 0 ? kExitSat : kExitUnsat;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Causal-rejection update semantics for logic program sequences"};
  app.require_subcommand(1);

  SolveConfig solve;
  auto* solve_cmd = app.add_subcommand(
      "solve", "Enumerate answer sets of an update sequence");
  solve_cmd->add_option("files", solve.files, "input programs, oldest first")
      ->required();
  solve_cmd
      ->add_option("--semantics", solve.semantics,
                   "update|minimal|strict|dynamic|inheritance|justified")
      ->check(CLI::IsMember({"update", "minimal", "strict", "dynamic",
                             "inheritance", "justified"}));
  solve_cmd->add_option("--mode", solve.mode, "elp|glp")
      ->check(CLI::IsMember({"elp", "glp"}));
  solve_cmd->add_option("--format", solve.format, "text|structured")
      ->check(CLI::IsMember({"text", "structured"}));
  solve_cmd->add_option("--method", solve.method,
                        "minimality check: direct|test-program")
      ->check(CLI::IsMember({"direct", "test-program"}));
  solve_cmd->add_flag("--show-rejected", solve.show_rejected,
                      "annotate answer sets with rejected rules");
  auto* state_opt = solve_cmd->add_option(
      "--state", solve.state, "state index for --semantics=justified");
  auto* solve_cap = solve_cmd->add_option("--atom-cap", solve.atom_cap,
                                          "alphabet capacity bound");

  TransformConfig transform;
  auto* transform_cmd = app.add_subcommand(
      "transform", "Print the compiled single-program translation");
  transform_cmd
      ->add_option("files", transform.files, "input programs, oldest first")
      ->required();
  transform_cmd->add_option("--semantics", transform.semantics, "update|dynamic")
      ->check(CLI::IsMember({"update", "dynamic"}));
  transform_cmd->add_option("--mode", transform.mode, "elp|glp")
      ->check(CLI::IsMember({"elp", "glp"}));
  transform_cmd->add_flag("--simplify", transform.simplify,
                          "drop vacuous final-layer rejection guards");

  CompareConfig compare;
  auto* compare_cmd = app.add_subcommand(
      "compare", "Update answer sets against dynamic models, with witnesses");
  compare_cmd->add_option("files", compare.files, "input programs, oldest first")
      ->required();
  compare_cmd->add_option("--mode", compare.mode, "elp|glp")
      ->check(CLI::IsMember({"elp", "glp"}));
  auto* compare_cap = compare_cmd->add_option("--atom-cap", compare.atom_cap,
                                              "alphabet capacity bound");

  GraphConfig graph;
  auto* graph_cmd = app.add_subcommand(
      "graph-check", "Acyclicity certificate for semantics coincidence");
  graph_cmd->add_option("files", graph.files, "input programs, oldest first")
      ->required();
  graph_cmd->add_option("--mode", graph.mode, "elp|glp")
      ->check(CLI::IsMember({"elp", "glp"}));
  auto* graph_cap = graph_cmd->add_option("--atom-cap", graph.atom_cap,
                                          "alphabet capacity bound");

  PostulatesConfig post;
  auto* post_cmd =
      app.add_subcommand("postulates", "Belief-change property harness");
  auto* post_run = post_cmd->add_subcommand("run", "run the regression suite");
  post_cmd->require_subcommand(1);
  post_run->add_option("--id", post.id, "restrict the report to one property");
  post_run->add_option("--seed", post.seed, "random seed");
  post_run->add_option("--rounds", post.rounds,
                       "random instances per satisfied row");
  post_run->add_option("--format", post.format, "text|structured")
      ->check(CLI::IsMember({"text", "structured"}));
  auto* post_cap =
      post_run->add_option("--atom-cap", post.atom_cap, "alphabet capacity bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*solve_cmd) {
      solve.state_set = state_opt->count() > 0;
      solve.cap_set = solve_cap->count() > 0;
      return run_solve(solve);
    }
    if (*transform_cmd) return run_transform(transform);
    if (*compare_cmd) {
      compare.cap_set = compare_cap->count() > 0;
      return run_compare(compare);
    }
    if (*graph_cmd) {
      graph.cap_set = graph_cap->count() > 0;
      return run_graph_check(graph);
    }
    post.cap_set = post_cap->count() > 0;
    return run_postulates(post);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const updlp::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const updlp::CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
