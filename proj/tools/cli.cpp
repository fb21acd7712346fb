#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "webiso/error.hpp"
#include "webiso/report.hpp"

namespace webiso::cli {

namespace {

struct RunConfig {
  std::string input;
  std::string field;
  std::optional<int> order;
  std::optional<int> degree_cap;
  std::string out;
  int verbosity = 0;
  std::string atlas_id;
  bool all = false;
  std::string report_dir;
  int jobs = 1;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": malformed JSON: " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

void emit(const RunConfig& cfg, const json& j, std::ostream& out) {
  if (cfg.out.empty())
    out << dump(j);
  else
    write_file(cfg.out, dump(j));
}

void check_config(const RunConfig& cfg, int order) {
  if (order < 4) throw UsageError("--order must be at least 4");
  if (cfg.degree_cap && (*cfg.degree_cap < 1 || *cfg.degree_cap > order - 1))
    throw UsageError("--degree-cap must lie in [1, W-1]");
}

WebSpec load_web(const RunConfig& cfg) {
  const json j = read_json(cfg.input);
  WebSpec w = web_from_json(j, cfg.order);
  check_config(cfg, w.order());
  return w;
}

SolverOptions solver_options(const RunConfig& cfg) {
  SolverOptions o;
  o.degree_cap = cfg.degree_cap;
  return o;
}

int degree_cap(const RunConfig& cfg, int order) { return cfg.degree_cap.value_or(order - 1); }

void log(const RunConfig& cfg, std::ostream& err, const std::string& msg) {
  if (cfg.verbosity > 0) err << msg << "\n";
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const WebSpec w = load_web(cfg);
  log(cfg, err, "analyzing n=" + std::to_string(w.n()) + " at order " + std::to_string(w.order()));
  const AnalysisReport a = analyze_web(w, solver_options(cfg));
  json j = report_header(w.order(), degree_cap(cfg, w.order()));
  j["command"] = "analyze";
  j["web"] = web_to_json(w);
  j["report"] = to_json(a);
  emit(cfg, j, out);
  if (!a.validation.valid) {
    err << "invalid web: " << a.validation.message << "\n";
    return kInvalidWeb;
  }
  for (const auto& alarm : a.alarms) err << "consistency alarm: " << alarm << "\n";
  return a.alarms.empty() ? kOk : kAlarm;
}

int cmd_normal_form(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const WebSpec w = load_web(cfg);
  json j = report_header(w.order(), degree_cap(cfg, w.order()));
  j["command"] = "normal-form";
  j["web"] = web_to_json(w);
  j["normal_form"] = to_json(compute_normal_form(w));
  emit(cfg, j, out);
  return kOk;
}

int cmd_parallelizable(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const WebSpec w = load_web(cfg);
  const ParallelizabilityReport r =
      parallelizability_test(w, solve_symmetries(w, solver_options(cfg)), compute_normal_form(w));
  json j = report_header(w.order(), degree_cap(cfg, w.order()));
  j["command"] = "parallelizable";
  j["web"] = web_to_json(w);
  j["parallelizability"] = to_json(r);
  emit(cfg, j, out);
  if (r.verdict == Verdict::Inconsistent) {
    err << "consistency alarm: the two parallelizability branches disagree\n";
    return kAlarm;
  }
  return kOk;
}

int cmd_verify_field(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const WebSpec w = load_web(cfg);
  require_valid(w);
  const DiagonalField x = field_from_json(read_json(cfg.field), w);
  const SymmetryCertificate c = is_symmetry(x, w);
  json j = report_header(w.order(), degree_cap(cfg, w.order()));
  j["command"] = "verify-field";
  j["web"] = web_to_json(w);
  j["field"] = to_json(x);
  j["certificate"] = to_json(c);
  if (c.holds) j["phi"] = to_json(induced_phi(x, w));
  emit(cfg, j, out);
  return kOk;
}

int cmd_atlas_list(const RunConfig& cfg, std::ostream& out) {
  json list = json::array();
  for (const auto& e : atlas_entries()) list.push_back(to_json(e));
  json j = report_header(8, 7);
  j["command"] = "atlas list";
  j["entries"] = list;
  emit(cfg, j, out);
  return kOk;
}

VerificationReport verify_one(const AtlasEntry& e, const RunConfig& cfg) {
  const AtlasEntry* entry = &e;
  AtlasEntry copy;
  if (cfg.order) {
    copy = e;
    copy.order = *cfg.order;
    entry = &copy;
  }
  check_config(cfg, entry->order);
  return verify_entry(*entry, solver_options(cfg));
}

int cmd_atlas_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.all == !cfg.atlas_id.empty()) throw UsageError("atlas verify: give either an entry id or --all");
  if (!cfg.all) {
    const AtlasEntry& e = [&]() -> const AtlasEntry& {
      try {
        return atlas_entry(cfg.atlas_id);
      } catch (const DomainError& err) {
        throw UsageError(err.what());
      }
    }();
    const VerificationReport r = verify_one(e, cfg);
    json j = report_header(cfg.order.value_or(e.order), degree_cap(cfg, cfg.order.value_or(e.order)));
    j["command"] = "atlas verify";
    j["entry"] = to_json(e);
    j["verification"] = to_json(r);
    emit(cfg, j, out);
    for (const auto& a : r.analysis.alarms) err << "consistency alarm: " << a << "\n";
    return r.analysis.alarms.empty() ? kOk : kAlarm;
  }

  const auto& entries = atlas_entries();
  std::vector<std::optional<VerificationReport>> results(entries.size());
  const std::size_t jobs = static_cast<std::size_t>(std::max(1, cfg.jobs));
  for (std::size_t start = 0; start < entries.size(); start += jobs) {
    std::vector<std::future<VerificationReport>> batch;
    for (std::size_t i = start; i < std::min(entries.size(), start + jobs); ++i)
      batch.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred,
                                 [&, i] { return verify_one(entries[i], cfg); }));
    for (std::size_t k = 0; k < batch.size(); ++k) {
      results[start + k] = batch[k].get();
      log(cfg, err, entries[start + k].id + ": " + to_string(results[start + k]->status));
    }
  }

  if (!cfg.report_dir.empty()) std::filesystem::create_directories(cfg.report_dir);
  json summary = json::array();
  json discrepancies = json::array();
  std::size_t alarms = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    const VerificationReport& r = *results[i];
    alarms += r.analysis.alarms.size();
    json row = {{"id", e.id}, {"status", to_string(r.status)}, {"dim_exact", r.dim_exact}, {"alarms", r.analysis.alarms}};
    if (r.analysis.solution) row["dim"] = r.analysis.solution->dim();
    if (r.analysis.factors) row["SNC"] = {r.analysis.factors->S, r.analysis.factors->N, r.analysis.factors->C};
    summary.push_back(row);
    if (r.status == Status::Discrepancy) {
      json d = {{"id", e.id}, {"claim_source", e.claim_source}, {"differences", r.discrepancies}, {"claimed", to_json(e)["claimed"]}};
      if (!e.representative.empty()) d["representative"] = e.representative;
      if (r.analysis.factors) d["computed_decomposition"] = to_json(*r.analysis.factors);
      if (r.analysis.solution) d["computed_basis"] = to_json(*r.analysis.solution)["basis"];
      discrepancies.push_back(std::move(d));
    }
    if (!cfg.report_dir.empty()) {
      json j = report_header(e.order, degree_cap(cfg, e.order));
      j["command"] = "atlas verify";
      j["entry"] = to_json(e);
      j["verification"] = to_json(r);
      write_file((std::filesystem::path(cfg.report_dir) / (e.id + ".json")).string(), dump(j));
    }
  }
  json j = report_header(8, 7);
  j["command"] = "atlas verify --all";
  j["entries"] = summary;
  j["discrepancy_report"] = discrepancies;
  j["alarm_count"] = alarms;
  emit(cfg, j, out);
  return alarms == 0 ? kOk : kAlarm;
}

int cmd_atlas_export(const RunConfig& cfg, std::ostream& out) {
  json list = json::array();
  for (const auto& e : atlas_entries()) list.push_back(to_json(e));
  json j = {{"version", version()}, {"entries", list}};
  emit(cfg, j, out);
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Infinitesimal isomorphisms of codimension-one webs, in exact arithmetic"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto common = [&](CLI::App* sub) {
    sub->add_option("--order,-W", cfg.order, "working jet order W (>= 4)");
    sub->add_option("--degree-cap,-D", cfg.degree_cap, "largest degree of the unknown component series (<= W-1)");
    sub->add_option("--out,-o", cfg.out, "write the JSON report here instead of stdout");
    sub->add_flag("-v,--verbose", cfg.verbosity, "progress messages on stderr");
  };
  auto* analyze = app.add_subcommand("analyze", "validate, solve, classify, check bounds, profile");
  analyze->add_option("web", cfg.input, "web JSON file")->required();
  common(analyze);
  auto* nf = app.add_subcommand("normal-form", "formal normal form of f");
  nf->add_option("web", cfg.input, "web JSON file")->required();
  common(nf);
  auto* par = app.add_subcommand("parallelizable", "parallelizability test by both criteria");
  par->add_option("web", cfg.input, "web JSON file")->required();
  common(par);
  auto* vf = app.add_subcommand("verify-field", "check one diagonal field");
  vf->add_option("web", cfg.input, "web JSON file")->required();
  vf->add_option("field", cfg.field, "field JSON file")->required();
  common(vf);
  auto* atlas = app.add_subcommand("atlas", "built-in example catalogue");
  atlas->require_subcommand(1);
  auto* alist = atlas->add_subcommand("list", "list the entries and their claims");
  alist->add_option("--out,-o", cfg.out, "output file");
  auto* averify = atlas->add_subcommand("verify", "verify one entry or all of them");
  averify->add_option("id", cfg.atlas_id, "entry id");
  averify->add_flag("--all", cfg.all, "verify every entry");
  averify->add_option("--report-dir", cfg.report_dir, "also write one report per entry into this directory");
  averify->add_option("--jobs,-j", cfg.jobs, "entries verified concurrently")->check(CLI::PositiveNumber);
  common(averify);
  auto* aexport = atlas->add_subcommand("export", "write the catalogue as JSON");
  aexport->add_option("--out,-o", cfg.out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(cfg, out, err);
    if (nf->parsed()) return cmd_normal_form(cfg, out, err);
    if (par->parsed()) return cmd_parallelizable(cfg, out, err);
    if (vf->parsed()) return cmd_verify_field(cfg, out, err);
    if (alist->parsed()) return cmd_atlas_list(cfg, out);
    if (averify->parsed()) return cmd_atlas_verify(cfg, out, err);
    if (aexport->parsed()) return cmd_atlas_export(cfg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConsistencyAlarm& e) {
    err << "consistency alarm: " << e.what() << "\n";
    return kAlarm;
  } catch (const InvalidWebError& e) {
    err << "invalid web: " << e.what() << "\n";
    return kInvalidWeb;
  } catch (const ParseError& e) {
    err << "invalid web: " << e.what() << "\n";
    return kInvalidWeb;
  } catch (const DomainError& e) {
    err << "invalid web: " << e.what() << "\n";
    return kInvalidWeb;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace webiso::cli
