#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gtsymp/basisbuild.hpp"
#include "gtsymp/error.hpp"
#include "gtsymp/gtpattern.hpp"
#include "gtsymp/repmodel.hpp"
#include "gtsymp/verify.hpp"

using namespace gtsymp;

namespace {

constexpr int kUsage = 2;

struct RunConfig {
  int n = 2;
  std::string lambda;
  std::string approach = "zhelobenko";
  std::string mode = "simplified";
  std::string check = "all";
  std::string format = "json";
  std::string output;
  std::string witness_file;
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  std::size_t cap = 0;
  unsigned threads = 0;
  bool one_step = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

HighestWeight parse_lambda(const RunConfig& cfg) {
  HighestWeight w;
  try {
    w = HighestWeight::parse(cfg.lambda);
    w.validate();
  } catch (const Error& ex) {
    throw UsageError(ex.what());
  }
  if (w.n() != cfg.n) {
    throw UsageError("lambda has " + std::to_string(w.n()) + " entries but --n is " + std::to_string(cfg.n));
  }
  return w;
}

Approach parse_approach(const std::string& s) {
  if (s == "zhelobenko" || s == "zh") return Approach::Zh;
  if (s == "molev" || s == "m") return Approach::M;
  throw UsageError("unknown approach '" + s + "' (zhelobenko, molev)");
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw UsageError("cannot write " + cfg.output);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

nlohmann::json header(const std::string& command, const RunConfig& cfg) {
  nlohmann::json j;
  j["schema"] = "gtsymp/1";
  j["command"] = command;
  j["n"] = cfg.n;
  return j;
}

int cmd_patterns(const RunConfig& cfg) {
  const HighestWeight lambda = parse_lambda(cfg);
  const Approach chain = parse_approach(cfg.approach);
  const auto ts = enumerate(lambda);
  const auto dim = weyl_dim(lambda);
  std::cerr << "patterns: " << ts.size() << ", weyl_dim: " << dim << "\n";
  if (cfg.format == "csv") {
    emit(cfg, tableaux_csv(ts, chain));
  } else if (cfg.format == "text") {
    std::ostringstream os;
    for (const auto& t : ts) {
      os << t.str() << "  weight [";
      const auto w = weight(t, chain);
      for (std::size_t k = 0; k < w.size(); ++k) os << (k ? "," : "") << w[k];
      os << "]\n";
    }
    os << "count " << ts.size() << "  dim " << dim << "\n";
    emit(cfg, os.str());
  } else {
    nlohmann::json j = header("patterns", cfg);
    j["lambda"] = lambda.m;
    j["approach"] = to_string(chain);
    j["count"] = ts.size();
    j["weyl_dim"] = dim;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& t : ts) arr.push_back({{"rows", t.rows}, {"weight", weight(t, chain)}});
    j["tableaux"] = std::move(arr);
    emit(cfg, j.dump(2));
  }
  return ts.size() == dim ? 0 : 1;
}

int cmd_dim(const RunConfig& cfg) {
  const HighestWeight lambda = parse_lambda(cfg);
  ModuleOptions opts;
  opts.cap = cfg.cap;
  opts.progress = [](const std::string& msg) { std::cerr << msg << "\n"; };
  const auto count = enumerate(lambda).size();
  const auto dim = weyl_dim(lambda);
  const ModuleBasis m = generate_module(lambda, AlgebraKind{AlgebraTag::Sp2n, cfg.n}, opts);
  nlohmann::json j = header("dim", cfg);
  j["lambda"] = lambda.m;
  j["weyl_dim"] = dim;
  j["tableaux"] = count;
  j["module_dim"] = m.dim();
  emit(cfg, cfg.format == "text" ? "weyl_dim " + std::to_string(dim) + "  tableaux " + std::to_string(count) +
                                       "  module " + std::to_string(m.dim())
                                 : j.dump(2));
  return count == dim && m.dim() == dim ? 0 : 1;
}

int cmd_basis(const RunConfig& cfg) {
  const HighestWeight lambda = parse_lambda(cfg);
  const Approach a = parse_approach(cfg.approach);
  if (cfg.mode != "simplified" && cfg.mode != "full") throw UsageError("unknown mode '" + cfg.mode + "'");
  if (cfg.mode == "full" && a != Approach::M) throw UsageError("--mode full applies to the molev approach");
  const AlgebraKind kind{AlgebraTag::Sp2n, cfg.n};
  std::vector<BasisVectorRecord> recs;
  std::vector<std::string> problems;
  try {
    const MolevMode mode = cfg.mode == "full" ? MolevMode::Full : MolevMode::Simplified;
    recs = cfg.one_step ? one_step_basis(lambda, a, mode) : full_gt_basis(lambda, a, cfg.cap, mode);
  } catch (const Error& ex) {
    if (ex.code() == ErrorCode::DimensionCapExceeded) throw;
    std::cerr << "basis: " << ex.what() << "\n";
    return 1;
  }
  ModuleOptions opts;
  opts.cap = cfg.cap;
  const ModuleBasis module = generate_module(lambda, kind, opts);
  const Embedding e = a == Approach::Zh ? Embedding::ZhSp : Embedding::MSp;
  const ModuleBasis high = highest_subspace(module, e);
  ModuleBasis span(kind, lambda);
  for (const auto& r : recs) {
    const std::string where = nlohmann::json(r.rows).dump();
    if (!module.contains(r.vector)) problems.push_back(where + ": not in the module");
    if (cfg.one_step && !high.contains(r.vector)) problems.push_back(where + ": not subalgebra-highest");
    if (!span.add(r.vector)) problems.push_back(where + ": linearly dependent");
  }
  const std::size_t expected = cfg.one_step ? high.dim() : module.dim();
  if (span.dim() != expected) {
    problems.push_back("rank " + std::to_string(span.dim()) + " != " + std::to_string(expected));
  }
  if (cfg.mode == "full") {
    const auto simple = cfg.one_step ? one_step_basis(lambda, a) : full_gt_basis(lambda, a, cfg.cap);
    std::size_t prop = 0;
    for (std::size_t t = 0; t < recs.size(); ++t) prop += proportional(recs[t].vector, simple[t].vector);
    std::cerr << "basis: full ~ simplified on " << prop << " / " << recs.size() << " patterns\n";
  }
  std::cerr << "basis: " << recs.size() << " records, rank " << span.dim() << "\n";
  nlohmann::json j = header("basis", cfg);
  j["lambda"] = lambda.m;
  j["approach"] = to_string(a);
  j["mode"] = cfg.mode;
  j["scope"] = cfg.one_step ? "one-step" : "tableaux";
  j["records"] = nlohmann::json::parse(basis_json(recs));
  j["problems"] = problems;
  emit(cfg, j.dump(2));
  for (const auto& p : problems) std::cerr << "basis: " << p << "\n";
  return problems.empty() ? 0 : 1;
}

int finish_reports(const RunConfig& cfg, const std::string& command, const std::vector<CheckReport>& reports) {
  bool pass = true;
  for (const auto& r : reports) pass = pass && r.pass;
  if (cfg.format == "text") {
    std::string text;
    for (const auto& r : reports) text += r.text();
    text += pass ? "ALL PASS\n" : "FAILURES PRESENT\n";
    emit(cfg, text);
  } else {
    nlohmann::json j = reports_json(reports);
    j["command"] = command;
    emit(cfg, j.dump(2));
  }
  if (!pass && !cfg.witness_file.empty()) {
    std::ofstream w(cfg.witness_file);
    for (const auto& r : reports) {
      for (const auto& line : r.witnesses) w << r.id << " " << nlohmann::json(r.lambda).dump() << " " << line << "\n";
    }
  }
  std::size_t failed = 0;
  for (const auto& r : reports) failed += !r.pass;
  std::cerr << command << ": " << reports.size() - failed << " / " << reports.size() << " reports pass\n";
  return pass ? 0 : 1;
}

CheckConfig check_config(const RunConfig& cfg, const std::string& id) {
  CheckConfig c;
  c.id = id;
  c.n = cfg.n;
  c.seed = cfg.seed;
  c.trials = cfg.trials;
  if (!cfg.lambda.empty()) c.lambda = parse_lambda(cfg);
  const auto& ids = check_ids();
  if (id != "all" && std::find(ids.begin(), ids.end(), id) == ids.end()) {
    throw UsageError("unknown check '" + id + "'");
  }
  if (!c.lambda && cfg.n != 2 && cfg.n != 3) throw UsageError("test weights exist for n = 2, 3; pass --lambda");
  return c;
}

int cmd_verify(const RunConfig& cfg) {
  const CheckConfig c = check_config(cfg, cfg.check);
  std::cerr << "verify: " << cfg.check << " at n = " << cfg.n << "\n";
  return finish_reports(cfg, "verify", run_checks(c, cfg.threads));
}

int cmd_report(const RunConfig& cfg) {
  std::vector<CheckReport> all;
  for (const int n : {2, 3}) {
    RunConfig sub = cfg;
    sub.n = n;
    sub.lambda.clear();
    std::cerr << "report: running every check at n = " << n << "\n";
    auto part = run_checks(check_config(sub, "all"), cfg.threads);
    all.insert(all.end(), part.begin(), part.end());
  }
  return finish_reports(cfg, "report", all);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gelfand-Tsetlin bases for sp(2n) via Mickelsson-Zhelobenko operators"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto common = [&](CLI::App* sub, bool need_lambda) {
    sub->add_option("--n", cfg.n, "rank n")->check(CLI::Range(1, 8));
    auto* l = sub->add_option("--lambda", cfg.lambda, "highest weight m_{-n},...,m_{-1}, comma separated");
    if (need_lambda) l->required();
    sub->add_option("--format", cfg.format, "json, text or csv")->check(CLI::IsMember({"json", "text", "csv"}));
    sub->add_option("-o,--output", cfg.output, "output file (default stdout)");
    sub->add_option("--cap", cfg.cap, "module dimension cap (default GTSYMP_DIM_CAP or 5000)");
  };

  auto* patterns = app.add_subcommand("patterns", "enumerate GT tableaux with weights");
  common(patterns, true);
  patterns->add_option("--approach", cfg.approach, "weight convention: zhelobenko or molev");

  auto* dim = app.add_subcommand("dim", "compare tableau count, Weyl dimension and module dimension");
  common(dim, true);

  auto* basis = app.add_subcommand("basis", "build and check a GT basis of V(lambda)");
  common(basis, true);
  basis->add_option("--approach", cfg.approach, "zhelobenko or molev");
  basis->add_option("--mode", cfg.mode, "simplified or full (molev)");
  basis->add_flag("--one-step", cfg.one_step, "basis of the subalgebra-highest subspace instead of V(lambda)");

  auto* verify = app.add_subcommand("verify", "run verification checks");
  common(verify, false);
  verify->add_option("--check", cfg.check, "check id or all");
  verify->add_option("--seed", cfg.seed, "sampling seed");
  verify->add_option("--trials", cfg.trials, "random samples for minor-identity");
  verify->add_option("--threads", cfg.threads, "worker threads (0: hardware)");
  verify->add_option("--witness-file", cfg.witness_file, "write failure witnesses here");

  auto* report = app.add_subcommand("report", "run every check on all test weights for n = 2 and 3");
  report->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  report->add_option("-o,--output", cfg.output, "output file (default stdout)");
  report->add_option("--seed", cfg.seed, "sampling seed");
  report->add_option("--trials", cfg.trials, "random samples for minor-identity");
  report->add_option("--threads", cfg.threads, "worker threads (0: hardware)");
  report->add_option("--witness-file", cfg.witness_file, "write failure witnesses here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*patterns) return cmd_patterns(cfg);
    if (*dim) return cmd_dim(cfg);
    if (*basis) return cmd_basis(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*report) return cmd_report(cfg);
  } catch (const UsageError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kUsage;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return kUsage;
}
