#include "cli.hpp"

#include <CLI11.hpp>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "boolnl/bitfn.hpp"
#include "boolnl/errors.hpp"
#include "boolnl/ideals.hpp"
#include "boolnl/nlpoly.hpp"
#include "boolnl/transforms.hpp"

namespace boolnl::cli {
namespace {

using json = nlohmann::json;

struct InputOptions {
  std::string anf;
  std::string tt;
  std::string file;
  int n = 0;  // 0: infer from the ANF
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  auto* anf = cmd->add_option("--anf", in.anf, "Function as an ANF expression, e.g. \"x1*x2 + 1\"");
  auto* tt = cmd->add_option("--tt", in.tt, "Function as a truth table (hex, or 0/1 string)");
  auto* file = cmd->add_option("--file", in.file, "File holding a truth table or ANF expression");
  anf->excludes(tt, file);
  tt->excludes(file);
  cmd->add_option("--n", in.n, "Variable count for --anf (default: largest index used)")
      ->check(CLI::Range(1, kMaxVars));
}

bool looks_like_truth_table(std::string_view s) {
  if (s.size() >= 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X' || s[1] == 'b' || s[1] == 'B')) {
    return true;
  }
  return !s.empty() && s.find_first_not_of("01") == std::string_view::npos;
}

BooleanFunction load_function(const InputOptions& in) {
  std::optional<int> n;
  if (in.n > 0) n = in.n;
  if (!in.anf.empty()) return from_anf(parse_anf(in.anf, n));
  if (!in.tt.empty()) return parse_truth_table(in.tt);
  if (!in.file.empty()) {
    std::ifstream is(in.file);
    if (!is) throw Error("cannot open " + in.file);
    std::stringstream ss;
    ss << is.rdbuf();
    std::string text = ss.str();
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
    std::size_t start = text.find_first_not_of(" \t\r\n");
    text = start == std::string::npos ? "" : text.substr(start);
    if (looks_like_truth_table(text)) return parse_truth_table(text);
    return from_anf(parse_anf(text, n));
  }
  throw Error("no input: give one of --anf, --tt, --file");
}

// Writes to --out when given, else to `out`.
void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream os(path);
  if (!os) throw Error("cannot write " + path);
  os << text;
}

std::string join_distances(const DistanceVector& d) {
  std::string s;
  for (std::size_t j = 0; j < d.dists.size(); ++j) {
    if (j) s += ',';
    s += std::to_string(d.dists[j]);
  }
  return s;
}

NlReport compute_report(const BooleanFunction& f, Method m) {
  switch (m) {
    case Method::kNlp:
      return nonlinearity_nlp(f);
    case Method::kWalsh:
      return nonlinearity_walsh(f);
    case Method::kBrute:
      return nonlinearity_brute(f);
    case Method::kViaJ:
      return nonlinearity_report_via_J(f);
    case Method::kViaN:
      return nonlinearity_report_via_N(f);
  }
  throw Error("unknown method");
}

std::string render_report(const NlReport& r, bool records) {
  return (records ? report_to_record(r) : report_to_text(r)) + "\n";
}

int cmd_nl(const InputOptions& in, const std::string& method, const std::string& format,
           std::ostream& out, std::ostream& err) {
  const BooleanFunction f = load_function(in);
  const bool records = format == "records";
  if (method != "all") {
    auto m = parse_method(method);
    if (!m) throw Error("unknown method '" + method + "'");
    out << render_report(compute_report(f, *m), records);
    return kExitOk;
  }
  std::vector<NlReport> reports;
  for (Method m : {Method::kNlp, Method::kWalsh, Method::kBrute, Method::kViaJ, Method::kViaN}) {
    if (m == Method::kBrute && f.num_vars() > kBruteMaxVars) {
      err << "warning: brute skipped, n = " << f.num_vars() << " exceeds cap " << kBruteMaxVars
          << "\n";
      continue;
    }
    reports.push_back(compute_report(f, m));
    out << render_report(reports.back(), records);
  }
  for (const auto& r : reports) {
    if (r.value != reports.front().value || r.nearest != reports.front().nearest) {
      err << "error: engines disagree (" << method_name(reports.front().method) << " vs "
          << method_name(r.method) << ")\n";
      return kExitDisagreement;
    }
  }
  return kExitOk;
}

int cmd_nlp(const InputOptions& in, bool distances, bool terms, const std::string& format,
            const std::string& out_path, std::ostream& out) {
  const BooleanFunction f = load_function(in);
  const NlPolynomial p = nl_polynomial_fast(f);
  std::string text;
  if (format == "records") {
    json j;
    j["n"] = p.num_vars();
    j["polynomial"] = format_nlp_expression(p);
    j["coeffs"] = std::vector<std::int64_t>(p.coeffs().begin(), p.coeffs().end());
    if (distances) j["distances"] = evaluate_all(p).dists;
    text = j.dump() + "\n";
  } else {
    text = terms ? format_nlp_terms(p) : format_nlp_expression(p) + "\n";
    if (distances) text += join_distances(evaluate_all(p)) + "\n";
  }
  write_output(out_path, text, out);
  return kExitOk;
}

int cmd_convert(const InputOptions& in, const std::string& to, std::ostream& out) {
  const BooleanFunction f = load_function(in);
  if (to == "anf") {
    out << format_anf(to_anf(f)) << "\n";
  } else if (to == "tt") {
    out << format_truth_table_hex(f) << "\n";
  } else if (to == "bin") {
    out << format_truth_table_bin(f) << "\n";
  } else if (to == "nnf") {
    out << format_nnf(to_nnf(f)) << "\n";
  } else {
    throw Error("unknown target format '" + to + "'");
  }
  return kExitOk;
}

int cmd_export(const InputOptions& in, const std::string& kind, std::int64_t t,
               std::uint64_t limit, const std::string& out_path, std::ostream& out) {
  const BooleanFunction f = load_function(in);
  IdealSpec spec = kind == "J" ? build_J_ideal(f, t) : build_N_ideal(f, t);
  write_output(out_path, export_ideal(spec, limit), out);
  return kExitOk;
}

std::vector<Method> parse_method_list(const std::string& list) {
  std::vector<Method> methods;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto m = parse_method(item);
    if (!m || (*m != Method::kNlp && *m != Method::kWalsh && *m != Method::kBrute)) {
      throw Error("bench supports methods nlp, walsh, brute; got '" + item + "'");
    }
    methods.push_back(*m);
  }
  if (methods.empty()) throw Error("no benchmark method selected");
  return methods;
}

int cmd_bench(const BenchConfig& config, const std::string& format, std::ostream& out,
              std::ostream& err) {
  if (config.n_from < 1 || config.n_to < config.n_from || config.n_to > kMaxVars) {
    throw Error("invalid n range");
  }
  if (config.samples < 1) throw Error("--samples must be positive");
  const BenchResult result = run_benchmark(config);
  for (const auto& w : result.warnings) err << "warning: " << w << "\n";

  if (format == "records") {
    for (const auto& t : result.timings) {
      if (t.skipped) continue;
      json j{{"kind", "timing"},
             {"n", t.n},
             {"method", method_name(t.method)},
             {"mean_seconds", t.mean_seconds}};
      out << j.dump() << "\n";
    }
    for (const auto& g : result.growth) {
      json j{{"kind", "growth"},
             {"n", g.n},
             {"method", method_name(g.method)},
             {"log2_ratio", g.log2_ratio},
             {"model", model_growth(g.n)},
             {"log_ratio_model", log_ratio_growth(g.n)}};
      out << j.dump() << "\n";
    }
    return kExitOk;
  }

  char line[160];
  out << "# bench n=" << config.n_from << ".." << config.n_to << " samples=" << config.samples
      << " seed=" << config.seed << "\n";
  out << "n     method  mean_ms\n";
  for (const auto& t : result.timings) {
    if (t.skipped) continue;
    std::snprintf(line, sizeof line, "%-5d %-7s %.6f\n", t.n,
                  std::string(method_name(t.method)).c_str(), t.mean_seconds * 1e3);
    out << line;
  }
  out << "pair    model   logratio  method  log2(t_n+1/t_n)\n";
  for (const auto& g : result.growth) {
    std::snprintf(line, sizeof line, "%-7s %-7.3f %-9.3f %-7s %.3f\n",
                  (std::to_string(g.n) + "-" + std::to_string(g.n + 1)).c_str(),
                  model_growth(g.n), log_ratio_growth(g.n),
                  std::string(method_name(g.method)).c_str(), g.log2_ratio);
    out << line;
  }
  return kExitOk;
}

}  // namespace

std::string report_to_record(const NlReport& report) {
  json j;
  j["method"] = method_name(report.method);
  j["n"] = report.n;
  j["value"] = report.value;
  std::vector<std::string> nearest;
  for (const auto& a : report.nearest) nearest.push_back(format_affine(a, report.n));
  j["nearest"] = nearest;
  return j.dump();
}

NlReport report_from_record(std::string_view record) {
  json j;
  try {
    j = json::parse(record);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed record: ") + e.what(), 0);
  }
  NlReport r;
  try {
    auto m = parse_method(j.at("method").get<std::string>());
    if (!m) throw ParseError("unknown method in record", 0);
    r.method = *m;
    r.n = j.at("n").get<int>();
    r.value = j.at("value").get<std::int64_t>();
    for (const auto& s : j.at("nearest")) {
      r.nearest.push_back(parse_affine(s.get<std::string>(), r.n));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed record: ") + e.what(), 0);
  }
  return r;
}

std::string report_to_text(const NlReport& report) {
  std::string s(method_name(report.method));
  s.resize(std::max<std::size_t>(s.size(), 6), ' ');
  s += " N(f) = " + std::to_string(report.value) + "  nearest: ";
  for (std::size_t i = 0; i < report.nearest.size(); ++i) {
    if (i) s += ", ";
    s += format_affine(report.nearest[i], report.n);
  }
  return s;
}

double model_growth(int n) {
  return std::log2((n + 1.0) * std::ldexp(1.0, n + 1) / (n * std::ldexp(1.0, n)));
}

double log_ratio_growth(int n) {
  return std::log((n + 1.0) * std::ldexp(1.0, n + 1)) / std::log(n * std::ldexp(1.0, n));
}

std::vector<BooleanFunction> bench_sample(int n, int samples, std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(n)};
  std::mt19937_64 rng(seq);
  std::vector<BooleanFunction> out;
  out.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) out.push_back(random_function(n, rng));
  return out;
}

BenchResult run_benchmark(const BenchConfig& config) {
  using clock = std::chrono::steady_clock;
  BenchResult result;
  std::int64_t sink = 0;
  for (int n = config.n_from; n <= config.n_to; ++n) {
    const auto functions = bench_sample(n, config.samples, config.seed);
    for (Method m : config.methods) {
      BenchTiming timing{n, m, false, 0};
      if (m == Method::kBrute && n > kBruteMaxVars) {
        timing.skipped = true;
        result.warnings.push_back("brute excluded at n = " + std::to_string(n) +
                                  " (cap " + std::to_string(kBruteMaxVars) + ")");
        result.timings.push_back(timing);
        continue;
      }
      double total = 0;
      for (const auto& f : functions) {
        const auto start = clock::now();
        sink += compute_report(f, m).value;
        total += std::chrono::duration<double>(clock::now() - start).count();
      }
      timing.mean_seconds = total / static_cast<double>(functions.size());
      result.timings.push_back(timing);
    }
  }
  for (const auto& a : result.timings) {
    if (a.skipped) continue;
    for (const auto& b : result.timings) {
      if (!b.skipped && b.method == a.method && b.n == a.n + 1) {
        result.growth.push_back({a.n, a.method, std::log2(b.mean_seconds / a.mean_seconds)});
      }
    }
  }
  if (sink < 0) result.warnings.push_back("negative nonlinearity");
  return result;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nonlinearity of Boolean functions"};
  app.require_subcommand(1);

  InputOptions nl_in, nlp_in, conv_in, exp_in;
  std::string nl_method = "nlp", nl_format = "text";
  auto* nl = app.add_subcommand("nl", "Compute the nonlinearity");
  add_input_options(nl, nl_in);
  nl->add_option("--method", nl_method, "nlp | walsh | brute | via-J | via-N | all")
      ->check(CLI::IsMember({"nlp", "walsh", "brute", "via-J", "via-N", "all"}));
  nl->add_option("--format", nl_format, "text | records")
      ->check(CLI::IsMember({"text", "records"}));

  bool nlp_distances = false, nlp_terms = false;
  std::string nlp_format = "text", nlp_out;
  auto* nlp = app.add_subcommand("nlp", "Print the nonlinearity polynomial");
  add_input_options(nlp, nlp_in);
  nlp->add_flag("--distances", nlp_distances, "Also print the value at every Boolean point");
  nlp->add_flag("--terms", nlp_terms, "One term per line instead of a single expression");
  nlp->add_option("--format", nlp_format, "text | records")
      ->check(CLI::IsMember({"text", "records"}));
  nlp->add_option("--out", nlp_out, "Write to a file instead of standard output");

  std::string conv_to = "anf";
  auto* conv = app.add_subcommand("convert", "Convert between representations");
  add_input_options(conv, conv_in);
  conv->add_option("--to", conv_to, "anf | tt | bin | nnf")
      ->check(CLI::IsMember({"anf", "tt", "bin", "nnf"}));

  std::string exp_kind = "N", exp_out;
  std::int64_t exp_t = 1;
  std::uint64_t exp_limit = 1000;
  auto* exp = app.add_subcommand("export-ideal", "Write ideal generators for an algebra system");
  add_input_options(exp, exp_in);
  exp->add_option("--kind", exp_kind, "J | N")->check(CLI::IsMember({"J", "N"}));
  exp->add_option("--t", exp_t, "Threshold");
  exp->add_option("--limit", exp_limit, "Maximum number of generator lines");
  exp->add_option("--out", exp_out, "Write to a file instead of standard output");

  BenchConfig bench_cfg;
  std::string bench_methods = "nlp", bench_format = "text";
  auto* bench = app.add_subcommand("bench", "Measure growth of running time with n");
  bench->add_option("--method", bench_methods, "Comma separated: nlp, walsh, brute");
  bench->add_option("--n-from", bench_cfg.n_from, "Smallest n");
  bench->add_option("--n-to", bench_cfg.n_to, "Largest n");
  bench->add_option("--samples", bench_cfg.samples, "Random functions per n");
  bench->add_option("--seed", bench_cfg.seed, "Seed of the function generator");
  bench->add_option("--format", bench_format, "text | records")
      ->check(CLI::IsMember({"text", "records"}));

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (nl->parsed()) return cmd_nl(nl_in, nl_method, nl_format, out, err);
    if (nlp->parsed()) return cmd_nlp(nlp_in, nlp_distances, nlp_terms, nlp_format, nlp_out, out);
    if (conv->parsed()) return cmd_convert(conv_in, conv_to, out);
    if (exp->parsed()) return cmd_export(exp_in, exp_kind, exp_t, exp_limit, exp_out, out);
    if (bench->parsed()) {
      bench_cfg.methods = parse_method_list(bench_methods);
      return cmd_bench(bench_cfg, bench_format, out, err);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace boolnl::cli
