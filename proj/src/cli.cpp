#include "laced/cli.hpp"

#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "laced/analysis.hpp"
#include "laced/random_util.hpp"
#include "laced/sieve.hpp"

namespace laced::cli {

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string format_int(const Bigint& v) { return v.get_str(); }

std::string format_rational(const Rational& v) {
  Rational c = v;
  c.canonicalize();
  return c.get_str();
}

std::string format_bool(bool v) { return v ? "true" : "false"; }

namespace {

struct Context {
  std::string format = "text";
  std::string out_path;
  std::vector<OutputRecord> records;
  int exit_code = 0;
};

void emit_text(std::ostream& out, const std::vector<OutputRecord>& records) {
  bool first = true;
  for (const OutputRecord& r : records) {
    if (!first) out << "\n";
    first = false;
    out << "command = " << r.command << "\n";
    for (const auto& [key, value] : r.parameters) out << key << " = " << value << "\n";
    for (const auto& [key, value] : r.results) out << key << " = " << value << "\n";
  }
}

nlohmann::ordered_json record_to_json(const OutputRecord& r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  j["parameters"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : r.parameters) j["parameters"][key] = value;
  j["results"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : r.results) j["results"][key] = value;
  return j;
}

void emit_json(std::ostream& out, const std::vector<OutputRecord>& records) {
  if (records.size() == 1) {
    out << record_to_json(records.front()).dump(2) << "\n";
    return;
  }
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const OutputRecord& r : records) arr.push_back(record_to_json(r));
  out << arr.dump(2) << "\n";
}

void emit_csv(std::ostream& out, const std::vector<OutputRecord>& records) {
  if (records.empty()) return;
  const OutputRecord& head = records.front();
  bool first = true;
  for (const auto& [key, value] : head.parameters) {
    out << (first ? "" : ",") << key;
    first = false;
  }
  for (const auto& [key, value] : head.results) {
    out << (first ? "" : ",") << key;
    first = false;
  }
  out << "\n";
  for (const OutputRecord& r : records) {
    first = true;
    for (const auto& [key, value] : r.parameters) {
      out << (first ? "" : ",") << value;
      first = false;
    }
    for (const auto& [key, value] : r.results) {
      out << (first ? "" : ",") << value;
      first = false;
    }
    out << "\n";
  }
}

void emit(Context& ctx, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (!ctx.out_path.empty()) {
    file.open(ctx.out_path);
    if (!file) {
      err << "error: cannot open output file " << ctx.out_path << "\n";
      ctx.exit_code = std::max(ctx.exit_code, 1);
      return;
    }
    sink = &file;
  }
  if (ctx.format == "json") {
    emit_json(*sink, ctx.records);
  } else if (ctx.format == "csv") {
    emit_csv(*sink, ctx.records);
  } else {
    emit_text(*sink, ctx.records);
  }
}

LacedParams make_params(int n, std::optional<int> p) {
  return p ? LacedParams(n, *p) : LacedParams::for_n(n);
}

// D either given explicitly (--p and --set) or derived from a function
// instance (--n, weight multiset minus --exclude).
ResidueMultiset resolve_set(std::optional<int> p, const std::vector<int>& set_vals, bool set_given,
                            std::optional<int> n, const std::vector<int>& exclude,
                            OutputRecord& rec) {
  if (set_given) {
    if (!p) throw std::invalid_argument("--set requires --p");
    rec.parameters.emplace_back("p", std::to_string(*p));
    std::ostringstream os;
    for (std::size_t j = 0; j < set_vals.size(); ++j) os << (j ? ";" : "") << set_vals[j];
    rec.parameters.emplace_back("set", os.str());
    return ResidueMultiset(*p, set_vals);
  }
  if (!n) throw std::invalid_argument("either --set with --p, or --n, is required");
  const LacedParams params = make_params(*n, p);
  rec.parameters.emplace_back("n", std::to_string(params.n));
  rec.parameters.emplace_back("p", std::to_string(params.p));
  std::set<int> excluded(exclude.begin(), exclude.end());
  if (!excluded.empty()) {
    std::ostringstream os;
    bool first = true;
    for (int e : excluded) {
      os << (first ? "" : ";") << e;
      first = false;
    }
    rec.parameters.emplace_back("exclude", os.str());
  }
  return laced_weight_multiset(params, excluded);
}

void add_common_options(CLI::App* sub, Context& ctx) {
  sub->add_option("--format", ctx.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  sub->add_option("--out", ctx.out_path, "Write records to FILE instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx;
  CLI::App app{"Exact weight, sensitivity, and subset-sum analysis of the weighted-sum "
               "(laced) Boolean function"};
  app.name("laced");
  app.require_subcommand(1);

  // --- eval ---
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate s(X) and f(X) for one input");
  int eval_n = 0;
  std::optional<int> eval_p;
  std::string eval_x;
  eval_cmd->add_option("--n", eval_n, "Number of variables")->required();
  eval_cmd->add_option("--p", eval_p, "Modulus (must be the least prime >= n)");
  eval_cmd->add_option("--x", eval_x, "Bit string, leftmost character = x_1")->required();
  add_common_options(eval_cmd, ctx);
  eval_cmd->callback([&] {
    const LacedParams params = make_params(eval_n, eval_p);
    const InputVector x = InputVector::from_string(eval_x);
    OutputRecord rec{"eval", {}, {}};
    rec.parameters.emplace_back("n", std::to_string(params.n));
    rec.parameters.emplace_back("p", std::to_string(params.p));
    rec.parameters.emplace_back("x", eval_x);
    rec.results.emplace_back("s", std::to_string(s_of(params, x).value));
    rec.results.emplace_back("f", std::to_string(eval_f(params, x)));
    ctx.records.push_back(std::move(rec));
  });

  // --- weight ---
  auto* weight_cmd = app.add_subcommand("weight", "Weight #{X : f(X) = 1}");
  int weight_n = 0;
  std::optional<int> weight_p;
  std::string weight_method = "dp";
  int weight_limit = default_enumeration_limit;
  weight_cmd->add_option("--n", weight_n, "Number of variables")->required();
  weight_cmd->add_option("--p", weight_p, "Modulus (must be the least prime >= n)");
  weight_cmd->add_option("--method", weight_method, "dp (polynomial) or brute (2^n)")
      ->check(CLI::IsMember({"dp", "brute"}));
  weight_cmd->add_option("--limit", weight_limit, "Enumeration limit for --method brute");
  add_common_options(weight_cmd, ctx);
  weight_cmd->callback([&] {
    const LacedParams params = make_params(weight_n, weight_p);
    const Bigint wt = (weight_method == "dp") ? weight_exact(params)
                                              : brute_weight(params, weight_limit);
    Rational ratio(wt, Bigint(1) << (params.n - 1));
    ratio.canonicalize();
    OutputRecord rec{"weight", {}, {}};
    rec.parameters.emplace_back("n", std::to_string(params.n));
    rec.parameters.emplace_back("p", std::to_string(params.p));
    rec.parameters.emplace_back("method", weight_method);
    rec.results.emplace_back("weight", format_int(wt));
    rec.results.emplace_back("weight_ratio", format_real(ratio.get_d()));
    ctx.records.push_back(std::move(rec));
  });

  // --- avgsens ---
  auto* avg_cmd = app.add_subcommand("avgsens", "Average sensitivity, exact");
  int avg_n = 0;
  std::optional<int> avg_p;
  std::string avg_method = "exact";
  int avg_limit = default_enumeration_limit;
  avg_cmd->add_option("--n", avg_n, "Number of variables")->required();
  avg_cmd->add_option("--p", avg_p, "Modulus (must be the least prime >= n)");
  avg_cmd->add_option("--method", avg_method, "exact (polynomial) or brute (2^n)")
      ->check(CLI::IsMember({"exact", "brute"}));
  avg_cmd->add_option("--limit", avg_limit, "Enumeration limit for --method brute");
  add_common_options(avg_cmd, ctx);
  avg_cmd->callback([&] {
    const LacedParams params = make_params(avg_n, avg_p);
    const SensitivityReport report = (avg_method == "exact")
                                         ? avg_sensitivity_exact(params)
                                         : brute_avg_sensitivity(params, avg_limit);
    Rational ratio(report.total_flips, (Bigint(1) << params.n) * params.n);
    ratio.canonicalize();
    OutputRecord rec{"avgsens", {}, {}};
    rec.parameters.emplace_back("n", std::to_string(params.n));
    rec.parameters.emplace_back("p", std::to_string(params.p));
    rec.parameters.emplace_back("method", avg_method);
    rec.results.emplace_back("total_flips", format_int(report.total_flips));
    rec.results.emplace_back("average", format_rational(report.average));
    rec.results.emplace_back("sens_ratio", format_real(ratio.get_d()));
    if (report.maximum) rec.results.emplace_back("maximum", std::to_string(*report.maximum));
    ctx.records.push_back(std::move(rec));
  });

  // --- bias ---
  auto* bias_cmd = app.add_subcommand("bias", "Fourier bias of a residue set");
  std::optional<int> bias_p, bias_n, bias_ambient;
  std::vector<int> bias_set, bias_exclude;
  double bias_scale = 1.0;
  auto* bias_set_opt =
      bias_cmd->add_option("--set", bias_set, "Explicit residues (comma separated)")
          ->delimiter(',');
  bias_cmd->add_option("--p", bias_p, "Modulus for --set");
  bias_cmd->add_option("--n", bias_n, "Derive D from the weight multiset of this instance");
  bias_cmd->add_option("--exclude", bias_exclude, "Coordinates removed from the derived set")
      ->delimiter(',');
  bias_cmd->add_option("--ambient", bias_ambient, "Also report smoothness against this ambient size");
  bias_cmd->add_option("--smooth-scale", bias_scale, "Smoothness scale constant (default 1)");
  add_common_options(bias_cmd, ctx);
  bias_cmd->callback([&] {
    OutputRecord rec{"bias", {}, {}};
    const ResidueMultiset d =
        resolve_set(bias_p, bias_set, bias_set_opt->count() > 0, bias_n, bias_exclude, rec);
    const BiasReport report = fourier_bias(d);
    rec.results.emplace_back("size", std::to_string(d.size()));
    rec.results.emplace_back("phi", format_real(report.phi));
    rec.results.emplace_back("witness_t", std::to_string(report.witness.t));
    if (bias_ambient) {
      const SmoothReport sm = is_smooth(d, *bias_ambient, bias_scale);
      rec.results.emplace_back("smooth", format_bool(sm.smooth));
      rec.results.emplace_back("smooth_ratio", format_real(sm.ratio));
    }
    ctx.records.push_back(std::move(rec));
  });

  // --- bound ---
  auto* bound_cmd = app.add_subcommand("bound", "Bias-based lower bounds on distinct-sum counts");
  std::string bound_form = "bias";
  std::optional<int> bound_p, bound_n, bound_c;
  std::vector<int> bound_set, bound_exclude;
  int bound_b = 0;
  int bound_k = 1;
  bound_cmd->add_option("--form", bound_form, "bias (from Phi(D)) or complement (closed form)")
      ->check(CLI::IsMember({"bias", "complement"}));
  auto* bound_set_opt =
      bound_cmd->add_option("--set", bound_set, "Explicit residues (comma separated)")
          ->delimiter(',');
  bound_cmd->add_option("--p", bound_p, "Modulus");
  bound_cmd->add_option("--n", bound_n, "Derive D from the weight multiset of this instance");
  bound_cmd->add_option("--exclude", bound_exclude, "Coordinates removed from the derived set")
      ->delimiter(',');
  bound_cmd->add_option("--b", bound_b, "Target residue");
  bound_cmd->add_option("--k", bound_k, "Tuple size");
  bound_cmd->add_option("--c", bound_c, "Complement size for --form complement");
  add_common_options(bound_cmd, ctx);
  bound_cmd->callback([&] {
    OutputRecord rec{"bound", {}, {}};
    rec.parameters.emplace_back("form", bound_form);
    if (bound_form == "complement") {
      if (!bound_p || !bound_c) {
        throw std::invalid_argument("--form complement requires --p and --c");
      }
      rec.parameters.emplace_back("p", std::to_string(*bound_p));
      rec.parameters.emplace_back("c", std::to_string(*bound_c));
      rec.parameters.emplace_back("k", std::to_string(bound_k));
      const Rational rhs = complement_bound(*bound_p, *bound_c, bound_k);
      rec.results.emplace_back("rhs_exact", format_rational(rhs));
      rec.results.emplace_back("rhs", format_real(rhs.get_d()));
    } else {
      const ResidueMultiset d = resolve_set(bound_p, bound_set, bound_set_opt->count() > 0,
                                            bound_n, bound_exclude, rec);
      rec.parameters.emplace_back("b", std::to_string(bound_b));
      rec.parameters.emplace_back("k", std::to_string(bound_k));
      const BoundReport report = distinct_sum_lower_bound(d, bound_b, bound_k);
      rec.results.emplace_back("exact", format_rational(report.exact_over_kfact));
      rec.results.emplace_back("rhs", format_real(report.rhs));
      rec.results.emplace_back("phi", format_real(report.phi));
      rec.results.emplace_back("holds", format_bool(report.holds));
      if (!report.holds) ctx.exit_code = 2;
    }
    ctx.records.push_back(std::move(rec));
  });

  // --- sieve-verify ---
  auto* verify_cmd =
      app.add_subcommand("sieve-verify", "Randomized three-way agreement trials: cycle-type "
                                         "sieve vs tuple enumeration vs k! * subset DP");
  int verify_p = 0, verify_size = 0, verify_k = 1, verify_trials = 100;
  std::uint64_t verify_seed = 0;  // fixed default: runs are reproducible without flags
  verify_cmd->add_option("--p", verify_p, "Prime modulus")->required();
  verify_cmd->add_option("--size", verify_size, "|D| per trial")->required()
      ->check(CLI::Range(1, 10));
  verify_cmd->add_option("--k", verify_k, "Tuple size")->required()->check(CLI::Range(1, 6));
  verify_cmd->add_option("--trials", verify_trials, "Number of random sets")
      ->check(CLI::Range(1, 100000));
  verify_cmd->add_option("--seed", verify_seed, "RNG seed (default 0)");
  add_common_options(verify_cmd, ctx);
  verify_cmd->callback([&] {
    if (verify_size > verify_p) {
      throw std::invalid_argument("sieve-verify: --size cannot exceed --p");
    }
    std::mt19937_64 rng(verify_seed);
    long long checks = 0, failures = 0;
    int agreed_trials = 0;
    const Bigint kfact = factorial(verify_k);
    for (int trial = 0; trial < verify_trials; ++trial) {
      const ResidueMultiset d(verify_p,
                              sample_distinct_residues(rng, verify_p, verify_size));
      const SumCountTable dp = count_k_subsets_mod_p(d, verify_k);
      bool trial_ok = true;
      for (int b = 0; b < verify_p; ++b) {
        const Bigint via_sieve = sieve_distinct_count(d, b, verify_k);
        const Bigint via_brute = brute_count_distinct_tuples(d, b, verify_k);
        const Bigint via_dp = kfact * dp.at(b);
        ++checks;
        if (!(via_sieve == via_brute && via_brute == via_dp)) {
          ++failures;
          trial_ok = false;
        }
      }
      if (trial_ok) ++agreed_trials;
    }
    OutputRecord rec{"sieve-verify", {}, {}};
    rec.parameters.emplace_back("p", std::to_string(verify_p));
    rec.parameters.emplace_back("size", std::to_string(verify_size));
    rec.parameters.emplace_back("k", std::to_string(verify_k));
    rec.parameters.emplace_back("trials", std::to_string(verify_trials));
    rec.parameters.emplace_back("seed", std::to_string(verify_seed));
    rec.results.emplace_back("checks", std::to_string(checks));
    rec.results.emplace_back("agreements", std::to_string(agreed_trials));
    rec.results.emplace_back("failures", std::to_string(failures));
    ctx.records.push_back(std::move(rec));
    if (failures > 0) ctx.exit_code = 2;
  });

  // --- identity ---
  auto* identity_cmd = app.add_subcommand(
      "identity", "Check the cycle-index identity and that class sizes sum to k!");
  int id_kmax = 12;
  int id_qmax = 10;
  identity_cmd->add_option("--kmax", id_kmax, "Largest k checked")->check(CLI::Range(1, 24));
  identity_cmd->add_option("--qmax", id_qmax, "Largest q checked")->check(CLI::Range(0, 1000));
  add_common_options(identity_cmd, ctx);
  identity_cmd->callback([&] {
    long long checks = 0, failures = 0;
    for (int k = 1; k <= id_kmax; ++k) {
      Bigint sum = 0;
      for (const PermutationType& t : enumerate_types(k)) sum += type_count(t);
      ++checks;
      if (sum != factorial(k)) ++failures;
      for (int q = 0; q <= id_qmax; ++q) {
        const auto [lhs, rhs] = cycle_index_identity(k, Bigint(q));
        ++checks;
        if (lhs != rhs) ++failures;
      }
    }
    OutputRecord rec{"identity", {}, {}};
    rec.parameters.emplace_back("kmax", std::to_string(id_kmax));
    rec.parameters.emplace_back("qmax", std::to_string(id_qmax));
    rec.results.emplace_back("checks", std::to_string(checks));
    rec.results.emplace_back("failures", std::to_string(failures));
    ctx.records.push_back(std::move(rec));
    if (failures > 0) ctx.exit_code = 2;
  });

  // --- table ---
  auto* table_cmd = app.add_subcommand("table", "Asymptotic sweep over several n");
  std::vector<int> table_n;
  table_cmd->add_option("--n", table_n, "Values of n (comma separated)")
      ->required()
      ->delimiter(',');
  add_common_options(table_cmd, ctx);
  table_cmd->callback([&] {
    for (const AsymptoticRow& row : asymptotic_table(table_n)) {
      if (!row.error.empty()) {
        err << "table: n=" << row.n << " failed: " << row.error << "\n";
        ctx.exit_code = std::max(ctx.exit_code, 1);
        continue;
      }
      Rational avg(row.sens_total, Bigint(1) << row.n);
      avg.canonicalize();
      OutputRecord rec{"table", {}, {}};
      rec.results.emplace_back("n", std::to_string(row.n));
      rec.results.emplace_back("p", std::to_string(row.p));
      rec.results.emplace_back("weight", format_int(row.weight));
      rec.results.emplace_back("weight_ratio", format_real(row.weight_ratio));
      rec.results.emplace_back("sens_total_flips", format_int(row.sens_total));
      rec.results.emplace_back("sens_avg", format_real(avg.get_d()));
      rec.results.emplace_back("sens_ratio", format_real(row.sens_ratio));
      ctx.records.push_back(std::move(rec));
    }
  });

  // CLI11 wants argv-style input including the program name.
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("laced");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  } catch (const verification_error& e) {
    err << "verification failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  emit(ctx, out, err);
  return ctx.exit_code;
}

}  // namespace laced::cli
