#include "involution_lab_cli/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "involution_lab/algebra.hpp"
#include "involution_lab/checks.hpp"
#include "involution_lab/conjecture.hpp"
#include "involution_lab/errors.hpp"
#include "involution_lab/periodicity.hpp"
#include "involution_lab/sequences.hpp"
#include "involution_lab/serialization.hpp"
#include "involution_lab/valuations.hpp"

namespace involution_lab::cli {

namespace {

// Upper bounds on user-supplied ranges; all exact computations below them
// finish in seconds.
constexpr std::uint64_t kMaxSequenceIndex = 5000;
constexpr std::uint64_t kMaxTableK = 1000;
constexpr std::uint64_t kMaxRhoK = 2000;

struct Options {
  std::string format = "csv";
  std::string output;

  // seq
  std::string kind;
  std::uint64_t from = 0;
  std::uint64_t to = 0;
  std::optional<std::uint32_t> p;

  // table / rho / verify
  std::optional<std::uint64_t> k_max;
  std::uint32_t bits = 64;

  // verify
  std::string check;
  std::optional<std::uint64_t> n_max;
  std::optional<std::uint32_t> s;
  std::optional<std::uint64_t> m_max;

  // period
  std::optional<std::uint64_t> t_mod;
  std::optional<std::uint32_t> beta_mod_2s;
  std::optional<std::uint64_t> window;
  bool expect_paper = false;
};

// INVOLUTION_LAB_CAP is "N" or "N,V": permutation cap and graph vertex cap.
EnumerationLimits limits_from_environment() {
  EnumerationLimits limits;
  const char* raw = std::getenv("INVOLUTION_LAB_CAP");
  if (raw == nullptr || *raw == '\0') return limits;
  const std::string text(raw);
  const auto parse = [&](std::string_view field, auto& target) {
    using Target = std::remove_reference_t<decltype(target)>;
    Target value{};
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || end != field.data() + field.size() || value == 0) {
      throw ArgumentError("INVOLUTION_LAB_CAP must be N or N,V with positive integers, got '" + text + "'");
    }
    target = value;
  };
  const auto comma = text.find(',');
  parse(std::string_view(text).substr(0, comma), limits.max_permutations);
  if (comma != std::string::npos) parse(std::string_view(text).substr(comma + 1), limits.max_vertices);
  return limits;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (const char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

using Emit = std::function<void(const std::string&)>;

std::string sequence_value(const std::string& kind, std::uint64_t n, std::optional<std::uint32_t> p) {
  if (kind == "t") return t_rec(n).to_string();
  if (kind == "tau") return tau_p(n, *p).to_string();
  if (kind == "beta") return beta(n).to_string();
  if (kind == "g") return g_int(static_cast<std::int64_t>(n)).to_string();
  if (kind == "g_alt") return g_alt(static_cast<std::int64_t>(n)).to_string();
  if (kind == "t_signed") return t_signed(n).to_string();
  if (kind == "t_even") return t_even(n).to_string();
  return t_odd(n).to_string();
}

int cmd_seq(const Options& o, const Emit& emit) {
  if (o.from > o.to) throw ArgumentError("--from must not exceed --to");
  if (o.to > kMaxSequenceIndex) throw ArgumentError("--to must be at most " + std::to_string(kMaxSequenceIndex));
  if (o.kind == "tau" && !o.p) throw ArgumentError("--kind tau needs --p");
  if (o.p && !is_prime(*o.p)) throw ArgumentError("--p must be prime");
  std::vector<SequenceRow> rows;
  for (std::uint64_t n = o.from; n <= o.to; ++n) rows.push_back({n, sequence_value(o.kind, n, o.p)});
  emit(o.format == "json" ? sequence_to_json(o.kind, rows) : sequence_to_csv(rows));
  return kPass;
}

int cmd_table(const Options& o, const Emit& emit) {
  const std::uint64_t k_max = o.k_max.value_or(10);
  if (k_max > kMaxTableK) throw ArgumentError("--k-max must be at most " + std::to_string(kMaxTableK));
  const auto reports = table3(k_max);
  emit(o.format == "json" ? table3_to_json(reports) : table3_to_csv(reports));
  const bool consistent = std::all_of(reports.begin(), reports.end(),
                                      [](const ValuationReport& r) { return !r.predicted || r.matches; });
  return consistent ? kPass : kVerificationFailure;
}

int cmd_verify(const Options& o, const Emit& emit, std::ostream& err) {
  if (!is_check_name(o.check)) throw ArgumentError("unknown check '" + o.check + "'");
  CheckParams params;
  params.p = o.p;
  params.n_max = o.n_max;
  params.k_max = o.k_max;
  params.s_max = o.s;
  params.m_max = o.m_max;
  params.limits = limits_from_environment();

  std::vector<CheckOutcome> outcomes;
  const std::vector<std::string_view> names =
      o.check == "all" ? std::vector<std::string_view>(check_names().begin(), check_names().end())
                       : std::vector<std::string_view>{o.check};
  for (const auto name : names) {
    err << "running " << name << "\n";
    for (auto& outcome : run_check(name, params)) outcomes.push_back(std::move(outcome));
  }

  std::ostringstream text;
  if (o.format == "json") {
    auto doc = nlohmann::ordered_json::array();
    for (const auto& c : outcomes) {
      doc.push_back({{"check", c.name},
                     {"result", c.passed ? "PASS" : "FAIL"},
                     {"detail", c.detail},
                     {"counterexample", c.counterexample ? nlohmann::ordered_json(*c.counterexample) : nullptr}});
    }
    text << doc.dump(2) << '\n';
  } else {
    text << "check,result,detail,counterexample\n";
    for (const auto& c : outcomes) {
      text << c.name << ',' << (c.passed ? "PASS" : "FAIL") << ',' << csv_field(c.detail) << ','
           << csv_field(c.counterexample.value_or("")) << '\n';
    }
  }
  emit(text.str());

  bool all_passed = true;
  for (const auto& c : outcomes) {
    err << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail;
    if (c.counterexample) err << "; first counterexample: " << *c.counterexample;
    err << "\n";
    all_passed = all_passed && c.passed;
  }
  return all_passed ? kPass : kVerificationFailure;
}

std::string period_csv(const PeriodReport& r, const std::optional<PeriodCheck>& check) {
  std::ostringstream out;
  out << "modulus,preperiod,period,window_checked,witnesses";
  if (check) out << ",expected_preperiod,expected_period,result";
  out << '\n' << r.modulus << ',' << r.preperiod << ',' << r.period << ',' << r.window_checked << ','
      << r.witnesses.size();
  if (check) {
    out << ',' << check->expected_preperiod << ',' << check->expected_period << ','
        << (check->matches ? "PASS" : "FAIL");
  }
  out << '\n';
  return out.str();
}

int cmd_period(const Options& o, const Emit& emit, std::ostream& err) {
  if (o.t_mod.has_value() == o.beta_mod_2s.has_value()) {
    throw ArgumentError("give exactly one of --t-mod and --beta-mod-2s");
  }
  std::optional<PeriodCheck> check;
  PeriodReport report;
  if (o.t_mod) {
    const std::uint64_t m = *o.t_mod;
    if (m == 0 || m > (std::uint64_t{1} << 32)) throw ArgumentError("--t-mod must lie in [1, 2^32]");
    const std::uint64_t window = o.window.value_or(default_window(m));
    if (o.expect_paper) {
      check = check_involution_modulus(m, window);
      report = check->report;
    } else {
      report = detect_period(involution_residues(m), window);
    }
  } else {
    const std::uint32_t s = *o.beta_mod_2s;
    if (s < 3 || s > 20) throw ArgumentError("--beta-mod-2s must lie in [3, 20]");
    if (o.window) err << "note: --window is ignored for --beta-mod-2s; the window is 3 * 2^(s+1)\n";
    report = beta_period(s);
    if (o.expect_paper) {
      check = PeriodCheck{report, 0, std::uint64_t{2} << s, false};
      check->matches = report.preperiod == 0 && report.period == check->expected_period && beta_half_period_witness(s);
    }
  }
  if (o.format == "json") emit(check ? period_check_to_json(*check) : period_report_to_json(report));
  else emit(period_csv(report, check));
  if (!check) return kPass;
  err << (check->matches ? "PASS" : "FAIL") << ": preperiod " << report.preperiod << ", period " << report.period
      << " (expected " << check->expected_preperiod << ", " << check->expected_period << ")\n";
  return check->matches ? kPass : kVerificationFailure;
}

int cmd_rho(const Options& o, const Emit& emit, std::ostream& err) {
  const std::uint64_t k_max = o.k_max.value_or(1000);
  if (k_max < 1 || k_max > kMaxRhoK) throw ArgumentError("--k-max must lie in [1, " + std::to_string(kMaxRhoK) + "]");
  if (o.bits < 1 || o.bits > 64) throw ArgumentError("--bits must lie in [1, 64]");
  err << "scanning k <= " << k_max << "\n";
  const TwoAdicPrefix prefix = fit_rho(k_max, o.bits);
  if (o.format == "json") {
    emit(two_adic_prefix_to_json(prefix));
  } else {
    std::ostringstream out;
    out << "index,digit\n";
    for (std::size_t i = 0; i < prefix.digits.size(); ++i) out << i << ',' << static_cast<int>(prefix.digits[i]) << '\n';
    emit(out.str());
  }
  return prefix.violations.empty() ? kPass : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact involution-count sequences, valuations and periods", "involution_lab"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"csv", "json"};
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("--output", o.output, "Write data to this file instead of standard output");
  };

  auto* seq = app.add_subcommand("seq", "Emit n,value rows of a sequence");
  seq->add_option("--kind", o.kind, "Sequence kind")
      ->required()
      ->check(CLI::IsMember({"t", "tau", "beta", "g", "g_alt", "t_signed", "t_even", "t_odd"}));
  seq->add_option("--from", o.from, "First index");
  seq->add_option("--to", o.to, "Last index")->required();
  seq->add_option("--p", o.p, "Prime for --kind tau");
  add_common(seq);

  auto* table = app.add_subcommand("table", "2-adic valuation table with closed-form predictions");
  table->add_option("--k-max", o.k_max, "Rows n < 4 (k_max + 1); default 10");
  add_common(table);

  auto* verify = app.add_subcommand("verify", "Run named verification batches");
  verify->add_option("--check", o.check, "Check name or 'all'")->required();
  verify->add_option("--p", o.p, "Prime");
  verify->add_option("--n-max", o.n_max, "Largest n");
  verify->add_option("--k-max", o.k_max, "Largest k");
  verify->add_option("--s", o.s, "Largest s for 2^s moduli");
  verify->add_option("--m-max", o.m_max, "Largest modulus");
  add_common(verify);

  auto* period = app.add_subcommand("period", "Preperiod and smallest period of a residue sequence");
  period->add_option("--t-mod", o.t_mod, "Analyse t_n mod m");
  period->add_option("--beta-mod-2s", o.beta_mod_2s, "Analyse beta_n mod 2^s");
  period->add_option("--window", o.window, "Step budget for t_n mod m");
  period->add_flag("--expect-paper", o.expect_paper, "Compare with the closed-form preperiod and period");
  add_common(period);

  auto* rho = app.add_subcommand("rho", "Fit the 2-adic digits of rho");
  rho->add_option("--k-max", o.k_max, "Largest k scanned; default 1000");
  rho->add_option("--bits", o.bits, "Digit budget; default 64");
  add_common(rho);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << "run with --help for usage\n";
    return kUsageError;
  }

  std::ofstream file;
  if (!o.output.empty()) {
    file.open(o.output, std::ios::binary);
    if (!file) {
      err << "usage error: cannot open " << o.output << " for writing\n";
      return kUsageError;
    }
  }
  std::ostream& data = o.output.empty() ? out : file;
  const Emit emit = [&](const std::string& text) { data << text; };

  try {
    if (seq->parsed()) return cmd_seq(o, emit);
    if (table->parsed()) return cmd_table(o, emit);
    if (verify->parsed()) return cmd_verify(o, emit, err);
    if (period->parsed()) return cmd_period(o, emit, err);
    return cmd_rho(o, emit, err);
  } catch (const ArgumentError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << " (predicted size " << e.predicted_count()
        << "); raise INVOLUTION_LAB_CAP to allow it\n";
    return kInconclusive;
  } catch (const InconclusiveError& e) {
    err << "inconclusive: " << e.what() << "\n";
    return kInconclusive;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << "\n";
    return kVerificationFailure;
  }
}

}  // namespace involution_lab::cli
