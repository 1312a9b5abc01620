#include "cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "nsmean/bounds.hpp"
#include "nsmean/known_results.hpp"
#include "nsmean/log_mean.hpp"
#include "nsmean/means.hpp"
#include "nsmean/series.hpp"
#include "nsmean/verification.hpp"

namespace nsmean::cli {
namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

constexpr double kAlphaTolerance = 1e-9;
constexpr double kBetaTolerance = 1e-6;

// Thrown for anything that maps to exit code 2 after parsing succeeded.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open '" + path.string() + "' for writing");
  f << text;
  if (!f.flush()) throw ConfigError("write failed for '" + path.string() + "'");
}

// Writes to `path` when given, otherwise to `out`.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_file(path, text);
  }
}

const BoundCertificate& certificate_or_throw(const std::string& id) {
  try {
    return find_certificate(id);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

// ---------------------------------------------------------------------------

struct EvalOptions {
  std::string kind;
  double a = 0.0;
  double b = 0.0;
  std::optional<double> p;
};

int cmd_eval(const EvalOptions& o, std::ostream& out) {
  const PositivePair pair(o.a, o.b);
  double value;
  if (o.kind == "Lp") {
    if (!o.p) throw ConfigError("eval Lp requires --p");
    value = generalized_log_mean(*o.p, pair);
  } else {
    if (o.p) throw ConfigError("--p only applies to kind Lp");
    const auto kind = parse_mean_kind(o.kind);
    if (!kind) throw ConfigError("unknown mean kind '" + o.kind + "'");
    value = mean_eval(*kind, pair);
  }
  out << fmt17(value) << '\n';
  return kPass;
}

// ---------------------------------------------------------------------------

struct VerifyOptions {
  std::string certificate;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::size_t samples = kDefaultSampleCount;
  std::uint64_t seed = kDefaultSeed;
  std::string out;
  std::string format = "json";
};

std::string report_csv(const VerificationReport& r) {
  std::ostringstream s;
  s << "certificate,alpha,beta,samples,violations,minRatio,maxRatio,argminX,argmaxX,seed,"
       "elapsedSec,pass\n"
    << r.certificate << ',' << fmt17(r.alpha) << ',' << fmt17(r.beta) << ',' << r.samples << ','
    << r.violations.size() << ',' << fmt17(r.extremal.min_ratio) << ','
    << fmt17(r.extremal.max_ratio) << ',' << fmt17(r.extremal.argmin_x) << ','
    << fmt17(r.extremal.argmax_x) << ',' << r.seed << ',' << fmt17(r.elapsed_sec) << ','
    << (r.passed() ? "true" : "false") << '\n';
  return s.str();
}

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  const BoundCertificate& cert = certificate_or_throw(o.certificate);
  const double alpha = o.alpha.value_or(cert.alpha_star.to_double());
  const double beta = o.beta.value_or(cert.beta_star.to_double());
  if (!(alpha >= 0.0 && alpha <= 1.0 && beta >= 0.0 && beta <= 1.0)) {
    throw ConfigError("--alpha and --beta must lie in [0, 1]");
  }
  if (o.samples == 0) throw ConfigError("--samples must be >= 1");

  const VerificationReport r = verify_double_inequality(cert, alpha, beta, o.samples, o.seed);
  const std::string payload = o.format == "csv" ? report_csv(r) : to_json(r) + "\n";
  emit(payload, o.out, out);
  if (!o.out.empty()) {
    out << r.certificate << ": " << (r.passed() ? "pass" : "FAIL") << " (" << r.violations.size()
        << " violations over " << r.samples << " samples)\n";
    if (!r.passed()) {
      const Violation& w = r.violations.front();
      out << "first witness: a=" << fmt17(w.a) << " b=" << fmt17(w.b) << " side=" << w.side
          << '\n';
    }
  }
  return r.passed() ? kPass : kViolation;
}

// ---------------------------------------------------------------------------

struct SharpnessOptions {
  std::string certificate;
  std::size_t grid = 10000;
};

bool within_tolerance(const SharpnessEstimate& s) {
  return s.certified() && s.alpha_error <= kAlphaTolerance && s.beta_error <= kBetaTolerance;
}

int cmd_sharpness(const SharpnessOptions& o, std::ostream& out) {
  const BoundCertificate& cert = certificate_or_throw(o.certificate);
  if (o.grid < 2) throw ConfigError("--grid must be >= 2");
  const SharpnessEstimate s = estimate_sharp_exponents(cert, o.grid);
  out << "certificate " << cert.id << '\n'
      << "alphaHat    " << fmt17(s.alpha_hat) << '\n'
      << "alphaStar   " << cert.alpha_star.str() << '\n'
      << "alphaError  " << fmt17(s.alpha_error) << '\n'
      << "betaHat     " << fmt17(s.beta_hat) << '\n'
      << "betaStar    " << cert.beta_star.str() << '\n'
      << "betaError   " << fmt17(s.beta_error) << '\n'
      << "monotone    " << name(s.monotone.verdict) << " (grid " << o.grid << ")\n";
  return within_tolerance(s) ? kPass : kViolation;
}

// ---------------------------------------------------------------------------

struct SeriesOptions {
  std::string descriptor;
  unsigned count = 0;
  std::string out;
};

int cmd_series(const SeriesOptions& o, std::ostream& out) {
  SequencePair pair;
  if (o.descriptor == "phi" || o.descriptor == "f-ratio") {
    pair = SequencePair::Phi;
  } else if (o.descriptor == "g-ratio") {
    pair = SequencePair::GRatio;
  } else if (o.descriptor == "h-ratio") {
    pair = SequencePair::HRatio;
  } else {
    throw ConfigError("unknown series '" + o.descriptor +
                      "' (expected phi, f-ratio, g-ratio or h-ratio)");
  }
  if (o.count < 1 || o.count > kMaxSeriesTerms) throw ConfigError("N must lie in [1, 200]");

  std::ostringstream s;
  // sign: of ratio(n+1) - ratio(n).
  s << "n,numerator,denominator,ratio,decimal,sign\n";
  for (unsigned n = 0; n < o.count; ++n) {
    const Rational num = coeff(numerator_sequence(pair), n);
    const Rational den = coeff(denominator_sequence(pair), n);
    const Rational r = num / den;
    const int sign = difference_sign(pair, n).sign;
    s << n << ',' << num.str() << ',' << den.str() << ',' << r.str() << ','
      << fmt17(r.to_double()) << ',' << (sign > 0 ? "+" : sign < 0 ? "-" : "0") << '\n';
  }
  emit(s.str(), o.out, out);
  return kPass;
}

// ---------------------------------------------------------------------------

struct ReportOptions {
  std::string out = "report";
  std::string format = "csv";
  std::size_t samples = kDefaultSampleCount;
  std::uint64_t seed = kDefaultSeed;
  std::size_t grid = 10000;
};

void write_curve(const fs::path& dir, const std::string& stem, const char* xname,
                 const char* yname, const std::vector<double>& xs, const std::vector<double>& ys,
                 const std::string& format) {
  if (format == "json") {
    ordered_json j;
    j[xname] = xs;
    j[yname] = ys;
    write_file(dir / (stem + ".json"), j.dump() + "\n");
    return;
  }
  std::string text = std::string(xname) + ',' + yname + '\n';
  for (std::size_t i = 0; i < xs.size(); ++i) text += fmt17(xs[i]) + ',' + fmt17(ys[i]) + '\n';
  write_file(dir / (stem + ".csv"), text);
}

int cmd_report(const ReportOptions& o, std::ostream& out) {
  if (o.grid < 2) throw ConfigError("--grid must be >= 2");
  if (o.samples == 0) throw ConfigError("--samples must be >= 1");
  const fs::path dir(o.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw ConfigError("cannot create directory '" + o.out + "'");

  const double g = static_cast<double>(o.grid);
  bool all_pass = true;
  ordered_json certs = ordered_json::array();
  for (const auto& cert : certificate_catalog()) {
    std::vector<double> xs, ys;
    for (std::size_t i = 1; i < o.grid; ++i) {
      xs.push_back(static_cast<double>(i) / g);
      ys.push_back(ratio_R(cert.lower_base, cert.upper_base, xs.back()));
    }
    write_curve(dir, "ratio_" + cert.id, "x", "ratio", xs, ys, o.format);

    const VerificationReport r = verify_double_inequality(
        cert, cert.alpha_star.to_double(), cert.beta_star.to_double(), o.samples, o.seed);
    const SharpnessEstimate s = estimate_sharp_exponents(cert, o.grid);
    const bool pass = r.passed() && within_tolerance(s);
    all_pass = all_pass && pass;
    certs.push_back({{"id", cert.id},
                     {"alphaStar", cert.alpha_star.str()},
                     {"betaStar", cert.beta_star.str()},
                     {"pass", pass},
                     {"verification", ordered_json::parse(to_json(r))},
                     {"sharpness",
                      {{"alphaHat", s.alpha_hat},
                       {"betaHat", s.beta_hat},
                       {"alphaError", s.alpha_error},
                       {"betaError", s.beta_error},
                       {"monotone", name(s.monotone.verdict)}}}});
  }

  {
    std::vector<double> ts, ys;
    for (std::size_t i = 0; i <= o.grid; ++i) {
      ts.push_back(kTStar * static_cast<double>(i) / g);
      ys.push_back(phi(ts.back()));
    }
    write_curve(dir, "phi", "t", "phi", ts, ys, o.format);
  }

  ordered_json known = ordered_json::array();
  auto add_sweep = [&](const SweepSummary& s) {
    all_pass = all_pass && s.failures == 0;
    known.push_back({{"id", s.id},
                     {"pass", s.failures == 0},
                     {"checked", s.checked},
                     {"failures", s.failures},
                     {"minMargin", s.min_margin}});
  };
  for (const auto& s : sweep_known_results(o.samples, o.seed)) add_sweep(s);
  add_sweep(sweep_ky_fan(o.samples, o.seed));

  const RootResult p0 = solve_p0();
  ordered_json summary;
  summary["seed"] = o.seed;
  summary["samples"] = o.samples;
  summary["grid"] = o.grid;
  summary["certificates"] = std::move(certs);
  summary["knownResults"] = std::move(known);
  summary["p0"] = {{"root", p0.root}, {"residual", p0.residual}};
  summary["pass"] = all_pass;
  write_file(dir / "summary.json", summary.dump(2) + "\n");

  out << "report written to " << dir.string() << ": " << (all_pass ? "pass" : "FAIL") << '\n';
  return all_pass ? kPass : kViolation;
}

}  // namespace

std::vector<std::string> collect_args(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return args;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Neuman-Sandor mean bounds: evaluation and verification", "nsmean"};
  app.require_subcommand(1);

  EvalOptions eval;
  auto* e = app.add_subcommand("eval", "Evaluate a mean at (a, b)");
  e->add_option("kind", eval.kind, "H G L P A M T Q C (or descriptive name), or Lp")->required();
  e->add_option("a", eval.a)->required();
  e->add_option("b", eval.b)->required();
  e->add_option("--p", eval.p, "Order of the generalized logarithmic mean");

  VerifyOptions verify;
  auto* v = app.add_subcommand("verify", "Sample-check a two-sided bound");
  v->add_option("certificate", verify.certificate, "HQ, GQ, HC or GC")->required();
  v->add_option("--alpha", verify.alpha);
  v->add_option("--beta", verify.beta);
  v->add_option("--samples", verify.samples)->capture_default_str();
  v->add_option("--seed", verify.seed)->capture_default_str();
  v->add_option("--out", verify.out, "Report path (default: stdout)");
  v->add_option("--format", verify.format)
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  SharpnessOptions sharp;
  auto* s = app.add_subcommand("sharpness", "Estimate the sharp exponents");
  s->add_option("certificate", sharp.certificate)->required();
  s->add_option("--grid", sharp.grid, "Monotonicity grid size")->capture_default_str();

  SeriesOptions series;
  auto* r = app.add_subcommand("series", "Exact coefficient table");
  r->add_option("descriptor", series.descriptor, "phi, f-ratio, g-ratio or h-ratio")->required();
  r->add_option("N", series.count, "Rows n = 0 .. N-1 (N <= 200)")->required();
  r->add_option("--out", series.out);

  ReportOptions report;
  auto* p = app.add_subcommand("report", "Curves, verification and summary");
  p->add_option("--out", report.out)->capture_default_str();
  p->add_option("--format", report.format)
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  p->add_option("--samples", report.samples)->capture_default_str();
  p->add_option("--seed", report.seed)->capture_default_str();
  p->add_option("--grid", report.grid)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& ex) {
    err << "nsmean: " << ex.what() << '\n';
    return kUsageError;
  }

  try {
    if (*e) return cmd_eval(eval, out);
    if (*v) return cmd_verify(verify, out);
    if (*s) return cmd_sharpness(sharp, out);
    if (*r) return cmd_series(series, out);
    return cmd_report(report, out);
  } catch (const std::exception& ex) {
    err << "nsmean: " << ex.what() << '\n';
    return kUsageError;
  }
}

}  // namespace nsmean::cli
