// Command-line front end: exact evaluation of the cataloged closed forms,
// ODE-residual certification sweeps, identity verification with JSON/CSV
// reports, and the entropy-facing power sums.
//
// Exit codes: 0 all pass, 1 at least one failure/finding, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "heunforms/catalog.hpp"
#include "heunforms/entropy.hpp"
#include "heunforms/heun_ode.hpp"
#include "heunforms/highfloat.hpp"
#include "heunforms/hypergeom.hpp"
#include "heunforms/identities.hpp"

namespace hf = heunforms;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

hf::Rational parse_rational(const std::string& s) { return hf::Rational::from_string(s); }

std::string decimal(const hf::Rational& r, int digits = 25) {
  return hf::HighFloat(r).str(digits);
}

struct EvalArgs {
  std::string family;
  long n = 0;
  std::optional<long> m, k, j;
  std::string p = "1";
  std::optional<std::string> lambda, alpha, gamma;
  std::string x;
  std::string method = "closed";
  long order = 64;
  std::string tol = "1/1000000000000000";
};

int run_eval(const EvalArgs& a) {
  const hf::Rational x = parse_rational(a.x);
  const hf::Rational tol = parse_rational(a.tol);

  if (auto hl = hf::parse_hl_family(a.family)) {
    long aux = 0;
    if (hf::hl_family_has_aux(*hl)) {
      const char name = hf::hl_family_aux_name(*hl);
      const std::optional<long>& given = (name == 'm') ? a.m : a.k;
      if (!given)
        throw std::invalid_argument(std::string("family ") + a.family + " requires --" + name);
      aux = *given;
    }
    if (a.method == "closed") {
      const hf::HlForm form = hf::hl_closed_form(*hl, a.n, aux);
      std::cout << form.primary.eval_exact(x).str() << "\n";
      return kExitPass;
    }
    if (a.method == "series") {
      // Local series about 0; for a = 1/2 it converges only for |x| < 1/2.
      if (x.abs() >= hf::Rational(1, 2))
        throw std::domain_error("series method needs |x| < 1/2; use --method closed");
      const hf::HlForm form = hf::hl_closed_form(*hl, a.n, aux);
      const hf::PowerSeries s = hf::heun_series(form.params, a.order);
      std::cout << decimal(s.eval(x)) << "\n";
      return kExitPass;
    }
    if (a.method == "sum") {
      if (*hl == hf::HlFamilyId::F2_2) {
        std::cout << hf::index_sum_13(a.n, x).str() << "\n";
        return kExitPass;
      }
      if (*hl == hf::HlFamilyId::F2_8) {
        if (x.sign() >= 0)
          throw std::domain_error("family 2.8 sum route needs x < 0 (the mapped argument)");
        std::cout << decimal(hf::index_sum_14(a.n + 1, -x, tol).value) << "\n";
        return kExitPass;
      }
      throw std::invalid_argument("method sum is available for families 2.2, 2.8 and 3.7");
    }
    throw std::invalid_argument("unknown method \"" + a.method + "\"");
  }

  if (auto hc = hf::parse_hc_family(a.family)) {
    hf::HcFamilyArgs args;
    args.p = parse_rational(a.p);
    args.n = a.n;
    args.j = a.j.value_or(0);
    if (a.lambda) args.lambda = parse_rational(*a.lambda);
    if (a.alpha) args.alpha = parse_rational(*a.alpha);
    if (a.gamma) args.gamma = parse_rational(*a.gamma);
    if (*hc == hf::HcFamilyId::C3_3 && (!a.alpha || !a.gamma))
      throw std::invalid_argument("family 3.3 requires --alpha and --gamma");
    if (a.method == "closed") {
      const hf::HcForm form = hf::hc_closed_form(*hc, args);
      const hf::Rational value = form.evaluate(x, tol);
      if (form.polynomial)
        std::cout << value.str() << "\n";
      else
        std::cout << decimal(value) << "\n";
      return kExitPass;
    }
    if (a.method == "series") {
      if (x.abs() >= hf::Rational(1))
        throw std::domain_error("series method needs |x| < 1; use --method closed");
      const hf::HcForm form = hf::hc_closed_form(*hc, args);
      const hf::PowerSeries s = hf::confluent_series(form.params, a.order);
      std::cout << decimal(s.eval(x)) << "\n";
      return kExitPass;
    }
    if (a.method == "sum") {
      if (*hc != hf::HcFamilyId::C3_7)
        throw std::invalid_argument("method sum is available for families 2.2, 2.8 and 3.7");
      const hf::PowerSum s = hf::power_sum_2({hf::Distribution::Poisson, a.n, x}, tol);
      std::cout << s.value.str(25) << "\n";
      return kExitPass;
    }
    throw std::invalid_argument("unknown method \"" + a.method + "\"");
  }

  std::ostringstream os;
  os << "unknown family \"" << a.family << "\"; available:";
  for (auto id : hf::all_hl_families()) os << " " << hf::family_name(id);
  for (auto id : hf::all_hc_families()) os << " " << hf::family_name(id);
  throw std::invalid_argument(os.str());
}

int print_family_report(const hf::FamilyReport& report) {
  std::ostringstream line;
  line << "family " << report.family << ": " << report.members.size() << " members, ";
  if (report.all_pass())
    line << "all certified";
  else
    line << report.failure_count() << " FINDINGS";
  std::cout << line.str() << " (" << std::fixed << report.wall_seconds << " s)\n";
  std::cout.unsetf(std::ios_base::floatfield);
  for (const auto& m : report.members)
    if (!m.pass()) std::cout << "  FINDING " << m.member << ": " << m.note << "\n";
  return report.all_pass() ? kExitPass : kExitFailure;
}

struct CertifyArgs {
  std::string family = "all";
  long max_n = 10;
  std::vector<std::string> p_values;
  long threads = 0;
};

int run_certify(const CertifyArgs& a) {
  hf::CertifyOptions options;
  options.max_n = a.max_n;
  options.threads = a.threads;
  if (!a.p_values.empty()) {
    options.p_values.clear();
    for (const auto& s : a.p_values) options.p_values.push_back(parse_rational(s));
  }

  int rc = kExitPass;
  if (a.family == "all") {
    for (auto id : hf::all_hl_families()) rc |= print_family_report(hf::certify_family(id, options));
    for (auto id : hf::all_hc_families()) rc |= print_family_report(hf::certify_family(id, options));
    return rc;
  }
  if (auto hl = hf::parse_hl_family(a.family)) return print_family_report(hf::certify_family(*hl, options));
  if (auto hc = hf::parse_hc_family(a.family)) return print_family_report(hf::certify_family(*hc, options));
  std::ostringstream os;
  os << "unknown family \"" << a.family << "\"; available: all";
  for (auto id : hf::all_hl_families()) os << " " << hf::family_name(id);
  for (auto id : hf::all_hc_families()) os << " " << hf::family_name(id);
  throw std::invalid_argument(os.str());
}

struct VerifyArgs {
  std::vector<std::string> identities;
  bool all = false;
  long max_n = 30;
  std::string format;
  std::string out;
  long threads = 0;
};

void write_reports(const std::vector<hf::IdentityReport>& reports, const std::string& format,
                   const std::string& out) {
  if (format.empty() && out.empty()) return;
  const std::string fmt = format.empty() ? "json" : format;
  if (fmt != "json" && fmt != "csv")
    throw std::invalid_argument("unknown report format \"" + fmt + "\" (json or csv)");
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!out.empty()) {
    file.open(out, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file \"" + out + "\"");
    os = &file;
  }
  if (fmt == "json")
    hf::emit_report_json(reports, *os);
  else
    hf::emit_report_csv(reports, *os);
}

int run_verify(const VerifyArgs& a) {
  std::vector<std::string> ids = a.identities;
  if (a.all) ids = hf::identity_ids();
  if (ids.empty())
    throw std::invalid_argument("verify needs --identity <id> (repeatable) or --all");
  for (const auto& id : ids)
    if (!hf::is_identity(id)) {
      std::ostringstream os;
      os << "unknown identity \"" << id << "\"; available:";
      for (const auto& known : hf::identity_ids()) os << " " << known;
      throw std::invalid_argument(os.str());
    }

  // Human summary goes to stderr when the report itself streams to stdout.
  const bool report_on_stdout = !a.format.empty() && a.out.empty();
  std::ostream& console = report_on_stdout ? std::cerr : std::cout;

  const std::vector<hf::IdentityReport> reports = hf::sweep(ids, {a.max_n, a.threads});
  long total = 0, failed = 0;
  for (const auto& report : reports) {
    total += report.case_count();
    failed += report.failure_count();
    console << "identity " << report.identity << ": " << report.case_count() << " cases, ";
    if (report.failure_count() == 0)
      console << "all pass";
    else
      console << report.failure_count() << " FAILURES";
    console << " (" << report.wall_seconds << " s)\n";
    for (const auto& c : report.failures())
      console << "  FAIL " << c.params_str() << ": lhs " << c.lhs.str() << " != rhs "
              << c.rhs.str() << "\n";
  }
  console << total << " cases, " << failed << " failures\n";
  write_reports(reports, a.format, a.out);
  return failed == 0 ? kExitPass : kExitFailure;
}

struct EntropyArgs {
  std::string dist;
  long n = 1;
  std::string x;
  std::string tol = "1/1000000000000";
};

int run_entropy(const EntropyArgs& a) {
  const auto kind = hf::parse_distribution(a.dist);
  if (!kind)
    throw std::invalid_argument("unknown distribution \"" + a.dist +
                                "\" (binomial, negbinomial, poisson)");
  const hf::DistributionFamily family{*kind, a.n, parse_rational(a.x)};
  const hf::Rational tol = parse_rational(a.tol);
  const hf::PowerSum sum = hf::power_sum_2(family, tol);
  if (sum.exact)
    std::cout << "power_sum = " << sum.exact->str() << "\n";
  else
    std::cout << "power_sum = " << sum.value.str(25) << " (truncation <= "
              << hf::HighFloat(sum.truncation_bound).str(3) << ")\n";
  std::cout << "renyi2 = " << hf::renyi2(sum.value).str(25) << "\n";
  return kExitPass;
}

struct SweepArgs {
  long max_n = 30;
  long family_max_n = 15;
  std::string format;
  std::string out;
  long threads = 0;
};

int run_sweep(const SweepArgs& a) {
  int rc = kExitPass;

  std::cout << "== identity sweep (maxN=" << a.max_n << ") ==\n";
  VerifyArgs verify;
  verify.all = true;
  verify.max_n = a.max_n;
  verify.format = a.format;
  verify.out = a.out;
  verify.threads = a.threads;
  rc |= run_verify(verify);

  std::cout << "== family certification (maxN=" << a.family_max_n << ") ==\n";
  hf::CertifyOptions options;
  options.max_n = a.family_max_n;
  options.threads = a.threads;
  for (auto id : hf::all_hl_families()) rc |= print_family_report(hf::certify_family(id, options));
  options.max_n = std::min<long>(a.family_max_n, 10);
  for (auto id : hf::all_hc_families()) rc |= print_family_report(hf::certify_family(id, options));
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact closed forms, certification and identity sweeps for the Heun and "
               "confluent Heun families"};
  app.require_subcommand(1);

  EvalArgs eval;
  CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate a cataloged family at a rational point");
  eval_cmd->add_option("--family", eval.family, "family id, e.g. 2.2 or 3.14")->required();
  eval_cmd->add_option("--n", eval.n, "family index n");
  eval_cmd->add_option("--m", eval.m, "m index (families 2.3, 2.T4)");
  eval_cmd->add_option("--k", eval.k, "k index (families 2.12, 2.15, 2.20, 2.21)");
  eval_cmd->add_option("--j", eval.j, "j index (families 3.9, 3.11, 3.12)");
  eval_cmd->add_option("--p", eval.p, "confluent p as p/q (default 1)");
  eval_cmd->add_option("--lambda", eval.lambda, "lambda as p/q (families 3.12, 3.17)");
  eval_cmd->add_option("--alpha", eval.alpha, "alpha as p/q (family 3.3)");
  eval_cmd->add_option("--gamma", eval.gamma, "gamma as p/q (family 3.3)");
  eval_cmd->add_option("--x", eval.x, "evaluation point as p/q")->required();
  eval_cmd->add_option("--method", eval.method, "closed (default), series or sum");
  eval_cmd->add_option("--order", eval.order, "series truncation order (default 64)");
  eval_cmd->add_option("--tol", eval.tol, "tolerance as p/q for truncated routes");

  CertifyArgs certify;
  CLI::App* certify_cmd =
      app.add_subcommand("certify", "ODE-residual certification of a closed-form family");
  certify_cmd->add_option("--family", certify.family, "family id or \"all\"");
  certify_cmd->add_option("--max-n", certify.max_n, "largest n (default 10)");
  certify_cmd->add_option("--p", certify.p_values, "confluent p values (repeatable; default 1 2 3)");
  certify_cmd->add_option("--threads", certify.threads, "worker threads (default: cores)");

  VerifyArgs verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Exact identity sweeps");
  verify_cmd->add_option("--identity", verify.identities, "identity id, e.g. 2.7 (repeatable)");
  verify_cmd->add_flag("--all", verify.all, "sweep every cataloged identity");
  verify_cmd->add_option("--max-n", verify.max_n, "free-parameter bound (default 30)");
  verify_cmd->add_option("--format", verify.format, "report format: json or csv");
  verify_cmd->add_option("--out", verify.out, "report output path (default: stdout)");
  verify_cmd->add_option("--threads", verify.threads, "worker threads (default: cores)");

  SweepArgs sweeparg;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Full battery: every identity plus every family certification");
  sweep_cmd->add_option("--max-n", sweeparg.max_n, "identity free-parameter bound (default 30)");
  sweep_cmd->add_option("--family-max-n", sweeparg.family_max_n,
                        "certification n bound (default 15)");
  sweep_cmd->add_option("--format", sweeparg.format, "identity report format: json or csv");
  sweep_cmd->add_option("--out", sweeparg.out, "identity report output path");
  sweep_cmd->add_option("--threads", sweeparg.threads, "worker threads (default: cores)");

  EntropyArgs entropy;
  CLI::App* entropy_cmd =
      app.add_subcommand("entropy", "Order-2 power sum and Renyi-2 entropy of a family");
  entropy_cmd->add_option("--dist", entropy.dist, "binomial, negbinomial or poisson")->required();
  entropy_cmd->add_option("--n", entropy.n, "family n (default 1)");
  entropy_cmd->add_option("--x", entropy.x, "parameter x as p/q")->required();
  entropy_cmd->add_option("--tol", entropy.tol, "truncation tolerance as p/q (default 1e-12)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*eval_cmd) return run_eval(eval);
    if (*certify_cmd) return run_certify(certify);
    if (*verify_cmd) return run_verify(verify);
    if (*sweep_cmd) return run_sweep(sweeparg);
    if (*entropy_cmd) return run_entropy(entropy);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
