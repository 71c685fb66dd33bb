#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hconvex/bounds.hpp"
#include "hconvex/constants.hpp"
#include "hconvex/convexity.hpp"
#include "hconvex/means.hpp"
#include "hconvex/sweep.hpp"
#include "report.hpp"

namespace hconvex::cli {

namespace {

using nlohmann::json;

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

std::optional<double> real_opt(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return parse_real(s);
}

double real_req(const std::string& s, const char* flag) {
  if (s.empty()) throw CLI::RequiredError(std::string("--") + flag);
  return parse_real(s);
}

std::vector<double> real_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(parse_real(item));
  }
  return out;
}

struct Output {
  std::string path;
  std::string format = "json";
};

void add_output_flags(CLI::App* cmd, Output& o) {
  cmd->add_option("--out", o.path, "Write a machine-readable report to this file");
  cmd->add_option("--format", o.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}));
}

void add_string_options(CLI::App* cmd,
                        std::initializer_list<std::pair<const char*, std::string*>> opts) {
  for (auto [flag, dst] : opts) cmd->add_option(flag, *dst);
}

void print_verdicts(std::ostream& out, const std::vector<BoundVerdict>& vs) {
  out << std::left << std::setw(20) << "check" << std::setw(22) << "lhs"
      << std::setw(22) << "rhs" << std::setw(22) << "slack" << "status\n";
  for (const BoundVerdict& v : vs) {
    std::string status(to_string(v.status));
    std::transform(status.begin(), status.end(), status.begin(), ::toupper);
    out << std::left << std::setw(20) << v.theorem << std::setw(22) << fmt(v.lhs)
        << std::setw(22) << fmt(v.rhs) << std::setw(22) << fmt(v.slack) << status
        << '\n';
    if (!v.note.empty()) out << "  note: " << v.note << '\n';
  }
}

void emit(const Output& o, std::ostream& out, const std::vector<OutputRecord>& rows,
          const json& extra = json::object()) {
  if (o.path.empty()) {
    if (o.format == "csv") write_verdicts_csv(out, rows);
    return;
  }
  std::ofstream file(o.path);
  if (!file) throw ValidationError("cannot open '" + o.path + "' for writing");
  if (o.format == "csv") {
    write_verdicts_csv(file, rows);
  } else {
    json doc = extra;
    doc["records"] = rows;
    file << dump_report(doc);
  }
}

int verdict_exit(const std::vector<BoundVerdict>& vs) {
  for (const BoundVerdict& v : vs) {
    if (v.status == VerdictStatus::fail || v.status == VerdictStatus::error) {
      return kExitFailedVerdict;
    }
  }
  return kExitOk;
}

FunctionSpec function_from_flags(const std::string& fn, const std::string& n,
                                 const std::string& c) {
  if (fn.find(':') != std::string::npos) return catalog_from_string(fn);
  if (fn == "power") return catalog(fn, real_req(n, "n"));
  if (fn == "constant") return catalog(fn, real_req(c, "c"));
  return catalog(fn);
}

ExponentPair holder_from_flags(const std::string& p, const std::string& q) {
  const double qv = real_req(q, "q");
  if (p.empty()) return ExponentPair::holder_from_q(qv);
  return ExponentPair::holder(parse_real(p), qv);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hermite-Hadamard and Simpson bounds for harmonically convex functions",
               "hconvex"};
  app.require_subcommand(1);

  Output o;
  std::string a, b, u, v, lambda, p, q, n, c, fn, thm, set, kind, plist, config;
  int id = 0;
  unsigned threads = 0;
  bool no_precheck = false;

  auto* coeff = app.add_subcommand("coeff", "Evaluate a coefficient set");
  coeff->add_option("--set", set)->required()->check(
      CLI::IsMember({"c123", "c1_holder", "c456", "intro"}));
  add_string_options(coeff, {{"--lambda", &lambda}, {"--p", &p}, {"--q", &q},
                            {"--u", &u}, {"--v", &v}, {"--a", &a}, {"--b", &b}});
  add_output_flags(coeff, o);

  auto* bound = app.add_subcommand("bound", "Evaluate one bound on one function");
  bound->add_option("--thm", thm)->required()->check(
      CLI::IsMember({"13", "14", "15", "22", "23", "24", "classical"}));
  bound->add_option("--fn", fn)->required();
  bound->add_option("--kind", kind, "classical: hh or simpson")
      ->check(CLI::IsMember({"hh", "simpson"}));
  bound->add_flag("--no-precondition-check", no_precheck);
  add_string_options(bound, {{"--a", &a}, {"--b", &b}, {"--lambda", &lambda},
                            {"--p", &p}, {"--q", &q}, {"--n", &n}, {"--c", &c}});
  add_output_flags(bound, o);

  auto* ident = app.add_subcommand("identity", "Residual of the kernel identity");
  ident->add_option("--fn", fn)->required();
  add_string_options(ident, {{"--a", &a}, {"--b", &b}, {"--lambda", &lambda},
                            {"--n", &n}, {"--c", &c}});
  add_output_flags(ident, o);

  auto* means = app.add_subcommand("means", "Special means and their ordering");
  means->add_option("--a", a);
  means->add_option("--b", b);
  means->add_option("--p", plist, "Comma-separated p values for L_p");
  add_output_flags(means, o);

  auto* prop = app.add_subcommand("prop", "Check one special-means proposition");
  prop->add_option("--id", id)->required()->check(CLI::Range(1, 12));
  add_string_options(prop, {{"--a", &a}, {"--b", &b}, {"--lambda", &lambda},
                            {"--p", &p}, {"--q", &q}, {"--n", &n}});
  add_output_flags(prop, o);

  auto* sweep = app.add_subcommand("sweep", "Run a sweep described by a config file");
  sweep->add_option("--config", config)->required();
  sweep->add_option("--threads", threads);
  add_output_flags(sweep, o);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*coeff) {
      CoefficientSet cs;
      if (set == "intro") {
        const double lo = parse_real(!a.empty() ? a : u);
        const double hi = parse_real(!b.empty() ? b : v);
        cs = coefficient_set_intro(Interval::make(lo, hi), real_opt(q));
      } else {
        const LambdaWeight lw = LambdaWeight::make(real_req(lambda, "lambda"));
        const double uu = real_req(u, "u");
        const double vv = real_req(v, "v");
        if (set == "c123") {
          cs = coefficient_set_c123(lw, uu, vv);
        } else if (set == "c1_holder") {
          cs = coefficient_set_c1_holder(lw, real_req(p, "p"), uu, vv);
        } else {
          const ExponentPair e = holder_from_flags(p, q);
          cs = coefficient_set_c456(lw, e.p(), e.q(), uu, vv);
        }
      }
      out << "set: " << cs.origin << '\n';
      for (const auto& [k, val] : cs.values) out << "  " << k << " = " << fmt(val) << '\n';
      emit(o, out, {coefficient_record(cs)});
      return kExitOk;
    }

    if (*bound || *ident) {
      const Interval iv = Interval::make(real_req(a, "a"), real_req(b, "b"));
      const FunctionSpec fs = function_from_flags(fn, n, c);
      BoundOptions opt;
      opt.check_preconditions = !no_precheck;
      std::vector<BoundVerdict> vs;
      if (*ident) {
        vs.push_back(verify_identity(fs, iv, LambdaWeight::make(real_req(lambda, "lambda")), opt));
      } else if (thm == "22") {
        vs.push_back(bound_thm22(fs, iv, LambdaWeight::make(real_req(lambda, "lambda")),
                                 real_req(q, "q"), opt));
      } else if (thm == "23") {
        vs.push_back(bound_thm23(fs, iv, LambdaWeight::make(real_req(lambda, "lambda")),
                                 holder_from_flags(p, q), opt));
      } else if (thm == "24") {
        vs.push_back(bound_thm24(fs, iv, LambdaWeight::make(real_req(lambda, "lambda")),
                                 holder_from_flags(p, q), opt));
      } else if (thm == "14") {
        vs.push_back(bound_thm14(fs, iv, real_req(q, "q"), opt));
      } else if (thm == "15") {
        vs.push_back(bound_thm15(fs, iv, holder_from_flags(p, q), opt));
      } else if (thm == "13") {
        auto [l, r] = verify_hh_harmonic(fs, iv, opt);
        vs = {l, r};
      } else {
        const ClassicalKind k =
            kind == "simpson" ? ClassicalKind::simpson : ClassicalKind::hermite_hadamard;
        vs = verify_classical(fs, iv, k, opt);
      }
      print_verdicts(out, vs);
      std::vector<OutputRecord> rows;
      for (const BoundVerdict& vd : vs) rows.push_back(verdict_record(vd));
      emit(o, out, rows);
      return verdict_exit(vs);
    }

    if (*means) {
      const Interval iv = Interval::make(real_req(a, "a"), real_req(b, "b"));
      const std::vector<double> ps = real_list(plist);
      const MeanSet m = compute_means(iv, ps);
      out << "A = " << fmt(m.A) << "\nG = " << fmt(m.G) << "\nH = " << fmt(m.H)
          << "\nL = " << fmt(m.L) << "\nI = " << fmt(m.I) << '\n';
      for (const auto& [pv, val] : m.Lp) out << "L_" << fmt(pv) << " = " << fmt(val) << '\n';
      const std::vector<BoundVerdict> chain = check_mean_relations(iv, ps);
      print_verdicts(out, chain);
      std::vector<OutputRecord> rows{means_record(iv, m)};
      for (const BoundVerdict& vd : chain) rows.push_back(verdict_record(vd));
      emit(o, out, rows);
      return verdict_exit(chain);
    }

    if (*prop) {
      const Interval iv = Interval::make(real_req(a, "a"), real_req(b, "b"));
      const bool power_mean = (id - 1) % 3 == 0;
      const ExponentPair e = power_mean ? ExponentPair::power_mean(real_req(q, "q"))
                                        : holder_from_flags(p, q);
      const double lw = lambda.empty() ? 0.0 : parse_real(lambda);
      const PropositionResult r =
          check_proposition(id, iv, LambdaWeight::make(lw), e, real_opt(n));
      out << "proposition " << r.id << " (" << r.source << ", " << r.function << ")\n"
          << "  printed lhs " << fmt(r.printed_lhs) << "  direct lhs " << fmt(r.direct_lhs)
          << "\n  printed rhs " << fmt(r.printed_rhs) << "  direct rhs "
          << fmt(r.direct_rhs) << "\n  printed form "
          << (r.printed_form_matches ? "matches" : "DIFFERS") << '\n';
      print_verdicts(out, {r.printed_verdict, r.theorem_verdict});
      std::vector<OutputRecord> rows{proposition_record(r), verdict_record(r.printed_verdict),
                                     verdict_record(r.theorem_verdict)};
      emit(o, out, rows);
      return verdict_exit({r.printed_verdict, r.theorem_verdict});
    }

    // sweep
    std::ifstream in(config);
    if (!in) throw ValidationError("cannot read config '" + config + "'");
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw ValidationError(std::string("config is not valid JSON: ") + e.what());
    }
    std::optional<std::string> cfg_out;
    SweepConfig cfg = sweep_config_from_json(j, &cfg_out);
    if (threads > 0) cfg.threads = threads;
    if (o.path.empty() && cfg_out) o.path = *cfg_out;
    const SweepReport rep = run_sweep(cfg);

    out << std::left << std::setw(22) << "check" << std::setw(8) << "total" << std::setw(8)
        << "pass" << std::setw(8) << "fail" << std::setw(8) << "unmet" << "min slack\n";
    bool failed = false;
    for (const auto& [name, s] : rep.summary) {
      out << std::left << std::setw(22) << name << std::setw(8) << s.total << std::setw(8)
          << s.pass << std::setw(8) << s.fail << std::setw(8) << s.unmet << fmt(s.min_slack)
          << '\n';
      failed = failed || s.fail > 0;
    }
    if (cfg.oracle_checks) out << "oracle max rel err " << fmt(rep.oracle_max_err) << '\n';

    if (!o.path.empty()) {
      std::ofstream file(o.path);
      if (!file) throw ValidationError("cannot open '" + o.path + "' for writing");
      if (o.format == "csv") {
        std::vector<OutputRecord> rows;
        for (const SweepRecord& r : rep.records) rows.push_back(verdict_record(r.verdict, r.case_index));
        write_verdicts_csv(file, rows);
      } else {
        file << dump_report(sweep_report_json(rep));
      }
    }
    return failed ? kExitFailedVerdict : kExitOk;
  } catch (const CLI::RequiredError& e) {
    err << "error: missing required flag " << e.what() << '\n';
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const QuadratureError& e) {
    err << "numeric error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const CoefficientError& e) {
    err << "numeric error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
}

}  // namespace hconvex::cli
