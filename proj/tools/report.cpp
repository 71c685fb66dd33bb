#include "report.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <set>
#include <tuple>

namespace hconvex::cli {

using nlohmann::json;

json encode_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

double decode_real(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    return parse_real(s);
  }
  throw ValidationError("expected a real number, got " + j.dump());
}

OutputRecord verdict_record(const BoundVerdict& v,
                            std::optional<std::size_t> case_index) {
  json r = json::object();
  r["kind"] = "verdict";
  r["theorem"] = v.theorem;
  r["lhs"] = encode_real(v.lhs);
  r["rhs"] = encode_real(v.rhs);
  r["slack"] = encode_real(v.slack);
  r["status"] = std::string(to_string(v.status));
  r["passed"] = v.passed();
  r["a"] = encode_real(v.inputs.a);
  r["b"] = encode_real(v.inputs.b);
  if (v.inputs.lambda) r["lambda"] = encode_real(*v.inputs.lambda);
  if (v.inputs.p) r["p"] = encode_real(*v.inputs.p);
  if (v.inputs.q) r["q"] = encode_real(*v.inputs.q);
  if (!v.inputs.function.empty()) r["function"] = v.inputs.function;
  if (!v.note.empty()) r["note"] = v.note;
  if (case_index) r["case"] = *case_index;
  return r;
}

OutputRecord means_record(const Interval& iv, const MeanSet& m) {
  json r = json::object();
  r["kind"] = "means";
  r["a"] = encode_real(iv.a());
  r["b"] = encode_real(iv.b());
  r["A"] = encode_real(m.A);
  r["G"] = encode_real(m.G);
  r["H"] = encode_real(m.H);
  r["L"] = encode_real(m.L);
  r["I"] = encode_real(m.I);
  for (const auto& [p, v] : m.Lp) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, p);
    r["L_p=" + std::string(buf, res.ptr)] = encode_real(v);
  }
  return r;
}

OutputRecord coefficient_record(const CoefficientSet& c) {
  json r = json::object();
  r["kind"] = "coefficients";
  r["origin"] = c.origin;
  for (const auto& [k, v] : c.values) r[k] = encode_real(v);
  if (c.args.lambda) r["arg_lambda"] = encode_real(*c.args.lambda);
  if (c.args.p) r["arg_p"] = encode_real(*c.args.p);
  if (c.args.q) r["arg_q"] = encode_real(*c.args.q);
  if (c.args.u) r["arg_u"] = encode_real(*c.args.u);
  if (c.args.v) r["arg_v"] = encode_real(*c.args.v);
  return r;
}

OutputRecord proposition_record(const PropositionResult& p) {
  json r = json::object();
  r["kind"] = "proposition";
  r["id"] = p.id;
  r["source"] = p.source;
  r["function"] = p.function;
  r["printed_lhs"] = encode_real(p.printed_lhs);
  r["printed_rhs"] = encode_real(p.printed_rhs);
  r["direct_lhs"] = encode_real(p.direct_lhs);
  r["direct_rhs"] = encode_real(p.direct_rhs);
  r["lhs_delta"] = encode_real(p.lhs_delta);
  r["rhs_delta"] = encode_real(p.rhs_delta);
  r["printed_form_matches"] = p.printed_form_matches;
  r["printed_status"] = std::string(to_string(p.printed_verdict.status));
  r["theorem_status"] = std::string(to_string(p.theorem_verdict.status));
  r["theorem_slack"] = encode_real(p.theorem_verdict.slack);
  return r;
}

json sweep_report_json(const SweepReport& rep) {
  json records = json::array();
  for (const SweepRecord& r : rep.records) {
    records.push_back(verdict_record(r.verdict, r.case_index));
  }
  json summary = json::object();
  for (const auto& [name, s] : rep.summary) {
    summary[name] = {{"total", s.total},   {"pass", s.pass},
                     {"fail", s.fail},     {"unmet", s.unmet},
                     {"errors", s.errors}, {"min_slack", encode_real(s.min_slack)}};
  }
  return json{{"records", std::move(records)},
              {"summary", std::move(summary)},
              {"identity_max_err", encode_real(rep.identity_max_err)},
              {"oracle_max_err", encode_real(rep.oracle_max_err)}};
}

std::string dump_report(const json& j) { return j.dump(2) + "\n"; }

namespace {

std::string csv_cell(const json& j) {
  if (j.is_null()) return "";
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    return quoted + "\"";
  }
  return j.dump();
}

}  // namespace

void write_verdicts_csv(std::ostream& os, const std::vector<OutputRecord>& rows) {
  static const char* kColumns[] = {"case", "theorem", "function", "a",     "b",
                                   "lambda", "p",     "q",        "lhs",   "rhs",
                                   "slack", "status", "note"};
  bool first = true;
  for (const char* c : kColumns) {
    os << (first ? "" : ",") << c;
    first = false;
  }
  os << '\n';
  for (const OutputRecord& r : rows) {
    first = true;
    for (const char* c : kColumns) {
      os << (first ? "" : ",");
      if (r.contains(c)) os << csv_cell(r.at(c));
      first = false;
    }
    os << '\n';
  }
}

double parse_real(const std::string& text) {
  auto parse_plain = [&](std::string_view s) {
    double v = 0.0;
    // from_chars rejects a leading '+', which users type for exponents.
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || s.empty()) {
      throw ValidationError("malformed real number '" + text + "'");
    }
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return parse_plain(text);
  const double num = parse_plain(std::string_view(text).substr(0, slash));
  const double den = parse_plain(std::string_view(text).substr(slash + 1));
  if (den == 0.0) throw ValidationError("zero denominator in '" + text + "'");
  return num / den;
}

namespace {

std::pair<double, double> read_pair(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) {
    throw ValidationError(std::string(what) + " must be a two-element array");
  }
  return {decode_real(j[0]), decode_real(j[1])};
}

}  // namespace

SweepConfig sweep_config_from_json(const json& j,
                                   std::optional<std::string>* out_path) {
  static const std::set<std::string> kKeys = {
      "functions", "intervals", "lambdas", "exponents", "theorems", "seed",
      "tolerances", "out", "threads", "oracle_checks"};
  if (!j.is_object()) throw ValidationError("config must be a JSON object");
  for (const auto& [k, _] : j.items()) {
    if (!kKeys.count(k)) throw ValidationError("unknown config key '" + k + "'");
  }
  try {
    SweepConfig cfg;
    for (const json& f : j.at("functions")) cfg.functions.push_back(f.get<std::string>());

    const json& iv = j.at("intervals");
    if (iv.contains("explicit")) {
      for (const json& p : iv.at("explicit")) cfg.intervals.push_back(read_pair(p, "interval"));
    }
    if (iv.contains("sampler")) {
      const json& s = iv.at("sampler");
      IntervalSampler smp;
      smp.count = s.at("count").get<std::size_t>();
      if (s.contains("a_range")) std::tie(smp.a_lo, smp.a_hi) = read_pair(s.at("a_range"), "a_range");
      if (s.contains("ratio_range")) {
        std::tie(smp.ratio_lo, smp.ratio_hi) = read_pair(s.at("ratio_range"), "ratio_range");
      }
      cfg.sampler = smp;
    }

    if (j.contains("lambdas")) {
      for (const json& l : j.at("lambdas")) cfg.lambdas.push_back(decode_real(l));
    }
    if (j.contains("exponents")) {
      for (const json& e : j.at("exponents")) {
        if (e.is_object() && e.contains("p")) {
          cfg.holder_pairs.emplace_back(decode_real(e.at("p")), decode_real(e.at("q")));
        } else if (e.is_object()) {
          cfg.q_values.push_back(decode_real(e.at("q")));
        } else {
          cfg.q_values.push_back(decode_real(e));
        }
      }
    }
    for (const json& t : j.at("theorems")) cfg.theorems.push_back(t.get<std::string>());
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("tolerances")) {
      const json& t = j.at("tolerances");
      if (t.contains("quad")) cfg.tolerances.quad = decode_real(t.at("quad"));
      if (t.contains("ineq")) cfg.tolerances.ineq = decode_real(t.at("ineq"));
      if (t.contains("convexity")) cfg.tolerances.convexity = decode_real(t.at("convexity"));
    }
    if (j.contains("threads")) cfg.threads = j.at("threads").get<unsigned>();
    if (j.contains("oracle_checks")) cfg.oracle_checks = j.at("oracle_checks").get<bool>();
    if (out_path && j.contains("out")) *out_path = j.at("out").get<std::string>();
    validate(cfg);
    return cfg;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed config: ") + e.what());
  }
}

}  // namespace hconvex::cli
