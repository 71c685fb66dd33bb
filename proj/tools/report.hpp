#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hconvex/constants.hpp"
#include "hconvex/means.hpp"
#include "hconvex/sweep.hpp"

namespace hconvex::cli {

/// One flat machine-readable row: string keys, scalar values. Non-finite
/// reals are stored as the strings "nan", "inf" and "-inf" so that every
/// record survives a dump/parse cycle unchanged.
using OutputRecord = nlohmann::json;

nlohmann::json encode_real(double v);
double decode_real(const nlohmann::json& j);

OutputRecord verdict_record(const BoundVerdict& v,
                            std::optional<std::size_t> case_index = std::nullopt);
OutputRecord means_record(const Interval& iv, const MeanSet& m);
OutputRecord coefficient_record(const CoefficientSet& c);
OutputRecord proposition_record(const PropositionResult& r);

/// {"records": [...], "summary": {...}, "identity_max_err", "oracle_max_err"}
nlohmann::json sweep_report_json(const SweepReport& rep);

/// Stable text form used for report files.
std::string dump_report(const nlohmann::json& j);

/// Verdict rows as CSV with a fixed column order.
void write_verdicts_csv(std::ostream& os, const std::vector<OutputRecord>& rows);

/// Parses a real from decimal text or a "num/den" fraction such as "1/3".
double parse_real(const std::string& text);

/// Builds a SweepConfig from the JSON config schema:
///   { functions[], intervals{explicit[[a,b]...], sampler{count, a_range,
///     ratio_range}}, lambdas[], exponents[], theorems[], seed,
///     tolerances{quad, ineq, convexity}, out, threads, oracle_checks }
/// exponents entries: a number or {"q": x} is a power-mean q; {"p": x,
/// "q": y} is a Hölder pair. Throws ValidationError on malformed input.
SweepConfig sweep_config_from_json(const nlohmann::json& j,
                                   std::optional<std::string>* out_path = nullptr);

}  // namespace hconvex::cli
