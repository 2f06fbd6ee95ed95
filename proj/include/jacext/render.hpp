#pragma once

// Serialization for the CLI: JSON documents, plus CSV and markdown views of
// the two ranked tables. Any integer that can outgrow binary64-safe range
// (counts, coefficients, q itself) travels as a decimal string; small
// structural numbers (exponents, ranks, row counts) stay plain JSON numbers.

#include <string>

#include <json.hpp>

#include "jacext/curve_oracle.hpp"
#include "jacext/extremal.hpp"
#include "jacext/surface_enum.hpp"

namespace jacext {

enum class OutputFormat { Json, Csv, Markdown };

// "json" | "csv" | "markdown"; anything else is a usage error.
OutputFormat parse_output_format(const std::string& name);

std::string decimal_string(const Integer& v);

std::string to_string(Ordering o);       // "less" | "equal" | "greater"
std::string to_string(Realizability r);  // "yes" | "no" | "unknown"

// {"q", "p", "e", "m"}
nlohmann::json prime_power_json(const PrimePower& pp);
nlohmann::json special_verdict_json(const SpecialVerdict& v);
nlohmann::json extremal_report_json(const ExtremalReport& r);

// [{"rank", "a1", "a2", "count", "type"}, ...] in table order.
nlohmann::json ranked_table_json(const RankedTable& table);

// "table,rank,a1,a2,count,type" rows for both tables (type quoted; it contains
// commas), then a trailing "dominance,<ok|violated>" line.
std::string ranked_tables_csv(const RankedTable& t1, const RankedTable& t2, bool dominance_ok);
std::string ranked_tables_markdown(const PrimePower& pp, const RankedTable& t1,
                                   const RankedTable& t2, bool dominance_ok);

nlohmann::json census_row_json(const CensusRow& row);
nlohmann::json extrema_json(const EmpiricalExtrema& extrema);

}  // namespace jacext
