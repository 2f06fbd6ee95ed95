#include "jacext/render.hpp"

#include <sstream>
#include <stdexcept>

namespace jacext {

OutputFormat parse_output_format(const std::string& name) {
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "markdown") return OutputFormat::Markdown;
    throw std::domain_error("unknown output format '" + name + "' (expected json, csv or markdown)");
}

std::string decimal_string(const Integer& v) { return v.get_str(); }

std::string to_string(Ordering o) {
    switch (o) {
        case Ordering::Less: return "less";
        case Ordering::Equal: return "equal";
        case Ordering::Greater: return "greater";
    }
    throw std::logic_error("unreachable ordering value");
}

std::string to_string(Realizability r) {
    switch (r) {
        case Realizability::Yes: return "yes";
        case Realizability::No: return "no";
        case Realizability::Unknown: return "unknown";
    }
    throw std::logic_error("unreachable realizability value");
}

nlohmann::json prime_power_json(const PrimePower& pp) {
    return {{"q", decimal_string(pp.q)},
            {"p", decimal_string(pp.p)},
            {"e", pp.e},
            {"m", decimal_string(pp.m)}};
}

nlohmann::json special_verdict_json(const SpecialVerdict& v) {
    nlohmann::json conditions = nlohmann::json::array();
    for (auto c : v.conditions) conditions.push_back(to_string(c));
    return {{"special", v.special},
            {"conditions", conditions},
            {"disc4", decimal_string(v.disc4)}};
}

nlohmann::json extremal_report_json(const ExtremalReport& r) {
    nlohmann::json out{{"value", decimal_string(r.value)},
                       {"branch", r.branch},
                       {"type", r.type},
                       {"thresholds",
                        {{"golden", to_string(r.vs_golden)}, {"sqrt2m1", to_string(r.vs_sqrt2m1)}}}};
    if (r.realizing) {
        out["realizing"] = {{"a1", decimal_string(r.realizing->a1)},
                            {"a2", decimal_string(r.realizing->a2)}};
    }
    if (r.trace) out["trace"] = decimal_string(*r.trace);
    return out;
}

nlohmann::json ranked_table_json(const RankedTable& table) {
    nlohmann::json rows = nlohmann::json::array();
    int rank = 1;
    for (const auto& row : table) {
        rows.push_back({{"rank", rank++},
                        {"a1", decimal_string(row.pair.a1)},
                        {"a2", decimal_string(row.pair.a2)},
                        {"count", decimal_string(row.count)},
                        {"type", row.type}});
    }
    return rows;
}

namespace {

void append_csv_rows(std::ostringstream& out, int which, const RankedTable& table) {
    int rank = 1;
    for (const auto& row : table) {
        out << which << ',' << rank++ << ',' << row.pair.a1 << ',' << row.pair.a2 << ','
            << row.count << ",\"" << row.type << "\"\n";
    }
}

void append_markdown_rows(std::ostringstream& out, const RankedTable& table) {
    out << "| rank | a1 | a2 | count | type |\n";
    out << "| ---: | ---: | ---: | ---: | :--- |\n";
    int rank = 1;
    for (const auto& row : table) {
        out << "| " << rank++ << " | " << row.pair.a1 << " | " << row.pair.a2 << " | "
            << row.count << " | " << row.type << " |\n";
    }
}

}  // namespace

std::string ranked_tables_csv(const RankedTable& t1, const RankedTable& t2, bool dominance_ok) {
    std::ostringstream out;
    out << "table,rank,a1,a2,count,type\n";
    append_csv_rows(out, 1, t1);
    append_csv_rows(out, 2, t2);
    out << "dominance," << (dominance_ok ? "ok" : "violated") << "\n";
    return out.str();
}

std::string ranked_tables_markdown(const PrimePower& pp, const RankedTable& t1,
                                   const RankedTable& t2, bool dominance_ok) {
    std::ostringstream out;
    out << "## point-count maximizers over F_" << pp.q << "\n\n";
    append_markdown_rows(out, t1);
    out << "\n## point-count minimizers over F_" << pp.q << "\n\n";
    append_markdown_rows(out, t2);
    out << "\ndominance: " << (dominance_ok ? "ok" : "violated") << "\n";
    return out.str();
}

nlohmann::json census_row_json(const CensusRow& row) {
    return {{"q", row.q},
            {"h", row.h},
            {"f", row.f},
            {"n1", row.n1},
            {"n2", row.n2},
            {"a1", decimal_string(row.a1)},
            {"a2", decimal_string(row.a2)},
            {"jac", decimal_string(row.jac)}};
}

nlohmann::json extrema_json(const EmpiricalExtrema& extrema) {
    return {{"model_count", extrema.model_count},
            {"max_jac", decimal_string(extrema.max_jac)},
            {"min_jac", decimal_string(extrema.min_jac)},
            {"max_n1", extrema.max_n1},
            {"min_n1", extrema.min_n1},
            {"max_jac_row", census_row_json(extrema.max_jac_row)},
            {"min_jac_row", census_row_json(extrema.min_jac_row)},
            {"max_n1_row", census_row_json(extrema.max_n1_row)},
            {"min_n1_row", census_row_json(extrema.min_n1_row)}};
}

}  // namespace jacext
