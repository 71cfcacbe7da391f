#include "qpart/jsonio.hpp"

namespace qpart {

using nlohmann::json;

json series_to_json(const TruncatedSeries& s) {
    return json{{"order", s.order()}, {"coeffs", s.coeffs()}};
}

TruncatedSeries series_from_json(const json& j) {
    return TruncatedSeries(j.at("order").get<int>(),
                           j.at("coeffs").get<std::vector<std::int64_t>>());
}

json partition_to_json(const Partition& p) { return json{{"parts", p.parts()}}; }

Partition partition_from_json(const json& j) {
    return Partition(j.at("parts").get<std::vector<int>>());
}

json diagram_to_json(const Diagram& d) {
    return json{{"style", style_name(d.style())}, {"rows", d.rows()}};
}

Diagram diagram_from_json(const json& j) {
    auto style = j.at("style").get<std::string>();
    DiagramStyle s;
    if (style == "odd-restricted") s = DiagramStyle::OddRestricted;
    else if (style == "even-restricted") s = DiagramStyle::EvenRestricted;
    else throw DomainError("unknown diagram style: " + style);
    return Diagram(s, j.at("rows").get<std::vector<std::vector<int>>>());
}

json report_to_json(const VerificationReport& r) {
    json j{{"case", r.case_id},
           {"order", r.order},
           {"routes", r.routes},
           {"equal", r.equal}};
    if (!r.g_variant.empty()) j["g_variant"] = r.g_variant;
    if (r.first_mismatch) {
        json values = json::object();
        for (const auto& rv : r.mismatch_values) values[rv.route] = rv.value;
        j["first_mismatch"] = json{{"exponent", *r.first_mismatch}, {"values", values}};
    }
    return j;
}

json sweep_to_json(const SweepReport& r) {
    return json{{"involution", r.involution},
                {"maxN", r.max_n},
                {"checked", r.checked},
                {"violations", r.violations}};
}

json catalog_to_json(const RankCatalog& c) {
    json rank_side = json::array();
    for (const auto& e : c.rank_side)
        rank_side.push_back(json{{"partition", partition_to_json(e.partition)},
                                 {"rank", e.rank},
                                 {"multiplicity", e.multiplicity}});
    json repeat_side = json::array();
    for (const auto& p : c.repeat_side) repeat_side.push_back(partition_to_json(p));
    return json{{"n", c.n},
                {"rank_side", rank_side},
                {"rank_total", c.rank_total()},
                {"repeat_side", repeat_side}};
}

} // namespace qpart
