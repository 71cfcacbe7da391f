#include "qpart.h"

#include <cstdlib>
#include <string>
#include <vector>

#include "qpart/jsonio.hpp"

using nlohmann::json;

struct qpart_result {
    std::string text;
    std::string json_text;
    bool passed = true;
};

namespace {

thread_local std::string g_last_error;

qpart_status fail(qpart_status st, const std::string& msg) {
    g_last_error = msg;
    return st;
}

qpart_status finish(qpart_result** out, std::string text, const json& j, bool passed) {
    auto* r = new qpart_result{std::move(text), j.dump(2), passed};
    *out = r;
    return passed ? QPART_OK : QPART_MISMATCH;
}

template <typename Fn>
qpart_status guarded(qpart_result** out, Fn&& fn) {
    if (out == nullptr) return fail(QPART_ERR_USAGE, "null result pointer");
    *out = nullptr;
    try {
        return fn();
    } catch (const qpart::OverflowError& e) {
        return fail(QPART_ERR_OVERFLOW, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(QPART_ERR_USAGE, e.what());
    } catch (const std::exception& e) {
        return fail(QPART_ERR_INTERNAL, e.what());
    }
}

int order_guard() {
    if (const char* env = std::getenv("QPART_MAX_ORDER")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 200;
}

} // namespace

extern "C" {

int qpart_max_order(void) { return order_guard(); }

qpart_status qpart_verify(const char* case_id, int order, qpart_result** out) {
    return guarded(out, [&]() -> qpart_status {
        if (case_id == nullptr) return fail(QPART_ERR_USAGE, "null case id");
        if (order < 0 || order > order_guard())
            return fail(QPART_ERR_USAGE,
                        "order must be in [0, " + std::to_string(order_guard()) + "]");
        std::string sel = case_id;
        std::vector<qpart::VerificationReport> reports;
        if (sel == "all") {
            for (auto id : qpart::all_cases()) reports.push_back(qpart::verify(id, order));
        } else if (sel == "mock9") {
            reports.push_back(qpart::verify_identity9(order));
        } else if (sel == "rank") {
            reports.push_back(qpart::verify_rank_identity(order));
        } else if (auto id = qpart::parse_case(sel)) {
            reports.push_back(qpart::verify(*id, order));
        } else {
            return fail(QPART_ERR_USAGE, "unknown case selector: " + sel);
        }
        bool all_equal = true;
        std::string text;
        json j = json::array();
        for (const auto& rep : reports) {
            all_equal = all_equal && rep.equal;
            if (!text.empty()) text += "\n";
            text += rep.to_text();
            j.push_back(qpart::report_to_json(rep));
        }
        return finish(out, std::move(text), reports.size() == 1 ? j.front() : j, all_equal);
    });
}

qpart_status qpart_involution(const char* name, int max_n, unsigned seed, qpart_result** out) {
    return guarded(out, [&]() -> qpart_status {
        if (name == nullptr) return fail(QPART_ERR_USAGE, "null involution name");
        if (max_n < 0 || max_n > 60)
            return fail(QPART_ERR_USAGE, "max_n must be in [0, 60]");
        std::string sel = name;
        qpart::SweepReport rep;
        if (sel == "franklin") rep = qpart::sweep_franklin(max_n, seed);
        else if (sel == "sigma-odd") rep = qpart::sweep_sigma_odd(max_n, seed);
        else if (sel == "paths") rep = qpart::sweep_paths(max_n, seed);
        else if (sel == "sigma-even") rep = qpart::sweep_sigma_even(max_n, seed);
        else return fail(QPART_ERR_USAGE, "unknown involution: " + sel);
        return finish(out, rep.to_text(), qpart::sweep_to_json(rep), rep.ok());
    });
}

qpart_status qpart_diagram(const int* parts, int n_parts, const char* style, qpart_result** out) {
    return guarded(out, [&]() -> qpart_status {
        if (style == nullptr || (parts == nullptr && n_parts > 0))
            return fail(QPART_ERR_USAGE, "null argument");
        if (n_parts < 0) return fail(QPART_ERR_USAGE, "negative part count");
        std::string sel = style;
        qpart::DiagramStyle s;
        if (sel == "odd") s = qpart::DiagramStyle::OddRestricted;
        else if (sel == "even") s = qpart::DiagramStyle::EvenRestricted;
        else return fail(QPART_ERR_USAGE, "style must be 'odd' or 'even'");
        qpart::Partition p(std::vector<int>(parts, parts + n_parts));
        qpart::Diagram d = qpart::Diagram::from_partition(p, s);
        return finish(out, d.render(), qpart::diagram_to_json(d), true);
    });
}

qpart_status qpart_catalog(int n, qpart_result** out) {
    return guarded(out, [&]() -> qpart_status {
        if (n < 1 || n > 60) return fail(QPART_ERR_USAGE, "catalog n must be in [1, 60]");
        qpart::RankCatalog cat = qpart::make_catalog(n);
        bool balanced = cat.rank_total() == static_cast<std::int64_t>(cat.repeat_side.size());
        return finish(out, cat.to_text(), qpart::catalog_to_json(cat), balanced);
    });
}

qpart_status qpart_enumerate(int n, const char* family, qpart_result** out) {
    return guarded(out, [&]() -> qpart_status {
        if (family == nullptr) return fail(QPART_ERR_USAGE, "null family");
        if (n < 0 || n > 80) return fail(QPART_ERR_USAGE, "n must be in [0, 80]");
        auto fam = qpart::PartitionFamily::parse(family);
        if (!fam) return fail(QPART_ERR_USAGE, "unknown family: " + std::string(family));
        auto list = qpart::enumerate_partitions(n, *fam);
        std::string text;
        json arr = json::array();
        for (const auto& p : list) {
            if (!text.empty()) text += "\n";
            text += p.to_string();
            arr.push_back(qpart::partition_to_json(p));
        }
        json j{{"n", n}, {"family", fam->name()}, {"count", list.size()}, {"partitions", arr}};
        return finish(out, std::move(text), j, true);
    });
}

const char* qpart_result_text(const qpart_result* r) { return r ? r->text.c_str() : ""; }
const char* qpart_result_json(const qpart_result* r) { return r ? r->json_text.c_str() : ""; }
int qpart_result_passed(const qpart_result* r) { return r && r->passed ? 1 : 0; }
void qpart_result_free(qpart_result* r) { delete r; }
const char* qpart_last_error(void) { return g_last_error.c_str(); }

} // extern "C"
