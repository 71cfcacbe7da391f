// Command-line frontend for the q-series identity verifier. Talks to the
// core exclusively through the C API in qpart.h.
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qpart.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

int emit(qpart_status st, qpart_result* res, const std::string& format) {
    if (res != nullptr) {
        const char* body = format == "json" ? qpart_result_json(res) : qpart_result_text(res);
        std::printf("%s\n", body);
    }
    int code;
    switch (st) {
        case QPART_OK: code = kExitPass; break;
        case QPART_MISMATCH: code = kExitMismatch; break;
        case QPART_ERR_USAGE: code = kExitUsage; break;
        default: code = kExitMismatch; break;
    }
    if (res == nullptr && st != QPART_OK)
        std::fprintf(stderr, "error: %s\n", qpart_last_error());
    qpart_result_free(res);
    return code;
}

std::vector<int> parse_parts(const std::string& literal, bool& ok) {
    std::vector<int> parts;
    ok = true;
    std::size_t pos = 0;
    while (pos < literal.size()) {
        std::size_t comma = literal.find(',', pos);
        std::string tok = literal.substr(pos, comma == std::string::npos ? std::string::npos
                                                                         : comma - pos);
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            parts.push_back(v);
        } catch (const std::exception&) {
            ok = false;
            return {};
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return parts;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verifier for six tail-sum q-series identities and the "
                 "Lost-Notebook rank identity"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    auto* verify = app.add_subcommand("verify", "Verify an identity by independent routes");
    std::string case_id = "all";
    int order = 60;
    verify->add_option("--case", case_id, "i..vi, all, mock9 or rank");
    verify->add_option("--order", order, "Highest q exponent checked");

    auto* involution = app.add_subcommand("involution", "Exhaustive involution property sweep");
    std::string inv_name;
    int max_n = 30;
    unsigned seed = 0;
    involution->add_option("--name", inv_name, "franklin, sigma-odd, paths or sigma-even")
        ->required();
    involution->add_option("--max-n", max_n, "Sweep partitions of 0..max-n");
    involution->add_option("--seed", seed, "Selects the sample orbit shown in the report");

    auto* diagram = app.add_subcommand("diagram", "Render the 2/1 diagram of a partition");
    std::string parts_literal, style = "odd";
    diagram->add_option("--parts", parts_literal, "Comma-separated non-increasing parts")
        ->required();
    diagram->add_option("--style", style, "odd or even")->check(CLI::IsMember({"odd", "even"}));

    auto* catalog = app.add_subcommand("catalog", "Rank identity catalog for partitions of n");
    int catalog_n = 8;
    catalog->add_option("--n", catalog_n, "Partition size");

    auto* enumerate = app.add_subcommand("enumerate", "List partitions of n in a family");
    int enum_n = 0;
    std::string family = "all";
    enumerate->add_option("--n", enum_n, "Partition size")->required();
    enumerate->add_option("--family", family, "Partition family");

    CLI11_PARSE(app, argc, argv);

    // qpart_* must run before emit() reads res, so keep the calls sequenced.
    qpart_result* res = nullptr;
    if (verify->parsed()) {
        qpart_status st = qpart_verify(case_id.c_str(), order, &res);
        return emit(st, res, format);
    }
    if (involution->parsed()) {
        qpart_status st = qpart_involution(inv_name.c_str(), max_n, seed, &res);
        return emit(st, res, format);
    }
    if (diagram->parsed()) {
        bool ok = false;
        std::vector<int> parts = parse_parts(parts_literal, ok);
        if (!ok) {
            std::fprintf(stderr, "error: malformed --parts literal\n");
            return kExitUsage;
        }
        qpart_status st =
            qpart_diagram(parts.data(), static_cast<int>(parts.size()), style.c_str(), &res);
        return emit(st, res, format);
    }
    if (catalog->parsed()) {
        qpart_status st = qpart_catalog(catalog_n, &res);
        return emit(st, res, format);
    }
    if (enumerate->parsed()) {
        qpart_status st = qpart_enumerate(enum_n, family.c_str(), &res);
        return emit(st, res, format);
    }
    return kExitUsage;
}
