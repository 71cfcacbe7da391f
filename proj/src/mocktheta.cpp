#include "qpart/mocktheta.hpp"

#include <iomanip>
#include <sstream>

namespace qpart {

namespace {

TruncatedSeries one_plus_q(int k, int order) {
    return TruncatedSeries::one(order) + TruncatedSeries::monomial(1, k, order);
}

CaseSpec mock_case(int /*order*/) {
    CaseSpec spec;
    spec.id = CaseId::I; // unused tag
    spec.factor = [](int j, int order) { return one_plus_q(j, order); };
    spec.factor_valuation = [](int j) { return j; };
    return spec;
}

} // namespace

TruncatedSeries rank_sum_series(int order) {
    return weighted_gf(PartitionFamily::distinct(),
                       [](const Partition& p) {
                           // rank is non-negative on distinct parts
                           return static_cast<std::int64_t>((p.rank() + 1) / 2);
                       },
                       order);
}

TruncatedSeries one_repeat_series(int order) {
    return weighted_gf(PartitionFamily::exactly_one_repeated(),
                       [](const Partition&) { return std::int64_t{1}; }, order);
}

TruncatedSeries distinct_sign_rank_series(int order) {
    return weighted_gf(PartitionFamily::distinct(),
                       [](const Partition& p) { return sign_pow(p.rank()); }, order);
}

TruncatedSeries staircase_ratio_sum(int order) {
    // n = 0 contributes 1; the n-th term has valuation n(n+1)/2
    return TruncatedSeries::one(order) +
           sum_converging(
               [order](int n) {
                   TruncatedSeries t = TruncatedSeries::one(order);
                   for (int j = 1; j <= n; ++j)
                       t *= TruncatedSeries::monomial(1, j, order) *
                            one_plus_q(j, order).inverted_unit();
                   return t;
               },
               [](int n) { return n * (n + 1) / 2; }, order);
}

VerificationReport verify_identity9(int order) {
    CaseSpec spec = mock_case(order);
    TruncatedSeries tail2 = lhs_tail_sum(spec, order).scaled(2);
    TruncatedSeries lemma2 = lhs_lemma_form(spec, order).scaled(2);
    TruncatedSeries comb_lhs2 =
        weighted_gf(PartitionFamily::distinct(),
                    [](const Partition& p) { return p.largest(); }, order)
            .scaled(2);

    TruncatedSeries prod = product_converging(
        [order](int j) { return one_plus_q(j, order); }, [](int j) { return j; }, order);
    TruncatedSeries divisor_sum = sum_converging(
        [order](int d) { return TruncatedSeries::geometric(d, order); },
        [](int d) { return d; }, order);
    TruncatedSeries series_rhs2 =
        prod * (divisor_sum.scaled(2) - TruncatedSeries::one(order)) + staircase_ratio_sum(order);

    // ∏(1+q^j)·Σ q^d/(1-q^d) = Σ_D n q^N + 2 Σ_{D_(1)} q^N
    TruncatedSeries comb_rhs2 =
        weighted_gf(PartitionFamily::distinct(),
                    [](const Partition& p) { return p.count(); }, order)
            .scaled(2) +
        one_repeat_series(order).scaled(4) -
        weighted_gf(PartitionFamily::distinct(), [](const Partition&) { return std::int64_t{1}; },
                    order) +
        distinct_sign_rank_series(order);

    return compare_routes("mock9", {"tail", "lemma", "comb-lhs", "series-rhs", "comb-rhs"},
                          {tail2, lemma2, comb_lhs2, series_rhs2, comb_rhs2});
}

VerificationReport verify_rank_identity(int order) {
    return compare_routes("rank", {"rank-sum", "one-repeat"},
                          {rank_sum_series(order), one_repeat_series(order)});
}

std::int64_t RankCatalog::rank_total() const {
    std::int64_t total = 0;
    for (const auto& e : rank_side) total = checked_add(total, e.multiplicity);
    return total;
}

RankCatalog make_catalog(int n) {
    if (n < 1) throw DomainError("catalog requires n >= 1");
    RankCatalog cat;
    cat.n = n;
    for (const auto& p : enumerate_partitions(n, PartitionFamily::distinct())) {
        int r = p.rank();
        std::int64_t m = (r + 1) / 2;
        if (m > 0) cat.rank_side.push_back({p, r, m});
    }
    cat.repeat_side = enumerate_partitions(n, PartitionFamily::exactly_one_repeated());
    return cat;
}

std::string RankCatalog::to_text() const {
    std::ostringstream out;
    out << "distinct-part partitions of " << n << " with positive half-rank:\n";
    out << std::left << std::setw(18) << "λ" << std::setw(8) << "r" << "⌈r/2⌉\n";
    for (const auto& e : rank_side)
        out << std::left << std::setw(16) << e.partition.to_string() << std::setw(8) << e.rank
            << e.multiplicity << "\n";
    out << "half-rank total: " << rank_total() << "\n";
    out << "partitions of " << n << " with exactly one repeated part ("
        << repeat_side.size() << "):\n";
    for (std::size_t i = 0; i < repeat_side.size(); ++i)
        out << (i ? ", " : "  ") << repeat_side[i].to_string();
    if (!repeat_side.empty()) out << "\n";
    return out.str();
}

} // namespace qpart
