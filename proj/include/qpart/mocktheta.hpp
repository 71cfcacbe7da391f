#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qpart/identities.hpp"
#include "qpart/partitions.hpp"
#include "qpart/series.hpp"

namespace qpart {

/// Σ_D ⌈(λ1-n)/2⌉ q^N: half-rank weighted distinct-part partitions.
TruncatedSeries rank_sum_series(int order);

/// Σ over partitions with exactly one repeated part value of q^N.
TruncatedSeries one_repeat_series(int order);

/// Σ_D (-1)^{λ1-n} q^N, the conjugate reading of the staircase-ratio sum.
TruncatedSeries distinct_sign_rank_series(int order);

/// Σ_{n>=0} ∏_{j=1..n} q^j/(1+q^j) as a series.
TruncatedSeries staircase_ratio_sum(int order);

/// Verifies the doubled Lost-Notebook identity
///   2 Σ_N [∏(1+q^j) - ∏_N(1+q^j)]
///     = ∏(1+q^j)·[-1 + 2Σ q^d/(1-q^d)] + Σ_n ∏_{j<=n} q^j/(1+q^j)
/// by five routes (tail sum, rearranged sum, enumeration, series right side,
/// enumeration right side).
VerificationReport verify_identity9(int order);

/// Verifies rank_sum_series == one_repeat_series coefficientwise.
VerificationReport verify_rank_identity(int order);

struct CatalogEntry {
    Partition partition;
    int rank = 0;
    std::int64_t multiplicity = 0; // ⌈rank/2⌉
};

/// Paired data for the bijection hunt: the half-rank weighted distinct-part
/// partitions of n against the partitions of n with exactly one repeated part.
struct RankCatalog {
    int n = 0;
    std::vector<CatalogEntry> rank_side;  // entries with multiplicity > 0
    std::vector<Partition> repeat_side;

    std::int64_t rank_total() const;
    std::string to_text() const;
};

RankCatalog make_catalog(int n);

} // namespace qpart
