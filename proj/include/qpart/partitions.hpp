#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qpart/error.hpp"
#include "qpart/series.hpp"

namespace qpart {

/// An integer partition: a non-increasing sequence of positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    bool empty() const noexcept { return parts_.empty(); }

    int total() const noexcept;                 // N
    int count() const noexcept { return static_cast<int>(parts_.size()); } // n
    int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
    int smallest() const noexcept { return parts_.empty() ? 0 : parts_.back(); }
    int count_of(int d) const noexcept;         // n(d): multiplicity of the part d
    int distinct_count() const noexcept;        // number of distinct part values
    int odd_count() const noexcept;
    int even_count() const noexcept;
    int rank() const noexcept { return largest() - count(); }

    Partition conjugate() const;

    /// Parts concatenated with multiplicity exponents, e.g. "42²1²"; "∅" when empty.
    std::string to_string() const;

    auto operator<=>(const Partition&) const = default;

    /// Construction bypass for internal enumeration (input already validated).
    static Partition unchecked(std::vector<int> parts);

private:
    std::vector<int> parts_;
};

/// A decidable class of partitions used by the generating-function sums.
class PartitionFamily {
public:
    enum class Kind {
        All,                // P
        Distinct,           // D
        NoRepeatedOdd,      // P^o
        NoRepeatedEven,     // P^e
        ExactlyOneRepeated, // D_(1): exactly one part value has multiplicity >= 2
        DistinctContaining, // D_{d,1}: distinct parts, d among them
        OnlyRepeatIs,       // D_{d,2+}: d repeated (>=2), no other repeats
        CompleteUpTo,       // P_(n): no part > n, every value 1..n present
    };

    static PartitionFamily all() { return {Kind::All, 0}; }
    static PartitionFamily distinct() { return {Kind::Distinct, 0}; }
    static PartitionFamily no_repeated_odd() { return {Kind::NoRepeatedOdd, 0}; }
    static PartitionFamily no_repeated_even() { return {Kind::NoRepeatedEven, 0}; }
    static PartitionFamily exactly_one_repeated() { return {Kind::ExactlyOneRepeated, 0}; }
    static PartitionFamily distinct_containing(int d) { return {Kind::DistinctContaining, d}; }
    static PartitionFamily only_repeat_is(int d) { return {Kind::OnlyRepeatIs, d}; }
    static PartitionFamily complete_up_to(int n) { return {Kind::CompleteUpTo, n}; }

    static std::optional<PartitionFamily> parse(std::string_view name);

    Kind kind() const noexcept { return kind_; }
    int param() const noexcept { return param_; }
    std::string name() const;

    bool contains(const Partition& p) const;

private:
    PartitionFamily(Kind k, int param) : kind_(k), param_(param) {}
    Kind kind_;
    int param_;
};

/// Visits every partition of n in the family exactly once, in
/// reverse-lexicographic order (largest-first parts, (n) first, (1^n) last).
void for_each_partition(int n, const PartitionFamily& family,
                        const std::function<void(const Partition&)>& fn);

std::vector<Partition> enumerate_partitions(int n, const PartitionFamily& family);

/// coeff(m) = sum of weight(λ) over family members with N_λ = m, for m <= order.
TruncatedSeries weighted_gf(const PartitionFamily& family,
                            const std::function<std::int64_t(const Partition&)>& weight,
                            int order);

} // namespace qpart
