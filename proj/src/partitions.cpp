#include "qpart/partitions.hpp"

#include <algorithm>
#include <map>

namespace qpart {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw DomainError("partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw DomainError("partition parts must be non-increasing");
    }
}

Partition Partition::unchecked(std::vector<int> parts) {
    Partition p;
    p.parts_ = std::move(parts);
    return p;
}

int Partition::total() const noexcept {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
}

int Partition::count_of(int d) const noexcept {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), d));
}

int Partition::distinct_count() const noexcept {
    int d = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i)
        if (i == 0 || parts_[i] != parts_[i - 1]) ++d;
    return d;
}

int Partition::odd_count() const noexcept {
    return static_cast<int>(std::count_if(parts_.begin(), parts_.end(),
                                          [](int p) { return p % 2 == 1; }));
}

int Partition::even_count() const noexcept {
    return count() - odd_count();
}

Partition Partition::conjugate() const {
    std::vector<int> conj(static_cast<std::size_t>(largest()), 0);
    for (int p : parts_)
        for (int i = 0; i < p; ++i) ++conj[static_cast<std::size_t>(i)];
    return Partition::unchecked(std::move(conj));
}

namespace {
std::string superscript(int m) {
    static const char* digit[10] = {"⁰", "¹", "²", "³", "⁴",
                                    "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string s;
    for (char c : std::to_string(m)) s += digit[c - '0'];
    return s;
}
} // namespace

std::string Partition::to_string() const {
    if (parts_.empty()) return "∅";
    std::string s;
    std::size_t i = 0;
    while (i < parts_.size()) {
        std::size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        s += std::to_string(parts_[i]);
        if (j - i > 1) s += superscript(static_cast<int>(j - i));
        i = j;
    }
    return s;
}

std::optional<PartitionFamily> PartitionFamily::parse(std::string_view name) {
    auto take_param = [&](std::string_view prefix) -> std::optional<int> {
        if (name.size() <= prefix.size() || name.substr(0, prefix.size()) != prefix)
            return std::nullopt;
        int v = 0;
        for (char c : name.substr(prefix.size())) {
            if (c < '0' || c > '9') return std::nullopt;
            v = v * 10 + (c - '0');
        }
        return v;
    };
    if (name == "all") return all();
    if (name == "distinct") return distinct();
    if (name == "no-repeated-odd") return no_repeated_odd();
    if (name == "no-repeated-even") return no_repeated_even();
    if (name == "one-repeated") return exactly_one_repeated();
    if (auto d = take_param("distinct-containing-")) return distinct_containing(*d);
    if (auto d = take_param("only-repeat-")) return only_repeat_is(*d);
    if (auto n = take_param("complete-up-to-")) return complete_up_to(*n);
    if (name == "complete-up-to-0") return complete_up_to(0);
    return std::nullopt;
}

std::string PartitionFamily::name() const {
    switch (kind_) {
        case Kind::All: return "all";
        case Kind::Distinct: return "distinct";
        case Kind::NoRepeatedOdd: return "no-repeated-odd";
        case Kind::NoRepeatedEven: return "no-repeated-even";
        case Kind::ExactlyOneRepeated: return "one-repeated";
        case Kind::DistinctContaining: return "distinct-containing-" + std::to_string(param_);
        case Kind::OnlyRepeatIs: return "only-repeat-" + std::to_string(param_);
        case Kind::CompleteUpTo: return "complete-up-to-" + std::to_string(param_);
    }
    return "?";
}

bool PartitionFamily::contains(const Partition& p) const {
    const auto& parts = p.parts();
    auto repeated_values = [&] {
        std::vector<int> reps;
        for (std::size_t i = 0; i + 1 < parts.size(); ++i)
            if (parts[i] == parts[i + 1] && (reps.empty() || reps.back() != parts[i]))
                reps.push_back(parts[i]);
        return reps;
    };
    switch (kind_) {
        case Kind::All:
            return true;
        case Kind::Distinct:
            return repeated_values().empty();
        case Kind::NoRepeatedOdd: {
            for (int v : repeated_values())
                if (v % 2 == 1) return false;
            return true;
        }
        case Kind::NoRepeatedEven: {
            for (int v : repeated_values())
                if (v % 2 == 0) return false;
            return true;
        }
        case Kind::ExactlyOneRepeated:
            return repeated_values().size() == 1;
        case Kind::DistinctContaining:
            return repeated_values().empty() && p.count_of(param_) == 1;
        case Kind::OnlyRepeatIs: {
            auto reps = repeated_values();
            return reps.size() == 1 && reps[0] == param_;
        }
        case Kind::CompleteUpTo: {
            if (p.largest() > param_) return false;
            for (int v = 1; v <= param_; ++v)
                if (p.count_of(v) == 0) return false;
            return true;
        }
    }
    return false;
}

namespace {

// Recursive largest-first generation. Choosing candidate parts in descending
// order yields reverse-lexicographic output. Distinctness-style families are
// pruned in the recursion; the rest are filtered at the leaves.
struct Generator {
    PartitionFamily::Kind kind;
    int param;
    const std::function<void(const Partition&)>& fn;
    std::vector<int> buf;

    bool pruned() const {
        switch (kind) {
            case PartitionFamily::Kind::All:
            case PartitionFamily::Kind::Distinct:
            case PartitionFamily::Kind::NoRepeatedOdd:
            case PartitionFamily::Kind::NoRepeatedEven:
            case PartitionFamily::Kind::DistinctContaining:
                return true;
            default:
                return false;
        }
    }

    bool repeat_allowed(int p) const {
        switch (kind) {
            case PartitionFamily::Kind::All: return true;
            case PartitionFamily::Kind::Distinct:
            case PartitionFamily::Kind::DistinctContaining: return false;
            case PartitionFamily::Kind::NoRepeatedOdd: return p % 2 == 0;
            case PartitionFamily::Kind::NoRepeatedEven: return p % 2 == 1;
            default: return true;
        }
    }

    bool leaf_ok(const Partition& p) const {
        if (kind == PartitionFamily::Kind::DistinctContaining)
            return p.count_of(param) == 1;
        return true;
    }

    void gen(int remaining, int max_part) {
        if (remaining == 0) {
            Partition p = Partition::unchecked(buf);
            if (leaf_ok(p)) fn(p);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            bool can_repeat = repeat_allowed(p);
            buf.push_back(p);
            gen(remaining - p, can_repeat ? p : p - 1);
            buf.pop_back();
        }
    }
};

} // namespace

void for_each_partition(int n, const PartitionFamily& family,
                        const std::function<void(const Partition&)>& fn) {
    if (n < 0) throw DomainError("partition size must be non-negative");
    Generator g{family.kind(), family.param(), fn, {}};
    if (g.pruned()) {
        g.gen(n, n);
    } else {
        Generator base{PartitionFamily::Kind::All, 0,
                       [&](const Partition& p) { if (family.contains(p)) fn(p); }, {}};
        base.gen(n, n);
    }
}

std::vector<Partition> enumerate_partitions(int n, const PartitionFamily& family) {
    std::vector<Partition> out;
    for_each_partition(n, family, [&](const Partition& p) { out.push_back(p); });
    return out;
}

TruncatedSeries weighted_gf(const PartitionFamily& family,
                            const std::function<std::int64_t(const Partition&)>& weight,
                            int order) {
    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(order) + 1, 0);
    for (int m = 0; m <= order; ++m) {
        auto& c = coeffs[static_cast<std::size_t>(m)];
        for_each_partition(m, family, [&](const Partition& p) { c = checked_add(c, weight(p)); });
    }
    return TruncatedSeries(order, std::move(coeffs));
}

} // namespace qpart
