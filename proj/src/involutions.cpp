#include "qpart/involutions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace qpart {

namespace {

bool is_consecutive_descending(const std::vector<int>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i] != parts[0] - static_cast<int>(i)) return false;
    return true;
}

bool all_equal(const std::vector<int>& parts) {
    return std::all_of(parts.begin(), parts.end(), [&](int p) { return p == parts[0]; });
}

std::string describe(const Partition& p) { return p.to_string(); }

} // namespace

std::string exceptional_name(ExceptionalKind kind) {
    switch (kind) {
        case ExceptionalKind::Empty: return "empty";
        case ExceptionalKind::PentagonalA: return "pentagonal-a";
        case ExceptionalKind::PentagonalB: return "pentagonal-b";
        case ExceptionalKind::Square: return "square";
        case ExceptionalKind::StaircaseOdd: return "staircase-odd";
        case ExceptionalKind::StaircaseEven: return "staircase-even";
    }
    return "?";
}

std::optional<Exceptional> classify_exceptional(const Partition& p, PairingCase c) {
    const auto& parts = p.parts();
    switch (c) {
        case PairingCase::FranklinDistinct: {
            if (!PartitionFamily::distinct().contains(p))
                throw DomainError("franklin exceptional test requires distinct parts");
            if (parts.empty()) return Exceptional{ExceptionalKind::Empty, 0};
            int r = p.count();
            if (!is_consecutive_descending(parts)) return std::nullopt;
            if (parts[0] == 2 * r - 1) return Exceptional{ExceptionalKind::PentagonalA, r};
            if (parts[0] == 2 * r) return Exceptional{ExceptionalKind::PentagonalB, r};
            return std::nullopt;
        }
        case PairingCase::NeighbourPaths: {
            if (parts.empty()) return Exceptional{ExceptionalKind::Empty, 0};
            if (all_equal(parts) && parts[0] == p.count())
                return Exceptional{ExceptionalKind::Square, parts[0]};
            return std::nullopt;
        }
        case PairingCase::FinalColumn: {
            if (!PartitionFamily::no_repeated_even().contains(p))
                throw DomainError("final-column exceptional test requires no repeated even part");
            if (parts.empty()) return Exceptional{ExceptionalKind::Empty, 0};
            int s = p.count();
            if (!all_equal(parts)) return std::nullopt;
            if (parts[0] == 2 * s - 1) return Exceptional{ExceptionalKind::StaircaseOdd, s};
            if (parts[0] == 2 * s + 1) return Exceptional{ExceptionalKind::StaircaseEven, s};
            return std::nullopt;
        }
    }
    return std::nullopt;
}

Partition franklin(const Partition& p) {
    if (classify_exceptional(p, PairingCase::FranklinDistinct))
        throw DomainError("franklin is undefined on exceptional partitions");
    std::vector<int> parts = p.parts();
    int n = static_cast<int>(parts.size());
    int s = parts.back();
    int t = 1;
    while (t < n && parts[static_cast<std::size_t>(t)] == parts[0] - t) ++t;
    if (s <= t) {
        parts.pop_back();
        if (s > static_cast<int>(parts.size()))
            throw DomainError("franklin move would leave too few parts");
        for (int i = 0; i < s; ++i) ++parts[static_cast<std::size_t>(i)];
    } else {
        for (int i = 0; i < t; ++i) --parts[static_cast<std::size_t>(i)];
        parts.push_back(t);
    }
    Partition result(std::move(parts));
    if (!PartitionFamily::distinct().contains(result))
        throw DomainError("franklin move produced a repeated part");
    return result;
}

Partition sigma_odd(const Partition& p) {
    return Diagram::from_partition(p, DiagramStyle::OddRestricted).conjugated().to_partition();
}

namespace {

int largest_multiplicity(const Partition& p) { return p.count_of(p.largest()); }

void require_path_vertex(const Partition& p) {
    if (classify_exceptional(p, PairingCase::NeighbourPaths))
        throw DomainError("neighbour moves are undefined on exceptional partitions");
}

} // namespace

bool has_right_neighbour(const Partition& p) {
    if (classify_exceptional(p, PairingCase::NeighbourPaths)) return false;
    return p.smallest() <= largest_multiplicity(p);
}

bool has_left_neighbour(const Partition& p) {
    if (classify_exceptional(p, PairingCase::NeighbourPaths)) return false;
    return p.smallest() >= largest_multiplicity(p);
}

Partition right_neighbour(const Partition& p) {
    require_path_vertex(p);
    int s = p.smallest();
    if (s > largest_multiplicity(p))
        throw DomainError("right neighbour requires smallest part <= multiplicity of largest");
    std::vector<int> parts = p.parts();
    parts.pop_back();
    if (s > static_cast<int>(parts.size()))
        throw DomainError("right neighbour move would leave too few parts");
    for (int i = 0; i < s; ++i) ++parts[static_cast<std::size_t>(i)];
    return Partition(std::move(parts));
}

Partition left_neighbour(const Partition& p) {
    require_path_vertex(p);
    int sp = largest_multiplicity(p);
    if (p.smallest() < sp)
        throw DomainError("left neighbour requires smallest part >= multiplicity of largest");
    std::vector<int> parts = p.parts();
    for (int i = 0; i < sp; ++i) {
        if (--parts[static_cast<std::size_t>(i)] < 1)
            throw DomainError("left neighbour move emptied a part");
    }
    parts.insert(std::upper_bound(parts.begin(), parts.end(), sp, std::greater<int>()), sp);
    return Partition(std::move(parts));
}

std::vector<Partition> neighbour_path(const Partition& p) {
    require_path_vertex(p);
    Partition cur = p;
    int guard = cur.total() + 2;
    while (has_left_neighbour(cur)) {
        if (--guard < 0) throw DomainError("neighbour path did not terminate walking left");
        Partition next = left_neighbour(cur);
        require_path_vertex(next);
        cur = next;
    }
    std::vector<Partition> path{cur};
    guard = cur.total() + 2;
    while (has_right_neighbour(path.back())) {
        if (--guard < 0) throw DomainError("neighbour path did not terminate walking right");
        Partition next = right_neighbour(path.back());
        require_path_vertex(next);
        path.push_back(next);
    }
    if (std::find(path.begin(), path.end(), p) == path.end())
        throw DomainError("neighbour path does not pass through its seed");
    return path;
}

Partition sigma_even(const Partition& p) {
    if (classify_exceptional(p, PairingCase::FinalColumn))
        throw DomainError("sigma_even is undefined on exceptional partitions");
    Diagram d = Diagram::from_partition(p, DiagramStyle::EvenRestricted);
    int s = p.smallest();
    int s2 = d.last_column_sum();
    auto rows = d.rows();
    if (s < s2 || (s == s2 && s % 2 == 0)) {
        // delete the last part, append a final column of sum s
        rows.pop_back();
        int cells = (s + 1) / 2;
        std::size_t width = rows.empty() ? 0 : rows.front().size();
        if (cells > static_cast<int>(rows.size()))
            throw DomainError("sigma_even column move does not fit the diagram");
        for (int i = 0; i < cells; ++i) {
            auto& row = rows[static_cast<std::size_t>(i)];
            if (row.size() != width)
                throw DomainError("sigma_even column move does not fit the diagram");
            row.push_back(s % 2 == 1 && i + 1 == cells ? 1 : 2);
        }
    } else {
        // delete the final column, append a last row of sum s''
        std::size_t width = rows.front().size();
        for (auto& row : rows)
            if (row.size() == width) row.pop_back();
        std::erase_if(rows, [](const std::vector<int>& r) { return r.empty(); });
        auto new_row =
            Diagram::from_partition(Partition({s2}), DiagramStyle::EvenRestricted).rows().front();
        rows.push_back(new_row);
    }
    return Diagram(DiagramStyle::EvenRestricted, std::move(rows)).to_partition();
}

namespace {

constexpr std::size_t kMaxViolations = 20;

void report_violation(SweepReport& rep, const std::string& msg) {
    if (rep.violations.size() < kMaxViolations) rep.violations.push_back(msg);
    else if (rep.violations.size() == kMaxViolations) rep.violations.push_back("...");
}

std::int64_t pow2(int d) { return static_cast<std::int64_t>(1) << d; }
std::int64_t sign_of(int n) { return n % 2 == 0 ? 1 : -1; }

} // namespace

std::string SweepReport::to_text() const {
    std::ostringstream out;
    out << "involution " << involution << ", N <= " << max_n << ": " << checked
        << " partitions checked, " << violations.size() << " violations";
    for (const auto& v : violations) out << "\n  violation: " << v;
    for (const auto& s : samples) out << "\n  " << s;
    return out.str();
}

SweepReport sweep_franklin(int max_n, unsigned seed) {
    SweepReport rep{"franklin", max_n, 0, {}, {}};
    int sample_n = max_n > 0 ? static_cast<int>(seed % static_cast<unsigned>(max_n + 1)) : 0;
    for (int n = 0; n <= max_n; ++n) {
        for (const auto& lam : enumerate_partitions(n, PartitionFamily::distinct())) {
            ++rep.checked;
            try {
                auto exc = classify_exceptional(lam, PairingCase::FranklinDistinct);
                if (exc) continue;
                Partition mu = franklin(lam);
                if (mu.total() != n)
                    report_violation(rep, "franklin changed N at " + describe(lam));
                if (mu.largest() + mu.count() != lam.largest() + lam.count())
                    report_violation(rep, "franklin changed λ1+n at " + describe(lam));
                if ((mu.count() + lam.count()) % 2 == 0)
                    report_violation(rep, "franklin kept the sign at " + describe(lam));
                if (classify_exceptional(mu, PairingCase::FranklinDistinct))
                    report_violation(rep, "franklin image exceptional at " + describe(lam));
                if (franklin(mu) != lam)
                    report_violation(rep, "franklin not involutive at " + describe(lam));
                if (n == sample_n && rep.samples.empty())
                    rep.samples.push_back("sample pair: " + describe(lam) + " <-> " + describe(mu));
            } catch (const std::exception& e) {
                report_violation(rep, describe(lam) + ": " + e.what());
            }
        }
    }
    return rep;
}

SweepReport sweep_sigma_odd(int max_n, unsigned seed) {
    SweepReport rep{"sigma-odd", max_n, 0, {}, {}};
    int sample_n = max_n > 0 ? static_cast<int>(seed % static_cast<unsigned>(max_n + 1)) : 0;
    for (int n = 0; n <= max_n; ++n) {
        for (const auto& lam : enumerate_partitions(n, PartitionFamily::no_repeated_odd())) {
            ++rep.checked;
            try {
                Partition mu = sigma_odd(lam);
                if (mu.total() != n)
                    report_violation(rep, "sigma-odd changed N at " + describe(lam));
                if (mu.odd_count() != lam.odd_count())
                    report_violation(rep, "sigma-odd changed the odd-part count at " + describe(lam));
                if (mu.count() != (lam.largest() + 1) / 2 ||
                    (mu.largest() + 1) / 2 != lam.count())
                    report_violation(rep, "sigma-odd did not swap n and ⌈λ1/2⌉ at " + describe(lam));
                if (sigma_odd(mu) != lam)
                    report_violation(rep, "sigma-odd not involutive at " + describe(lam));
                if (n == sample_n && rep.samples.empty() && !lam.empty())
                    rep.samples.push_back("sample pair: " + describe(lam) + " <-> " + describe(mu));
            } catch (const std::exception& e) {
                report_violation(rep, describe(lam) + ": " + e.what());
            }
        }
    }
    return rep;
}

SweepReport sweep_paths(int max_n, unsigned seed) {
    SweepReport rep{"paths", max_n, 0, {}, {}};
    int sample_n = max_n > 0 ? static_cast<int>(seed % static_cast<unsigned>(max_n + 1)) : 0;
    long long path_count = 0;
    for (int n = 0; n <= max_n; ++n) {
        std::vector<Partition> vertices;
        for (const auto& lam : enumerate_partitions(n, PartitionFamily::all()))
            if (!classify_exceptional(lam, PairingCase::NeighbourPaths)) vertices.push_back(lam);
        rep.checked += static_cast<long long>(vertices.size());

        std::map<Partition, std::vector<Partition>> nbrs;
        for (const auto& lam : vertices) {
            auto& out = nbrs[lam];
            try {
                if (has_right_neighbour(lam)) out.push_back(right_neighbour(lam));
                if (has_left_neighbour(lam)) out.push_back(left_neighbour(lam));
            } catch (const std::exception& e) {
                report_violation(rep, describe(lam) + ": " + e.what());
            }
            if (out.empty() || out.size() > 2)
                report_violation(rep, "degree not 1 or 2 at " + describe(lam));
        }
        // symmetry of the neighbour relation
        for (const auto& [lam, out] : nbrs) {
            for (const auto& mu : out) {
                auto it = nbrs.find(mu);
                if (it == nbrs.end())
                    report_violation(rep, "neighbour left the graph at " + describe(lam));
                else if (std::find(it->second.begin(), it->second.end(), lam) == it->second.end())
                    report_violation(rep, "asymmetric neighbour pair " + describe(lam) + " / " +
                                              describe(mu));
            }
        }
        // the paths partition the vertex set
        std::map<Partition, int> seen;
        for (const auto& lam : vertices) {
            if (seen.count(lam)) continue;
            std::vector<Partition> path;
            try {
                path = neighbour_path(lam);
            } catch (const std::exception& e) {
                report_violation(rep, describe(lam) + ": " + e.what());
                seen[lam] = 1;
                continue;
            }
            ++path_count;
            if (path.size() < 2)
                report_violation(rep, "path with fewer than 2 vertices through " + describe(lam));
            std::int64_t signed_sum = 0, weighted_sum = 0;
            for (std::size_t i = 0; i < path.size(); ++i) {
                const auto& v = path[i];
                if (++seen[v] > 1)
                    report_violation(rep, "vertex on two paths: " + describe(v));
                if (v.total() != n || v.largest() + v.count() != path[0].largest() + path[0].count())
                    report_violation(rep, "invariant drifted along the path through " + describe(lam));
                if (i > 0 && (path[i - 1].count() + v.count()) % 2 == 0)
                    report_violation(rep, "sign failed to alternate along the path through " +
                                              describe(lam));
                bool endpoint = i == 0 || i + 1 == path.size();
                int expect_d = path[0].distinct_count() + (endpoint ? 0 : 1);
                if (v.distinct_count() != expect_d)
                    report_violation(rep, "distinct-part pattern broken on the path through " +
                                              describe(lam));
                std::int64_t w = checked_mul(sign_of(v.count()), pow2(v.distinct_count()));
                signed_sum = checked_add(signed_sum, w);
                weighted_sum = checked_add(
                    weighted_sum, checked_mul(w, static_cast<std::int64_t>(v.largest() + v.count())));
            }
            if (signed_sum != 0 || weighted_sum != 0)
                report_violation(rep, "signed path sums nonzero through " + describe(lam));
            if (n == sample_n && rep.samples.empty()) {
                std::string s = "sample path:";
                for (const auto& v : path) s += " " + describe(v);
                rep.samples.push_back(s);
            }
        }
        for (const auto& lam : vertices)
            if (!seen.count(lam))
                report_violation(rep, "vertex on no path: " + describe(lam));
    }
    rep.samples.push_back("paths found: " + std::to_string(path_count));
    return rep;
}

SweepReport sweep_sigma_even(int max_n, unsigned seed) {
    SweepReport rep{"sigma-even", max_n, 0, {}, {}};
    int sample_n = max_n > 0 ? static_cast<int>(seed % static_cast<unsigned>(max_n + 1)) : 0;
    for (int n = 0; n <= max_n; ++n) {
        for (const auto& lam : enumerate_partitions(n, PartitionFamily::no_repeated_even())) {
            ++rep.checked;
            try {
                if (classify_exceptional(lam, PairingCase::FinalColumn)) continue;
                Partition mu = sigma_even(lam);
                if (!PartitionFamily::no_repeated_even().contains(mu))
                    report_violation(rep, "sigma-even left the family at " + describe(lam));
                if (mu.total() != n)
                    report_violation(rep, "sigma-even changed N at " + describe(lam));
                if (mu.largest() / 2 + mu.count() != lam.largest() / 2 + lam.count())
                    report_violation(rep, "sigma-even changed ⌊λ1/2⌋+n at " + describe(lam));
                if ((mu.count() + lam.count()) % 2 == 0)
                    report_violation(rep, "sigma-even kept (-1)^n at " + describe(lam));
                if ((mu.even_count() + lam.even_count()) % 2 == 0)
                    report_violation(rep, "sigma-even kept (-1)^{n^e} at " + describe(lam));
                if (classify_exceptional(mu, PairingCase::FinalColumn))
                    report_violation(rep, "sigma-even image exceptional at " + describe(lam));
                if (sigma_even(mu) != lam)
                    report_violation(rep, "sigma-even not involutive at " + describe(lam));
                if (n == sample_n && rep.samples.empty())
                    rep.samples.push_back("sample pair: " + describe(lam) + " <-> " + describe(mu));
            } catch (const std::exception& e) {
                report_violation(rep, describe(lam) + ": " + e.what());
            }
        }
    }
    return rep;
}

} // namespace qpart
