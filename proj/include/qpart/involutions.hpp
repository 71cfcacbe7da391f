#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpart/diagrams.hpp"
#include "qpart/partitions.hpp"

namespace qpart {

enum class PairingCase { FranklinDistinct, NeighbourPaths, FinalColumn };

/// Partitions left unpaired by a case's pairing mechanism. Their signed
/// weights produce the correction series of that case.
enum class ExceptionalKind {
    Empty,
    PentagonalA,   // (2r-1, 2r-2, ..., r),     N = r(3r-1)/2
    PentagonalB,   // (2r, 2r-1, ..., r+1),     N = r(3r+1)/2
    Square,        // (r^r),                    N = r^2
    StaircaseOdd,  // ((2s-1)^s),               N = s(2s-1)
    StaircaseEven, // ((2s+1)^s),               N = s(2s+1)
};

struct Exceptional {
    ExceptionalKind kind;
    int index; // r or s; 0 for Empty

    bool operator==(const Exceptional&) const = default;
};

std::string exceptional_name(ExceptionalKind kind);

/// Detects the exceptional forms of the given pairing mechanism. Throws
/// DomainError if the partition is outside the mechanism's family
/// (distinct / all / no repeated even part, respectively).
std::optional<Exceptional> classify_exceptional(const Partition& p, PairingCase c);

/// Franklin's involution on non-exceptional distinct-part partitions.
/// Preserves N and λ1+n, negates (-1)^n.
Partition franklin(const Partition& p);

/// Diagram conjugation on partitions with no repeated odd part. Preserves
/// N and the number of odd parts, exchanges n and ⌈λ1/2⌉.
Partition sigma_odd(const Partition& p);

/// Neighbour moves of the path pairing. Right requires s <= s', left s >= s'
/// (s = smallest part, s' = multiplicity of the largest part); both require a
/// non-exceptional input. They are mutually inverse where both defined.
Partition right_neighbour(const Partition& p);
Partition left_neighbour(const Partition& p);
bool has_right_neighbour(const Partition& p);
bool has_left_neighbour(const Partition& p);

/// The maximal neighbour path through p, ordered left to right.
std::vector<Partition> neighbour_path(const Partition& p);

/// The final-column involution on non-exceptional partitions with no
/// repeated even part. Preserves N and ⌊λ1/2⌋+n, flips (-1)^n and (-1)^{n^e}.
Partition sigma_even(const Partition& p);

/// Result of an exhaustive property sweep over all partitions of 0..max_n.
struct SweepReport {
    std::string involution;
    int max_n = 0;
    long long checked = 0;
    std::vector<std::string> violations;
    std::vector<std::string> samples; // illustrative orbits for the text report

    bool ok() const { return violations.empty(); }
    std::string to_text() const;
};

SweepReport sweep_franklin(int max_n, unsigned seed = 0);
SweepReport sweep_sigma_odd(int max_n, unsigned seed = 0);
SweepReport sweep_paths(int max_n, unsigned seed = 0);
SweepReport sweep_sigma_even(int max_n, unsigned seed = 0);

} // namespace qpart
