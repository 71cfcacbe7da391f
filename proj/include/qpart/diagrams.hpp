#pragma once

#include <string>
#include <vector>

#include "qpart/error.hpp"
#include "qpart/partitions.hpp"

namespace qpart {

enum class DiagramStyle {
    /// Rows of 2s with an optional trailing 1; every 1 sits in an extreme box.
    /// Row sums give a partition with no repeated odd part.
    OddRestricted,
    /// First column all 1s, interior 2s, extreme boxes may hold a 1.
    /// Row sums give a partition with no repeated even part.
    EvenRestricted,
};

/// A Ferrers shape whose boxes carry the values 1 or 2. Fully validated on
/// construction; conversion back to a partition is then just row sums.
class Diagram {
public:
    Diagram(DiagramStyle style, std::vector<std::vector<int>> rows);

    static Diagram from_partition(const Partition& p, DiagramStyle style);
    Partition to_partition() const;

    DiagramStyle style() const noexcept { return style_; }
    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
    bool empty() const noexcept { return rows_.empty(); }
    int row_count() const noexcept { return static_cast<int>(rows_.size()); }
    int column_count() const noexcept {
        return rows_.empty() ? 0 : static_cast<int>(rows_.front().size());
    }

    /// Grid transpose with each value travelling with its box. OddRestricted only.
    Diagram conjugated() const;

    /// Sum of the values in the rightmost column. Errors on the empty diagram.
    int last_column_sum() const;

    /// One row per line, cells space-separated, no trailing newline.
    std::string render() const;

    bool operator==(const Diagram&) const = default;

private:
    DiagramStyle style_;
    std::vector<std::vector<int>> rows_;
};

std::string style_name(DiagramStyle style);

} // namespace qpart
