#include "qpart/diagrams.hpp"

#include <numeric>

namespace qpart {

namespace {

void validate(DiagramStyle style, const std::vector<std::vector<int>>& rows) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.empty()) throw DomainError("diagram rows must be non-empty");
        if (r > 0 && rows[r - 1].size() < row.size())
            throw DomainError("diagram row lengths must be non-increasing");
        for (std::size_t c = 0; c < row.size(); ++c) {
            int v = row[c];
            if (v != 1 && v != 2) throw DomainError("diagram cells must be 1 or 2");
            if (v == 2 && style == DiagramStyle::EvenRestricted && c == 0)
                throw DomainError("even-restricted diagram: first column must be all 1s");
            if (v == 1) {
                if (style == DiagramStyle::EvenRestricted && c == 0) continue;
                bool end_of_row = c + 1 == row.size();
                bool bottom_of_column = r + 1 == rows.size() || rows[r + 1].size() <= c;
                if (!end_of_row || !bottom_of_column)
                    throw DomainError("diagram: 1 outside an extreme box");
            }
        }
    }
    // row sums must themselves form a partition
    std::vector<int> sums;
    for (const auto& row : rows) sums.push_back(std::accumulate(row.begin(), row.end(), 0));
    Partition check(sums); // throws if not non-increasing
    (void)check;
}

std::vector<int> row_for_part(int part, DiagramStyle style) {
    std::vector<int> row;
    if (style == DiagramStyle::OddRestricted) {
        // 2k -> k 2s; 2k+1 -> k 2s then a 1
        row.assign(static_cast<std::size_t>(part / 2), 2);
        if (part % 2 == 1) row.push_back(1);
    } else {
        // 2k+1 -> 1 then k 2s; 2k -> 1 then k-1 2s then a 1
        row.push_back(1);
        if (part % 2 == 1) {
            row.insert(row.end(), static_cast<std::size_t>(part / 2), 2);
        } else {
            row.insert(row.end(), static_cast<std::size_t>(part / 2 - 1), 2);
            row.push_back(1);
        }
    }
    return row;
}

} // namespace

Diagram::Diagram(DiagramStyle style, std::vector<std::vector<int>> rows)
    : style_(style), rows_(std::move(rows)) {
    validate(style_, rows_);
}

Diagram Diagram::from_partition(const Partition& p, DiagramStyle style) {
    if (style == DiagramStyle::OddRestricted &&
        !PartitionFamily::no_repeated_odd().contains(p))
        throw DomainError("partition has a repeated odd part");
    if (style == DiagramStyle::EvenRestricted &&
        !PartitionFamily::no_repeated_even().contains(p))
        throw DomainError("partition has a repeated even part");
    std::vector<std::vector<int>> rows;
    for (int part : p.parts()) rows.push_back(row_for_part(part, style));
    return Diagram(style, std::move(rows));
}

Partition Diagram::to_partition() const {
    std::vector<int> sums;
    for (const auto& row : rows_) sums.push_back(std::accumulate(row.begin(), row.end(), 0));
    return Partition(std::move(sums));
}

Diagram Diagram::conjugated() const {
    if (style_ != DiagramStyle::OddRestricted)
        throw DomainError("diagram conjugation is defined for the odd-restricted style");
    std::vector<std::vector<int>> cols(static_cast<std::size_t>(column_count()));
    for (const auto& row : rows_)
        for (std::size_t c = 0; c < row.size(); ++c) cols[c].push_back(row[c]);
    return Diagram(style_, std::move(cols));
}

int Diagram::last_column_sum() const {
    if (rows_.empty()) throw DomainError("last column of an empty diagram");
    std::size_t width = rows_.front().size();
    int sum = 0;
    for (const auto& row : rows_)
        if (row.size() == width) sum += row.back();
    return sum;
}

std::string Diagram::render() const {
    std::string out;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r > 0) out += '\n';
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            if (c > 0) out += ' ';
            out += std::to_string(rows_[r][c]);
        }
    }
    return out;
}

std::string style_name(DiagramStyle style) {
    return style == DiagramStyle::OddRestricted ? "odd-restricted" : "even-restricted";
}

} // namespace qpart
