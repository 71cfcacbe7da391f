#include <doctest.h>

#include "qpart/diagrams.hpp"

using qpart::Diagram;
using qpart::DiagramStyle;
using qpart::DomainError;
using qpart::Partition;
using qpart::PartitionFamily;

namespace {
Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }
using Rows = std::vector<std::vector<int>>;
} // namespace

TEST_CASE("odd-restricted construction from a partition") {
    // 2k -> k twos; 2k+1 -> k twos then a one.
    auto d = Diagram::from_partition(P({8, 7, 5, 4, 4, 3, 2, 2, 2, 1}),
                                     DiagramStyle::OddRestricted);
    Rows expect{{2, 2, 2, 2}, {2, 2, 2, 1}, {2, 2, 1}, {2, 2}, {2, 2},
                {2, 1},       {2},          {2},       {2},    {1}};
    CHECK(d.rows() == expect);
    CHECK(d.to_partition() == P({8, 7, 5, 4, 4, 3, 2, 2, 2, 1}));
    CHECK(d.row_count() == 10);
    CHECK(d.column_count() == 4);
}

TEST_CASE("even-restricted construction from a partition") {
    // First column all ones: 2k+1 -> [1, k twos]; 2k -> [1, k-1 twos, 1].
    auto d = Diagram::from_partition(P({9, 8, 5, 5, 5, 4, 3, 2, 1, 1}),
                                     DiagramStyle::EvenRestricted);
    Rows expect{{1, 2, 2, 2, 2}, {1, 2, 2, 2, 1}, {1, 2, 2}, {1, 2, 2}, {1, 2, 2},
                {1, 2, 1},       {1, 2},          {1, 1},    {1},       {1}};
    CHECK(d.rows() == expect);
    CHECK(d.to_partition() == P({9, 8, 5, 5, 5, 4, 3, 2, 1, 1}));
    CHECK(d.last_column_sum() == 3); // cells 2 and 1 from the two widest rows
}

TEST_CASE("family restriction enforced") {
    CHECK_THROWS_AS(Diagram::from_partition(P({3, 3}), DiagramStyle::OddRestricted),
                    DomainError);
    CHECK_THROWS_AS(Diagram::from_partition(P({4, 4}), DiagramStyle::EvenRestricted),
                    DomainError);
    CHECK_NOTHROW(Diagram::from_partition(P({4, 4}), DiagramStyle::OddRestricted));
    CHECK_NOTHROW(Diagram::from_partition(P({3, 3}), DiagramStyle::EvenRestricted));
}

TEST_CASE("direct construction validates cells") {
    CHECK_THROWS_AS(Diagram(DiagramStyle::OddRestricted, Rows{{3}}), DomainError);
    CHECK_THROWS_AS(Diagram(DiagramStyle::OddRestricted, Rows{{2, 0}}), DomainError);
    // a 1 in a non-extreme box
    CHECK_THROWS_AS(Diagram(DiagramStyle::OddRestricted, Rows{{2, 1, 2}}), DomainError);
    CHECK_THROWS_AS(Diagram(DiagramStyle::OddRestricted, Rows{{2, 1}, {2, 1}}), DomainError);
    // row lengths must not increase
    CHECK_THROWS_AS(Diagram(DiagramStyle::OddRestricted, Rows{{2}, {2, 2}}), DomainError);
    // even style requires a leading 1 in every row
    CHECK_THROWS_AS(Diagram(DiagramStyle::EvenRestricted, Rows{{2, 2}}), DomainError);
    CHECK_NOTHROW(Diagram(DiagramStyle::EvenRestricted, Rows{{1, 2, 1}}));
    CHECK_NOTHROW(Diagram(DiagramStyle::OddRestricted, Rows{}));
}

TEST_CASE("round trip over whole families") {
    for (int n = 0; n <= 22; ++n) {
        for (const auto& p : enumerate_partitions(n, PartitionFamily::no_repeated_odd())) {
            auto d = Diagram::from_partition(p, DiagramStyle::OddRestricted);
            CHECK(d.to_partition() == p);
        }
        for (const auto& p : enumerate_partitions(n, PartitionFamily::no_repeated_even())) {
            auto d = Diagram::from_partition(p, DiagramStyle::EvenRestricted);
            CHECK(d.to_partition() == p);
        }
    }
}

TEST_CASE("conjugation of odd-restricted diagrams") {
    auto p = P({8, 7, 5, 4, 4, 3, 2, 2, 2, 1});
    auto d = Diagram::from_partition(p, DiagramStyle::OddRestricted);
    auto c = d.conjugated();
    CHECK(c.style() == DiagramStyle::OddRestricted);
    CHECK(c.conjugated() == d);
    // values travel with their boxes: transpose of the grid, row sums a partition
    auto pc = c.to_partition();
    CHECK(pc.total() == p.total());
    CHECK(pc.odd_count() == p.odd_count());
    CHECK(pc.count() == (p.largest() + 1) / 2);
    CHECK((pc.largest() + 1) / 2 == p.count());

    for (int n = 0; n <= 20; ++n)
        for (const auto& q : enumerate_partitions(n, PartitionFamily::no_repeated_odd())) {
            auto dq = Diagram::from_partition(q, DiagramStyle::OddRestricted);
            CHECK(dq.conjugated().conjugated() == dq);
            auto qc = dq.conjugated().to_partition();
            CHECK(qc.total() == q.total());
            CHECK(qc.odd_count() == q.odd_count());
            CHECK(qc.count() == (q.largest() + 1) / 2);
        }

    CHECK_THROWS_AS(Diagram::from_partition(P({3}), DiagramStyle::EvenRestricted).conjugated(),
                    DomainError);
}

TEST_CASE("last_column_sum") {
    auto d = Diagram::from_partition(P({8, 7, 5}), DiagramStyle::OddRestricted);
    CHECK(d.last_column_sum() == 3); // 2 + 1 from the two rows of full width
    auto single = Diagram::from_partition(P({1}), DiagramStyle::EvenRestricted);
    CHECK(single.last_column_sum() == 1);
    CHECK_THROWS_AS(Diagram(DiagramStyle::OddRestricted, Rows{}).last_column_sum(),
                    DomainError);
}

TEST_CASE("render") {
    auto d = Diagram::from_partition(P({5, 4}), DiagramStyle::OddRestricted);
    CHECK(d.render() == "2 2 1\n2 2");
    CHECK(Diagram(DiagramStyle::OddRestricted, Rows{}).render() == "");
}

TEST_CASE("style names") {
    CHECK(qpart::style_name(DiagramStyle::OddRestricted) == "odd-restricted");
    CHECK(qpart::style_name(DiagramStyle::EvenRestricted) == "even-restricted");
}
