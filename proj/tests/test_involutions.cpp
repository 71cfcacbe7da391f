#include <doctest.h>

#include "qpart/involutions.hpp"

using namespace qpart;

namespace {
Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }
} // namespace

TEST_CASE("exceptional classification: distinct-part pairing") {
    auto c = [](const Partition& p) {
        return classify_exceptional(p, PairingCase::FranklinDistinct);
    };
    CHECK(c(P({})) == Exceptional{ExceptionalKind::Empty, 0});
    CHECK(c(P({1})) == Exceptional{ExceptionalKind::PentagonalA, 1});
    CHECK(c(P({2})) == Exceptional{ExceptionalKind::PentagonalB, 1});
    CHECK(c(P({3, 2})) == Exceptional{ExceptionalKind::PentagonalA, 2});
    CHECK(c(P({4, 3})) == Exceptional{ExceptionalKind::PentagonalB, 2});
    CHECK(c(P({5, 4, 3})) == Exceptional{ExceptionalKind::PentagonalA, 3});
    CHECK(!c(P({3})));
    CHECK(!c(P({3, 1})));
    CHECK(!c(P({4, 3, 1})));
    CHECK_THROWS_AS(c(P({3, 3})), DomainError);
}

TEST_CASE("exceptional classification: neighbour paths") {
    auto c = [](const Partition& p) {
        return classify_exceptional(p, PairingCase::NeighbourPaths);
    };
    CHECK(c(P({})) == Exceptional{ExceptionalKind::Empty, 0});
    CHECK(c(P({1})) == Exceptional{ExceptionalKind::Square, 1});
    CHECK(c(P({2, 2})) == Exceptional{ExceptionalKind::Square, 2});
    CHECK(c(P({3, 3, 3})) == Exceptional{ExceptionalKind::Square, 3});
    CHECK(!c(P({2})));
    CHECK(!c(P({2, 1})));
    CHECK(!c(P({3, 3})));
}

TEST_CASE("exceptional classification: final column") {
    auto c = [](const Partition& p) {
        return classify_exceptional(p, PairingCase::FinalColumn);
    };
    CHECK(c(P({})) == Exceptional{ExceptionalKind::Empty, 0});
    CHECK(c(P({1})) == Exceptional{ExceptionalKind::StaircaseOdd, 1});
    CHECK(c(P({3, 3})) == Exceptional{ExceptionalKind::StaircaseOdd, 2});
    CHECK(c(P({5, 5, 5})) == Exceptional{ExceptionalKind::StaircaseOdd, 3});
    CHECK(c(P({3})) == Exceptional{ExceptionalKind::StaircaseEven, 1});
    CHECK(c(P({5, 5})) == Exceptional{ExceptionalKind::StaircaseEven, 2});
    CHECK(c(P({7, 7, 7})) == Exceptional{ExceptionalKind::StaircaseEven, 3});
    CHECK(!c(P({2})));
    CHECK(!c(P({5})));
    CHECK(!c(P({3, 3, 3})));
    CHECK_THROWS_AS(c(P({4, 4})), DomainError);
}

TEST_CASE("franklin on known pairs") {
    CHECK(franklin(P({7, 3, 2})) == P({6, 3, 2, 1}));
    CHECK(franklin(P({6, 3, 2, 1})) == P({7, 3, 2}));
    CHECK(franklin(P({5, 4, 2})) == P({6, 5}));
    CHECK(franklin(P({6, 5})) == P({5, 4, 2}));
    CHECK_THROWS_AS(franklin(P({1})), DomainError);
    CHECK_THROWS_AS(franklin(P({3, 2})), DomainError);
    CHECK_THROWS_AS(franklin(P({2, 2})), DomainError);
}

TEST_CASE("sigma_odd on a known pair") {
    // conjugation swaps n with the ceiling of half the largest part
    auto p = P({8, 7, 5, 4, 4, 3, 2, 2, 2, 1});
    auto q = sigma_odd(p);
    CHECK(q.total() == 38);
    CHECK(q.count() == 4);
    CHECK(sigma_odd(q) == p);
    CHECK_THROWS_AS(sigma_odd(P({3, 3})), DomainError);
}

TEST_CASE("neighbour moves and guards") {
    CHECK(has_right_neighbour(P({6, 6, 4, 3, 2})));
    CHECK(has_left_neighbour(P({6, 6, 4, 3, 2})));
    CHECK(right_neighbour(P({6, 6, 4, 3, 2})) == P({7, 7, 4, 3}));
    CHECK(left_neighbour(P({6, 6, 4, 3, 2})) == P({5, 5, 4, 3, 2, 2}));
    CHECK(!has_right_neighbour(P({7, 7, 4, 3})));       // s=3 > s'=2
    CHECK(!has_left_neighbour(P({4, 4, 4, 3, 2, 2, 2}))); // s=2 < s'=3
    CHECK_THROWS_AS(right_neighbour(P({7, 7, 4, 3})), DomainError);
    CHECK_THROWS_AS(left_neighbour(P({4, 4, 4, 3, 2, 2, 2})), DomainError);
    CHECK_THROWS_AS(right_neighbour(P({2, 2})), DomainError); // exceptional
    CHECK(!has_right_neighbour(P({2, 2})));
    CHECK(!has_left_neighbour(P({1})));

    // mutually inverse where both guards hold
    for (int n = 0; n <= 14; ++n)
        for (const auto& lam : enumerate_partitions(n, PartitionFamily::all())) {
            if (classify_exceptional(lam, PairingCase::NeighbourPaths)) continue;
            if (has_right_neighbour(lam)) CHECK(left_neighbour(right_neighbour(lam)) == lam);
            if (has_left_neighbour(lam)) CHECK(right_neighbour(left_neighbour(lam)) == lam);
        }
}

TEST_CASE("a full neighbour path") {
    std::vector<Partition> expect{P({4, 4, 4, 3, 2, 2, 2}), P({5, 5, 4, 3, 2, 2}),
                                  P({6, 6, 4, 3, 2}), P({7, 7, 4, 3})};
    CHECK(neighbour_path(P({6, 6, 4, 3, 2})) == expect);
    CHECK(neighbour_path(P({4, 4, 4, 3, 2, 2, 2})) == expect);
    CHECK(neighbour_path(P({7, 7, 4, 3})) == expect);
    CHECK_THROWS_AS(neighbour_path(P({3, 3, 3})), DomainError);
}

TEST_CASE("sigma_even on a known pair") {
    CHECK(sigma_even(P({9, 8, 5, 5, 5, 4, 3, 2, 1, 1})) == P({10, 8, 5, 5, 5, 4, 3, 2, 1}));
    CHECK(sigma_even(P({10, 8, 5, 5, 5, 4, 3, 2, 1})) == P({9, 8, 5, 5, 5, 4, 3, 2, 1, 1}));
    CHECK_THROWS_AS(sigma_even(P({3, 3})), DomainError);  // staircase
    CHECK_THROWS_AS(sigma_even(P({4, 4})), DomainError);  // outside the family
}

TEST_CASE("exhaustive sweeps at unit-test scale") {
    auto fr = sweep_franklin(24);
    CHECK_MESSAGE(fr.ok(), fr.to_text());
    CHECK(fr.checked > 0);

    auto so = sweep_sigma_odd(20);
    CHECK_MESSAGE(so.ok(), so.to_text());
    CHECK(so.checked > 0);

    auto pa = sweep_paths(18);
    CHECK_MESSAGE(pa.ok(), pa.to_text());
    CHECK(pa.checked > 0);

    auto se = sweep_sigma_even(20);
    CHECK_MESSAGE(se.ok(), se.to_text());
    CHECK(se.checked > 0);
}

TEST_CASE("sweep report text") {
    auto rep = sweep_franklin(6, 5);
    auto text = rep.to_text();
    CHECK(text.find("franklin") != std::string::npos);
    CHECK(text.find("0 violations") != std::string::npos);
}
