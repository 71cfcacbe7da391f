#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qpart/error.hpp"

namespace qpart {

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// A formal power series over Z truncated at a fixed order: the coefficients
/// of q^0 .. q^order are retained exactly, everything above is discarded.
/// Values are immutable apart from the compound assignment operators; all
/// arithmetic is exact and overflow-checked. Mixing different orders is an
/// error, never an implicit truncation.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order);
    TruncatedSeries(int order, std::vector<std::int64_t> coeffs);

    static TruncatedSeries zero(int order);
    static TruncatedSeries one(int order);
    static TruncatedSeries monomial(std::int64_t c, int k, int order);
    /// q^d + q^{2d} + q^{3d} + ... = q^d/(1-q^d), truncated.
    static TruncatedSeries geometric(int d, int order);

    int order() const noexcept { return order_; }
    const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }
    std::int64_t coeff(int k) const;

    bool is_zero() const noexcept;
    /// Least exponent with a nonzero coefficient; order()+1 for the zero series.
    int valuation() const noexcept;

    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);
    TruncatedSeries& operator*=(const TruncatedSeries& rhs);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    TruncatedSeries operator-() const;
    TruncatedSeries scaled(std::int64_t c) const;

    /// Multiplicative inverse; requires constant term +1 or -1.
    TruncatedSeries inverted_unit() const;

    bool operator==(const TruncatedSeries&) const = default;
    /// Least exponent where the two series differ, or nullopt when equal.
    static std::optional<int> first_mismatch(const TruncatedSeries& a, const TruncatedSeries& b);

    std::string to_string() const;

private:
    int order_;
    std::vector<std::int64_t> coeffs_;
};

using SeriesFn = std::function<TruncatedSeries(int)>;
using ValuationFn = std::function<int(int)>;

/// Product of factor(1)*factor(2)*... where factor(j) == 1 (mod q^valuation(j))
/// and the valuations are nondecreasing and unbounded. Factors whose valuation
/// exceeds the order are 1 after truncation, so the finite product equals the
/// infinite one mod q^{order+1}. The valuation contract is checked per factor.
TruncatedSeries product_converging(const SeriesFn& factor, const ValuationFn& valuation, int order);

/// Sum of term(1)+term(2)+... where term(d) == 0 (mod q^valuation(d)),
/// valuations nondecreasing and unbounded.
TruncatedSeries sum_converging(const SeriesFn& term, const ValuationFn& valuation, int order);

} // namespace qpart
