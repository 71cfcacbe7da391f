#include "qpart/series.hpp"

#include <algorithm>
#include <sstream>

namespace qpart {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("64-bit coefficient overflow in addition");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("64-bit coefficient overflow in multiplication");
    return r;
}

namespace {
void require_order(int order) {
    if (order < 0) throw SeriesError("series order must be non-negative");
}
void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order())
        throw SeriesError("series order mismatch: " + std::to_string(a.order()) + " vs " +
                          std::to_string(b.order()));
}
} // namespace

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
    require_order(order);
    coeffs_.assign(static_cast<std::size_t>(order) + 1, 0);
}

TruncatedSeries::TruncatedSeries(int order, std::vector<std::int64_t> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
    require_order(order);
    if (coeffs_.size() != static_cast<std::size_t>(order) + 1)
        throw SeriesError("coefficient vector length must be order+1");
}

TruncatedSeries TruncatedSeries::zero(int order) { return TruncatedSeries(order); }

TruncatedSeries TruncatedSeries::one(int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(std::int64_t c, int k, int order) {
    if (k < 0) throw SeriesError("monomial exponent must be non-negative");
    TruncatedSeries s(order);
    if (k <= order) s.coeffs_[static_cast<std::size_t>(k)] = c;
    return s;
}

TruncatedSeries TruncatedSeries::geometric(int d, int order) {
    if (d < 1) throw SeriesError("geometric step must be positive");
    TruncatedSeries s(order);
    for (int k = d; k <= order; k += d) s.coeffs_[static_cast<std::size_t>(k)] = 1;
    return s;
}

std::int64_t TruncatedSeries::coeff(int k) const {
    if (k < 0 || k > order_)
        throw SeriesError("coefficient index " + std::to_string(k) + " out of range [0," +
                          std::to_string(order_) + "]");
    return coeffs_[static_cast<std::size_t>(k)];
}

bool TruncatedSeries::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c == 0; });
}

int TruncatedSeries::valuation() const noexcept {
    for (int k = 0; k <= order_; ++k)
        if (coeffs_[static_cast<std::size_t>(k)] != 0) return k;
    return order_ + 1;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
    require_same_order(*this, rhs);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] = checked_add(coeffs_[k], rhs.coeffs_[k]);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
    require_same_order(*this, rhs);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] = checked_add(coeffs_[k], checked_mul(rhs.coeffs_[k], -1));
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    TruncatedSeries r(a.order());
    for (int i = 0; i <= a.order(); ++i) {
        std::int64_t ai = a.coeffs_[static_cast<std::size_t>(i)];
        if (ai == 0) continue;
        for (int j = 0; i + j <= a.order(); ++j) {
            std::int64_t bj = b.coeffs_[static_cast<std::size_t>(j)];
            if (bj == 0) continue;
            auto& c = r.coeffs_[static_cast<std::size_t>(i + j)];
            c = checked_add(c, checked_mul(ai, bj));
        }
    }
    return r;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& rhs) {
    *this = *this * rhs;
    return *this;
}

TruncatedSeries TruncatedSeries::operator-() const { return scaled(-1); }

TruncatedSeries TruncatedSeries::scaled(std::int64_t c) const {
    TruncatedSeries r(order_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[k] = checked_mul(coeffs_[k], c);
    return r;
}

TruncatedSeries TruncatedSeries::inverted_unit() const {
    std::int64_t c0 = coeffs_[0];
    if (c0 != 1 && c0 != -1)
        throw SeriesError("invert_unit requires constant term +1 or -1, got " + std::to_string(c0));
    // b0 = 1/c0 = c0; b_k = -c0 * sum_{i=1..k} a_i b_{k-i}
    TruncatedSeries b(order_);
    b.coeffs_[0] = c0;
    for (int k = 1; k <= order_; ++k) {
        std::int64_t acc = 0;
        for (int i = 1; i <= k; ++i)
            acc = checked_add(acc, checked_mul(coeffs_[static_cast<std::size_t>(i)],
                                               b.coeffs_[static_cast<std::size_t>(k - i)]));
        b.coeffs_[static_cast<std::size_t>(k)] = checked_mul(-c0, acc);
    }
    return b;
}

std::optional<int> TruncatedSeries::first_mismatch(const TruncatedSeries& a,
                                                   const TruncatedSeries& b) {
    require_same_order(a, b);
    for (int k = 0; k <= a.order(); ++k)
        if (a.coeffs_[static_cast<std::size_t>(k)] != b.coeffs_[static_cast<std::size_t>(k)])
            return k;
    return std::nullopt;
}

std::string TruncatedSeries::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k <= order_; ++k) {
        std::int64_t c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::int64_t a = c < 0 ? -c : c;
        if (a != 1 || k == 0) out << a;
        if (k == 1) out << "q";
        else if (k > 1) out << "q^" << k;
    }
    if (first) out << "0";
    return out.str();
}

namespace {

enum class Mode { Product, Sum };

TruncatedSeries accumulate_converging(const SeriesFn& item, const ValuationFn& valuation,
                                      int order, Mode mode) {
    require_order(order);
    TruncatedSeries acc = mode == Mode::Product ? TruncatedSeries::one(order)
                                                : TruncatedSeries::zero(order);
    int prev_val = 1;
    constexpr int kMaxTerms = 100000;
    for (int j = 1; j <= kMaxTerms; ++j) {
        int v = valuation(j);
        if (v < 1) throw SeriesError("valuation must be positive");
        if (v < prev_val) throw SeriesError("valuation must be nondecreasing");
        prev_val = v;
        if (v > order) return acc;
        TruncatedSeries f = item(j);
        require_same_order(acc, f);
        // contract: item - identity vanishes below its declared valuation
        std::int64_t id0 = mode == Mode::Product ? 1 : 0;
        if (f.coeff(0) != id0)
            throw SeriesError("term " + std::to_string(j) + " violates its valuation contract");
        for (int k = 1; k < v; ++k)
            if (f.coeff(k) != 0)
                throw SeriesError("term " + std::to_string(j) +
                                  " has a nonzero coefficient below its valuation");
        if (mode == Mode::Product) acc *= f;
        else acc += f;
    }
    throw SeriesError("converging accumulation did not terminate (valuation not unbounded?)");
}

} // namespace

TruncatedSeries product_converging(const SeriesFn& factor, const ValuationFn& valuation,
                                   int order) {
    return accumulate_converging(factor, valuation, order, Mode::Product);
}

TruncatedSeries sum_converging(const SeriesFn& term, const ValuationFn& valuation, int order) {
    return accumulate_converging(term, valuation, order, Mode::Sum);
}

} // namespace qpart
