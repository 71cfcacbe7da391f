#include "qpart/identities.hpp"

#include <sstream>

namespace qpart {

std::int64_t sign_pow(int n) { return n % 2 == 0 ? 1 : -1; }

std::int64_t two_pow(int d) {
    if (d < 0 || d > 62) throw OverflowError("2^" + std::to_string(d) + " out of range");
    return static_cast<std::int64_t>(1) << d;
}

std::optional<CaseId> parse_case(std::string_view name) {
    if (name == "i") return CaseId::I;
    if (name == "ii") return CaseId::II;
    if (name == "iii") return CaseId::III;
    if (name == "iv") return CaseId::IV;
    if (name == "v") return CaseId::V;
    if (name == "vi") return CaseId::VI;
    return std::nullopt;
}

std::string case_name(CaseId id) {
    switch (id) {
        case CaseId::I: return "i";
        case CaseId::II: return "ii";
        case CaseId::III: return "iii";
        case CaseId::IV: return "iv";
        case CaseId::V: return "v";
        case CaseId::VI: return "vi";
    }
    return "?";
}

const std::vector<CaseId>& all_cases() {
    static const std::vector<CaseId> cases{CaseId::I,  CaseId::II, CaseId::III,
                                           CaseId::IV, CaseId::V,  CaseId::VI};
    return cases;
}

namespace {

TruncatedSeries one_minus_q(int k, int order) {
    return TruncatedSeries::one(order) - TruncatedSeries::monomial(1, k, order);
}

TruncatedSeries one_plus_q(int k, int order) {
    return TruncatedSeries::one(order) + TruncatedSeries::monomial(1, k, order);
}

std::int64_t ceil_half_largest(const Partition& p) { return (p.largest() + 1) / 2; }
std::int64_t floor_half_largest(const Partition& p) { return p.largest() / 2; }

} // namespace

TruncatedSeries pentagonal_series(int order) {
    TruncatedSeries s = TruncatedSeries::one(order);
    for (int r = 1; r * (3 * r - 1) / 2 <= order; ++r) {
        s += TruncatedSeries::monomial(sign_pow(r), r * (3 * r - 1) / 2, order);
        s += TruncatedSeries::monomial(sign_pow(r), r * (3 * r + 1) / 2, order);
    }
    return s;
}

TruncatedSeries theta_square_series(int order) {
    TruncatedSeries s = TruncatedSeries::one(order);
    for (int r = 1; r * r <= order; ++r)
        s += TruncatedSeries::monomial(2 * sign_pow(r), r * r, order);
    return s;
}

TruncatedSeries theta_triangular_series(int order) {
    TruncatedSeries s(order);
    for (int r = 0; r * (r + 1) / 2 <= order; ++r)
        s += TruncatedSeries::monomial(1, r * (r + 1) / 2, order);
    return s;
}

TruncatedSeries triangular_weighted_series(int order) {
    TruncatedSeries s(order);
    for (int r = 1; r * (r + 1) / 2 <= order; ++r)
        s += TruncatedSeries::monomial(r, r * (r + 1) / 2, order);
    return s;
}

TruncatedSeries g_series(CaseId id, int order) {
    switch (id) {
        case CaseId::I:
        case CaseId::II:
        case CaseId::III:
            return TruncatedSeries::zero(order);
        case CaseId::IV: {
            // Exponents r(3r±1)/2 with sign (-1)^r: the form fixed by the
            // enumeration routes (the printed table and displayed equation
            // each carry only half of it).
            TruncatedSeries s(order);
            for (int r = 1; r * (3 * r - 1) / 2 <= order; ++r) {
                s += TruncatedSeries::monomial(checked_mul(sign_pow(r), 3 * r - 1),
                                               r * (3 * r - 1) / 2, order);
                s += TruncatedSeries::monomial(checked_mul(sign_pow(r), 3 * r),
                                               r * (3 * r + 1) / 2, order);
            }
            return s;
        }
        case CaseId::V: {
            TruncatedSeries s(order);
            for (int r = 1; r * r <= order; ++r)
                s += TruncatedSeries::monomial(checked_mul(4 * sign_pow(r), r), r * r, order);
            return s;
        }
        case CaseId::VI:
            return one_minus_q(1, order) * triangular_weighted_series(order);
    }
    throw DomainError("unknown case");
}

CaseSpec theorem_case(CaseId id) {
    CaseSpec spec;
    spec.id = id;
    switch (id) {
        case CaseId::I:
            spec.factor = [](int j, int order) { return one_minus_q(j, order).inverted_unit(); };
            spec.factor_valuation = [](int j) { return j; };
            spec.summand = [](int d, int order) { return TruncatedSeries::geometric(d, order); };
            spec.summand_valuation = [](int d) { return d; };
            spec.comb_lhs = [](int order) {
                return weighted_gf(PartitionFamily::all(),
                                   [](const Partition& p) { return p.largest(); }, order);
            };
            spec.comb_prod_sum = [](int order) {
                return weighted_gf(PartitionFamily::all(),
                                   [](const Partition& p) { return p.count(); }, order);
            };
            break;
        case CaseId::II:
            spec.factor = [](int j, int order) {
                return one_plus_q(j, order) * one_minus_q(j, order).inverted_unit();
            };
            spec.factor_valuation = [](int j) { return j; };
            spec.summand = [](int d, int order) {
                return (TruncatedSeries::monomial(2, d, order) *
                        one_minus_q(2 * d, order).inverted_unit());
            };
            spec.summand_valuation = [](int d) { return d; };
            spec.comb_lhs = [](int order) {
                return weighted_gf(PartitionFamily::all(),
                                   [](const Partition& p) {
                                       return checked_mul(p.largest(), two_pow(p.distinct_count()));
                                   },
                                   order);
            };
            spec.comb_prod_sum = [](int order) {
                return weighted_gf(PartitionFamily::all(),
                                   [](const Partition& p) {
                                       return checked_mul(p.count(), two_pow(p.distinct_count()));
                                   },
                                   order);
            };
            break;
        case CaseId::III:
            spec.factor = [](int j, int order) {
                return one_minus_q(2 * j - 1, order) * one_minus_q(2 * j, order).inverted_unit();
            };
            spec.factor_valuation = [](int j) { return 2 * j - 1; };
            spec.summand = [](int d, int order) {
                return TruncatedSeries::geometric(d, order).scaled(sign_pow(d));
            };
            spec.summand_valuation = [](int d) { return d; };
            spec.comb_lhs = [](int order) {
                return weighted_gf(PartitionFamily::no_repeated_odd(),
                                   [](const Partition& p) {
                                       return checked_mul(ceil_half_largest(p),
                                                          sign_pow(p.odd_count()));
                                   },
                                   order);
            };
            spec.comb_prod_sum = [](int order) {
                return weighted_gf(PartitionFamily::no_repeated_odd(),
                                   [](const Partition& p) {
                                       return checked_mul(p.count(), sign_pow(p.odd_count()));
                                   },
                                   order);
            };
            break;
        case CaseId::IV:
            spec.factor = [](int j, int order) { return one_minus_q(j, order); };
            spec.factor_valuation = [](int j) { return j; };
            spec.summand = [](int d, int order) { return TruncatedSeries::geometric(d, order); };
            spec.summand_valuation = [](int d) { return d; };
            spec.comb_lhs = [](int order) {
                return weighted_gf(PartitionFamily::distinct(),
                                   [](const Partition& p) {
                                       return checked_mul(p.largest(), sign_pow(p.count()));
                                   },
                                   order);
            };
            // ∏(1-q^j)·Σ q^d/(1-q^d) = -Σ_D n (-1)^n q^N
            spec.comb_prod_sum = [](int order) {
                return weighted_gf(PartitionFamily::distinct(),
                                   [](const Partition& p) {
                                       return checked_mul(-p.count(), sign_pow(p.count()));
                                   },
                                   order);
            };
            break;
        case CaseId::V:
            spec.factor = [](int j, int order) {
                return one_minus_q(j, order) * one_plus_q(j, order).inverted_unit();
            };
            spec.factor_valuation = [](int j) { return j; };
            spec.summand = [](int d, int order) {
                return (TruncatedSeries::monomial(2, d, order) *
                        one_minus_q(2 * d, order).inverted_unit());
            };
            spec.summand_valuation = [](int d) { return d; };
            spec.comb_lhs = [](int order) {
                return weighted_gf(PartitionFamily::all(),
                                   [](const Partition& p) {
                                       return checked_mul(checked_mul(p.largest(),
                                                                      sign_pow(p.count())),
                                                          two_pow(p.distinct_count()));
                                   },
                                   order);
            };
            spec.comb_prod_sum = [](int order) {
                return weighted_gf(PartitionFamily::all(),
                                   [](const Partition& p) {
                                       return checked_mul(checked_mul(-p.count(),
                                                                      sign_pow(p.count())),
                                                          two_pow(p.distinct_count()));
                                   },
                                   order);
            };
            break;
        case CaseId::VI:
            spec.factor = [](int j, int order) {
                return one_minus_q(2 * j, order) * one_minus_q(2 * j + 1, order).inverted_unit();
            };
            spec.factor_valuation = [](int j) { return 2 * j; };
            spec.summand = [](int d, int order) {
                return TruncatedSeries::geometric(d, order).scaled(sign_pow(d));
            };
            spec.summand_valuation = [](int d) { return d; };
            // The table's product is (1-q) times the one counted by P^e, so
            // both combinatorial routes carry a (1-q) prefactor.
            spec.comb_lhs = [](int order) {
                return one_minus_q(1, order) *
                       weighted_gf(PartitionFamily::no_repeated_even(),
                                   [](const Partition& p) {
                                       return checked_mul(floor_half_largest(p),
                                                          sign_pow(p.even_count()));
                                   },
                                   order);
            };
            spec.comb_prod_sum = [](int order) {
                return -(one_minus_q(1, order) *
                         weighted_gf(PartitionFamily::no_repeated_even(),
                                     [](const Partition& p) {
                                         return checked_mul(p.count(), sign_pow(p.even_count()));
                                     },
                                     order));
            };
            break;
    }
    spec.correction = [id](int order) { return g_series(id, order); };
    return spec;
}

TruncatedSeries lhs_tail_sum(const CaseSpec& spec, int order) {
    TruncatedSeries full = product_converging(
        [&](int j) { return spec.factor(j, order); }, spec.factor_valuation, order);
    TruncatedSeries partial = TruncatedSeries::one(order);
    TruncatedSeries acc(order);
    for (int upper = 0;; ++upper) {
        acc += full - partial; // the N = upper term
        if (spec.factor_valuation(upper + 1) > order) break; // remaining terms vanish
        partial *= spec.factor(upper + 1, order);
    }
    return acc;
}

TruncatedSeries lhs_lemma_form(const CaseSpec& spec, int order) {
    TruncatedSeries prefix = TruncatedSeries::one(order);
    TruncatedSeries acc(order);
    for (int n = 1; spec.factor_valuation(n) <= order; ++n) {
        TruncatedSeries b = spec.factor(n, order);
        TruncatedSeries a = b - TruncatedSeries::one(order);
        acc += (a * prefix).scaled(n);
        prefix *= b;
    }
    return acc;
}

TruncatedSeries rhs(const CaseSpec& spec, int order) {
    TruncatedSeries prod = product_converging(
        [&](int j) { return spec.factor(j, order); }, spec.factor_valuation, order);
    TruncatedSeries sum = sum_converging(
        [&](int d) { return spec.summand(d, order); }, spec.summand_valuation, order);
    return prod * sum + spec.correction(order);
}

VerificationReport compare_routes(const std::string& case_id,
                                  const std::vector<std::string>& names,
                                  const std::vector<TruncatedSeries>& routes,
                                  std::string g_variant) {
    VerificationReport rep;
    rep.case_id = case_id;
    rep.order = routes.empty() ? 0 : routes.front().order();
    rep.routes = names;
    rep.g_variant = std::move(g_variant);
    std::optional<int> mismatch;
    for (std::size_t i = 1; i < routes.size(); ++i) {
        auto m = TruncatedSeries::first_mismatch(routes[0], routes[i]);
        if (m && (!mismatch || *m < *mismatch)) mismatch = m;
    }
    rep.equal = !mismatch.has_value();
    rep.first_mismatch = mismatch;
    if (mismatch)
        for (std::size_t i = 0; i < routes.size(); ++i)
            rep.mismatch_values.push_back({names[i], routes[i].coeff(*mismatch)});
    return rep;
}

VerificationReport verify(CaseId id, int order) {
    CaseSpec spec = theorem_case(id);
    TruncatedSeries tail = lhs_tail_sum(spec, order);
    TruncatedSeries lemma = lhs_lemma_form(spec, order);
    TruncatedSeries comb_lhs = spec.comb_lhs(order);
    TruncatedSeries series_rhs = rhs(spec, order);
    TruncatedSeries comb_rhs = spec.comb_prod_sum(order) + spec.correction(order);
    std::string variant = id == CaseId::IV ? "eq6-with-sign" : "";
    return compare_routes(case_name(id),
                          {"tail", "lemma", "comb-lhs", "series-rhs", "comb-rhs"},
                          {tail, lemma, comb_lhs, series_rhs, comb_rhs}, variant);
}

std::string VerificationReport::to_text() const {
    std::ostringstream out;
    out << "case " << case_id << ", order " << order << ": ";
    for (std::size_t i = 0; i < routes.size(); ++i) out << (i ? " = " : "") << routes[i];
    out << (equal ? "  [equal]" : "  [MISMATCH]");
    if (first_mismatch) {
        out << "\n  first mismatch at q^" << *first_mismatch << ":";
        for (const auto& rv : mismatch_values) out << " " << rv.route << "=" << rv.value;
    }
    if (!g_variant.empty()) out << "\n  correction series variant: " << g_variant;
    return out.str();
}

} // namespace qpart
