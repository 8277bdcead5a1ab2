#ifndef ODOSPEC_TESTS_HELPERS_HPP
#define ODOSPEC_TESTS_HELPERS_HPP

#include <random>
#include <vector>

#include "odospec/diffop.hpp"
#include "odospec/opexpr.hpp"
#include "odospec/spectral.hpp"

namespace odospec::testing {

inline ExactScalar sc(long long v) { return ExactScalar(v); }
inline ExactScalar frac(long long a, long long b) { return ExactScalar::from_ratio(a, b); }

inline TaylorSeries poly(std::vector<long long> coeffs, int order,
                         const ExactScalar& t0 = ExactScalar(0)) {
    std::vector<ExactScalar> c;
    c.reserve(coeffs.size());
    for (long long v : coeffs) c.push_back(ExactScalar(v));
    return TaylorSeries::polynomial(c, order, t0);
}

inline DiffOp parse_op(const std::string& src, int order, const ExactScalar& t0 = ExactScalar(0)) {
    return lower_to_diffop(parse_operator(src), order, t0);
}

// Random rational in [-4, 4] with denominator up to 4.
inline ExactScalar random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 4);
    return ExactScalar::from_ratio(num(rng), den(rng));
}

// Random polynomial series of degree <= max_deg.
inline TaylorSeries random_series(std::mt19937& rng, int order, int max_deg = 3) {
    std::vector<ExactScalar> c;
    for (int k = 0; k <= max_deg; ++k) c.push_back(random_rational(rng));
    return TaylorSeries::polynomial(c, order);
}

// Random operator of the given order with polynomial coefficients.
inline DiffOp random_op(std::mt19937& rng, int op_order, int series_order) {
    std::vector<TaylorSeries> c;
    for (int k = 0; k < op_order; ++k) c.push_back(random_series(rng, series_order));
    // keep the leading coefficient away from zero
    TaylorSeries lead = random_series(rng, series_order);
    if (lead.constant_term().is_zero())
        lead = lead + TaylorSeries::constant(ExactScalar(1), series_order, ExactScalar(0));
    c.push_back(lead);
    return DiffOp(std::move(c));
}

inline BivarPoly free_curve(int m, int n, const ExactScalar& beta0) {
    BivarPoly f;
    f.weight_m = m;
    f.weight_n = n;
    f.add_term(0, m, ExactScalar(1));
    f.add_term(n, 0, -beta0.pow(m));
    return f;
}

struct Pair {
    DiffOp p;
    DiffOp q;
};

inline Pair free_pair(int m, int n, const ExactScalar& beta0, int order) {
    return {DiffOp::d_power(m, order), beta0 * DiffOp::d_power(n, order)};
}

// P = D^2, Q = D^3 + b1 D
inline Pair example_pair(const ExactScalar& b1, int order) {
    return {DiffOp::d_power(2, order), DiffOp::d_power(3, order) + b1 * DiffOp::d(order)};
}

// the reconstructed cusp operators with z0^{-1} = w0 (exact closed forms)
inline Pair cusp_pair(long long w0_num, long long w0_den, int order) {
    ExactScalar w0 = frac(w0_num, w0_den);
    ExactScalar z0 = w0.inverse();
    TaylorSeries den = TaylorSeries::polynomial({z0, sc(1)}, order); // t + z0
    TaylorSeries inv2 = invert(den * den);
    TaylorSeries inv3 = invert(den * den * den);
    DiffOp p = DiffOp::d_power(2, order) - DiffOp::mul_op(sc(2) * inv2);
    DiffOp q = DiffOp::d_power(3, order) -
               op_multiply(DiffOp::mul_op(sc(3) * inv2), DiffOp::d(order)) +
               DiffOp::mul_op(sc(3) * inv3);
    return {p, q};
}

} // namespace odospec::testing

#endif
