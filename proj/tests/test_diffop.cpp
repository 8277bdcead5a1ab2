#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "odospec/diffop.hpp"

using namespace odospec;
using namespace odospec::testing;

TEST_CASE("operator multiplication: Leibniz expansion") {
    const int N = 16;
    DiffOp d = DiffOp::d(N);
    DiffOp t = DiffOp::mul_op(poly({0, 1}, N));

    // D t = t D + 1
    DiffOp dt = op_multiply(d, t);
    CHECK(dt.order() == 1);
    CHECK(equal_to_validity(dt.coeff(1), poly({0, 1}, N)));
    CHECK(equal_to_validity(dt.coeff(0), poly({1}, N)));

    // D^2 D^3 = D^5
    CHECK(ops_equal_to_validity(op_multiply(DiffOp::d_power(2, N), DiffOp::d_power(3, N)),
                                DiffOp::d_power(5, N)));

    // D^2 t^2 = t^2 D^2 + 4t D + 2
    DiffOp lhs = op_multiply(DiffOp::d_power(2, N), DiffOp::mul_op(poly({0, 0, 1}, N)));
    CHECK(lhs.order() == 2);
    CHECK(equal_to_validity(lhs.coeff(2), poly({0, 0, 1}, N)));
    CHECK(equal_to_validity(lhs.coeff(1), poly({0, 4}, N)));
    CHECK(equal_to_validity(lhs.coeff(0), poly({2}, N)));
}

TEST_CASE("commutators") {
    const int N = 16;
    DiffOp d = DiffOp::d(N);
    DiffOp t = DiffOp::mul_op(poly({0, 1}, N));
    CHECK(ops_equal_to_validity(op_commutator(d, t), DiffOp::identity(N - 1)));

    DiffOp p = parse_op("D^3 + t*D + 1", N);
    CHECK(op_commutator(p, p).is_zero());

    auto pair = cusp_pair(1, 1, N);
    int n_eff = 0;
    CHECK(commutes_to_validity(pair.p, pair.q, &n_eff));
    CHECK(n_eff >= 24);
}

TEST_CASE("operator action on series") {
    const int N = 12;
    CHECK(equal_to_validity(op_apply(DiffOp::d(N), poly({0, 0, 1}, N)), poly({0, 2}, N - 1)));

    // D^2 has the exp series as eigenfunction
    TaylorSeries e = exp_series(poly({0, 1}, N));
    CHECK(equal_to_validity(op_apply(DiffOp::d_power(2, N), e), e));

    // (D^2 - 2/(t+1)^2) annihilates (t+1)^2
    DiffOp p = parse_op("D^2 - 2/(t+1)^2", N);
    CHECK(op_apply(p, poly({1, 2, 1}, N)).is_zero());

    CHECK_THROWS_AS(op_apply(DiffOp::d_power(3, N), poly({1, 1}, 2)), DomainError);
}

TEST_CASE("order and degree info") {
    const int N = 8;
    OrderInfo a = op_order_and_degrees(parse_op("D^3 + t*D", N));
    CHECK(a.order == 3);
    CHECK(a.leading_constant);
    CHECK(a.second_constant);

    OrderInfo b = op_order_and_degrees(parse_op("t*D^2", N));
    CHECK(b.order == 2);
    CHECK_FALSE(b.leading_constant);

    OrderInfo z = op_order_and_degrees(DiffOp::zero(N));
    CHECK(z.is_zero);
    CHECK_THROWS_AS(DiffOp::zero(N).order(), DomainError);
}

TEST_CASE("Leibniz closed formula vs repeated multiplication by D") {
    // two independent routes to D^n f
    std::mt19937 rng(777);
    const int N = 12;
    for (int trial = 0; trial < 25; ++trial) {
        std::uniform_int_distribution<int> nd(1, 5);
        const int n = nd(rng);
        TaylorSeries f = random_series(rng, N);
        // route 1: the closed binomial formula, assembled directly
        std::vector<TaylorSeries> closed(static_cast<size_t>(n) + 1,
                                         TaylorSeries::constant(sc(0), N - n));
        TaylorSeries fi = f; // f^(i)
        for (int i = 0; i <= n; ++i) {
            if (i > 0) fi = derivative(fi);
            ExactScalar binom(1);
            for (int j = 1; j <= i; ++j)
                binom = binom * ExactScalar(n - j + 1) / ExactScalar(j);
            closed[static_cast<size_t>(n - i)] = binom * fi.truncated(N - n);
        }
        DiffOp route1(closed);
        // route 2: n-fold op_multiply by D
        DiffOp route2 = DiffOp::mul_op(f);
        for (int i = 0; i < n; ++i) route2 = op_multiply(DiffOp::d(N), route2);
        CHECK(ops_equal_to_validity(route1, route2));
    }
}

TEST_CASE("associativity and distributivity on random operators") {
    std::mt19937 rng(4242);
    const int N = 14;
    for (int trial = 0; trial < 12; ++trial) {
        DiffOp a = random_op(rng, 2, N), b = random_op(rng, 1, N), c = random_op(rng, 2, N);
        CHECK(ops_equal_to_validity(op_multiply(op_multiply(a, b), c),
                                    op_multiply(a, op_multiply(b, c))));
        CHECK(ops_equal_to_validity(op_multiply(a, b + c),
                                    op_multiply(a, b) + op_multiply(a, c)));
        CHECK(op_multiply(a, c).order() == a.order() + c.order());
    }
}

TEST_CASE("standard form") {
    const int N = 24;
    SUBCASE("constant rescaling 4D^2") {
        DiffOp p = sc(4) * DiffOp::d_power(2, N);
        StandardForm sf = op_standard_form(p, sc(2));
        CHECK(ops_equal_to_validity(sf.op, DiffOp::d_power(2, sf.op.min_coeff_validity())));
        CHECK(sf.gauge.reparam.coeff(1) == frac(1, 2));
        CHECK(ops_equal_to_validity(transport_operator(p, sf.gauge), sf.op));
    }
    SUBCASE("complete the square with a constant gauge exponent") {
        DiffOp p = parse_op("D^2 + 2*3*D + 9", N);
        StandardForm sf = op_standard_form(p, sc(1));
        CHECK(ops_equal_to_validity(sf.op, DiffOp::d_power(2, sf.op.min_coeff_validity())));
        CHECK(equal_to_validity(sf.gauge.gauge, exp_series(poly({0, -3}, N))));
    }
    SUBCASE("conjugation of D^2 by exp(t^2)") {
        // D^2 + 2v' D + (v'^2 + v'') with v = t^2
        DiffOp p = parse_op("D^2 + 4*t*D + (4*t^2 + 2)", N);
        StandardForm sf = op_standard_form(p, sc(1));
        CHECK(ops_equal_to_validity(sf.op, DiffOp::d_power(2, sf.op.min_coeff_validity())));
        CHECK(equal_to_validity(sf.gauge.gauge, exp_series(poly({0, 0, -1}, N))));
        // oracle: conjugate D^2 by exp(v) with op_multiply and compare to p
        TaylorSeries ev = exp_series(poly({0, 0, 1}, N));
        CHECK(ops_equal_to_validity(op_conjugate(DiffOp::d_power(2, N), ev), p));
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(op_standard_form(sc(4) * DiffOp::d_power(2, N), sc(3)), DomainError);
        CHECK_THROWS_AS(op_standard_form(parse_op("t*D^2", N), sc(1)), DomainError);
    }
}

TEST_CASE("transport: identity, linear reparametrization, round trip") {
    const int N = 20;
    DiffOp p = parse_op("D^2 + t*D + 3", N);
    CHECK(ops_equal_to_validity(transport_operator(p, identity_gauge(N)), p));

    // xi = 2t sends D to (1/2) D in the new coordinate
    GaugeData g{poly({0, 2}, N), poly({1}, N)};
    DiffOp moved = transport_operator(DiffOp::d(N), g);
    CHECK(moved.order() == 1);
    CHECK(equal_to_validity(moved.coeff(1), TaylorSeries::polynomial({frac(1, 2)}, N - 1)));

    GaugeData full{poly({0, 1, 1}, N), exp_series(poly({0, 2}, N))};
    DiffOp there = transport_operator(p, full);
    DiffOp back = transport_operator(there, inverse(full));
    CHECK(ops_equal_to_validity(back, p));
}

TEST_CASE("gauge shift") {
    const int N = 10;
    DiffOp d = DiffOp::d(N);
    DiffOp shifted = gauge_shift(d, sc(1));
    CHECK(equal_to_validity(shifted.coeff(0), poly({1}, N)));
    CHECK(equal_to_validity(shifted.coeff(1), poly({1}, N)));

    DiffOp d2 = gauge_shift(DiffOp::d_power(2, N), sc(3));
    CHECK(equal_to_validity(d2.coeff(0), poly({9}, N)));
    CHECK(equal_to_validity(d2.coeff(1), poly({6}, N)));

    DiffOp p = parse_op("D^3 + t*D + t^2", N);
    CHECK(ops_equal_to_validity(gauge_shift(gauge_shift(p, sc(5)), sc(-5)), p));

    // defining property: p(e^{zt} R) = e^{zt} (gauge_shift(p, z) R)
    TaylorSeries r = poly({1, 2, 0, 1}, N);
    TaylorSeries ezt = exp_series(poly({0, 2}, N));
    CHECK(equal_to_validity(op_apply(p, ezt * r), ezt * op_apply(gauge_shift(p, sc(2)), r)));
}

TEST_CASE("bivariate evaluation at operator pairs") {
    const int N = 24;
    SUBCASE("free case mu^2 - lambda^3") {
        BivarPoly f = free_curve(2, 3, sc(1));
        CHECK(op_poly_eval(f, DiffOp::d_power(2, N), DiffOp::d_power(3, N)).is_zero());
    }
    SUBCASE("single term lambda") {
        BivarPoly f;
        f.add_term(1, 0, sc(1));
        auto pair = example_pair(sc(2), N);
        CHECK(ops_equal_to_validity(op_poly_eval(f, pair.p, pair.q), pair.p));
    }
    SUBCASE("example curve annihilates its pair") {
        ExactScalar b1 = sc(1);
        BivarPoly f;
        f.weight_m = 2;
        f.weight_n = 3;
        f.add_term(0, 2, sc(1));
        f.add_term(3, 0, sc(-1));
        f.add_term(2, 0, sc(-2) * b1);
        f.add_term(1, 0, -(b1 * b1));
        auto pair = example_pair(b1, N);
        CHECK(op_poly_eval(f, pair.p, pair.q).is_zero());
    }
    SUBCASE("rejects non-commuting pairs") {
        BivarPoly f;
        f.add_term(1, 1, sc(1));
        CHECK_THROWS_AS(op_poly_eval(f, DiffOp::d(N), DiffOp::mul_op(poly({0, 1}, N))),
                        NonCommutingError);
    }
}
