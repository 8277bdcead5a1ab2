#ifndef ODOSPEC_SPECTRAL_HPP
#define ODOSPEC_SPECTRAL_HPP

#include <optional>
#include <tuple>
#include <vector>

#include "odospec/diffop.hpp"
#include "odospec/poly.hpp"
#include "odospec/roots.hpp"

namespace odospec {

/// Polynomial in the spectral parameter lambda with TaylorSeries coefficients
/// (the "series flavor"; its t0-evaluation is a ScalarPoly).
class SeriesPoly {
  public:
    explicit SeriesPoly(std::vector<TaylorSeries> c);
    static SeriesPoly zero(int series_order, const ExactScalar& base);
    static SeriesPoly from_series(const TaylorSeries& s) { return SeriesPoly({s}); }
    static SeriesPoly lambda(int series_order, const ExactScalar& base);

    bool is_zero() const;
    int degree() const; // highest lambda power with a coefficient nonzero to validity
    TaylorSeries at(int k) const;
    int min_validity() const;
    bool t_constant() const;
    ScalarPoly constants() const; // t0-evaluation

    friend SeriesPoly operator+(const SeriesPoly& a, const SeriesPoly& b);
    friend SeriesPoly operator-(const SeriesPoly& a, const SeriesPoly& b);
    friend SeriesPoly operator*(const SeriesPoly& a, const SeriesPoly& b);
    friend SeriesPoly operator*(const TaylorSeries& s, const SeriesPoly& a);
    /// Termwise t-derivative of every lambda coefficient.
    SeriesPoly derivative_t() const;

  private:
    std::vector<TaylorSeries> c_; // index = lambda power, never empty
};

struct PolyMatrix {
    int m = 0;
    std::vector<std::vector<SeriesPoly>> e;
};

struct ScalarPolyMatrix {
    int m = 0;
    std::vector<std::vector<ScalarPoly>> e;
};

/// Spectral curve data: f(lambda, mu) = det(mu 1 - M(lambda)) with weights
/// (m, n); smooth point at infinity implicit; kappa convention fixed to 1.
struct PlaneCurve {
    BivarPoly f;
    int m = 0;
    int n = 0;
    int n_eff = 0; // validity order to which t-independence was certified
};

/// Companion-with-parameter matrix U(t, lambda) of (P - lambda): rows shift,
/// last row (lambda - alpha_m, -alpha_{m-1}, ..., -alpha_1) with the
/// descending-index coefficients of the monic normalization of p.
PolyMatrix companion_matrix(const DiffOp& p);

/// V(t, lambda) with V psihat = (Q psi)hat on ker(P - lambda): row vectors
/// r_k with psi^(k) = r_k psihat satisfy r_{k+1} = r_k' + r_k U; row 0 of V is
/// sum_l b_l r_l over the coefficients of q, row k+1 = (row k)' + (row k) U.
PolyMatrix action_matrix(const DiffOp& p, const DiffOp& q);

/// M(lambda) = V(t0, lambda): constant terms of every entry (g(t0) = 1).
ScalarPolyMatrix monodromy_free_matrix(const PolyMatrix& v);

/// det(mu 1 - V(t, lambda)) expanded exactly; verifies that no coefficient
/// depends on t (to validity) and returns the exact constant-term curve.
PlaneCurve bc_polynomial(const PolyMatrix& v, int order_p, int order_q);

struct WeightReport {
    bool ok = false;
    bool degree_ok = false;
    bool monic_ok = false;
    bool top_ok = false;
    ExactScalar c; // coefficient of lambda^n (expected -beta0^m)
    std::vector<std::pair<int, int>> offending;
};
/// Weighted-degree structure: common weighted degree m*n, monic mu^m, and
/// weighted-top part mu^m - beta0^m lambda^n.
WeightReport weighted_degree_check(const PlaneCurve& curve, const ExactScalar& beta0);

struct ActionWeightReport {
    bool ok = false;
    // (k, l, lambda_degree) for entries with m*deg > n+k-l, or a non-constant
    // coefficient at the exact weight bound
    std::vector<std::tuple<int, int, int>> violations;
};
/// Entry (k,l) of V has weight n+k-l: its lambda-degree d obeys m*d <= n+k-l,
/// with a constant lambda-top coefficient in case of equality.
ActionWeightReport action_weight_check(const PolyMatrix& v, int order_p, int order_q);

struct VanishReport {
    bool zero = false;
    int n_eff = 0;
    int offending_power = -1; // D-power of the first nonzero coefficient
};
/// f(P, Q) = 0 to the effective validity order.
VanishReport verify_bc_vanishing(const PlaneCurve& curve, const DiffOp& p, const DiffOp& q);

/// Normalized eigenvector chi with first component 1, taken from the first
/// adjugate column of (mu 1 - M(lambda)^T) with a nonzero first entry. chi is
/// the row eigenvector of M: chi^T M = mu chi^T. Exact mode.
std::vector<ExactScalar> normalized_eigenvector(const ScalarPolyMatrix& mM,
                                                const ExactScalar& lam, const ExactScalar& mu);
/// Float mode; tol gates both the on-curve check and the normalizer.
std::vector<ComplexFloat> normalized_eigenvector(const ScalarPolyMatrix& mM, ComplexFloat lam,
                                                 ComplexFloat mu, double tol);

struct Tolerances {
    double curve_residual = 1e-9;
    double cluster_radius = 1e-6;
};

struct DivisorPoint {
    ComplexFloat lambda;
    ComplexFloat mu;
    int multiplicity = 0;
    double residual = 0.0; // |f(lambda, mu)|
};

struct DivisorReport {
    std::vector<DivisorPoint> points;
    int total_degree = 0;
    int arithmetic_genus = 0;
    bool degree_matches = false;
};

/// Numeric support of the pole divisor of chi on the affine curve: common
/// zeros of the first adjugate row of (mu 1 - M(lambda)^T) located by exact
/// resultants, kept when chi actually diverges there; multiplicities from the
/// local pole order. Total degree is compared against the arithmetic genus
/// (m-1)(n-1)/2 of the weighted (m,n) plane curve.
DivisorReport divisor_points(const ScalarPolyMatrix& mM, const PlaneCurve& curve,
                             const Tolerances& tol = {});

struct DiscriminantResult {
    ScalarPoly disc;                  // exact discriminant of f with respect to mu
    std::vector<ComplexFloat> roots;  // distinct branch/singular lambda values
};
DiscriminantResult discriminant_mu(const PlaneCurve& curve);

struct RealityReport {
    bool operators_real = false;
    std::optional<bool> curve_real;
    std::optional<bool> conj_symmetry_ok; // M(conj lambda) == conj(M(lambda)) on samples
};
RealityReport reality_check(const DiffOp& p, const DiffOp& q, const PlaneCurve& curve);

/// Full direct pipeline for a commuting pair.
struct SpectralData {
    int m = 0;
    int n = 0;
    PolyMatrix v;
    ScalarPolyMatrix mM;
    PlaneCurve curve;
};
SpectralData direct_problem(const DiffOp& p, const DiffOp& q);

int arithmetic_genus(int m, int n);
MuPoly curve_to_mu_poly(const BivarPoly& f);

} // namespace odospec

#endif
