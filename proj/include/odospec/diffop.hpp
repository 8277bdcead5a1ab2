#ifndef ODOSPEC_DIFFOP_HPP
#define ODOSPEC_DIFFOP_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "odospec/series.hpp"

namespace odospec {

/// Ordinary differential operator sum a_k(t) D^k with TaylorSeries
/// coefficients. coeff(k) multiplies D^k (ascending indexing). The stored
/// order is the highest index whose coefficient is not identically zero
/// within its validity order; the zero operator is represented explicitly.
class DiffOp {
  public:
    /// coeffs[k] multiplies D^k. Top coefficients that vanish to validity
    /// are trimmed off.
    DiffOp(std::vector<TaylorSeries> coeffs);

    static DiffOp zero(int series_order, const ExactScalar& base = ExactScalar(0));
    static DiffOp identity(int series_order, const ExactScalar& base = ExactScalar(0));
    /// The derivation D itself.
    static DiffOp d(int series_order, const ExactScalar& base = ExactScalar(0));
    static DiffOp d_power(int k, int series_order, const ExactScalar& base = ExactScalar(0));
    /// Multiplication by a coefficient function (an order-0 operator).
    static DiffOp mul_op(const TaylorSeries& f);

    bool is_zero() const { return c_.size() == 1 && c_[0].is_zero(); }
    int order() const;
    const TaylorSeries& coeff(int k) const;
    /// Zero series (at matching base) for k beyond the stored order.
    TaylorSeries coeff_or_zero(int k) const;
    const ExactScalar& base_point() const { return base_; }

    /// Min validity order across stored coefficients: the order to which
    /// statements like "this operator is zero" are certified.
    int min_coeff_validity() const;

    std::string str() const;

  private:
    std::vector<TaylorSeries> c_;
    ExactScalar base_;
};

DiffOp operator+(const DiffOp& a, const DiffOp& b);
DiffOp operator-(const DiffOp& a, const DiffOp& b);
DiffOp operator-(const DiffOp& a);
DiffOp operator*(const ExactScalar& s, const DiffOp& a);

/// Operator composition via the Leibniz expansion
/// D^n f = sum binom(n,i) f^(i) D^(n-i).
DiffOp op_multiply(const DiffOp& p, const DiffOp& q);
DiffOp op_commutator(const DiffOp& p, const DiffOp& q);
DiffOp op_pow(const DiffOp& p, int e);
/// zeta^{-1} p zeta for an invertible coefficient function zeta.
DiffOp op_conjugate(const DiffOp& p, const TaylorSeries& zeta);
/// p with its leading coefficient divided out (requires it invertible).
DiffOp monicized(const DiffOp& p);

TaylorSeries op_apply(const DiffOp& p, const TaylorSeries& s);

bool ops_equal_to_validity(const DiffOp& a, const DiffOp& b);
bool commutes_to_validity(const DiffOp& p, const DiffOp& q, int* n_eff = nullptr);

struct OrderInfo {
    bool is_zero = false;
    int order = -1;
    bool leading_constant = false;
    bool second_constant = false; // vacuously true for order 0
};
OrderInfo op_order_and_degrees(const DiffOp& p);

/// Reparametrization xi (zero constant term, invertible linear term) followed
/// by conjugation with the invertible gauge series zeta, which lives in the
/// new coordinate.
struct GaugeData {
    TaylorSeries reparam;
    TaylorSeries gauge;
};

GaugeData identity_gauge(int series_order, const ExactScalar& base = ExactScalar(0));
GaugeData inverse(const GaugeData& g);

/// Rewrite p through the coordinate change and gauge: express D via
/// Delta = (1/xi') D, expand, compose every coefficient with the reverse of
/// xi, then conjugate by the gauge series.
DiffOp transport_operator(const DiffOp& p, const GaugeData& g);

/// Standard form: leading coefficient 1, second-highest identically 0.
/// The caller supplies an exact m-th root of the leading constant term
/// (checked); the returned GaugeData transports p onto the result.
struct StandardForm {
    DiffOp op;
    GaugeData gauge;
};
StandardForm op_standard_form(const DiffOp& p, const ExactScalar& m_th_root_of_leading_constant);

/// D -> D + zeta, the action of conjugation by exp(zeta*t): if
/// q = gauge_shift(p, zeta) then p(e^{zeta t} R) = e^{zeta t} (q R).
DiffOp gauge_shift(const DiffOp& p, const ExactScalar& zeta);

/// Bivariate polynomial f(lambda, mu) with ExactScalar coefficients and
/// weights (m, n) assigned to lambda and mu. Zero coefficients are not stored.
struct BivarPoly {
    std::map<std::pair<int, int>, ExactScalar> terms; // (lambda power, mu power)
    int weight_m = 0; // weight of lambda
    int weight_n = 0; // weight of mu

    void add_term(int i, int j, const ExactScalar& c);
    int weighted_degree() const; // -1 for the zero polynomial
    bool operator==(const BivarPoly& o) const { return terms == o.terms; }
    ExactScalar coeff(int i, int j) const;
    ExactScalar eval(const ExactScalar& lam, const ExactScalar& mu) const;
    ComplexFloat eval(const ComplexFloat& lam, const ComplexFloat& mu) const;
    std::string str() const;
};

/// sum c_ij p^i q^j; refuses pairs whose commutator is nonzero to validity.
DiffOp op_poly_eval(const BivarPoly& f, const DiffOp& p, const DiffOp& q);

} // namespace odospec

#endif
