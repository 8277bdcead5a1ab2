#ifndef ODOSPEC_SERIES_HPP
#define ODOSPEC_SERIES_HPP

#include <string>
#include <vector>

#include "odospec/scalar.hpp"

namespace odospec {

/// Truncated formal power series in (t - t0) over ExactScalar.
///
/// coeff(k) is the coefficient of (t - t0)^k, tracked for k = 0..valid_to.
/// valid_to is the truncation/validity order: the result of every operation
/// carries the order up to which its coefficients are guaranteed correct
/// (min for add/mul, decrement for derivative, increment for antiderivative).
/// Values are immutable after construction; all operations are pure.
class TaylorSeries {
  public:
    TaylorSeries(std::vector<ExactScalar> coeffs, ExactScalar base);

    static TaylorSeries constant(const ExactScalar& value, int order,
                                 const ExactScalar& base = ExactScalar(0));
    /// The coordinate function t itself, expanded at the base point.
    static TaylorSeries variable(int order, const ExactScalar& base = ExactScalar(0));
    /// A polynomial sum p[j]*t^j re-expanded around the base point.
    static TaylorSeries polynomial(const std::vector<ExactScalar>& p, int order,
                                   const ExactScalar& base = ExactScalar(0));

    int valid_to() const { return static_cast<int>(c_.size()) - 1; }
    const ExactScalar& coeff(int k) const;
    const ExactScalar& constant_term() const { return c_[0]; }
    const ExactScalar& base_point() const { return base_; }

    bool is_zero() const;           // zero to validity
    bool is_constant() const;       // no non-constant terms to validity
    bool is_invertible() const { return !c_[0].is_zero(); }

    TaylorSeries truncated(int new_valid_to) const;

    std::string str(const std::string& var = "t") const;

  private:
    std::vector<ExactScalar> c_;
    ExactScalar base_;
};

TaylorSeries operator+(const TaylorSeries& a, const TaylorSeries& b);
TaylorSeries operator-(const TaylorSeries& a, const TaylorSeries& b);
TaylorSeries operator-(const TaylorSeries& a);
TaylorSeries operator*(const TaylorSeries& a, const TaylorSeries& b);
TaylorSeries operator*(const ExactScalar& s, const TaylorSeries& a);

TaylorSeries derivative(const TaylorSeries& a);
/// Termwise antiderivative with zero constant term; valid_to incremented.
TaylorSeries antiderivative(const TaylorSeries& a);
/// Multiplicative inverse; requires a nonzero constant term.
TaylorSeries invert(const TaylorSeries& a);
TaylorSeries operator/(const TaylorSeries& a, const TaylorSeries& b);
/// f(g(t)) truncated at min validity; requires g.constant_term() == 0.
TaylorSeries compose(const TaylorSeries& f, const TaylorSeries& g);
/// Compositional inverse h with g(h(t)) = h(g(t)) = t to the available order;
/// requires g.constant_term() == 0 and g.coeff(1) != 0.
TaylorSeries reverse(const TaylorSeries& g);
TaylorSeries pow(const TaylorSeries& a, int e);

/// exp/sin/cos of a series with vanishing constant term. A non-zero constant
/// term has no exact Gaussian-rational evaluation and is rejected.
TaylorSeries exp_series(const TaylorSeries& a);
TaylorSeries sin_series(const TaylorSeries& a);
TaylorSeries cos_series(const TaylorSeries& a);
/// m-th root of an invertible series. The engine never extracts roots of
/// scalars: the caller supplies an exact m-th root of the constant term,
/// which is checked by raising it to the m-th power.
TaylorSeries root_series(const TaylorSeries& a, const ExactScalar& root_of_constant, int m);

/// Coefficientwise equality on the shared validity range.
bool equal_to_validity(const TaylorSeries& a, const TaylorSeries& b);

void require_same_base(const TaylorSeries& a, const TaylorSeries& b);

} // namespace odospec

#endif
