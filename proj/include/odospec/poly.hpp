#ifndef ODOSPEC_POLY_HPP
#define ODOSPEC_POLY_HPP

#include <string>
#include <vector>

#include "odospec/scalar.hpp"

namespace odospec {

/// Dense univariate polynomial over the Gaussian rationals, ascending powers.
class ScalarPoly {
  public:
    ScalarPoly() = default; // zero
    explicit ScalarPoly(std::vector<ExactScalar> c) : c_(std::move(c)) { trim(); }
    static ScalarPoly constant(const ExactScalar& v) { return ScalarPoly({v}); }
    static ScalarPoly monomial(int k, const ExactScalar& v);

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    ExactScalar at(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(k)]
                                                           : ExactScalar(0);
    }
    const std::vector<ExactScalar>& coeffs() const { return c_; }

    ExactScalar eval(const ExactScalar& x) const;
    ComplexFloat eval(const ComplexFloat& x) const;
    ScalarPoly derivative() const;
    ScalarPoly conj() const;
    ScalarPoly monic() const;

    friend ScalarPoly operator+(const ScalarPoly& a, const ScalarPoly& b);
    friend ScalarPoly operator-(const ScalarPoly& a, const ScalarPoly& b);
    friend ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b);
    friend ScalarPoly operator*(const ExactScalar& s, const ScalarPoly& a);
    friend bool operator==(const ScalarPoly& a, const ScalarPoly& b) { return a.c_ == b.c_; }

    std::string str(const std::string& var = "x") const;

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<ExactScalar> c_;
};

/// Quotient and remainder over the field Q(i).
std::pair<ScalarPoly, ScalarPoly> divmod(const ScalarPoly& a, const ScalarPoly& b);
ScalarPoly gcd(const ScalarPoly& a, const ScalarPoly& b); // monic
ScalarPoly squarefree_part(const ScalarPoly& a);          // monic, same distinct roots

/// Exact determinant of a square matrix over Q(i) by fraction-producing
/// Gaussian elimination (field arithmetic, so no growth control needed).
ExactScalar exact_det(std::vector<std::vector<ExactScalar>> m);

/// Polynomial in a second variable (mu) whose coefficients are polynomials in
/// the first (lambda); index = mu power.
using MuPoly = std::vector<ScalarPoly>;

/// Determinant of the Sylvester matrix of f and g as polynomials in mu, of
/// formal degrees f.size()-1 and g.size()-1, as an exact polynomial in
/// lambda. Computed by sampling lambda and Lagrange interpolation.
ScalarPoly resultant_mu(const MuPoly& f, const MuPoly& g);

} // namespace odospec

#endif
