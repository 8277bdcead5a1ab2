#ifndef ODOSPEC_ROOTS_HPP
#define ODOSPEC_ROOTS_HPP

#include <vector>

#include "odospec/poly.hpp"
#include "odospec/scalar.hpp"

namespace odospec {

/// All complex roots of a polynomial given by ascending coefficients
/// (Durand-Kerner iteration). Intended for squarefree inputs of small degree;
/// throws ToleranceError when the iteration fails to settle.
std::vector<ComplexFloat> poly_roots(std::vector<ComplexFloat> coeffs);
std::vector<ComplexFloat> poly_roots(const ScalarPoly& p);

} // namespace odospec

#endif
