#ifndef ODOSPEC_INVERSE_G0_HPP
#define ODOSPEC_INVERSE_G0_HPP

#include <optional>
#include <string>

#include "odospec/diffop.hpp"
#include "odospec/spectral.hpp"

namespace odospec {

enum class CurveKind { smooth, node, cusp };

std::string kind_name(CurveKind k);
std::optional<CurveKind> kind_from_name(const std::string& s);

/// Spectral data of the rational genus-zero curves mu^2 = lambda (lambda+b1)^2
/// in the kappa=1 convention: lambda = z^-2, mu = z^-3 + b1 z^-1.
///   smooth: normalized curve, no divisor data;
///   node:   b1 != 0, the points z^-1 = +-c (c^2 = -b1, caller-supplied)
///           glued to a double point, Baker-Akhiezer pole at z = z0;
///   cusp:   b1 = 0, double point degenerated to a cusp, pole at z = z0.
struct GenusZeroSpec {
    ExactScalar b1;
    ExactScalar z0_inv; // the pole location parameter z0^{-1}
    CurveKind kind = CurveKind::smooth;
    ExactScalar c; // node only; c^2 = -b1 exactly

    void validate() const;
};

/// psi(z, t) = e^{t/z} (z^-1 + d(t)) / (z^-1 - z0^-1)  (node and cusp kinds),
/// psi = e^{t/z} for the smooth kind. The exponential factor is implicit; the
/// stored data is the pole-position series d(t) at the base point.
struct BAFunction {
    CurveKind kind = CurveKind::smooth;
    ExactScalar w0;  // z0^{-1}
    TaylorSeries d = TaylorSeries::constant(ExactScalar(0), 0); // d(t); 0 for the smooth kind

    /// Rational part R(w, t) as a t-series at exact w = z^{-1}; w must avoid
    /// the pole z0^{-1}.
    TaylorSeries rational_part_at(const ExactScalar& w) const;
    /// Number of affine poles of the rational part (the model divisor degree).
    int pole_degree() const { return kind == CurveKind::smooth ? 0 : 1; }
};

BAFunction ba_function(const GenusZeroSpec& spec, int order, const ExactScalar& t0);

/// Values of e^{-t/z} psi agree at the glued points z^{-1} = +-c, identically
/// in t up to the series order (node kind only).
bool node_glue_ok(const BAFunction& ba, const ExactScalar& c, int order);

/// The holomorphic extension of e^{-t/z} psi takes the value 1 at z = 0:
/// structurally, numerator and denominator of R are monic of degree 1 in
/// z^{-1} (or R = 1).
bool normalized_at_infinity(const BAFunction& ba);

/// Second-order operator with P psi = z^{-2} psi: the potential is solved
/// from the ansatz by exact series division and verified through the
/// gauge_shift oracle at >= 3 rational z samples.
DiffOp reconstruct_P(const GenusZeroSpec& spec, int order, const ExactScalar& t0);

/// Third-order operator with Q psi = (z^{-3} + b1 z^{-1}) psi, found by an
/// undetermined-coefficients solve at two z samples and verified at a third.
DiffOp reconstruct_Q(const GenusZeroSpec& spec, int order, const ExactScalar& t0);

struct RoundtripReport {
    bool ok = false;
    std::string failed_stage; // empty when ok
    std::optional<DiffOp> p;
    std::optional<DiffOp> q;
    bool commutator_zero = false;
    int commutator_n_eff = 0;
    bool curve_ok = false;
    BivarPoly curve;
    BivarPoly expected_curve;
    bool ba_oracle_ok = false;
    int model_genus = 0;     // 0 smooth, 1 node/cusp
    int ba_pole_degree = 0;  // divisor degree on the model side
    bool model_divisor_ok = false;
    std::optional<DivisorReport> direct_divisor; // direct-problem support, informational
};

/// Reconstruct (P, Q), run the direct problem, and compare the curve against
/// mu^2 - lambda (lambda + b1)^2 exactly.
RoundtripReport roundtrip(const GenusZeroSpec& spec, int order, const ExactScalar& t0);

BivarPoly example_curve(const ExactScalar& b1);

} // namespace odospec

#endif
