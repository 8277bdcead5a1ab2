#include "odospec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace odospec {

SeriesPoly::SeriesPoly(std::vector<TaylorSeries> c) : c_(std::move(c)) {
    if (c_.empty()) throw DomainError("lambda polynomial needs at least one coefficient");
    for (const auto& s : c_) require_same_base(s, c_[0]);
    while (c_.size() > 1 && c_.back().is_zero()) c_.pop_back();
}

SeriesPoly SeriesPoly::zero(int series_order, const ExactScalar& base) {
    return SeriesPoly({TaylorSeries::constant(ExactScalar(0), series_order, base)});
}

SeriesPoly SeriesPoly::lambda(int series_order, const ExactScalar& base) {
    return SeriesPoly({TaylorSeries::constant(ExactScalar(0), series_order, base),
                       TaylorSeries::constant(ExactScalar(1), series_order, base)});
}

bool SeriesPoly::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const TaylorSeries& s) { return s.is_zero(); });
}

int SeriesPoly::degree() const {
    for (int k = static_cast<int>(c_.size()) - 1; k >= 0; --k)
        if (!c_[static_cast<size_t>(k)].is_zero()) return k;
    return -1;
}

TaylorSeries SeriesPoly::at(int k) const {
    if (k >= 0 && k < static_cast<int>(c_.size())) return c_[static_cast<size_t>(k)];
    return TaylorSeries::constant(ExactScalar(0), min_validity(), c_[0].base_point());
}

int SeriesPoly::min_validity() const {
    int v = c_[0].valid_to();
    for (const auto& s : c_) v = std::min(v, s.valid_to());
    return v;
}

bool SeriesPoly::t_constant() const {
    return std::all_of(c_.begin(), c_.end(), [](const TaylorSeries& s) { return s.is_constant(); });
}

ScalarPoly SeriesPoly::constants() const {
    std::vector<ExactScalar> c;
    c.reserve(c_.size());
    for (const auto& s : c_) c.push_back(s.constant_term());
    return ScalarPoly(std::move(c));
}

SeriesPoly operator+(const SeriesPoly& a, const SeriesPoly& b) {
    const int top = std::max(static_cast<int>(a.c_.size()), static_cast<int>(b.c_.size())) - 1;
    std::vector<TaylorSeries> c;
    c.reserve(static_cast<size_t>(top) + 1);
    for (int k = 0; k <= top; ++k) c.push_back(a.at(k) + b.at(k));
    return SeriesPoly(std::move(c));
}

SeriesPoly operator-(const SeriesPoly& a, const SeriesPoly& b) {
    const int top = std::max(static_cast<int>(a.c_.size()), static_cast<int>(b.c_.size())) - 1;
    std::vector<TaylorSeries> c;
    c.reserve(static_cast<size_t>(top) + 1);
    for (int k = 0; k <= top; ++k) c.push_back(a.at(k) - b.at(k));
    return SeriesPoly(std::move(c));
}

SeriesPoly operator*(const SeriesPoly& a, const SeriesPoly& b) {
    const int da = static_cast<int>(a.c_.size()) - 1, db = static_cast<int>(b.c_.size()) - 1;
    std::vector<TaylorSeries> c(
        static_cast<size_t>(da + db) + 1,
        TaylorSeries::constant(ExactScalar(0), std::min(a.min_validity(), b.min_validity()),
                               a.c_[0].base_point()));
    for (int i = 0; i <= da; ++i) {
        if (a.c_[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; j <= db; ++j) {
            if (b.c_[static_cast<size_t>(j)].is_zero()) continue;
            c[static_cast<size_t>(i + j)] =
                c[static_cast<size_t>(i + j)] +
                a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
        }
    }
    return SeriesPoly(std::move(c));
}

SeriesPoly operator*(const TaylorSeries& s, const SeriesPoly& a) {
    std::vector<TaylorSeries> c;
    c.reserve(a.c_.size());
    for (const auto& x : a.c_) c.push_back(s * x);
    return SeriesPoly(std::move(c));
}

SeriesPoly SeriesPoly::derivative_t() const {
    std::vector<TaylorSeries> c;
    c.reserve(c_.size());
    for (const auto& s : c_) c.push_back(derivative(s));
    return SeriesPoly(std::move(c));
}

int arithmetic_genus(int m, int n) { return (m - 1) * (n - 1) / 2; }

PolyMatrix companion_matrix(const DiffOp& p) {
    DiffOp pm = monicized(p);
    if (pm.order() < 1) throw DomainError("companion matrix needs an operator of positive order");
    const int m = pm.order();
    const int ord = pm.min_coeff_validity();
    const ExactScalar base = pm.base_point();
    PolyMatrix u;
    u.m = m;
    u.e.assign(static_cast<size_t>(m),
               std::vector<SeriesPoly>(static_cast<size_t>(m), SeriesPoly::zero(ord, base)));
    for (int k = 0; k + 1 < m; ++k)
        u.e[static_cast<size_t>(k)][static_cast<size_t>(k + 1)] =
            SeriesPoly::from_series(TaylorSeries::constant(ExactScalar(1), ord, base));
    // last row: (lambda - alpha_m, -alpha_{m-1}, ..., -alpha_1), alpha_j = coeff(m-j)
    u.e[static_cast<size_t>(m - 1)][0] =
        SeriesPoly({-pm.coeff(0), TaylorSeries::constant(ExactScalar(1), ord, base)});
    for (int l = 1; l < m; ++l)
        u.e[static_cast<size_t>(m - 1)][static_cast<size_t>(l)] =
            SeriesPoly::from_series(-pm.coeff(l));
    return u;
}

using Row = std::vector<SeriesPoly>;

static Row row_times_matrix(const Row& r, const PolyMatrix& u) {
    Row out;
    out.reserve(r.size());
    for (size_t j = 0; j < r.size(); ++j) {
        SeriesPoly acc = r[0] * u.e[0][j];
        for (size_t i = 1; i < r.size(); ++i) acc = acc + r[i] * u.e[i][j];
        out.push_back(acc);
    }
    return out;
}

static Row row_derivative(const Row& r) {
    Row out;
    out.reserve(r.size());
    for (const auto& e : r) out.push_back(e.derivative_t());
    return out;
}

static Row advance_row(const Row& r, const PolyMatrix& u) {
    Row d = row_derivative(r);
    Row ru = row_times_matrix(r, u);
    for (size_t j = 0; j < d.size(); ++j) d[j] = d[j] + ru[j];
    return d;
}

PolyMatrix action_matrix(const DiffOp& p, const DiffOp& q) {
    int n_eff = 0;
    if (!commutes_to_validity(p, q, &n_eff))
        throw NonCommutingError("action matrix requires a commuting pair (checked to order " +
                                std::to_string(n_eff) + ")");
    if (q.is_zero()) throw DomainError("action of the zero operator");
    PolyMatrix u = companion_matrix(p);
    const int m = u.m;
    const int n = q.order();
    const ExactScalar base = p.base_point();
    const int ord = std::min(q.min_coeff_validity(), monicized(p).min_coeff_validity());

    // r_l with psi^(l) = r_l psihat; unit rows below order m
    std::vector<Row> r;
    for (int l = 0; l <= std::min(n, m - 1); ++l) {
        Row unit(static_cast<size_t>(m), SeriesPoly::zero(ord, base));
        unit[static_cast<size_t>(l)] =
            SeriesPoly::from_series(TaylorSeries::constant(ExactScalar(1), ord, base));
        r.push_back(std::move(unit));
    }
    while (static_cast<int>(r.size()) <= n) r.push_back(advance_row(r.back(), u));

    Row v0(static_cast<size_t>(m), SeriesPoly::zero(ord, base));
    for (int l = 0; l <= n; ++l) {
        TaylorSeries bl = q.coeff_or_zero(l);
        if (bl.is_zero()) continue;
        for (size_t j = 0; j < v0.size(); ++j)
            v0[j] = v0[j] + bl * r[static_cast<size_t>(l)][j];
    }

    PolyMatrix v;
    v.m = m;
    v.e.push_back(std::move(v0));
    for (int k = 1; k < m; ++k) v.e.push_back(advance_row(v.e.back(), u));
    return v;
}

ScalarPolyMatrix monodromy_free_matrix(const PolyMatrix& v) {
    ScalarPolyMatrix out;
    out.m = v.m;
    out.e.resize(static_cast<size_t>(v.m));
    for (int i = 0; i < v.m; ++i)
        for (int j = 0; j < v.m; ++j)
            out.e[static_cast<size_t>(i)].push_back(
                v.e[static_cast<size_t>(i)][static_cast<size_t>(j)].constants());
    return out;
}

// ---- exact characteristic polynomial over the (lambda-series, mu) ring ----

using MuSeriesPoly = std::vector<SeriesPoly>; // index = mu power

static MuSeriesPoly mu_add(const MuSeriesPoly& a, const MuSeriesPoly& b) {
    MuSeriesPoly out = a;
    if (b.size() > out.size()) out.resize(b.size(), SeriesPoly::zero(0, ExactScalar(0)));
    for (size_t j = 0; j < b.size(); ++j)
        out[j] = (j < a.size()) ? (a[j] + b[j]) : b[j];
    return out;
}

static MuSeriesPoly mu_mul(const MuSeriesPoly& a, const MuSeriesPoly& b) {
    int v = a[0].min_validity();
    for (const auto& sp : a) v = std::min(v, sp.min_validity());
    for (const auto& sp : b) v = std::min(v, sp.min_validity());
    const ExactScalar base = a[0].at(0).base_point();
    MuSeriesPoly out(a.size() + b.size() - 1, SeriesPoly::zero(v, base));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
    return out;
}

static MuSeriesPoly mu_neg(const MuSeriesPoly& a) {
    MuSeriesPoly out;
    out.reserve(a.size());
    for (const auto& sp : a)
        out.push_back(SeriesPoly::zero(sp.min_validity(), sp.at(0).base_point()) - sp);
    return out;
}

static MuSeriesPoly mu_det(std::vector<std::vector<MuSeriesPoly>> mat) {
    const size_t n = mat.size();
    if (n == 1) return mat[0][0];
    MuSeriesPoly acc;
    for (size_t i = 0; i < n; ++i) {
        std::vector<std::vector<MuSeriesPoly>> minor;
        minor.reserve(n - 1);
        for (size_t r = 0; r < n; ++r) {
            if (r == i) continue;
            std::vector<MuSeriesPoly> row;
            for (size_t c = 1; c < n; ++c) row.push_back(mat[r][c]);
            minor.push_back(std::move(row));
        }
        MuSeriesPoly term = mu_mul(mat[i][0], mu_det(std::move(minor)));
        if (i % 2 == 1) term = mu_neg(term);
        acc = acc.empty() ? term : mu_add(acc, term);
    }
    return acc;
}

PlaneCurve bc_polynomial(const PolyMatrix& v, int order_p, int order_q) {
    const ExactScalar base = v.e[0][0].at(0).base_point();
    const int ord = [&] {
        int o = v.e[0][0].min_validity();
        for (const auto& row : v.e)
            for (const auto& e : row) o = std::min(o, e.min_validity());
        return o;
    }();
    std::vector<std::vector<MuSeriesPoly>> cm(static_cast<size_t>(v.m));
    for (int i = 0; i < v.m; ++i)
        for (int j = 0; j < v.m; ++j) {
            MuSeriesPoly entry{SeriesPoly::zero(ord, base) -
                               v.e[static_cast<size_t>(i)][static_cast<size_t>(j)]};
            if (i == j)
                entry.push_back(
                    SeriesPoly::from_series(TaylorSeries::constant(ExactScalar(1), ord, base)));
            cm[static_cast<size_t>(i)].push_back(std::move(entry));
        }
    MuSeriesPoly det = mu_det(std::move(cm));

    PlaneCurve curve;
    curve.m = order_p;
    curve.n = order_q;
    curve.f.weight_m = order_p;
    curve.f.weight_n = order_q;
    int n_eff = ord;
    for (size_t j = 0; j < det.size(); ++j) {
        const SeriesPoly& sp = det[j];
        n_eff = std::min(n_eff, sp.min_validity());
        for (int i = 0; i <= std::max(sp.degree(), 0); ++i) {
            TaylorSeries s = sp.at(i);
            if (s.is_zero()) continue;
            if (!s.is_constant())
                throw NonCommutingError(
                    "characteristic polynomial depends on t (coefficient of lambda^" +
                    std::to_string(i) + " mu^" + std::to_string(j) +
                    "): non-commuting or corrupted input");
            curve.f.add_term(i, static_cast<int>(j), s.constant_term());
        }
    }
    curve.n_eff = n_eff;
    return curve;
}

WeightReport weighted_degree_check(const PlaneCurve& curve, const ExactScalar& beta0) {
    WeightReport rep;
    const int target = curve.m * curve.n;
    rep.degree_ok = curve.f.weighted_degree() == target;
    rep.monic_ok = curve.f.coeff(0, curve.m).is_one();
    rep.c = curve.f.coeff(curve.n, 0);
    rep.top_ok = rep.monic_ok && rep.c == -beta0.pow(curve.m);
    for (const auto& [ij, c] : curve.f.terms) {
        const int w = ij.first * curve.m + ij.second * curve.n;
        if (w > target || (w == target && !(ij == std::make_pair(0, curve.m) ||
                                            ij == std::make_pair(curve.n, 0)))) {
            rep.offending.push_back(ij);
        }
    }
    rep.ok = rep.degree_ok && rep.top_ok && rep.offending.empty();
    return rep;
}

ActionWeightReport action_weight_check(const PolyMatrix& v, int order_p, int order_q) {
    ActionWeightReport rep;
    for (int k = 0; k < v.m; ++k)
        for (int l = 0; l < v.m; ++l) {
            const SeriesPoly& e = v.e[static_cast<size_t>(k)][static_cast<size_t>(l)];
            const int d = e.degree();
            if (d < 0) continue;
            const int bound = order_q + k - l;
            if (order_p * d > bound || (order_p * d == bound && !e.at(d).is_constant()))
                rep.violations.emplace_back(k, l, d);
        }
    rep.ok = rep.violations.empty();
    return rep;
}

VanishReport verify_bc_vanishing(const PlaneCurve& curve, const DiffOp& p, const DiffOp& q) {
    VanishReport rep;
    DiffOp r = op_poly_eval(curve.f, p, q);
    rep.n_eff = r.min_coeff_validity();
    rep.zero = r.is_zero();
    if (!rep.zero)
        for (int k = 0; k <= r.order(); ++k)
            if (!r.coeff(k).is_zero()) {
                rep.offending_power = k;
                break;
            }
    return rep;
}

// ---- eigenvectors ----

static ExactScalar exact_minor_det(const std::vector<std::vector<ExactScalar>>& b, int drop_row,
                                   int drop_col) {
    const int n = static_cast<int>(b.size());
    std::vector<std::vector<ExactScalar>> sub;
    for (int r = 0; r < n; ++r) {
        if (r == drop_row) continue;
        std::vector<ExactScalar> row;
        for (int c = 0; c < n; ++c)
            if (c != drop_col) row.push_back(b[static_cast<size_t>(r)][static_cast<size_t>(c)]);
        sub.push_back(std::move(row));
    }
    if (sub.empty()) return ExactScalar(1);
    return exact_det(std::move(sub));
}

std::vector<ExactScalar> normalized_eigenvector(const ScalarPolyMatrix& mM,
                                                const ExactScalar& lam, const ExactScalar& mu) {
    const int m = mM.m;
    std::vector<std::vector<ExactScalar>> b(static_cast<size_t>(m),
                                            std::vector<ExactScalar>(static_cast<size_t>(m)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            ExactScalar entry = -mM.e[static_cast<size_t>(j)][static_cast<size_t>(i)].eval(lam);
            if (i == j) entry += mu;
            b[static_cast<size_t>(i)][static_cast<size_t>(j)] = entry;
        }
    if (!exact_det(b).is_zero()) throw DomainError("point is not on the spectral curve");
    for (int j = 0; j < m; ++j) {
        ExactScalar first = (j % 2 == 0 ? ExactScalar(1) : ExactScalar(-1)) *
                            exact_minor_det(b, j, 0);
        if (first.is_zero()) continue;
        std::vector<ExactScalar> chi;
        chi.reserve(static_cast<size_t>(m));
        ExactScalar inv = first.inverse();
        for (int k = 0; k < m; ++k) {
            ExactScalar adj_kj = ((j + k) % 2 == 0 ? ExactScalar(1) : ExactScalar(-1)) *
                                 exact_minor_det(b, j, k);
            chi.push_back(adj_kj * inv);
        }
        return chi;
    }
    throw DomainError("normalization impossible: eigenvector lies in ker(ell) at this point");
}

static ComplexFloat cplx_minor_det(const std::vector<std::vector<ComplexFloat>>& b, int drop_row,
                                   int drop_col) {
    std::vector<std::vector<ComplexFloat>> sub;
    const int n = static_cast<int>(b.size());
    for (int r = 0; r < n; ++r) {
        if (r == drop_row) continue;
        std::vector<ComplexFloat> row;
        for (int c = 0; c < n; ++c)
            if (c != drop_col) row.push_back(b[static_cast<size_t>(r)][static_cast<size_t>(c)]);
        sub.push_back(std::move(row));
    }
    // cofactor recursion; matrices here are at most 4x4
    std::function<ComplexFloat(const std::vector<std::vector<ComplexFloat>>&)> det =
        [&](const std::vector<std::vector<ComplexFloat>>& a) -> ComplexFloat {
        if (a.empty()) return {1.0, 0.0};
        if (a.size() == 1) return a[0][0];
        ComplexFloat acc(0.0, 0.0);
        for (size_t i = 0; i < a.size(); ++i) {
            std::vector<std::vector<ComplexFloat>> minor;
            for (size_t r = 0; r < a.size(); ++r) {
                if (r == i) continue;
                std::vector<ComplexFloat> row(a[r].begin() + 1, a[r].end());
                minor.push_back(std::move(row));
            }
            ComplexFloat term = a[i][0] * det(minor);
            acc += (i % 2 == 0) ? term : -term;
        }
        return acc;
    };
    return det(sub);
}

static std::vector<std::vector<ComplexFloat>> float_char_matrix(const ScalarPolyMatrix& mM,
                                                                ComplexFloat lam, ComplexFloat mu) {
    const int m = mM.m;
    std::vector<std::vector<ComplexFloat>> b(static_cast<size_t>(m),
                                             std::vector<ComplexFloat>(static_cast<size_t>(m)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            ComplexFloat entry = -mM.e[static_cast<size_t>(j)][static_cast<size_t>(i)].eval(lam);
            if (i == j) entry += mu;
            b[static_cast<size_t>(i)][static_cast<size_t>(j)] = entry;
        }
    return b;
}

std::vector<ComplexFloat> normalized_eigenvector(const ScalarPolyMatrix& mM, ComplexFloat lam,
                                                 ComplexFloat mu, double tol) {
    const int m = mM.m;
    auto b = float_char_matrix(mM, lam, mu);
    double scale = 1.0;
    for (const auto& row : b)
        for (const auto& z : row) scale = std::max(scale, std::abs(z));
    // adjugate columns; first column whose first entry clears the tolerance
    for (int j = 0; j < m; ++j) {
        ComplexFloat first = ((j % 2 == 0) ? 1.0 : -1.0) * cplx_minor_det(b, j, 0);
        if (std::abs(first) <= tol * std::pow(scale, m - 1)) continue;
        std::vector<ComplexFloat> chi;
        for (int k = 0; k < m; ++k) {
            ComplexFloat adj_kj = (((j + k) % 2 == 0) ? 1.0 : -1.0) * cplx_minor_det(b, j, k);
            chi.push_back(adj_kj / first);
        }
        return chi;
    }
    throw DomainError("normalization impossible at this curve point (float mode)");
}

// best-conditioned column, no failure tolerance: used by the pole probe
static double eigenvector_sup_norm(const ScalarPolyMatrix& mM, ComplexFloat lam, ComplexFloat mu) {
    const int m = mM.m;
    auto b = float_char_matrix(mM, lam, mu);
    int best = -1;
    double best_first = 0.0;
    std::vector<std::vector<ComplexFloat>> adj(static_cast<size_t>(m),
                                               std::vector<ComplexFloat>(static_cast<size_t>(m)));
    for (int j = 0; j < m; ++j) {
        for (int k = 0; k < m; ++k)
            adj[static_cast<size_t>(k)][static_cast<size_t>(j)] =
                (((j + k) % 2 == 0) ? 1.0 : -1.0) * cplx_minor_det(b, j, k);
        double f = std::abs(adj[0][static_cast<size_t>(j)]);
        if (f > best_first) {
            best_first = f;
            best = j;
        }
    }
    if (best < 0 || best_first == 0.0) return 1e300;
    double nrm = 0.0;
    for (int k = 0; k < m; ++k)
        nrm = std::max(nrm, std::abs(adj[static_cast<size_t>(k)][static_cast<size_t>(best)] /
                                     adj[0][static_cast<size_t>(best)]));
    return nrm;
}

// ---- divisor support ----

MuPoly curve_to_mu_poly(const BivarPoly& f) {
    int dmu = 0;
    for (const auto& [ij, c] : f.terms) dmu = std::max(dmu, ij.second);
    MuPoly out(static_cast<size_t>(dmu) + 1);
    for (const auto& [ij, c] : f.terms) {
        ScalarPoly& p = out[static_cast<size_t>(ij.second)];
        p = p + ScalarPoly::monomial(ij.first, c);
    }
    return out;
}

static MuPoly mu_poly_mul(const MuPoly& a, const MuPoly& b) {
    MuPoly out(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
    return out;
}

static MuPoly mu_poly_det(std::vector<std::vector<MuPoly>> mat) {
    const size_t n = mat.size();
    if (n == 0) return MuPoly{ScalarPoly::constant(ExactScalar(1))};
    if (n == 1) return mat[0][0];
    MuPoly acc{ScalarPoly()};
    for (size_t i = 0; i < n; ++i) {
        bool zero = true;
        for (const auto& p : mat[i][0])
            if (!p.is_zero()) zero = false;
        if (zero) continue;
        std::vector<std::vector<MuPoly>> minor;
        for (size_t r = 0; r < n; ++r) {
            if (r == i) continue;
            std::vector<MuPoly> row(mat[r].begin() + 1, mat[r].end());
            minor.push_back(std::move(row));
        }
        MuPoly term = mu_poly_mul(mat[i][0], mu_poly_det(std::move(minor)));
        if (i % 2 == 1)
            for (auto& p : term) p = ScalarPoly() - p;
        if (term.size() > acc.size()) acc.resize(term.size());
        for (size_t k = 0; k < term.size(); ++k) acc[k] = acc[k] + term[k];
    }
    return acc;
}

// first adjugate row of (mu 1 - M(lambda)^T) as exact bivariate polynomials
static std::vector<MuPoly> adjugate_first_row(const ScalarPolyMatrix& mM) {
    const int m = mM.m;
    std::vector<std::vector<MuPoly>> b(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            MuPoly entry{ScalarPoly() - mM.e[static_cast<size_t>(j)][static_cast<size_t>(i)]};
            if (i == j) entry.push_back(ScalarPoly::constant(ExactScalar(1)));
            b[static_cast<size_t>(i)].push_back(std::move(entry));
        }
    std::vector<MuPoly> first_row;
    for (int j = 0; j < m; ++j) {
        std::vector<std::vector<MuPoly>> minor;
        for (int r = 0; r < m; ++r) {
            if (r == j) continue;
            std::vector<MuPoly> row(b[static_cast<size_t>(r)].begin() + 1,
                                    b[static_cast<size_t>(r)].end());
            minor.push_back(std::move(row));
        }
        MuPoly a = mu_poly_det(std::move(minor));
        if (j % 2 == 1)
            for (auto& p : a) p = ScalarPoly() - p;
        first_row.push_back(std::move(a));
    }
    return first_row;
}

static ComplexFloat eval_mu_poly(const MuPoly& p, ComplexFloat lam, ComplexFloat mu) {
    ComplexFloat acc(0.0, 0.0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * mu + it->eval(lam);
    return acc;
}

static double mu_poly_scale(const MuPoly& p, ComplexFloat lam, ComplexFloat mu) {
    double acc = 1.0;
    const double al = std::max(1.0, std::abs(lam));
    const double am = std::max(1.0, std::abs(mu));
    for (size_t j = 0; j < p.size(); ++j)
        for (int i = 0; i <= std::max(p[j].degree(), 0); ++i)
            acc += std::abs(p[j].at(i).to_complex()) * std::pow(al, i) *
                   std::pow(am, static_cast<double>(j));
    return acc;
}

static std::vector<ComplexFloat> mu_roots_at(const BivarPoly& f, int m, ComplexFloat lam) {
    std::vector<ComplexFloat> c(static_cast<size_t>(m) + 1, ComplexFloat(0.0, 0.0));
    for (const auto& [ij, coeff] : f.terms) {
        ComplexFloat lp(1.0, 0.0);
        for (int i = 0; i < ij.first; ++i) lp *= lam;
        c[static_cast<size_t>(ij.second)] += coeff.to_complex() * lp;
    }
    return poly_roots(std::move(c));
}

DivisorReport divisor_points(const ScalarPolyMatrix& mM, const PlaneCurve& curve,
                             const Tolerances& tol) {
    if (std::gcd(curve.m, curve.n) != 1)
        throw NonCoprimeError("divisor support requires a rank-1 pair (coprime orders)");
    DivisorReport rep;
    rep.arithmetic_genus = arithmetic_genus(curve.m, curve.n);

    const MuPoly f = curve_to_mu_poly(curve.f);
    const std::vector<MuPoly> adj_row = adjugate_first_row(mM);

    ScalarPoly common;
    bool have = false;
    for (const auto& a : adj_row) {
        bool zero = true;
        for (const auto& p : a)
            if (!p.is_zero()) zero = false;
        if (zero) continue;
        ScalarPoly r = resultant_mu(f, a);
        if (r.is_zero()) continue;
        common = have ? gcd(common, r) : r.monic();
        have = true;
    }
    if (!have || common.degree() <= 0) {
        rep.degree_matches = rep.total_degree == rep.arithmetic_genus;
        return rep;
    }

    std::vector<ComplexFloat> lam_candidates = poly_roots(squarefree_part(common));

    for (ComplexFloat lam : lam_candidates) {
        std::vector<ComplexFloat> mus = mu_roots_at(curve.f, curve.m, lam);
        std::vector<ComplexFloat> seen;
        for (ComplexFloat mu : mus) {
            bool dup = false;
            for (ComplexFloat s : seen)
                if (std::abs(s - mu) <= tol.cluster_radius * (1.0 + std::abs(mu))) dup = true;
            if (dup) continue;
            seen.push_back(mu);
            bool all_vanish = true;
            for (const auto& a : adj_row) {
                double v = std::abs(eval_mu_poly(a, lam, mu));
                if (v > 1e-7 * mu_poly_scale(a, lam, mu)) {
                    all_vanish = false;
                    break;
                }
            }
            if (!all_vanish) continue;

            // pole probe: sample the curve on two shrinking lambda-circles
            auto sweep = [&](double r) {
                double worst = 0.0;
                int captured = 0;
                for (int s = 0; s < 8; ++s) {
                    double th = 2.0 * 3.14159265358979323846 * s / 8.0;
                    ComplexFloat ls = lam + ComplexFloat(r * std::cos(th), r * std::sin(th));
                    int cap_here = 0;
                    for (ComplexFloat ms : mu_roots_at(curve.f, curve.m, ls)) {
                        if (std::abs(ms - mu) > 0.25 * (1.0 + std::abs(mu))) continue;
                        ++cap_here;
                        worst = std::max(worst, eigenvector_sup_norm(mM, ls, ms));
                    }
                    captured = std::max(captured, cap_here);
                }
                return std::make_pair(worst, captured);
            };
            auto [g1, e1] = sweep(1e-4);
            auto [g2, e2] = sweep(1e-8);
            const int branches = std::max(1, std::max(e1, e2));
            double growth = std::log(std::max(g2, 1e-30) / std::max(g1, 1e-30)) / std::log(1e4);
            int mult = static_cast<int>(std::lround(growth * branches));
            if (mult <= 0) continue;

            DivisorPoint pt;
            pt.lambda = lam;
            pt.mu = mu;
            pt.multiplicity = mult;
            pt.residual = std::abs(curve.f.eval(lam, mu));
            if (pt.residual > tol.curve_residual)
                throw ToleranceError("divisor point residual " + std::to_string(pt.residual) +
                                     " exceeds tolerance");
            rep.points.push_back(pt);
        }
    }

    std::sort(rep.points.begin(), rep.points.end(), [](const DivisorPoint& a, const DivisorPoint& b) {
        auto key = [](const DivisorPoint& p) {
            return std::make_tuple(p.lambda.real(), p.lambda.imag(), p.mu.real(), p.mu.imag());
        };
        return key(a) < key(b);
    });
    for (const auto& p : rep.points) rep.total_degree += p.multiplicity;
    rep.degree_matches = rep.total_degree == rep.arithmetic_genus;
    return rep;
}

DiscriminantResult discriminant_mu(const PlaneCurve& curve) {
    if (!curve.f.coeff(0, curve.m).is_one())
        throw DomainError("discriminant requires a curve monic in mu");
    MuPoly f = curve_to_mu_poly(curve.f);
    MuPoly df(f.size() - 1);
    for (size_t j = 1; j < f.size(); ++j)
        df[j - 1] = ExactScalar(static_cast<long long>(j)) * f[j];
    DiscriminantResult out;
    if (df.empty()) {
        out.disc = ScalarPoly::constant(ExactScalar(1));
        return out;
    }
    ScalarPoly res = resultant_mu(f, df);
    const int m = curve.m;
    ExactScalar sign = ((m * (m - 1) / 2) % 2 == 0) ? ExactScalar(1) : ExactScalar(-1);
    out.disc = sign * res;
    if (!out.disc.is_zero() && out.disc.degree() > 0)
        out.roots = poly_roots(squarefree_part(out.disc));
    return out;
}

static bool op_real(const DiffOp& p) {
    for (int k = 0; k <= (p.is_zero() ? 0 : p.order()); ++k) {
        TaylorSeries s = p.coeff_or_zero(k);
        for (int j = 0; j <= s.valid_to(); ++j)
            if (!s.coeff(j).is_real()) return false;
    }
    return true;
}

RealityReport reality_check(const DiffOp& p, const DiffOp& q, const PlaneCurve& curve) {
    RealityReport rep;
    rep.operators_real = op_real(p) && op_real(q);
    if (!rep.operators_real) return rep;
    bool curve_real = true;
    for (const auto& [ij, c] : curve.f.terms)
        if (!c.is_real()) curve_real = false;
    rep.curve_real = curve_real;

    ScalarPolyMatrix mM = monodromy_free_matrix(action_matrix(p, q));
    const std::vector<ExactScalar> samples = {
        ExactScalar(2), ExactScalar(-3), ExactScalar(BigRational(1), BigRational(2)),
        ExactScalar(BigRational(-1, 2), BigRational(3)), ExactScalar(BigRational(0), BigRational(1))};
    bool sym = true;
    for (const auto& lam : samples)
        for (const auto& row : mM.e)
            for (const auto& entry : row)
                if (entry.eval(lam.conj()) != entry.eval(lam).conj()) sym = false;
    rep.conj_symmetry_ok = sym;
    return rep;
}

SpectralData direct_problem(const DiffOp& p, const DiffOp& q) {
    SpectralData data;
    data.m = p.order();
    data.n = q.order();
    data.v = action_matrix(p, q);
    data.mM = monodromy_free_matrix(data.v);
    data.curve = bc_polynomial(data.v, data.m, data.n);
    return data;
}

} // namespace odospec
