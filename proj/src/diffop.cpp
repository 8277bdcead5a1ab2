#include "odospec/diffop.hpp"

#include <algorithm>

namespace odospec {

static ExactScalar binom(int n, int k) {
    if (k < 0 || k > n) return ExactScalar(0);
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return ExactScalar(BigRational(r));
}

DiffOp::DiffOp(std::vector<TaylorSeries> coeffs) : c_(std::move(coeffs)), base_(0) {
    if (c_.empty()) throw DomainError("operator needs at least one coefficient");
    base_ = c_[0].base_point();
    for (const auto& s : c_)
        if (s.base_point() != base_) throw DomainError("operator coefficients at mixed base points");
    while (c_.size() > 1 && c_.back().is_zero()) c_.pop_back();
}

DiffOp DiffOp::zero(int series_order, const ExactScalar& base) {
    return DiffOp({TaylorSeries::constant(ExactScalar(0), series_order, base)});
}

DiffOp DiffOp::identity(int series_order, const ExactScalar& base) {
    return DiffOp({TaylorSeries::constant(ExactScalar(1), series_order, base)});
}

DiffOp DiffOp::d(int series_order, const ExactScalar& base) { return d_power(1, series_order, base); }

DiffOp DiffOp::d_power(int k, int series_order, const ExactScalar& base) {
    if (k < 0) throw DomainError("negative operator power");
    std::vector<TaylorSeries> c;
    c.reserve(static_cast<size_t>(k) + 1);
    for (int j = 0; j < k; ++j) c.push_back(TaylorSeries::constant(ExactScalar(0), series_order, base));
    c.push_back(TaylorSeries::constant(ExactScalar(1), series_order, base));
    return DiffOp(std::move(c));
}

DiffOp DiffOp::mul_op(const TaylorSeries& f) { return DiffOp({f}); }

int DiffOp::order() const {
    if (is_zero()) throw DomainError("the zero operator has no order");
    return static_cast<int>(c_.size()) - 1;
}

const TaylorSeries& DiffOp::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size()))
        throw DomainError("coefficient index out of range");
    return c_[static_cast<size_t>(k)];
}

TaylorSeries DiffOp::coeff_or_zero(int k) const {
    if (k >= 0 && k < static_cast<int>(c_.size())) return c_[static_cast<size_t>(k)];
    return TaylorSeries::constant(ExactScalar(0), min_coeff_validity(), base_);
}

int DiffOp::min_coeff_validity() const {
    int v = c_[0].valid_to();
    for (const auto& s : c_) v = std::min(v, s.valid_to());
    return v;
}

std::string DiffOp::str() const {
    std::string out;
    for (int k = static_cast<int>(c_.size()) - 1; k >= 0; --k) {
        if (c_[k].is_zero() && c_.size() > 1) continue;
        if (!out.empty()) out += " + ";
        out += "[" + c_[k].str() + "]";
        if (k >= 1) out += "*D" + (k > 1 ? "^" + std::to_string(k) : std::string());
    }
    return out;
}

DiffOp operator+(const DiffOp& a, const DiffOp& b) {
    require_same_base(a.coeff(0), b.coeff(0));
    const int top = std::max(static_cast<int>(a.is_zero() ? 0 : a.order()),
                             static_cast<int>(b.is_zero() ? 0 : b.order()));
    std::vector<TaylorSeries> c;
    c.reserve(static_cast<size_t>(top) + 1);
    for (int k = 0; k <= top; ++k) c.push_back(a.coeff_or_zero(k) + b.coeff_or_zero(k));
    return DiffOp(std::move(c));
}

DiffOp operator-(const DiffOp& a, const DiffOp& b) { return a + (-b); }

DiffOp operator-(const DiffOp& a) {
    std::vector<TaylorSeries> c;
    for (int k = 0; k <= (a.is_zero() ? 0 : a.order()); ++k) c.push_back(-a.coeff_or_zero(k));
    return DiffOp(std::move(c));
}

DiffOp operator*(const ExactScalar& s, const DiffOp& a) {
    std::vector<TaylorSeries> c;
    for (int k = 0; k <= (a.is_zero() ? 0 : a.order()); ++k) c.push_back(s * a.coeff_or_zero(k));
    return DiffOp(std::move(c));
}

DiffOp op_multiply(const DiffOp& p, const DiffOp& q) {
    require_same_base(p.coeff(0), q.coeff(0));
    if (p.is_zero() || q.is_zero())
        return DiffOp::zero(std::min(p.min_coeff_validity(), q.min_coeff_validity()),
                            p.base_point());
    const int m = p.order(), n = q.order();
    const int start_validity = std::min(p.min_coeff_validity(), q.min_coeff_validity());
    std::vector<TaylorSeries> out(
        static_cast<size_t>(m + n) + 1,
        TaylorSeries::constant(ExactScalar(0), start_validity, p.base_point()));
    for (int l = 0; l <= n; ++l) {
        if (q.coeff(l).is_zero()) continue;
        // successive derivatives of q's coefficient, consumed by D^k f
        TaylorSeries f = q.coeff(l);
        for (int i = 0; i <= m; ++i) {
            if (i > 0) {
                if (f.valid_to() < 1)
                    throw DomainError("insufficient series validity for operator product");
                f = derivative(f);
            }
            for (int k = i; k <= m; ++k) {
                if (p.coeff(k).is_zero()) continue;
                out[k - i + l] = out[k - i + l] + binom(k, i) * (p.coeff(k) * f);
            }
        }
    }
    return DiffOp(std::move(out));
}

DiffOp op_commutator(const DiffOp& p, const DiffOp& q) {
    return op_multiply(p, q) - op_multiply(q, p);
}

DiffOp op_pow(const DiffOp& p, int e) {
    if (e < 0) throw DomainError("negative operator power");
    DiffOp r = DiffOp::identity(p.min_coeff_validity(), p.base_point());
    for (int i = 0; i < e; ++i) r = op_multiply(r, p);
    return r;
}

DiffOp op_conjugate(const DiffOp& p, const TaylorSeries& zeta) {
    if (!zeta.is_invertible()) throw DomainError("conjugation needs an invertible gauge series");
    DiffOp zi = DiffOp::mul_op(invert(zeta));
    DiffOp z = DiffOp::mul_op(zeta);
    return op_multiply(zi, op_multiply(p, z));
}

DiffOp monicized(const DiffOp& p) {
    if (p.is_zero()) throw DomainError("cannot normalize the zero operator");
    const TaylorSeries& lead = p.coeff(p.order());
    if (!lead.is_invertible())
        throw DomainError("leading coefficient is not invertible at the base point");
    TaylorSeries li = invert(lead);
    std::vector<TaylorSeries> c;
    for (int k = 0; k <= p.order(); ++k) c.push_back(p.coeff(k) * li);
    return DiffOp(std::move(c));
}

TaylorSeries op_apply(const DiffOp& p, const TaylorSeries& s) {
    require_same_base(p.coeff(0), s);
    const int m = p.is_zero() ? 0 : p.order();
    if (s.valid_to() < m) throw DomainError("insufficient series validity for operator action");
    TaylorSeries acc = p.coeff_or_zero(0) * s;
    TaylorSeries ds = s;
    for (int k = 1; k <= m; ++k) {
        ds = derivative(ds);
        acc = acc + p.coeff(k) * ds;
    }
    return acc;
}

bool ops_equal_to_validity(const DiffOp& a, const DiffOp& b) {
    if (a.base_point() != b.base_point()) return false;
    const int top = std::max(a.is_zero() ? 0 : a.order(), b.is_zero() ? 0 : b.order());
    for (int k = 0; k <= top; ++k)
        if (!equal_to_validity(a.coeff_or_zero(k), b.coeff_or_zero(k))) return false;
    return true;
}

bool commutes_to_validity(const DiffOp& p, const DiffOp& q, int* n_eff) {
    DiffOp c = op_commutator(p, q);
    if (n_eff) *n_eff = c.min_coeff_validity();
    return c.is_zero();
}

OrderInfo op_order_and_degrees(const DiffOp& p) {
    OrderInfo info;
    if (p.is_zero()) {
        info.is_zero = true;
        return info;
    }
    info.order = p.order();
    info.leading_constant = p.coeff(info.order).is_constant();
    info.second_constant = info.order == 0 || p.coeff(info.order - 1).is_constant();
    return info;
}

GaugeData identity_gauge(int series_order, const ExactScalar& base) {
    std::vector<ExactScalar> id(static_cast<size_t>(series_order) + 1, ExactScalar(0));
    if (series_order >= 1) id[1] = ExactScalar(1);
    return GaugeData{TaylorSeries(std::move(id), base),
                     TaylorSeries::constant(ExactScalar(1), series_order, base)};
}

static void validate_gauge(const GaugeData& g) {
    if (!g.reparam.constant_term().is_zero())
        throw DomainError("reparametrization must fix the base point");
    if (g.reparam.valid_to() < 1 || g.reparam.coeff(1).is_zero())
        throw DomainError("reparametrization needs an invertible linear term");
    if (!g.gauge.is_invertible()) throw DomainError("gauge series must be invertible");
}

GaugeData inverse(const GaugeData& g) {
    validate_gauge(g);
    TaylorSeries rho = reverse(g.reparam);
    return GaugeData{rho, invert(compose(g.gauge.truncated(rho.valid_to()), rho))};
}

static bool is_identity_reparam(const TaylorSeries& xi) {
    if (!xi.constant_term().is_zero() || xi.coeff(1) != ExactScalar(1)) return false;
    for (int k = 2; k <= xi.valid_to(); ++k)
        if (!xi.coeff(k).is_zero()) return false;
    return true;
}

DiffOp transport_operator(const DiffOp& p, const GaugeData& g) {
    validate_gauge(g);
    DiffOp cur = p;
    if (!is_identity_reparam(g.reparam) && !p.is_zero()) {
        const int m = p.order();
        TaylorSeries w = invert(derivative(g.reparam)); // Delta = w D
        // peel off b_k Delta^k from the top; leading coefficient of Delta^k is w^k
        std::vector<DiffOp> delta_pow{DiffOp::identity(w.valid_to(), p.base_point())};
        DiffOp delta = op_multiply(DiffOp::mul_op(w), DiffOp::d(w.valid_to(), p.base_point()));
        for (int k = 1; k <= m; ++k) delta_pow.push_back(op_multiply(delta_pow.back(), delta));
        std::vector<TaylorSeries> b;
        DiffOp rem = p;
        for (int k = m; k >= 1; --k) {
            TaylorSeries bk = rem.coeff_or_zero(k) * invert(pow(w, k));
            b.push_back(bk);
            rem = rem - op_multiply(DiffOp::mul_op(bk), delta_pow[static_cast<size_t>(k)]);
        }
        b.push_back(rem.coeff_or_zero(0));
        std::reverse(b.begin(), b.end()); // now b[k] multiplies Delta^k
        TaylorSeries rho = reverse(g.reparam);
        std::vector<TaylorSeries> c;
        for (auto& bk : b) c.push_back(compose(bk.truncated(rho.valid_to()), rho));
        cur = DiffOp(std::move(c));
    }
    return op_conjugate(cur, g.gauge);
}

StandardForm op_standard_form(const DiffOp& p, const ExactScalar& root) {
    if (p.is_zero()) throw DomainError("cannot normalize the zero operator");
    const int m = p.order();
    const TaylorSeries& lead = p.coeff(m);
    if (!lead.is_invertible())
        throw DomainError("leading coefficient is not invertible at the base point");
    TaylorSeries chi = root_series(lead, root, m); // chi^m = leading coefficient
    TaylorSeries xi = antiderivative(invert(chi)); // xi' = chi^{-1}, xi(t0) = 0
    GaugeData reparam_only{xi, TaylorSeries::constant(ExactScalar(1), xi.valid_to(),
                                                      p.base_point())};
    DiffOp p1 = is_identity_reparam(xi) ? p : transport_operator(p, reparam_only);
    TaylorSeries eta = ExactScalar(1) / ExactScalar(m) * p1.coeff_or_zero(m - 1);
    TaylorSeries zeta = exp_series(-antiderivative(eta));
    DiffOp result = op_conjugate(p1, zeta);
    if (!result.coeff(m).is_constant() || !result.coeff(m).constant_term().is_one())
        throw DomainError("standard form: leading coefficient failed to normalize");
    if (m >= 1 && !result.coeff_or_zero(m - 1).is_zero())
        throw DomainError("standard form: second-highest coefficient failed to vanish");
    return StandardForm{result, GaugeData{xi, zeta}};
}

DiffOp gauge_shift(const DiffOp& p, const ExactScalar& zeta) {
    if (p.is_zero()) return p;
    const int m = p.order();
    std::vector<TaylorSeries> out(
        static_cast<size_t>(m) + 1,
        TaylorSeries::constant(ExactScalar(0), p.min_coeff_validity(), p.base_point()));
    for (int k = 0; k <= m; ++k) {
        if (p.coeff(k).is_zero()) continue;
        for (int j = 0; j <= k; ++j)
            out[j] = out[j] + (binom(k, j) * zeta.pow(k - j)) * p.coeff(k);
    }
    return DiffOp(std::move(out));
}

void BivarPoly::add_term(int i, int j, const ExactScalar& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(i, j);
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

int BivarPoly::weighted_degree() const {
    int d = -1;
    for (const auto& [ij, c] : terms) d = std::max(d, ij.first * weight_m + ij.second * weight_n);
    return d;
}

ExactScalar BivarPoly::coeff(int i, int j) const {
    auto it = terms.find({i, j});
    return it == terms.end() ? ExactScalar(0) : it->second;
}

ExactScalar BivarPoly::eval(const ExactScalar& lam, const ExactScalar& mu) const {
    ExactScalar acc(0);
    for (const auto& [ij, c] : terms) acc += c * lam.pow(ij.first) * mu.pow(ij.second);
    return acc;
}

ComplexFloat BivarPoly::eval(const ComplexFloat& lam, const ComplexFloat& mu) const {
    ComplexFloat acc(0.0, 0.0);
    for (const auto& [ij, c] : terms) {
        ComplexFloat t = c.to_complex();
        for (int i = 0; i < ij.first; ++i) t *= lam;
        for (int j = 0; j < ij.second; ++j) t *= mu;
        acc += t;
    }
    return acc;
}

std::string BivarPoly::str() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [ij, c] : terms) {
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ")";
        if (ij.first) out += "*L^" + std::to_string(ij.first);
        if (ij.second) out += "*M^" + std::to_string(ij.second);
    }
    return out;
}

DiffOp op_poly_eval(const BivarPoly& f, const DiffOp& p, const DiffOp& q) {
    int n_eff = 0;
    if (!commutes_to_validity(p, q, &n_eff))
        throw NonCommutingError("operator pair does not commute to validity order " +
                                std::to_string(n_eff));
    int max_i = 0, max_j = 0;
    for (const auto& [ij, c] : f.terms) {
        max_i = std::max(max_i, ij.first);
        max_j = std::max(max_j, ij.second);
    }
    std::vector<DiffOp> ppow{DiffOp::identity(p.min_coeff_validity(), p.base_point())};
    for (int i = 1; i <= max_i; ++i) ppow.push_back(op_multiply(ppow.back(), p));
    std::vector<DiffOp> qpow{DiffOp::identity(q.min_coeff_validity(), q.base_point())};
    for (int j = 1; j <= max_j; ++j) qpow.push_back(op_multiply(qpow.back(), q));
    DiffOp acc = DiffOp::zero(std::min(p.min_coeff_validity(), q.min_coeff_validity()),
                              p.base_point());
    for (const auto& [ij, c] : f.terms)
        acc = acc + c * op_multiply(ppow[static_cast<size_t>(ij.first)],
                                    qpow[static_cast<size_t>(ij.second)]);
    return acc;
}

} // namespace odospec
