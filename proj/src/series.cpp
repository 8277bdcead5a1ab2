#include "odospec/series.hpp"

#include <algorithm>

namespace odospec {

TaylorSeries::TaylorSeries(std::vector<ExactScalar> coeffs, ExactScalar base)
    : c_(std::move(coeffs)), base_(std::move(base)) {
    if (c_.empty()) throw DomainError("series needs at least the constant term");
}

TaylorSeries TaylorSeries::constant(const ExactScalar& value, int order, const ExactScalar& base) {
    if (order < 0) throw DomainError("negative truncation order");
    std::vector<ExactScalar> c(static_cast<size_t>(order) + 1, ExactScalar(0));
    c[0] = value;
    return TaylorSeries(std::move(c), base);
}

TaylorSeries TaylorSeries::variable(int order, const ExactScalar& base) {
    if (order < 0) throw DomainError("negative truncation order");
    std::vector<ExactScalar> c(static_cast<size_t>(order) + 1, ExactScalar(0));
    c[0] = base;
    if (order >= 1) c[1] = ExactScalar(1);
    return TaylorSeries(std::move(c), base);
}

TaylorSeries TaylorSeries::polynomial(const std::vector<ExactScalar>& p, int order,
                                      const ExactScalar& base) {
    // Horner in (base + tau), carried out on raw truncated vectors.
    TaylorSeries t = variable(order, base);
    TaylorSeries acc = constant(ExactScalar(0), order, base);
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        acc = acc * t + constant(*it, order, base);
    return acc;
}

const ExactScalar& TaylorSeries::coeff(int k) const {
    if (k < 0 || k > valid_to())
        throw DomainError("series coefficient index " + std::to_string(k) +
                          " beyond validity order " + std::to_string(valid_to()));
    return c_[static_cast<size_t>(k)];
}

bool TaylorSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const ExactScalar& x) { return x.is_zero(); });
}

bool TaylorSeries::is_constant() const {
    return std::all_of(c_.begin() + 1, c_.end(), [](const ExactScalar& x) { return x.is_zero(); });
}

TaylorSeries TaylorSeries::truncated(int new_valid_to) const {
    if (new_valid_to < 0) throw DomainError("negative truncation order");
    if (new_valid_to >= valid_to()) return *this;
    return TaylorSeries(std::vector<ExactScalar>(c_.begin(), c_.begin() + new_valid_to + 1), base_);
}

std::string TaylorSeries::str(const std::string& var) const {
    std::string out;
    for (int k = 0; k <= valid_to(); ++k) {
        if (coeff(k).is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + coeff(k).str() + ")";
        if (k >= 1) out += "*" + var + (k > 1 ? "^" + std::to_string(k) : "");
    }
    if (out.empty()) out = "0";
    out += " + O(" + var + "^" + std::to_string(valid_to() + 1) + ")";
    return out;
}

void require_same_base(const TaylorSeries& a, const TaylorSeries& b) {
    if (a.base_point() != b.base_point())
        throw DomainError("mismatched base points: " + a.base_point().str() + " vs " +
                          b.base_point().str());
}

static int shared_order(const TaylorSeries& a, const TaylorSeries& b) {
    return std::min(a.valid_to(), b.valid_to());
}

TaylorSeries operator+(const TaylorSeries& a, const TaylorSeries& b) {
    require_same_base(a, b);
    const int n = shared_order(a, b);
    std::vector<ExactScalar> c(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[k] = a.coeff(k) + b.coeff(k);
    return TaylorSeries(std::move(c), a.base_point());
}

TaylorSeries operator-(const TaylorSeries& a, const TaylorSeries& b) {
    require_same_base(a, b);
    const int n = shared_order(a, b);
    std::vector<ExactScalar> c(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[k] = a.coeff(k) - b.coeff(k);
    return TaylorSeries(std::move(c), a.base_point());
}

TaylorSeries operator-(const TaylorSeries& a) {
    std::vector<ExactScalar> c(static_cast<size_t>(a.valid_to()) + 1);
    for (int k = 0; k <= a.valid_to(); ++k) c[k] = -a.coeff(k);
    return TaylorSeries(std::move(c), a.base_point());
}

TaylorSeries operator*(const TaylorSeries& a, const TaylorSeries& b) {
    require_same_base(a, b);
    const int n = shared_order(a, b);
    std::vector<ExactScalar> c(static_cast<size_t>(n) + 1, ExactScalar(0));
    for (int i = 0; i <= n; ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b.coeff(j).is_zero()) continue;
            c[i + j] += a.coeff(i) * b.coeff(j);
        }
    }
    return TaylorSeries(std::move(c), a.base_point());
}

TaylorSeries operator*(const ExactScalar& s, const TaylorSeries& a) {
    std::vector<ExactScalar> c(static_cast<size_t>(a.valid_to()) + 1);
    for (int k = 0; k <= a.valid_to(); ++k) c[k] = s * a.coeff(k);
    return TaylorSeries(std::move(c), a.base_point());
}

TaylorSeries derivative(const TaylorSeries& a) {
    if (a.valid_to() < 1)
        throw DomainError("cannot certify any derivative coefficient of a validity-0 series");
    std::vector<ExactScalar> c(static_cast<size_t>(a.valid_to()));
    for (int k = 1; k <= a.valid_to(); ++k) c[k - 1] = ExactScalar(k) * a.coeff(k);
    return TaylorSeries(std::move(c), a.base_point());
}

TaylorSeries antiderivative(const TaylorSeries& a) {
    std::vector<ExactScalar> c(static_cast<size_t>(a.valid_to()) + 2, ExactScalar(0));
    for (int k = 0; k <= a.valid_to(); ++k)
        c[k + 1] = a.coeff(k) / ExactScalar(k + 1);
    return TaylorSeries(std::move(c), a.base_point());
}

TaylorSeries invert(const TaylorSeries& a) {
    if (!a.is_invertible()) throw DomainError("series with zero constant term is not invertible");
    const int n = a.valid_to();
    std::vector<ExactScalar> b(static_cast<size_t>(n) + 1);
    const ExactScalar inv0 = a.coeff(0).inverse();
    b[0] = inv0;
    for (int k = 1; k <= n; ++k) {
        ExactScalar s(0);
        for (int j = 1; j <= k; ++j) s += a.coeff(j) * b[k - j];
        b[k] = -inv0 * s;
    }
    return TaylorSeries(std::move(b), a.base_point());
}

TaylorSeries operator/(const TaylorSeries& a, const TaylorSeries& b) { return a * invert(b); }

TaylorSeries compose(const TaylorSeries& f, const TaylorSeries& g) {
    if (!g.constant_term().is_zero())
        throw DomainError("composition needs an inner series with zero constant term");
    const int n = shared_order(f, g);
    TaylorSeries gt = g.truncated(n);
    TaylorSeries acc = TaylorSeries::constant(ExactScalar(0), n, g.base_point());
    for (int k = n; k >= 0; --k)
        acc = acc * gt + TaylorSeries::constant(f.coeff(k), n, g.base_point());
    return acc;
}

static TaylorSeries zero_padded(const TaylorSeries& a, int order) {
    if (order <= a.valid_to()) return a.truncated(order);
    std::vector<ExactScalar> c(static_cast<size_t>(order) + 1, ExactScalar(0));
    for (int k = 0; k <= a.valid_to(); ++k) c[k] = a.coeff(k);
    return TaylorSeries(std::move(c), a.base_point());
}

static TaylorSeries identity_tau(int order, const ExactScalar& base) {
    std::vector<ExactScalar> c(static_cast<size_t>(order) + 1, ExactScalar(0));
    if (order >= 1) c[1] = ExactScalar(1);
    return TaylorSeries(std::move(c), base);
}

TaylorSeries reverse(const TaylorSeries& g) {
    if (!g.constant_term().is_zero())
        throw DomainError("reversion needs a series with zero constant term");
    const int n = g.valid_to();
    if (n < 1 || g.coeff(1).is_zero())
        throw DomainError("reversion needs an invertible linear coefficient");
    TaylorSeries h({ExactScalar(0), g.coeff(1).inverse()}, g.base_point());
    if (n == 1) return h;
    const TaylorSeries gd = derivative(g); // validity n-1
    // Newton with order doubling: h <- h - (g(h) - tau)/g'(h). The defect has
    // valuation >= 2 throughout, so the quotient is correct one order beyond
    // the validity of g'(h).
    while (h.valid_to() < n) {
        const int p = std::min(2 * h.valid_to(), n);
        const int q = std::min(p, n - 1);
        TaylorSeries hp = zero_padded(h, p);
        TaylorSeries defect = compose(g.truncated(p), hp) - identity_tau(p, g.base_point());
        TaylorSeries slope = zero_padded(compose(gd.truncated(q), hp.truncated(q)), p);
        h = hp - defect * invert(slope);
    }
    return h;
}

TaylorSeries exp_series(const TaylorSeries& a) {
    if (!a.constant_term().is_zero())
        throw DomainError("exp of a series with non-zero constant term has no exact evaluation");
    const int n = a.valid_to();
    std::vector<ExactScalar> e(static_cast<size_t>(n) + 1, ExactScalar(0));
    e[0] = ExactScalar(1);
    for (int k = 1; k <= n; ++k) {
        ExactScalar s(0);
        for (int j = 1; j <= k; ++j) s += ExactScalar(j) * a.coeff(j) * e[k - j];
        e[k] = s / ExactScalar(k);
    }
    return TaylorSeries(std::move(e), a.base_point());
}

static std::pair<TaylorSeries, TaylorSeries> sin_cos_series(const TaylorSeries& a) {
    if (!a.constant_term().is_zero())
        throw DomainError("sin/cos of a series with non-zero constant term has no exact evaluation");
    const int n = a.valid_to();
    std::vector<ExactScalar> s(static_cast<size_t>(n) + 1, ExactScalar(0));
    std::vector<ExactScalar> c(static_cast<size_t>(n) + 1, ExactScalar(0));
    c[0] = ExactScalar(1);
    for (int k = 1; k <= n; ++k) {
        ExactScalar ds(0), dc(0);
        for (int j = 1; j <= k; ++j) {
            ds += ExactScalar(j) * a.coeff(j) * c[k - j];
            dc += ExactScalar(j) * a.coeff(j) * s[k - j];
        }
        s[k] = ds / ExactScalar(k);
        c[k] = -dc / ExactScalar(k);
    }
    return {TaylorSeries(std::move(s), a.base_point()), TaylorSeries(std::move(c), a.base_point())};
}

TaylorSeries sin_series(const TaylorSeries& a) { return sin_cos_series(a).first; }
TaylorSeries cos_series(const TaylorSeries& a) { return sin_cos_series(a).second; }

TaylorSeries root_series(const TaylorSeries& a, const ExactScalar& root_of_constant, int m) {
    if (m <= 0) throw DomainError("root index must be positive");
    if (!a.is_invertible()) throw DomainError("m-th root needs an invertible series");
    if (root_of_constant.pow(m) != a.constant_term())
        throw DomainError("supplied scalar is not an exact " + std::to_string(m) +
                          "-th root of the constant term");
    // a = c0*(1+u), root = r*(1+u)^(1/m) via the binomial recurrence
    // k f_k = sum_{j=1..k} (alpha*j - (k-j)) u_j f_{k-j}, alpha = 1/m.
    const int n = a.valid_to();
    const ExactScalar inv0 = a.constant_term().inverse();
    std::vector<ExactScalar> u(static_cast<size_t>(n) + 1, ExactScalar(0));
    for (int k = 1; k <= n; ++k) u[k] = a.coeff(k) * inv0;
    const ExactScalar alpha = ExactScalar(1) / ExactScalar(m);
    std::vector<ExactScalar> f(static_cast<size_t>(n) + 1, ExactScalar(0));
    f[0] = ExactScalar(1);
    for (int k = 1; k <= n; ++k) {
        ExactScalar s(0);
        for (int j = 1; j <= k; ++j)
            s += (alpha * ExactScalar(j) - ExactScalar(k - j)) * u[j] * f[k - j];
        f[k] = s / ExactScalar(k);
    }
    for (auto& x : f) x *= root_of_constant;
    return TaylorSeries(std::move(f), a.base_point());
}

TaylorSeries pow(const TaylorSeries& a, int e) {
    if (e < 0) return pow(invert(a), -e);
    TaylorSeries r = TaylorSeries::constant(ExactScalar(1), a.valid_to(), a.base_point());
    TaylorSeries b = a;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool equal_to_validity(const TaylorSeries& a, const TaylorSeries& b) {
    if (a.base_point() != b.base_point()) return false;
    const int n = shared_order(a, b);
    for (int k = 0; k <= n; ++k)
        if (a.coeff(k) != b.coeff(k)) return false;
    return true;
}

} // namespace odospec
