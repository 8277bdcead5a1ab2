#include "odospec/poly.hpp"

#include <algorithm>

#include "odospec/errors.hpp"

namespace odospec {

ScalarPoly ScalarPoly::monomial(int k, const ExactScalar& v) {
    if (k < 0) throw DomainError("negative monomial degree");
    std::vector<ExactScalar> c(static_cast<size_t>(k) + 1, ExactScalar(0));
    c[static_cast<size_t>(k)] = v;
    return ScalarPoly(std::move(c));
}

ExactScalar ScalarPoly::eval(const ExactScalar& x) const {
    ExactScalar acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

ComplexFloat ScalarPoly::eval(const ComplexFloat& x) const {
    ComplexFloat acc(0.0, 0.0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_complex();
    return acc;
}

ScalarPoly ScalarPoly::derivative() const {
    if (c_.size() <= 1) return ScalarPoly();
    std::vector<ExactScalar> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = ExactScalar(static_cast<long long>(k)) * c_[k];
    return ScalarPoly(std::move(d));
}

ScalarPoly ScalarPoly::conj() const {
    std::vector<ExactScalar> d(c_.size());
    for (size_t k = 0; k < c_.size(); ++k) d[k] = c_[k].conj();
    return ScalarPoly(std::move(d));
}

ScalarPoly ScalarPoly::monic() const {
    if (is_zero()) return *this;
    ExactScalar inv = c_.back().inverse();
    return inv * *this;
}

ScalarPoly operator+(const ScalarPoly& a, const ScalarPoly& b) {
    std::vector<ExactScalar> c(std::max(a.c_.size(), b.c_.size()), ExactScalar(0));
    for (size_t k = 0; k < c.size(); ++k) c[k] = a.at(static_cast<int>(k)) + b.at(static_cast<int>(k));
    return ScalarPoly(std::move(c));
}

ScalarPoly operator-(const ScalarPoly& a, const ScalarPoly& b) {
    std::vector<ExactScalar> c(std::max(a.c_.size(), b.c_.size()), ExactScalar(0));
    for (size_t k = 0; k < c.size(); ++k) c[k] = a.at(static_cast<int>(k)) - b.at(static_cast<int>(k));
    return ScalarPoly(std::move(c));
}

ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b) {
    if (a.is_zero() || b.is_zero()) return ScalarPoly();
    std::vector<ExactScalar> c(a.c_.size() + b.c_.size() - 1, ExactScalar(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return ScalarPoly(std::move(c));
}

ScalarPoly operator*(const ExactScalar& s, const ScalarPoly& a) {
    std::vector<ExactScalar> c(a.c_.size());
    for (size_t k = 0; k < a.c_.size(); ++k) c[k] = s * a.c_[k];
    return ScalarPoly(std::move(c));
}

std::string ScalarPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = 0; k <= degree(); ++k) {
        if (c_[static_cast<size_t>(k)].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + c_[static_cast<size_t>(k)].str() + ")";
        if (k >= 1) out += "*" + var + (k > 1 ? "^" + std::to_string(k) : "");
    }
    return out;
}

std::pair<ScalarPoly, ScalarPoly> divmod(const ScalarPoly& a, const ScalarPoly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<ExactScalar> rem(a.coeffs());
    const int db = b.degree();
    if (a.degree() < db) return {ScalarPoly(), a};
    std::vector<ExactScalar> quo(static_cast<size_t>(a.degree() - db) + 1, ExactScalar(0));
    const ExactScalar lead_inv = b.at(db).inverse();
    for (int k = a.degree(); k >= db; --k) {
        ExactScalar q = rem[static_cast<size_t>(k)] * lead_inv;
        if (q.is_zero()) continue;
        quo[static_cast<size_t>(k - db)] = q;
        for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(k - db + j)] -= q * b.at(j);
    }
    return {ScalarPoly(std::move(quo)), ScalarPoly(std::move(rem))};
}

ScalarPoly gcd(const ScalarPoly& a, const ScalarPoly& b) {
    ScalarPoly x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = divmod(x, y);
        (void)q;
        x = y;
        y = r;
    }
    return x.monic();
}

ScalarPoly squarefree_part(const ScalarPoly& a) {
    if (a.degree() <= 0) return a.monic();
    ScalarPoly g = gcd(a, a.derivative());
    if (g.degree() <= 0) return a.monic();
    auto [q, r] = divmod(a, g);
    if (!r.is_zero()) throw DomainError("squarefree decomposition failed"); // unreachable
    return q.monic();
}

ExactScalar exact_det(std::vector<std::vector<ExactScalar>> m) {
    const size_t n = m.size();
    ExactScalar det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) return ExactScalar(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        ExactScalar inv = m[col][col].inverse();
        for (size_t row = col + 1; row < n; ++row) {
            if (m[row][col].is_zero()) continue;
            ExactScalar f = m[row][col] * inv;
            for (size_t j = col; j < n; ++j) m[row][j] -= f * m[col][j];
        }
    }
    return det;
}

static ScalarPoly lagrange_interpolate(const std::vector<ExactScalar>& xs,
                                       const std::vector<ExactScalar>& ys) {
    ScalarPoly acc;
    for (size_t i = 0; i < xs.size(); ++i) {
        ScalarPoly basis = ScalarPoly::constant(ExactScalar(1));
        ExactScalar denom(1);
        for (size_t j = 0; j < xs.size(); ++j) {
            if (i == j) continue;
            basis = basis * ScalarPoly({-xs[j], ExactScalar(1)});
            denom *= xs[i] - xs[j];
        }
        acc = acc + (ys[i] / denom) * basis;
    }
    return acc;
}

ScalarPoly resultant_mu(const MuPoly& f, const MuPoly& g) {
    const int df = static_cast<int>(f.size()) - 1;
    const int dg = static_cast<int>(g.size()) - 1;
    if (df < 0 || dg < 0) throw DomainError("resultant of the zero polynomial");
    if (df == 0 && dg == 0) return ScalarPoly::constant(ExactScalar(1));
    int max_lam = 0;
    for (const auto& p : f) max_lam = std::max(max_lam, std::max(p.degree(), 0));
    for (const auto& p : g) max_lam = std::max(max_lam, std::max(p.degree(), 0));
    const int bound = max_lam * (df + dg); // degree bound for the Sylvester determinant
    const size_t n = static_cast<size_t>(df + dg);
    std::vector<ExactScalar> xs, ys;
    for (int s = 0; s <= bound; ++s) {
        ExactScalar x(s);
        std::vector<std::vector<ExactScalar>> syl(n, std::vector<ExactScalar>(n, ExactScalar(0)));
        for (int row = 0; row < dg; ++row)
            for (int k = 0; k <= df; ++k)
                syl[static_cast<size_t>(row)][static_cast<size_t>(row + k)] =
                    f[static_cast<size_t>(df - k)].eval(x);
        for (int row = 0; row < df; ++row)
            for (int k = 0; k <= dg; ++k)
                syl[static_cast<size_t>(dg + row)][static_cast<size_t>(row + k)] =
                    g[static_cast<size_t>(dg - k)].eval(x);
        xs.push_back(x);
        ys.push_back(exact_det(std::move(syl)));
    }
    return lagrange_interpolate(xs, ys);
}

} // namespace odospec
