#include "subord/series.hpp"

#include <algorithm>
#include <cmath>

namespace subord {

namespace {

void check_finite(const std::vector<cplx>& coeffs) {
    for (const cplx& c : coeffs) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw std::invalid_argument("Series: non-finite coefficient");
    }
}

}  // namespace

Series::Series(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.assign(1, cplx(0.0));
    check_finite(coeffs_);
}

Series Series::zero(int degree) {
    Series s;
    s.coeffs_.assign(static_cast<size_t>(std::max(degree, 0)) + 1, cplx(0.0));
    return s;
}

Series Series::constant(cplx c, int degree) {
    Series s = zero(degree);
    s.coeffs_[0] = c;
    return s;
}

Series Series::identity(int degree) {
    Series s = zero(std::max(degree, 1));
    s.coeffs_[1] = cplx(1.0);
    return s;
}

void Series::set_coeff(int k, cplx v) {
    if (k < 0) throw std::invalid_argument("Series: negative index");
    if (k >= static_cast<int>(coeffs_.size())) coeffs_.resize(static_cast<size_t>(k) + 1, cplx(0.0));
    coeffs_[static_cast<size_t>(k)] = v;
}

Series Series::truncated(int degree) const {
    if (degree < 0) throw std::invalid_argument("Series: negative degree");
    std::vector<cplx> c(static_cast<size_t>(degree) + 1, cplx(0.0));
    const size_t n = std::min(c.size(), coeffs_.size());
    std::copy(coeffs_.begin(), coeffs_.begin() + static_cast<long>(n), c.begin());
    return Series(std::move(c));
}

cplx Series::evaluate(cplx z) const {
    cplx acc(0.0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Series Series::derivative() const {
    if (coeffs_.size() == 1) return Series::zero(0);
    std::vector<cplx> d(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<double>(k);
    return Series(std::move(d));
}

Series& Series::operator+=(const Series& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), cplx(0.0));
    for (size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    return *this;
}

Series& Series::operator-=(const Series& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), cplx(0.0));
    for (size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    return *this;
}

Series& Series::operator*=(cplx s) {
    for (cplx& c : coeffs_) c *= s;
    return *this;
}

Series operator+(Series lhs, const Series& rhs) { return lhs += rhs; }
Series operator-(Series lhs, const Series& rhs) { return lhs -= rhs; }
Series operator*(Series lhs, cplx s) { return lhs *= s; }
Series operator*(cplx s, Series rhs) { return rhs *= s; }

Series multiply(const Series& a, const Series& b, int degree) {
    if (degree < 0) degree = std::max(a.degree(), b.degree());
    std::vector<cplx> c(static_cast<size_t>(degree) + 1, cplx(0.0));
    const int da = std::min(a.degree(), degree);
    for (int i = 0; i <= da; ++i) {
        const cplx ai = a.coeff(i);
        if (ai == cplx(0.0)) continue;
        const int jmax = std::min(b.degree(), degree - i);
        for (int j = 0; j <= jmax; ++j) c[static_cast<size_t>(i + j)] += ai * b.coeff(j);
    }
    return Series(std::move(c));
}

Series compose(const Series& outer, const Series& inner, int degree) {
    if (std::abs(inner.coeff(0)) != 0.0)
        throw std::invalid_argument("compose: inner series must vanish at 0");
    if (degree < 0) degree = std::max(outer.degree(), inner.degree());
    // Horner over the outer coefficients; every intermediate truncated.
    Series acc = Series::constant(outer.coeff(outer.degree()), 0);
    for (int k = outer.degree() - 1; k >= 0; --k) {
        acc = multiply(acc, inner, degree);
        acc += Series::constant(outer.coeff(k), 0);
    }
    return acc.truncated(degree);
}

Series divide(const Series& num, const Series& den, int degree) {
    const cplx d0 = den.coeff(0);
    if (std::abs(d0) == 0.0)
        throw std::invalid_argument("divide: denominator vanishes at 0");
    if (degree < 0) degree = std::max(num.degree(), den.degree());
    std::vector<cplx> q(static_cast<size_t>(degree) + 1, cplx(0.0));
    for (int k = 0; k <= degree; ++k) {
        cplx s = num.coeff(k);
        for (int j = 1; j <= std::min(k, den.degree()); ++j)
            s -= den.coeff(j) * q[static_cast<size_t>(k - j)];
        q[static_cast<size_t>(k)] = s / d0;
    }
    return Series(std::move(q));
}

Series sqrt_series(const Series& s) {
    if (std::abs(s.coeff(0) - cplx(1.0)) > 1e-14)
        throw std::invalid_argument("sqrt_series: constant term must be 1");
    const int N = s.degree();
    std::vector<cplx> r(static_cast<size_t>(N) + 1, cplx(0.0));
    r[0] = cplx(1.0);
    for (int k = 1; k <= N; ++k) {
        cplx acc = s.coeff(k);
        for (int j = 1; j < k; ++j) acc -= r[static_cast<size_t>(j)] * r[static_cast<size_t>(k - j)];
        r[static_cast<size_t>(k)] = acc / 2.0;
    }
    return Series(std::move(r));
}

Series exp_series(const Series& s) {
    const int N = s.degree();
    std::vector<cplx> r(static_cast<size_t>(N) + 1, cplx(0.0));
    r[0] = std::exp(s.coeff(0));
    for (int k = 1; k <= N; ++k) {
        cplx acc(0.0);
        for (int j = 1; j <= k; ++j)
            acc += static_cast<double>(j) * s.coeff(j) * r[static_cast<size_t>(k - j)];
        r[static_cast<size_t>(k)] = acc / static_cast<double>(k);
    }
    return Series(std::move(r));
}

std::array<cplx, 3> evaluate_jet2(const Series& p, cplx z) {
    const auto& c = p.coefficients();
    cplx v = c.back(), d1(0.0), d2(0.0);
    for (size_t k = c.size() - 1; k-- > 0;) {
        d2 = d2 * z + d1;
        d1 = d1 * z + v;
        v = v * z + c[k];
    }
    return {v, d1, 2.0 * d2};
}

std::tuple<cplx, cplx, cplx> orbit(const Series& p, cplx z) {
    const auto jet = evaluate_jet2(p, z);
    return {jet[0], z * jet[1], z * z * jet[2]};
}

Series make_member(const FixedClassSpec& spec, const std::vector<cplx>& tail, int degree) {
    spec.validate();
    const int natural = spec.n + static_cast<int>(tail.size());
    if (degree < 0) degree = natural;
    if (degree < natural)
        throw std::invalid_argument("make_member: requested degree drops tail coefficients");
    Series p = Series::zero(degree);
    p.set_coeff(0, spec.a);
    p.set_coeff(spec.n, cplx(spec.beta));
    for (size_t k = 0; k < tail.size(); ++k)
        p.set_coeff(spec.n + 1 + static_cast<int>(k), tail[k]);
    return p;
}

}  // namespace subord
