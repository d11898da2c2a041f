#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace subord {

using cplx = std::complex<double>;

/// Truncated complex power series c_0 + c_1 z + ... + c_N z^N with explicit
/// degree N. All arithmetic truncates silently; results record the degree
/// they were computed to.
class Series {
public:
    Series() : coeffs_(1, cplx(0.0, 0.0)) {}
    explicit Series(std::vector<cplx> coeffs);

    static Series zero(int degree = 0);
    static Series constant(cplx c, int degree = 0);
    static Series identity(int degree = 1);   // the series "z"

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<cplx>& coefficients() const { return coeffs_; }
    cplx coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : cplx(0.0);
    }
    void set_coeff(int k, cplx v);
    Series truncated(int degree) const;   // pads with zeros or drops the tail

    cplx evaluate(cplx z) const;          // Horner; callers stay in |z| <= 1
    Series derivative() const;

    Series& operator+=(const Series& rhs);
    Series& operator-=(const Series& rhs);
    Series& operator*=(cplx s);

private:
    std::vector<cplx> coeffs_;
};

Series operator+(Series lhs, const Series& rhs);
Series operator-(Series lhs, const Series& rhs);
Series operator*(Series lhs, cplx s);
Series operator*(cplx s, Series rhs);

/// Product truncated to `degree` (default: max of the operand degrees).
Series multiply(const Series& a, const Series& b, int degree = -1);

/// Composition outer(inner); requires inner(0) = 0. Correct to `degree`
/// (default: max of the operand degrees).
Series compose(const Series& outer, const Series& inner, int degree = -1);

/// Quotient num/den with den(0) != 0, truncated to `degree`.
Series divide(const Series& num, const Series& den, int degree = -1);

/// Square root with r(0) = 1; requires s(0) = 1 (principal branch anchor).
Series sqrt_series(const Series& s);

/// exp of a series, same degree.
Series exp_series(const Series& s);

/// (p(z), p'(z), p''(z)) in a single Horner pass.
std::array<cplx, 3> evaluate_jet2(const Series& p, cplx z);

/// The triple (p(z), z p'(z), z^2 p''(z)).
std::tuple<cplx, cplx, cplx> orbit(const Series& p, cplx z);

/// Membership data for H_beta[a, n]: p = a + beta z^n + p_{n+1} z^{n+1} + ...
struct FixedClassSpec {
    cplx a;
    int n = 1;
    double beta = 0.0;

    void validate() const {
        if (n < 1) throw std::invalid_argument("FixedClassSpec: n must be >= 1");
        if (!(beta >= 0.0)) throw std::invalid_argument("FixedClassSpec: beta must be >= 0");
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
            throw std::invalid_argument("FixedClassSpec: a must be finite");
    }
};

/// Builds a + beta z^n + tail_1 z^{n+1} + ... The tail supplies indices n+1
/// onward only; coefficients below n+1 are fixed by the class.
Series make_member(const FixedClassSpec& spec, const std::vector<cplx>& tail,
                   int degree = -1);

}  // namespace subord
