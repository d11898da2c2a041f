#include "subord/contact.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace subord {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;

int leading_index(const Series& g) {
    double top = 0.0;
    for (int k = 0; k <= g.degree(); ++k) top = std::max(top, std::abs(g.coeff(k)));
    if (top == 0.0) throw std::invalid_argument("contact: series is identically zero");
    if (std::abs(g.coeff(0)) > 1e-12 * top)
        throw std::invalid_argument("contact: series must vanish at 0");
    for (int k = 1; k <= g.degree(); ++k)
        if (std::abs(g.coeff(k)) > 1e-13 * top) return k;
    throw std::invalid_argument("contact: series is numerically zero");
}

bool im_small(cplx v, double rel) { return std::abs(v.imag()) <= rel * (1.0 + std::abs(v)); }

}  // namespace

double schwarz_bound(double a1_mag, double r) {
    if (!(a1_mag >= 0.0 && a1_mag <= 1.0))
        throw std::invalid_argument("schwarz_bound: |a1| must lie in [0,1]");
    if (!(r >= 0.0 && r <= 1.0))
        throw std::invalid_argument("schwarz_bound: r must lie in [0,1]");
    return r * (r + a1_mag) / (1.0 + a1_mag * r);
}

Series schwarz_extremal(cplx a1, double t, int degree) {
    if (std::abs(a1) > 1.0 + 1e-14)
        throw std::invalid_argument("schwarz_extremal: requires |a1| <= 1");
    const cplx eit = std::polar(1.0, t);
    Series num = Series::zero(degree);
    num.set_coeff(1, a1);
    num.set_coeff(2, cplx(1.0) / eit);
    Series den = Series::zero(degree);
    den.set_coeff(0, cplx(1.0));
    den.set_coeff(1, std::conj(a1) / eit);
    return divide(num, den, degree);
}

double m_lower_bound(int n, double qprime0_mag, double beta, double r0) {
    if (n < 1) throw std::invalid_argument("m_lower_bound: n must be >= 1");
    if (!(qprime0_mag > 0.0))
        throw std::invalid_argument("m_lower_bound: |q'(0)| must be positive");
    if (!(beta >= 0.0)) throw std::invalid_argument("m_lower_bound: beta must be >= 0");
    if (beta > qprime0_mag)
        throw std::invalid_argument("m_lower_bound: requires beta <= |q'(0)|");
    if (!(r0 > 0.0 && r0 <= 1.0))
        throw std::invalid_argument("m_lower_bound: r0 must lie in (0,1]");
    const double s = beta * std::pow(r0, n);
    return n + (qprime0_mag - s) / (qprime0_mag + s);
}

cplx SchwarzSample::eval(cplx z) const {
    const cplx zh = z * h.evaluate(z);
    return z * (c + zh) / (cplx(1.0) + std::conj(c) * zh);
}

ContactReport verify_interior_max(const Series& g, cplx z0, const ContactTolerances& tol) {
    const int n = leading_index(g);
    const double r0 = std::abs(z0);
    const cplx gz = g.evaluate(z0);
    const Series dg = g.derivative();
    const cplx dgz = dg.evaluate(z0);
    if (std::abs(gz) == 0.0 || std::abs(dgz) == 0.0)
        throw std::domain_error("verify_interior_max: degenerate contact (g or g' vanishes at z0)");

    ContactReport rep;
    rep.z0 = z0;
    const cplx m = z0 * dgz / gz;
    rep.m = m.real();
    rep.im_m = m.imag();
    const double gn = std::abs(g.coeff(n)) * std::pow(r0, n);
    rep.m_lower = n + (std::abs(gz) - gn) / (std::abs(gz) + gn);
    rep.curvature_lhs = (z0 * dg.derivative().evaluate(z0) / dgz + cplx(1.0)).real();
    rep.curvature_rhs = rep.m;
    rep.pass = im_small(m, tol.im_rel) && rep.m >= rep.m_lower - tol.slack &&
               rep.curvature_lhs >= rep.curvature_rhs - tol.slack;
    return rep;
}

ContactReport verify_boundary_contact(const Series& p, const FixedClassSpec& spec,
                                      const CanonicalMap& q, cplx z0,
                                      const ContactTolerances& tol) {
    spec.validate();
    const cplx pz = p.evaluate(z0);
    const cplx zeta0 = q.invert(pz);
    if (std::abs(std::abs(zeta0) - 1.0) > tol.zeta_boundary)
        throw std::domain_error("verify_boundary_contact: p(z0) is not on the image boundary");

    const Series dp = p.derivative();
    auto [q1, q2] = q.derivatives(zeta0);
    if (std::abs(q1) == 0.0)
        throw std::domain_error("verify_boundary_contact: q'(zeta0) vanishes");

    ContactReport rep;
    rep.z0 = z0;
    rep.zeta0 = zeta0;
    const cplx m = z0 * dp.evaluate(z0) / (zeta0 * q1);
    rep.m = m.real();
    rep.im_m = m.imag();
    // Computed inline rather than through m_lower_bound: the bound stays
    // valid (with a negative numerator) when beta exceeds |q'(0)|.
    {
        const double s = spec.beta * std::pow(std::abs(z0), spec.n);
        rep.m_lower = spec.n + (q.qprime0_mag() - s) / (q.qprime0_mag() + s);
    }
    const cplx dpz = dp.evaluate(z0);
    rep.curvature_lhs = (cplx(1.0) + z0 * dp.derivative().evaluate(z0) / dpz).real();
    rep.curvature_rhs = rep.m * (cplx(1.0) + zeta0 * q2 / q1).real();
    rep.pass = im_small(m, tol.im_rel) && rep.m >= rep.m_lower - tol.slack &&
               rep.curvature_lhs >= rep.curvature_rhs - tol.slack;
    return rep;
}

ContactReport verify_max_modulus_growth(const Series& p, const FixedClassSpec& spec, cplx z0,
                                        const ContactTolerances& tol) {
    spec.validate();
    if (spec.beta == 0.0)
        throw std::invalid_argument("verify_max_modulus_growth: beta must be nonzero");
    const cplx pz = p.evaluate(z0);
    const double M = std::abs(pz);
    const double amag = std::abs(spec.a);
    if (!(M > amag))
        throw std::domain_error("verify_max_modulus_growth: requires |p(z0)| > |a|");

    const double r0n = std::pow(std::abs(z0), spec.n);
    const double gap = M * M - amag * amag;
    const double mlb = spec.n + (gap - spec.beta * M * r0n) / (gap + spec.beta * M * r0n);
    const double factor = std::norm(pz - spec.a) / gap;
    const double bound = mlb * factor;

    const Series dp = p.derivative();
    const cplx dpz = dp.evaluate(z0);
    if (std::abs(dpz) == 0.0)
        throw std::domain_error("verify_max_modulus_growth: p'(z0) vanishes");

    ContactReport rep;
    rep.z0 = z0;
    const cplx lhs = z0 * dpz / pz;
    rep.m = lhs.real();
    rep.im_m = lhs.imag();
    rep.m_lower = bound;
    rep.curvature_lhs = (z0 * dp.derivative().evaluate(z0) / dpz + cplx(1.0)).real();
    rep.curvature_rhs = bound;
    rep.pass = im_small(lhs, tol.im_rel) && rep.m >= bound - tol.slack &&
               rep.curvature_lhs >= bound - tol.slack;
    rep.note = "growth form: z0 p'/p and the curvature share the lower bound";
    return rep;
}

ContactReport verify_min_re(const Series& p, const FixedClassSpec& spec, cplx z0,
                            const ContactTolerances& tol) {
    spec.validate();
    if (spec.beta == 0.0) throw std::invalid_argument("verify_min_re: beta must be nonzero");
    const cplx pz = p.evaluate(z0);
    const double d = (spec.a - pz).real();
    if (!(d > 0.0)) throw std::domain_error("verify_min_re: requires Re p(z0) < Re a");

    const double r0n = std::pow(std::abs(z0), spec.n);
    const double mlb = spec.n + (2.0 * d - spec.beta * r0n) / (2.0 * d + spec.beta * r0n);
    const double upper = -0.5 * mlb * std::norm(pz - spec.a) / d;

    const Series dp = p.derivative();
    const cplx dpz = dp.evaluate(z0);
    if (std::abs(dpz) == 0.0) throw std::domain_error("verify_min_re: p'(z0) vanishes");

    ContactReport rep;
    rep.z0 = z0;
    const cplx lhs = z0 * dpz;
    rep.m = lhs.real();
    rep.im_m = lhs.imag();
    rep.m_lower = upper;   // here an upper bound: z0 p'(z0) <= m_lower
    rep.curvature_lhs = (z0 * dp.derivative().evaluate(z0) / dpz + cplx(1.0)).real();
    rep.curvature_rhs = 0.0;
    rep.pass = im_small(lhs, tol.im_rel) && rep.m <= upper + tol.slack &&
               rep.curvature_lhs >= -tol.slack;
    rep.note = "min-Re form: the m column is z0 p'(z0), bounded above by m_lower";
    return rep;
}

double golden_section_min(const std::function<double(double)>& f, double lo, double hi,
                          int iters) {
    const double gr = 0.6180339887498948482045868343656381;
    double c = hi - gr * (hi - lo);
    double d = lo + gr * (hi - lo);
    double fc = f(c), fd = f(d);
    for (int i = 0; i < iters; ++i) {
        if (fc < fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - gr * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + gr * (hi - lo);
            fd = f(d);
        }
    }
    return 0.5 * (lo + hi);
}

namespace {

CircleExtremum extremum_on_circle(const std::function<double(double)>& value, double r,
                                  int scan_points) {
    double best = -std::numeric_limits<double>::infinity();
    int best_j = 0;
    for (int j = 0; j < scan_points; ++j) {
        const double theta = kTwoPi * j / scan_points;
        const double v = value(theta);
        if (v > best) {
            best = v;
            best_j = j;
        }
    }
    const double step = kTwoPi / scan_points;
    const double center = kTwoPi * best_j / scan_points;
    const double theta =
        golden_section_min([&](double t) { return -value(t); }, center - step, center + step);
    CircleExtremum ext;
    ext.theta = theta;
    ext.z = std::polar(r, theta);
    ext.value = value(theta);
    return ext;
}

}  // namespace

CircleExtremum max_modulus_on_circle(const Series& p, double r, int scan_points) {
    return extremum_on_circle(
        [&](double t) { return std::abs(p.evaluate(std::polar(r, t))); }, r, scan_points);
}

CircleExtremum min_re_on_circle(const Series& p, double r, int scan_points) {
    CircleExtremum ext = extremum_on_circle(
        [&](double t) { return -p.evaluate(std::polar(r, t)).real(); }, r, scan_points);
    ext.value = -ext.value;
    return ext;
}

CircleExtremum max_preimage_on_circle(const Series& p, const CanonicalMap& q, double r,
                                      int scan_points) {
    auto value = [&](double t) {
        try {
            return std::abs(q.invert(p.evaluate(std::polar(r, t))));
        } catch (const std::domain_error&) {
            return std::numeric_limits<double>::infinity();
        }
    };
    return extremum_on_circle(value, r, scan_points);
}

std::optional<double> first_contact_radius(const Series& p, const CanonicalMap& q, double r_hi,
                                           int scan_points, int bisect_iters) {
    auto touched = [&](double r) {
        return max_preimage_on_circle(p, q, r, scan_points).value >= 1.0;
    };
    if (!touched(r_hi)) return std::nullopt;
    double lo = 0.0, hi = r_hi;
    for (int i = 0; i < bisect_iters; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (touched(mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

}  // namespace subord
