#pragma once

#include <functional>
#include <optional>
#include <string>

#include "subord/conformal_map.hpp"
#include "subord/series.hpp"

namespace subord {

/// Growth bound for Schwarz functions w = a1 z + ... : |w(z)| is at most
/// r(r + |a1|)/(1 + |a1| r) at |z| = r.
double schwarz_bound(double a1_mag, double r);

/// The extremal family attaining the bound:
/// w(z) = e^{-it} z (z + a1 e^{it})/(1 + conj(a1) e^{-it} z), as a series.
Series schwarz_extremal(cplx a1, double t, int degree = 64);

/// Lower bound for the contact multiplier:
/// n + (|q'(0)| - beta r0^n)/(|q'(0)| + beta r0^n).
double m_lower_bound(int n, double qprime0_mag, double beta, double r0);

/// A Schwarz function w(z) = z (c + z h(z))/(1 + conj(c) z h(z)) with
/// polynomial h, evaluated exactly as a rational function. sup |h| <= 1 is
/// certified through a coefficient-sum normalization.
struct SchwarzSample {
    cplx c;
    Series h;
    cplx eval(cplx z) const;
};

/// Numeric tolerances for the contact verifiers.
struct ContactTolerances {
    double im_rel = 1e-6;        // |Im m| <= im_rel (1 + |m|)
    double slack = 1e-6;         // inequality slack
    double zeta_boundary = 1e-5; // ||zeta0| - 1| limit for genuine contact
};

struct ContactReport {
    cplx z0;               // contact point
    cplx zeta0;            // boundary preimage (boundary-contact form only)
    double m = 0.0;        // contact multiplier
    double m_lower = 0.0;  // right side of the multiplier bound
    double curvature_lhs = 0.0;  // Re(z0 p''/p' + 1)
    double curvature_rhs = 0.0;  // multiplier side of the curvature inequality
    bool pass = false;
    double im_m = 0.0;     // imaginary residue of the multiplier
    std::string note;
};

/// Lemma data at an interior maximum of |g| (g(0) = 0): multiplier
/// m = z0 g'(z0)/g(z0), its lower bound from |g_n| and |g(z0)|, and the
/// curvature inequality Re(z0 g''/g' + 1) >= m.
ContactReport verify_interior_max(const Series& g, cplx z0,
                                  const ContactTolerances& tol = {});

/// Boundary-contact data: zeta0 = q^{-1}(p(z0)), m from
/// z0 p'(z0) = m zeta0 q'(zeta0), the curvature inequality and the
/// class-dependent multiplier bound with r0 = |z0|.
ContactReport verify_boundary_contact(const Series& p, const FixedClassSpec& spec,
                                      const CanonicalMap& q, cplx z0,
                                      const ContactTolerances& tol = {});

/// Growth data at a maximum-modulus point of p (requires |p(z0)| > |a|,
/// beta != 0): z0 p'/p real and bounded below, same bound for the curvature.
ContactReport verify_max_modulus_growth(const Series& p, const FixedClassSpec& spec,
                                        cplx z0, const ContactTolerances& tol = {});

/// Data at a minimum of Re p: z0 p'(z0) real, bounded above by the
/// half-plane form, curvature nonnegative. Requires Re p(z0) < Re a, beta != 0.
ContactReport verify_min_re(const Series& p, const FixedClassSpec& spec, cplx z0,
                            const ContactTolerances& tol = {});

// --- extremum locators ----------------------------------------------------

struct CircleExtremum {
    double theta = 0.0;
    cplx z;
    double value = 0.0;
};

/// Argmax of |p| on the circle |z| = r: 4096-point scan plus golden-section
/// refinement. Ties resolve to the lowest scan index.
CircleExtremum max_modulus_on_circle(const Series& p, double r, int scan_points = 4096);

/// Argmin of Re p on the circle |z| = r.
CircleExtremum min_re_on_circle(const Series& p, double r, int scan_points = 4096);

/// Argmax of |q^{-1}(p(z))| on the circle |z| = r.
CircleExtremum max_preimage_on_circle(const Series& p, const CanonicalMap& q, double r,
                                      int scan_points = 4096);

/// Smallest radius in (0, r_hi] where max_theta |q^{-1}(p(r e^{i theta}))|
/// reaches 1, by bisection; empty when p stays inside q(D) up to r_hi.
std::optional<double> first_contact_radius(const Series& p, const CanonicalMap& q,
                                           double r_hi = 0.999, int scan_points = 4096,
                                           int bisect_iters = 80);

/// Golden-section minimizer on [lo, hi] with a fixed iteration count.
double golden_section_min(const std::function<double(double)>& f, double lo, double hi,
                          int iters = 80);

}  // namespace subord
