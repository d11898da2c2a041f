#include "subord/admissibility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "subord/contact.hpp"

namespace subord {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;
}  // namespace

PsiSpec PsiSpec::make_structured(cplx c0, cplx c_r, cplx c_r2, cplx c_s, cplx c_t) {
    PsiSpec psi;
    psi.structured = true;
    psi.c0 = c0;
    psi.c_r = c_r;
    psi.c_r2 = c_r2;
    psi.c_s = c_s;
    psi.c_t = c_t;
    return psi;
}

PsiSpec PsiSpec::make_generic(std::function<cplx(cplx, cplx, cplx)> fn,
                              std::function<bool(cplx, cplx, cplx)> domain) {
    if (!fn) throw std::invalid_argument("PsiSpec: generic form needs a callable");
    PsiSpec psi;
    psi.structured = false;
    psi.fn = std::move(fn);
    psi.domain = std::move(domain);
    return psi;
}

cplx PsiSpec::eval(cplx r, cplx s, cplx t) const {
    if (structured) return c0 + c_r * r + c_r2 * r * r + c_s * s + c_t * t;
    return fn(r, s, t);
}

bool PsiSpec::in_domain(cplx r, cplx s, cplx t) const {
    if (structured || !domain) return true;
    return domain(r, s, t);
}

OmegaRegion OmegaRegion::disk(cplx center, double radius) {
    if (!(radius > 0.0)) throw std::invalid_argument("OmegaRegion: disk radius must be positive");
    OmegaRegion o;
    o.kind_ = Kind::Disk;
    o.center_ = center;
    o.radius_ = radius;
    return o;
}

OmegaRegion OmegaRegion::halfplane(double rotation, cplx offset) {
    OmegaRegion o;
    o.kind_ = Kind::HalfPlane;
    o.rotation_ = rotation;
    o.offset_ = offset;
    return o;
}

OmegaRegion OmegaRegion::predicate(std::function<bool(cplx)> pred) {
    if (!pred) throw std::invalid_argument("OmegaRegion: predicate must be callable");
    OmegaRegion o;
    o.kind_ = Kind::Predicate;
    o.pred_ = std::move(pred);
    return o;
}

namespace {

// Image of |z| < r under (Az + B)/(Cz + D), as center/radius. Requires the
// pole outside the closed disk (|D| > |C| r), which holds for every map here.
std::pair<cplx, double> mobius_disk_image(cplx A, cplx B, cplx C, cplx D, double r) {
    if (std::abs(C) * r < 1e-300) {
        return {B / D, std::abs(A / D) * r};
    }
    const double denom = std::norm(D) - std::norm(C) * r * r;
    if (!(denom > 0.0))
        throw std::invalid_argument("mobius_disk_image: pole inside the disk");
    const cplx inv_center = std::conj(D) / denom;
    const double inv_radius = std::abs(C) * r / denom;
    const cplx K = (B * C - A * D) / C;
    return {A / C + K * inv_center, std::abs(K) * inv_radius};
}

}  // namespace

OmegaRegion OmegaRegion::image_of(const CanonicalMap& h) {
    OmegaRegion o;
    switch (h.kind()) {
        case MapKind::Disk: {
            const double M = h.M();
            const cplx a = h.a();
            auto [c, r] = mobius_disk_image(cplx(M * M), M * a, std::conj(a), cplx(M), h.rho());
            o = disk(c, r);
            break;
        }
        case MapKind::HalfPlane: {
            if (h.rho() >= 1.0) {
                o = halfplane(0.0, cplx(h.alpha()));
            } else {
                const cplx a = h.a();
                auto [c, r] = mobius_disk_image(-(cplx(2.0 * h.alpha()) - std::conj(a)), a,
                                                cplx(-1.0), cplx(1.0), h.rho());
                o = disk(c, r);
            }
            break;
        }
        case MapKind::Affine:
            o = disk(h.a(), std::abs(h.a1()) * h.rho());
            break;
    }
    o.source_ = h;
    return o;
}

bool OmegaRegion::contains(cplx w) const {
    switch (kind_) {
        case Kind::Disk: return std::abs(w - center_) < radius_;
        case Kind::HalfPlane: return (std::polar(1.0, -rotation_) * (w - offset_)).real() > 0.0;
        case Kind::Predicate: return pred_(w);
    }
    return false;
}

double OmegaRegion::exterior_margin(cplx w) const {
    switch (kind_) {
        case Kind::Disk: return std::abs(w - center_) - radius_;
        case Kind::HalfPlane: return -(std::polar(1.0, -rotation_) * (w - offset_)).real();
        case Kind::Predicate: return pred_(w) ? -1.0 : 1.0;
    }
    return 0.0;
}

std::string OmegaRegion::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::Disk:
            os << "disk(center=" << center_.real() << "+" << center_.imag() << "i, radius=" << radius_
               << ")";
            break;
        case Kind::HalfPlane:
            os << "halfplane(rotation=" << rotation_ << ", offset=" << offset_.real() << "+"
               << offset_.imag() << "i)";
            break;
        case Kind::Predicate:
            os << "predicate";
            break;
    }
    return os.str();
}

SearchConfig SearchConfig::defaults() {
    SearchConfig cfg;
    cfg.t_offsets = {cplx(0.0, 0.0)};
    const double du[4] = {0.5, 2.0, 8.0, 16.0};
    const double dv[4] = {0.0, 2.0, -2.0, 8.0};
    for (double u : du)
        for (double v : dv) cfg.t_offsets.emplace_back(u, v);
    return cfg;
}

double admissible_m_min(const CanonicalMap& q, int n, double beta) {
    if (n < 1) throw std::invalid_argument("admissibility: n must be >= 1");
    const double qp = q.qprime0_mag();
    if (!(beta >= 0.0) || beta > qp * (1.0 + 1e-12))
        throw std::invalid_argument("admissibility: requires 0 <= beta <= |q'(0)|");
    return n + (qp - beta) / (qp + beta);
}

AdmissiblePoint admissible_set_sample(const CanonicalMap& q, int n, double beta, double theta,
                                      double m, cplx t_param) {
    if (q.boundary_excluded(theta))
        throw std::domain_error("admissible_set_sample: zeta lies in E(q)");
    const double m_min = admissible_m_min(q, n, beta);
    if (m < m_min - 1e-12)
        throw std::invalid_argument("admissible_set_sample: m below the class bound");

    const cplx zeta = std::polar(1.0, theta);
    auto [q1, q2] = q.derivatives(zeta);
    AdmissiblePoint pt;
    pt.theta = theta;
    pt.m = m;
    pt.r0 = q.eval(zeta);
    pt.s0 = m * zeta * q1;
    const double cq = (cplx(1.0) + zeta * q2 / q1).real();
    const double u = m * cq - 1.0 + t_param.real();
    pt.t0 = pt.s0 * cplx(u, t_param.imag());
    return pt;
}

namespace {

struct BoundaryData {
    cplx zeta, r0, q1, q2;
    double cq;
};

BoundaryData boundary_data(const CanonicalMap& q, double theta) {
    BoundaryData b;
    b.zeta = std::polar(1.0, theta);
    b.r0 = q.eval(b.zeta);
    auto d = q.derivatives(b.zeta);
    b.q1 = d.first;
    b.q2 = d.second;
    b.cq = (cplx(1.0) + b.zeta * b.q2 / b.q1).real();
    return b;
}

std::vector<double> theta_grid(const CanonicalMap& q, int points) {
    std::vector<double> grid;
    grid.reserve(points);
    const bool skip_zero =
        (q.kind() == MapKind::HalfPlane && q.rho() >= 1.0);  // E(q) = {1}
    for (int j = skip_zero ? 1 : 0; j < points; ++j) grid.push_back(kTwoPi * j / points);
    return grid;
}

// Exact extremum over the t half-plane for structured psi at fixed (theta, m).
//
// With A = c0 + c_r r0 + c_r2 r0^2 + c_s s0 and t = s0 (u + iv), u >= u_min:
//   disk Omega:      inf_t |psi - w_c| = max(0, u_min |w| - Re(d conj(w))/|w|)
//                    where w = c_t s0, d = w_c - A
//   halfplane Omega: sup_t Re(e^{-i rot}(psi - w0)) closed by linear analysis,
//                    +inf when the t direction is unbounded above.
struct StructuredObjective {
    const PsiSpec* psi;
    const OmegaRegion* omega;   // Disk or HalfPlane; null for sharp-radius mode
    const CanonicalMap* q;

    struct Value {
        double badness;   // > 0 means a point of the admissible set lands in Omega
        double f;         // disk mode: inf_t |psi - center|
        bool unbounded;   // halfplane mode: sup over t is +inf
        cplx A;
        cplx w;           // c_t * s0
        double u_min;
    };

    Value eval(const BoundaryData& b, double m) const {
        Value val{};
        const cplx s0 = m * b.zeta * b.q1;
        val.A = psi->c0 + psi->c_r * b.r0 + psi->c_r2 * b.r0 * b.r0 + psi->c_s * s0;
        val.w = psi->c_t * s0;
        val.u_min = m * b.cq - 1.0;
        val.unbounded = false;

        if (!omega || omega->kind() == OmegaRegion::Kind::Disk) {
            const cplx center = omega ? omega->center() : cplx(0.0);
            const double wmag = std::abs(val.w);
            if (wmag == 0.0) {
                val.f = std::abs(val.A - center);
            } else {
                const cplx d = center - val.A;
                const double x = (d * std::conj(val.w)).real() / wmag;
                val.f = std::max(0.0, val.u_min * wmag - x);
            }
            val.badness = omega ? (omega->radius() - val.f)
                                : -val.f;   // sharp mode: minimize f
        } else {
            const cplx e = std::polar(1.0, -omega->rotation());
            const double base = (e * (val.A - omega->offset())).real();
            const cplx om = e * val.w;
            const double scale = 1.0 + std::abs(om);
            if (std::abs(om.imag()) > 1e-9 * scale || om.real() > 1e-9 * scale) {
                val.unbounded = true;
                val.badness = std::numeric_limits<double>::infinity();
            } else {
                val.badness = base + val.u_min * om.real();
            }
        }
        return val;
    }
};

// Witness construction at (theta, m): a concrete admissible (r0, s0, t0) with
// psi value inside Omega, replayable from the report.
AdmissiblePoint build_witness(const StructuredObjective& obj, const BoundaryData& b, double m,
                              double theta, cplx* psi_value) {
    AdmissiblePoint pt;
    pt.theta = theta;
    pt.m = m;
    pt.r0 = b.r0;
    const cplx s0 = m * b.zeta * b.q1;
    pt.s0 = s0;
    const auto val = obj.eval(b, m);

    double u = val.u_min, v = 0.0;
    if (obj.omega->kind() == OmegaRegion::Kind::Disk) {
        const double wmag = std::abs(val.w);
        if (wmag > 0.0) {
            // Nearest point of the psi half-plane to the disk center.
            const cplx d = obj.omega->center() - val.A;
            const double x = (d * std::conj(val.w)).real() / wmag;
            cplx tau;
            if (x >= val.u_min * wmag) {
                tau = d;
            } else {
                tau = d + (val.u_min * wmag - x) * val.w / wmag;
            }
            const cplx uv = tau / val.w;
            u = uv.real();
            v = uv.imag();
        }
    } else {
        if (val.unbounded) {
            const cplx e = std::polar(1.0, -obj.omega->rotation());
            const cplx om = e * val.w;
            const double base = (e * (val.A - obj.omega->offset())).real();
            const double base2 = base + val.u_min * om.real();
            const double target = std::max(1.0, base2 + 1.0);
            if (std::abs(om.imag()) > 1e-12 * (1.0 + std::abs(om))) {
                v = (base2 - target) / om.imag();
            } else {
                u = val.u_min + (target - base2) / om.real();
            }
        }
    }
    pt.t0 = s0 * cplx(u, v);
    if (psi_value) *psi_value = obj.psi->eval(pt.r0, pt.s0, pt.t0);
    return pt;
}

// Finite-difference check that the badness never increases with m, sampled on
// a coarse theta grid at probes up to m_min + 64.
bool badness_monotone_in_m(const StructuredObjective& obj, const CanonicalMap& q, double m_min,
                           int coarse_points) {
    const double probes[] = {0.0, 1.0, 4.0, 16.0, 64.0};
    for (double theta : theta_grid(q, coarse_points)) {
        const BoundaryData b = boundary_data(q, theta);
        double prev = obj.eval(b, m_min + probes[0]).badness;
        if (std::isinf(prev)) return false;
        for (size_t i = 1; i < std::size(probes); ++i) {
            const double cur = obj.eval(b, m_min + probes[i]).badness;
            if (std::isinf(cur)) return false;
            if (cur > prev + 1e-9 * (1.0 + std::abs(prev))) return false;
            prev = cur;
        }
    }
    return true;
}

struct ThetaScan {
    double theta;
    double value;
};

// Maximizes fn over the boundary grid with golden-section refinement around
// the best grid point. The half-plane map's E(q) point theta = 0 stays
// excluded by at least one grid step.
ThetaScan scan_theta_max(const CanonicalMap& q, int points, int refine_iters,
                         const std::function<double(double)>& fn) {
    const auto grid = theta_grid(q, points);
    double best = -std::numeric_limits<double>::infinity();
    double best_theta = grid.front();
    for (double theta : grid) {
        const double v = fn(theta);
        if (v > best) {
            best = v;
            best_theta = theta;
        }
    }
    const double step = kTwoPi / points;
    double lo = best_theta - step;
    double hi = best_theta + step;
    if (q.kind() == MapKind::HalfPlane && q.rho() >= 1.0) {
        lo = std::max(lo, step);
        hi = std::min(hi, kTwoPi - step);
    }
    const double theta = golden_section_min([&](double t) { return -fn(t); }, lo, hi, refine_iters);
    const double refined = fn(theta);
    if (refined > best) return {theta, refined};
    return {best_theta, best};
}

void require_condition_ii(const PsiSpec& psi, const OmegaRegion& omega, const CanonicalMap& q) {
    const cplx a = q.q0();
    if (!psi.in_domain(a, cplx(0.0), cplx(0.0)))
        throw not_admissible_error("condition (ii) fails: (q(0),0,0) outside the domain of psi");
    if (!omega.contains(psi.eval(a, cplx(0.0), cplx(0.0))))
        throw not_admissible_error("condition (ii) fails: psi(q(0),0,0) outside Omega");
}

AdmissibilityVerdict generic_search(const PsiSpec& psi, const OmegaRegion& omega,
                                    const CanonicalMap& q, int n, double beta,
                                    const SearchConfig& search) {
    const double m_min = admissible_m_min(q, n, beta);
    AdmissibilityVerdict verdict;
    double worst_margin = std::numeric_limits<double>::infinity();
    bool worst_on_edge = false;
    long discarded = 0;

    const auto& offsets = search.t_offsets;
    double max_offset = 0.0;
    for (cplx off : offsets) max_offset = std::max(max_offset, std::abs(off));

    for (double theta : theta_grid(q, search.theta_points)) {
        const BoundaryData b = boundary_data(q, theta);
        for (int im = 0; im < search.m_points; ++im) {
            const double m = m_min + search.m_span * im / std::max(1, search.m_points - 1);
            const cplx s0 = m * b.zeta * b.q1;
            const double u_min = m * b.cq - 1.0;
            for (size_t it = 0; it < offsets.size(); ++it) {
                AdmissiblePoint pt;
                pt.theta = theta;
                pt.m = m;
                pt.r0 = b.r0;
                pt.s0 = s0;
                pt.t0 = s0 * cplx(u_min + offsets[it].real(), offsets[it].imag());
                if (!psi.in_domain(pt.r0, pt.s0, pt.t0)) {
                    ++discarded;
                    continue;
                }
                const cplx value = psi.eval(pt.r0, pt.s0, pt.t0);
                if (omega.contains(value)) {
                    // Keep the numerically tamest violation, not the first hit.
                    if (verdict.status != AdmissibleStatus::Violation ||
                        std::abs(pt.s0) < std::abs(verdict.worst.s0)) {
                        verdict.status = AdmissibleStatus::Violation;
                        verdict.worst = pt;
                        verdict.psi_value = value;
                        verdict.margin = omega.exterior_margin(value);
                        verdict.note = "violation found by bounded search";
                    }
                    continue;
                }
                if (verdict.status == AdmissibleStatus::Violation) continue;
                const double margin = omega.exterior_margin(value);
                if (margin < worst_margin) {
                    worst_margin = margin;
                    verdict.worst = pt;
                    verdict.psi_value = value;
                    worst_on_edge = (im == search.m_points - 1) ||
                                    (std::abs(offsets[it]) >= max_offset && max_offset > 0.0);
                }
            }
        }
    }

    if (verdict.status == AdmissibleStatus::Violation) return verdict;

    std::ostringstream note;
    note << "bounded search: theta " << search.theta_points << " pts, m in [" << m_min << ", "
         << m_min + search.m_span << "] " << search.m_points << " pts, " << offsets.size()
         << " t offsets";
    if (discarded > 0) note << ", " << discarded << " points outside the psi domain";
    verdict.margin = worst_margin;
    if (omega.kind() == OmegaRegion::Kind::Predicate) {
        verdict.status = AdmissibleStatus::AdmissibleNumeric;
        verdict.margin = 0.0;
        note << "; predicate region carries no metric margin";
    } else if (worst_on_edge) {
        verdict.status = AdmissibleStatus::Inconclusive;
        note << "; worst point on the search-box edge";
    } else {
        verdict.status = AdmissibleStatus::AdmissibleNumeric;
    }
    verdict.note = note.str();
    return verdict;
}

}  // namespace

AdmissibilityVerdict check_admissible(const PsiSpec& psi, const OmegaRegion& omega,
                                      const CanonicalMap& q, int n, double beta,
                                      const SearchConfig& search) {
    const double m_min = admissible_m_min(q, n, beta);   // also validates beta
    require_condition_ii(psi, omega, q);

    const bool exact_capable =
        psi.structured && omega.kind() != OmegaRegion::Kind::Predicate;
    if (!exact_capable) return generic_search(psi, omega, q, n, beta, search);

    StructuredObjective obj{&psi, &omega, &q};
    const bool monotone = badness_monotone_in_m(obj, q, m_min, 257);

    if (monotone) {
        auto badness_at = [&](double theta) {
            return obj.eval(boundary_data(q, theta), m_min).badness;
        };
        const ThetaScan top = scan_theta_max(q, search.theta_points, search.refine_iters, badness_at);
        AdmissibilityVerdict verdict;
        verdict.exact_reduction = true;
        const BoundaryData b = boundary_data(q, top.theta);
        if (top.value > search.tol) {
            // Canonical witness: among violating grid angles, take the one
            // with the smallest |s0| so the emitted point is numerically tame
            // (the violating set is often unbounded along the boundary).
            double best_s0 = std::numeric_limits<double>::infinity();
            double best_theta = top.theta;
            for (double theta : theta_grid(q, search.theta_points)) {
                if (badness_at(theta) <= search.tol) continue;
                const BoundaryData bd = boundary_data(q, theta);
                const double s0_mag = m_min * std::abs(bd.q1);
                if (s0_mag < best_s0) {
                    best_s0 = s0_mag;
                    best_theta = theta;
                }
            }
            const BoundaryData bw = boundary_data(q, best_theta);
            verdict.status = AdmissibleStatus::Violation;
            verdict.worst = build_witness(obj, bw, m_min, best_theta, &verdict.psi_value);
            verdict.margin = -badness_at(best_theta);
            verdict.note = "analytic t-reduction, extremum at the minimal multiplier";
            return verdict;
        }
        verdict.status = AdmissibleStatus::AdmissibleExact;
        verdict.margin = -top.value;
        verdict.worst = build_witness(obj, b, m_min, top.theta, &verdict.psi_value);
        verdict.note = "analytic t-reduction, extremum at the minimal multiplier";
        return verdict;
    }

    // Monotonicity in m could not be established: capped search. A violation
    // is still a certificate; anything else is Inconclusive.
    AdmissibilityVerdict verdict = generic_search(psi, omega, q, n, beta, search);
    if (verdict.status != AdmissibleStatus::Violation) {
        verdict.status = AdmissibleStatus::Inconclusive;
        verdict.note += "; m-monotonicity test failed, refusing to certify";
    }
    return verdict;
}

double sharp_disk_radius(const PsiSpec& psi, const CanonicalMap& q, int n, double beta,
                         const SearchConfig& search, AdmissiblePoint* worst) {
    if (!psi.structured)
        throw std::invalid_argument("sharp_disk_radius: requires the structured psi form");
    const double m_min = admissible_m_min(q, n, beta);

    StructuredObjective obj{&psi, nullptr, &q};
    if (!badness_monotone_in_m(obj, q, m_min, 257))
        throw std::domain_error("sharp_disk_radius: |psi| infimum not monotone in m on probes");

    auto neg_f = [&](double theta) { return obj.eval(boundary_data(q, theta), m_min).badness; };
    const ThetaScan top = scan_theta_max(q, search.theta_points, search.refine_iters, neg_f);
    const double rstar = -top.value;   // badness = -f in sharp mode
    if (!(rstar > search.tol))
        throw std::domain_error("sharp_disk_radius: infimum is 0, psi admissible for no disk");
    if (worst) {
        const BoundaryData b = boundary_data(q, top.theta);
        const cplx s0 = m_min * b.zeta * b.q1;
        worst->theta = top.theta;
        worst->m = m_min;
        worst->r0 = b.r0;
        worst->s0 = s0;
        const auto val = obj.eval(b, m_min);
        worst->t0 = s0 * cplx(val.u_min, 0.0);
    }
    return rstar;
}

int min_admissible_n(const PsiSpec& psi, const CanonicalMap& q, double beta,
                     const OmegaRegion& omega, const SearchConfig& search) {
    for (int n = 1; n <= 64; ++n) {
        const AdmissibilityVerdict v = check_admissible(psi, omega, q, n, beta, search);
        if (v.admissible()) return n;
    }
    throw std::domain_error("min_admissible_n: no n <= 64 is admissible");
}

}  // namespace subord
