#include "subord/conformal_map.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace subord {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

double wrap_angle(double theta) {
    double t = std::fmod(theta, 2.0 * kPi);
    if (t < 0) t += 2.0 * kPi;
    return t;
}
}  // namespace

CanonicalMap CanonicalMap::disk(double M, cplx a) {
    if (!(M > 0.0)) throw std::invalid_argument("disk map: M must be positive");
    if (!(std::abs(a) < M)) throw std::invalid_argument("disk map: requires |a| < M");
    CanonicalMap q;
    q.kind_ = MapKind::Disk;
    q.M_ = M;
    q.a_ = a;
    return q;
}

CanonicalMap CanonicalMap::halfplane(double alpha, cplx a) {
    if (!(a.real() > alpha))
        throw std::invalid_argument("halfplane map: requires Re a > alpha");
    CanonicalMap q;
    q.kind_ = MapKind::HalfPlane;
    q.alpha_ = alpha;
    q.a_ = a;
    return q;
}

CanonicalMap CanonicalMap::affine(cplx a0, cplx a1) {
    if (std::abs(a1) == 0.0) throw std::invalid_argument("affine map: a1 must be nonzero");
    CanonicalMap q;
    q.kind_ = MapKind::Affine;
    q.a_ = a0;
    q.a1_ = a1;
    return q;
}

CanonicalMap CanonicalMap::dilate(double rho) const {
    if (!(rho > 0.0 && rho < 1.0))
        throw std::invalid_argument("dilate: rho must lie in (0,1)");
    CanonicalMap q = *this;
    q.rho_ *= rho;
    return q;
}

cplx CanonicalMap::q0() const { return a_; }

cplx CanonicalMap::qprime0() const {
    cplx base;
    switch (kind_) {
        case MapKind::Disk: base = cplx((M_ * M_ - std::norm(a_)) / M_); break;
        case MapKind::HalfPlane: base = a_ + std::conj(a_) - cplx(2.0 * alpha_); break;
        case MapKind::Affine: base = a1_; break;
    }
    return base * rho_;
}

double CanonicalMap::qprime0_mag() const { return std::abs(qprime0()); }

cplx CanonicalMap::base_eval(cplx z) const {
    switch (kind_) {
        case MapKind::Disk:
            return M_ * (M_ * z + a_) / (M_ + std::conj(a_) * z);
        case MapKind::HalfPlane: {
            const cplx den = cplx(1.0) - z;
            if (std::abs(den) == 0.0)
                throw std::domain_error("halfplane map: z = 1 is the E(q) point");
            return (a_ - (cplx(2.0 * alpha_) - std::conj(a_)) * z) / den;
        }
        case MapKind::Affine:
            return a_ + a1_ * z;
    }
    throw std::logic_error("unreachable");
}

std::pair<cplx, cplx> CanonicalMap::base_derivatives(cplx z) const {
    switch (kind_) {
        case MapKind::Disk: {
            const cplx den = M_ + std::conj(a_) * z;
            const cplx c = M_ * (M_ * M_ - std::norm(a_));
            return {c / (den * den), -2.0 * std::conj(a_) * c / (den * den * den)};
        }
        case MapKind::HalfPlane: {
            const cplx den = cplx(1.0) - z;
            if (std::abs(den) == 0.0)
                throw std::domain_error("halfplane map: z = 1 is the E(q) point");
            const double c = 2.0 * (a_.real() - alpha_);
            return {c / (den * den), 2.0 * c / (den * den * den)};
        }
        case MapKind::Affine:
            return {a1_, cplx(0.0)};
    }
    throw std::logic_error("unreachable");
}

cplx CanonicalMap::base_invert(cplx w) const {
    switch (kind_) {
        case MapKind::Disk: {
            const cplx den = cplx(M_ * M_) - std::conj(a_) * w;
            if (std::abs(den) == 0.0)
                throw std::domain_error("disk map: w is the omitted value M^2/conj(a)");
            return M_ * (w - a_) / den;
        }
        case MapKind::HalfPlane: {
            const cplx den = w - cplx(2.0 * alpha_) + std::conj(a_);
            if (std::abs(den) == 0.0)
                throw std::domain_error("halfplane map: w is the omitted value 2 alpha - conj(a)");
            return (w - a_) / den;
        }
        case MapKind::Affine:
            return (w - a_) / a1_;
    }
    throw std::logic_error("unreachable");
}

cplx CanonicalMap::eval(cplx z) const { return base_eval(rho_ * z); }

std::pair<cplx, cplx> CanonicalMap::derivatives(cplx z) const {
    auto [d1, d2] = base_derivatives(rho_ * z);
    return {rho_ * d1, rho_ * rho_ * d2};
}

cplx CanonicalMap::invert(cplx w) const { return base_invert(w) / rho_; }

CanonicalMap::Membership CanonicalMap::contains(cplx w) const {
    double margin;
    try {
        margin = 1.0 - std::abs(invert(w));
    } catch (const std::domain_error&) {
        // Omitted value of the Mobius formula; it lies outside the image.
        margin = -std::numeric_limits<double>::infinity();
    }
    return {margin > 0.0, margin};
}

bool CanonicalMap::boundary_excluded(double theta) const {
    if (kind_ != MapKind::HalfPlane || rho_ < 1.0) return false;
    const double t = wrap_angle(theta);
    return std::min(t, 2.0 * kPi - t) < 1e-12;
}

double CanonicalMap::boundary_curvature(double theta) const {
    if (boundary_excluded(theta))
        throw std::domain_error("boundary_curvature: theta lies in E(q)");
    const cplx zeta = std::polar(1.0, theta);
    auto [d1, d2] = derivatives(zeta);
    return (zeta * d2 / d1 + cplx(1.0)).real();
}

Series CanonicalMap::to_series(int degree) const {
    if (degree < 1) throw std::invalid_argument("to_series: degree must be >= 1");
    Series s = Series::zero(degree);
    s.set_coeff(0, a_);
    switch (kind_) {
        case MapKind::Disk: {
            const cplx ratio = -std::conj(a_) / M_;
            const cplx c1 = cplx((M_ * M_ - std::norm(a_)) / M_);
            cplx pow = cplx(1.0);
            for (int k = 1; k <= degree; ++k) {
                s.set_coeff(k, c1 * pow);
                pow *= ratio;
            }
            break;
        }
        case MapKind::HalfPlane: {
            const cplx c = a_ + std::conj(a_) - cplx(2.0 * alpha_);
            for (int k = 1; k <= degree; ++k) s.set_coeff(k, c);
            break;
        }
        case MapKind::Affine:
            s.set_coeff(1, a1_);
            break;
    }
    if (rho_ < 1.0) {
        double scale = 1.0;
        for (int k = 1; k <= degree; ++k) {
            scale *= rho_;
            s.set_coeff(k, s.coeff(k) * scale);
        }
    }
    return s;
}

CanonicalMap CanonicalMap::shrink_image(double kappa) const {
    if (!(kappa > 0.0 && kappa <= 1.0))
        throw std::invalid_argument("shrink_image: kappa must lie in (0,1]");
    switch (kind_) {
        case MapKind::Disk: {
            const double M2 = kappa * M_;
            if (!(std::abs(a_) < M2))
                throw std::invalid_argument("shrink_image: q(0) falls outside the shrunk disk");
            CanonicalMap q = disk(M2, a_);
            q.rho_ = rho_;
            return q;
        }
        case MapKind::HalfPlane: {
            const double al2 = alpha_ + (1.0 - kappa) * (a_.real() - alpha_);
            CanonicalMap q = halfplane(al2, a_);
            q.rho_ = rho_;
            return q;
        }
        case MapKind::Affine: {
            CanonicalMap q = affine(a_, kappa * a1_);
            q.rho_ = rho_;
            return q;
        }
    }
    throw std::logic_error("unreachable");
}

std::string CanonicalMap::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case MapKind::Disk:
            os << "disk(M=" << M_ << ", a=" << a_.real() << "+" << a_.imag() << "i)";
            break;
        case MapKind::HalfPlane:
            os << "halfplane(alpha=" << alpha_ << ", a=" << a_.real() << "+" << a_.imag() << "i)";
            break;
        case MapKind::Affine:
            os << "affine(a0=" << a_.real() << "+" << a_.imag() << "i, a1=" << a1_.real() << "+"
               << a1_.imag() << "i)";
            break;
    }
    if (rho_ < 1.0) os << " dilated rho=" << rho_;
    return os.str();
}

}  // namespace subord
