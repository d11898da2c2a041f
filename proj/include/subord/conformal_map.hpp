#pragma once

#include <optional>
#include <string>
#include <utility>

#include "subord/series.hpp"

namespace subord {

enum class MapKind { Disk, HalfPlane, Affine };

/// Univalent Mobius-type maps of the unit disk with closed-form value,
/// derivatives and inverse:
///   disk(M, a):       q(z) = M(Mz + a)/(M + conj(a) z),   q(D) = {|w| < M}
///   halfplane(al, a): q(z) = (a - (2 al - conj(a)) z)/(1 - z),
///                     q(D) = {Re w > al}
///   affine(a0, a1):   q(z) = a0 + a1 z
/// A dilation factor rho in (0,1] turns q into q_rho(z) = q(rho z).
class CanonicalMap {
public:
    static CanonicalMap disk(double M, cplx a);
    static CanonicalMap halfplane(double alpha, cplx a);
    static CanonicalMap affine(cplx a0, cplx a1);

    /// q_rho(z) = q(rho z); composes with an existing dilation.
    CanonicalMap dilate(double rho) const;

    MapKind kind() const { return kind_; }
    double rho() const { return rho_; }
    double M() const { return M_; }
    double alpha() const { return alpha_; }
    cplx a() const { return a_; }
    cplx a1() const { return a1_; }

    cplx q0() const;                         // q(0)
    cplx qprime0() const;                    // q'(0) of the dilated map
    double qprime0_mag() const;

    cplx eval(cplx z) const;
    /// (q'(z), q''(z)) of the dilated map.
    std::pair<cplx, cplx> derivatives(cplx z) const;
    cplx invert(cplx w) const;

    struct Membership {
        bool inside;
        double margin;   // 1 - |q^{-1}(w)|, positive inside
    };
    Membership contains(cplx w) const;

    /// True when e^{i theta} belongs to E(q) (the half-plane map blows up at
    /// zeta = 1; dilated maps have empty E).
    bool boundary_excluded(double theta) const;

    /// Re(zeta q''(zeta)/q'(zeta) + 1) at zeta = e^{i theta}.
    double boundary_curvature(double theta) const;

    Series to_series(int degree) const;

    /// Same q(0), image shrunk toward q(0) by factor kappa in (0,1].
    /// Used as the negative-control conclusion region.
    CanonicalMap shrink_image(double kappa) const;

    std::string describe() const;

private:
    CanonicalMap() = default;

    cplx base_eval(cplx z) const;
    std::pair<cplx, cplx> base_derivatives(cplx z) const;
    cplx base_invert(cplx w) const;

    MapKind kind_ = MapKind::Affine;
    double M_ = 0.0;       // disk radius
    double alpha_ = 0.0;   // halfplane boundary
    cplx a_;               // disk/halfplane center value a = q(0); affine a0
    cplx a1_;              // affine slope
    double rho_ = 1.0;
};

}  // namespace subord
