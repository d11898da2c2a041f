#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "subord/conformal_map.hpp"
#include "subord/series.hpp"

namespace subord {

/// Test function psi(r, s, t). The structured form
///   psi = c0 + c_r r + c_r2 r^2 + c_s s + c_t t
/// is total on C^3 and admits exact boundary reduction; generic callables are
/// handled by falsification search over a bounded box.
struct PsiSpec {
    bool structured = true;
    cplx c0, c_r, c_r2, c_s, c_t;
    std::function<cplx(cplx, cplx, cplx)> fn;
    std::function<bool(cplx, cplx, cplx)> domain;   // empty means D = C^3

    static PsiSpec make_structured(cplx c0, cplx c_r, cplx c_r2, cplx c_s, cplx c_t);
    static PsiSpec make_generic(std::function<cplx(cplx, cplx, cplx)> fn,
                                std::function<bool(cplx, cplx, cplx)> domain = nullptr);

    cplx eval(cplx r, cplx s, cplx t) const;
    bool in_domain(cplx r, cplx s, cplx t) const;
};

/// Target region Omega. Disk and half-plane regions carry a metric; image_of
/// normalizes Mobius images to one of those two, keeping the source map for
/// h-form bookkeeping.
class OmegaRegion {
public:
    enum class Kind { Disk, HalfPlane, Predicate };

    static OmegaRegion disk(cplx center, double radius);
    /// Re(e^{-i rotation} (w - offset)) > 0.
    static OmegaRegion halfplane(double rotation, cplx offset);
    static OmegaRegion predicate(std::function<bool(cplx)> pred);
    static OmegaRegion image_of(const CanonicalMap& h);

    Kind kind() const { return kind_; }
    cplx center() const { return center_; }
    double radius() const { return radius_; }
    double rotation() const { return rotation_; }
    cplx offset() const { return offset_; }
    const std::optional<CanonicalMap>& source_map() const { return source_; }

    bool contains(cplx w) const;
    /// Positive outside the closure, negative inside, zero on the boundary.
    /// Predicate regions have no metric; +-1 is returned.
    double exterior_margin(cplx w) const;

    std::string describe() const;

private:
    Kind kind_ = Kind::Disk;
    cplx center_;
    double radius_ = 1.0;
    double rotation_ = 0.0;
    cplx offset_;
    std::function<bool(cplx)> pred_;
    std::optional<CanonicalMap> source_;
};

struct SearchConfig {
    int theta_points = 4096;
    int m_points = 256;
    double m_span = 16.0;
    int refine_iters = 80;
    double tol = 1e-9;
    /// t_param offsets for the generic search; the constraint boundary (0)
    /// plus sixteen interior/imaginary displacements.
    std::vector<cplx> t_offsets;

    static SearchConfig defaults();
};

enum class AdmissibleStatus { AdmissibleExact, AdmissibleNumeric, Violation, Inconclusive };

struct AdmissiblePoint {
    double theta = 0.0;   // boundary parameter, zeta = e^{i theta}
    double m = 0.0;
    cplx r0, s0, t0;
};

struct AdmissibilityVerdict {
    AdmissibleStatus status = AdmissibleStatus::Inconclusive;
    double margin = 0.0;          // admissible: min exterior margin over the set
    AdmissiblePoint worst;        // extremal parameters (witness for Violation)
    cplx psi_value;               // psi at the worst point
    bool exact_reduction = false;
    std::string note;

    bool admissible() const {
        return status == AdmissibleStatus::AdmissibleExact ||
               status == AdmissibleStatus::AdmissibleNumeric;
    }
};

/// Thrown when condition (ii) fails (psi(q(0),0,0) outside Omega or outside
/// the domain of psi): immediate non-membership, no boundary witness exists.
struct not_admissible_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// A point of the admissible boundary set: r0 = q(zeta), s0 = m zeta q'(zeta),
/// t0 = s0 (u + iv) with u = m Re(zeta q''/q' + 1) - 1 + Re(t_param) and
/// v = Im(t_param). t_param = 0 sits on the constraint boundary.
AdmissiblePoint admissible_set_sample(const CanonicalMap& q, int n, double beta, double theta,
                                      double m, cplx t_param);

double admissible_m_min(const CanonicalMap& q, int n, double beta);

AdmissibilityVerdict check_admissible(const PsiSpec& psi, const OmegaRegion& omega,
                                      const CanonicalMap& q, int n, double beta,
                                      const SearchConfig& search = SearchConfig::defaults());

/// Infimum of |psi| over the admissible set; psi belongs to the class for
/// Omega = disk(0, R) exactly when R <= the returned value.
double sharp_disk_radius(const PsiSpec& psi, const CanonicalMap& q, int n, double beta,
                         const SearchConfig& search = SearchConfig::defaults(),
                         AdmissiblePoint* worst = nullptr);

/// Smallest n <= 64 for which check_admissible accepts.
int min_admissible_n(const PsiSpec& psi, const CanonicalMap& q, double beta,
                     const OmegaRegion& omega,
                     const SearchConfig& search = SearchConfig::defaults());

}  // namespace subord
