#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subord/admissibility.hpp"
#include "subord/conformal_map.hpp"
#include "subord/series.hpp"

namespace subord {

/// Polar evaluation grid shared by the hypothesis screen and the
/// subordination check.
struct EvalGrid {
    std::vector<double> radii{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.98, 0.99};
    int angles = 512;

    static EvalGrid defaults() { return {}; }
    std::vector<double> radii_up_to(double r_max) const;
    double r_max() const;
};

struct SubordinationResult {
    bool subordinate = false;
    double margin = 0.0;   // 1 - max |q^{-1}(p)| over the grid
    cplx witness;          // argmax point when not subordinate
};

/// Grid test of p < q through the preimage: true iff
/// max |q^{-1}(p(z))| < 1 over radii <= r_max. Requires p(0) = q(0).
SubordinationResult is_subordinate(const Series& p, const CanonicalMap& q, double r_max,
                                   const EvalGrid& grid = EvalGrid::defaults());

/// Seeded member of H_beta[q(0), n] subordinate to q by construction:
/// p = q o w with w(z) = z^n (c + z h)/(1 + conj(c) z h), c = beta/q'(0),
/// h a seeded polynomial kept small enough that the truncated series stays
/// verifiably inside q(D). Requires beta <= |q'(0)|.
Series sample_subordinate(const FixedClassSpec& spec, const CanonicalMap& q, std::uint64_t seed,
                          int degree = 64);

struct HypothesisSample {
    std::optional<Series> p;
    double margin = 0.0;       // min exterior distance of the orbit from dOmega
    long domain_discards = 0;  // candidates whose orbit left the psi domain
};

/// Draws p = a + beta z^n + eps (random tail), shrinking eps geometrically
/// until the psi-orbit lies in Omega on the full grid. The z^n coefficient is
/// never scaled. Empty when even eps = 0 fails.
HypothesisSample hypothesis_sampler(const FixedClassSpec& spec, const PsiSpec& psi,
                                    const OmegaRegion& omega, std::uint64_t seed,
                                    const EvalGrid& grid = EvalGrid::defaults(), int degree = 64);

struct Counterexample {
    long sample_index = 0;
    Series p;
    cplx witness_z;
    double hypothesis_margin = 0.0;
    double conclusion_margin = 0.0;   // max |q^{-1}(p)| - 1 at the witness
};

struct FalsificationReport {
    long samples_run = 0;
    long hypothesis_holds_count = 0;
    long domain_discards = 0;
    std::vector<Counterexample> counterexamples;
    std::uint64_t seed = 0;
    EvalGrid grid;
    bool admissibility_checked = false;   // precondition verified (not exploratory)
    bool exploratory = false;
    std::string note;

    bool vacuous() const { return hypothesis_holds_count == 0; }
};

struct FalsifyOptions {
    double conclusion_shrink = 1.0;   // < 1: negative control, image shrunk
    int degree = 64;
    int threads = 0;                  // 0: hardware concurrency
};

/// Hypothesis screen (psi-orbit in Omega on the grid) then conclusion check
/// (p < q); counterexamples satisfy the first and fail the second. The run is
/// labeled exploratory when the admissibility precondition does not hold.
FalsificationReport falsify_implication(const PsiSpec& psi, const OmegaRegion& omega,
                                        const CanonicalMap& q, const FixedClassSpec& spec,
                                        long samples, std::uint64_t seed,
                                        const EvalGrid& grid = EvalGrid::defaults(),
                                        const FalsifyOptions& opts = {});

/// Subordination form: Omega = h(D), membership through h^{-1}. Requires the
/// normalization psi(q(0), 0, 0) = h(0).
FalsificationReport falsify_subordination_form(const PsiSpec& psi, const CanonicalMap& h,
                                               const CanonicalMap& q, const FixedClassSpec& spec,
                                               long samples, std::uint64_t seed,
                                               const EvalGrid& grid = EvalGrid::defaults(),
                                               const FalsifyOptions& opts = {});

}  // namespace subord
