#pragma once

#include <cstdint>
#include <string>

#include "subord/contact.hpp"
#include "subord/subordination.hpp"

namespace subord {

struct SuiteResult {
    long trials = 0;
    long failures = 0;
    long skipped = 0;
    double worst_margin = 0.0;   // suite-specific; see note
    std::string note;

    bool all_pass() const { return failures == 0 && trials > skipped; }
};

/// Random Schwarz functions w = z (c + z h)/(1 + conj(c) z h) against the
/// growth bound; worst_margin is the largest bound violation (<= 0 passes,
/// tolerance 1e-10).
SuiteResult schwarz_bound_suite(long trials, std::uint64_t seed,
                                const EvalGrid& grid = EvalGrid::defaults());

/// Extremal family attains the bound at real positive z within 1e-8;
/// worst_margin is the largest |bound - |w||.
SuiteResult schwarz_extremal_suite(long trials, std::uint64_t seed);

/// Interior-maximum multiplier data on random members (g(0) = 0);
/// worst_margin is the smallest m - m_lower seen.
SuiteResult interior_max_suite(long trials, std::uint64_t seed);

/// Boundary-contact data through dilated maps: p = q o w subordinate, the
/// dilation q_rho picked so a first contact exists below radius 0.999;
/// verifies the multiplier identity, the curvature inequality and the class
/// bound. worst_margin is the smallest m - m_lower seen.
SuiteResult boundary_contact_suite(long trials, std::uint64_t seed);

/// Maximum-modulus growth data on random members (beta != 0).
SuiteResult max_modulus_growth_suite(long trials, std::uint64_t seed);

/// Minimum-real-part data on random members (beta != 0).
SuiteResult min_re_suite(long trials, std::uint64_t seed);

}  // namespace subord
