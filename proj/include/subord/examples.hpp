#pragma once

#include <string>
#include <vector>

#include "subord/admissibility.hpp"
#include "subord/conformal_map.hpp"

namespace subord {

/// Built-in inequality/subordination cases 4.1 .. 4.5 used by the CLI, the
/// reproduction table and the falsification suites. Each couples a structured
/// psi with its conformal map, its target region and the closed-form sharp
/// constant or admissibility threshold.
struct ExampleCase {
    std::string id;
    PsiSpec psi;
    CanonicalMap map = CanonicalMap::affine(cplx(0.0), cplx(1.0));
    OmegaRegion omega = OmegaRegion::disk(cplx(0.0), 1.0);
    int n = 1;
    double beta = 1.0;
    double M = 1.0;             // disk radius parameter (case 4.1 only)
    FixedClassSpec spec;        // class data matching the map
    bool omega_is_disk = true;  // disk cases have a sharp radius; the others a threshold

    /// Closed-form constant: sharp disk radius (4.1, 4.2, 4.5) or the
    /// admissibility threshold (2+3 beta)/(2+ beta) (4.3, 4.4).
    double closed_form() const;
};

/// Parameters: n and beta apply everywhere; M only to 4.1 (its map radius).
/// 4.5 pins n = 2 by construction.
ExampleCase example_case(const std::string& id, int n, double beta, double M = 1.0);

std::vector<std::string> example_ids();

}  // namespace subord
