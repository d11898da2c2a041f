#pragma once

#include <string>
#include <vector>

#include "subord/series.hpp"
#include "subord/subordination.hpp"

namespace subord {

/// Order of starlikeness / real-part bound for a fixed second coefficient.
struct OrderResult {
    double a2_mag = 0.0;
    double alpha = 0.0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    int iterations = 0;
    double residual = 0.0;   // defining-equation residual at alpha
};

/// Smallest positive root of 2 a^3 - |a2| a^2 - 4 a + 2 = 0 in [1/2, 2/3]:
/// every normalized convex f with that |a2| is starlike of this order.
OrderResult starlike_order_of_convex(double a2_mag);

/// (10 + |a2| - sqrt(|a2|^2 + 20 |a2| + 4)) / 12: Re sqrt(f') exceeds this
/// for convex f. Cross-checked against 6 a^2 - (10+|a2|) a + 4 = 0.
double sqrt_deriv_order(double a2_mag);

/// (20 + |a2| - sqrt(16 + |a2|^2 + 40 |a2|)) / 24: Re sqrt(f/z) exceeds this
/// for starlike f, |a2| <= 2.
double sqrt_ratio_order(double a2_mag);

enum class ConvexKind { HalfplaneType, LogType, Identity };

struct FamilyMember {
    Series f;
    cplx a2;
    std::string name;
};

/// Explicit convex test functions, screened numerically for convexity before
/// use: z/(1-cz) (a2 = c), -log(1-cz)/c (a2 = c/2), z.
FamilyMember convex_family(ConvexKind kind, cplx c, int degree = 2048,
                           const EvalGrid& grid = EvalGrid::defaults());

/// Starlike member z f'(z) of the corresponding convex member (a2 doubles).
FamilyMember starlike_family(ConvexKind kind, cplx c, int degree = 2048,
                             const EvalGrid& grid = EvalGrid::defaults());

/// g with z g'(z) = f(z) (coefficient division); inverse of f -> z f'.
Series alexander_inverse(const Series& f);

enum class OrderTheorem { StarlikeOrder, SqrtDeriv, SqrtRatio };

struct OrderVerification {
    bool pass = false;
    double alpha = 0.0;        // required order for |a2|
    double functional_inf = 0.0;
    cplx worst_z;
    double a2_mag = 0.0;
    std::string note;
};

/// Screens the hypothesis (convexity for the first two forms, starlikeness
/// for the third), evaluates the relevant functional on the grid and checks
/// its infimum against the order formula at tolerance tol.
OrderVerification verify_order_theorem(OrderTheorem which, const Series& f,
                                       const EvalGrid& grid = EvalGrid::defaults(),
                                       double tol = 1e-3);

}  // namespace subord
