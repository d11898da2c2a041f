#include "subord/gft.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace subord {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

double eq51(double alpha, double b) {
    return 2.0 * alpha * alpha * alpha - b * alpha * alpha - 4.0 * alpha + 2.0;
}

double eq51_deriv(double alpha, double b) { return 6.0 * alpha * alpha - 2.0 * b * alpha - 4.0; }

}  // namespace

OrderResult starlike_order_of_convex(double a2_mag) {
    if (!(a2_mag >= 0.0 && a2_mag <= 1.0))
        throw std::invalid_argument("starlike_order_of_convex: |a2| must lie in [0,1]");

    const double lo = 0.5, hi = 2.0 / 3.0;
    const double glo = eq51(lo, a2_mag);
    const double ghi = eq51(hi, a2_mag);
    if (!(glo >= 0.0) || !(ghi <= 0.0))
        throw std::logic_error("starlike_order_of_convex: bracket signs violated");
    // Root uniqueness on the bracket: the cubic is strictly decreasing there.
    if (!(eq51_deriv(lo, a2_mag) < 0.0) || !(eq51_deriv(hi, a2_mag) < 0.0))
        throw std::logic_error("starlike_order_of_convex: derivative sign violated");

    OrderResult res;
    res.a2_mag = a2_mag;
    res.bracket_lo = lo;
    res.bracket_hi = hi;
    if (glo == 0.0) {
        res.alpha = lo;
        res.residual = 0.0;
        return res;
    }
    double a = lo, b = hi;
    int it = 0;
    while (b - a > 1e-12 && it < 200) {
        const double mid = 0.5 * (a + b);
        if (eq51(mid, a2_mag) >= 0.0)
            a = mid;
        else
            b = mid;
        ++it;
    }
    res.alpha = 0.5 * (a + b);
    res.iterations = it;
    res.residual = std::abs(eq51(res.alpha, a2_mag));
    return res;
}

double sqrt_deriv_order(double a2_mag) {
    if (!(a2_mag >= 0.0 && a2_mag <= 1.0))
        throw std::invalid_argument("sqrt_deriv_order: |a2| must lie in [0,1]");
    const double alpha =
        (10.0 + a2_mag - std::sqrt(a2_mag * a2_mag + 20.0 * a2_mag + 4.0)) / 12.0;
    const double residual = 6.0 * alpha * alpha - (10.0 + a2_mag) * alpha + 4.0;
    if (std::abs(residual) > 1e-12)
        throw std::logic_error("sqrt_deriv_order: quadratic cross-check failed");
    return alpha;
}

double sqrt_ratio_order(double a2_mag) {
    if (!(a2_mag >= 0.0 && a2_mag <= 2.0))
        throw std::invalid_argument("sqrt_ratio_order: |a2| must lie in [0,2]");
    return (20.0 + a2_mag - std::sqrt(16.0 + a2_mag * a2_mag + 40.0 * a2_mag)) / 24.0;
}

namespace {

double grid_inf(const std::function<double(cplx)>& fn, const EvalGrid& grid, cplx* worst) {
    double inf = std::numeric_limits<double>::infinity();
    for (double r : grid.radii) {
        for (int j = 0; j < grid.angles; ++j) {
            const cplx z = std::polar(r, kTwoPi * j / grid.angles);
            const double v = fn(z);
            if (v < inf) {
                inf = v;
                if (worst) *worst = z;
            }
        }
    }
    return inf;
}

void screen_positive(const std::function<double(cplx)>& fn, const EvalGrid& grid,
                     const char* what) {
    cplx worst;
    if (!(grid_inf(fn, grid, &worst) > 1e-6))
        throw std::domain_error(std::string("hypothesis screen failed: ") + what);
}

void screen_convex(const Series& f, const EvalGrid& grid) {
    const Series df = f.derivative();
    const Series ddf = df.derivative();
    screen_positive(
        [&](cplx z) { return (cplx(1.0) + z * ddf.evaluate(z) / df.evaluate(z)).real(); }, grid,
        "Re(1 + z f''/f') is not positive on the grid");
}

void screen_starlike(const Series& f, const EvalGrid& grid) {
    const Series df = f.derivative();
    screen_positive([&](cplx z) { return (z * df.evaluate(z) / f.evaluate(z)).real(); }, grid,
                    "Re(z f'/f) is not positive on the grid");
}

void require_normalized(const Series& f) {
    if (std::abs(f.coeff(0)) > 1e-12 || std::abs(f.coeff(1) - cplx(1.0)) > 1e-12)
        throw std::invalid_argument("gft: series must be normalized, f = z + a2 z^2 + ...");
}

}  // namespace

FamilyMember convex_family(ConvexKind kind, cplx c, int degree, const EvalGrid& grid) {
    if (std::abs(c) > 1.0 + 1e-14)
        throw std::invalid_argument("convex_family: requires |c| <= 1");
    FamilyMember fm;
    Series f = Series::zero(degree);
    switch (kind) {
        case ConvexKind::HalfplaneType: {
            // z/(1 - cz) = sum c^{k-1} z^k
            cplx pw(1.0);
            for (int k = 1; k <= degree; ++k) {
                f.set_coeff(k, pw);
                pw *= c;
            }
            fm.a2 = c;
            fm.name = "halfplane_type";
            break;
        }
        case ConvexKind::LogType: {
            if (std::abs(c) == 0.0)
                throw std::invalid_argument("convex_family: log_type needs c != 0");
            // -log(1 - cz)/c = sum c^{k-1} z^k / k
            cplx pw(1.0);
            for (int k = 1; k <= degree; ++k) {
                f.set_coeff(k, pw / static_cast<double>(k));
                pw *= c;
            }
            fm.a2 = c / 2.0;
            fm.name = "log_type";
            break;
        }
        case ConvexKind::Identity:
            f.set_coeff(1, cplx(1.0));
            fm.a2 = cplx(0.0);
            fm.name = "identity";
            break;
    }
    screen_convex(f, grid);
    fm.f = std::move(f);
    return fm;
}

FamilyMember starlike_family(ConvexKind kind, cplx c, int degree, const EvalGrid& grid) {
    const FamilyMember g = convex_family(kind, c, degree, grid);
    Series f = Series::zero(degree);
    for (int k = 1; k <= degree; ++k) f.set_coeff(k, g.f.coeff(k) * static_cast<double>(k));
    screen_starlike(f, grid);
    FamilyMember fm;
    fm.f = std::move(f);
    fm.a2 = 2.0 * g.a2;
    fm.name = g.name + "_alexander";
    return fm;
}

Series alexander_inverse(const Series& f) {
    if (std::abs(f.coeff(0)) > 1e-12)
        throw std::invalid_argument("alexander_inverse: series must vanish at 0");
    Series g = Series::zero(f.degree());
    for (int k = 1; k <= f.degree(); ++k) g.set_coeff(k, f.coeff(k) / static_cast<double>(k));
    return g;
}

OrderVerification verify_order_theorem(OrderTheorem which, const Series& f, const EvalGrid& grid,
                                       double tol) {
    require_normalized(f);
    OrderVerification out;
    out.a2_mag = std::abs(f.coeff(2));

    const Series df = f.derivative();
    switch (which) {
        case OrderTheorem::StarlikeOrder: {
            screen_convex(f, grid);
            out.alpha = starlike_order_of_convex(out.a2_mag).alpha;
            out.functional_inf = grid_inf(
                [&](cplx z) { return (z * df.evaluate(z) / f.evaluate(z)).real(); }, grid,
                &out.worst_z);
            out.note = "inf Re(z f'/f)";
            break;
        }
        case OrderTheorem::SqrtDeriv: {
            screen_convex(f, grid);
            out.alpha = sqrt_deriv_order(out.a2_mag);
            const Series root = sqrt_series(df.truncated(f.degree()));
            out.functional_inf =
                grid_inf([&](cplx z) { return root.evaluate(z).real(); }, grid, &out.worst_z);
            out.note = "inf Re sqrt(f')";
            break;
        }
        case OrderTheorem::SqrtRatio: {
            screen_starlike(f, grid);
            out.alpha = sqrt_ratio_order(out.a2_mag);
            Series ratio = Series::zero(f.degree());
            for (int k = 1; k <= f.degree(); ++k) ratio.set_coeff(k - 1, f.coeff(k));
            const Series root = sqrt_series(ratio);
            out.functional_inf =
                grid_inf([&](cplx z) { return root.evaluate(z).real(); }, grid, &out.worst_z);
            out.note = "inf Re sqrt(f/z)";
            break;
        }
    }
    out.pass = out.functional_inf >= out.alpha - tol;
    return out;
}

}  // namespace subord
