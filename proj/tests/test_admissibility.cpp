#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "subord/admissibility.hpp"
#include "subord/examples.hpp"
#include "subord/rng.hpp"

using namespace subord;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;

// Independent validation that a reported point belongs to the admissible
// boundary set: r0 on the image boundary, s0 = m zeta q'(zeta) with m at or
// above the class bound, t0 on or above the curvature constraint.
void check_point_valid(const AdmissiblePoint& pt, const CanonicalMap& q, int n, double beta,
                       double tol = 1e-9) {
    const cplx zeta = std::polar(1.0, pt.theta);
    CHECK(std::abs(pt.r0 - q.eval(zeta)) < tol);
    auto [q1, q2] = q.derivatives(zeta);
    CHECK(std::abs(pt.s0 - pt.m * zeta * q1) < tol * (1.0 + std::abs(pt.s0)));
    CHECK(pt.m >= admissible_m_min(q, n, beta) - tol);
    const double lhs = (pt.t0 / pt.s0 + cplx(1.0)).real();
    const double rhs = pt.m * (cplx(1.0) + zeta * q2 / q1).real();
    CHECK(lhs >= rhs - tol * (1.0 + std::abs(rhs)));
}
}  // namespace

TEST_CASE("admissible_set_sample satisfies the disk specialization") {
    // q = disk(M, 0): r0 = M e^{i theta}, K = |s0| >= (n + (M-beta)/(M+beta)) M
    // and Re(t0 e^{-i theta}) >= (m - 1) K.
    Rng rng(5);
    for (int i = 0; i < 10000; ++i) {
        const double M = 0.5 + 1.5 * rng.uniform();
        const double beta = M * rng.uniform();
        const int n = 1 + static_cast<int>(rng.next_u64() % 3);
        const auto q = CanonicalMap::disk(M, cplx(0.0));
        const double m_min = admissible_m_min(q, n, beta);
        const double m = m_min + 4.0 * rng.uniform();
        const double theta = rng.uniform(0.0, kTwoPi);
        const cplx t_param(rng.uniform() * 2.0, rng.uniform(-2.0, 2.0));
        const AdmissiblePoint pt = admissible_set_sample(q, n, beta, theta, m, t_param);

        CHECK(std::abs(std::abs(pt.r0) - M) < 1e-10);
        const double K = std::abs(pt.s0);
        CHECK(K >= (n + (M - beta) / (M + beta)) * M - 1e-10);
        const cplx dir = pt.r0 / M;   // e^{i theta} of the image point
        CHECK((pt.t0 * std::conj(dir)).real() >=
              (n - 2.0 * beta / (M + beta)) * K - 1e-10 * (1.0 + K));
    }
}

TEST_CASE("admissible_set_sample satisfies the half-plane specialization") {
    // q = halfplane(0, 1): r0 = i rho, sigma <= -(n + (2-beta)/(2+beta))(1+rho^2)/2,
    // sigma + mu <= 0.
    Rng rng(6);
    const auto q = CanonicalMap::halfplane(0.0, cplx(1.0));
    for (int i = 0; i < 10000; ++i) {
        const double beta = 2.0 * rng.uniform();
        const int n = 1 + static_cast<int>(rng.next_u64() % 3);
        const double m = admissible_m_min(q, n, beta) + 4.0 * rng.uniform();
        const double theta = rng.uniform(0.05, kTwoPi - 0.05);
        const AdmissiblePoint pt = admissible_set_sample(q, n, beta, theta, m, cplx(rng.uniform(), 0.0));

        CHECK(std::abs(pt.r0.real()) < 1e-9);
        const double rho = pt.r0.imag();
        const double sigma = pt.s0.real();
        CHECK(std::abs(pt.s0.imag()) < 1e-9 * (1.0 + std::abs(sigma)));
        CHECK(sigma <= -(n + (2.0 - beta) / (2.0 + beta)) * (1.0 + rho * rho) / 2.0 +
                  1e-10 * (1.0 + std::abs(sigma)));
        const double mu = pt.t0.real();
        CHECK(sigma + mu <= 1e-9 * (1.0 + std::abs(sigma)));
    }
}

TEST_CASE("admissible_set_sample: the affine case constraint") {
    // q = 1 + z: Re(t0 conj(zeta)) >= m(m-1) on the constraint boundary.
    Rng rng(7);
    const auto q = CanonicalMap::affine(cplx(1.0), cplx(1.0));
    for (int i = 0; i < 2000; ++i) {
        const double beta = rng.uniform();
        const double m = admissible_m_min(q, 2, beta) + 3.0 * rng.uniform();
        const double theta = rng.uniform(0.0, kTwoPi);
        const AdmissiblePoint pt =
            admissible_set_sample(q, 2, beta, theta, m, cplx(rng.uniform(), 0.0));
        const cplx zeta = std::polar(1.0, theta);
        CHECK((pt.t0 * std::conj(zeta)).real() >= m * (m - 1.0) - 1e-9 * (1.0 + m * m));
    }
}

TEST_CASE("admissible_set_sample errors") {
    const auto q = CanonicalMap::halfplane(0.0, cplx(1.0));
    CHECK_THROWS_AS(admissible_set_sample(q, 1, 1.0, 1.0, 0.5, cplx(0.0)),
                    std::invalid_argument);           // m below the bound
    CHECK_THROWS_AS(admissible_set_sample(q, 1, 1.0, 0.0, 5.0, cplx(0.0)), std::domain_error);
    CHECK_THROWS_AS(admissible_m_min(q, 1, 3.0), std::invalid_argument);   // beta > |q'(0)|
}

TEST_CASE("check_admissible: the five built-in cases") {
    // 4.1 and 4.2 and 4.5 are admissible against their own sharp regions.
    for (const char* id : {"4.1", "4.2", "4.5"}) {
        const ExampleCase ex = example_case(id, id == std::string("4.5") ? 2 : 1, 0.5, 1.0);
        const AdmissibilityVerdict v = check_admissible(ex.psi, ex.omega, ex.map, ex.n, ex.beta);
        CHECK(v.status == AdmissibleStatus::AdmissibleExact);
        CHECK(v.exact_reduction);
    }

    // 4.3: violation below the threshold, admissible at it.
    {
        const ExampleCase ex = example_case("4.3", 1, 2.0, 1.0);
        const AdmissibilityVerdict v = check_admissible(ex.psi, ex.omega, ex.map, 1, 2.0);
        REQUIRE(v.status == AdmissibleStatus::Violation);
        // spec witness: rho = 0, sigma = -1/2, psi value 1/2
        CHECK(std::abs(v.worst.r0) < 1e-9);
        CHECK(std::abs(v.worst.s0 - cplx(-0.5)) < 1e-9);
        CHECK(std::abs(v.psi_value - cplx(0.5)) < 1e-9);
        check_point_valid(v.worst, ex.map, 1, 2.0);
        CHECK(ex.omega.contains(v.psi_value));

        const AdmissibilityVerdict ok = check_admissible(ex.psi, ex.omega, ex.map, 2, 2.0);
        CHECK(ok.admissible());
    }
}

TEST_CASE("check_admissible: threshold decisions match the closed form") {
    for (const char* id : {"4.3", "4.4"}) {
        for (double beta : {0.5, 1.0, 2.0}) {
            const ExampleCase ex = example_case(id, 1, beta, 1.0);
            const double threshold = (2.0 + 3.0 * beta) / (2.0 + beta);
            for (int n = 1; n <= 3; ++n) {
                const AdmissibilityVerdict v = check_admissible(ex.psi, ex.omega, ex.map, n, beta);
                CHECK(v.admissible() == (n + 1e-12 >= threshold));
                if (v.status == AdmissibleStatus::Violation) {
                    check_point_valid(v.worst, ex.map, n, beta);
                    CHECK(ex.omega.contains(v.psi_value));
                }
            }
        }
    }
}

TEST_CASE("check_admissible: condition (ii) and beta range errors") {
    const ExampleCase ex = example_case("4.3", 1, 1.0, 1.0);
    // psi(q(0),0,0) = psi(1,0,0) = 1; a region missing 1 fails condition (ii)
    const OmegaRegion far = OmegaRegion::disk(cplx(10.0), 0.5);
    CHECK_THROWS_AS(check_admissible(ex.psi, far, ex.map, 1, 1.0), not_admissible_error);
    CHECK_THROWS_AS(check_admissible(ex.psi, ex.omega, ex.map, 1, 5.0), std::invalid_argument);
}

TEST_CASE("check_admissible: generic-psi search path") {
    // 4.3 wrapped as an opaque callable: the bounded search finds the violation.
    const ExampleCase ex = example_case("4.3", 1, 2.0, 1.0);
    const PsiSpec generic = PsiSpec::make_generic(
        [](cplx r, cplx s, cplx) { return r + s + cplx(1.0) - r * r; });
    SearchConfig cheap = SearchConfig::defaults();
    cheap.theta_points = 512;
    cheap.m_points = 16;
    const AdmissibilityVerdict v = check_admissible(generic, ex.omega, ex.map, 1, 2.0, cheap);
    REQUIRE(v.status == AdmissibleStatus::Violation);
    check_point_valid(v.worst, ex.map, 1, 2.0);
    CHECK(ex.omega.contains(v.psi_value));

    // Admissible parameters: the bounded search cannot certify the unbounded
    // set, so anything except Violation is acceptable; margins stay positive.
    const AdmissibilityVerdict ok = check_admissible(generic, ex.omega, ex.map, 2, 2.0, cheap);
    CHECK(ok.status != AdmissibleStatus::Violation);
}

TEST_CASE("sharp_disk_radius reproduces the closed forms") {
    {
        const ExampleCase ex = example_case("4.1", 1, 1.0, 1.0);
        const double rstar = sharp_disk_radius(ex.psi, ex.map, 1, 1.0);
        CHECK(std::abs(rstar - 2.0) < 1e-12);
    }
    {
        const ExampleCase ex = example_case("4.1", 1, 0.5, 1.0);
        CHECK(sharp_disk_radius(ex.psi, ex.map, 1, 0.5) ==
              doctest::Approx(25.0 / 9.0).epsilon(1e-12));
    }
    for (double beta : {0.5, 1.0, 2.0}) {
        const ExampleCase ex = example_case("4.2", 1, beta, 1.0);
        CHECK(sharp_disk_radius(ex.psi, ex.map, 1, beta) ==
              doctest::Approx((6.0 - beta) / (2.0 + beta)).epsilon(1e-10));
    }
    for (double beta : {0.25, 0.5, 1.0}) {
        const ExampleCase ex = example_case("4.5", 2, beta, 1.0);
        CHECK(sharp_disk_radius(ex.psi, ex.map, 2, beta) ==
              doctest::Approx(4.0 * (3.0 + 2.0 * beta) / ((1.0 + beta) * (1.0 + beta)))
                  .epsilon(1e-10));
    }
}

TEST_CASE("sharp_disk_radius: monotone in beta with the classical endpoint") {
    for (int n : {1, 2}) {
        double prev = std::numeric_limits<double>::infinity();
        for (int i = 1; i <= 8; ++i) {
            const double beta = i / 8.0;
            const ExampleCase ex = example_case("4.1", n, beta, 1.0);
            const double rstar = sharp_disk_radius(ex.psi, ex.map, n, beta);
            CHECK(rstar <= prev + 1e-12);
            prev = rstar;
        }
        CHECK(prev == doctest::Approx(n * n + 1.0).epsilon(1e-12));
    }
}

TEST_CASE("sharp_disk_radius agrees with a brute-force minimum") {
    // Independent coarse minimization of |psi| over sampled admissible points.
    for (const char* id : {"4.1", "4.2", "4.5"}) {
        const int n = (id == std::string("4.5")) ? 2 : 1;
        const ExampleCase ex = example_case(id, n, 0.5, 1.0);
        const double rstar = sharp_disk_radius(ex.psi, ex.map, n, 0.5);

        double brute = std::numeric_limits<double>::infinity();
        const double m_min = admissible_m_min(ex.map, n, 0.5);
        for (int jt = 1; jt < 720; ++jt) {
            const double theta = kTwoPi * jt / 720;
            if (ex.map.boundary_excluded(theta)) continue;
            for (int jm = 0; jm <= 60; ++jm) {
                const double m = m_min + 8.0 * jm / 60.0;
                for (int ju = 0; ju <= 12; ++ju) {
                    for (int jv = -6; jv <= 6; ++jv) {
                        const AdmissiblePoint pt = admissible_set_sample(
                            ex.map, n, 0.5, theta, m, cplx(ju * 0.5, jv * 0.5));
                        brute = std::min(brute,
                                         std::abs(ex.psi.eval(pt.r0, pt.s0, pt.t0)));
                    }
                }
            }
        }
        CHECK(brute >= rstar - 1e-9);          // reduction is a certified lower bound
        CHECK(brute <= rstar * 1.05 + 0.05);   // and the brute force approaches it
    }
}

TEST_CASE("min_admissible_n") {
    {
        const ExampleCase ex = example_case("4.3", 1, 2.0, 1.0);
        CHECK(min_admissible_n(ex.psi, ex.map, 2.0, ex.omega) == 2);
    }
    {
        const ExampleCase ex = example_case("4.3", 1, 2.0 / 3.0, 1.0);
        CHECK(min_admissible_n(ex.psi, ex.map, 2.0 / 3.0, ex.omega) == 2);
    }
    {
        const ExampleCase ex = example_case("4.4", 1, 2.0, 1.0);
        CHECK(min_admissible_n(ex.psi, ex.map, 2.0, ex.omega) == 2);
    }
}

TEST_CASE("beta inclusion chain: admissibility is downward closed") {
    for (const char* id : {"4.1", "4.2", "4.3", "4.4", "4.5"}) {
        for (int n : {1, 2}) {
            bool seen_admissible = false;
            // descending beta: once admissible, smaller beta stays admissible
            for (double beta : {2.0, 1.5, 1.0, 0.5, 0.25}) {
                ExampleCase ex;
                try {
                    ex = example_case(id, n, beta, 1.0);
                } catch (const std::invalid_argument&) {
                    continue;   // beta outside the case's range
                }
                const AdmissibilityVerdict v =
                    check_admissible(ex.psi, ex.omega, ex.map, ex.n, beta);
                if (seen_admissible) CHECK(v.admissible());
                seen_admissible = seen_admissible || v.admissible();
            }
        }
    }
}

TEST_CASE("image_of agrees with map membership") {
    Rng rng(77);
    for (int kind = 0; kind < 3; ++kind) {
        for (int variant = 0; variant < 2; ++variant) {
            CanonicalMap q = CanonicalMap::disk(1.0 + rng.uniform(),
                                                std::polar(0.4 * rng.uniform(), rng.uniform(0.0, kTwoPi)));
            if (kind == 1)
                q = CanonicalMap::halfplane(rng.uniform(-0.5, 0.5) - 1.0,
                                            cplx(rng.uniform(), rng.uniform()));
            if (kind == 2) q = CanonicalMap::affine(rng.gaussian_cplx(), cplx(1.0, rng.uniform()));
            if (variant == 1) q = q.dilate(0.6 + 0.3 * rng.uniform());
            const OmegaRegion omega = OmegaRegion::image_of(q);
            for (int i = 0; i < 400; ++i) {
                const cplx w = 4.0 * rng.gaussian_cplx();
                const auto mem = q.contains(w);
                if (std::abs(mem.margin) < 1e-6) continue;   // boundary; skip
                CHECK(omega.contains(w) == mem.inside);
            }
        }
    }
}
