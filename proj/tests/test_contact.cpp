#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "subord/contact.hpp"
#include "subord/rng.hpp"
#include "subord/suites.hpp"

using namespace subord;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
double dist(cplx a, cplx b) { return std::abs(a - b); }
}

TEST_CASE("schwarz_bound") {
    CHECK(schwarz_bound(1.0, 0.37) == doctest::Approx(0.37).epsilon(1e-15));
    CHECK(schwarz_bound(0.0, 0.4) == doctest::Approx(0.16).epsilon(1e-15));
    CHECK(schwarz_bound(0.5, 0.5) == doctest::Approx(0.4).epsilon(1e-15));
    CHECK_THROWS_AS(schwarz_bound(1.5, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(schwarz_bound(0.5, 1.5), std::invalid_argument);
}

TEST_CASE("schwarz_extremal series") {
    const Series sq = schwarz_extremal(cplx(0.0), 0.0, 16);
    CHECK(dist(sq.coeff(2), cplx(1.0)) < 1e-15);
    for (int k : {0, 1, 3, 4}) CHECK(dist(sq.coeff(k), cplx(0.0)) < 1e-15);

    const Series id = schwarz_extremal(cplx(1.0), 0.0, 16);
    CHECK(dist(id.coeff(1), cplx(1.0)) < 1e-15);
    for (int k = 2; k <= 16; ++k) CHECK(dist(id.coeff(k), cplx(0.0)) < 1e-15);

    const Series half = schwarz_extremal(cplx(0.5), 0.0, 64);
    CHECK(std::abs(std::abs(half.evaluate(cplx(0.5))) - schwarz_bound(0.5, 0.5)) < 1e-12);

    CHECK_THROWS_AS(schwarz_extremal(cplx(1.2), 0.0), std::invalid_argument);
}

TEST_CASE("m_lower_bound") {
    CHECK(m_lower_bound(3, 2.0, 2.0, 1.0) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(m_lower_bound(2, 1.5, 0.0, 0.7) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(m_lower_bound(1, 1.0, 0.5, 1.0) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
    CHECK_THROWS_AS(m_lower_bound(1, 1.0, 2.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(m_lower_bound(1, 1.0, 0.5, 0.0), std::invalid_argument);

    // strictly decreasing in beta and in r0
    double prev = m_lower_bound(1, 1.0, 0.0, 1.0);
    for (int i = 1; i <= 20; ++i) {
        const double cur = m_lower_bound(1, 1.0, i / 20.0, 1.0);
        CHECK(cur < prev);
        prev = cur;
    }
    prev = m_lower_bound(2, 1.0, 0.5, 0.05);
    for (int i = 2; i <= 20; ++i) {
        const double cur = m_lower_bound(2, 1.0, 0.5, 0.05 * i);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("interior max: monomials and hand cases") {
    for (int n = 1; n <= 3; ++n) {
        Series g = Series::zero(n);
        g.set_coeff(n, cplx(1.0));
        const ContactReport rep = verify_interior_max(g, cplx(0.5));
        CHECK(rep.pass);
        CHECK(rep.m == doctest::Approx(n).epsilon(1e-12));
        CHECK(rep.m_lower == doctest::Approx(n).epsilon(1e-12));
    }
    Series g2 = Series::zero(2);
    g2.set_coeff(2, cplx(1.0));
    const ContactReport rep = verify_interior_max(g2, std::polar(0.7, kPi / 3.0));
    CHECK(rep.pass);
    CHECK(rep.m == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(rep.curvature_lhs == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("interior max: extremal attains the bound") {
    // g(z) = w(z/z0) for the extremal w makes the multiplier bound an equality.
    const double z0 = 0.7;
    const Series w = schwarz_extremal(cplx(0.5), 0.0, 64);
    Series g = Series::zero(64);
    double scale = 1.0;
    for (int k = 0; k <= 64; ++k) {
        g.set_coeff(k, w.coeff(k) * scale);
        scale /= z0;
    }
    const ContactReport rep = verify_interior_max(g, cplx(z0));
    CHECK(rep.pass);
    CHECK(std::abs(rep.m - rep.m_lower) < 1e-8);
    CHECK(rep.m == doctest::Approx(4.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("interior max: degenerate input") {
    Series g = Series::zero(2);
    g.set_coeff(1, cplx(1.0));
    g.set_coeff(2, cplx(-2.0));   // g(0.5) = 0
    CHECK_THROWS_AS(verify_interior_max(g, cplx(0.5)), std::domain_error);
    CHECK_THROWS_AS(verify_interior_max(Series::zero(4), cplx(0.5)), std::invalid_argument);
}

TEST_CASE("boundary contact: hand case with equality") {
    const Series p = make_member({cplx(0.0), 2, 1.0}, {});
    const auto q = CanonicalMap::disk(0.25, cplx(0.0));
    const ContactReport rep = verify_boundary_contact(p, {cplx(0.0), 2, 1.0}, q, cplx(0.5));
    CHECK(rep.pass);
    CHECK(dist(rep.zeta0, cplx(1.0)) < 1e-12);
    CHECK(rep.m == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(rep.m_lower == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("boundary contact: identity contact multiplier") {
    const auto q = CanonicalMap::halfplane(0.0, cplx(1.0));
    const Series p = q.to_series(4096);
    ContactTolerances tol;
    tol.zeta_boundary = 0.2;   // the contact is reached only in the radial limit
    for (double r : {0.9, 0.99}) {
        const ContactReport rep =
            verify_boundary_contact(p, {cplx(1.0), 1, q.qprime0_mag()}, q, cplx(r), tol);
        CHECK(std::abs(rep.m - 1.0) < 1e-6);
        CHECK(std::abs(rep.im_m) < 1e-9);
    }
}

TEST_CASE("boundary contact: precondition violated") {
    const Series p = make_member({cplx(0.0), 2, 1.0}, {});
    const auto q = CanonicalMap::disk(0.25, cplx(0.0));
    // p(0.2) = 0.04 is far inside the image disk
    CHECK_THROWS_AS(verify_boundary_contact(p, {cplx(0.0), 2, 1.0}, q, cplx(0.2)),
                    std::domain_error);
}

TEST_CASE("max modulus growth") {
    // a = 0 reduces to the interior-maximum bound
    for (int trial = 0; trial < 20; ++trial) {
        Rng rng(37 + trial);
        const int n = 1 + static_cast<int>(rng.next_u64() % 3);
        const FixedClassSpec spec{cplx(0.0), n, 0.3 + rng.uniform()};
        std::vector<cplx> tail(6);
        for (auto& t : tail) t = rng.gaussian_cplx() * 0.2;
        const Series p = make_member(spec, tail);
        const CircleExtremum ext = max_modulus_on_circle(p, 0.7);
        const ContactReport growth = verify_max_modulus_growth(p, spec, ext.z);
        const ContactReport interior = verify_interior_max(p, ext.z);
        CHECK(growth.pass);
        CHECK(std::abs(growth.m_lower - interior.m_lower) < 1e-12);
    }

    // p = beta z: equality
    {
        const FixedClassSpec spec{cplx(0.0), 1, 0.8};
        const Series p = make_member(spec, {});
        const ContactReport rep = verify_max_modulus_growth(p, spec, cplx(0.6));
        CHECK(rep.pass);
        CHECK(rep.m == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(rep.m_lower == doctest::Approx(1.0).epsilon(1e-12));
    }

    // p = 1 + z: bound 2r/(3+2r) against value r/(1+r)
    {
        const FixedClassSpec spec{cplx(1.0), 1, 1.0};
        const Series p = make_member(spec, {});
        const double r = 0.6;
        const ContactReport rep = verify_max_modulus_growth(p, spec, cplx(r));
        CHECK(rep.pass);
        CHECK(rep.m == doctest::Approx(r / (1.0 + r)).epsilon(1e-12));
        CHECK(rep.m_lower == doctest::Approx(2.0 * r / (3.0 + 2.0 * r)).epsilon(1e-12));
    }

    CHECK_THROWS_AS(
        verify_max_modulus_growth(make_member({cplx(0.0), 1, 0.0}, {}), {cplx(0.0), 1, 0.0},
                                  cplx(0.5)),
        std::invalid_argument);
}

TEST_CASE("min Re data") {
    // p = 1 - z at z0 = r
    {
        const FixedClassSpec spec{cplx(1.0), 1, 1.0};
        Series p = Series::zero(1);
        p.set_coeff(0, cplx(1.0));
        p.set_coeff(1, cplx(-1.0));
        const double r = 0.5;
        const ContactReport rep = verify_min_re(p, spec, cplx(r));
        CHECK(rep.pass);
        CHECK(rep.m == doctest::Approx(-r).epsilon(1e-12));
        CHECK(rep.m_lower == doctest::Approx(-2.0 * r / 3.0).epsilon(1e-12));
    }
    // p = 1 + z attains its minimum of Re at z0 = -r
    {
        const FixedClassSpec spec{cplx(1.0), 1, 1.0};
        const Series p = make_member(spec, {});
        const ContactReport rep = verify_min_re(p, spec, cplx(-0.5));
        CHECK(rep.pass);
        CHECK(rep.curvature_lhs == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK_THROWS_AS(verify_min_re(make_member({cplx(1.0), 1, 0.0}, {}), {cplx(1.0), 1, 0.0},
                                  cplx(-0.5)),
                    std::invalid_argument);
    // Re p(z0) >= Re a is degenerate
    CHECK_THROWS_AS(verify_min_re(make_member({cplx(1.0), 1, 1.0}, {}), {cplx(1.0), 1, 1.0},
                                  cplx(0.5)),
                    std::domain_error);
}

TEST_CASE("locators") {
    const Series p = make_member({cplx(1.0), 1, 1.0}, {});
    const CircleExtremum mx = max_modulus_on_circle(p, 0.8);
    CHECK(std::abs(mx.theta) < 1e-9);
    CHECK(mx.value == doctest::Approx(1.8).epsilon(1e-12));

    const CircleExtremum mn = min_re_on_circle(p, 0.8);
    CHECK(std::abs(mn.theta - kPi) < 1e-9);
    CHECK(mn.value == doctest::Approx(0.2).epsilon(1e-10));

    // 1.2 z exits the unit disk at r = 5/6
    const Series big = Series::identity() * cplx(1.2);
    const auto r0 = first_contact_radius(big, CanonicalMap::disk(1.0, cplx(0.0)));
    REQUIRE(r0.has_value());
    CHECK(*r0 == doctest::Approx(5.0 / 6.0).epsilon(1e-9));

    // subordinate functions have no contact radius
    const Series small = Series::identity() * cplx(0.5);
    CHECK_FALSE(first_contact_radius(small, CanonicalMap::disk(1.0, cplx(0.0))).has_value());
}

TEST_CASE("property suites at unit scale") {
    const SuiteResult bound = schwarz_bound_suite(100, 21);
    CHECK(bound.failures == 0);
    CHECK(bound.worst_margin <= 1e-10);

    const SuiteResult ext = schwarz_extremal_suite(100, 22);
    CHECK(ext.failures == 0);

    const SuiteResult interior = interior_max_suite(60, 23);
    CHECK(interior.failures == 0);
    CHECK(interior.worst_margin >= -1e-9);

    const SuiteResult contact = boundary_contact_suite(60, 24);
    CHECK(contact.failures == 0);
    CHECK(contact.skipped < 30);

    const SuiteResult growth = max_modulus_growth_suite(60, 25);
    CHECK(growth.failures == 0);

    const SuiteResult minre = min_re_suite(60, 26);
    CHECK(minre.failures == 0);
}
