#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "subord/conformal_map.hpp"
#include "subord/rng.hpp"

using namespace subord;

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
double dist(cplx a, cplx b) { return std::abs(a - b); }

CanonicalMap sample_map(int kind, Rng& rng) {
    switch (kind) {
        case 0: {
            const double M = 0.5 + 1.5 * rng.uniform();
            return CanonicalMap::disk(M, std::polar(0.6 * M * rng.uniform(), rng.uniform(0.0, kTwoPi)));
        }
        case 1: {
            const double alpha = rng.uniform(-1.0, 1.0);
            return CanonicalMap::halfplane(alpha,
                                           cplx(alpha + 0.2 + rng.uniform(), rng.uniform(-1.0, 1.0)));
        }
        default:
            return CanonicalMap::affine(rng.gaussian_cplx(),
                                        std::polar(0.5 + rng.uniform(), rng.uniform(0.0, kTwoPi)));
    }
}
}  // namespace

TEST_CASE("closed-form values") {
    const auto unit = CanonicalMap::disk(1.0, cplx(0.0));
    CHECK(dist(unit.eval(cplx(0.3)), cplx(0.3)) == 0.0);

    const auto hp = CanonicalMap::halfplane(0.0, cplx(1.0));
    CHECK(dist(hp.eval(cplx(0.0)), cplx(1.0)) == 0.0);
    // (1+z)/(1-z) at 0.5 is 3
    CHECK(dist(hp.eval(cplx(0.5)), cplx(3.0)) < 1e-15);

    const auto aff = CanonicalMap::affine(cplx(1.0), cplx(1.0));
    CHECK(dist(aff.eval(cplx(0.0, 1.0)), cplx(1.0, 1.0)) == 0.0);
}

TEST_CASE("constructor preconditions") {
    CHECK_THROWS_AS(CanonicalMap::disk(1.0, cplx(1.5)), std::invalid_argument);
    CHECK_THROWS_AS(CanonicalMap::disk(-1.0, cplx(0.0)), std::invalid_argument);
    CHECK_THROWS_AS(CanonicalMap::halfplane(1.0, cplx(0.5)), std::invalid_argument);
    CHECK_THROWS_AS(CanonicalMap::affine(cplx(1.0), cplx(0.0)), std::invalid_argument);
}

TEST_CASE("derivatives at the origin") {
    const auto d = CanonicalMap::disk(2.0, cplx(0.5, 0.5));
    CHECK(std::abs(d.qprime0_mag() - (4.0 - 0.5) / 2.0) < 1e-15);

    const auto hp = CanonicalMap::halfplane(0.25, cplx(1.0, 3.0));
    CHECK(std::abs(hp.qprime0_mag() - 2.0 * (1.0 - 0.25)) < 1e-15);

    const auto aff = CanonicalMap::affine(cplx(1.0), cplx(0.0, 2.0));
    auto [d1, d2] = aff.derivatives(cplx(0.3, 0.1));
    CHECK(dist(d1, cplx(0.0, 2.0)) == 0.0);
    CHECK(dist(d2, cplx(0.0)) == 0.0);
}

TEST_CASE("inversion examples and roundtrip") {
    CHECK(dist(CanonicalMap::disk(1.0, cplx(0.0)).invert(cplx(0.5)), cplx(0.5)) == 0.0);
    CHECK(dist(CanonicalMap::halfplane(0.0, cplx(1.0)).invert(cplx(1.0)), cplx(0.0)) == 0.0);
    CHECK(dist(CanonicalMap::affine(cplx(1.0), cplx(1.0)).invert(cplx(1.5, 0.5)), cplx(0.5, 0.5)) ==
          0.0);

    for (int kind = 0; kind < 3; ++kind) {
        Rng rng(50 + kind);
        const CanonicalMap q = sample_map(kind, rng);
        for (int i = 0; i < 1000; ++i) {
            const cplx z = std::polar(rng.uniform() * 0.999, rng.uniform(0.0, kTwoPi));
            CHECK(dist(q.invert(q.eval(z)), z) < 1e-12);
        }
    }
}

TEST_CASE("boundary images") {
    Rng rng(99);
    const auto d = CanonicalMap::disk(1.7, cplx(0.4, -0.3));
    for (int j = 1; j < 360; ++j) {
        const double v = std::abs(d.eval(std::polar(1.0, kTwoPi * j / 360)));
        CHECK(std::abs(v - 1.7) < 1e-12);
    }
    const auto hp = CanonicalMap::halfplane(-0.25, cplx(0.5, 1.0));
    for (int j = 1; j < 360; ++j) {
        const double re = hp.eval(std::polar(1.0, kTwoPi * j / 360)).real();
        CHECK(std::abs(re - (-0.25)) < 1e-10);
    }
}

TEST_CASE("membership margins") {
    const auto mem = CanonicalMap::disk(2.0, cplx(0.0)).contains(cplx(1.0));
    CHECK(mem.inside);
    CHECK(std::abs(mem.margin - 0.5) < 1e-15);

    CHECK_FALSE(CanonicalMap::halfplane(0.0, cplx(1.0)).contains(cplx(-1.0)).inside);

    const auto affm = CanonicalMap::affine(cplx(1.0), cplx(1.0)).contains(cplx(1.99));
    CHECK(affm.inside);
    CHECK(std::abs(affm.margin - 0.01) < 1e-12);

    // omitted Mobius value counts as outside
    const auto omitted = CanonicalMap::halfplane(0.0, cplx(1.0)).contains(cplx(-1.0, 0.0));
    CHECK_FALSE(omitted.inside);
}

TEST_CASE("dilation") {
    const auto q = CanonicalMap::disk(1.0, cplx(0.0)).dilate(0.5);
    CHECK(dist(q.eval(cplx(0.8)), cplx(0.4)) < 1e-15);
    CHECK(std::abs(q.qprime0_mag() - 0.5) < 1e-15);

    const auto aff = CanonicalMap::affine(cplx(1.0), cplx(1.0)).dilate(0.9);
    CHECK(std::abs(std::abs(aff.eval(std::polar(1.0, 1.3)) - cplx(1.0)) - 0.9) < 1e-15);

    CHECK_THROWS_AS(CanonicalMap::disk(1.0, cplx(0.0)).dilate(1.5), std::invalid_argument);

    // dilated image strictly inside the original image
    for (int kind = 0; kind < 3; ++kind) {
        Rng rng(150 + kind);
        const CanonicalMap q0 = sample_map(kind, rng);
        const CanonicalMap qr = q0.dilate(0.9);
        for (int j = 1; j < 128; ++j) {
            const cplx w = qr.eval(std::polar(1.0, kTwoPi * j / 128));
            CHECK(q0.contains(w).inside);
        }
    }
}

TEST_CASE("series expansion matches the closed form") {
    for (int kind = 0; kind < 3; ++kind) {
        Rng rng(250 + kind);
        CanonicalMap q = sample_map(kind, rng);
        if (kind == 1) q = q.dilate(0.8);   // keep tails summable at r = 0.5
        const Series s = q.to_series(96);
        for (int i = 0; i < 40; ++i) {
            const cplx z = std::polar(0.5 * rng.uniform(), rng.uniform(0.0, kTwoPi));
            CHECK(dist(s.evaluate(z), q.eval(z)) < 1e-10);
        }
    }
}

TEST_CASE("exceptional boundary point") {
    const auto hp = CanonicalMap::halfplane(0.0, cplx(1.0));
    CHECK(hp.boundary_excluded(0.0));
    CHECK_FALSE(hp.boundary_excluded(0.3));
    CHECK_THROWS_AS(hp.eval(cplx(1.0)), std::domain_error);
    // dilated half-plane maps are analytic on the closed disk
    CHECK_FALSE(hp.dilate(0.9).boundary_excluded(0.0));
    CHECK(dist(hp.dilate(0.9).eval(cplx(1.0)), hp.eval(cplx(0.9))) == 0.0);
}

TEST_CASE("shrink_image keeps the base point") {
    for (int kind = 0; kind < 3; ++kind) {
        Rng rng(350 + kind);
        const CanonicalMap q = sample_map(kind, rng);
        const CanonicalMap s = q.shrink_image(0.7);   // disk draws keep |a| < 0.7 M
        CHECK(dist(s.q0(), q.q0()) < 1e-15);
        // shrunk image inside the original
        for (int j = 1; j < 64; ++j) {
            const cplx w = s.eval(std::polar(0.999, kTwoPi * j / 64));
            CHECK(q.contains(w).inside);
        }
    }
}
