#include "subord/suites.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "subord/rng.hpp"

namespace subord {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

// Seeded Schwarz function with certified sup|h| <= 1 (coefficient sums).
SchwarzSample random_schwarz(Rng& rng) {
    SchwarzSample w;
    const double cmag = rng.uniform();
    w.c = std::polar(cmag, rng.uniform(0.0, kTwoPi));
    Series h = Series::zero(12);
    double decay = 1.0, total = 0.0;
    for (int k = 0; k <= 12; ++k) {
        h.set_coeff(k, rng.gaussian_cplx() * decay);
        total += std::abs(h.coeff(k));
        decay *= 0.7;
    }
    if (total > 0.0) h *= cplx(rng.uniform() / total);   // sup|h| <= 1, varied size
    w.h = h;
    return w;
}

CanonicalMap random_map(Rng& rng) {
    switch (rng.next_u64() % 3) {
        case 0: {
            const double M = 0.5 + 1.5 * rng.uniform();
            const cplx a = std::polar(0.5 * M * rng.uniform(), rng.uniform(0.0, kTwoPi));
            return CanonicalMap::disk(M, a);
        }
        case 1: {
            const double alpha = rng.uniform(-0.5, 0.5);
            return CanonicalMap::halfplane(alpha, cplx(alpha + 0.5 + rng.uniform(), rng.uniform(-0.5, 0.5)));
        }
        default:
            return CanonicalMap::affine(cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)),
                                        std::polar(0.5 + rng.uniform(), rng.uniform(0.0, kTwoPi)));
    }
}

// Random class member with a modest random tail.
Series random_member(const FixedClassSpec& spec, Rng& rng) {
    std::vector<cplx> tail(10);
    double decay = 0.4 * spec.beta + 0.05;
    for (auto& t : tail) {
        t = rng.gaussian_cplx() * decay;
        decay *= 0.6;
    }
    return make_member(spec, tail);
}

}  // namespace

SuiteResult schwarz_bound_suite(long trials, std::uint64_t seed, const EvalGrid& grid) {
    SuiteResult res;
    res.trials = trials;
    res.worst_margin = -std::numeric_limits<double>::infinity();
    for (long i = 0; i < trials; ++i) {
        Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(i));
        const SchwarzSample w = random_schwarz(rng);
        const double a1 = std::abs(w.c);
        bool bad = false;
        for (double r : grid.radii) {
            const double bound = schwarz_bound(a1, r);
            for (int j = 0; j < grid.angles; ++j) {
                const double excess = std::abs(w.eval(std::polar(r, kTwoPi * j / grid.angles))) - bound;
                res.worst_margin = std::max(res.worst_margin, excess);
                if (excess > 1e-10) bad = true;
            }
        }
        if (bad) ++res.failures;
    }
    res.note = "worst_margin = max(|w| - bound), pass <= 1e-10";
    return res;
}

SuiteResult schwarz_extremal_suite(long trials, std::uint64_t seed) {
    SuiteResult res;
    res.trials = trials;
    res.worst_margin = 0.0;
    for (long i = 0; i < trials; ++i) {
        Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(i));
        const double phase = rng.uniform(0.0, kTwoPi);
        const cplx a1 = std::polar(rng.uniform(), phase);
        // Equality holds along the ray arg z = arg(a1) + t. Half the trials
        // align that ray with the positive reals, the rest test it directly.
        const bool aligned = (i % 2 == 0);
        const double t = aligned ? -phase : rng.uniform(0.0, kTwoPi);
        const cplx ray = std::polar(1.0, std::arg(a1) + t);
        const Series w = schwarz_extremal(a1, t, 96);
        bool bad = false;
        for (double r : {0.2, 0.5, 0.8}) {
            const double gap =
                std::abs(std::abs(w.evaluate(r * ray)) - schwarz_bound(std::abs(a1), r));
            res.worst_margin = std::max(res.worst_margin, gap);
            if (gap > 1e-8) bad = true;
        }
        if (bad) ++res.failures;
    }
    res.note = "worst_margin = max ||w| - bound| on the attainment ray, pass <= 1e-8";
    return res;
}

SuiteResult interior_max_suite(long trials, std::uint64_t seed) {
    SuiteResult res;
    res.trials = trials;
    res.worst_margin = std::numeric_limits<double>::infinity();
    for (long i = 0; i < trials; ++i) {
        Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(i));
        const int n = 1 + static_cast<int>(rng.next_u64() % 3);
        Series g = Series::zero(n + 8);
        g.set_coeff(n, std::polar(0.3 + rng.uniform(), rng.uniform(0.0, kTwoPi)));
        for (int k = n + 1; k <= g.degree(); ++k) g.set_coeff(k, rng.gaussian_cplx() * 0.2);
        const double r = 0.4 + 0.5 * rng.uniform();
        const CircleExtremum ext = max_modulus_on_circle(g, r);
        try {
            const ContactReport rep = verify_interior_max(g, ext.z);
            if (!rep.pass) ++res.failures;
            res.worst_margin = std::min(res.worst_margin, rep.m - rep.m_lower);
        } catch (const std::exception&) {
            ++res.skipped;
        }
    }
    res.note = "worst_margin = min(m - m_lower)";
    return res;
}

SuiteResult boundary_contact_suite(long trials, std::uint64_t seed) {
    SuiteResult res;
    res.trials = trials;
    res.worst_margin = std::numeric_limits<double>::infinity();
    for (long i = 0; i < trials; ++i) {
        Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(i));
        const CanonicalMap q = random_map(rng);
        const int n = 1 + static_cast<int>(rng.next_u64() % 3);
        const double frac = 0.2 + 0.75 * rng.uniform();
        const FixedClassSpec spec{q.q0(), n, frac * q.qprime0_mag()};
        const Series p = sample_subordinate(spec, q, seed * 1315423911ull + i);

        // Pick a dilation that guarantees a contact below radius 0.999.
        double reach = 0.0;
        for (double r : {0.5, 0.8, 0.95, 0.99}) {
            reach = std::max(reach, max_preimage_on_circle(p, q, r, 512).value);
        }
        if (!(reach > 0.05)) {
            ++res.skipped;
            continue;
        }
        const double rho = std::clamp(0.75 * reach, 0.02, 0.97);
        const CanonicalMap q_rho = q.dilate(rho);
        const auto r0 = first_contact_radius(p, q_rho, 0.999, 512);
        if (!r0) {
            ++res.skipped;
            continue;
        }
        const CircleExtremum ext = max_preimage_on_circle(p, q_rho, *r0, 512);
        try {
            const ContactReport rep = verify_boundary_contact(p, spec, q_rho, ext.z);
            if (!rep.pass) ++res.failures;
            res.worst_margin = std::min(res.worst_margin, rep.m - rep.m_lower);
        } catch (const std::exception&) {
            ++res.skipped;
        }
    }
    res.note = "worst_margin = min(m - m_lower) over dilated first contacts";
    return res;
}

SuiteResult max_modulus_growth_suite(long trials, std::uint64_t seed) {
    SuiteResult res;
    res.trials = trials;
    res.worst_margin = std::numeric_limits<double>::infinity();
    for (long i = 0; i < trials; ++i) {
        Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(i));
        const int n = 1 + static_cast<int>(rng.next_u64() % 3);
        const FixedClassSpec spec{cplx(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5)), n,
                                  0.2 + rng.uniform()};
        const Series p = random_member(spec, rng);
        const double r = 0.5 + 0.4 * rng.uniform();
        const CircleExtremum ext = max_modulus_on_circle(p, r);
        try {
            const ContactReport rep = verify_max_modulus_growth(p, spec, ext.z);
            if (!rep.pass) ++res.failures;
            res.worst_margin = std::min(res.worst_margin, rep.m - rep.m_lower);
        } catch (const std::exception&) {
            ++res.skipped;   // |p(z0)| <= |a| draws are rejected, not evidence
        }
    }
    res.note = "worst_margin = min(z0 p'/p - bound)";
    return res;
}

SuiteResult min_re_suite(long trials, std::uint64_t seed) {
    SuiteResult res;
    res.trials = trials;
    res.worst_margin = std::numeric_limits<double>::infinity();
    for (long i = 0; i < trials; ++i) {
        Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(i));
        const int n = 1 + static_cast<int>(rng.next_u64() % 3);
        const FixedClassSpec spec{cplx(rng.uniform(0.5, 1.5), rng.uniform(-0.5, 0.5)), n,
                                  0.2 + rng.uniform()};
        const Series p = random_member(spec, rng);
        const double r = 0.5 + 0.4 * rng.uniform();
        const CircleExtremum ext = min_re_on_circle(p, r);
        try {
            const ContactReport rep = verify_min_re(p, spec, ext.z);
            if (!rep.pass) ++res.failures;
            res.worst_margin = std::min(res.worst_margin, rep.m_lower - rep.m);
        } catch (const std::exception&) {
            ++res.skipped;
        }
    }
    res.note = "worst_margin = min(bound - z0 p'(z0))";
    return res;
}

}  // namespace subord
