#include "subord/subordination.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "subord/rng.hpp"

namespace subord {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

std::vector<double> EvalGrid::radii_up_to(double r_max) const {
    std::vector<double> rs;
    for (double r : radii)
        if (r <= r_max + 1e-12) rs.push_back(r);
    return rs;
}

double EvalGrid::r_max() const {
    double m = 0.0;
    for (double r : radii) m = std::max(m, r);
    return m;
}

SubordinationResult is_subordinate(const Series& p, const CanonicalMap& q, double r_max,
                                   const EvalGrid& grid) {
    if (std::abs(p.evaluate(cplx(0.0)) - q.q0()) > 1e-9)
        throw std::invalid_argument("is_subordinate: p(0) != q(0), not comparable");

    double worst = 0.0;
    cplx witness(0.0);
    std::vector<cplx> units(static_cast<size_t>(grid.angles));
    for (int j = 0; j < grid.angles; ++j)
        units[static_cast<size_t>(j)] = std::polar(1.0, kTwoPi * j / grid.angles);
    for (double r : grid.radii_up_to(r_max)) {
        for (int j = 0; j < grid.angles; ++j) {
            const cplx z = r * units[static_cast<size_t>(j)];
            double v;
            try {
                v = std::abs(q.invert(p.evaluate(z)));
            } catch (const std::domain_error&) {
                v = std::numeric_limits<double>::infinity();
            }
            if (v > worst) {
                worst = v;
                witness = z;
            }
        }
    }
    SubordinationResult res;
    res.subordinate = worst < 1.0;
    res.margin = 1.0 - worst;
    res.witness = witness;
    return res;
}

namespace {

// Truncation degree that keeps the series of q(c z^n) pointwise faithful
// against its own subordination margin up to radius 0.99 (worst case: the
// half-plane map, coefficient ratio x = |c| 0.99^n).
int faithful_degree(int n, double cmag, int floor_degree) {
    const double x = std::min(0.998, cmag) * std::pow(0.99, n);
    if (x < 0.75) return floor_degree;
    const double target = 0.05 * (1.0 - x) * (1.0 - x) / (1.0 + x);
    const int k = static_cast<int>(std::ceil(std::log(target) / std::log(x)));
    return std::min(16384, std::max(floor_degree, n * (k + 1) + 24));
}

// p = q(c z^n) directly from the series of q: only every n-th power appears.
Series direct_power_substitution(const CanonicalMap& q, cplx c, int n, int degree) {
    const int terms = degree / n;
    const Series qs = q.to_series(std::max(1, terms));
    Series p = Series::zero(degree);
    p.set_coeff(0, qs.coeff(0));
    cplx cpow(1.0);
    for (int j = 1; j <= terms; ++j) {
        cpow *= c;
        p.set_coeff(n * j, qs.coeff(j) * cpow);
    }
    return p;
}

bool passes_internal_check(const Series& p, const CanonicalMap& q) {
    static const double radii[] = {0.3, 0.6, 0.8, 0.9, 0.95, 0.98, 0.99, 0.995};
    for (double r : radii) {
        for (int j = 0; j < 512; ++j) {
            const cplx z = std::polar(r, kTwoPi * j / 512);
            double v;
            try {
                v = std::abs(q.invert(p.evaluate(z)));
            } catch (const std::domain_error&) {
                return false;
            }
            if (!(v < 1.0 - 1e-9)) return false;
        }
    }
    return true;
}

}  // namespace

Series sample_subordinate(const FixedClassSpec& spec, const CanonicalMap& q, std::uint64_t seed,
                          int degree) {
    spec.validate();
    const cplx qp0 = q.qprime0();
    if (spec.beta > std::abs(qp0) * (1.0 + 1e-12))
        throw std::invalid_argument("sample_subordinate: requires beta <= |q'(0)|");
    if (std::abs(spec.a - q.q0()) > 1e-12)
        throw std::invalid_argument("sample_subordinate: spec.a must equal q(0)");

    const cplx c = cplx(spec.beta) / qp0;
    const double cmag = std::abs(c);
    int deg = faithful_degree(spec.n, cmag, degree);

    if (cmag >= 1.0 - 1e-9) {
        // The Mobius factor degenerates to the constant c; w = c z^n exactly.
        return direct_power_substitution(q, c, spec.n, deg);
    }

    // Seeded tail h, certified small: sum_k |h_k| R0^{k+1} = nu keeps
    // |z h(z)| <= nu on |z| <= R0, so the quotient series converges there.
    Rng rng = Rng::stream(seed, 0);
    const int h_degree = 16;
    Series h = Series::zero(h_degree);
    {
        double decay = 1.0;
        for (int k = 0; k <= h_degree; ++k) {
            h.set_coeff(k, rng.gaussian_cplx() * decay);
            decay *= 0.7;
        }
        const double R0 = 1.1, nu = 0.35;
        double weight = 0.0;
        double pw = R0;
        for (int k = 0; k <= h_degree; ++k) {
            weight += std::abs(h.coeff(k)) * pw;
            pw *= R0;
        }
        if (weight > 0.0) h *= cplx(nu / weight);
    }

    for (int attempt = 0; attempt < 9; ++attempt) {
        Series num = Series::zero(deg);
        num.set_coeff(0, c);
        Series den = Series::zero(deg);
        den.set_coeff(0, cplx(1.0));
        for (int k = 0; k <= h.degree() && k + 1 <= deg; ++k) {
            num.set_coeff(k + 1, h.coeff(k));
            den.set_coeff(k + 1, std::conj(c) * h.coeff(k));
        }
        const Series phi = divide(num, den, deg);
        Series w = Series::zero(deg);
        for (int k = 0; k + spec.n <= deg; ++k) w.set_coeff(k + spec.n, phi.coeff(k));

        const Series p = compose(q.to_series(deg), w, deg);
        if (passes_internal_check(p, q)) return p;

        if (attempt < 6) {
            h *= cplx(0.5);   // damp the tail, the z^n coefficient stays fixed
        } else {
            deg = std::min(16384, deg * 2);
        }
    }
    // Tail fully damped and degree escalated twice; fall back to w = c z^n.
    return direct_power_substitution(q, c, spec.n, std::max(deg, faithful_degree(spec.n, cmag, degree)));
}

HypothesisSample hypothesis_sampler(const FixedClassSpec& spec, const PsiSpec& psi,
                                    const OmegaRegion& omega, std::uint64_t seed,
                                    const EvalGrid& grid, int degree) {
    spec.validate();
    HypothesisSample out;

    const int tail_len = std::max(0, std::min(24, degree - spec.n - 1));
    std::vector<cplx> tail(tail_len);
    Rng rng = Rng::stream(seed, 1);
    double decay = 0.7;
    for (int k = 0; k < tail_len; ++k) {
        tail[k] = rng.gaussian_cplx() * decay;
        decay *= 0.7;
    }

    std::vector<cplx> units(static_cast<size_t>(grid.angles));
    for (int j = 0; j < grid.angles; ++j)
        units[static_cast<size_t>(j)] = std::polar(1.0, kTwoPi * j / grid.angles);

    // Orbit screen: in-domain everywhere and inside Omega everywhere.
    // Returns the min exterior distance (negated), or nullopt on failure.
    auto screen = [&](const Series& p) -> std::optional<std::pair<double, bool>> {
        double min_inside = std::numeric_limits<double>::infinity();
        for (double r : grid.radii) {
            for (int j = 0; j < grid.angles; ++j) {
                const cplx z = r * units[static_cast<size_t>(j)];
                auto [pv, sv, tv] = orbit(p, z);
                if (!psi.in_domain(pv, sv, tv)) return std::pair<double, bool>{0.0, true};
                const cplx value = psi.eval(pv, sv, tv);
                if (!omega.contains(value)) return std::nullopt;
                min_inside = std::min(min_inside, -omega.exterior_margin(value));
            }
        }
        return std::pair<double, bool>{min_inside, false};
    };

    double eps = 0.5;
    for (int shrink = 0; shrink <= 30; ++shrink) {
        std::vector<cplx> scaled(tail.size());
        const double f = (shrink == 30) ? 0.0 : eps;
        for (size_t k = 0; k < tail.size(); ++k) scaled[k] = tail[k] * f;
        const Series p = make_member(spec, scaled);   // natural degree n + tail
        const auto res = screen(p);
        if (res) {
            if (res->second) {
                ++out.domain_discards;   // orbit left the psi domain; shrink on
            } else {
                out.p = p;
                out.margin = res->first;
                return out;
            }
        }
        eps *= 0.5;
    }
    return out;
}

namespace {

void run_parallel(long jobs, int threads, const std::function<void(long)>& body) {
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    threads = static_cast<int>(std::max<long>(1, std::min<long>(threads, jobs)));
    if (threads == 1) {
        for (long i = 0; i < jobs; ++i) body(i);
        return;
    }
    std::atomic<long> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (long i = next.fetch_add(1); i < jobs; i = next.fetch_add(1)) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace

FalsificationReport falsify_implication(const PsiSpec& psi, const OmegaRegion& omega,
                                        const CanonicalMap& q, const FixedClassSpec& spec,
                                        long samples, std::uint64_t seed, const EvalGrid& grid,
                                        const FalsifyOptions& opts) {
    spec.validate();
    if (std::abs(spec.a - q.q0()) > 1e-12)
        throw std::invalid_argument("falsify_implication: spec.a must equal q(0)");

    FalsificationReport rep;
    rep.seed = seed;
    rep.grid = grid;
    rep.samples_run = samples;

    // Precondition: the admissibility engine accepted (psi, Omega, q, n, beta).
    // Otherwise the run is exploratory, not evidence about the implication.
    try {
        const AdmissibilityVerdict v = check_admissible(psi, omega, q, spec.n, spec.beta);
        rep.admissibility_checked = v.admissible();
        rep.exploratory = !v.admissible();
        if (rep.exploratory) rep.note = "admissibility not established: " + v.note;
    } catch (const std::exception& e) {
        rep.admissibility_checked = false;
        rep.exploratory = true;
        rep.note = std::string("admissibility precondition failed: ") + e.what();
    }

    const CanonicalMap conclusion =
        (opts.conclusion_shrink < 1.0) ? q.shrink_image(opts.conclusion_shrink) : q;
    if (opts.conclusion_shrink < 1.0) {
        rep.exploratory = true;
        if (!rep.note.empty()) rep.note += "; ";
        rep.note += "negative control: conclusion image shrunk by " +
                    std::to_string(opts.conclusion_shrink);
    }

    struct SampleOutcome {
        bool held = false;
        long discards = 0;
        std::optional<Counterexample> cex;
    };
    std::vector<SampleOutcome> outcomes(static_cast<size_t>(std::max<long>(samples, 0)));

    const double r_max = grid.r_max();
    run_parallel(samples, opts.threads, [&](long i) {
        SampleOutcome& out = outcomes[static_cast<size_t>(i)];
        const HypothesisSample hs =
            hypothesis_sampler(spec, psi, omega, seed + static_cast<std::uint64_t>(i), grid,
                               opts.degree);
        out.discards = hs.domain_discards;
        if (!hs.p) return;
        out.held = true;
        const SubordinationResult sub = is_subordinate(*hs.p, conclusion, r_max, grid);
        if (!sub.subordinate) {
            Counterexample cex;
            cex.sample_index = i;
            cex.p = *hs.p;
            cex.witness_z = sub.witness;
            cex.hypothesis_margin = hs.margin;
            cex.conclusion_margin = -sub.margin;
            out.cex = cex;
        }
    });

    for (const SampleOutcome& out : outcomes) {
        rep.domain_discards += out.discards;
        if (out.held) ++rep.hypothesis_holds_count;
        if (out.cex) rep.counterexamples.push_back(*out.cex);
    }
    if (rep.vacuous() && samples > 0) {
        if (!rep.note.empty()) rep.note += "; ";
        rep.note += "vacuous: no hypothesis-satisfying samples found";
    }
    return rep;
}

FalsificationReport falsify_subordination_form(const PsiSpec& psi, const CanonicalMap& h,
                                               const CanonicalMap& q, const FixedClassSpec& spec,
                                               long samples, std::uint64_t seed,
                                               const EvalGrid& grid, const FalsifyOptions& opts) {
    const cplx at0 = psi.eval(q.q0(), cplx(0.0), cplx(0.0));
    if (std::abs(at0 - h.q0()) > 1e-9)
        throw std::invalid_argument(
            "falsify_subordination_form: normalization psi(q(0),0,0) = h(0) fails");
    return falsify_implication(psi, OmegaRegion::image_of(h), q, spec, samples, seed, grid, opts);
}

}  // namespace subord
