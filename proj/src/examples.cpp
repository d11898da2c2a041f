#include "subord/examples.hpp"

#include <cmath>
#include <stdexcept>

namespace subord {

double ExampleCase::closed_form() const {
    if (id == "4.1") {
        const double m = n + (M - beta) / (M + beta);
        return (m * m + 1.0) * M;
    }
    if (id == "4.2") return (6.0 - beta) / (2.0 + beta);
    if (id == "4.3" || id == "4.4") return (2.0 + 3.0 * beta) / (2.0 + beta);
    if (id == "4.5") return 4.0 * (3.0 + 2.0 * beta) / ((1.0 + beta) * (1.0 + beta));
    throw std::logic_error("ExampleCase: unknown id");
}

ExampleCase example_case(const std::string& id, int n, double beta, double M) {
    if (n < 1) throw std::invalid_argument("example_case: n must be >= 1");
    if (!(beta > 0.0)) throw std::invalid_argument("example_case: beta must be positive");

    ExampleCase ex;
    ex.id = id;
    ex.n = n;
    ex.beta = beta;
    ex.M = M;

    if (id == "4.1") {
        // psi = r + s + t against |p| < M, p in H_beta[0, n], beta <= M.
        if (!(M > 0.0)) throw std::invalid_argument("example_case 4.1: M must be positive");
        if (beta > M) throw std::invalid_argument("example_case 4.1: requires beta <= M");
        ex.psi = PsiSpec::make_structured(cplx(0.0), cplx(1.0), cplx(0.0), cplx(1.0), cplx(1.0));
        ex.map = CanonicalMap::disk(M, cplx(0.0));
        ex.spec = FixedClassSpec{cplx(0.0), n, beta};
        ex.omega = OmegaRegion::disk(cplx(0.0), ex.closed_form());
        ex.omega_is_disk = true;
        return ex;
    }
    if (id == "4.2") {
        // psi = 1 - r^2 + 5s + t against Re p > 0, p in H_beta[1, n], beta <= 2.
        if (beta > 2.0) throw std::invalid_argument("example_case 4.2: requires beta <= 2");
        ex.psi = PsiSpec::make_structured(cplx(1.0), cplx(0.0), cplx(-1.0), cplx(5.0), cplx(1.0));
        ex.map = CanonicalMap::halfplane(0.0, cplx(1.0));
        ex.spec = FixedClassSpec{cplx(1.0), n, beta};
        ex.omega = OmegaRegion::disk(cplx(0.0), ex.closed_form());
        ex.omega_is_disk = true;
        return ex;
    }
    if (id == "4.3") {
        // psi = r + s + 1 - r^2 against Re p > 0; admissible iff
        // n >= (2 + 3 beta)/(2 + beta).
        if (beta > 2.0) throw std::invalid_argument("example_case 4.3: requires beta <= 2");
        ex.psi = PsiSpec::make_structured(cplx(1.0), cplx(1.0), cplx(-1.0), cplx(1.0), cplx(0.0));
        ex.map = CanonicalMap::halfplane(0.0, cplx(1.0));
        ex.spec = FixedClassSpec{cplx(1.0), n, beta};
        ex.omega = OmegaRegion::halfplane(0.0, cplx(0.0));
        ex.omega_is_disk = false;
        return ex;
    }
    if (id == "4.4") {
        // psi = 2 - r^2 + 3s + t against Re p > 0; same threshold as 4.3.
        if (beta > 2.0) throw std::invalid_argument("example_case 4.4: requires beta <= 2");
        ex.psi = PsiSpec::make_structured(cplx(2.0), cplx(0.0), cplx(-1.0), cplx(3.0), cplx(1.0));
        ex.map = CanonicalMap::halfplane(0.0, cplx(1.0));
        ex.spec = FixedClassSpec{cplx(1.0), n, beta};
        ex.omega = OmegaRegion::halfplane(0.0, cplx(0.0));
        ex.omega_is_disk = false;
        return ex;
    }
    if (id == "4.5") {
        // psi = 1 - r^2 + 3s + t, q = 1 + z, n = 2, beta <= 1,
        // |p - 1| < 1 conclusion.
        if (beta > 1.0) throw std::invalid_argument("example_case 4.5: requires beta <= 1");
        ex.n = 2;   // fixed by the case
        ex.psi = PsiSpec::make_structured(cplx(1.0), cplx(0.0), cplx(-1.0), cplx(3.0), cplx(1.0));
        ex.map = CanonicalMap::affine(cplx(1.0), cplx(1.0));
        ex.spec = FixedClassSpec{cplx(1.0), 2, beta};
        ex.omega = OmegaRegion::disk(cplx(0.0), ex.closed_form());
        ex.omega_is_disk = true;
        return ex;
    }
    throw std::invalid_argument("example_case: unknown id '" + id + "' (use 4.1 .. 4.5)");
}

std::vector<std::string> example_ids() { return {"4.1", "4.2", "4.3", "4.4", "4.5"}; }

}  // namespace subord
