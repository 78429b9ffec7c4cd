#include "qwit/quantum_ops.hpp"

#include "qwit/eig.hpp"

#include <cmath>
#include <stdexcept>

namespace qwit {

std::vector<double> born_probabilities(const DensityMatrix& state, const Measurement& m) {
    if (m.dim() != state.dim()) throw std::invalid_argument("state/measurement dimension mismatch");
    if (m.effects.empty()) throw std::invalid_argument("measurement has no effects");
    std::vector<double> p;
    p.reserve(m.outcomes());
    double sum = 0.0;
    for (const ComplexMatrix& e : m.effects) {
        double v = (e * state.matrix()).trace().real();
        if (v < -1e-9 || v > 1.0 + 1e-9)
            throw std::invalid_argument("Born probability outside [0,1] tolerance");
        v = std::min(std::max(v, 0.0), 1.0);
        p.push_back(v);
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-8)
        throw std::invalid_argument("Born probabilities do not sum to 1");
    return p;
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
    return DensityMatrix(kron(a.matrix(), b.matrix()));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t keep,
                            const std::vector<std::size_t>& dims) {
    if (keep >= dims.size()) throw std::invalid_argument("keep index out of range");
    std::size_t prod = 1;
    for (std::size_t d : dims) prod *= d;
    if (prod != rho.dim()) throw std::invalid_argument("subsystem dims do not multiply to rho dim");

    const std::size_t dk = dims[keep];
    ComplexMatrix out(dk, dk);

    // Multi-index walk over the full space; accumulate entries whose traced
    // indices coincide.
    const std::size_t n = dims.size();
    std::vector<std::size_t> idx_i(n, 0), idx_j(n, 0);
    auto flat = [&](const std::vector<std::size_t>& idx) {
        std::size_t f = 0;
        for (std::size_t s = 0; s < n; ++s) f = f * dims[s] + idx[s];
        return f;
    };
    auto advance = [&](std::vector<std::size_t>& idx) {
        for (std::size_t s = n; s-- > 0;) {
            if (++idx[s] < dims[s]) return true;
            idx[s] = 0;
        }
        return false;
    };
    do {
        std::fill(idx_j.begin(), idx_j.end(), 0);
        do {
            bool traced_match = true;
            for (std::size_t s = 0; s < n; ++s)
                if (s != keep && idx_i[s] != idx_j[s]) { traced_match = false; break; }
            if (traced_match)
                out(idx_i[keep], idx_j[keep]) += rho.matrix()(flat(idx_i), flat(idx_j));
        } while (advance(idx_j));
    } while (advance(idx_i));

    return DensityMatrix(out);
}

double fidelity(const DensityMatrix& r1, const DensityMatrix& r2) {
    if (r1.dim() != r2.dim()) throw std::invalid_argument("fidelity dimension mismatch");
    ComplexMatrix s1 = psd_sqrt(r1.matrix());
    ComplexMatrix inner_m = s1 * r2.matrix() * s1;
    EigenSystem sys = hermitian_eigensystem(inner_m);
    double t = 0.0;
    for (double lam : sys.values) t += std::sqrt(std::max(lam, 0.0));
    const double f = t * t;
    return std::min(std::max(f, 0.0), 1.0);
}

namespace {
std::vector<cplx> principal_vector(const ComplexMatrix& rank1_projector) {
    EigenSystem sys = hermitian_eigensystem(rank1_projector);
    return sys.vector(sys.values.size() - 1);  // largest eigenvalue
}
}  // namespace

double max_overlap(const Measurement& a, const Measurement& b) {
    if (!a.is_rank_one_projective() || !b.is_rank_one_projective())
        throw std::invalid_argument("max_overlap requires rank-1 projective measurements");
    double best = 0.0;
    for (const ComplexMatrix& ea : a.effects) {
        auto u = principal_vector(ea);
        for (const ComplexMatrix& eb : b.effects)
            best = std::max(best, std::abs(inner(u, principal_vector(eb))));
    }
    return std::min(best, 1.0);
}

double expectation(const DensityMatrix& rho, const ComplexMatrix& op) {
    return (op * rho.matrix()).trace().real();
}

}  // namespace qwit
