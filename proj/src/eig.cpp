#include "qwit/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qwit {

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace

EigenSystem hermitian_eigensystem(const ComplexMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("eigensystem of non-square matrix");
    if (!m.is_hermitian(1e-8)) throw std::invalid_argument("matrix is not Hermitian");
    const std::size_t n = m.rows();

    // Symmetrize to kill roundoff-level asymmetry before iterating.
    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));

    ComplexMatrix v = ComplexMatrix::identity(n);
    const double scale = std::max(a.frobenius_norm(), 1e-300);

    for (int sweep = 0; sweep < 100 && off_diagonal_norm(a) > 1e-14 * scale; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double r = std::abs(a(p, q));
                if (r <= 1e-300) continue;
                const double phi = std::arg(a(p, q));
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                double t;
                if (std::abs(aqq - app) < 1e-280 * r) {
                    t = 1.0;  // 45 degree rotation
                } else {
                    const double tau = (aqq - app) / (2.0 * r);
                    t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cplx eip = std::polar(1.0, phi);

                ComplexMatrix j = ComplexMatrix::identity(n);
                j(p, p) = c;
                j(p, q) = s * eip;
                j(q, p) = -s * std::conj(eip);
                j(q, q) = c;

                a = j.adjoint() * a * j;
                v = v * j;
            }
        }
    }

    EigenSystem sys;
    sys.values.resize(n);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i).real();
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return diag[x] < diag[y]; });

    sys.vectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        sys.values[k] = diag[order[k]];
        for (std::size_t i = 0; i < n; ++i) sys.vectors(i, k) = v(i, order[k]);
    }
    return sys;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m, double tol) {
    EigenSystem sys = hermitian_eigensystem(m);
    const std::size_t n = m.rows();
    ComplexMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        double lam = sys.values[k];
        if (lam < -tol) throw std::invalid_argument("psd_sqrt of an indefinite matrix");
        lam = std::max(lam, 0.0);
        const double s = std::sqrt(lam);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                out(i, j) += s * sys.vectors(i, k) * std::conj(sys.vectors(j, k));
    }
    return out;
}

}  // namespace qwit
