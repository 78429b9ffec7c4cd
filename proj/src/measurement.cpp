#include "qwit/measurement.hpp"

#include "qwit/eig.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace qwit {

namespace {
constexpr double kPovmTol = 1e-9;
}

void Measurement::validate() const {
    if (effects.empty()) throw std::invalid_argument("POVM has no effects");
    const std::size_t d = dim();
    ComplexMatrix sum(d, d);
    for (const ComplexMatrix& e : effects) {
        if (!e.is_square() || e.rows() != d) throw std::invalid_argument("POVM effect shape mismatch");
        if (!e.is_hermitian(kPovmTol)) throw std::invalid_argument("POVM effect not Hermitian");
        EigenSystem sys = hermitian_eigensystem(e);
        if (sys.values.front() < -kPovmTol) throw std::invalid_argument("POVM effect not PSD");
        sum = sum + e;
    }
    if (sum.max_abs_diff(ComplexMatrix::identity(d)) > kPovmTol)
        throw std::invalid_argument("POVM effects do not sum to identity");
}

bool Measurement::is_projective(double tol) const {
    for (const ComplexMatrix& e : effects)
        if ((e * e).max_abs_diff(e) > tol) return false;
    return true;
}

bool Measurement::is_rank_one_projective(double tol) const {
    if (!is_projective(tol)) return false;
    for (const ComplexMatrix& e : effects)
        if (std::abs(e.trace() - cplx{1.0}) > tol) return false;
    return true;
}

Measurement Measurement::projective(std::string label,
                                    const std::vector<std::vector<cplx>>& basis_vectors) {
    Measurement m;
    m.label = std::move(label);
    for (const auto& v : basis_vectors) m.effects.push_back(ComplexMatrix::outer(v, v));
    m.validate();
    return m;
}

Observable Observable::from_matrix(std::string label, const ComplexMatrix& m) {
    if (!m.is_hermitian(1e-9)) throw std::invalid_argument("observable is not Hermitian");
    EigenSystem sys = hermitian_eigensystem(m);
    Observable o;
    o.label = std::move(label);
    o.matrix = m;
    const std::size_t n = sys.values.size();
    // Descending eigenvalue order.
    for (std::size_t k = n; k-- > 0;) {
        o.eigenvalues.push_back(sys.values[k]);
        auto v = sys.vector(k);
        o.projectors.push_back(ComplexMatrix::outer(v, v));
    }
    // Spectral reconstruction check.
    ComplexMatrix rec(m.rows(), m.cols());
    for (std::size_t k = 0; k < n; ++k) rec = rec + o.projectors[k] * cplx{o.eigenvalues[k]};
    if (rec.max_abs_diff(m) > 1e-9)
        throw std::invalid_argument("spectral decomposition does not reconstruct observable");
    return o;
}

Measurement Observable::measurement() const {
    Measurement m;
    m.label = label;
    m.effects = projectors;
    return m;
}

Measurement z_basis() {
    return Measurement::projective("Z", {{1.0, 0.0}, {0.0, 1.0}});
}

Measurement x_basis() {
    const double s = 1.0 / std::sqrt(2.0);
    return Measurement::projective("X", {{s, s}, {s, -s}});
}

Measurement gk_basis() {
    const double r3 = std::sqrt(3.0);
    return Measurement::projective("W", {{r3 / 2.0, 0.5}, {0.5, -r3 / 2.0}});
}

Measurement basis_phi(double phi_rad) {
    const double c = std::cos(phi_rad), s = std::sin(phi_rad);
    return Measurement::projective("phi", {{c, s}, {-s, c}});
}

Measurement computational_basis(std::size_t d) {
    std::vector<std::vector<cplx>> basis;
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<cplx> v(d);
        v[i] = 1.0;
        basis.push_back(v);
    }
    return Measurement::projective("computational", basis);
}

Observable pauli_x() {
    return Observable::from_matrix("X", ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}));
}

Observable pauli_y() {
    return Observable::from_matrix(
        "Y", ComplexMatrix::from_rows({{0.0, cplx{0.0, -1.0}}, {cplx{0.0, 1.0}, 0.0}}));
}

Observable pauli_z() {
    return Observable::from_matrix("Z", ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}}));
}

Observable w_observable() {
    const double r3 = std::sqrt(3.0);
    return Observable::from_matrix(
        "W", ComplexMatrix::from_rows({{0.5, r3 / 2.0}, {r3 / 2.0, -0.5}}));
}

Observable xz_plane_observable(double phi_rad, std::string label) {
    const double c = std::cos(phi_rad), s = std::sin(phi_rad);
    return Observable::from_matrix(label.empty() ? "xz(" + std::to_string(phi_rad) + ")" : std::move(label),
                                   ComplexMatrix::from_rows({{c, s}, {s, -c}}));
}

Observable xy_plane_observable(double phi_rad, std::string label) {
    const double c = std::cos(phi_rad), s = std::sin(phi_rad);
    return Observable::from_matrix(label.empty() ? "xy(" + std::to_string(phi_rad) + ")" : std::move(label),
                                   ComplexMatrix::from_rows({{0.0, cplx{c, -s}}, {cplx{c, s}, 0.0}}));
}

}  // namespace qwit
