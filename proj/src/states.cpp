#include "qwit/states.hpp"

#include "qwit/eig.hpp"

#include <cmath>
#include <stdexcept>

namespace qwit {

namespace {
constexpr double kHermTol = 1e-10;
constexpr double kTraceTol = 1e-10;
constexpr double kPsdTol = 1e-9;
}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {
    if (!matrix_.is_square()) throw std::invalid_argument("density matrix must be square");
    if (!matrix_.all_finite()) throw std::invalid_argument("density matrix has non-finite entries");
    if (!matrix_.is_hermitian(kHermTol))
        throw std::invalid_argument("density matrix is not Hermitian");
    if (std::abs(matrix_.trace() - cplx{1.0}) > kTraceTol)
        throw std::invalid_argument("density matrix trace != 1");
    EigenSystem sys = hermitian_eigensystem(matrix_);
    if (sys.values.front() < -kPsdTol)
        throw std::invalid_argument("density matrix is not positive semidefinite");
}

DensityMatrix DensityMatrix::diagonal_part() const {
    ComplexMatrix d(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i) d(i, i) = matrix_(i, i).real();
    // Roundoff can leave the diagonal sum slightly off 1; rescale.
    double tr = 0.0;
    for (std::size_t i = 0; i < dim(); ++i) tr += d(i, i).real();
    for (std::size_t i = 0; i < dim(); ++i) d(i, i) = d(i, i).real() / tr;
    return DensityMatrix(d);
}

std::vector<double> DensityMatrix::eigenvalues() const {
    return hermitian_eigensystem(matrix_).values;
}

double DensityMatrix::entropy_bits() const {
    double h = 0.0;
    for (double lam : eigenvalues()) {
        if (lam > 1e-15) h -= lam * std::log2(lam);
    }
    return h;
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t d) {
    return DensityMatrix(ComplexMatrix::identity(d) * cplx{1.0 / static_cast<double>(d)});
}

PureState::PureState(std::vector<cplx> amplitudes) : amplitudes_(std::move(amplitudes)) {
    double n2 = 0.0;
    for (const cplx& a : amplitudes_) n2 += std::norm(a);
    if (std::abs(std::sqrt(n2) - 1.0) > 1e-10)
        throw std::invalid_argument("pure state amplitudes are not unit norm");
}

DensityMatrix PureState::to_density() const {
    return DensityMatrix(ComplexMatrix::outer(amplitudes_, amplitudes_));
}

PureState phi_theta(double theta_rad) {
    std::vector<cplx> amp(4);
    amp[0] = std::sin(theta_rad);  // |HH>
    amp[3] = std::cos(theta_rad);  // |VV>
    return PureState(amp);
}

PureState ghz3() {
    std::vector<cplx> amp(8);
    amp[0] = amp[7] = 1.0 / std::sqrt(2.0);
    return PureState(amp);
}

PureState bloch_pure(double polar, double azimuth) {
    std::vector<cplx> amp(2);
    amp[0] = std::cos(polar / 2.0);
    amp[1] = std::polar(std::sin(polar / 2.0), azimuth);
    return PureState(amp);
}

DensityMatrix bloch_state(double rx, double ry, double rz) {
    const double r = std::sqrt(rx * rx + ry * ry + rz * rz);
    if (r > 1.0 + 1e-12) throw std::invalid_argument("Bloch vector outside unit ball");
    ComplexMatrix m(2, 2);
    m(0, 0) = 0.5 * (1.0 + rz);
    m(1, 1) = 0.5 * (1.0 - rz);
    m(0, 1) = 0.5 * cplx{rx, -ry};
    m(1, 0) = 0.5 * cplx{rx, ry};
    return DensityMatrix(m);
}

}  // namespace qwit
