#pragma once

#include "qwit/complex_matrix.hpp"

#include <vector>

namespace qwit {

/// Trace-1 positive-semidefinite Hermitian matrix. Validated on construction:
/// Hermitian within 1e-10, trace 1 within 1e-10, min eigenvalue >= -1e-9
/// (tomography reconstructions may be marginally indefinite).
class DensityMatrix {
public:
    explicit DensityMatrix(ComplexMatrix m);

    std::size_t dim() const { return matrix_.rows(); }
    const ComplexMatrix& matrix() const { return matrix_; }

    /// Diagonal part in the computational basis (itself a valid state).
    DensityMatrix diagonal_part() const;

    std::vector<double> eigenvalues() const;
    /// von Neumann entropy in bits.
    double entropy_bits() const;

    static DensityMatrix maximally_mixed(std::size_t d);

private:
    ComplexMatrix matrix_;
};

/// Unit-norm complex amplitude vector.
class PureState {
public:
    explicit PureState(std::vector<cplx> amplitudes);

    std::size_t dim() const { return amplitudes_.size(); }
    const std::vector<cplx>& amplitudes() const { return amplitudes_; }
    DensityMatrix to_density() const;

private:
    std::vector<cplx> amplitudes_;
};

/// sin(theta)|HH> + cos(theta)|VV>, theta in radians. |H> = |0>, |V> = |1>.
PureState phi_theta(double theta_rad);

/// (|000> + |111>)/sqrt(2)
PureState ghz3();

/// Qubit pure state cos(t/2)|0> + e^{i phi} sin(t/2)|1>.
PureState bloch_pure(double polar, double azimuth);

/// Qubit state (I + r . sigma)/2 for |r| <= 1.
DensityMatrix bloch_state(double rx, double ry, double rz);

}  // namespace qwit
