#pragma once

#include "qwit/complex_matrix.hpp"

#include <string>
#include <vector>

namespace qwit {

/// A labeled POVM. Effects are PSD and sum to identity (checked at tol 1e-9);
/// outcome labels are the effect indices 0..n-1.
struct Measurement {
    std::string label;
    std::vector<ComplexMatrix> effects;

    std::size_t outcomes() const { return effects.size(); }
    std::size_t dim() const { return effects.empty() ? 0 : effects.front().rows(); }

    /// Throws if the effect set is not a valid POVM.
    void validate() const;
    bool is_projective(double tol = 1e-9) const;
    /// True when every effect is a rank-1 projector.
    bool is_rank_one_projective(double tol = 1e-9) const;

    /// Rank-1 projective measurement from an orthonormal basis.
    static Measurement projective(std::string label,
                                  const std::vector<std::vector<cplx>>& basis_vectors);
};

/// Hermitian observable with its spectral decomposition. Eigenvalues are
/// stored in descending order, so outcome 0 carries the largest eigenvalue
/// (for Pauli-like observables: outcome a has value (-1)^a).
struct Observable {
    std::string label;
    ComplexMatrix matrix;
    std::vector<double> eigenvalues;
    std::vector<ComplexMatrix> projectors;

    static Observable from_matrix(std::string label, const ComplexMatrix& m);
    Measurement measurement() const;
};

Measurement z_basis();  // H/V
Measurement x_basis();  // D/A
Measurement gk_basis(); // eigenbasis of W = (sqrt(3) X + Z)/2, K (+1) first
/// {cos(phi)|H> + sin(phi)|V>, -sin(phi)|H> + cos(phi)|V>}
Measurement basis_phi(double phi_rad);
Measurement computational_basis(std::size_t d);

Observable pauli_x();
Observable pauli_y();
Observable pauli_z();
Observable w_observable();  // (sqrt(3) X + Z)/2
/// cos(phi) Z + sin(phi) X
Observable xz_plane_observable(double phi_rad, std::string label = "");
/// cos(phi) X + sin(phi) Y
Observable xy_plane_observable(double phi_rad, std::string label = "");

}  // namespace qwit
