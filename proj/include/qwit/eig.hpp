#pragma once

#include "qwit/complex_matrix.hpp"

#include <vector>

namespace qwit {

struct EigenSystem {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // columns, same order as values

    std::vector<cplx> vector(std::size_t k) const {
        std::vector<cplx> v(vectors.rows());
        for (std::size_t i = 0; i < vectors.rows(); ++i) v[i] = vectors(i, k);
        return v;
    }
};

/// Full eigensystem of a Hermitian matrix via cyclic Jacobi rotations.
EigenSystem hermitian_eigensystem(const ComplexMatrix& m);

/// sqrt(m) for PSD Hermitian m; negative eigenvalues below -tol throw,
/// small negatives are clipped to zero.
ComplexMatrix psd_sqrt(const ComplexMatrix& m, double tol = 1e-8);

}  // namespace qwit
