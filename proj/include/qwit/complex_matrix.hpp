#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace qwit {

using cplx = std::complex<double>;

/// Dense complex matrix for small dimensions (<= 8 in practice).
/// Row-major storage, value semantics.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);
    /// |u><v|
    static ComplexMatrix outer(const std::vector<cplx>& u, const std::vector<cplx>& v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    ComplexMatrix operator+(const ComplexMatrix& o) const;
    ComplexMatrix operator-(const ComplexMatrix& o) const;
    ComplexMatrix operator*(const ComplexMatrix& o) const;
    ComplexMatrix operator*(cplx s) const;

    ComplexMatrix adjoint() const;
    cplx trace() const;

    bool all_finite() const;
    bool is_hermitian(double tol = 1e-10) const;
    /// Max elementwise |a_ij - b_ij|.
    double max_abs_diff(const ComplexMatrix& o) const;
    double frobenius_norm() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cplx> data_;
};

/// Kronecker product.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Apply a matrix to a vector.
std::vector<cplx> mat_vec(const ComplexMatrix& m, const std::vector<cplx>& v);

/// <u|v>
cplx inner(const std::vector<cplx>& u, const std::vector<cplx>& v);

}  // namespace qwit
