#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace aiisac {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

/// Dense row-major complex matrix. Sized for the small (<= 64) problems used here.
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static CMatrix identity(std::size_t n);
    static CMatrix diagonal(const std::vector<double>& entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    CMatrix adjoint() const;
    Complex trace() const;
    double frobenius_norm() const;
    double max_abs() const;
    bool is_zero() const;

    CMatrix& operator+=(const CMatrix& other);
    CMatrix& operator-=(const CMatrix& other);
    CMatrix& operator*=(Complex scale);

    friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
    friend CMatrix operator*(CMatrix a, Complex s) { return a *= s; }
    friend CMatrix operator*(Complex s, CMatrix a) { return a *= s; }
    friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
    friend CVector operator*(const CMatrix& a, const CVector& x);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kPsdFloor = 1e-10;
inline constexpr std::size_t kMaxEigDimension = 64;

/// |A - A^H| <= 1e-12 * max(1, max|a_ij|) entrywise.
bool is_hermitian(const CMatrix& a, double tol = kHermitianTolerance);

/// Square matrix validated as Hermitian at construction (and symmetrized exactly).
class HermitianMatrix {
public:
    HermitianMatrix() = default;
    explicit HermitianMatrix(CMatrix a);

    static HermitianMatrix identity(std::size_t n) { return HermitianMatrix(CMatrix::identity(n)); }
    static HermitianMatrix zero(std::size_t n) { return HermitianMatrix(CMatrix(n, n)); }

    std::size_t dim() const { return a_.rows(); }
    const CMatrix& matrix() const { return a_; }

    /// Smallest eigenvalue >= -1e-10 * largest.
    bool is_psd() const;

    friend HermitianMatrix operator*(double s, const HermitianMatrix& h) { return HermitianMatrix(h.a_ * Complex(s)); }
    friend HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b)
    {
        return HermitianMatrix(a.a_ + b.a_);
    }

private:
    CMatrix a_;
};

struct HermitianEig {
    std::vector<double> values;  // ascending
    CMatrix vectors;             // columns are eigenvectors
};

/// Eigendecomposition A = U diag(values) U^H by cyclic Jacobi rotations.
/// Throws InvalidArgument for non-square, non-Hermitian or oversized input.
HermitianEig hermitian_eig(const CMatrix& a);

/// Lower-triangular L with L L^H = A. Throws SingularMatrix if A is not numerically PD.
CMatrix cholesky(const CMatrix& a);

/// ln det(A) for Hermitian positive definite A.
double log_det_hpd(const CMatrix& a);

/// Solves L y = b for lower-triangular L.
CVector forward_substitute(const CMatrix& lower, const CVector& b);

/// L^{-1} B for lower-triangular L.
CMatrix forward_substitute(const CMatrix& lower, const CMatrix& b);

/// Columns of eigenvectors whose eigenvalues exceed rel_threshold * max eigenvalue.
struct ActiveSubspace {
    CMatrix basis;               // n x r
    std::vector<double> values;  // r active eigenvalues
};
ActiveSubspace active_subspace(const HermitianMatrix& a, double rel_threshold);

}  // namespace aiisac
