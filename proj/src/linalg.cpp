#include "aiisac/linalg.hpp"

#include "aiisac/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace aiisac {

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw InvalidArgument("CMatrix: ragged initializer");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

CMatrix CMatrix::identity(std::size_t n)
{
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

CMatrix CMatrix::diagonal(const std::vector<double>& entries)
{
    CMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        m(i, i) = entries[i];
    }
    return m;
}

CMatrix CMatrix::adjoint() const
{
    CMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out(j, i) = std::conj((*this)(i, j));
        }
    }
    return out;
}

Complex CMatrix::trace() const
{
    Complex t = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) {
        t += (*this)(i, i);
    }
    return t;
}

double CMatrix::frobenius_norm() const
{
    double s = 0.0;
    for (const auto& v : data_) {
        s += std::norm(v);
    }
    return std::sqrt(s);
}

double CMatrix::max_abs() const
{
    double m = 0.0;
    for (const auto& v : data_) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

bool CMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Complex& v) { return v == Complex(0.0); });
}

CMatrix& CMatrix::operator+=(const CMatrix& other)
{
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw InvalidArgument("CMatrix: dimension mismatch in addition");
    }
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] += other.data_[k];
    }
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other)
{
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw InvalidArgument("CMatrix: dimension mismatch in subtraction");
    }
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] -= other.data_[k];
    }
    return *this;
}

CMatrix& CMatrix::operator*=(Complex scale)
{
    for (auto& v : data_) {
        v *= scale;
    }
    return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b)
{
    if (a.cols_ != b.rows_) {
        throw InvalidArgument("CMatrix: dimension mismatch in product");
    }
    CMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0.0)) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols_; ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

CVector operator*(const CMatrix& a, const CVector& x)
{
    if (a.cols_ != x.size()) {
        throw InvalidArgument("CMatrix: dimension mismatch in matrix-vector product");
    }
    CVector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            out[i] += a(i, k) * x[k];
        }
    }
    return out;
}

bool is_hermitian(const CMatrix& a, double tol)
{
    if (!a.is_square()) {
        return false;
    }
    const double scale = std::max(1.0, a.max_abs());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = i; j < a.cols(); ++j) {
            if (std::abs(a(i, j) - std::conj(a(j, i))) > tol * scale) {
                return false;
            }
        }
    }
    return true;
}

HermitianMatrix::HermitianMatrix(CMatrix a)
{
    if (!is_hermitian(a)) {
        throw InvalidArgument("HermitianMatrix: input is not Hermitian");
    }
    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = a(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex mean = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = mean;
            a(j, i) = std::conj(mean);
        }
    }
    a_ = std::move(a);
}

bool HermitianMatrix::is_psd() const
{
    if (dim() == 0) {
        return true;
    }
    const auto eig = hermitian_eig(a_);
    const double top = std::max(0.0, eig.values.back());
    return eig.values.front() >= -kPsdFloor * top;
}

HermitianEig hermitian_eig(const CMatrix& input)
{
    if (!input.is_square()) {
        throw InvalidArgument("hermitian_eig: matrix is not square");
    }
    if (input.rows() > kMaxEigDimension) {
        throw InvalidArgument("hermitian_eig: dimension exceeds " + std::to_string(kMaxEigDimension));
    }
    if (!is_hermitian(input)) {
        throw InvalidArgument("hermitian_eig: matrix is not Hermitian");
    }
    const std::size_t n = input.rows();
    CMatrix a = HermitianMatrix(input).matrix();
    CMatrix v = CMatrix::identity(n);

    const double norm = a.frobenius_norm();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                off += std::norm(a(p, q));
            }
        }
        if (off <= 1e-34 * norm * norm) {
            break;
        }
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex b = a(p, q);
                const double mag = std::abs(b);
                if (mag == 0.0) {
                    continue;
                }
                // U = diag(1, e^{-i phi}) * [[c, s], [-s, c]] zeroes a(p, q).
                const Complex phase_conj = std::conj(b / mag);
                const double theta = 0.5 * std::atan2(2.0 * mag, a(q, q).real() - a(p, p).real());
                const double c = std::cos(theta);
                const double s = std::sin(theta);
                const Complex upp = c;
                const Complex upq = s;
                const Complex uqp = -s * phase_conj;
                const Complex uqq = c * phase_conj;

                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = akp * upp + akq * uqp;
                    a(k, q) = akp * upq + akq * uqq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
                    a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = vkp * upp + vkq * uqp;
                    v(k, q) = vkp * upq + vkq * uqq;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });
    HermitianEig out;
    out.values.resize(n);
    out.vectors = CMatrix(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        out.values[col] = a(order[col], order[col]).real();
        for (std::size_t k = 0; k < n; ++k) {
            out.vectors(k, col) = v(k, order[col]);
        }
    }
    return out;
}

CMatrix cholesky(const CMatrix& a)
{
    if (!a.is_square()) {
        throw InvalidArgument("cholesky: matrix is not square");
    }
    const std::size_t n = a.rows();
    double diag_max = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        diag_max = std::max(diag_max, std::abs(a(i, i).real()));
    }
    const double floor = 1e-14 * diag_max * static_cast<double>(n);
    CMatrix l(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double pivot = a(j, j).real();
        for (std::size_t k = 0; k < j; ++k) {
            pivot -= std::norm(l(j, k));
        }
        if (!(pivot > floor) || diag_max == 0.0) {
            throw SingularMatrix("cholesky: matrix is not positive definite (pivot " + std::to_string(j) + ")");
        }
        const double ljj = std::sqrt(pivot);
        l(j, j) = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            Complex s = a(i, j);
            for (std::size_t k = 0; k < j; ++k) {
                s -= l(i, k) * std::conj(l(j, k));
            }
            l(i, j) = s / ljj;
        }
    }
    return l;
}

double log_det_hpd(const CMatrix& a)
{
    const CMatrix l = cholesky(a);
    double s = 0.0;
    for (std::size_t i = 0; i < l.rows(); ++i) {
        s += std::log(l(i, i).real());
    }
    return 2.0 * s;
}

CVector forward_substitute(const CMatrix& lower, const CVector& b)
{
    const std::size_t n = lower.rows();
    if (b.size() != n) {
        throw InvalidArgument("forward_substitute: dimension mismatch");
    }
    CVector y(n);
    for (std::size_t i = 0; i < n; ++i) {
        Complex s = b[i];
        for (std::size_t k = 0; k < i; ++k) {
            s -= lower(i, k) * y[k];
        }
        y[i] = s / lower(i, i);
    }
    return y;
}

CMatrix forward_substitute(const CMatrix& lower, const CMatrix& b)
{
    const std::size_t n = lower.rows();
    if (b.rows() != n) {
        throw InvalidArgument("forward_substitute: dimension mismatch");
    }
    CMatrix y(n, b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            Complex s = b(i, j);
            for (std::size_t k = 0; k < i; ++k) {
                s -= lower(i, k) * y(k, j);
            }
            y(i, j) = s / lower(i, i);
        }
    }
    return y;
}

ActiveSubspace active_subspace(const HermitianMatrix& a, double rel_threshold)
{
    const std::size_t n = a.dim();
    ActiveSubspace out;
    if (n == 0) {
        return out;
    }
    const auto eig = hermitian_eig(a.matrix());
    const double top = eig.values.back();
    std::vector<std::size_t> active;
    if (top > 0.0) {
        for (std::size_t i = 0; i < n; ++i) {
            if (eig.values[i] > rel_threshold * top) {
                active.push_back(i);
            }
        }
    }
    out.basis = CMatrix(n, active.size());
    for (std::size_t c = 0; c < active.size(); ++c) {
        out.values.push_back(eig.values[active[c]]);
        for (std::size_t k = 0; k < n; ++k) {
            out.basis(k, c) = eig.vectors(k, active[c]);
        }
    }
    return out;
}

}  // namespace aiisac
