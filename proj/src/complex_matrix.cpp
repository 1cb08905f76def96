#include "numrad/complex_matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace numrad {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, cplx(0.0, 0.0)) {
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("ComplexMatrix: dimensions must be positive");
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
    rows_ = rows.size();
    if (rows_ == 0) throw std::invalid_argument("ComplexMatrix: empty initializer");
    cols_ = rows.begin()->size();
    if (cols_ == 0) throw std::invalid_argument("ComplexMatrix: empty row");
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw std::invalid_argument("ComplexMatrix: ragged initializer rows");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::zeros(std::size_t rows, std::size_t cols) {
    return ComplexMatrix(rows, cols);
}

bool ComplexMatrix::all_finite() const {
    for (const cplx& z : data_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
}

bool ComplexMatrix::is_zero() const {
    for (const cplx& z : data_) {
        if (z.real() != 0.0 || z.imag() != 0.0) return false;
    }
    return true;
}

double ComplexMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (const cplx& z : data_) sum += std::norm(z);
    return std::sqrt(sum);
}

ComplexMatrix ComplexMatrix::adjoint() const {
    if (empty()) throw std::invalid_argument("adjoint: empty matrix");
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out(j, i) = std::conj((*this)(i, j));
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw std::invalid_argument("matrix add: dimension mismatch");
    }
    ComplexMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] + other.data_[k];
    return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw std::invalid_argument("matrix subtract: dimension mismatch");
    }
    ComplexMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] - other.data_[k];
    return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& other) const {
    if (cols_ != other.rows_) {
        throw std::invalid_argument("matrix multiply: dimension mismatch");
    }
    ComplexMatrix out(rows_, other.cols_);
    const std::size_t n = rows_, k_dim = cols_, m = other.cols_;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < k_dim; ++k) {
            const cplx aik = (*this)(i, k);
            if (aik == cplx(0.0, 0.0)) continue;
            const cplx* brow = &other.data_[k * m];
            cplx* crow = &out.data_[i * m];
            for (std::size_t j = 0; j < m; ++j) crow[j] += aik * brow[j];
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator*(cplx scalar) const {
    ComplexMatrix out = *this;
    for (cplx& z : out.data_) z *= scalar;
    return out;
}

bool ComplexMatrix::operator==(const ComplexMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

ComplexMatrix real_part(const ComplexMatrix& a) {
    require_square(a, "real_part");
    const std::size_t n = a.rows();
    ComplexMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        out(i, i) = cplx(a(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx v = 0.5 * (a(i, j) + std::conj(a(j, i)));
            out(i, j) = v;
            out(j, i) = std::conj(v);
        }
    }
    return out;
}

ComplexMatrix imag_part(const ComplexMatrix& a) {
    require_square(a, "imag_part");
    const std::size_t n = a.rows();
    ComplexMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        out(i, i) = cplx(a(i, i).imag(), 0.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            // (a_ij - conj(a_ji)) / (2i) == (im(d)/2, -re(d)/2) for d = a_ij - conj(a_ji)
            const cplx d = a(i, j) - std::conj(a(j, i));
            const cplx v(0.5 * d.imag(), -0.5 * d.real());
            out(i, j) = v;
            out(j, i) = std::conj(v);
        }
    }
    return out;
}

void require_square(const ComplexMatrix& a, const char* op) {
    if (!a.is_square()) {
        throw std::invalid_argument(std::string(op) + ": square matrix required");
    }
}

void require_finite(const ComplexMatrix& a, const char* op) {
    if (!a.all_finite()) {
        throw std::invalid_argument(std::string(op) + ": matrix has non-finite entries");
    }
}

}  // namespace numrad
