#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace numrad {

using cplx = std::complex<double>;

/// Dense n x m complex matrix, row-major storage.
///
/// Values are immutable in spirit: all operations return new matrices, so
/// instances are safe to share across threads. Operations that require a
/// square or finite matrix check and throw std::invalid_argument.
class ComplexMatrix {
public:
    ComplexMatrix() = default;

    ComplexMatrix(std::size_t rows, std::size_t cols);

    /// Row-major construction from nested braces, e.g. {{0, 1}, {0, 0}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zeros(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_ && rows_ > 0; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    cplx operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    const std::vector<cplx>& data() const { return data_; }
    std::vector<cplx>& data() { return data_; }

    bool all_finite() const;
    bool is_zero() const;
    double frobenius_norm() const;

    ComplexMatrix adjoint() const;

    ComplexMatrix operator+(const ComplexMatrix& other) const;
    ComplexMatrix operator-(const ComplexMatrix& other) const;
    ComplexMatrix operator*(const ComplexMatrix& other) const;
    ComplexMatrix operator*(cplx scalar) const;

    /// Entrywise bitwise equality (used by determinism contracts).
    bool operator==(const ComplexMatrix& other) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

inline ComplexMatrix operator*(cplx scalar, const ComplexMatrix& m) { return m * scalar; }

/// Hermitian part (A + A*)/2, exactly Hermitian by construction.
ComplexMatrix real_part(const ComplexMatrix& a);

/// Skew part (A - A*)/(2i), exactly Hermitian by construction.
ComplexMatrix imag_part(const ComplexMatrix& a);

/// Throws std::invalid_argument unless `a` is square.
void require_square(const ComplexMatrix& a, const char* op);

/// Throws std::invalid_argument unless all entries are finite.
void require_finite(const ComplexMatrix& a, const char* op);

}  // namespace numrad
