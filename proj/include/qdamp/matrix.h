// Copyright 2026 The qdamp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QDAMP_MATRIX_H
#define QDAMP_MATRIX_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace qdamp {

using Complex = std::complex<double>;

/// Default elementwise tolerance used by the comparison predicates.
inline constexpr double kDefaultTol = 1e-10;

/// Largest row or column count any matrix in this library may have.
inline constexpr std::size_t kMaxDim = std::size_t{1} << 10;

/// Dense complex matrix with row-major storage.
///
/// Qubit wires are big-endian: on an n-wire register, wire q owns bit
/// (n - 1 - q) of the basis index, so |n0 n1 n2 n3> sits at 8n0+4n1+2n2+n3.
class ComplexMatrix {
   public:
    /// rows x cols zero matrix.
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const Complex> diag);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Complex &operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    Complex &operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    std::span<const Complex> entries() const { return entries_; }

    ComplexMatrix adjoint() const;
    Complex trace() const;

    ComplexMatrix operator*(const ComplexMatrix &rhs) const;
    ComplexMatrix operator+(const ComplexMatrix &rhs) const;
    ComplexMatrix operator-(const ComplexMatrix &rhs) const;
    ComplexMatrix operator*(Complex scale) const;
    ComplexMatrix &operator+=(const ComplexMatrix &rhs);

    /// Exact entrywise equality.
    bool operator==(const ComplexMatrix &other) const = default;

    std::string str() const;

   private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> entries_;
};

inline ComplexMatrix operator*(Complex scale, const ComplexMatrix &m) { return m * scale; }

/// Pure state on a 2^n dimensional register.
class StateVector {
   public:
    explicit StateVector(std::vector<Complex> amplitudes);

    /// Computational basis ket |index> of dimension dim.
    static StateVector basis(std::size_t dim, std::size_t index);

    std::size_t dim() const { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    const Complex &operator[](std::size_t k) const { return amplitudes_[k]; }

    double norm_squared() const;
    bool is_normalized(double tol = kDefaultTol) const;
    StateVector normalized() const;

    /// |psi><psi|
    ComplexMatrix density() const;
    Complex inner(const StateVector &other) const;

    bool operator==(const StateVector &other) const = default;

   private:
    std::vector<Complex> amplitudes_;
};

StateVector operator*(const ComplexMatrix &m, const StateVector &v);

/// Tensor product a (x) b. Throws std::length_error when the result would exceed kMaxDim.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);
StateVector kron(const StateVector &a, const StateVector &b);

/// Reduced matrix over the subsystems listed in `keep`.
///
/// `dims` lists the subsystem dimensions in tensor order; `keep` holds indices
/// into `dims` (any order, result uses tensor order). Throws
/// std::invalid_argument on shape mismatch or an empty/out-of-range keep set.
ComplexMatrix partial_trace(const ComplexMatrix &rho, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);

/// Chebyshev distance max|a_ij - b_ij|. Shapes must agree.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// Location and size of the largest entrywise deviation between two matrices.
struct MatrixDiff {
    double max_abs = 0.0;
    std::size_t row = 0;
    std::size_t col = 0;
};
MatrixDiff diff_report(const ComplexMatrix &a, const ComplexMatrix &b);

bool approx_equal(const ComplexMatrix &a, const ComplexMatrix &b, double tol = kDefaultTol);

/// true iff max|U^dagger U - I| <= tol. Non-square input is never unitary.
bool is_unitary(const ComplexMatrix &u, double tol = kDefaultTol);

bool is_hermitian(const ComplexMatrix &m, double tol = kDefaultTol);

/// Smallest eigenvalue of the Hermitian part (m + m^dagger) / 2.
double min_hermitian_eigenvalue(const ComplexMatrix &m);

/// Hermitian, unit trace and eigenvalues >= -tol.
bool is_density_matrix(const ComplexMatrix &rho, double tol = kDefaultTol);

/// Throws std::invalid_argument naming `what` unless is_density_matrix(rho, tol).
void require_density_matrix(const ComplexMatrix &rho, const char *what, double tol = kDefaultTol);

/// Tr(op * rho), real part.
double expectation(const ComplexMatrix &op, const ComplexMatrix &rho);

/// Identity matrix with basis rows/columns i and j (0-based) exchanged.
ComplexMatrix transposition_matrix(std::size_t dim, std::size_t i, std::size_t j);

}  // namespace qdamp

#endif
