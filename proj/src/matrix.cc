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

#include "qdamp/matrix.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace qdamp {

namespace {

void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b, const char *op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                                    std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                                    std::to_string(b.cols()));
    }
}

void require_dim(std::size_t n, const char *op) {
    if (n > kMaxDim) {
        throw std::length_error(std::string(op) + ": dimension " + std::to_string(n) + " exceeds " +
                                std::to_string(kMaxDim));
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols) {
    require_dim(rows, "ComplexMatrix");
    require_dim(cols, "ComplexMatrix");
    entries_.resize(rows * cols);
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    require_dim(rows, "ComplexMatrix");
    require_dim(cols, "ComplexMatrix");
    if (entries_.size() != rows * cols) {
        throw std::invalid_argument("ComplexMatrix: entry count does not match shape");
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    entries_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw std::invalid_argument("ComplexMatrix: ragged initializer");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t k = 0; k < n; k++) {
        m(k, k) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
    ComplexMatrix m(diag.size(), diag.size());
    for (std::size_t k = 0; k < diag.size(); k++) {
        m(k, k) = diag[k];
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = 0; c < cols_; c++) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

Complex ComplexMatrix::trace() const {
    if (!is_square()) {
        throw std::invalid_argument("trace: matrix is not square");
    }
    Complex t = 0;
    for (std::size_t k = 0; k < rows_; k++) {
        t += (*this)(k, k);
    }
    return t;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix &rhs) const {
    if (cols_ != rhs.rows_) {
        throw std::invalid_argument("matrix product: inner dimensions differ");
    }
    ComplexMatrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t k = 0; k < cols_; k++) {
            Complex a = (*this)(r, k);
            if (a == Complex{0, 0}) {
                continue;
            }
            for (std::size_t c = 0; c < rhs.cols_; c++) {
                out(r, c) += a * rhs(k, c);
            }
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix &rhs) const {
    ComplexMatrix out = *this;
    out += rhs;
    return out;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &rhs) {
    require_same_shape(*this, rhs, "matrix sum");
    for (std::size_t k = 0; k < entries_.size(); k++) {
        entries_[k] += rhs.entries_[k];
    }
    return *this;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix &rhs) const {
    require_same_shape(*this, rhs, "matrix difference");
    ComplexMatrix out = *this;
    for (std::size_t k = 0; k < entries_.size(); k++) {
        out.entries_[k] -= rhs.entries_[k];
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator*(Complex scale) const {
    ComplexMatrix out = *this;
    for (auto &e : out.entries_) {
        e *= scale;
    }
    return out;
}

std::string ComplexMatrix::str() const {
    std::string out;
    char buf[96];
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = 0; c < cols_; c++) {
            const Complex &e = (*this)(r, c);
            std::snprintf(buf, sizeof(buf), "%s%+.6f%+.6fi", c ? " " : "", e.real(), e.imag());
            out += buf;
        }
        out += '\n';
    }
    return out;
}

StateVector::StateVector(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.empty()) {
        throw std::invalid_argument("StateVector: empty");
    }
    require_dim(amplitudes_.size(), "StateVector");
}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw std::invalid_argument("StateVector::basis: index " + std::to_string(index) + " out of range");
    }
    std::vector<Complex> a(dim);
    a[index] = 1.0;
    return StateVector(std::move(a));
}

double StateVector::norm_squared() const {
    double s = 0;
    for (const auto &a : amplitudes_) {
        s += std::norm(a);
    }
    return s;
}

bool StateVector::is_normalized(double tol) const {
    return std::abs(norm_squared() - 1.0) <= tol;
}

StateVector StateVector::normalized() const {
    double n = std::sqrt(norm_squared());
    if (n == 0) {
        throw std::domain_error("StateVector::normalized: zero vector");
    }
    std::vector<Complex> a = amplitudes_;
    for (auto &x : a) {
        x /= n;
    }
    return StateVector(std::move(a));
}

ComplexMatrix StateVector::density() const {
    std::size_t n = dim();
    ComplexMatrix rho(n, n);
    for (std::size_t r = 0; r < n; r++) {
        for (std::size_t c = 0; c < n; c++) {
            rho(r, c) = amplitudes_[r] * std::conj(amplitudes_[c]);
        }
    }
    return rho;
}

Complex StateVector::inner(const StateVector &other) const {
    if (dim() != other.dim()) {
        throw std::invalid_argument("StateVector::inner: dimension mismatch");
    }
    Complex s = 0;
    for (std::size_t k = 0; k < dim(); k++) {
        s += std::conj(amplitudes_[k]) * other.amplitudes_[k];
    }
    return s;
}

StateVector operator*(const ComplexMatrix &m, const StateVector &v) {
    if (m.cols() != v.dim()) {
        throw std::invalid_argument("matrix-vector product: dimension mismatch");
    }
    std::vector<Complex> out(m.rows());
    for (std::size_t r = 0; r < m.rows(); r++) {
        Complex s = 0;
        for (std::size_t c = 0; c < m.cols(); c++) {
            s += m(r, c) * v[c];
        }
        out[r] = s;
    }
    return StateVector(std::move(out));
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    std::size_t rows = a.rows() * b.rows();
    std::size_t cols = a.cols() * b.cols();
    require_dim(rows, "kron");
    require_dim(cols, "kron");
    ComplexMatrix out(rows, cols);
    for (std::size_t ar = 0; ar < a.rows(); ar++) {
        for (std::size_t ac = 0; ac < a.cols(); ac++) {
            Complex x = a(ar, ac);
            if (x == Complex{0, 0}) {
                continue;
            }
            for (std::size_t br = 0; br < b.rows(); br++) {
                for (std::size_t bc = 0; bc < b.cols(); bc++) {
                    out(ar * b.rows() + br, ac * b.cols() + bc) = x * b(br, bc);
                }
            }
        }
    }
    return out;
}

StateVector kron(const StateVector &a, const StateVector &b) {
    require_dim(a.dim() * b.dim(), "kron");
    std::vector<Complex> out(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); i++) {
        for (std::size_t j = 0; j < b.dim(); j++) {
            out[i * b.dim() + j] = a[i] * b[j];
        }
    }
    return StateVector(std::move(out));
}

ComplexMatrix partial_trace(const ComplexMatrix &rho, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
    if (dims.empty()) {
        throw std::invalid_argument("partial_trace: no subsystems");
    }
    std::size_t total = 1;
    for (std::size_t d : dims) {
        if (d == 0) {
            throw std::invalid_argument("partial_trace: zero subsystem dimension");
        }
        total *= d;
    }
    if (!rho.is_square() || rho.rows() != total) {
        throw std::invalid_argument("partial_trace: matrix shape does not match subsystem dims");
    }
    if (keep.empty()) {
        throw std::invalid_argument("partial_trace: keep set is empty");
    }
    std::vector<bool> kept(dims.size(), false);
    for (std::size_t k : keep) {
        if (k >= dims.size()) {
            throw std::invalid_argument("partial_trace: keep index out of range");
        }
        if (kept[k]) {
            throw std::invalid_argument("partial_trace: duplicate keep index");
        }
        kept[k] = true;
    }

    std::size_t n = dims.size();
    std::vector<std::size_t> stride(n);
    stride[n - 1] = 1;
    for (std::size_t k = n - 1; k > 0; k--) {
        stride[k - 1] = stride[k] * dims[k];
    }

    std::size_t kept_dim = 1;
    std::size_t traced_dim = 1;
    for (std::size_t k = 0; k < n; k++) {
        (kept[k] ? kept_dim : traced_dim) *= dims[k];
    }

    // Splits a (kept, traced) index pair back into a full register index.
    auto compose = [&](std::size_t kept_index, std::size_t traced_index) {
        std::size_t full = 0;
        for (std::size_t k = n; k-- > 0;) {
            std::size_t digit;
            if (kept[k]) {
                digit = kept_index % dims[k];
                kept_index /= dims[k];
            } else {
                digit = traced_index % dims[k];
                traced_index /= dims[k];
            }
            full += digit * stride[k];
        }
        return full;
    };

    ComplexMatrix out(kept_dim, kept_dim);
    for (std::size_t r = 0; r < kept_dim; r++) {
        for (std::size_t c = 0; c < kept_dim; c++) {
            Complex s = 0;
            for (std::size_t e = 0; e < traced_dim; e++) {
                s += rho(compose(r, e), compose(c, e));
            }
            out(r, c) = s;
        }
    }
    return out;
}

MatrixDiff diff_report(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "diff_report");
    MatrixDiff d;
    for (std::size_t r = 0; r < a.rows(); r++) {
        for (std::size_t c = 0; c < a.cols(); c++) {
            double x = std::abs(a(r, c) - b(r, c));
            if (x > d.max_abs || std::isnan(x)) {
                d = {x, r, c};
                if (std::isnan(x)) {
                    return d;
                }
            }
        }
    }
    return d;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    return diff_report(a, b).max_abs;
}

bool approx_equal(const ComplexMatrix &a, const ComplexMatrix &b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return false;
    }
    return max_abs_diff(a, b) <= tol;
}

bool is_unitary(const ComplexMatrix &u, double tol) {
    if (!u.is_square()) {
        return false;
    }
    return max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(u.rows())) <= tol;
}

bool is_hermitian(const ComplexMatrix &m, double tol) {
    if (!m.is_square()) {
        return false;
    }
    return max_abs_diff(m, m.adjoint()) <= tol;
}

double min_hermitian_eigenvalue(const ComplexMatrix &m) {
    if (!m.is_square() || m.rows() == 0) {
        throw std::invalid_argument("min_hermitian_eigenvalue: matrix is not square");
    }
    Eigen::Index n = static_cast<Eigen::Index>(m.rows());
    Eigen::MatrixXcd h(n, n);
    for (Eigen::Index r = 0; r < n; r++) {
        for (Eigen::Index c = 0; c < n; c++) {
            h(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("min_hermitian_eigenvalue: eigensolver did not converge");
    }
    return solver.eigenvalues().minCoeff();
}

bool is_density_matrix(const ComplexMatrix &rho, double tol) {
    if (!is_hermitian(rho, tol)) {
        return false;
    }
    if (std::abs(rho.trace() - Complex{1, 0}) > tol) {
        return false;
    }
    return min_hermitian_eigenvalue(rho) >= -tol;
}

void require_density_matrix(const ComplexMatrix &rho, const char *what, double tol) {
    if (!rho.is_square()) {
        throw std::invalid_argument(std::string(what) + ": density matrix must be square");
    }
    if (!is_hermitian(rho, tol)) {
        throw std::invalid_argument(std::string(what) + ": density matrix is not Hermitian");
    }
    if (std::abs(rho.trace() - Complex{1, 0}) > tol) {
        throw std::invalid_argument(std::string(what) + ": density matrix trace is not 1");
    }
    if (min_hermitian_eigenvalue(rho) < -tol) {
        throw std::invalid_argument(std::string(what) + ": density matrix has a negative eigenvalue");
    }
}

double expectation(const ComplexMatrix &op, const ComplexMatrix &rho) {
    if (!op.is_square() || op.rows() != rho.rows() || !rho.is_square()) {
        throw std::invalid_argument("expectation: shape mismatch");
    }
    double s = 0;
    for (std::size_t r = 0; r < op.rows(); r++) {
        for (std::size_t c = 0; c < op.cols(); c++) {
            s += (op(r, c) * rho(c, r)).real();
        }
    }
    return s;
}

ComplexMatrix transposition_matrix(std::size_t dim, std::size_t i, std::size_t j) {
    if (i >= dim || j >= dim) {
        throw std::invalid_argument("transposition_matrix: index out of range");
    }
    ComplexMatrix p = ComplexMatrix::identity(dim);
    if (i != j) {
        p(i, i) = 0;
        p(j, j) = 0;
        p(i, j) = 1;
        p(j, i) = 1;
    }
    return p;
}

}  // namespace qdamp
