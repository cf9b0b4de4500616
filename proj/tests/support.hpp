// Copyright 2026 The qbayes Authors
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

#pragma once

#include <cmath>
#include <complex>
#include <initializer_list>
#include <vector>

#include <optional>

#include "qbayes/error.hpp"
#include "qbayes/matcore.hpp"
#include "qbayes/states.hpp"

namespace qbayes::testing {

// Row-major literal builder for small matrices.
inline ComplexMatrix mat(std::size_t rows, std::size_t cols, std::initializer_list<Complex> values) {
    ComplexMatrix m(rows, cols);
    auto it = values.begin();
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) = *it++;
        }
    }
    return m;
}

inline ComplexVector vec(std::initializer_list<Complex> values) {
    ComplexVector v(values.size());
    std::size_t i = 0;
    for (Complex z : values) {
        v(i++) = z;
    }
    return v;
}

inline ComplexMatrix diag(std::initializer_list<double> values) {
    ComplexMatrix m = ComplexMatrix::Zero(values.size(), values.size());
    std::size_t i = 0;
    for (double x : values) {
        m(i, i) = x;
        ++i;
    }
    return m;
}

// |0><0| in dimension d.
inline ComplexMatrix diag_unit(std::size_t d) {
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    m(0, 0) = 1.0;
    return m;
}

inline ComplexMatrix plus_state() {
    return mat(2, 2, {0.5, 0.5, 0.5, 0.5});
}

// Index-loop Kronecker product, written without the library kernel.
inline ComplexMatrix naive_kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            for (Eigen::Index k = 0; k < b.rows(); ++k) {
                for (Eigen::Index l = 0; l < b.cols(); ++l) {
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return out;
}

// Closed-form eigenvalues of a 2x2 Hermitian matrix, descending.
inline std::vector<double> eig2(const ComplexMatrix &m) {
    const double tr = (m(0, 0) + m(1, 1)).real();
    const double det = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).real();
    const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
    return {(tr + disc) / 2.0, (tr - disc) / 2.0};
}

inline double max_abs_diff(const std::vector<double> &a, const std::vector<double> &b) {
    double d = a.size() == b.size() ? 0.0 : INFINITY;
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        d = std::max(d, std::abs(a[i] - b[i]));
    }
    return d;
}

// Error code thrown by fn, or nullopt when it returns normally.
template <typename Fn>
std::optional<ErrorCode> error_code_of(Fn fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    return std::nullopt;
}

}  // namespace qbayes::testing
