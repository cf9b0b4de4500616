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

#include "qbayes/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace qbayes {

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
    for (double v : values_) {
        if (!std::isfinite(v)) {
            throw Error(ErrorCode::InvariantViolation, "spectrum contains a non-finite value", "finite", v);
        }
    }
    std::sort(values_.begin(), values_.end(), std::greater<>());
}

double Spectrum::sum() const noexcept {
    double s = 0.0;
    for (double v : values_) {
        s += v;
    }
    return s;
}

double max_norm(const ComplexMatrix &m) {
    if (m.size() == 0) {
        return 0.0;
    }
    return m.cwiseAbs().maxCoeff();
}

void require_finite(const ComplexMatrix &m, std::string_view what) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            const Complex z = m(i, j);
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
                throw Error(ErrorCode::InvariantViolation, std::string(what) + " has a non-finite entry", "finite");
            }
        }
    }
}

void require_square(const ComplexMatrix &m, std::string_view what) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw Error(ErrorCode::NotSquare, std::string(what) + " is " + std::to_string(m.rows()) + "x" +
                                              std::to_string(m.cols()) + ", expected a non-empty square matrix");
    }
}

ComplexMatrix dagger(const ComplexMatrix &m) {
    return m.adjoint();
}

bool is_hermitian(const ComplexMatrix &m, double tol) {
    require_square(m);
    return max_norm(m - m.adjoint()) <= tol;
}

bool is_unitary(const ComplexMatrix &m, double tol) {
    require_square(m);
    const ComplexMatrix gram = m.adjoint() * m;
    return max_norm(gram - ComplexMatrix::Identity(m.rows(), m.cols())) <= tol;
}

bool is_psd(const ComplexMatrix &m, double tol) {
    if (!is_hermitian(m, tol)) {
        return false;
    }
    const Spectrum s = hermitian_spectrum(m, tol);
    return s[s.size() - 1] >= -tol;
}

static void check_hermitian_input(const ComplexMatrix &m, double tol) {
    require_square(m);
    require_finite(m);
    const double residual = max_norm(m - m.adjoint());
    if (residual > tol) {
        throw Error(ErrorCode::NotHermitian, "matrix is not Hermitian", "hermitian", residual);
    }
}

Spectrum hermitian_spectrum(const ComplexMatrix &m, double tol) {
    check_hermitian_input(m, tol);
    // Only the lower triangle is read by the solver; symmetrize first so
    // round-off in the upper triangle is not silently dropped.
    const ComplexMatrix sym = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd &ev = solver.eigenvalues();
    return Spectrum(std::vector<double>(ev.data(), ev.data() + ev.size()));
}

HermitianEigen hermitian_eigen(const ComplexMatrix &m, double tol) {
    check_hermitian_input(m, tol);
    const ComplexMatrix sym = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::ComputeEigenvectors);
    // Eigen returns ascending order; reverse to match Spectrum.
    const Eigen::Index n = sym.rows();
    std::vector<double> values(static_cast<std::size_t>(n));
    ComplexMatrix vectors(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        values[static_cast<std::size_t>(i)] = solver.eigenvalues()(n - 1 - i);
        vectors.col(i) = solver.eigenvectors().col(n - 1 - i);
    }
    return HermitianEigen{Spectrum(std::move(values)), std::move(vectors)};
}

ComplexMatrix schur_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorCode::ShapeMismatch, "Schur product needs equal shapes, got " + std::to_string(a.rows()) +
                                                  "x" + std::to_string(a.cols()) + " and " +
                                                  std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    return a.cwiseProduct(b);
}

ComplexMatrix tensor_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    const Eigen::Index rb = b.rows();
    const Eigen::Index cb = b.cols();
    ComplexMatrix out(a.rows() * rb, a.cols() * cb);
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix &m, std::size_t dim_first, std::size_t dim_second, Keep keep) {
    require_square(m);
    const auto d1 = static_cast<Eigen::Index>(dim_first);
    const auto d2 = static_cast<Eigen::Index>(dim_second);
    if (d1 == 0 || d2 == 0 || m.rows() != d1 * d2) {
        throw Error(ErrorCode::DimensionMismatch, "partial trace: " + std::to_string(m.rows()) +
                                                      " is not " + std::to_string(dim_first) + " x " +
                                                      std::to_string(dim_second));
    }
    if (keep == Keep::First) {
        ComplexMatrix out = ComplexMatrix::Zero(d1, d1);
        for (Eigen::Index i = 0; i < d1; ++i) {
            for (Eigen::Index j = 0; j < d1; ++j) {
                Complex acc = 0.0;
                for (Eigen::Index k = 0; k < d2; ++k) {
                    acc += m(i * d2 + k, j * d2 + k);
                }
                out(i, j) = acc;
            }
        }
        return out;
    }
    ComplexMatrix out = ComplexMatrix::Zero(d2, d2);
    for (Eigen::Index i = 0; i < d1; ++i) {
        out += m.block(i * d2, i * d2, d2, d2);
    }
    return out;
}

double spectrum_distance(const Spectrum &a, const Spectrum &b) {
    const std::size_t n = std::max(a.size(), b.size());
    // Padding zeros must be merged into sorted position, so re-sort.
    std::vector<double> va = a.vec();
    std::vector<double> vb = b.vec();
    va.resize(n, 0.0);
    vb.resize(n, 0.0);
    std::sort(va.begin(), va.end(), std::greater<>());
    std::sort(vb.begin(), vb.end(), std::greater<>());
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        worst = std::max(worst, std::abs(va[i] - vb[i]));
    }
    return worst;
}

}  // namespace qbayes
