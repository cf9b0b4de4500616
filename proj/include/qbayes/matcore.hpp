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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qbayes/error.hpp"

/// Dense complex matrix kernel shared by every other module.
///
/// Matrices are plain `Eigen::MatrixXcd` values. Tensor products use a
/// first-factor-major layout: entry ((i*rB + k), (j*cB + l)) of A (x) B is
/// A(i,j) * B(k,l). `partial_trace` and the POVM code rely on the same layout.
namespace qbayes {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Absolute max-norm tolerance used for hermiticity, unitarity and the
/// physical invariants of validated types.
inline constexpr double kDefaultTol = 1e-10;

/// Real eigenvalues sorted in non-increasing order.
class Spectrum {
  public:
    Spectrum() = default;
    /// Sorts `values` descending. Throws InvariantViolation on NaN/Inf.
    explicit Spectrum(std::vector<double> values);

    std::span<const double> values() const noexcept {
        return values_;
    }
    std::size_t size() const noexcept {
        return values_.size();
    }
    double operator[](std::size_t i) const {
        return values_[i];
    }
    double sum() const noexcept;
    const std::vector<double> &vec() const noexcept {
        return values_;
    }

  private:
    std::vector<double> values_;
};

struct HermitianEigen {
    Spectrum values;
    /// Column i is the eigenvector of values[i].
    ComplexMatrix vectors;
};

enum class Keep { First, Second };

double max_norm(const ComplexMatrix &m);

/// Throws InvariantViolation if any entry is NaN or infinite.
void require_finite(const ComplexMatrix &m, std::string_view what = "matrix");
void require_square(const ComplexMatrix &m, std::string_view what = "matrix");

bool is_hermitian(const ComplexMatrix &m, double tol = kDefaultTol);
bool is_unitary(const ComplexMatrix &m, double tol = kDefaultTol);
/// Hermitian within `tol` and smallest eigenvalue >= -tol.
bool is_psd(const ComplexMatrix &m, double tol = kDefaultTol);

Spectrum hermitian_spectrum(const ComplexMatrix &m, double tol = kDefaultTol);
HermitianEigen hermitian_eigen(const ComplexMatrix &m, double tol = kDefaultTol);

/// Elementwise product.
ComplexMatrix schur_product(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix tensor_product(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix partial_trace(const ComplexMatrix &m, std::size_t dim_first, std::size_t dim_second, Keep keep);

/// Largest componentwise gap between two spectra; spectra of different
/// length are compared after zero-padding.
double spectrum_distance(const Spectrum &a, const Spectrum &b);

ComplexMatrix dagger(const ComplexMatrix &m);

}  // namespace qbayes
