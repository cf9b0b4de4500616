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

#include "qbayes/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "qbayes/processes.hpp"

namespace qbayes {

double CheckReport::min_margin() const {
    double m = std::numeric_limits<double>::infinity();
    for (double v : margins) {
        m = std::min(m, v);
    }
    return m;
}

namespace {

std::vector<double> padded_sorted(std::span<const double> v, std::size_t n) {
    std::vector<double> out(v.begin(), v.end());
    out.resize(n, 0.0);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

bool margins_pass(std::span<const double> margins, double tol) {
    if (margins.empty()) {
        return true;
    }
    if (std::abs(margins.back()) > tol) {
        return false;
    }
    return std::all_of(margins.begin(), margins.end(), [tol](double m) { return m >= -tol; });
}

}  // namespace

std::vector<double> prefix_margins(std::span<const double> lhs, std::span<const double> rhs) {
    const std::size_t n = std::max(lhs.size(), rhs.size());
    const std::vector<double> a = padded_sorted(lhs, n);
    const std::vector<double> b = padded_sorted(rhs, n);
    std::vector<double> margins(n);
    double sa = 0.0;
    double sb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sa += a[i];
        sb += b[i];
        margins[i] = sa - sb;
    }
    return margins;
}

bool majorizes(std::span<const double> lhs, std::span<const double> rhs, double tol) {
    return margins_pass(prefix_margins(lhs, rhs), tol);
}

std::vector<double> sorted_sum(std::span<const double> a, std::span<const double> b) {
    const std::size_t n = std::max(a.size(), b.size());
    std::vector<double> out = padded_sorted(a, n);
    const std::vector<double> sb = padded_sorted(b, n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] += sb[i];
    }
    return out;
}

CheckReport check_schur_majorization(const DensityMatrix &rho, const GramMatrix &e) {
    const Spectrum before = hermitian_spectrum(rho.matrix());
    const Spectrum after = hermitian_spectrum(decohere(rho, e).matrix());
    CheckReport r;
    r.margins = prefix_margins(before.values(), after.values());
    r.pass = margins_pass(r.margins, kMajorizationTol);
    r.spectra["input"] = before.vec();
    r.spectra["decohered"] = after.vec();
    return r;
}

CheckReport check_pinching_double(const ComplexMatrix &h, const ProjectorSet &ps) {
    if (static_cast<std::size_t>(h.rows()) != ps.dim()) {
        throw Error(ErrorCode::ShapeMismatch, "pinching: matrix and projectors differ in dimension");
    }
    const Spectrum input = hermitian_spectrum(h);
    if (input[input.size() - 1] < -kDefaultTol) {
        throw Error(ErrorCode::NotPsd, "pinching majorization needs a positive semidefinite matrix", "psd",
                    -input[input.size() - 1]);
    }
    const auto n = h.rows();
    std::vector<double> block_sum(static_cast<std::size_t>(n), 0.0);
    ComplexMatrix pinched = ComplexMatrix::Zero(n, n);
    for (const ComplexMatrix &p : ps.projectors()) {
        const ComplexMatrix block = p * h * p;
        pinched += block;
        block_sum = sorted_sum(block_sum, hermitian_spectrum(block).values());
    }
    const Spectrum pinched_spectrum = hermitian_spectrum(pinched);

    CheckReport r;
    const std::vector<double> left = prefix_margins(block_sum, input.values());
    const std::vector<double> right = prefix_margins(input.values(), pinched_spectrum.values());
    r.pass = margins_pass(left, kMajorizationTol) && margins_pass(right, kMajorizationTol);
    r.margins = left;
    r.margins.insert(r.margins.end(), right.begin(), right.end());
    r.spectra["block_sum"] = block_sum;
    r.spectra["input"] = input.vec();
    r.spectra["pinched"] = pinched_spectrum.vec();
    return r;
}

CheckReport check_fan(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorCode::ShapeMismatch, "Fan check: matrices differ in shape");
    }
    const Spectrum la = hermitian_spectrum(a);
    const Spectrum lb = hermitian_spectrum(b);
    const Spectrum lsum = hermitian_spectrum(a + b);
    CheckReport r;
    const std::vector<double> summed = sorted_sum(la.values(), lb.values());
    r.margins = prefix_margins(summed, lsum.values());
    r.pass = margins_pass(r.margins, kMajorizationTol);
    r.spectra["a"] = la.vec();
    r.spectra["b"] = lb.vec();
    r.spectra["a_plus_b"] = lsum.vec();
    r.spectra["sum_of_spectra"] = summed;
    return r;
}

CheckReport check_holevo(const OutcomeEnsemble &ens, const EntropyFunctional &f) {
    const double lhs = expected_entropy(ens, f);
    const DensityMatrix average = ensemble_average(ens);
    const double rhs = entropy(average, f);
    CheckReport r;
    r.pass = entropy_leq(lhs, rhs, kMajorizationTol);
    r.margins = {entropy_margin(lhs, rhs)};
    r.values["expected_entropy"] = lhs;
    r.values["average_entropy"] = rhs;
    r.spectra["average"] = hermitian_spectrum(average.matrix()).vec();
    return r;
}

CheckReport entropy_from_majorization_consistency(const DensityMatrix &rho1, const DensityMatrix &rho2,
                                                  const EntropyFunctional &f) {
    if (rho1.dim() != rho2.dim()) {
        throw Error(ErrorCode::ShapeMismatch, "states differ in dimension");
    }
    const Spectrum l1 = hermitian_spectrum(rho1.matrix());
    const Spectrum l2 = hermitian_spectrum(rho2.matrix());
    CheckReport r;
    r.spectra["rho1"] = l1.vec();
    r.spectra["rho2"] = l2.vec();
    const std::vector<double> margins = prefix_margins(l1.values(), l2.values());
    if (!margins_pass(margins, kMajorizationTol)) {
        r.pass = true;
        r.note = "not comparable";
        r.margins = margins;
        return r;
    }
    const double s1 = entropy_of_spectrum(l1, f);
    const double s2 = entropy_of_spectrum(l2, f);
    r.values["entropy_rho1"] = s1;
    r.values["entropy_rho2"] = s2;
    r.margins = {entropy_margin(s1, s2)};
    r.pass = entropy_leq(s1, s2, kMajorizationTol);
    return r;
}

}  // namespace qbayes
