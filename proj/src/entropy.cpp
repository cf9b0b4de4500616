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

#include "qbayes/entropy.hpp"

#include <charconv>
#include <cmath>

#include "qbayes/processes.hpp"

namespace qbayes {

EntropyFunctional::EntropyFunctional(Kind kind, double alpha, std::string name, std::function<double(double)> custom)
    : kind_(kind), alpha_(alpha), name_(std::move(name)) {
    if (custom) {
        custom_ = std::make_shared<const std::function<double(double)>>(std::move(custom));
    }
}

EntropyFunctional EntropyFunctional::von_neumann() {
    return EntropyFunctional(Kind::VonNeumann, 1.0, "von-neumann", {});
}

EntropyFunctional EntropyFunctional::linear() {
    return EntropyFunctional(Kind::Linear, 2.0, "linear", {});
}

static std::string format_alpha(double alpha) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), alpha);
    (void)ec;
    return std::string(buf, end);
}

EntropyFunctional EntropyFunctional::renyi(double alpha) {
    if (!std::isfinite(alpha) || alpha <= 0.0 || alpha == 1.0) {
        throw Error(ErrorCode::InvalidArgument, "Renyi order must be positive and different from 1");
    }
    return EntropyFunctional(Kind::Renyi, alpha, "renyi:" + format_alpha(alpha), {});
}

EntropyFunctional EntropyFunctional::log_det() {
    return EntropyFunctional(Kind::LogDet, 0.0, "log-det", {});
}

EntropyFunctional EntropyFunctional::custom(std::string name, std::function<double(double)> h) {
    if (!h) {
        throw Error(ErrorCode::InvalidArgument, "custom entropy needs a function");
    }
    constexpr int kGrid = 100;
    double worst = 0.0;
    for (int a = 1; a <= kGrid; ++a) {
        for (int b = a + 1; b <= kGrid; ++b) {
            const double x = a / static_cast<double>(kGrid);
            const double y = b / static_cast<double>(kGrid);
            const double gap = (h(x) + h(y)) / 2.0 - h((x + y) / 2.0);
            if (!(gap <= 1e-12)) {
                worst = std::max(worst, std::isnan(gap) ? std::numeric_limits<double>::infinity() : gap);
            }
        }
    }
    if (worst > 0.0) {
        throw Error(ErrorCode::InvariantViolation, "entropy function '" + name + "' is not concave on (0, 1]",
                    "concave", worst);
    }
    return EntropyFunctional(Kind::Custom, 0.0, std::move(name), std::move(h));
}

EntropyFunctional EntropyFunctional::parse(std::string_view selector) {
    if (selector == "von-neumann") {
        return von_neumann();
    }
    if (selector == "linear") {
        return linear();
    }
    if (selector == "log-det") {
        return log_det();
    }
    constexpr std::string_view kRenyi = "renyi:";
    if (selector.substr(0, kRenyi.size()) == kRenyi) {
        const std::string_view rest = selector.substr(kRenyi.size());
        double alpha = 0.0;
        auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), alpha);
        if (ec != std::errc() || ptr != rest.data() + rest.size()) {
            throw Error(ErrorCode::InvalidArgument, "bad Renyi order in '" + std::string(selector) + "'");
        }
        return renyi(alpha);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown entropy functional '" + std::string(selector) + "'");
}

double EntropyFunctional::h(double x) const {
    switch (kind_) {
        case Kind::VonNeumann:
            return x > 0.0 ? -x * std::log(x) : 0.0;
        case Kind::Linear:
            return x - x * x;
        case Kind::Renyi:
            return alpha_ < 1.0 ? std::pow(x, alpha_) : -std::pow(x, alpha_);
        case Kind::LogDet:
            return x > 0.0 ? std::log(x) : kNegativeInfinity;
        case Kind::Custom:
            return (*custom_)(x);
    }
    return 0.0;
}

std::vector<EntropyFunctional> builtin_functionals() {
    return {EntropyFunctional::von_neumann(), EntropyFunctional::linear(), EntropyFunctional::renyi(0.5),
            EntropyFunctional::renyi(2.0), EntropyFunctional::log_det()};
}

double entropy_of_spectrum(const Spectrum &lambda, const EntropyFunctional &f) {
    constexpr double kClamp = 1e-10;
    // Eigenvalues this small are solver noise on an exact zero; x^alpha with
    // alpha < 1 would otherwise amplify them to ~1e-8.
    constexpr double kSpectralZero = 1e-14;
    const double total = lambda.sum();
    if (std::abs(total - 1.0) > 1e-9) {
        throw Error(ErrorCode::NotADistribution, "spectrum does not sum to 1", "normalized", std::abs(total - 1.0));
    }
    double s = 0.0;
    for (double v : lambda.values()) {
        if (v < -kClamp || v > 1.0 + kClamp) {
            throw Error(ErrorCode::NotADistribution, "spectrum entry outside [0, 1]", "unit_interval", v);
        }
        const double x = v <= kSpectralZero ? 0.0 : std::min(v, 1.0);
        if (f.kind() == EntropyFunctional::Kind::LogDet && x == 0.0) {
            return kNegativeInfinity;
        }
        s += f.h(x);
    }
    return s;
}

double entropy(const DensityMatrix &rho, const EntropyFunctional &f) {
    return entropy_of_spectrum(hermitian_spectrum(rho.matrix()), f);
}

double expected_entropy(const OutcomeEnsemble &ens, const EntropyFunctional &f) {
    double acc = 0.0;
    for (const Outcome &o : ens.outcomes()) {
        if (!o.state) {
            continue;
        }
        const double s = entropy_of_spectrum(hermitian_spectrum(o.state->matrix()), f);
        if (s == kNegativeInfinity) {
            return kNegativeInfinity;
        }
        acc += o.probability * s;
    }
    return acc;
}

bool entropy_leq(double lhs, double rhs, double slack) {
    if (lhs == kNegativeInfinity) {
        return true;
    }
    return lhs <= rhs + slack;
}

double entropy_margin(double lhs, double rhs) {
    if (lhs == kNegativeInfinity && rhs == kNegativeInfinity) {
        return 0.0;
    }
    return rhs - lhs;
}

}  // namespace qbayes
