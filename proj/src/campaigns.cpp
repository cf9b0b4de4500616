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

#include "qbayes/campaigns.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <exception>
#include <numbers>
#include <sstream>
#include <thread>

#include "qbayes/majorization.hpp"
#include "qbayes/processes.hpp"
#include "qbayes/sampling.hpp"
#include "qbayes/serialization.hpp"

namespace qbayes::campaigns {

using nlohmann::json;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

/// Runs fn(0..count-1) on up to `workers` threads and returns results in
/// index order. The first exception by index is rethrown.
template <typename Fn>
auto run_trials(std::size_t count, std::size_t workers, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
    using Out = decltype(fn(std::size_t{}));
    std::vector<std::optional<Out>> slots(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t t = next++; t < count; t = next++) {
            try {
                slots[t].emplace(fn(t));
            } catch (...) {
                errors[t] = std::current_exception();
            }
        }
    };
    const std::size_t threads = std::max<std::size_t>(1, std::min(workers, count));
    if (threads == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (std::size_t i = 0; i < threads; ++i) {
            pool.emplace_back(work);
        }
        for (std::thread &th : pool) {
            th.join();
        }
    }
    std::vector<Out> out;
    out.reserve(count);
    for (std::size_t t = 0; t < count; ++t) {
        if (errors[t]) {
            std::rethrow_exception(errors[t]);
        }
        out.push_back(std::move(*slots[t]));
    }
    return out;
}

std::vector<EntropyFunctional> functionals_of(const Options &opts) {
    return opts.functionals.empty() ? builtin_functionals() : opts.functionals;
}

std::vector<std::size_t> dims_of(const Options &opts, std::vector<std::size_t> fallback) {
    return opts.dims.empty() ? fallback : opts.dims;
}

json base_flags(const Options &opts, const std::vector<std::size_t> &dims) {
    json f;
    f["seed"] = opts.seed;
    f["dims"] = dims;
    f["trials"] = opts.trials;
    f["tol"] = opts.tol;
    f["units"] = opts.units == Units::Bits ? "bits" : "nats";
    json names = json::array();
    for (const EntropyFunctional &fn : functionals_of(opts)) {
        names.push_back(fn.name());
    }
    f["entropy"] = std::move(names);
    f["response_dim"] = opts.response_dim ? json(*opts.response_dim) : json();
    return f;
}

double min_eigenvalue(const DensityMatrix &rho) {
    const Spectrum s = hermitian_spectrum(rho.matrix());
    return s[s.size() - 1];
}

void tally(Result &r, const std::vector<std::vector<MarginRow>> &per_trial) {
    for (const auto &rows : per_trial) {
        for (const MarginRow &row : rows) {
            if (row.violation) {
                ++r.violations;
            }
            r.rows.push_back(row);
        }
    }
}

// Classifies an inequality row that already passed the hard check.
void classify_strictness(Result &r, const MarginRow &row) {
    if (row.violation) {
        return;
    }
    if (row.trivial) {
        ++r.counters["trivial"];
    } else if (row.margin > kNearTrivialMargin) {
        ++r.counters["strict"];
    } else {
        ++r.counters["near_trivial"];
    }
}

MarginRow entropy_row(std::int64_t trial, std::size_t dim, const EntropyFunctional &f, const char *side, double lhs,
                      double rhs, bool trivial, double tol) {
    MarginRow row;
    row.trial = trial;
    row.dim = dim;
    row.functional = f.name();
    row.side = side;
    row.lhs = lhs;
    row.rhs = rhs;
    row.margin = entropy_margin(lhs, rhs);
    row.trivial = trivial;
    row.entropy_valued = true;
    row.violation = !entropy_leq(lhs, rhs, tol);
    return row;
}

MarginRow identity_row(std::int64_t trial, std::size_t dim, const char *side, double deviation, double tol) {
    MarginRow row;
    row.trial = trial;
    row.dim = dim;
    row.functional = "-";
    row.side = side;
    row.lhs = deviation;
    row.rhs = tol;
    row.margin = tol - deviation;
    row.violation = !(deviation <= tol);
    return row;
}

MarginRow check_row(std::int64_t trial, std::size_t dim, const char *side, const CheckReport &rep) {
    MarginRow row;
    row.trial = trial;
    row.dim = dim;
    row.functional = "-";
    row.side = side;
    row.lhs = kNaN;
    row.rhs = kNaN;
    row.margin = rep.min_margin();
    row.violation = !rep.pass;
    return row;
}

struct STheoremTrial {
    std::vector<MarginRow> rows;
    std::int64_t skipped_singular = 0;
};

STheoremTrial s_theorem_trial(std::int64_t trial, const DensityMatrix &rho, const ProbingMatrix &s,
                              const std::vector<EntropyFunctional> &fs, double tol) {
    STheoremTrial out;
    const std::size_t n = rho.dim();
    const OutcomeEnsemble ens = observe(rho, s);
    const GramMatrix f = response_gram(s);
    const DensityMatrix decohered = decohere(rho, f);
    const double deviation = max_norm(ensemble_average(ens).matrix() - decohered.matrix());
    out.rows.push_back(identity_row(trial, n, "consistency", deviation, kIdentityTol));

    const bool trivial_left = is_trivial_probing_for(rho, s, tol);
    const bool trivial_right = is_trivial_decoherence_for(rho, f, tol);
    const bool singular = min_eigenvalue(rho) < kSingularEigenvalue;
    for (const EntropyFunctional &fn : fs) {
        if (fn.kind() == EntropyFunctional::Kind::LogDet && singular) {
            ++out.skipped_singular;
            continue;
        }
        const double initial = entropy(rho, fn);
        out.rows.push_back(entropy_row(trial, n, fn, "left", expected_entropy(ens, fn), initial, trivial_left, tol));
        out.rows.push_back(entropy_row(trial, n, fn, "right", initial, entropy(decohered, fn), trivial_right, tol));
    }
    return out;
}

std::string format_real(double v) {
    if (std::isnan(v)) {
        return "";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, end);
}

double display(double v, bool entropy_valued, Units units) {
    if (entropy_valued && units == Units::Bits) {
        return v / std::numbers::ln2;
    }
    return v;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

Result verify_s_theorems(const Options &opts, const FixedInputs &fixed) {
    Result r;
    r.command = "verify-s-theorems";
    const std::vector<EntropyFunctional> fs = functionals_of(opts);
    const Rng root(opts.seed);

    std::vector<std::size_t> dims;
    if (fixed.rho) {
        dims = {fixed.rho->dim()};
    } else if (fixed.probing) {
        dims = {fixed.probing->object_dim()};
    } else {
        dims = dims_of(opts, {2, 3, 4, 8});
    }
    const bool fully_fixed = fixed.rho && fixed.probing;
    const std::size_t trials = fully_fixed ? 1 : opts.trials;
    r.flags = base_flags(opts, dims);
    r.flags["trials"] = trials;
    r.flags["fixed_rho"] = fixed.rho.has_value();
    r.flags["fixed_probing"] = fixed.probing.has_value();

    std::vector<std::vector<MarginRow>> per_trial;
    std::int64_t skipped = 0;
    for (std::size_t n : dims) {
        const Rng stream = root.child(n);
        const std::size_t m = fixed.probing ? fixed.probing->outcome_count() : opts.response_dim.value_or(n);
        auto results = run_trials(trials, opts.workers, [&](std::size_t t) {
            Rng rng = stream.child(t);
            DensityMatrix rho = fixed.rho ? *fixed.rho : random_density(n, rng);
            ProbingMatrix s = fixed.probing ? *fixed.probing : random_probing(n, m, rng);
            return s_theorem_trial(static_cast<std::int64_t>(t), rho, s, fs, opts.tol);
        });
        for (STheoremTrial &tr : results) {
            skipped += tr.skipped_singular;
            per_trial.push_back(std::move(tr.rows));
        }
    }
    tally(r, per_trial);
    r.counters["trivial"] = 0;
    r.counters["strict"] = 0;
    r.counters["near_trivial"] = 0;
    for (const MarginRow &row : r.rows) {
        if (row.side == "left" || row.side == "right") {
            classify_strictness(r, row);
        }
    }
    r.counters["skipped_singular"] = skipped;
    return r;
}

Result majorization(const Options &opts) {
    Result r;
    r.command = "majorization";
    const std::vector<std::size_t> dims = dims_of(opts, {2, 3, 4, 5, 6, 7, 8});
    r.flags = base_flags(opts, dims);
    r.flags.erase("entropy");
    const Rng root(opts.seed);

    struct TrialOut {
        std::vector<MarginRow> rows;
        json reports;
    };
    auto results = run_trials(opts.trials, opts.workers, [&](std::size_t t) {
        const std::size_t n = dims[t % dims.size()];
        Rng rng = root.child(t);
        const auto trial = static_cast<std::int64_t>(t);
        TrialOut out;
        out.reports = json::array();

        const DensityMatrix rho = random_density(n, rng);
        const std::size_t d = opts.response_dim.value_or(1 + rng.uniform_index(n + 1));
        CheckReport schur = check_schur_majorization(rho, random_gram(n, d, rng));

        const DensityMatrix h = random_density(n, rng);
        const std::vector<std::size_t> blocks = random_block_sizes(n, rng);
        CheckReport pinching = check_pinching_double(h.matrix(), random_projector_partition(n, blocks, rng));

        CheckReport fan = check_fan(random_hermitian(n, rng), random_hermitian(n, rng));

        for (auto [name, rep] : {std::pair<const char *, CheckReport *>{"schur", &schur},
                                 {"pinching", &pinching},
                                 {"fan", &fan}}) {
            rep->trial = trial;
            out.rows.push_back(check_row(trial, n, name, *rep));
            json j = io::to_json(*rep);
            j["theorem"] = name;
            out.reports.push_back(std::move(j));
        }
        return out;
    });
    json reports = json::array();
    std::vector<std::vector<MarginRow>> per_trial;
    for (TrialOut &tr : results) {
        per_trial.push_back(std::move(tr.rows));
        for (json &j : tr.reports) {
            reports.push_back(std::move(j));
        }
    }

    // Fixed cases: trivial projector set and the 2+2 block example.
    json fixed = json::array();
    std::vector<MarginRow> fixed_rows;
    auto add_fixed = [&](const char *name, const char *side, std::size_t dim, const CheckReport &rep) {
        json j = io::to_json(rep);
        j["case"] = name;
        fixed.push_back(std::move(j));
        MarginRow row = check_row(-1, dim, side, rep);
        fixed_rows.push_back(row);
    };
    {
        ComplexMatrix plus(2, 2);
        plus << 0.5, 0.5, 0.5, 0.5;
        add_fixed("trivial_projector_set", "pinching", 2,
                  check_pinching_double(plus, ProjectorSet({ComplexMatrix::Identity(2, 2)})));
        const std::vector<std::size_t> labels = {0, 1};
        add_fixed("full_pinching_plus_state", "pinching", 2,
                  check_pinching_double(plus, ProjectorSet::from_block_labels(labels)));
        // H = [[A, C], [C^dagger, B]] with 2x2 blocks.
        ComplexMatrix block(4, 4);
        block << 0.30, 0.05, 0.10, Complex(0.02, 0.03),  //
            0.05, 0.20, Complex(0.04, -0.01), 0.06,      //
            0.10, Complex(0.04, 0.01), 0.25, 0.03,       //
            Complex(0.02, -0.03), 0.06, 0.03, 0.25;
        const std::vector<std::size_t> halves = {0, 0, 1, 1};
        add_fixed("block_2x2", "pinching", 4, check_pinching_double(block, ProjectorSet::from_block_labels(halves)));
    }
    per_trial.push_back(std::move(fixed_rows));
    tally(r, per_trial);
    r.details["reports"] = std::move(reports);
    r.details["fixed_cases"] = std::move(fixed);
    return r;
}

Result counterexample(int which, const Options &opts) {
    if (which != 1 && which != 2) {
        throw Error(ErrorCode::InvalidArgument, "counterexample must be 1 or 2");
    }
    Result r;
    r.command = "counterexample";
    const PovmExample ex = which == 1 ? counterexample_1() : counterexample_2();
    r.flags = base_flags(opts, {2});
    r.flags.erase("dims");
    r.flags.erase("trials");
    r.flags.erase("response_dim");
    r.flags.erase("seed");
    r.flags["which"] = which;

    const OutcomeEnsemble ens = apply_povm(ex.input, ex.povm);
    const DensityMatrix average = ensemble_average(ens);
    const PurityClassification cls = classify_purity(ex.povm);

    // Expected values.
    const std::vector<double> expected_p = which == 1 ? std::vector<double>{0.5, 0.5, 0.0, 0.0}
                                                      : std::vector<double>{0.5, 0.5};
    const ComplexMatrix expected_state = which == 1 ? maximally_mixed(2).matrix()
                                                    : density_from_pure(PureState::basis(2, 0)).matrix();
    const bool expected_pp = which == 2;

    json checks = json::object();
    bool ok = true;
    auto record = [&](const std::string &name, bool pass, double deviation) {
        checks[name] = json{{"pass", pass}, {"deviation", io::real(deviation)}};
        ok = ok && pass;
    };

    const std::vector<double> p = ens.probabilities();
    double p_dev = p.size() == expected_p.size() ? 0.0 : INFINITY;
    for (std::size_t k = 0; k < std::min(p.size(), expected_p.size()); ++k) {
        p_dev = std::max(p_dev, std::abs(p[k] - expected_p[k]));
    }
    record("probabilities", p_dev <= kIdentityTol, p_dev);

    double state_dev = 0.0;
    for (std::size_t k = 0; k < ens.size(); ++k) {
        const Outcome &o = ens.outcomes()[k];
        if (expected_p[k] > 0.0) {
            state_dev = o.state ? std::max(state_dev, max_norm(o.state->matrix() - expected_state)) : INFINITY;
        } else if (o.state) {
            state_dev = INFINITY;
        }
    }
    record("outcome_states", state_dev <= kIdentityTol, state_dev);

    const EntropyFunctional vn = EntropyFunctional::von_neumann();
    const double ln2 = std::numbers::ln2;
    if (which == 1) {
        const double d0 = std::abs(entropy(ex.input, vn));
        const double d1 = std::abs(expected_entropy(ens, vn) - ln2);
        record("von_neumann_jump", std::max(d0, d1) <= kIdentityTol, std::max(d0, d1));
    } else {
        const double d0 = std::abs(entropy(ex.input, vn) - ln2);
        const double d1 = std::abs(entropy(average, vn));
        record("von_neumann_jump", std::max(d0, d1) <= kIdentityTol, std::max(d0, d1));
    }
    record("purity_preserving_classification", cls.purity_preserving == expected_pp, 0.0);

    json per_functional = json::array();
    std::vector<MarginRow> rows;
    for (const EntropyFunctional &fn : functionals_of(opts)) {
        const double initial = entropy(ex.input, fn);
        const double observed = expected_entropy(ens, fn);
        const double decohered = entropy(average, fn);
        MarginRow left = entropy_row(0, 2, fn, "left", observed, initial, false, opts.tol);
        MarginRow right = entropy_row(0, 2, fn, "right", initial, decohered, false, opts.tol);
        const bool left_violated = left.violation;
        const bool right_violated = right.violation;
        // A reproduced counterexample is the expected outcome, not a failure.
        left.violation = false;
        right.violation = false;
        rows.push_back(left);
        rows.push_back(right);
        const bool reproduced = which == 1 ? left_violated : right_violated;
        ok = ok && reproduced;
        per_functional.push_back(json{{"functional", fn.name()},
                                      {"initial", io::real(display(initial, true, opts.units))},
                                      {"expected_after_observation", io::real(display(observed, true, opts.units))},
                                      {"after_decoherence", io::real(display(decohered, true, opts.units))},
                                      {"left_violated", left_violated},
                                      {"right_violated", right_violated}});
    }
    r.rows = std::move(rows);
    r.violations = ok ? 0 : 1;
    r.details["which"] = which;
    r.details["violated_side"] = which == 1 ? "left" : "right";
    r.details["ensemble"] = io::to_json(ens);
    r.details["checks"] = std::move(checks);
    r.details["entropies"] = std::move(per_functional);
    r.details["classification"] = cls.purity_preserving ? "purity-preserving" : "general";
    return r;
}

Result holevo(const Options &opts, std::optional<std::size_t> ensemble_size) {
    Result r;
    r.command = "holevo";
    const std::vector<std::size_t> dims = dims_of(opts, {2, 3, 4, 5, 6, 7, 8});
    const std::vector<EntropyFunctional> fs = functionals_of(opts);
    r.flags = base_flags(opts, dims);
    r.flags["ensemble_size"] = ensemble_size ? json(*ensemble_size) : json();
    const Rng root(opts.seed);
    if (ensemble_size && *ensemble_size == 0) {
        throw Error(ErrorCode::InvalidArgument, "ensemble size must be positive");
    }

    auto per_trial = run_trials(opts.trials, opts.workers, [&](std::size_t t) {
        const std::size_t n = dims[t % dims.size()];
        Rng rng = root.child(t);
        const std::size_t k = ensemble_size.value_or(2 + rng.uniform_index(4));
        std::vector<double> weights(k);
        double total = 0.0;
        for (double &w : weights) {
            w = -std::log(1.0 - rng.uniform());
            total += w;
        }
        std::vector<Outcome> outcomes;
        for (std::size_t i = 0; i < k; ++i) {
            outcomes.push_back(Outcome{weights[i] / total, random_density(n, rng)});
        }
        const OutcomeEnsemble ens(std::move(outcomes));
        std::vector<MarginRow> rows;
        for (const EntropyFunctional &fn : fs) {
            const CheckReport rep = check_holevo(ens, fn);
            MarginRow row = entropy_row(static_cast<std::int64_t>(t), n, fn, "holevo", rep.values.at("expected_entropy"),
                                        rep.values.at("average_entropy"), false, opts.tol);
            row.violation = !rep.pass;
            rows.push_back(row);
        }
        return rows;
    });
    tally(r, per_trial);
    return r;
}

Result luders_equiv(const Options &opts) {
    Result r;
    r.command = "luders-equiv";
    const std::vector<std::size_t> dims = dims_of(opts, {2, 3, 4, 5, 6, 7, 8});
    r.flags = base_flags(opts, dims);
    r.flags.erase("entropy");
    const Rng root(opts.seed);

    auto per_trial = run_trials(opts.trials, opts.workers, [&](std::size_t t) {
        const std::size_t n = dims[t % dims.size()];
        Rng rng = root.child(t);
        const DensityMatrix rho = random_density(n, rng);
        const ProjectorSet ps = random_diagonal_partition(n, rng);
        const double deviation =
            max_norm(luders(rho, ps).matrix() - decohere(rho, gram_from_projectors(ps)).matrix());
        return std::vector<MarginRow>{identity_row(static_cast<std::int64_t>(t), n, "luders", deviation, kIdentityTol)};
    });

    // Fixed cases: {I} leaves rho alone; full pinching of |+><+| gives I/2.
    std::vector<MarginRow> fixed;
    json fixed_json = json::array();
    {
        ComplexMatrix plus(2, 2);
        plus << 0.5, 0.5, 0.5, 0.5;
        const DensityMatrix rho(plus);
        const double d_identity = max_norm(luders(rho, ProjectorSet({ComplexMatrix::Identity(2, 2)})).matrix() - plus);
        const std::vector<std::size_t> labels = {0, 1};
        const double d_pinch =
            max_norm(luders(rho, ProjectorSet::from_block_labels(labels)).matrix() - maximally_mixed(2).matrix());
        fixed.push_back(identity_row(-1, 2, "luders_identity_projector", d_identity, kIdentityTol));
        fixed.push_back(identity_row(-1, 2, "luders_full_pinching", d_pinch, kIdentityTol));
        fixed_json.push_back(json{{"case", "identity_projector"}, {"deviation", d_identity}});
        fixed_json.push_back(json{{"case", "full_pinching_plus_state"}, {"deviation", d_pinch}});
    }
    per_trial.push_back(std::move(fixed));
    tally(r, per_trial);
    r.details["fixed_cases"] = std::move(fixed_json);
    return r;
}

Result pppovm(const Options &opts, std::size_t pure_inputs, std::size_t mixed_inputs, std::size_t converse_inputs) {
    Result r;
    r.command = "pppovm";
    const std::vector<EntropyFunctional> fs = functionals_of(opts);
    // Object and ancilla dimensions cycle through {2, 3, 4}.
    const std::vector<std::size_t> dims = dims_of(opts, {2, 3, 4});
    r.flags = base_flags(opts, dims);
    r.flags["pure_inputs"] = pure_inputs;
    r.flags["mixed_inputs"] = mixed_inputs;
    r.flags["converse_inputs"] = converse_inputs;
    const Rng root(opts.seed);

    struct TrialOut {
        std::vector<MarginRow> rows;
        std::int64_t skipped_singular = 0;
        bool converse_witnessed = false;
        bool general_classified_pp = false;
    };
    auto results = run_trials(opts.trials, opts.workers, [&](std::size_t t) {
        const std::size_t n = dims[t % dims.size()];
        const std::size_t d = dims[(t / dims.size()) % dims.size()];
        const auto trial = static_cast<std::int64_t>(t);
        Rng rng = root.child(t);
        TrialOut out;
        const Povm m = random_pppovm(n, d, rng);
        if (!is_purity_preserving(m)) {
            MarginRow row = identity_row(trial, n, "pppovm_structure", INFINITY, 0.0);
            out.rows.push_back(row);
        }
        double worst = 0.0;
        for (std::size_t i = 0; i < pure_inputs; ++i) {
            const OutcomeEnsemble ens = apply_povm(density_from_pure(random_pure(n, rng)), m);
            for (const Outcome &o : ens.outcomes()) {
                if (o.state) {
                    worst = std::max(worst, std::abs(purity(*o.state) - 1.0));
                }
            }
        }
        out.rows.push_back(identity_row(trial, n, "pure_outcome_purity", worst, opts.tol));
        for (std::size_t i = 0; i < mixed_inputs; ++i) {
            const DensityMatrix rho = random_density(n, rng);
            const OutcomeEnsemble ens = apply_povm(rho, m);
            const bool singular = min_eigenvalue(rho) < kSingularEigenvalue;
            for (const EntropyFunctional &fn : fs) {
                if (fn.kind() == EntropyFunctional::Kind::LogDet && singular) {
                    ++out.skipped_singular;
                    continue;
                }
                out.rows.push_back(entropy_row(trial, n, fn, "left", expected_entropy(ens, fn), entropy(rho, fn),
                                               false, opts.tol));
            }
        }
        const Povm general = random_general_povm(n, d, rng);
        out.general_classified_pp = is_purity_preserving(general);
        if (!out.general_classified_pp) {
            for (std::size_t i = 0; i < converse_inputs && !out.converse_witnessed; ++i) {
                const OutcomeEnsemble ens = apply_povm(density_from_pure(random_pure(n, rng)), general);
                for (const Outcome &o : ens.outcomes()) {
                    if (o.state && purity(*o.state) < 1.0 - 1e-6) {
                        out.converse_witnessed = true;
                    }
                }
            }
        }
        return out;
    });
    std::vector<std::vector<MarginRow>> per_trial;
    std::int64_t skipped = 0;
    std::int64_t witnessed = 0;
    std::int64_t general_pp = 0;
    for (TrialOut &tr : results) {
        skipped += tr.skipped_singular;
        if (tr.general_classified_pp) {
            ++general_pp;
        } else if (tr.converse_witnessed) {
            ++witnessed;
        } else {
            // A non-product POVM that kept every sampled pure input pure.
            MarginRow row;
            row.trial = static_cast<std::int64_t>(per_trial.size());
            row.functional = "-";
            row.side = "converse";
            row.lhs = kNaN;
            row.rhs = kNaN;
            row.margin = kNaN;
            row.violation = true;
            tr.rows.push_back(row);
        }
        per_trial.push_back(std::move(tr.rows));
    }
    tally(r, per_trial);
    r.counters["skipped_singular"] = skipped;
    r.counters["converse_witnessed"] = witnessed;
    r.counters["general_classified_purity_preserving"] = general_pp;
    return r;
}

Result povm_classify(const Povm &m, const std::string &source) {
    Result r;
    r.command = "povm-classify";
    r.flags = json{{"povm_file", source}};
    const PurityClassification cls = classify_purity(m);
    r.details["classification"] = cls.purity_preserving ? "purity-preserving" : "general";
    r.details["probing_realizable"] = "unknown";
    r.details["object_dim"] = m.object_dim();
    r.details["ancilla_dim"] = m.ancilla_dim();
    r.details["pure_ancilla"] = m.has_pure_ancilla();
    if (cls.purity_preserving) {
        json basis = json::array();
        for (const ComplexVector &v : cls.ancilla_basis) {
            basis.push_back(io::to_json(ComplexMatrix(v)));
        }
        r.details["ancilla_basis"] = std::move(basis);
    } else {
        r.details["reason"] = cls.reason;
    }
    return r;
}

json report(const Result &r, const Options &opts, bool with_timestamp) {
    json rows = json::array();
    double lo = INFINITY;
    double hi = -INFINITY;
    double sum = 0.0;
    std::int64_t finite = 0;
    std::int64_t infinite = 0;
    for (const MarginRow &row : r.rows) {
        const double margin = display(row.margin, row.entropy_valued, opts.units);
        rows.push_back(json{{"trial", row.trial},
                            {"dim", row.dim},
                            {"functional", row.functional},
                            {"side", row.side},
                            {"lhs", std::isnan(row.lhs) ? json() : io::real(display(row.lhs, row.entropy_valued, opts.units))},
                            {"rhs", std::isnan(row.rhs) ? json() : io::real(display(row.rhs, row.entropy_valued, opts.units))},
                            {"margin", std::isnan(margin) ? json() : io::real(margin)},
                            {"trivial", row.trivial},
                            {"violation", row.violation}});
        if (std::isfinite(margin)) {
            lo = std::min(lo, margin);
            hi = std::max(hi, margin);
            sum += margin;
            ++finite;
        } else if (std::isinf(margin)) {
            ++infinite;
        }
    }
    json summary;
    summary["rows"] = r.rows.size();
    summary["violations"] = r.violations;
    summary["min_margin"] = finite ? io::real(lo) : json();
    summary["max_margin"] = finite ? io::real(hi) : json();
    summary["mean_margin"] = finite ? io::real(sum / static_cast<double>(finite)) : json();
    summary["infinite_margins"] = infinite;
    for (const auto &[name, count] : r.counters) {
        summary[name] = count;
    }
    json out;
    out["command"] = r.command;
    out["seed"] = r.flags.contains("seed") ? r.flags["seed"] : json();
    out["flags"] = r.flags;
    out["margins"] = std::move(rows);
    out["summary"] = std::move(summary);
    out["details"] = r.details;
    out["pass"] = r.exit_code() == 0;
    if (with_timestamp) {
        out["timestamp"] = utc_timestamp();
    }
    return out;
}

std::string render(const Result &r, const Options &opts, Format format, bool with_timestamp) {
    if (format == Format::Json) {
        return report(r, opts, with_timestamp).dump(2) + "\n";
    }
    std::ostringstream os;
    os << "trial,dim,functional,side,lhs,rhs,margin,trivial\n";
    for (const MarginRow &row : r.rows) {
        os << row.trial << ',' << row.dim << ',' << row.functional << ',' << row.side << ','
           << format_real(display(row.lhs, row.entropy_valued, opts.units)) << ','
           << format_real(display(row.rhs, row.entropy_valued, opts.units)) << ','
           << format_real(display(row.margin, row.entropy_valued, opts.units)) << ',' << (row.trivial ? 1 : 0)
           << '\n';
    }
    return os.str();
}

}  // namespace qbayes::campaigns
