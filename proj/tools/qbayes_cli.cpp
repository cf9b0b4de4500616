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

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qbayes/campaigns.hpp"
#include "qbayes/error.hpp"
#include "qbayes/sampling.hpp"
#include "qbayes/serialization.hpp"

namespace {

using namespace qbayes;
namespace cp = qbayes::campaigns;

constexpr int kExitError = 2;

struct Globals {
    std::uint64_t seed = 0;
    std::vector<std::size_t> dims;
    std::size_t trials = 500;
    std::vector<std::string> entropy;
    double tol = 1e-9;
    std::string format = "json";
    std::optional<std::size_t> response_dim;
    std::string units = "nats";
    std::size_t workers = 1;
    bool no_timestamp = false;
};

cp::Options to_options(const Globals &g) {
    cp::Options o;
    o.seed = g.seed;
    o.dims = g.dims;
    o.trials = g.trials;
    for (const std::string &s : g.entropy) {
        o.functionals.push_back(EntropyFunctional::parse(s));
    }
    o.tol = g.tol;
    o.response_dim = g.response_dim;
    o.units = g.units == "bits" ? cp::Units::Bits : cp::Units::Nats;
    o.workers = g.workers;
    return o;
}

void add_globals(CLI::App &app, Globals &g) {
    app.add_option("--seed", g.seed, "RNG seed")->capture_default_str();
    app.add_option("--dim", g.dims, "Object dimension (repeatable)")->check(CLI::PositiveNumber);
    app.add_option("--trials", g.trials, "Trials per dimension")->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--entropy", g.entropy, "von-neumann | linear | renyi:<alpha> | log-det (repeatable)");
    app.add_option("--tol", g.tol, "Inequality slack and triviality tolerance")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    app.add_option("--format", g.format, "Output format")
        ->capture_default_str()
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--response-dim", g.response_dim, "Response dimension")->check(CLI::PositiveNumber);
    app.add_option("--units", g.units, "Entropy display units")
        ->capture_default_str()
        ->check(CLI::IsMember({"nats", "bits"}));
    app.add_option("--workers", g.workers, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
    app.add_flag("--no-timestamp", g.no_timestamp, "Omit the report timestamp");
}

int emit(const cp::Result &r, const Globals &g, const cp::Options &o) {
    const cp::Format f = g.format == "csv" ? cp::Format::Csv : cp::Format::Json;
    std::cout << cp::render(r, o, f, !g.no_timestamp);
    std::cout.flush();
    return r.exit_code();
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Entropy inequalities under decoherence and observation"};
    app.require_subcommand(1);
    Globals g;
    add_globals(app, g);

    CLI::App *verify = app.add_subcommand("verify-s-theorems", "Observation and decoherence inequality campaign");
    std::string rho_file;
    std::string probing_file;
    verify->add_option("--rho", rho_file, "Density matrix JSON file")->check(CLI::ExistingFile);
    verify->add_option("--probing", probing_file, "Probing matrix JSON file")->check(CLI::ExistingFile);

    CLI::App *major = app.add_subcommand("majorization", "Schur, pinching and Fan majorization campaign");

    CLI::App *counter = app.add_subcommand("counterexample", "Reproduce a POVM counterexample");
    int which = 1;
    counter->add_option("which", which, "1 or 2")->required()->check(CLI::IsMember({1, 2}));

    CLI::App *holevo = app.add_subcommand("holevo", "Holevo inequality campaign");
    std::optional<std::size_t> ensemble_size;
    holevo->add_option("--ensemble-size", ensemble_size, "Ensemble size (default: random in [2, 5])")
        ->check(CLI::PositiveNumber);

    CLI::App *luders = app.add_subcommand("luders-equiv", "Lüders projection against the block Gram Schur form");

    CLI::App *classify = app.add_subcommand("povm-classify", "Classify a POVM file");
    std::string povm_file;
    classify->add_option("povm-file", povm_file, "POVM JSON file")->required()->check(CLI::ExistingFile);

    CLI::App *pp = app.add_subcommand("pppovm", "Purity-preserving POVM campaign");
    std::size_t pure_inputs = 20;
    std::size_t mixed_inputs = 5;
    std::size_t converse_inputs = 100;
    pp->add_option("--pure-inputs", pure_inputs, "Pure inputs per POVM")->capture_default_str();
    pp->add_option("--mixed-inputs", mixed_inputs, "Mixed inputs per POVM")->capture_default_str();
    pp->add_option("--converse-inputs", converse_inputs, "Pure inputs for the converse test")->capture_default_str();

    CLI::App *exporter = app.add_subcommand("export-povm", "Write a POVM as JSON");
    std::string kind;
    exporter->add_option("kind", kind, "counterexample-1 | counterexample-2 | probing")
        ->required()
        ->check(CLI::IsMember({"counterexample-1", "counterexample-2", "probing"}));

    for (CLI::App *sub : app.get_subcommands({})) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e);
    }

    try {
        const cp::Options o = to_options(g);
        if (verify->parsed()) {
            cp::FixedInputs fixed;
            if (!rho_file.empty()) {
                fixed.rho = io::density_from_json(io::read_file(rho_file));
            }
            if (!probing_file.empty()) {
                fixed.probing = io::probing_from_json(io::read_file(probing_file));
            }
            return emit(cp::verify_s_theorems(o, fixed), g, o);
        }
        if (major->parsed()) {
            return emit(cp::majorization(o), g, o);
        }
        if (counter->parsed()) {
            return emit(cp::counterexample(which, o), g, o);
        }
        if (holevo->parsed()) {
            return emit(cp::holevo(o, ensemble_size), g, o);
        }
        if (luders->parsed()) {
            return emit(cp::luders_equiv(o), g, o);
        }
        if (classify->parsed()) {
            return emit(cp::povm_classify(io::povm_from_json(io::read_file(povm_file)), povm_file), g, o);
        }
        if (pp->parsed()) {
            return emit(cp::pppovm(o, pure_inputs, mixed_inputs, converse_inputs), g, o);
        }
        if (exporter->parsed()) {
            Povm m = counterexample_1().povm;
            if (kind == "counterexample-2") {
                m = counterexample_2().povm;
            } else if (kind == "probing") {
                const std::size_t n = g.dims.empty() ? 2 : g.dims.front();
                Rng rng(g.seed);
                const ProbingMatrix s = random_probing(n, g.response_dim.value_or(n), rng);
                std::vector<PureState> responses;
                for (Eigen::Index i = 0; i < s.matrix().rows(); ++i) {
                    responses.emplace_back(ComplexVector(s.matrix().row(i).transpose()));
                }
                m = probing_as_povm(responses);
            }
            std::cout << io::to_json(m).dump(2) << '\n';
            return 0;
        }
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
