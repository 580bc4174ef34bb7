// Copyright 2026 The PCE Channels Authors
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

#include "pce/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "pce/channel_sim.hpp"
#include "pce/diagram.hpp"
#include "pce/dynamics.hpp"
#include "pce/enumeration.hpp"
#include "pce/generators.hpp"
#include "pce/io.hpp"
#include "pce/pce_map.hpp"
#include "pce/random.hpp"

namespace pce {

namespace {

using io::format_number;
using io::Json;

class UsageError : public Error {
  public:
    using Error::Error;
};

struct GlobalOptions {
    std::string format = "text";
    std::uint64_t seed = 1;
    double tol = kEigenTolerance;

    bool json() const { return format == "json"; }
};

// Any failure while reading an input document is a usage error.
template <typename F>
auto load(const std::string& path, F parse) {
    try {
        return parse(io::parse_text(io::read_file(path)));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(path + ": " + e.what());
    } catch (const Json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::vector<std::string> label_strings(std::span<const MultiIndex> labels) {
    std::vector<std::string> out;
    for (const MultiIndex& a : labels) {
        out.push_back(a.str());
    }
    return out;
}

void print_json(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

// ---------------------------------------------------------------- check

int cmd_check(const GlobalOptions& g, const std::string& input, std::ostream& out) {
    const PceMap map = load(input, io::parse_channel);
    const int n = map.num_qubits();
    const bool is_pce = map.trace_preserving();
    const bool is_channel = is_pce && map.subspace().has_value();

    Json report;
    report["n"] = n;
    report["is_pce"] = is_pce;
    report["is_channel"] = is_channel;
    report["popcount"] = map.preserved_count();
    if (is_channel) {
        report["K"] = map.subspace()->dimension();
    }
    if (is_pce && !is_channel) {
        if (auto v = find_closure_violation(map)) {
            report["witness"] = {{"pair", {v->first.str(), v->second.str()}}, {"missing_sum", v->missing_sum.str()}};
        }
    }
    if (map.has_tau()) {
        const ChoiSpectrum spectrum = choi_spectrum(map);
        report["lambda_min"] = io::round_significant(spectrum.min().to_double());
        report["lambda_sum"] = io::round_significant(spectrum.sum().to_double());
        if (n <= kChoiDenseQubitLimit) {
            Json values = Json::object();
            for (const MultiIndex& a : io::reading_order(n)) {
                values[a.str()] = io::round_significant(spectrum[a.word()].to_double());
            }
            report["spectrum"] = std::move(values);
        }
    }
    if (n <= kChoiDenseQubitLimit) {
        const double dense_min = hermitian_eigenvalues(choi_dense(map), g.tol).minCoeff();
        const bool oracle_cp = dense_min >= -g.tol;
        report["oracle"] = {{"completely_positive", oracle_cp},
                            {"min_eigenvalue", io::round_significant(dense_min)},
                            {"agrees", oracle_cp == is_channel}};
    }

    if (g.json()) {
        print_json(out, report);
    } else {
        out << "n: " << n << '\n';
        out << "is_pce: " << (is_pce ? "true" : "false") << '\n';
        out << "is_channel: " << (is_channel ? "true" : "false") << '\n';
        out << "popcount: " << map.preserved_count() << '\n';
        if (report.contains("K")) {
            out << "K: " << report["K"].get<int>() << '\n';
        }
        if (report.contains("witness")) {
            const Json& w = report["witness"];
            out << "witness: " << w["pair"][0].get<std::string>() << " + " << w["pair"][1].get<std::string>()
                << " = " << w["missing_sum"].get<std::string>() << " (not preserved)\n";
        }
        if (report.contains("lambda_min")) {
            out << "lambda_min: " << format_number(report["lambda_min"].get<double>()) << '\n';
            out << "lambda_sum: " << format_number(report["lambda_sum"].get<double>()) << '\n';
        }
        if (report.contains("spectrum")) {
            out << "spectrum:\n";
            for (const auto& [label, value] : report["spectrum"].items()) {
                out << "  " << label << ' ' << format_number(value.get<double>()) << '\n';
            }
        }
        if (report.contains("oracle")) {
            const Json& o = report["oracle"];
            out << "oracle: " << (o["completely_positive"].get<bool>() ? "CP" : "not CP")
                << " (min eigenvalue " << format_number(o["min_eigenvalue"].get<double>()) << "), "
                << (o["agrees"].get<bool>() ? "agrees" : "DISAGREES") << '\n';
        }
    }
    return is_channel ? kExitOk : kExitDomainFailure;
}

// ---------------------------------------------------------------- census

int cmd_census(const GlobalOptions& g, int n, std::ostream& out) {
    try {
        check_qubit_count(n);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    const ChannelCensus c = census(n);
    const bool recount = n <= 3;
    bool matches = true;
    std::vector<BigInt> enumerated;
    if (recount) {
        for (int k = 0; k <= 2 * n; ++k) {
            SubspaceEnumerator it(n, k);
            BigInt count = 0;
            while (it.next()) {
                ++count;
            }
            matches = matches && count == c.per_dimension[k];
            enumerated.push_back(count);
        }
    }

    if (g.json()) {
        Json rows = Json::array();
        for (int k = 0; k <= 2 * n; ++k) {
            Json row = {{"K", k}, {"formula", c.per_dimension[k].str()}};
            if (recount) {
                row["enumerated"] = enumerated[k].str();
            }
            rows.push_back(std::move(row));
        }
        Json doc = {{"n", n}, {"rows", std::move(rows)}, {"total", c.total.str()}, {"symmetric", c.symmetric()}};
        if (recount) {
            doc["formula_matches_enumeration"] = matches;
        }
        print_json(out, doc);
    } else {
        std::vector<std::vector<std::string>> table;
        table.push_back({"K", "formula"});
        if (recount) {
            table[0].push_back("enumerated");
        }
        BigInt enumerated_total = 0;
        for (int k = 0; k <= 2 * n; ++k) {
            std::vector<std::string> row = {std::to_string(k), c.per_dimension[k].str()};
            if (recount) {
                row.push_back(enumerated[k].str());
                enumerated_total += enumerated[k];
            }
            table.push_back(std::move(row));
        }
        table.push_back({"total", c.total.str()});
        if (recount) {
            table.back().push_back(enumerated_total.str());
        }
        std::vector<std::size_t> widths(table[0].size(), 0);
        for (const auto& row : table) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                widths[i] = std::max(widths[i], row[i].size());
            }
        }
        for (const auto& row : table) {
            std::string line;
            for (std::size_t i = 0; i < row.size(); ++i) {
                line += (i ? "  " : "") + std::string(widths[i] - row[i].size(), ' ') + row[i];
            }
            out << line << '\n';
        }
        out << "symmetric: " << (c.symmetric() ? "yes" : "no") << '\n';
        if (recount) {
            out << "formula matches enumeration: " << (matches ? "yes" : "no") << '\n';
        }
    }
    return matches ? kExitOk : kExitDomainFailure;
}

// ---------------------------------------------------------------- diagram

int cmd_diagram(const std::string& input, const std::string& style, std::ostream& out) {
    const PceMap map = load(input, io::parse_channel);
    if (map.num_qubits() > kDiagramQubitLimit) {
        throw UsageError("diagrams are limited to " + std::to_string(kDiagramQubitLimit) +
                         " qubits; use `pce check --format json` or the JSON channel document instead");
    }
    out << (style == "svg" ? render_svg(map) : render_ascii(map));
    return kExitOk;
}

// ---------------------------------------------------------------- decompose

int cmd_decompose(const GlobalOptions& g, const std::string& input, std::ostream& out, std::ostream& err) {
    const PceMap map = load(input, io::parse_channel);
    if (!map.trace_preserving()) {
        err << "error: map is not trace preserving (component 0 is erased)\n";
        return kExitDomainFailure;
    }
    if (!map.subspace()) {
        err << "error: not a channel";
        if (auto v = find_closure_violation(map)) {
            err << "; witness: " << v->first.str() << " + " << v->second.str() << " = " << v->missing_sum.str()
                << " (not preserved)";
        }
        err << '\n';
        return kExitDomainFailure;
    }
    const Channel channel(*map.subspace());
    const std::vector<MultiIndex> labels = decompose(channel);
    const bool ok = recompose(channel.num_qubits(), labels) == channel;
    if (g.json()) {
        print_json(out, {{"n", channel.num_qubits()},
                         {"generators", label_strings(labels)},
                         {"recompose_check", ok ? "OK" : "FAILED"}});
    } else {
        out << "generators (" << labels.size() << "):";
        for (const MultiIndex& a : labels) {
            out << ' ' << a.str();
        }
        out << '\n' << "recompose check: " << (ok ? "OK" : "FAILED") << '\n';
    }
    return ok ? kExitOk : kExitDomainFailure;
}

// ---------------------------------------------------------------- evolve

ComplexMatrix load_state(const GlobalOptions& g, const std::string& path) {
    ComplexMatrix rho = load(path, io::parse_density_matrix);
    try {
        validate_density_matrix(rho, g.tol);
    } catch (const Error& e) {
        throw ParseError(path + ": " + e.what());
    }
    return rho;
}

int cmd_evolve(const GlobalOptions& g, const std::string& process_path, const std::string& state_path, double time,
               int steps, std::ostream& out) {
    if (!(time >= 0) || steps < 1) {
        throw UsageError("--time must be non-negative and --steps positive");
    }
    const DissipativeProcess process = load(process_path, io::parse_process);
    const ComplexMatrix rho = load_state(g, state_path);
    const int n = process.num_qubits();
    if (qubits_of(rho) != n) {
        throw UsageError("state has " + std::to_string(qubits_of(rho)) + " qubits but the process acts on " +
                         std::to_string(n));
    }
    const RealVector r0 = pauli_components(rho, g.tol);
    const RealVector fixed = apply_pce(process.fixed_point().map(), r0);

    std::vector<double> times;
    std::vector<RealVector> samples;
    for (int s = 0; s <= steps; ++s) {
        const double t = time * s / steps;
        times.push_back(t);
        samples.push_back(evolve_components(process, r0, t));
    }
    const double distance = (samples.back() - fixed).cwiseAbs().maxCoeff();

    if (g.json()) {
        Json rows = Json::array();
        for (std::size_t i = 0; i < samples.size(); ++i) {
            rows.push_back({{"t", io::round_significant(times[i])}, {"r", io::components_to_json(samples[i])}});
        }
        print_json(out, {{"process", io::process_to_json(process)},
                         {"samples", std::move(rows)},
                         {"fixed_point", io::components_to_json(fixed)},
                         {"fixed_point_distance", io::round_significant(distance)}});
    } else {
        const std::vector<MultiIndex> order = io::reading_order(n);
        out << 't';
        for (const MultiIndex& a : order) {
            out << ",r_" << a.str();
        }
        out << '\n';
        for (std::size_t i = 0; i < samples.size(); ++i) {
            out << format_number(times[i]);
            for (const MultiIndex& a : order) {
                out << ',' << format_number(samples[i](a.word()));
            }
            out << '\n';
        }
        out << "# fixed_point_distance=" << format_number(distance) << '\n';
    }
    return kExitOk;
}

// ---------------------------------------------------------------- collide

int cmd_collide(const GlobalOptions& g, const std::string& state_path, const std::string& schedule_text,
                std::ostream& out) {
    const ComplexMatrix rho = load_state(g, state_path);
    const int n = qubits_of(rho);
    CollisionSchedule schedule;
    std::stringstream stream(schedule_text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        MultiIndex a;
        try {
            a = MultiIndex::parse(item);
        } catch (const Error& e) {
            throw UsageError(std::string("--schedule: ") + e.what());
        }
        if (a.num_qubits() != n) {
            throw UsageError("--schedule label \"" + item + "\" does not have " + std::to_string(n) + " qubits");
        }
        schedule.labels.push_back(a);
    }
    if (schedule.labels.empty()) {
        throw UsageError("--schedule needs at least one label");
    }
    if (n + 1 > kDenseQubitLimit) {
        throw UsageError("collisions are limited to " + std::to_string(kDenseQubitLimit - 1) + " system qubits");
    }
    const ComplexMatrix final_state = collide(schedule, rho);
    const RealVector r = pauli_components(final_state, g.tol);
    if (g.json()) {
        print_json(out, {{"schedule", label_strings(schedule.labels)},
                         {"r", io::components_to_json(r)},
                         {"rho", io::density_matrix_to_json(final_state)}});
    } else {
        out << "index,r\n";
        for (const MultiIndex& a : io::reading_order(n)) {
            out << a.str() << ',' << format_number(r(a.word())) << '\n';
        }
    }
    return kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyTally {
    std::uint64_t checked = 0;
    std::uint64_t completely_positive = 0;
    std::uint64_t disagreements = 0;
};

void tally(const ChoiBuilder& builder, const PceMap& map, double tol, VerifyTally& t) {
    const bool criterion = is_completely_positive(map);
    const bool oracle = hermitian_eigenvalues(builder.build(map), tol).minCoeff() >= -tol;
    ++t.checked;
    t.completely_positive += criterion ? 1 : 0;
    t.disagreements += criterion != oracle ? 1 : 0;
}

int cmd_verify(const GlobalOptions& g, int n, bool exhaustive, std::optional<std::uint64_t> samples,
               std::ostream& out) {
    if (exhaustive == samples.has_value()) {
        throw UsageError("verify needs exactly one of --exhaustive or --samples");
    }
    if (n < 1 || (exhaustive && n > 2) || n > kChoiDenseQubitLimit) {
        throw UsageError("verify supports --exhaustive for n <= 2 and --samples for n <= " +
                         std::to_string(kChoiDenseQubitLimit));
    }
    const ChoiBuilder builder(n);
    VerifyTally t;
    const std::uint32_t size = static_cast<std::uint32_t>(index_space_size(n));
    if (exhaustive) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (size - 1)); ++mask) {
            TauBitset tau(size, (mask << 1) | 1);
            tally(builder, PceMap::from_tau(n, std::move(tau)), g.tol, t);
        }
    } else {
        Rng rng(g.seed);
        for (std::uint64_t i = 0; i < *samples; ++i) {
            tally(builder, random_oracle_map(n, rng), g.tol, t);
        }
    }
    if (g.json()) {
        print_json(out, {{"n", n},
                         {"mode", exhaustive ? "exhaustive" : "samples"},
                         {"maps_checked", t.checked},
                         {"completely_positive", t.completely_positive},
                         {"disagreements", t.disagreements}});
    } else {
        out << "maps checked: " << t.checked << '\n';
        out << "completely positive: " << t.completely_positive << '\n';
        out << "disagreements: " << t.disagreements << '\n';
    }
    return t.disagreements == 0 ? kExitOk : kExitDomainFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pauli-component-erasing channels: validate, enumerate, decompose, render and simulate", "pce"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", g.seed, "Random seed");
    app.add_option("--tol", g.tol, "Eigenvalue tolerance")->check(CLI::PositiveNumber);

    std::string input;
    std::string state;
    int n = 0;

    auto* check = app.add_subcommand("check", "Validate a channel document");
    check->add_option("input", input, "Channel JSON ('-' for stdin)")->required();

    auto* census_cmd = app.add_subcommand("census", "Count channels per preserved-subspace dimension");
    census_cmd->add_option("n", n, "Number of qubits")->required();

    std::string style = "ascii";
    auto* diagram = app.add_subcommand("diagram", "Render the grid diagram of a map");
    diagram->add_option("input", input, "Channel JSON ('-' for stdin)")->required();
    diagram->add_option("--style", style, "Rendering")->check(CLI::IsMember({"ascii", "svg"}));

    auto* decompose_cmd = app.add_subcommand("decompose", "Decompose a channel into generators");
    decompose_cmd->add_option("input", input, "Channel JSON ('-' for stdin)")->required();

    std::string process;
    double time = 0;
    int steps = 10;
    auto* evolve_cmd = app.add_subcommand("evolve", "Sample the Pauli components of a dissipative evolution");
    evolve_cmd->add_option("process", process, "Process JSON")->required();
    evolve_cmd->add_option("state", state, "Density matrix JSON")->required();
    evolve_cmd->add_option("--time", time, "Final time")->required();
    evolve_cmd->add_option("--steps", steps, "Number of sampling intervals");

    std::string schedule;
    auto* collide_cmd = app.add_subcommand("collide", "Apply a sequence of ancilla collisions");
    collide_cmd->add_option("state", state, "Density matrix JSON")->required();
    collide_cmd->add_option("--schedule", schedule, "Comma-separated generator labels, e.g. 03,33")->required();

    bool exhaustive = false;
    std::uint64_t sample_count = 0;
    auto* verify = app.add_subcommand("verify", "Cross-check the subspace criterion against the dense Choi oracle");
    verify->add_option("n", n, "Number of qubits")->required();
    verify->add_flag("--exhaustive", exhaustive, "Check every trace-preserving map");
    auto* samples_opt = verify->add_option("--samples", sample_count, "Number of seeded random maps");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*check) {
            return cmd_check(g, input, out);
        }
        if (*census_cmd) {
            return cmd_census(g, n, out);
        }
        if (*diagram) {
            return cmd_diagram(input, style, out);
        }
        if (*decompose_cmd) {
            return cmd_decompose(g, input, out, err);
        }
        if (*evolve_cmd) {
            return cmd_evolve(g, process, state, time, steps, out);
        }
        if (*collide_cmd) {
            return cmd_collide(g, state, schedule, out);
        }
        std::optional<std::uint64_t> samples;
        if (samples_opt->count() > 0) {
            samples = sample_count;
        }
        return cmd_verify(g, n, exhaustive, samples, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomainFailure;
    }
}

}  // namespace pce
