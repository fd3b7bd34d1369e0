/*
 * Copyright 2026 The qdist authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// qdist: compute state distinguishability measures, verify the trace
// distance bounds on random corpora, emit figure data, and search for
// triangle-inequality counterexamples.
//
// Exit codes: 0 success / no violation, 1 violation or counterexample
// found, 2 usage error, 3 input-data error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qdist/format.hpp"
#include "qdist/measures.hpp"
#include "qdist/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInputData = 3;

std::vector<std::size_t> parse_dims(const std::string& spec) {
    std::vector<std::size_t> dims;
    const auto range_pos = spec.find("..");
    try {
        if (range_pos != std::string::npos) {
            const long lo = std::stol(spec.substr(0, range_pos));
            const long hi = std::stol(spec.substr(range_pos + 2));
            if (lo < 1 || hi < lo) throw qdist::Error("InvalidSpec", "bad dim range " + spec);
            for (long n = lo; n <= hi; ++n) dims.push_back(static_cast<std::size_t>(n));
        } else {
            std::istringstream in(spec);
            std::string token;
            while (std::getline(in, token, ',')) {
                const long n = std::stol(token);
                if (n < 1) throw qdist::Error("InvalidSpec", "bad dim " + token);
                dims.push_back(static_cast<std::size_t>(n));
            }
        }
    } catch (const std::logic_error&) {
        throw qdist::Error("InvalidSpec", "cannot parse dims '" + spec + "'");
    }
    if (dims.empty()) throw qdist::Error("InvalidSpec", "empty dims list");
    return dims;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw qdist::Error("OutputError", "cannot write " + out_path);
    out << text;
}

std::string measure_document(const qdist::MeasureSet& m, const std::string& format) {
    using qdist::format_double;
    std::ostringstream out;
    if (format == "csv") {
        out << "d_tr,fidelity,sqrt_fidelity,superfidelity,bures,d_g,d_b_prime,p_error\n";
        out << format_double(m.d_tr) << "," << format_double(m.fidelity) << ","
            << format_double(m.sqrt_fidelity) << "," << format_double(m.superfidelity) << ","
            << format_double(m.bures) << "," << format_double(m.d_g) << ","
            << format_double(m.d_b_prime) << "," << format_double(m.p_error) << "\n";
    } else {
        out << "{\n";
        out << "  \"d_tr\": " << format_double(m.d_tr) << ",\n";
        out << "  \"fidelity\": " << format_double(m.fidelity) << ",\n";
        out << "  \"sqrt_fidelity\": " << format_double(m.sqrt_fidelity) << ",\n";
        out << "  \"superfidelity\": " << format_double(m.superfidelity) << ",\n";
        out << "  \"bures\": " << format_double(m.bures) << ",\n";
        out << "  \"d_g\": " << format_double(m.d_g) << ",\n";
        out << "  \"d_b_prime\": " << format_double(m.d_b_prime) << ",\n";
        out << "  \"p_error\": " << format_double(m.p_error) << "\n";
        out << "}\n";
    }
    return out.str();
}

struct Options {
    std::string file_a;
    std::string file_b;
    std::string dims_spec;
    std::uint64_t samples = 1000;
    std::uint64_t seed = 0;
    double tolerance = 1e-9;
    std::size_t grid = 101;
    int figure_id = 0;
    std::string metric;
    std::size_t dim = 3;
    std::uint64_t triples = 10000;
    std::string out_path;
    std::string format = "json";
};

int run_measure(const Options& opt) {
    qdist::MeasureSet m;
    try {
        const qdist::DensityMatrix a = qdist::load_state_file(opt.file_a);
        const qdist::DensityMatrix b = qdist::load_state_file(opt.file_b);
        m = qdist::measure_all(a, b);
    } catch (const qdist::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputData;
    }
    write_output(measure_document(m, opt.format), opt.out_path);
    return kExitOk;
}

int run_verify(const Options& opt) {
    const std::vector<std::size_t> dims = parse_dims(opt.dims_spec.empty() ? "2..8" : opt.dims_spec);
    const std::vector<qdist::RankClass> ranks = {qdist::RankClass::kOne, qdist::RankClass::kHalf,
                                                 qdist::RankClass::kFull};
    const qdist::VerificationSummary summary = qdist::run_random_verification(
        dims, opt.samples, ranks, {opt.seed, 0}, opt.tolerance);
    write_output(qdist::summary_to_text(summary), opt.out_path);
    return summary.violations.empty() ? kExitOk : kExitViolation;
}

int run_properties(const Options& opt) {
    const qdist::VerificationSummary summary =
        qdist::run_property_checks(opt.samples, {opt.seed, 0}, opt.tolerance);
    write_output(qdist::summary_to_text(summary), opt.out_path);
    return summary.violations.empty() ? kExitOk : kExitViolation;
}

int run_figure(const Options& opt) {
    std::vector<std::size_t> dims;
    if (opt.figure_id == 1) dims = parse_dims(opt.dims_spec.empty() ? "2..32" : opt.dims_spec);
    const qdist::FigureTable table = qdist::figure_grid(opt.figure_id, opt.grid, dims);
    write_output(qdist::figure_csv(table), opt.out_path);
    return kExitOk;
}

int run_search(const Options& opt) {
    const qdist::TriangleSearchResult result = qdist::search_triangle_violation(
        opt.metric, opt.dim, opt.triples, {opt.seed, 0}, opt.tolerance);
    write_output(qdist::search_result_to_text(result), opt.out_path);
    return result.counterexample ? kExitViolation : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum state distinguishability measures and bound verification"};
    app.require_subcommand(1);

    Options opt;

    CLI::App* measure = app.add_subcommand("measure", "measures for a pair of state files");
    measure->add_option("--a", opt.file_a, "first state file")->required();
    measure->add_option("--b", opt.file_b, "second state file")->required();
    measure->add_option("--format", opt.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    measure->add_option("--out", opt.out_path, "output path (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "random-pair inequality verification");
    verify->add_option("--dims", opt.dims_spec, "dims, comma list or a..b (default 2..8)");
    verify->add_option("--samples", opt.samples, "pairs per dim")->check(CLI::PositiveNumber);
    verify->add_option("--seed", opt.seed, "rng seed");
    verify->add_option("--tolerance", opt.tolerance, "violation tolerance (default 1e-9)");
    verify->add_option("--out", opt.out_path, "output path (default stdout)");

    CLI::App* properties = app.add_subcommand("properties", "superfidelity property checks");
    properties->add_option("--samples", opt.samples, "sampled instances")
        ->check(CLI::PositiveNumber);
    properties->add_option("--seed", opt.seed, "rng seed");
    properties->add_option("--tolerance", opt.tolerance, "violation tolerance (default 1e-9)");
    properties->add_option("--out", opt.out_path, "output path (default stdout)");

    CLI::App* figure = app.add_subcommand("figure", "figure data grid as CSV");
    figure->add_option("--id", opt.figure_id, "figure id (1, 2 or 3)")
        ->required()
        ->check(CLI::Range(1, 3));
    figure->add_option("--grid", opt.grid, "grid points per parameter axis (default 101)")
        ->check(CLI::Range(2, 100000));
    figure->add_option("--dims", opt.dims_spec, "dims for figure 1 (default 2..32)");
    figure->add_option("--out", opt.out_path, "output path (default stdout)");

    CLI::App* search = app.add_subcommand("search", "triangle-inequality counterexample search");
    search->add_option("--metric", opt.metric, "d_b_prime|d_g|bures")
        ->required()
        ->check(CLI::IsMember({"d_b_prime", "d_g", "bures"}));
    search->add_option("--dim", opt.dim, "state dimension (default 3)")
        ->check(CLI::Range(2, 64));
    search->add_option("--triples", opt.triples, "number of random triples")
        ->check(CLI::PositiveNumber);
    search->add_option("--seed", opt.seed, "rng seed");
    search->add_option("--tolerance", opt.tolerance, "violation tolerance (default 1e-9)");
    search->add_option("--out", opt.out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() != 0) std::cerr << "usage error: " << e.what() << "\n";
        else std::cout << app.help();
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (measure->parsed()) return run_measure(opt);
        if (verify->parsed()) return run_verify(opt);
        if (properties->parsed()) return run_properties(opt);
        if (figure->parsed()) return run_figure(opt);
        if (search->parsed()) return run_search(opt);
    } catch (const qdist::Error& e) {
        // Bad flag values surface as usage errors; everything here has
        // already passed file loading.
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
