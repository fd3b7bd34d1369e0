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

#include "qdist/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "qdist/format.hpp"

namespace qdist {

namespace {

constexpr double kProjectorTol = 1e-12;

/// Re tr(A B C).
double real_trace_product(const ComplexMatrix& a, const ComplexMatrix& b,
                          const ComplexMatrix& c) {
    const ComplexMatrix ab = a * b;
    const std::size_t n = a.dim();
    Complex t = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t += ab(i, j) * c(j, i);
    return t.real();
}

std::size_t resolve_rank(RankClass rc, std::size_t n) {
    switch (rc) {
        case RankClass::kOne: return 1;
        case RankClass::kHalf: return (n + 1) / 2;
        case RankClass::kFull: return n;
    }
    return n;
}

void track(VerificationSummary& summary, const std::string& pair_id, const std::string& check,
           double slack, double tol) {
    auto [it, inserted] = summary.min_slack.try_emplace(check, slack);
    if (!inserted && slack < it->second) it->second = slack;
    if (slack < -tol) summary.violations.push_back({pair_id, check, slack});
}

void collect_warnings(VerificationSummary& summary, double tol) {
    for (const auto& [check, slack] : summary.min_slack) {
        if (slack >= -tol && slack <= 1e-7) {
            summary.warnings.push_back("near-violation band: " + check + " min slack " +
                                       format_double(slack));
        }
    }
}

std::vector<double> linspace01(std::size_t points) {
    if (points < 2) throw Error("InvalidSpec", "grid needs at least 2 points");
    std::vector<double> out(points);
    for (std::size_t k = 0; k < points; ++k)
        out[k] = static_cast<double>(k) / static_cast<double>(points - 1);
    return out;
}

DensityMatrix mix(const DensityMatrix& a, const DensityMatrix& b, double alpha) {
    ComplexMatrix m = Complex(alpha, 0.0) * a.matrix();
    m += Complex(1.0 - alpha, 0.0) * b.matrix();
    return DensityMatrix::from_matrix(std::move(m));
}

DensityMatrix conjugate(const ComplexMatrix& u, const DensityMatrix& rho) {
    return DensityMatrix::from_matrix(u * rho.matrix() * u.adjoint());
}

void emit_state_object(std::ostringstream& out, const DensityMatrix& rho) {
    std::string text = state_to_text(rho);
    if (!text.empty() && text.back() == '\n') text.pop_back();
    out << text;
}

void emit_rng(std::ostringstream& out, RngSpec rng) {
    out << "{\"seed\": " << rng.seed << ", \"stream\": " << rng.stream << "}";
}

}  // namespace

BoundReport evaluate_pair(const DensityMatrix& a, const DensityMatrix& b) {
    BoundReport r;
    r.measures = measure_all(a, b);
    const MeasureSet& m = r.measures;

    r.slack_fvg_lower = m.d_tr - (1.0 - m.sqrt_fidelity);
    r.slack_fvg_upper = std::sqrt(std::max(0.0, 1.0 - m.fidelity)) - m.d_tr;
    r.slack_main = m.d_tr - (1.0 - m.superfidelity);
    r.slack_weak = m.d_tr - (1.0 - std::sqrt(std::max(0.0, m.superfidelity)));
    r.slack_fg = m.superfidelity - m.fidelity;
    r.diff_g_sqrtf = m.superfidelity - m.sqrt_fidelity;
    r.slack_half_g_pe = 0.5 * m.superfidelity - m.p_error;

    // Equivalent form of the main bound, assembled from the raw traces.
    const double overlap = hs_inner(a.matrix(), b.matrix());
    const double ga = std::sqrt(std::max(0.0, 1.0 - purity(a)));
    const double gb = std::sqrt(std::max(0.0, 1.0 - purity(b)));
    r.slack_equivalent = m.d_tr + overlap + ga * gb - 1.0;

    r.projector_consistency = std::fabs(m.d_tr - trace_distance_projector_form(a, b));

    const auto [plus, minus] = split_projectors(a.matrix() - b.matrix(), kProjectorTol);
    const ComplexMatrix one_minus_a = ComplexMatrix::identity(a.dim()) - a.matrix();
    const ComplexMatrix one_minus_b = ComplexMatrix::identity(a.dim()) - b.matrix();
    const ComplexMatrix diff = a.matrix() - b.matrix();
    r.slack_lemma[0] = real_trace_product(plus, one_minus_a, diff);
    r.slack_lemma[1] = -real_trace_product(minus, a.matrix(), diff);
    r.slack_lemma[2] = real_trace_product(plus, diff, b.matrix());
    r.slack_lemma[3] = -real_trace_product(minus, diff, one_minus_b);
    return r;
}

VerificationSummary run_random_verification(const std::vector<std::size_t>& dims,
                                            std::uint64_t samples_per_dim,
                                            const std::vector<RankClass>& ranks, RngSpec rng,
                                            double tol) {
    if (dims.empty()) throw Error("InvalidSpec", "dims list must not be empty");
    if (samples_per_dim < 1) throw Error("InvalidSpec", "samples must be >= 1");
    if (ranks.empty()) throw Error("InvalidSpec", "rank list must not be empty");
    for (std::size_t n : dims)
        if (n < 2) throw Error("InvalidSpec", "dims must be >= 2");

    VerificationSummary summary;
    summary.rng = rng;
    const std::size_t nranks = ranks.size();

    for (std::size_t di = 0; di < dims.size(); ++di) {
        const std::size_t n = dims[di];
        const std::uint64_t base = static_cast<std::uint64_t>(di) * 2 * samples_per_dim;
        for (std::uint64_t i = 0; i < samples_per_dim; ++i) {
            const std::size_t rank_a = resolve_rank(ranks[i % nranks], n);
            const std::size_t rank_b = resolve_rank(ranks[(i / nranks) % nranks], n);
            const DensityMatrix a = random_density(n, rank_a, rng.sub(base + 2 * i));
            const DensityMatrix b = random_density(n, rank_b, rng.sub(base + 2 * i + 1));
            const BoundReport r = evaluate_pair(a, b);

            const std::string id = "dim=" + std::to_string(n) + ",sample=" + std::to_string(i);
            track(summary, id, "main_bound", r.slack_main, tol);
            track(summary, id, "equivalent_form", r.slack_equivalent, tol);
            track(summary, id, "fvg_lower", r.slack_fvg_lower, tol);
            track(summary, id, "fvg_upper", r.slack_fvg_upper, tol);
            track(summary, id, "weak_bound", r.slack_weak, tol);
            track(summary, id, "weak_ge_main", r.slack_weak - r.slack_main, tol);
            track(summary, id, "f_le_g", r.slack_fg, tol);
            for (int k = 0; k < 4; ++k)
                track(summary, id, "lemma_" + std::to_string(k + 1), r.slack_lemma[k], tol);
            track(summary, id, "projector_consistency", -r.projector_consistency, tol);
            track(summary, id, "half_g_pe", r.slack_half_g_pe, tol);
            ++summary.total_pairs;
        }
    }
    collect_warnings(summary, tol);
    return summary;
}

VerificationSummary run_property_checks(std::uint64_t samples, RngSpec rng, double tol) {
    if (samples < 1) throw Error("InvalidSpec", "samples must be >= 1");

    VerificationSummary summary;
    summary.rng = rng;

    constexpr std::size_t kDim = 4;
    constexpr std::uint64_t kStride = 16;

    for (std::uint64_t i = 0; i < samples; ++i) {
        const std::uint64_t base = kStride * i;
        const std::size_t ra = 1 + (i % kDim);
        const std::size_t rb = 1 + ((i + 1) % kDim);
        const std::size_t rc = 1 + ((i + 2) % kDim);
        const DensityMatrix a = random_density(kDim, ra, rng.sub(base));
        const DensityMatrix b = random_density(kDim, rb, rng.sub(base + 1));
        const DensityMatrix c = random_density(kDim, rc, rng.sub(base + 2));

        const std::string id = "sample=" + std::to_string(i);
        const double g_ab = superfidelity(a, b);
        track(summary, id, "g_lower", g_ab, tol);
        track(summary, id, "g_upper", 1.0 - g_ab, tol);
        track(summary, id, "g_symmetry", -std::fabs(g_ab - superfidelity(b, a)), tol);

        const ComplexMatrix u = random_unitary(kDim, rng.sub(base + 3));
        const double g_conj = superfidelity(conjugate(u, a), conjugate(u, b));
        track(summary, id, "unitary_invariance", -std::fabs(g_ab - g_conj), tol);

        GaussianStream alpha_stream(rng.sub(base + 4));
        const double alpha = alpha_stream.next_uniform();
        const double g_mix = superfidelity(a, mix(b, c, alpha));
        const double g_ac = superfidelity(a, c);
        track(summary, id, "concavity", g_mix - (alpha * g_ab + (1.0 - alpha) * g_ac), tol);

        const DensityMatrix ap = random_density(kDim, rb, rng.sub(base + 5));
        const DensityMatrix bp = random_density(kDim, rc, rng.sub(base + 6));
        const double g_joint = superfidelity(mix(a, b, alpha), mix(ap, bp, alpha));
        const double rhs = alpha * superfidelity(a, ap) + (1.0 - alpha) * superfidelity(b, bp);
        track(summary, id, "joint_concavity", g_joint - rhs, tol);

        const DensityMatrix q1 = random_density(2, 1 + (i % 2), rng.sub(base + 7));
        const DensityMatrix q2 = random_density(2, 1 + ((i + 1) % 2), rng.sub(base + 8));
        const DensityMatrix q3 = random_density(2, 2, rng.sub(base + 9));
        const DensityMatrix q4 = random_density(2, 2, rng.sub(base + 10));
        const double g_tensor = superfidelity(tensor(q1, q2), tensor(q3, q4));
        track(summary, id, "supermultiplicativity",
              g_tensor - superfidelity(q1, q3) * superfidelity(q2, q4), tol);

        ++summary.total_pairs;
    }
    collect_warnings(summary, tol);
    return summary;
}

TriangleSearchResult search_triangle_violation(const std::string& metric, std::size_t dim,
                                               std::uint64_t triples, RngSpec rng, double tol,
                                               bool biased) {
    double (*fn)(const DensityMatrix&, const DensityMatrix&) = nullptr;
    if (metric == "d_b_prime")
        fn = d_b_prime;
    else if (metric == "d_g")
        fn = d_g;
    else if (metric == "bures")
        fn = bures_distance;
    else
        throw Error("InvalidSpec", "unknown metric '" + metric + "'");
    if (triples < 1) throw Error("InvalidSpec", "triples must be >= 1");
    if (dim < 2) throw Error("InvalidSpec", "dim must be >= 2");

    TriangleSearchResult result;
    result.metric = metric;
    result.dim = dim;
    result.triples = triples;
    result.min_slack = std::numeric_limits<double>::infinity();

    const std::size_t rank_cycle[3] = {dim, 1, (dim + 1) / 2};

    for (std::uint64_t i = 0; i < triples; ++i) {
        const std::uint64_t base = 4 * i;
        const DensityMatrix a = random_density(dim, rank_cycle[i % 3], rng.sub(base));
        DensityMatrix b = random_density(dim, rank_cycle[(i + 1) % 3], rng.sub(base + 1));
        const DensityMatrix c = random_density(dim, rank_cycle[(i + 2) % 3], rng.sub(base + 2));
        if (biased && i % 2 == 1) {
            // Seed the middle state near a rank-deficient mixture, where
            // the gap between G and F is largest.
            GaussianStream bias(rng.sub(base + 3));
            const double eps = 0.01 + 0.1 * bias.next_uniform();
            b = mix(random_density(dim, 1, rng.sub(base + 3)), maximally_mixed(dim), 1.0 - eps);
        }

        const double dab = fn(a, b);
        const double dbc = fn(b, c);
        const double dac = fn(a, c);
        struct Orientation {
            double slack;
            const DensityMatrix *x, *y, *z;  // d(x,z) <= d(x,y) + d(y,z)
        };
        const Orientation orientations[3] = {
            {dab + dbc - dac, &a, &b, &c},
            {dac + dbc - dab, &a, &c, &b},
            {dab + dac - dbc, &b, &a, &c},
        };
        for (const Orientation& o : orientations) {
            if (o.slack < result.min_slack) {
                result.min_slack = o.slack;
                if (o.slack < -tol) {
                    CounterexampleRecord rec;
                    rec.metric = metric;
                    rec.violation = -o.slack;
                    rec.triple_index = i;
                    rec.rng = rng;
                    rec.states = {*o.x, *o.y, *o.z};
                    result.counterexample = std::move(rec);
                }
            }
        }
    }
    return result;
}

FigureTable figure_grid(int figure_id, std::size_t grid_points,
                        const std::vector<std::size_t>& dims) {
    FigureTable table;
    table.figure_id = figure_id;
    const std::vector<double> grid = linspace01(grid_points);

    auto add_row = [&table](double p0, double p1, const DensityMatrix& a,
                            const DensityMatrix& b) {
        FigureRow row;
        row.p0 = p0;
        row.p1 = p1;
        row.d_tr = trace_distance(a, b);
        row.fidelity = fidelity(a, b);
        row.superfidelity = superfidelity(a, b);
        row.diff = row.superfidelity - std::sqrt(std::max(0.0, row.fidelity));
        row.sign = (row.diff > 0.0) - (row.diff < 0.0);
        table.rows.push_back(row);
    };

    switch (figure_id) {
        case 1: {
            std::vector<std::size_t> ns = dims;
            if (ns.empty())
                for (std::size_t n = 2; n <= 32; ++n) ns.push_back(n);
            for (std::size_t n : ns) {
                if (n < 2) throw Error("InvalidSpec", "figure 1 requires dims >= 2");
                table.axis0.push_back(static_cast<double>(n));
            }
            table.axis_names = {"N", "alpha"};
            table.axis1 = grid;
            for (std::size_t n : ns) {
                const DensityMatrix mixed = maximally_mixed(n);
                for (double alpha : grid)
                    add_row(static_cast<double>(n), alpha, family_rho_alpha(alpha, n), mixed);
            }
            break;
        }
        case 2: {
            table.axis_names = {"alpha", "beta"};
            table.axis0 = grid;
            table.axis1 = grid;
            for (double alpha : grid) {
                const DensityMatrix rho = family_rho_alpha(alpha, 8);
                for (double beta : grid) add_row(alpha, beta, rho, family_sigma_beta(beta));
            }
            break;
        }
        case 3: {
            table.axis_names = {"alpha", "gamma"};
            table.axis0 = grid;
            table.axis1 = grid;
            for (double alpha : grid) {
                const DensityMatrix rho = family_rho_alpha(alpha, 8);
                for (double gamma : grid) add_row(alpha, gamma, rho, family_tau_gamma(gamma));
            }
            break;
        }
        default:
            throw Error("InvalidSpec", "figure id must be 1, 2 or 3");
    }
    return table;
}

std::string figure_csv(const FigureTable& table) {
    std::ostringstream out;
    out << table.axis_names[0] << "," << table.axis_names[1]
        << ",d_tr,fidelity,superfidelity,diff";
    if (table.figure_id == 3) out << ",sign";
    out << "\n";
    for (const FigureRow& row : table.rows) {
        if (table.figure_id == 1)
            out << static_cast<long long>(row.p0);
        else
            out << format_double(row.p0);
        out << "," << format_double(row.p1) << "," << format_double(row.d_tr) << ","
            << format_double(row.fidelity) << "," << format_double(row.superfidelity) << ","
            << format_double(row.diff);
        if (table.figure_id == 3) out << "," << row.sign;
        out << "\n";
    }
    return out.str();
}

std::string summary_to_text(const VerificationSummary& summary) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"total_pairs\": " << summary.total_pairs << ",\n";
    out << "  \"rng\": ";
    emit_rng(out, summary.rng);
    out << ",\n";
    out << "  \"min_slack\": {";
    bool first = true;
    for (const auto& [check, slack] : summary.min_slack) {
        if (!first) out << ", ";
        first = false;
        out << "\"" << check << "\": " << format_double(slack);
    }
    out << "},\n";
    out << "  \"warnings\": [";
    first = true;
    for (const std::string& w : summary.warnings) {
        if (!first) out << ", ";
        first = false;
        out << "\"" << w << "\"";
    }
    out << "],\n";
    out << "  \"violations\": [";
    first = true;
    for (const Violation& v : summary.violations) {
        if (!first) out << ", ";
        first = false;
        out << "{\"pair\": \"" << v.pair_id << "\", \"check\": \"" << v.check
            << "\", \"slack\": " << format_double(v.slack) << "}";
    }
    out << "]\n}\n";
    return out.str();
}

std::string counterexample_to_text(const CounterexampleRecord& record) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"metric\": \"" << record.metric << "\",\n";
    out << "  \"violation\": " << format_double(record.violation) << ",\n";
    out << "  \"triple_index\": " << record.triple_index << ",\n";
    out << "  \"rng\": ";
    emit_rng(out, record.rng);
    out << ",\n";
    out << "  \"states\": [\n";
    for (std::size_t k = 0; k < record.states.size(); ++k) {
        out << "    ";
        emit_state_object(out, record.states[k]);
        if (k + 1 < record.states.size()) out << ",";
        out << "\n";
    }
    out << "  ]\n}\n";
    return out.str();
}

CounterexampleRecord counterexample_from_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error("BadRecord", std::string("parse error: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("metric") || !doc.contains("violation") ||
        !doc.contains("states") || !doc["states"].is_array() || doc["states"].size() != 3)
        throw Error("BadRecord", "expected metric, violation and three states");
    CounterexampleRecord rec;
    rec.metric = doc["metric"].get<std::string>();
    rec.violation = doc["violation"].get<double>();
    rec.triple_index = doc.value("triple_index", std::uint64_t{0});
    if (doc.contains("rng") && doc["rng"].is_object()) {
        rec.rng.seed = doc["rng"].value("seed", std::uint64_t{0});
        rec.rng.stream = doc["rng"].value("stream", std::uint64_t{0});
    }
    for (const auto& state : doc["states"]) rec.states.push_back(state_from_text(state.dump()));
    return rec;
}

std::string search_result_to_text(const TriangleSearchResult& result) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"metric\": \"" << result.metric << "\",\n";
    out << "  \"dim\": " << result.dim << ",\n";
    out << "  \"triples\": " << result.triples << ",\n";
    out << "  \"min_slack\": " << format_double(result.min_slack) << ",\n";
    out << "  \"found_violation\": " << (result.counterexample ? "true" : "false") << ",\n";
    out << "  \"exit_semantics\": \"exit 1 means a counterexample was found\",\n";
    out << "  \"counterexample\": ";
    if (result.counterexample) {
        std::string rec = counterexample_to_text(*result.counterexample);
        if (!rec.empty() && rec.back() == '\n') rec.pop_back();
        out << rec;
    } else {
        out << "null";
    }
    out << "\n}\n";
    return out.str();
}

}  // namespace qdist
