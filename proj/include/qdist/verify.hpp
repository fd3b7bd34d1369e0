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

#ifndef QDIST_VERIFY_HPP
#define QDIST_VERIFY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qdist/measures.hpp"

namespace qdist {

/// All measures plus the signed slack of every inequality for one state
/// pair. Each slack is "amount by which the inequality holds": negative
/// beyond tolerance means a violation.
struct BoundReport {
    MeasureSet measures;
    double slack_fvg_lower = 0.0;   // D_tr - (1 - sqrt(F))
    double slack_fvg_upper = 0.0;   // sqrt(1 - F) - D_tr
    double slack_main = 0.0;        // D_tr - (1 - G)
    double slack_equivalent = 0.0;  // D_tr + tr(ab) + sqrt(1-tr a^2)sqrt(1-tr b^2) - 1
    double slack_weak = 0.0;        // D_tr - (1 - sqrt(G))
    double slack_fg = 0.0;          // G - F
    std::array<double, 4> slack_lemma = {0.0, 0.0, 0.0, 0.0};
    double projector_consistency = 0.0;  // |direct D_tr - projector-form D_tr|
    double diff_g_sqrtf = 0.0;           // G - sqrt(F)
    double slack_half_g_pe = 0.0;        // G/2 - P_E
};

BoundReport evaluate_pair(const DensityMatrix& a, const DensityMatrix& b);

struct Violation {
    std::string pair_id;
    std::string check;
    double slack = 0.0;
};

struct VerificationSummary {
    std::uint64_t total_pairs = 0;
    std::vector<Violation> violations;          // sorted by sample order
    std::map<std::string, double> min_slack;    // per check name
    std::vector<std::string> warnings;          // near-violation band [-tol, 1e-7]
    RngSpec rng;
};

/// Rank classes resolved per dimension.
enum class RankClass { kOne, kHalf, kFull };

/// Batch verification of every pairwise inequality over seeded random
/// pairs, ranks crossed over the given classes. Deterministic for a fixed
/// RngSpec: sample i of each dim's batch uses sub-streams 2i and 2i+1 of a
/// per-dim base stream.
VerificationSummary run_random_verification(const std::vector<std::size_t>& dims,
                                            std::uint64_t samples_per_dim,
                                            const std::vector<RankClass>& ranks, RngSpec rng,
                                            double tol = 1e-9);

/// Superfidelity property checks (bounds, symmetry, unitary invariance,
/// concavity, joint concavity, supermultiplicativity on 2x2 tensor factors).
VerificationSummary run_property_checks(std::uint64_t samples, RngSpec rng, double tol = 1e-9);

struct CounterexampleRecord {
    std::string metric;
    double violation = 0.0;  // d(a,c) - d(a,b) - d(b,c), > tolerance
    std::uint64_t triple_index = 0;
    RngSpec rng;
    std::vector<DensityMatrix> states;  // a, b, c in violation order
};

struct TriangleSearchResult {
    std::string metric;
    std::size_t dim = 0;
    std::uint64_t triples = 0;
    double min_slack = 0.0;  // min over triples of d(a,b)+d(b,c)-d(a,c) orientations
    std::optional<CounterexampleRecord> counterexample;
};

/// Triangle-inequality search over random triples for one of
/// {d_b_prime, d_g, bures}. The biased mode (default, used for d_b_prime)
/// seeds part of the corpus near rank-deficient mixtures.
TriangleSearchResult search_triangle_violation(const std::string& metric, std::size_t dim,
                                               std::uint64_t triples, RngSpec rng,
                                               double tol = 1e-9, bool biased = true);

struct FigureRow {
    double p0 = 0.0;
    double p1 = 0.0;
    double d_tr = 0.0;
    double fidelity = 0.0;
    double superfidelity = 0.0;
    double diff = 0.0;  // G - sqrt(F)
    int sign = 0;
};

struct FigureTable {
    int figure_id = 0;
    std::array<std::string, 2> axis_names;
    std::vector<double> axis0;
    std::vector<double> axis1;
    std::vector<FigureRow> rows;  // row-major over (axis0, axis1)
};

/// Figure data grids:
///   1: rho_alpha(N) vs 1/N over (N, alpha), dims default {2..32}
///   2: rho_alpha(8) vs sigma_beta over (alpha, beta)
///   3: rho_alpha(8) vs tau_gamma over (alpha, gamma)
FigureTable figure_grid(int figure_id, std::size_t grid_points,
                        const std::vector<std::size_t>& dims = {});

/// CSV, comma separated, LF endings, 17-significant-digit numerics, sign
/// column for figure 3 only.
std::string figure_csv(const FigureTable& table);

std::string summary_to_text(const VerificationSummary& summary);
std::string search_result_to_text(const TriangleSearchResult& result);
std::string counterexample_to_text(const CounterexampleRecord& record);
CounterexampleRecord counterexample_from_text(const std::string& text);

}  // namespace qdist

#endif  // QDIST_VERIFY_HPP
