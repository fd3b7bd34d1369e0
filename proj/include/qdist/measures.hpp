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

#ifndef QDIST_MEASURES_HPP
#define QDIST_MEASURES_HPP

#include "qdist/states.hpp"

namespace qdist {

/// Every distinguishability measure for one state pair. Raw values are
/// reported without clamping to [0, 1]; callers tolerance-check instead.
struct MeasureSet {
    double d_tr = 0.0;
    double fidelity = 0.0;
    double sqrt_fidelity = 0.0;
    double superfidelity = 0.0;
    double bures = 0.0;
    double d_g = 0.0;
    double d_b_prime = 0.0;
    double p_error = 0.0;
};

/// D_tr = (1/2) tr|a - b|.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

/// Trace distance via the spectral projectors of a - b. Agrees with the
/// direct form within 1e-9.
double trace_distance_projector_form(const DensityMatrix& a, const DensityMatrix& b);

/// F = (tr|sqrt(a) sqrt(b)|)^2, computed from the spectrum of
/// sqrt(a) b sqrt(a) with sub-zero clamping.
double fidelity(const DensityMatrix& a, const DensityMatrix& b);

double sqrt_fidelity(const DensityMatrix& a, const DensityMatrix& b);

/// G = tr(ab) + sqrt(1 - tr a^2) sqrt(1 - tr b^2).
double superfidelity(const DensityMatrix& a, const DensityMatrix& b);

/// D_B = sqrt(2 - 2 sqrt(F)).
double bures_distance(const DensityMatrix& a, const DensityMatrix& b);

/// D_B' = sqrt(2 - 2 sqrt(G)); fails the triangle inequality in general.
double d_b_prime(const DensityMatrix& a, const DensityMatrix& b);

/// D_G = sqrt(2 - 2 G); a metric.
double d_g(const DensityMatrix& a, const DensityMatrix& b);

/// P_E = (1 - D_tr) / 2.
double error_probability(const DensityMatrix& a, const DensityMatrix& b);

/// All measures at once; derived fields are computed from the same
/// fidelity/superfidelity values.
MeasureSet measure_all(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace qdist

#endif  // QDIST_MEASURES_HPP
