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

#ifndef QDIST_FORMAT_HPP
#define QDIST_FORMAT_HPP

#include <cmath>
#include <cstdio>
#include <string>

namespace qdist {

/// Renders a double with 17 significant digits, switching to lowercase
/// scientific notation when |x| < 1e-4 or |x| >= 1e6. The output is a
/// lossless round-trip of the IEEE double value.
inline std::string format_double(double x) {
    if (x == 0.0) return "0";
    char buf[40];
    const double ax = std::fabs(x);
    if (ax < 1e-4 || ax >= 1e6) {
        std::snprintf(buf, sizeof buf, "%.16e", x);
    } else {
        std::snprintf(buf, sizeof buf, "%.17g", x);
    }
    return buf;
}

}  // namespace qdist

#endif  // QDIST_FORMAT_HPP
