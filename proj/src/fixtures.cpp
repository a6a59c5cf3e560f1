// Copyright 2026 The fusionkit Authors
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

#include "fusionkit/fixtures.hpp"

#include "fusionkit/char_theory.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>

namespace fusionkit::fixtures {

ModularDatum single() {
    return ModularDatum::create({"1"}, "1", {{Complex(1.0, 0.0)}});
}

ModularDatum pointed(int n, int c) {
    if (n < 1) {
        throw StructuralError("pointed data needs n >= 1");
    }
    std::vector<std::string> labels;
    std::vector<std::vector<Complex>> rows(n, std::vector<Complex>(n));
    const double norm = 1.0 / std::sqrt(static_cast<double>(n));
    for (int a = 0; a < n; a++) {
        labels.push_back(std::to_string(a));
        for (int b = 0; b < n; b++) {
            long long e = (static_cast<long long>(a) * b % n) * (((c % n) + n) % n) % n;
            rows[a][b] = norm * root_of_unity(Rational(e, n));
        }
    }
    return ModularDatum::create(labels, "0", rows);
}

ModularDatum ising() {
    const double r = std::numbers::sqrt2 / 2.0;
    return ModularDatum::create(
        {"1", "psi", "sigma"},
        "1",
        {
            {0.5, 0.5, r},
            {0.5, 0.5, -r},
            {r, -r, 0.0},
        });
}

ModularDatum su2(int level) {
    if (level < 0) {
        throw StructuralError("su(2) level must be nonnegative");
    }
    const int n = level + 1;
    const double norm = std::sqrt(2.0 / (level + 2));
    std::vector<std::string> labels;
    std::vector<std::vector<Complex>> rows(n, std::vector<Complex>(n));
    for (int i = 0; i < n; i++) {
        labels.push_back(std::to_string(i));
        for (int j = 0; j < n; j++) {
            rows[i][j] = norm * std::sin(std::numbers::pi * (i + 1) * (j + 1) / (level + 2));
        }
    }
    return ModularDatum::create(labels, "0", rows);
}

std::string fixture_directory() {
    if (const char *env = std::getenv("FUSIONKIT_FIXTURES"); env != nullptr && *env != '\0') {
        return env;
    }
    return FUSIONKIT_FIXTURE_DIR;
}

}  // namespace fusionkit::fixtures
