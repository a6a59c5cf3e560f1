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


#ifndef FUSIONKIT_TESTS_RANDOM_POINTED_HPP
#define FUSIONKIT_TESTS_RANDOM_POINTED_HPP

#include <algorithm>
#include <memory>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "fusionkit/fixtures.hpp"
#include "fusionkit/group_action.hpp"

namespace testing_support {

struct RandomCase {
    int n;
    int c;
    std::vector<int> units;  // the acting group, as multipliers mod n
};

inline std::string describe(const RandomCase &rc) {
    std::string out = "Z" + std::to_string(rc.n) + " c=" + std::to_string(rc.c) + " units={";
    for (int u : rc.units) {
        out += std::to_string(u) + " ";
    }
    return out + "}";
}

// Multipliers u with u^2 = 1 mod n preserve S; any subset closes to a group.
inline RandomCase draw(std::mt19937 &rng) {
    RandomCase rc;
    rc.n = std::uniform_int_distribution<int>(1, 8)(rng);
    std::vector<int> coprime;
    std::vector<int> involutions;
    for (int x = 0; x < rc.n; x++) {
        if (std::gcd(x, rc.n) == 1) {
            coprime.push_back(x);
            if ((x * x) % rc.n == 1 % rc.n) {
                involutions.push_back(x);
            }
        }
    }
    rc.c = coprime[std::uniform_int_distribution<std::size_t>(0, coprime.size() - 1)(rng)];
    std::vector<int> group{1 % rc.n};
    const int picks = std::uniform_int_distribution<int>(0, 2)(rng);
    for (int p = 0; p < picks; p++) {
        int u = involutions[std::uniform_int_distribution<std::size_t>(0, involutions.size() - 1)(rng)];
        std::vector<int> grown = group;
        for (int g : group) {
            int h = (g * u) % rc.n;
            if (std::find(grown.begin(), grown.end(), h) == grown.end()) {
                grown.push_back(h);
            }
        }
        group = grown;
    }
    rc.units = group;
    return rc;
}

inline std::shared_ptr<const fusionkit::ModuleAction> build_action(const RandomCase &rc) {
    const std::size_t order = rc.units.size();
    std::vector<std::string> names;
    for (int u : rc.units) {
        names.push_back("u" + std::to_string(u));
    }
    std::vector<std::size_t> table;
    for (int a : rc.units) {
        for (int b : rc.units) {
            int prod = (a * b) % rc.n;
            table.push_back(static_cast<std::size_t>(std::find(rc.units.begin(), rc.units.end(), prod) - rc.units.begin()));
        }
    }
    fusionkit::FiniteGroup group(names, table, 0);
    auto datum = std::make_shared<const fusionkit::ModularDatum>(fusionkit::fixtures::pointed(rc.n, rc.c));
    std::vector<std::vector<std::size_t>> images(order);
    for (std::size_t g = 0; g < order; g++) {
        for (int a = 0; a < rc.n; a++) {
            images[g].push_back(static_cast<std::size_t>((a * rc.units[g]) % rc.n));
        }
    }
    return std::make_shared<const fusionkit::ModuleAction>(std::move(group), datum, std::move(images));
}

}  // namespace testing_support

#endif
