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

#ifndef FUSIONKIT_FIXTURES_HPP
#define FUSIONKIT_FIXTURES_HPP

#include <string>

#include "fusionkit/modular_data.hpp"

namespace fusionkit::fixtures {

// Generators for the standard desk-scale families. Output is not trusted:
// callers run `validate` before use.

/// One label, S = [[1]].
ModularDatum single();

/// Z_n pointed data, S_{a,b} = n^{-1/2} exp(2 pi i a b c / n), labels "0".."n-1".
/// Unitary only when gcd(c, n) = 1.
ModularDatum pointed(int n, int c = 1);

/// Ising: labels (1, psi, sigma).
ModularDatum ising();

/// su(2) at level k: labels "0".."k", S_{i,j} = sqrt(2/(k+2)) sin(pi (i+1)(j+1)/(k+2)).
ModularDatum su2(int level);

/// Directory holding the shipped fixture files (compiled in).
std::string fixture_directory();

}  // namespace fusionkit::fixtures

#endif
