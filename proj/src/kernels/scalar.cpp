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

// Reference kernels. Deliberately plain loops: these define the expected
// result for every vectorized variant.

#include "fusionkit/kernels.hpp"

namespace fusionkit::kernels::scalar {

std::complex<double> dot(ComplexView a, ComplexView b) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t s = 0; s < a.size; s++) {
        re += a.re[s] * b.re[s] - a.im[s] * b.im[s];
        im += a.re[s] * b.im[s] + a.im[s] * b.re[s];
    }
    return {re, im};
}

std::complex<double> dot_conj(ComplexView a, ComplexView b) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t s = 0; s < a.size; s++) {
        re += a.re[s] * b.re[s] + a.im[s] * b.im[s];
        im += a.im[s] * b.re[s] - a.re[s] * b.im[s];
    }
    return {re, im};
}

void triple_product(ComplexView a, ComplexView b, ComplexView c, ComplexOut out) {
    for (std::size_t s = 0; s < a.size; s++) {
        double tr = a.re[s] * b.re[s] - a.im[s] * b.im[s];
        double ti = a.re[s] * b.im[s] + a.im[s] * b.re[s];
        out.re[s] = tr * c.re[s] - ti * c.im[s];
        out.im[s] = tr * c.im[s] + ti * c.re[s];
    }
}

}  // namespace fusionkit::kernels::scalar
