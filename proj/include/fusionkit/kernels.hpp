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

#ifndef FUSIONKIT_KERNELS_HPP
#define FUSIONKIT_KERNELS_HPP

#include <complex>
#include <cstddef>
#include <string_view>
#include <vector>

namespace fusionkit::kernels {

/// Read-only view of a complex vector in split (real plane, imaginary plane)
/// layout. Both planes hold `size` contiguous doubles.
struct ComplexView {
    const double *re = nullptr;
    const double *im = nullptr;
    std::size_t size = 0;
};

/// Writable counterpart of ComplexView.
struct ComplexOut {
    double *re = nullptr;
    double *im = nullptr;
    std::size_t size = 0;
};

enum class Isa { scalar, avx2, neon };

/// One implementation of the arithmetic inner loops. Every variant must
/// agree with the scalar reference up to floating-point reassociation.
struct KernelTable {
    Isa isa;
    std::string_view name;
    // sum_s a[s] * b[s]
    std::complex<double> (*dot)(ComplexView a, ComplexView b);
    // sum_s a[s] * conj(b[s])
    std::complex<double> (*dot_conj)(ComplexView a, ComplexView b);
    // out[s] = a[s] * b[s] * c[s]
    void (*triple_product)(ComplexView a, ComplexView b, ComplexView c, ComplexOut out);
};

/// Kernel table for `isa`. Requesting an ISA this build or CPU does not
/// support throws std::invalid_argument.
const KernelTable &table_for(Isa isa);

/// ISAs that are compiled in and supported by the running CPU; always
/// starts with Isa::scalar.
std::vector<Isa> available_isas();

/// Best available table, chosen once per process. Setting the environment
/// variable FUSIONKIT_ISA to `scalar`, `avx2` or `neon` forces a choice.
const KernelTable &active();

std::string_view isa_name(Isa isa);

namespace scalar {
std::complex<double> dot(ComplexView a, ComplexView b);
std::complex<double> dot_conj(ComplexView a, ComplexView b);
void triple_product(ComplexView a, ComplexView b, ComplexView c, ComplexOut out);
}  // namespace scalar

#if defined(FUSIONKIT_HAVE_AVX2)
namespace avx2 {
std::complex<double> dot(ComplexView a, ComplexView b);
std::complex<double> dot_conj(ComplexView a, ComplexView b);
void triple_product(ComplexView a, ComplexView b, ComplexView c, ComplexOut out);
}  // namespace avx2
#endif

#if defined(FUSIONKIT_HAVE_NEON)
namespace neon {
std::complex<double> dot(ComplexView a, ComplexView b);
std::complex<double> dot_conj(ComplexView a, ComplexView b);
void triple_product(ComplexView a, ComplexView b, ComplexView c, ComplexOut out);
}  // namespace neon
#endif

}  // namespace fusionkit::kernels

#endif
