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

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "fusionkit/kernels.hpp"

namespace fusionkit::kernels {

namespace {

constexpr KernelTable kScalar{Isa::scalar, "scalar", scalar::dot, scalar::dot_conj, scalar::triple_product};

#if defined(FUSIONKIT_HAVE_AVX2)
constexpr KernelTable kAvx2{Isa::avx2, "avx2", avx2::dot, avx2::dot_conj, avx2::triple_product};
#endif

#if defined(FUSIONKIT_HAVE_NEON)
constexpr KernelTable kNeon{Isa::neon, "neon", neon::dot, neon::dot_conj, neon::triple_product};
#endif

bool cpu_supports(Isa isa) {
    switch (isa) {
        case Isa::scalar:
            return true;
        case Isa::avx2:
#if defined(FUSIONKIT_HAVE_AVX2)
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
        case Isa::neon:
#if defined(FUSIONKIT_HAVE_NEON)
            return true;
#else
            return false;
#endif
    }
    return false;
}

const KernelTable &select_active() {
    auto isas = available_isas();
    if (const char *forced = std::getenv("FUSIONKIT_ISA"); forced != nullptr && *forced != '\0') {
        for (Isa isa : isas) {
            if (isa_name(isa) == forced) {
                return table_for(isa);
            }
        }
        // Unknown or unsupported request: fall back to the reference.
        return kScalar;
    }
    return table_for(isas.back());
}

}  // namespace

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::scalar:
            return "scalar";
        case Isa::avx2:
            return "avx2";
        case Isa::neon:
            return "neon";
    }
    return "?";
}

std::vector<Isa> available_isas() {
    std::vector<Isa> out{Isa::scalar};
    for (Isa isa : {Isa::avx2, Isa::neon}) {
        if (cpu_supports(isa)) {
            out.push_back(isa);
        }
    }
    return out;
}

const KernelTable &table_for(Isa isa) {
    if (!cpu_supports(isa)) {
        throw std::invalid_argument("kernel ISA not available: " + std::string(isa_name(isa)));
    }
    switch (isa) {
        case Isa::scalar:
            return kScalar;
#if defined(FUSIONKIT_HAVE_AVX2)
        case Isa::avx2:
            return kAvx2;
#endif
#if defined(FUSIONKIT_HAVE_NEON)
        case Isa::neon:
            return kNeon;
#endif
        default:
            break;
    }
    throw std::invalid_argument("kernel ISA not available: " + std::string(isa_name(isa)));
}

const KernelTable &active() {
    static const KernelTable &chosen = select_active();
    return chosen;
}

}  // namespace fusionkit::kernels
