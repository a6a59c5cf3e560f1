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

#ifndef FUSIONKIT_FUSION_VG_HPP
#define FUSIONKIT_FUSION_VG_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fusionkit/orbifold.hpp"

namespace fusionkit {

/// sum_{g in G} M x (N.g), as a formal sum of base labels.
FormalModuleSum fuse_over_fixed_points(
    const ModuleAction &act, const FusionTensor &fusion, std::size_t m, std::size_t n);

/// Fusing with the vacuum over the fixed points returns the orbit sum of M
/// (|G| copies of M when M is stable).
ValidationReport v_regular_check(const ModuleAction &act, const FusionTensor &fusion);

struct PairCount {
    std::int64_t pair = 0;    // sum_{g,h} N[M, N.g]^{F.h}
    std::int64_t triple = 0;  // sum_{g,h,l} N[M.l, N.g]^{F.h}
    std::size_t group_order = 0;

    bool consistent() const { return triple == static_cast<std::int64_t>(group_order) * pair; }
};

PairCount pair_counting(const ModuleAction &act, const FusionTensor &fusion, std::size_t m, std::size_t n, std::size_t f);

/// Total multiplicity sum_xi N^{F_xi} dim(xi) of the type-one irreducibles
/// over F in a x b, from pair counting. Throws MathError on a negative
/// result.
Rational aggregate_fusion(
    const TypeOneCatalog &cat, const FusionTensor &fusion, const TypeOneLabel &a, const TypeOneLabel &b, std::size_t f);

/// The same total computed from the extended S-matrix alone:
/// sum_E S[a,E] S[b,E] / S[vac,E] * conj(module_s_vector(F, E)).
/// Shares no code path with pair counting.
Complex aggregate_fusion_s_route(const TypeOneCatalog &cat, const TypeOneLabel &a, const TypeOneLabel &b, std::size_t f);

/// For every entry pair and base label F: the pair/triple sums agree, the
/// quantum-dimension form holds, and the S-matrix route matches.
ValidationReport aggregate_identity_check(const TypeOneCatalog &cat, const FusionTensor &fusion);

/// For the orbits of M, N, F and every pair of character choices, the
/// aggregate totals are proportional to the products of quantum dimensions.
ValidationReport proportional_distribution_check(
    const TypeOneCatalog &cat, const FusionTensor &fusion, std::size_t m, std::size_t n, std::size_t f);

/// Trace of the stabilizer action on the intertwiner space of an orbit
/// triple, normalized to the trivial-character slice. `character` is indexed
/// by positions in `subgroup`. When `inducing_subgroup` is set, simple
/// modules are induced from it to `subgroup`.
struct IntertwinerActionData {
    std::array<std::size_t, 3> triple{};  // base labels (M, N, F)
    Subgroup subgroup;
    std::optional<Subgroup> inducing_subgroup;
    ClassFunction character;
};

struct ResolvedChannel {
    std::string name;            // character name of xi
    std::int64_t dim = 0;        // dimension of the simple module for xi
    Complex raw = 0.0;           // inner product before rounding
    std::int64_t multiplicity = 0;
};

struct ResolvedFusion {
    std::vector<ResolvedChannel> channels;
    std::int64_t channel_count = 0;  // sum of N over the orbit triple
    Complex character_at_identity = 0.0;
    Rational aggregate;
    bool short_circuited = false;  // aggregate was zero
};

/// Per-character fusion numbers from the supplied intertwiner character,
/// without consistency enforcement. Structural problems (unknown labels,
/// mismatched subgroup) throw StructuralError.
ResolvedFusion resolve_fusion_unchecked(
    const TypeOneCatalog &cat,
    const FusionTensor &fusion,
    const TableSet &tables,
    const TypeOneLabel &a,
    const TypeOneLabel &b,
    std::size_t f,
    const IntertwinerActionData &data);

/// Channel count, integrality, and the dimension-weighted sum rule.
ValidationReport resolved_sum_rule_check(const ResolvedFusion &resolved);

/// `resolve_fusion_unchecked` followed by `resolved_sum_rule_check`; throws
/// MathError naming the first failed rule.
ResolvedFusion resolve_fusion(
    const TypeOneCatalog &cat,
    const FusionTensor &fusion,
    const TableSet &tables,
    const TypeOneLabel &a,
    const TypeOneLabel &b,
    std::size_t f,
    const IntertwinerActionData &data);

}  // namespace fusionkit

#endif
