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

#ifndef FUSIONKIT_ORBIFOLD_HPP
#define FUSIONKIT_ORBIFOLD_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "fusionkit/char_theory.hpp"
#include "fusionkit/complex_matrix.hpp"
#include "fusionkit/group_action.hpp"

namespace fusionkit {

/// A type-one irreducible of the fixed-point algebra: an orbit
/// representative paired with an irreducible character of its stabilizer.
struct TypeOneLabel {
    std::size_t orbit_rep = 0;
    std::size_t character = 0;

    auto operator<=>(const TypeOneLabel &) const = default;
};

struct CatalogOrbit {
    std::size_t representative;
    std::vector<std::size_t> members;
    Subgroup stabilizer;
    CharacterTable characters;  // over the stabilizer, in subgroup position order
};

struct CatalogEntry {
    TypeOneLabel label;
    std::size_t orbit;  // index into TypeOneCatalog::orbits()
    std::int64_t dim;   // dimension of the stabilizer character
    double qdim;
    std::string name;  // "<rep label>:<character name>"
};

class TypeOneCatalog {
   public:
    TypeOneCatalog(std::shared_ptr<const ModuleAction> action, std::vector<CatalogOrbit> orbits);

    const ModuleAction &action() const { return *action_; }
    const std::shared_ptr<const ModuleAction> &action_ptr() const { return action_; }
    const ModularDatum &datum() const { return action_->datum(); }
    const FiniteGroup &group() const { return action_->group(); }
    double tolerance() const { return datum().tolerance(); }

    const std::vector<CatalogOrbit> &orbits() const { return orbits_; }
    const std::vector<CatalogEntry> &entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    /// Index of the orbit containing base label m.
    std::size_t orbit_index_of(std::size_t m) const { return orbit_of_label_.at(m); }
    const CatalogOrbit &orbit_of(std::size_t m) const { return orbits_[orbit_index_of(m)]; }

    /// Throws StructuralError if the label is not in the catalog.
    std::size_t entry_index(const TypeOneLabel &label) const;
    const CatalogEntry &entry(const TypeOneLabel &label) const { return entries_[entry_index(label)]; }

    /// (vacuum, trivial character).
    TypeOneLabel vacuum_label() const;

   private:
    std::shared_ptr<const ModuleAction> action_;
    std::vector<CatalogOrbit> orbits_;
    std::vector<CatalogEntry> entries_;
    std::vector<std::size_t> orbit_of_label_;
};

/// One entry per (orbit, stabilizer character), ordered by representative
/// then character. Tables come from `tables` (abelian stabilizers are filled
/// in automatically). Throws StructuralError when a table is missing or a
/// supplied table fails validation.
TypeOneCatalog build_catalog(std::shared_ptr<const ModuleAction> action, const TableSet &tables);

std::size_t type_one_count(std::shared_ptr<const ModuleAction> action, const TableSet &tables);

/// (dim a / |G_rep(a)|) * dim b * sum_{N in orbit(b)} S[rep(a), N].
Complex extended_s_entry(const TypeOneCatalog &cat, const TypeOneLabel &a, const TypeOneLabel &b);

/// dim b * sum_{N in orbit(b)} S[m, N], the S-entry of an untwisted base
/// module against a type-one irreducible.
Complex module_s_vector(const TypeOneCatalog &cat, std::size_t m, const TypeOneLabel &b);

/// The full extended S-matrix over catalog entries, in catalog order.
ComplexMatrix extended_s_block(const TypeOneCatalog &cat);

/// module_s_vector(M, b) equals sum_lambda dim(lambda) * extended_s_entry((M, lambda), b)
/// for every base label M and entry b.
ValidationReport module_s_consistency_check(const TypeOneCatalog &cat);

/// Within each orbit, S[(M, l1), E] / qdim(M, l1) == S[(M, l2), E] / qdim(M, l2).
ValidationReport proportionality_check(const TypeOneCatalog &cat);

/// module_s_vector(vacuum, b) == |G| * extended_s_entry((vacuum, triv), b) and
/// the closed form dim b * |G| * S[vacuum, rep b] / |G_rep b|.
ValidationReport vacuum_scaling_check(const TypeOneCatalog &cat);

/// Per base module, sum_lambda dim(lambda) qdim(M, lambda) == |G| qdim(M), and
/// sum over entries of qdim^2 == |G| * global dimension.
ValidationReport qdim_relations_check(const TypeOneCatalog &cat);

/// Multiplicity pairing of two untwisted base modules decomposed over the
/// catalog: |G_M| when they share an orbit, else 0.
std::int64_t inner_product_modules(const TypeOneCatalog &cat, std::size_t m, std::size_t n);

}  // namespace fusionkit

#endif
