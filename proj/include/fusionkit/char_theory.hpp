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

#ifndef FUSIONKIT_CHAR_THEORY_HPP
#define FUSIONKIT_CHAR_THEORY_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fusionkit/common.hpp"
#include "fusionkit/group.hpp"

namespace fusionkit {

/// A class function on a group, stored as values over the group's element
/// order.
using ClassFunction = std::vector<Complex>;

struct Character {
    std::string name;
    ClassFunction values;
};

/// Irreducible characters of a finite group. Ordinary by default; a table
/// flagged projective skips the completeness and class-function checks.
class CharacterTable {
   public:
    /// Throws StructuralError on wrong value lengths, duplicate names, or a
    /// value at the identity that is not a positive integer.
    CharacterTable(FiniteGroup group, std::vector<Character> characters, bool projective = false);

    const FiniteGroup &group() const { return group_; }
    std::size_t size() const { return characters_.size(); }
    const Character &character(std::size_t i) const { return characters_.at(i); }
    const std::vector<Character> &characters() const { return characters_; }
    std::int64_t dim(std::size_t i) const { return dims_.at(i); }
    std::size_t index_of(const std::string &name) const;
    bool projective() const { return projective_; }

    /// Index of the all-ones character. Throws StructuralError if absent.
    std::size_t trivial_index() const;

   private:
    FiniteGroup group_;
    std::vector<Character> characters_;
    std::vector<std::int64_t> dims_;
    bool projective_;
};

/// exp(2 pi i t), exact at quarter turns.
Complex root_of_unity(const Rational &turns);

/// All |G| linear characters of an abelian group. The trivial character
/// comes first and is named "triv"; for |G| = 2 the other is "sign", else
/// they are "chi1", "chi2", .... Throws StructuralError for non-abelian G.
CharacterTable irr_abelian(const FiniteGroup &group);

/// (1/|G|) sum_g f1(g) conj(f2(g)).
Complex inner_product(const FiniteGroup &group, const ClassFunction &f1, const ClassFunction &f2);

/// Induces `chi` (values over the positions of `sub`) to the parent group.
ClassFunction induce(const FiniteGroup &group, const Subgroup &sub, const ClassFunction &chi);

/// Values of `f` at the elements of `sub`, in subgroup position order.
ClassFunction restrict_to(const Subgroup &sub, const ClassFunction &f);

/// Orthonormality; completeness (sum of squared dims equals |G|) and
/// class-function checks unless the table is projective.
ValidationReport validate_table(const CharacterTable &table, double tolerance = kDefaultTolerance);

/// Character tables keyed by subgroups of a fixed parent group. Lookups for
/// subgroups without a supplied table fall back to `irr_abelian` when the
/// subgroup is abelian.
class TableSet {
   public:
    explicit TableSet(FiniteGroup parent) : parent_(std::move(parent)) {}

    /// `table.group()` must equal `sub.as_group(parent)`. Replaces any table
    /// already stored for `sub`.
    void add(const Subgroup &sub, CharacterTable table);

    const FiniteGroup &parent() const { return parent_; }
    const std::vector<std::pair<Subgroup, CharacterTable>> &supplied() const { return tables_; }

    /// Throws StructuralError if no table is supplied and `sub` is not
    /// abelian.
    CharacterTable table_for(const Subgroup &sub) const;

   private:
    FiniteGroup parent_;
    std::vector<std::pair<Subgroup, CharacterTable>> tables_;
};

}  // namespace fusionkit

#endif
