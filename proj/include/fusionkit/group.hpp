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

#ifndef FUSIONKIT_GROUP_HPP
#define FUSIONKIT_GROUP_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "fusionkit/common.hpp"

namespace fusionkit {

/// Finite group given by a multiplication table over indexed elements.
/// Instances always satisfy the group axioms.
class FiniteGroup {
   public:
    /// `table[a * n + b]` is the index of a*b. Throws StructuralError naming
    /// the first violated axiom.
    FiniteGroup(std::vector<std::string> names, std::vector<std::size_t> table, std::size_t identity);

    std::size_t order() const { return names_.size(); }
    std::size_t identity() const { return identity_; }
    std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * order() + b]; }
    std::size_t inverse(std::size_t a) const { return inverse_[a]; }
    std::size_t conjugate(std::size_t x, std::size_t g) const { return mul(mul(x, g), inverse(x)); }
    std::size_t power(std::size_t a, long long k) const;
    std::size_t element_order(std::size_t a) const;

    const std::string &name(std::size_t a) const { return names_.at(a); }
    const std::vector<std::string> &names() const { return names_; }
    std::size_t index_of(const std::string &name) const;
    const std::vector<std::size_t> &table() const { return table_; }

    bool is_abelian() const;
    bool is_cyclic() const;

    bool operator==(const FiniteGroup &other) const = default;

   private:
    std::vector<std::string> names_;
    std::vector<std::size_t> table_;
    std::size_t identity_;
    std::vector<std::size_t> inverse_;
};

/// Axiom report for a candidate table, without throwing.
ValidationReport check_group_axioms(
    const std::vector<std::string> &names, const std::vector<std::size_t> &table, std::size_t identity);

/// Z_n with elements "e", "g", "g^2", ..., "g^{n-1}". Throws for n = 0.
FiniteGroup make_cyclic(std::size_t n);

/// Subset of a parent group's element indices, closed under multiplication.
/// Elements are kept sorted by parent index.
class Subgroup {
   public:
    Subgroup() = default;

    /// Throws StructuralError unless `elements` is a subgroup of `parent`.
    static Subgroup of(const FiniteGroup &parent, std::vector<std::size_t> elements);
    static Subgroup whole(const FiniteGroup &parent);
    static Subgroup trivial(const FiniteGroup &parent);

    std::size_t order() const { return elements_.size(); }
    const std::vector<std::size_t> &elements() const { return elements_; }
    bool contains(std::size_t g) const;
    /// Position of parent element `g` within `elements()`.
    std::size_t position_of(std::size_t g) const;
    bool is_subset_of(const Subgroup &other) const;

    /// The subgroup as a standalone group; element i is elements()[i].
    FiniteGroup as_group(const FiniteGroup &parent) const;

    bool operator==(const Subgroup &other) const = default;

   private:
    std::vector<std::size_t> elements_;
};

}  // namespace fusionkit

#endif
