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

#include "fusionkit/group.hpp"

#include <algorithm>
#include <set>

namespace fusionkit {

ValidationReport check_group_axioms(
    const std::vector<std::string> &names, const std::vector<std::size_t> &table, std::size_t identity) {
    ValidationReport report;
    report.subject = "group";
    const std::size_t n = names.size();
    if (n == 0) {
        report.add("nonempty", false, 0.0, "group has no elements");
        return report;
    }
    std::set<std::string> distinct(names.begin(), names.end());
    report.add("distinct_names", distinct.size() == n, 0.0, distinct.size() == n ? "" : "element names repeat");
    if (table.size() != n * n) {
        report.add(
            "table_shape", false, 0.0,
            "table has " + std::to_string(table.size()) + " entries, expected " + std::to_string(n * n));
        return report;
    }
    if (identity >= n) {
        report.add("identity", false, 0.0, "identity index out of range");
        return report;
    }
    auto at = [&](std::size_t a, std::size_t b) { return table[a * n + b]; };

    std::string witness;
    for (std::size_t a = 0; a < n && witness.empty(); a++) {
        for (std::size_t b = 0; b < n; b++) {
            if (at(a, b) >= n) {
                witness = names[a] + "*" + names[b] + " is out of range";
                break;
            }
        }
    }
    report.add("closure", witness.empty(), 0.0, witness);
    if (!witness.empty()) {
        return report;
    }

    for (std::size_t a = 0; a < n && witness.empty(); a++) {
        if (at(identity, a) != a || at(a, identity) != a) {
            witness = "identity fails on " + names[a];
        }
    }
    report.add("identity", witness.empty(), 0.0, witness);
    witness.clear();

    for (std::size_t a = 0; a < n && witness.empty(); a++) {
        bool found = false;
        for (std::size_t b = 0; b < n; b++) {
            if (at(a, b) == identity && at(b, a) == identity) {
                found = true;
                break;
            }
        }
        if (!found) {
            witness = names[a] + " has no inverse";
        }
    }
    report.add("inverses", witness.empty(), 0.0, witness);
    witness.clear();

    for (std::size_t a = 0; a < n && witness.empty(); a++) {
        for (std::size_t b = 0; b < n && witness.empty(); b++) {
            for (std::size_t c = 0; c < n; c++) {
                if (at(at(a, b), c) != at(a, at(b, c))) {
                    witness = "(" + names[a] + "*" + names[b] + ")*" + names[c] + " != " + names[a] + "*(" + names[b] +
                              "*" + names[c] + ")";
                    break;
                }
            }
        }
    }
    report.add("associative", witness.empty(), 0.0, witness);
    return report;
}

FiniteGroup::FiniteGroup(std::vector<std::string> names, std::vector<std::size_t> table, std::size_t identity)
    : names_(std::move(names)), table_(std::move(table)), identity_(identity) {
    auto report = check_group_axioms(names_, table_, identity_);
    if (const Check *bad = report.first_failure()) {
        throw StructuralError("invalid group table (" + bad->name + "): " + bad->detail);
    }
    const std::size_t n = names_.size();
    inverse_.assign(n, identity_);
    for (std::size_t a = 0; a < n; a++) {
        for (std::size_t b = 0; b < n; b++) {
            if (mul(a, b) == identity_) {
                inverse_[a] = b;
                break;
            }
        }
    }
}

std::size_t FiniteGroup::power(std::size_t a, long long k) const {
    if (k < 0) {
        return power(inverse(a), -k);
    }
    std::size_t out = identity_;
    for (long long i = 0; i < k; i++) {
        out = mul(out, a);
    }
    return out;
}

std::size_t FiniteGroup::element_order(std::size_t a) const {
    std::size_t k = 1;
    for (std::size_t x = a; x != identity_; x = mul(x, a)) {
        k++;
    }
    return k;
}

std::size_t FiniteGroup::index_of(const std::string &name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) {
        throw StructuralError("unknown group element '" + name + "'");
    }
    return static_cast<std::size_t>(it - names_.begin());
}

bool FiniteGroup::is_abelian() const {
    for (std::size_t a = 0; a < order(); a++) {
        for (std::size_t b = a + 1; b < order(); b++) {
            if (mul(a, b) != mul(b, a)) {
                return false;
            }
        }
    }
    return true;
}

bool FiniteGroup::is_cyclic() const {
    for (std::size_t a = 0; a < order(); a++) {
        if (element_order(a) == order()) {
            return true;
        }
    }
    return false;
}

FiniteGroup make_cyclic(std::size_t n) {
    if (n == 0) {
        throw StructuralError("cyclic group order must be at least 1");
    }
    std::vector<std::string> names;
    for (std::size_t k = 0; k < n; k++) {
        names.push_back(k == 0 ? "e" : k == 1 ? "g" : "g^" + std::to_string(k));
    }
    std::vector<std::size_t> table(n * n);
    for (std::size_t a = 0; a < n; a++) {
        for (std::size_t b = 0; b < n; b++) {
            table[a * n + b] = (a + b) % n;
        }
    }
    return FiniteGroup(std::move(names), std::move(table), 0);
}

// ---------------------------------------------------------------------------
// Subgroup

Subgroup Subgroup::of(const FiniteGroup &parent, std::vector<std::size_t> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    for (std::size_t g : elements) {
        if (g >= parent.order()) {
            throw StructuralError("subgroup element index out of range");
        }
    }
    if (!std::binary_search(elements.begin(), elements.end(), parent.identity())) {
        throw StructuralError("subgroup does not contain the identity");
    }
    for (std::size_t a : elements) {
        for (std::size_t b : elements) {
            if (!std::binary_search(elements.begin(), elements.end(), parent.mul(a, b))) {
                throw StructuralError(
                    "subset is not closed: " + parent.name(a) + "*" + parent.name(b) + " = " +
                    parent.name(parent.mul(a, b)) + " is missing");
            }
        }
    }
    Subgroup out;
    out.elements_ = std::move(elements);
    return out;
}

Subgroup Subgroup::whole(const FiniteGroup &parent) {
    std::vector<std::size_t> all(parent.order());
    for (std::size_t g = 0; g < parent.order(); g++) {
        all[g] = g;
    }
    Subgroup out;
    out.elements_ = std::move(all);
    return out;
}

Subgroup Subgroup::trivial(const FiniteGroup &parent) {
    Subgroup out;
    out.elements_ = {parent.identity()};
    return out;
}

bool Subgroup::contains(std::size_t g) const {
    return std::binary_search(elements_.begin(), elements_.end(), g);
}

std::size_t Subgroup::position_of(std::size_t g) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
    if (it == elements_.end() || *it != g) {
        throw StructuralError("element is not in the subgroup");
    }
    return static_cast<std::size_t>(it - elements_.begin());
}

bool Subgroup::is_subset_of(const Subgroup &other) const {
    return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(), elements_.end());
}

FiniteGroup Subgroup::as_group(const FiniteGroup &parent) const {
    const std::size_t m = elements_.size();
    std::vector<std::string> names;
    for (std::size_t g : elements_) {
        names.push_back(parent.name(g));
    }
    std::vector<std::size_t> table(m * m);
    for (std::size_t a = 0; a < m; a++) {
        for (std::size_t b = 0; b < m; b++) {
            table[a * m + b] = position_of(parent.mul(elements_[a], elements_[b]));
        }
    }
    return FiniteGroup(std::move(names), std::move(table), position_of(parent.identity()));
}

}  // namespace fusionkit
