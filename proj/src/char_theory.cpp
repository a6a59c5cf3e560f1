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

#include "fusionkit/char_theory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <set>

namespace fusionkit {

namespace {

Rational fractional_part(const Rational &r) {
    std::int64_t whole = r.numerator() / r.denominator();
    Rational out = r - whole;
    if (out.numerator() < 0) {
        out += 1;
    }
    return out;
}

}  // namespace

CharacterTable::CharacterTable(FiniteGroup group, std::vector<Character> characters, bool projective)
    : group_(std::move(group)), characters_(std::move(characters)), projective_(projective) {
    std::set<std::string> names;
    for (const auto &c : characters_) {
        if (c.values.size() != group_.order()) {
            throw StructuralError(
                "character '" + c.name + "' has " + std::to_string(c.values.size()) + " values for a group of order " +
                std::to_string(group_.order()));
        }
        if (!names.insert(c.name).second) {
            throw StructuralError("character name '" + c.name + "' repeats");
        }
        Complex at_e = c.values[group_.identity()];
        std::int64_t d = 0;
        if (std::abs(at_e.imag()) > kIntegralityTolerance || !near_integer(at_e.real(), kIntegralityTolerance, &d) ||
            d <= 0) {
            throw StructuralError("character '" + c.name + "' must take a positive integer value at the identity");
        }
        dims_.push_back(d);
    }
    if (characters_.empty()) {
        throw StructuralError("character table is empty");
    }
}

std::size_t CharacterTable::index_of(const std::string &name) const {
    for (std::size_t i = 0; i < characters_.size(); i++) {
        if (characters_[i].name == name) {
            return i;
        }
    }
    throw StructuralError("unknown character '" + name + "'");
}

std::size_t CharacterTable::trivial_index() const {
    for (std::size_t i = 0; i < characters_.size(); i++) {
        bool all_one = std::all_of(characters_[i].values.begin(), characters_[i].values.end(), [](Complex v) {
            return std::abs(v - Complex(1.0, 0.0)) <= kIntegralityTolerance;
        });
        if (all_one) {
            return i;
        }
    }
    throw StructuralError("character table has no trivial character");
}

Complex root_of_unity(const Rational &turns) {
    Rational t = fractional_part(turns);
    Rational quarters = t * 4;
    if (quarters.denominator() == 1) {
        switch (quarters.numerator()) {
            case 0:
                return {1.0, 0.0};
            case 1:
                return {0.0, 1.0};
            case 2:
                return {-1.0, 0.0};
            default:
                return {0.0, -1.0};
        }
    }
    double angle = 2.0 * std::numbers::pi * static_cast<double>(t.numerator()) / static_cast<double>(t.denominator());
    return std::polar(1.0, angle);
}

CharacterTable irr_abelian(const FiniteGroup &group) {
    if (!group.is_abelian()) {
        throw StructuralError("automatic character tables need an abelian group");
    }
    const std::size_t n = group.order();
    // Build the characters as exact angles while growing a subgroup one
    // generator at a time.
    std::vector<bool> in_sub(n, false);
    std::vector<std::size_t> sub{group.identity()};
    in_sub[group.identity()] = true;
    std::vector<std::vector<Rational>> angles{std::vector<Rational>(n, Rational(0))};

    while (sub.size() < n) {
        std::size_t g = 0;
        while (in_sub[g]) {
            g++;
        }
        std::int64_t k = 1;
        std::size_t gk = g;
        while (!in_sub[gk]) {
            gk = group.mul(gk, g);
            k++;
        }
        std::vector<std::size_t> grown;
        for (std::int64_t j = 0; j < k; j++) {
            std::size_t gj = group.power(g, j);
            for (std::size_t h : sub) {
                grown.push_back(group.mul(h, gj));
            }
        }
        std::vector<std::vector<Rational>> extended;
        for (const auto &theta : angles) {
            for (std::int64_t t = 0; t < k; t++) {
                Rational theta_g = (theta[gk] + t) / k;
                std::vector<Rational> next(n, Rational(0));
                for (std::int64_t j = 0; j < k; j++) {
                    std::size_t gj = group.power(g, j);
                    for (std::size_t h : sub) {
                        next[group.mul(h, gj)] = fractional_part(theta[h] + theta_g * j);
                    }
                }
                extended.push_back(std::move(next));
            }
        }
        for (std::size_t x : grown) {
            in_sub[x] = true;
        }
        sub = std::move(grown);
        angles = std::move(extended);
    }

    std::vector<Character> chars;
    for (std::size_t i = 0; i < angles.size(); i++) {
        Character c;
        c.name = i == 0 ? "triv" : n == 2 ? "sign" : "chi" + std::to_string(i);
        for (std::size_t g = 0; g < n; g++) {
            c.values.push_back(root_of_unity(angles[i][g]));
        }
        chars.push_back(std::move(c));
    }
    return CharacterTable(group, std::move(chars));
}

Complex inner_product(const FiniteGroup &group, const ClassFunction &f1, const ClassFunction &f2) {
    if (f1.size() != group.order() || f2.size() != group.order()) {
        throw StructuralError("class function length does not match the group order");
    }
    Complex sum = 0.0;
    for (std::size_t g = 0; g < group.order(); g++) {
        sum += f1[g] * std::conj(f2[g]);
    }
    return sum / static_cast<double>(group.order());
}

ClassFunction induce(const FiniteGroup &group, const Subgroup &sub, const ClassFunction &chi) {
    if (chi.size() != sub.order()) {
        throw StructuralError("character length does not match the subgroup order");
    }
    ClassFunction out(group.order(), 0.0);
    for (std::size_t g = 0; g < group.order(); g++) {
        Complex sum = 0.0;
        for (std::size_t x = 0; x < group.order(); x++) {
            std::size_t c = group.conjugate(x, g);
            if (sub.contains(c)) {
                sum += chi[sub.position_of(c)];
            }
        }
        out[g] = sum / static_cast<double>(sub.order());
    }
    return out;
}

ClassFunction restrict_to(const Subgroup &sub, const ClassFunction &f) {
    ClassFunction out;
    out.reserve(sub.order());
    for (std::size_t g : sub.elements()) {
        out.push_back(f.at(g));
    }
    return out;
}

ValidationReport validate_table(const CharacterTable &table, double tolerance) {
    ValidationReport report;
    report.subject = "characters";
    const auto &G = table.group();

    double dev = 0.0;
    std::string witness;
    for (std::size_t i = 0; i < table.size(); i++) {
        for (std::size_t j = 0; j < table.size(); j++) {
            Complex ip = inner_product(G, table.character(i).values, table.character(j).values);
            double d = std::abs(ip - Complex(i == j ? 1.0 : 0.0, 0.0));
            if (d > dev) {
                dev = d;
                if (d > tolerance && witness.empty()) {
                    witness = "<" + table.character(i).name + ", " + table.character(j).name + "> is off";
                }
            }
        }
    }
    report.add("orthonormal", dev <= tolerance, dev, witness);

    if (table.projective()) {
        report.add_inapplicable("complete", "projective table");
        report.add_inapplicable("class_functions", "projective table");
        return report;
    }

    std::int64_t square_sum = 0;
    for (std::size_t i = 0; i < table.size(); i++) {
        square_sum += table.dim(i) * table.dim(i);
    }
    report.add(
        "complete",
        square_sum == static_cast<std::int64_t>(G.order()),
        0.0,
        "sum of squared dimensions " + std::to_string(square_sum) + ", group order " + std::to_string(G.order()));

    dev = 0.0;
    witness.clear();
    for (std::size_t i = 0; i < table.size(); i++) {
        const auto &v = table.character(i).values;
        for (std::size_t x = 0; x < G.order(); x++) {
            for (std::size_t g = 0; g < G.order(); g++) {
                double d = std::abs(v[G.conjugate(x, g)] - v[g]);
                if (d > dev) {
                    dev = d;
                    if (d > tolerance && witness.empty()) {
                        witness = table.character(i).name + " differs on " + G.name(g) + " and its conjugate by " +
                                  G.name(x);
                    }
                }
            }
        }
    }
    report.add("class_functions", dev <= tolerance, dev, witness);
    return report;
}

void TableSet::add(const Subgroup &sub, CharacterTable table) {
    if (!(table.group() == sub.as_group(parent_))) {
        throw StructuralError("character table group does not match its subgroup");
    }
    for (auto &[s, t] : tables_) {
        if (s == sub) {
            t = std::move(table);
            return;
        }
    }
    tables_.emplace_back(sub, std::move(table));
}

CharacterTable TableSet::table_for(const Subgroup &sub) const {
    for (const auto &[s, t] : tables_) {
        if (s == sub) {
            return t;
        }
    }
    FiniteGroup as_group = sub.as_group(parent_);
    if (!as_group.is_abelian()) {
        std::string elems;
        for (std::size_t g : sub.elements()) {
            elems += (elems.empty() ? "" : ",") + parent_.name(g);
        }
        throw StructuralError("missing character table for non-abelian subgroup {" + elems + "}");
    }
    return irr_abelian(as_group);
}

}  // namespace fusionkit
