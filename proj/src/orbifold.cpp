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

#include "fusionkit/orbifold.hpp"

#include <algorithm>
#include <cmath>

namespace fusionkit {

TypeOneCatalog::TypeOneCatalog(std::shared_ptr<const ModuleAction> action, std::vector<CatalogOrbit> orbits)
    : action_(std::move(action)), orbits_(std::move(orbits)) {
    const auto &md = action_->datum();
    const double order = static_cast<double>(action_->group().order());
    orbit_of_label_.assign(md.size(), orbits_.size());
    for (std::size_t o = 0; o < orbits_.size(); o++) {
        const auto &orb = orbits_[o];
        for (std::size_t m : orb.members) {
            orbit_of_label_.at(m) = o;
        }
        double index = order / static_cast<double>(orb.stabilizer.order());
        for (std::size_t c = 0; c < orb.characters.size(); c++) {
            CatalogEntry e;
            e.label = TypeOneLabel{orb.representative, c};
            e.orbit = o;
            e.dim = orb.characters.dim(c);
            e.qdim = index * static_cast<double>(e.dim) * qdim(md, orb.representative);
            e.name = md.label(orb.representative) + ":" + orb.characters.character(c).name;
            entries_.push_back(std::move(e));
        }
    }
    for (std::size_t m = 0; m < orbit_of_label_.size(); m++) {
        if (orbit_of_label_[m] == orbits_.size()) {
            throw StructuralError("label " + md.label(m) + " belongs to no orbit");
        }
    }
}

std::size_t TypeOneCatalog::entry_index(const TypeOneLabel &label) const {
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), label, [](const CatalogEntry &e, const TypeOneLabel &l) { return e.label < l; });
    if (it == entries_.end() || it->label != label) {
        throw StructuralError(
            "(" + std::to_string(label.orbit_rep) + ", " + std::to_string(label.character) +
            ") is not a catalog entry");
    }
    return static_cast<std::size_t>(it - entries_.begin());
}

TypeOneLabel TypeOneCatalog::vacuum_label() const {
    const auto &orb = orbit_of(ModularDatum::vacuum());
    return TypeOneLabel{orb.representative, orb.characters.trivial_index()};
}

TypeOneCatalog build_catalog(std::shared_ptr<const ModuleAction> action, const TableSet &tables) {
    if (action == nullptr) {
        throw StructuralError("catalog needs an action");
    }
    if (!(tables.parent() == action->group())) {
        throw StructuralError("character tables belong to a different group");
    }
    std::vector<CatalogOrbit> out;
    for (const auto &orb : orbits(*action)) {
        Subgroup stab = stabilizer(*action, orb.representative);
        CharacterTable table = tables.table_for(stab);
        auto report = validate_table(table, action->datum().tolerance());
        if (const Check *bad = report.first_failure()) {
            throw StructuralError(
                "character table for the stabilizer of " + action->datum().label(orb.representative) +
                " is invalid (" + bad->name + "): " + bad->detail);
        }
        std::int64_t square_sum = 0;
        for (std::size_t c = 0; c < table.size(); c++) {
            square_sum += table.dim(c) * table.dim(c);
        }
        if (square_sum != static_cast<std::int64_t>(stab.order())) {
            throw StructuralError(
                "character dimensions for the stabilizer of " + action->datum().label(orb.representative) +
                " do not square-sum to its order");
        }
        out.push_back(CatalogOrbit{orb.representative, orb.members, std::move(stab), std::move(table)});
    }
    return TypeOneCatalog(std::move(action), std::move(out));
}

std::size_t type_one_count(std::shared_ptr<const ModuleAction> action, const TableSet &tables) {
    return build_catalog(std::move(action), tables).size();
}

namespace {

Complex orbit_s_sum(const TypeOneCatalog &cat, std::size_t m, std::size_t orbit) {
    Complex sum = 0.0;
    for (std::size_t n : cat.orbits()[orbit].members) {
        sum += cat.datum().s(m, n);
    }
    return sum;
}

}  // namespace

Complex extended_s_entry(const TypeOneCatalog &cat, const TypeOneLabel &a, const TypeOneLabel &b) {
    const auto &ea = cat.entry(a);
    const auto &eb = cat.entry(b);
    double stab = static_cast<double>(cat.orbits()[ea.orbit].stabilizer.order());
    return static_cast<double>(ea.dim) / stab * static_cast<double>(eb.dim) * orbit_s_sum(cat, a.orbit_rep, eb.orbit);
}

Complex module_s_vector(const TypeOneCatalog &cat, std::size_t m, const TypeOneLabel &b) {
    if (m >= cat.datum().size()) {
        throw StructuralError("unknown label index " + std::to_string(m));
    }
    const auto &eb = cat.entry(b);
    return static_cast<double>(eb.dim) * orbit_s_sum(cat, m, eb.orbit);
}

ComplexMatrix extended_s_block(const TypeOneCatalog &cat) {
    ComplexMatrix out(cat.size());
    for (std::size_t i = 0; i < cat.size(); i++) {
        for (std::size_t j = 0; j < cat.size(); j++) {
            out.set(i, j, extended_s_entry(cat, cat.entries()[i].label, cat.entries()[j].label));
        }
    }
    return out;
}

ValidationReport module_s_consistency_check(const TypeOneCatalog &cat) {
    ValidationReport report;
    report.subject = "module_s";
    double dev = 0.0;
    std::string witness;
    for (std::size_t m = 0; m < cat.datum().size(); m++) {
        const auto &orb = cat.orbit_of(m);
        for (const auto &eb : cat.entries()) {
            // Entries are indexed by orbit representatives; S-invariance makes
            // the sum over lambda independent of which member m is.
            Complex decomposed = 0.0;
            for (std::size_t c = 0; c < orb.characters.size(); c++) {
                decomposed += static_cast<double>(orb.characters.dim(c)) *
                              extended_s_entry(cat, TypeOneLabel{orb.representative, c}, eb.label);
            }
            double d = std::abs(decomposed - module_s_vector(cat, m, eb.label));
            if (d > dev) {
                dev = d;
                if (d > cat.tolerance() && witness.empty()) {
                    witness = "M=" + cat.datum().label(m) + ", b=" + eb.name;
                }
            }
        }
    }
    report.add("decomposes_through_entries", dev <= cat.tolerance(), dev, witness);
    return report;
}

ValidationReport proportionality_check(const TypeOneCatalog &cat) {
    ValidationReport report;
    report.subject = "proportionality";
    double dev = 0.0;
    std::string witness;
    std::size_t pairs = 0;
    for (const auto &orb : cat.orbits()) {
        for (std::size_t l1 = 0; l1 < orb.characters.size(); l1++) {
            for (std::size_t l2 = l1 + 1; l2 < orb.characters.size(); l2++) {
                TypeOneLabel a1{orb.representative, l1};
                TypeOneLabel a2{orb.representative, l2};
                double q1 = cat.entry(a1).qdim;
                double q2 = cat.entry(a2).qdim;
                for (const auto &e : cat.entries()) {
                    pairs++;
                    Complex r1 = extended_s_entry(cat, a1, e.label) / q1;
                    Complex r2 = extended_s_entry(cat, a2, e.label) / q2;
                    double d = std::abs(r1 - r2);
                    if (d > dev) {
                        dev = d;
                        if (d > cat.tolerance() && witness.empty()) {
                            witness = cat.entry(a1).name + " vs " + cat.entry(a2).name + " at " + e.name;
                        }
                    }
                }
            }
        }
    }
    if (pairs == 0) {
        report.add("ratio_independent_of_character", true, 0.0, "no orbit has two characters");
    } else {
        report.add("ratio_independent_of_character", dev <= cat.tolerance(), dev, witness);
    }
    return report;
}

ValidationReport vacuum_scaling_check(const TypeOneCatalog &cat) {
    ValidationReport report;
    report.subject = "vacuum_scaling";
    const auto &md = cat.datum();
    const double order = static_cast<double>(cat.group().order());
    const TypeOneLabel vac = cat.vacuum_label();

    double dev_scaling = 0.0;
    double dev_closed = 0.0;
    std::string w_scaling;
    std::string w_closed;
    for (const auto &e : cat.entries()) {
        Complex lhs = module_s_vector(cat, ModularDatum::vacuum(), e.label);
        Complex scaled = order * extended_s_entry(cat, vac, e.label);
        double d = std::abs(lhs - scaled);
        if (d > dev_scaling) {
            dev_scaling = d;
            if (d > cat.tolerance() && w_scaling.empty()) {
                w_scaling = "b=" + e.name;
            }
        }
        const auto &orb = cat.orbits()[e.orbit];
        Complex closed = static_cast<double>(e.dim) * order * md.s(ModularDatum::vacuum(), orb.representative) /
                         static_cast<double>(orb.stabilizer.order());
        d = std::abs(lhs - closed);
        if (d > dev_closed) {
            dev_closed = d;
            if (d > cat.tolerance() && w_closed.empty()) {
                w_closed = "b=" + e.name;
            }
        }
    }
    report.add("vacuum_row_scales_by_order", dev_scaling <= cat.tolerance(), dev_scaling, w_scaling);
    report.add("vacuum_row_closed_form", dev_closed <= cat.tolerance(), dev_closed, w_closed);
    return report;
}

ValidationReport qdim_relations_check(const TypeOneCatalog &cat) {
    ValidationReport report;
    report.subject = "qdim";
    const auto &md = cat.datum();
    const double order = static_cast<double>(cat.group().order());

    double dev = 0.0;
    std::string witness;
    for (std::size_t m = 0; m < md.size(); m++) {
        const auto &orb = cat.orbit_of(m);
        double sum = 0.0;
        for (std::size_t c = 0; c < orb.characters.size(); c++) {
            sum += static_cast<double>(orb.characters.dim(c)) * cat.entry(TypeOneLabel{orb.representative, c}).qdim;
        }
        double d = std::abs(sum - order * qdim(md, m));
        if (d > dev) {
            dev = d;
            if (d > cat.tolerance() && witness.empty()) {
                witness = "M=" + md.label(m);
            }
        }
    }
    report.add("weighted_sum_is_order_times_qdim", dev <= cat.tolerance(), dev, witness);

    double squares = 0.0;
    for (const auto &e : cat.entries()) {
        squares += e.qdim * e.qdim;
    }
    double expected = order * global_dimension(md);
    double d = std::abs(squares - expected);
    report.add(
        "type_one_global_share",
        d <= cat.tolerance() * std::max(1.0, expected),
        d,
        "sum qdim^2 = " + format_number(squares) + ", |G| glob = " + format_number(expected));
    return report;
}

std::int64_t inner_product_modules(const TypeOneCatalog &cat, std::size_t m, std::size_t n) {
    if (m >= cat.datum().size() || n >= cat.datum().size()) {
        throw StructuralError("unknown label index");
    }
    if (cat.orbit_index_of(m) != cat.orbit_index_of(n)) {
        return 0;
    }
    const auto &orb = cat.orbit_of(m);
    std::int64_t sum = 0;
    for (std::size_t c = 0; c < orb.characters.size(); c++) {
        sum += orb.characters.dim(c) * orb.characters.dim(c);
    }
    return sum;
}

}  // namespace fusionkit
