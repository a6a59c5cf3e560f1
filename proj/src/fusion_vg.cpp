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

#include "fusionkit/fusion_vg.hpp"

#include <algorithm>
#include <cmath>

namespace fusionkit {

namespace {

void check_label(const ModuleAction &act, std::size_t m) {
    if (m >= act.label_count()) {
        throw StructuralError("unknown label index " + std::to_string(m));
    }
}

double to_double(const Rational &r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace

FormalModuleSum fuse_over_fixed_points(
    const ModuleAction &act, const FusionTensor &fusion, std::size_t m, std::size_t n) {
    check_label(act, m);
    check_label(act, n);
    FormalModuleSum out;
    for (std::size_t g = 0; g < act.group().order(); g++) {
        std::size_t ng = act.apply(g, n);
        for (std::size_t k = 0; k < fusion.size(); k++) {
            if (std::int64_t c = fusion.at(m, ng, k); c != 0) {
                out.add(k, c);
            }
        }
    }
    return out;
}

ValidationReport v_regular_check(const ModuleAction &act, const FusionTensor &fusion) {
    ValidationReport report;
    report.subject = "vacuum_fusion";
    const auto order = static_cast<std::int64_t>(act.group().order());
    std::string witness;
    for (std::size_t m = 0; m < act.label_count() && witness.empty(); m++) {
        FormalModuleSum expected;
        for (std::size_t g = 0; g < act.group().order(); g++) {
            expected.add(act.apply(g, m));
        }
        if (!(fuse_over_fixed_points(act, fusion, ModularDatum::vacuum(), m) == expected)) {
            witness = "M=" + act.datum().label(m);
        }
    }
    report.add("vacuum_gives_orbit_sum", witness.empty(), 0.0, witness);
    bool vacuum_ok =
        fuse_over_fixed_points(act, fusion, ModularDatum::vacuum(), ModularDatum::vacuum()) ==
        FormalModuleSum::single(ModularDatum::vacuum(), order);
    report.add("vacuum_squared_is_order_times_vacuum", vacuum_ok, 0.0, vacuum_ok ? "" : "V x V != |G| V");
    return report;
}

PairCount pair_counting(const ModuleAction &act, const FusionTensor &fusion, std::size_t m, std::size_t n, std::size_t f) {
    check_label(act, m);
    check_label(act, n);
    check_label(act, f);
    const std::size_t order = act.group().order();
    PairCount out;
    out.group_order = order;
    for (std::size_t g = 0; g < order; g++) {
        for (std::size_t h = 0; h < order; h++) {
            out.pair += fusion.at(m, act.apply(g, n), act.apply(h, f));
            for (std::size_t l = 0; l < order; l++) {
                out.triple += fusion.at(act.apply(l, m), act.apply(g, n), act.apply(h, f));
            }
        }
    }
    return out;
}

Rational aggregate_fusion(
    const TypeOneCatalog &cat, const FusionTensor &fusion, const TypeOneLabel &a, const TypeOneLabel &b, std::size_t f) {
    const auto &ea = cat.entry(a);
    const auto &eb = cat.entry(b);
    auto count = pair_counting(cat.action(), fusion, a.orbit_rep, b.orbit_rep, f);
    auto stab_a = static_cast<std::int64_t>(cat.orbits()[ea.orbit].stabilizer.order());
    auto stab_b = static_cast<std::int64_t>(cat.orbits()[eb.orbit].stabilizer.order());
    Rational out = Rational(ea.dim * eb.dim, stab_a * stab_b) * count.pair;
    if (out.numerator() < 0) {
        throw MathError("aggregate fusion for " + ea.name + " x " + eb.name + " is negative");
    }
    return out;
}

Complex aggregate_fusion_s_route(const TypeOneCatalog &cat, const TypeOneLabel &a, const TypeOneLabel &b, std::size_t f) {
    if (f >= cat.datum().size()) {
        throw StructuralError("unknown label index " + std::to_string(f));
    }
    const TypeOneLabel vac = cat.vacuum_label();
    Complex sum = 0.0;
    for (const auto &e : cat.entries()) {
        Complex denom = extended_s_entry(cat, vac, e.label);
        sum += extended_s_entry(cat, a, e.label) * extended_s_entry(cat, b, e.label) / denom *
               std::conj(module_s_vector(cat, f, e.label));
    }
    return sum;
}

ValidationReport aggregate_identity_check(const TypeOneCatalog &cat, const FusionTensor &fusion) {
    ValidationReport report;
    report.subject = "aggregate";
    const auto &md = cat.datum();
    const double order = static_cast<double>(cat.group().order());
    std::string w_pair;
    std::string w_qdim;
    std::string w_s;
    double dev_qdim = 0.0;
    double dev_s = 0.0;
    for (const auto &ea : cat.entries()) {
        for (const auto &eb : cat.entries()) {
            for (std::size_t f = 0; f < md.size(); f++) {
                std::string where = ea.name + " x " + eb.name + " -> " + md.label(f);
                auto count = pair_counting(cat.action(), fusion, ea.label.orbit_rep, eb.label.orbit_rep, f);
                if (!count.consistent() && w_pair.empty()) {
                    w_pair = where;
                }
                double agg = to_double(aggregate_fusion(cat, fusion, ea.label, eb.label, f));
                double stab_a = static_cast<double>(cat.orbits()[ea.orbit].stabilizer.order());
                double stab_b = static_cast<double>(cat.orbits()[eb.orbit].stabilizer.order());
                double stab_f = static_cast<double>(cat.orbit_of(f).stabilizer.order());
                double lhs = agg * qdim(md, f) * order / stab_f;
                double rhs = static_cast<double>(ea.dim * eb.dim) / (stab_a * stab_b) * qdim(md, f) / stab_f *
                             static_cast<double>(count.triple);
                double d = std::abs(lhs - rhs);
                if (d > dev_qdim) {
                    dev_qdim = d;
                    if (d > cat.tolerance() && w_qdim.empty()) {
                        w_qdim = where;
                    }
                }
                d = std::abs(aggregate_fusion_s_route(cat, ea.label, eb.label, f) - agg);
                if (d > dev_s) {
                    dev_s = d;
                    if (d > cat.tolerance() && w_s.empty()) {
                        w_s = where;
                    }
                }
            }
        }
    }
    report.add("triple_sum_is_order_times_pair_sum", w_pair.empty(), 0.0, w_pair);
    report.add("quantum_dimension_form", dev_qdim <= cat.tolerance(), dev_qdim, w_qdim);
    report.add("matches_s_matrix_route", dev_s <= cat.tolerance(), dev_s, w_s);
    return report;
}

ValidationReport proportional_distribution_check(
    const TypeOneCatalog &cat, const FusionTensor &fusion, std::size_t m, std::size_t n, std::size_t f) {
    ValidationReport report;
    report.subject = "proportional_distribution";
    check_label(cat.action(), m);
    check_label(cat.action(), n);
    check_label(cat.action(), f);
    const auto &om = cat.orbit_of(m);
    const auto &on = cat.orbit_of(n);
    std::vector<TypeOneLabel> as;
    std::vector<TypeOneLabel> bs;
    for (std::size_t c = 0; c < om.characters.size(); c++) {
        as.push_back(TypeOneLabel{om.representative, c});
    }
    for (std::size_t c = 0; c < on.characters.size(); c++) {
        bs.push_back(TypeOneLabel{on.representative, c});
    }
    struct Point {
        std::string name;
        double aggregate;
        double weight;
    };
    std::vector<Point> points;
    for (const auto &a : as) {
        for (const auto &b : bs) {
            const auto &ea = cat.entry(a);
            const auto &eb = cat.entry(b);
            points.push_back(
                {ea.name + " x " + eb.name, to_double(aggregate_fusion(cat, fusion, a, b, f)), ea.qdim * eb.qdim});
        }
    }
    // Cross-multiplied so a zero aggregate needs no special case.
    double dev = 0.0;
    std::string witness;
    for (std::size_t i = 0; i < points.size(); i++) {
        for (std::size_t j = i + 1; j < points.size(); j++) {
            double d = std::abs(points[i].aggregate * points[j].weight - points[j].aggregate * points[i].weight);
            if (d > dev) {
                dev = d;
                if (d > cat.tolerance() && witness.empty()) {
                    witness = points[i].name + " vs " + points[j].name + " -> " + cat.datum().label(f);
                }
            }
        }
    }
    report.add("ratios_match_qdim_products", dev <= cat.tolerance(), dev, witness);
    return report;
}

namespace {

/// Values of a stabilizer character on the acting subgroup. A character of a
/// stabilizer that does not contain the acting subgroup can only enter
/// through its trivial slice.
ClassFunction on_acting_subgroup(const CatalogOrbit &orb, std::size_t character, const Subgroup &acting) {
    const auto &values = orb.characters.character(character).values;
    if (acting.is_subset_of(orb.stabilizer)) {
        ClassFunction out;
        for (std::size_t d : acting.elements()) {
            out.push_back(values[orb.stabilizer.position_of(d)]);
        }
        return out;
    }
    if (character != orb.characters.trivial_index()) {
        throw StructuralError(
            "character '" + orb.characters.character(character).name +
            "' lives on a stabilizer that does not contain the acting subgroup; only its trivial character is "
            "supported");
    }
    return ClassFunction(acting.order(), Complex(1.0, 0.0));
}

}  // namespace

ResolvedFusion resolve_fusion_unchecked(
    const TypeOneCatalog &cat,
    const FusionTensor &fusion,
    const TableSet &tables,
    const TypeOneLabel &a,
    const TypeOneLabel &b,
    std::size_t f,
    const IntertwinerActionData &data) {
    const auto &act = cat.action();
    const auto &G = cat.group();
    const auto &md = cat.datum();
    check_label(act, f);
    const auto &ea = cat.entry(a);
    const auto &eb = cat.entry(b);
    for (std::size_t x : data.triple) {
        check_label(act, x);
    }
    if (cat.orbit_index_of(data.triple[0]) != ea.orbit || cat.orbit_index_of(data.triple[1]) != eb.orbit ||
        cat.orbit_index_of(data.triple[2]) != cat.orbit_index_of(f)) {
        throw StructuralError(
            "intertwiner data for (" + md.label(data.triple[0]) + ", " + md.label(data.triple[1]) + ", " +
            md.label(data.triple[2]) + ") does not describe " + ea.name + " x " + eb.name + " -> " + md.label(f));
    }
    const Subgroup &acting = data.subgroup;
    const auto &orb_f = cat.orbit_of(f);
    Subgroup stab_f = stabilizer(act, f);
    if (!acting.is_subset_of(stab_f)) {
        throw StructuralError("acting subgroup is not contained in the stabilizer of " + md.label(f));
    }
    if (data.character.size() != acting.order()) {
        throw StructuralError("intertwiner character length does not match its subgroup");
    }
    if (data.inducing_subgroup && !data.inducing_subgroup->is_subset_of(acting)) {
        throw StructuralError("inducing subgroup is not contained in the acting subgroup");
    }

    ResolvedFusion out;
    for (std::size_t l1 : cat.orbits()[ea.orbit].members) {
        for (std::size_t l2 : cat.orbits()[eb.orbit].members) {
            for (std::size_t l3 : orb_f.members) {
                out.channel_count += fusion.at(l1, l2, l3);
            }
        }
    }
    out.character_at_identity = data.character[acting.position_of(G.identity())];
    out.aggregate = aggregate_fusion(cat, fusion, a, b, f);

    const FiniteGroup acting_group = acting.as_group(G);
    const Subgroup &source = data.inducing_subgroup ? *data.inducing_subgroup : acting;
    const CharacterTable table = tables.table_for(source);
    std::optional<Subgroup> source_in_acting;
    if (data.inducing_subgroup) {
        std::vector<std::size_t> positions;
        for (std::size_t s : source.elements()) {
            positions.push_back(acting.position_of(s));
        }
        source_in_acting = Subgroup::of(acting_group, std::move(positions));
    }

    ClassFunction lam = on_acting_subgroup(cat.orbits()[ea.orbit], a.character, acting);
    ClassFunction chi = on_acting_subgroup(cat.orbits()[eb.orbit], b.character, acting);
    ClassFunction weighted(acting.order());
    for (std::size_t i = 0; i < acting.order(); i++) {
        weighted[i] = data.character[i] * lam[i] * chi[i];
    }

    std::vector<ClassFunction> seen;
    for (std::size_t x = 0; x < table.size(); x++) {
        ClassFunction simple = source_in_acting ? induce(acting_group, *source_in_acting, table.character(x).values)
                                                : table.character(x).values;
        // Conjugate characters of the inducing subgroup induce the same simple
        // module; keep the first.
        bool duplicate = std::any_of(seen.begin(), seen.end(), [&](const ClassFunction &s) {
            for (std::size_t i = 0; i < s.size(); i++) {
                if (std::abs(s[i] - simple[i]) > cat.tolerance()) {
                    return false;
                }
            }
            return true;
        });
        if (duplicate) {
            continue;
        }
        seen.push_back(simple);
        ResolvedChannel ch;
        ch.name = table.character(x).name;
        ch.dim = std::llround(simple[acting_group.identity()].real());
        if (out.aggregate.numerator() == 0) {
            out.short_circuited = true;
        } else {
            ch.raw = inner_product(acting_group, weighted, simple);
            ch.multiplicity = std::llround(ch.raw.real());
        }
        out.channels.push_back(std::move(ch));
    }
    return out;
}

ValidationReport resolved_sum_rule_check(const ResolvedFusion &resolved) {
    ValidationReport report;
    report.subject = "resolved_fusion";
    if (resolved.short_circuited) {
        report.add_inapplicable("channel_count", "aggregate is zero");
    } else {
        double d = std::abs(resolved.character_at_identity - Complex(static_cast<double>(resolved.channel_count), 0.0));
        report.add(
            "channel_count",
            d <= kIntegralityTolerance,
            d,
            "character at identity " + format_number(resolved.character_at_identity.real()) + ", channel count " +
                std::to_string(resolved.channel_count));
    }

    double dev = 0.0;
    std::string witness;
    for (const auto &ch : resolved.channels) {
        double d = std::max(std::abs(ch.raw.real() - static_cast<double>(ch.multiplicity)), std::abs(ch.raw.imag()));
        if (d > dev) {
            dev = d;
        }
        if ((d > kIntegralityTolerance || ch.multiplicity < 0) && witness.empty()) {
            witness = "multiplicity of " + ch.name + " is " + format_number(ch.raw.real());
        }
    }
    report.add("nonnegative_integers", witness.empty(), dev, witness);

    Rational total = 0;
    for (const auto &ch : resolved.channels) {
        total += Rational(ch.multiplicity * ch.dim);
    }
    report.add(
        "sum_rule",
        total == resolved.aggregate,
        0.0,
        "sum of multiplicity * dim = " + format_rational(total) + ", aggregate = " +
            format_rational(resolved.aggregate));
    return report;
}

ResolvedFusion resolve_fusion(
    const TypeOneCatalog &cat,
    const FusionTensor &fusion,
    const TableSet &tables,
    const TypeOneLabel &a,
    const TypeOneLabel &b,
    std::size_t f,
    const IntertwinerActionData &data) {
    ResolvedFusion out = resolve_fusion_unchecked(cat, fusion, tables, a, b, f, data);
    auto report = resolved_sum_rule_check(out);
    if (const Check *bad = report.first_failure()) {
        throw MathError("inconsistent intertwiner data (" + bad->name + "): " + bad->detail);
    }
    return out;
}

}  // namespace fusionkit
