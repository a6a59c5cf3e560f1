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

#include "fusionkit/group_action.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace fusionkit {

ModuleAction::ModuleAction(
    FiniteGroup group, std::shared_ptr<const ModularDatum> datum, std::vector<std::vector<std::size_t>> images)
    : group_(std::move(group)), datum_(std::move(datum)), images_(std::move(images)) {
    if (datum_ == nullptr) {
        throw StructuralError("module action needs a modular datum");
    }
    if (images_.size() != group_.order()) {
        throw StructuralError(
            "action lists " + std::to_string(images_.size()) + " permutations for a group of order " +
            std::to_string(group_.order()));
    }
    for (std::size_t g = 0; g < images_.size(); g++) {
        if (images_[g].size() != datum_->size()) {
            throw StructuralError("permutation for " + group_.name(g) + " has the wrong length");
        }
        for (std::size_t m : images_[g]) {
            if (m >= datum_->size()) {
                throw StructuralError("permutation for " + group_.name(g) + " maps outside the label set");
            }
        }
    }
}

ModuleAction ModuleAction::trivial(FiniteGroup group, std::shared_ptr<const ModularDatum> datum) {
    std::vector<std::size_t> id(datum->size());
    for (std::size_t m = 0; m < id.size(); m++) {
        id[m] = m;
    }
    std::vector<std::vector<std::size_t>> images(group.order(), id);
    return ModuleAction(std::move(group), std::move(datum), std::move(images));
}

ModuleAction ModuleAction::from_generators(
    FiniteGroup group,
    std::shared_ptr<const ModularDatum> datum,
    const std::map<std::size_t, std::vector<std::size_t>> &given) {
    const std::size_t order = group.order();
    const std::size_t n = datum->size();
    std::vector<std::optional<std::vector<std::size_t>>> known(order);
    for (const auto &[g, p] : given) {
        if (g >= order) {
            throw StructuralError("permutation given for an unknown group element");
        }
        if (p.size() != n) {
            throw StructuralError("permutation for " + group.name(g) + " has the wrong length");
        }
        known[g] = p;
    }
    if (!known[group.identity()]) {
        std::vector<std::size_t> id(n);
        for (std::size_t m = 0; m < n; m++) {
            id[m] = m;
        }
        known[group.identity()] = id;
    }
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t a = 0; a < order; a++) {
            if (!known[a]) {
                continue;
            }
            for (std::size_t b = 0; b < order; b++) {
                if (!known[b]) {
                    continue;
                }
                std::size_t ab = group.mul(a, b);
                if (known[ab]) {
                    continue;
                }
                std::vector<std::size_t> composed(n);
                for (std::size_t m = 0; m < n; m++) {
                    std::size_t mid = (*known[a])[m];
                    if (mid >= n) {
                        throw StructuralError("permutation for " + group.name(a) + " maps outside the label set");
                    }
                    composed[m] = (*known[b])[mid];
                }
                known[ab] = std::move(composed);
                grew = true;
            }
        }
    }
    std::vector<std::vector<std::size_t>> images;
    for (std::size_t g = 0; g < order; g++) {
        if (!known[g]) {
            throw StructuralError(
                "permutations do not determine the action of " + group.name(g) + "; list a generating set");
        }
        images.push_back(std::move(*known[g]));
    }
    return ModuleAction(std::move(group), std::move(datum), std::move(images));
}

ValidationReport validate_action(const ModuleAction &act, const FusionTensor *fusion) {
    ValidationReport report;
    report.subject = "action";
    const auto &G = act.group();
    const auto &md = act.datum();
    const std::size_t n = md.size();
    auto lbl = [&](std::size_t m) { return md.label(m); };

    std::string witness;
    for (std::size_t g = 0; g < G.order() && witness.empty(); g++) {
        std::vector<bool> hit(n, false);
        for (std::size_t m = 0; m < n; m++) {
            std::size_t img = act.apply(g, m);
            if (hit[img]) {
                witness = "g=" + G.name(g) + " sends two labels to " + lbl(img);
                break;
            }
            hit[img] = true;
        }
    }
    report.add("bijective", witness.empty(), 0.0, witness);
    const bool bijective = witness.empty();
    witness.clear();

    for (std::size_t m = 0; m < n; m++) {
        if (act.apply(G.identity(), m) != m) {
            witness = "identity moves M=" + lbl(m);
            break;
        }
    }
    report.add("identity_acts_trivially", witness.empty(), 0.0, witness);
    witness.clear();

    for (std::size_t g = 0; g < G.order() && witness.empty(); g++) {
        for (std::size_t h = 0; h < G.order() && witness.empty(); h++) {
            for (std::size_t m = 0; m < n; m++) {
                if (act.apply(G.mul(g, h), m) != act.apply(h, act.apply(g, m))) {
                    witness = "g=" + G.name(g) + ", h=" + G.name(h) + ", M=" + lbl(m) + ": M.(gh) != (M.g).h";
                    break;
                }
            }
        }
    }
    report.add("right_action", witness.empty(), 0.0, witness);
    witness.clear();

    for (std::size_t g = 0; g < G.order(); g++) {
        if (act.apply(g, 0) != 0) {
            witness = "g=" + G.name(g) + " sends the vacuum to " + lbl(act.apply(g, 0));
            break;
        }
    }
    report.add("vacuum_fixed", witness.empty(), 0.0, witness);
    witness.clear();

    double dev = 0.0;
    for (std::size_t g = 0; g < G.order(); g++) {
        for (std::size_t a = 0; a < n; a++) {
            for (std::size_t b = 0; b < n; b++) {
                double d = std::abs(md.s(act.apply(g, a), act.apply(g, b)) - md.s(a, b));
                if (d > dev) {
                    dev = d;
                    if (d > md.tolerance()) {
                        witness = "g=" + G.name(g) + ", M=" + lbl(a) + ", W=" + lbl(b) + ": S[M.g,W.g] != S[M,W]";
                    }
                }
            }
        }
    }
    report.add("s_invariant", witness.empty(), dev, witness);
    witness.clear();

    FusionTensor computed;
    if (fusion == nullptr) {
        try {
            computed = verlinde_fusion(md);
            fusion = &computed;
        } catch (const MathError &e) {
            report.add_inapplicable("fusion_invariant", std::string("no fusion tensor: ") + e.what());
            return report;
        }
    }
    if (!bijective) {
        report.add_inapplicable("fusion_invariant", "action is not a permutation");
        return report;
    }
    for (std::size_t g = 0; g < G.order() && witness.empty(); g++) {
        for (std::size_t a = 0; a < n && witness.empty(); a++) {
            for (std::size_t b = 0; b < n && witness.empty(); b++) {
                for (std::size_t c = 0; c < n; c++) {
                    if (fusion->at(act.apply(g, a), act.apply(g, b), act.apply(g, c)) != fusion->at(a, b, c)) {
                        witness = "g=" + G.name(g) + ", M=" + lbl(a) + ", W=" + lbl(b) + ", F=" + lbl(c);
                        break;
                    }
                }
            }
        }
    }
    report.add("fusion_invariant", witness.empty(), 0.0, witness);
    return report;
}

std::vector<std::size_t> orbit(const ModuleAction &act, std::size_t m) {
    if (m >= act.label_count()) {
        throw StructuralError("unknown label index " + std::to_string(m));
    }
    std::vector<std::size_t> out;
    for (std::size_t g = 0; g < act.group().order(); g++) {
        out.push_back(act.apply(g, m));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Subgroup stabilizer(const ModuleAction &act, std::size_t m) {
    if (m >= act.label_count()) {
        throw StructuralError("unknown label index " + std::to_string(m));
    }
    std::vector<std::size_t> fixing;
    for (std::size_t g = 0; g < act.group().order(); g++) {
        if (act.apply(g, m) == m) {
            fixing.push_back(g);
        }
    }
    return Subgroup::of(act.group(), std::move(fixing));
}

std::vector<Orbit> orbits(const ModuleAction &act) {
    std::vector<Orbit> out;
    std::vector<bool> seen(act.label_count(), false);
    for (std::size_t m = 0; m < act.label_count(); m++) {
        if (seen[m]) {
            continue;
        }
        auto members = orbit(act, m);
        for (std::size_t x : members) {
            seen[x] = true;
        }
        out.push_back(Orbit{members.front(), std::move(members)});
    }
    return out;
}

std::size_t stable_count(const ModuleAction &act, std::size_t g) {
    if (g >= act.group().order()) {
        throw StructuralError("unknown group element index " + std::to_string(g));
    }
    std::size_t count = 0;
    for (std::size_t m = 0; m < act.label_count(); m++) {
        count += act.apply(g, m) == m ? 1 : 0;
    }
    return count;
}

ValidationReport burnside_check(const ModuleAction &act) {
    ValidationReport report;
    report.subject = "burnside";
    const auto &G = act.group();
    const long long order = static_cast<long long>(G.order());
    const long long n = static_cast<long long>(act.label_count());
    const long long l = static_cast<long long>(orbits(act).size());

    long long fixed_total = 0;
    long long nontrivial_total = 0;
    for (std::size_t g = 0; g < G.order(); g++) {
        long long c = static_cast<long long>(stable_count(act, g));
        fixed_total += c;
        if (g != G.identity()) {
            nontrivial_total += c;
        }
    }
    long long stabilizer_total = 0;
    for (std::size_t m = 0; m < act.label_count(); m++) {
        stabilizer_total += static_cast<long long>(stabilizer(act, m).order());
    }
    auto eq = [](long long a, long long b) { return std::to_string(a) + " vs " + std::to_string(b); };
    report.add("fixed_points_equal_stabilizers", fixed_total == stabilizer_total, 0.0, eq(fixed_total, stabilizer_total));
    report.add("fixed_points_equal_orbits_times_order", fixed_total == l * order, 0.0, eq(fixed_total, l * order));
    report.add("nontrivial_fixed_points", nontrivial_total == l * order - n, 0.0, eq(nontrivial_total, l * order - n));
    return report;
}

TwistedStabilizerReport twisted_stabilizer_checker(const ModuleAction &act) {
    TwistedStabilizerReport r;
    const auto &G = act.group();
    r.group_order = G.order();
    r.label_count = act.label_count();
    r.orbit_count = orbits(act).size();

    if (!G.is_cyclic()) {
        r.reason = "group is not cyclic";
        return r;
    }
    for (std::size_t m = 0; m < act.label_count(); m++) {
        std::size_t s = stabilizer(act, m).order();
        if (s == G.order()) {
            r.full_stabilizer_modules++;
        } else if (s == 1) {
            r.trivial_stabilizer_modules++;
        } else {
            r.reason = "module " + act.datum().label(m) + " has a stabilizer of order " + std::to_string(s) +
                       ", neither G nor trivial";
            return r;
        }
    }
    // Order-1 groups count every label as both full and trivial; keep the
    // full count so p + q = n.
    if (G.order() == 1) {
        r.trivial_stabilizer_modules = 0;
    }
    r.applicable = true;

    const long long order = static_cast<long long>(G.order());
    const long long p = static_cast<long long>(r.full_stabilizer_modules);
    const long long q = static_cast<long long>(r.trivial_stabilizer_modules);
    const long long l = static_cast<long long>(r.orbit_count);
    const long long n = static_cast<long long>(r.label_count);
    for (std::size_t g = 0; g < G.order(); g++) {
        if (g != G.identity()) {
            r.twisted_module_total += static_cast<long long>(stable_count(act, g));
        }
    }
    // Type-one count p|Irr(G)| + q/|G| minus the untwisted orbits.
    r.twisted_orbit_count = p * order + q / order - l;
    r.burnside_form = l * order - n;
    r.identity_holds = q % order == 0 && r.twisted_module_total == r.twisted_orbit_count &&
                       r.twisted_orbit_count == r.burnside_form;
    return r;
}

ValidationReport TwistedStabilizerReport::to_report() const {
    ValidationReport report;
    report.subject = "twisted_stabilizer";
    if (!applicable) {
        report.add_inapplicable("full_twisted_stabilizers", reason);
        return report;
    }
    report.add(
        "full_twisted_stabilizers",
        identity_holds,
        0.0,
        "sum_{g!=e}|M(g)| = " + std::to_string(twisted_module_total) + ", p|G|+q/|G|-l = " +
            std::to_string(twisted_orbit_count) + ", l|G|-n = " + std::to_string(burnside_form) +
            (identity_holds ? "; every twisted module has stabilizer G" : ""));
    return report;
}

}  // namespace fusionkit
