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

// Runs the nine acceptance criteria and prints one PASS/FAIL line for each.

#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fusionkit/cli.hpp"
#include "fusionkit/fixtures.hpp"
#include "fusionkit/fusion_vg.hpp"
#include "fusionkit/group_action.hpp"
#include "fusionkit/modular_data.hpp"
#include "fusionkit/orbifold.hpp"
#include "fusionkit/unitary_space.hpp"
#include "loaded_fixture.hpp"
#include "oracle.hpp"
#include "random_pointed.hpp"

namespace fk = fusionkit;
namespace fx = fusionkit::fixtures;
using testing_support::load_fixture;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool condition, const std::string &what) {
        if (!condition && pass) {
            pass = false;
            detail = what;
        }
    }
};

std::vector<std::pair<std::string, fk::ModularDatum>> criterion_one_data() {
    std::vector<std::pair<std::string, fk::ModularDatum>> out;
    out.emplace_back("single", fx::single());
    for (int n = 1; n <= 8; n++) {
        for (int c = 0; c < n; c++) {
            if (std::gcd(n, c) == 1) {
                out.emplace_back("z" + std::to_string(n) + "_c" + std::to_string(c), fx::pointed(n, c));
            }
        }
    }
    out.emplace_back("ising", fx::ising());
    for (int k = 1; k <= 6; k++) {
        out.emplace_back("su2_k" + std::to_string(k), fx::su2(k));
    }
    return out;
}

std::vector<std::pair<std::string, fk::ModularDatum>> all_data() {
    auto out = criterion_one_data();
    for (const auto &name : testing_support::fixture_names()) {
        out.emplace_back("fixture " + name, *load_fixture(name).datum);
    }
    return out;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

Outcome verlinde_integrality() {
    Outcome o;
    double worst = 0.0;
    std::size_t data = 0;
    for (const auto &[name, md] : criterion_one_data()) {
        data++;
        auto raw = fk::verlinde_raw(md);
        auto direct = oracle::verlinde(testing_support::s_rows(md));
        const std::size_t n = md.size();
        for (std::size_t i = 0; i < n; i++) {
            for (std::size_t j = 0; j < n; j++) {
                for (std::size_t k = 0; k < n; k++) {
                    fk::Complex v = raw[(i * n + j) * n + k];
                    double rounded = std::round(v.real());
                    double d = std::max(std::abs(v.real() - rounded), std::abs(v.imag()));
                    worst = std::max(worst, d);
                    o.require(d <= 1e-6 && rounded >= 0.0, name + ": non-integral Verlinde value");
                    o.require(std::abs(direct[i][j][k] - v.real()) <= 1e-9, name + ": disagrees with the direct sum");
                }
            }
        }
    }
    auto ising = fx::ising();
    auto fusion = fk::verlinde_fusion(ising);
    const std::size_t sigma = ising.index_of("sigma");
    o.require(fusion.at(sigma, sigma, ising.index_of("1")) == 1, "Ising sigma x sigma misses the vacuum");
    o.require(fusion.at(sigma, sigma, ising.index_of("psi")) == 1, "Ising sigma x sigma misses psi");
    o.require(fusion.at(sigma, sigma, sigma) == 0, "Ising sigma x sigma contains sigma");
    if (o.pass) {
        o.detail = std::to_string(data) + " data, worst distance to an integer " + fmt(worst) +
                   "; Ising sigma x sigma = 1 + psi";
    }
    return o;
}

Outcome s_axioms() {
    Outcome o;
    double worst = 0.0;
    std::size_t data = 0;
    for (const auto &[name, md] : all_data()) {
        data++;
        auto report = fk::validate(md);
        for (const char *check : {"symmetric", "unitary"}) {
            const auto *c = report.find(check);
            o.require(c != nullptr && c->status == fk::CheckStatus::pass && c->deviation < 1e-9, name + ": " + check);
            if (c != nullptr) {
                worst = std::max(worst, c->deviation);
            }
        }
        o.require(report.find("s_squared_permutation")->status == fk::CheckStatus::pass, name + ": S^2");
        auto identity = fk::fusion_s_identity_check(md, fk::verlinde_fusion(md));
        o.require(identity.ok() && identity.checks.at(0).deviation < 1e-9, name + ": fusion/S identity");
        worst = std::max(worst, identity.checks.at(0).deviation);
    }
    if (o.pass) {
        o.detail = std::to_string(data) + " data, worst deviation " + fmt(worst);
    }
    return o;
}

Outcome action_compatibility() {
    Outcome o;
    auto loaded = load_fixture("z2_on_z4");
    o.require(fk::validate_action(*loaded.action, &loaded.fusion).ok(), "inversion on Z4 rejected");
    fk::ModuleAction corrupted(loaded.action->group(), loaded.datum, {{0, 1, 2, 3}, {0, 2, 1, 3}});
    auto report = fk::validate_action(corrupted, &loaded.fusion);
    const auto *bad = report.first_failure();
    o.require(bad != nullptr, "corrupted permutation accepted");
    o.require(bad != nullptr && !bad->detail.empty(), "corrupted permutation failed without a witness");
    if (o.pass) {
        o.detail = "inversion accepted; (1 2) rejected by " + bad->name + " (" + bad->detail + ")";
    }
    return o;
}

Outcome counting_suite() {
    Outcome o;
    auto z4 = load_fixture("z2_on_z4");
    const auto &act = *z4.action;
    std::size_t stable_total = 0;
    std::size_t stabilizer_total = 0;
    for (std::size_t g = 0; g < act.group().order(); g++) {
        stable_total += fk::stable_count(act, g);
    }
    for (std::size_t m = 0; m < act.label_count(); m++) {
        stabilizer_total += fk::stabilizer(act, m).order();
    }
    const std::size_t orbit_count = fk::orbits(act).size();
    const std::size_t type_one = fk::type_one_count(z4.action, *z4.tables);
    auto annihilator = fk::annihilator_dimension_report(z4.catalog());
    auto ising = fk::annihilator_dimension_report(load_fixture("trivial_z2_on_ising").catalog());
    o.require(orbit_count == 3, "orbit count " + std::to_string(orbit_count));
    o.require(stable_total == 6 && stabilizer_total == 6, "stable counts differ from 6");
    o.require(type_one == 5, "type-one count " + std::to_string(type_one));
    o.require(annihilator.applicable && annihilator.annihilated_dimension == 5 && annihilator.sector_dimension() == 5,
              "annihilator dimensions on Z4 disagree");
    o.require(ising.applicable && ising.annihilated_dimension == 6 && ising.sector_dimension() == 6,
              "annihilator dimensions on Ising disagree");
    if (o.pass) {
        o.detail = "orbits 3, stable sum 6 = stabilizer sum 6, type-one 5, annihilator 5 = " +
                   std::to_string(annihilator.sector_dimension()) + ", trivial Z2 on Ising 6 = " +
                   std::to_string(ising.sector_dimension());
    }
    return o;
}

Outcome quantum_dimension_suite() {
    Outcome o;
    std::string values;
    for (const auto &name : testing_support::fixture_names()) {
        auto loaded = load_fixture(name);
        auto cat = loaded.catalog();
        const double order = static_cast<double>(cat.group().order());
        for (std::size_t m = 0; m < cat.datum().size(); m++) {
            const auto &orb = cat.orbit_of(m);
            double sum = 0.0;
            for (std::size_t c = 0; c < orb.characters.size(); c++) {
                sum += static_cast<double>(orb.characters.dim(c)) * cat.entry({orb.representative, c}).qdim;
            }
            o.require(std::abs(sum - order * fk::qdim(cat.datum(), m)) <= 1e-9, name + ": weighted qdim sum");
        }
        double squares = 0.0;
        for (const auto &e : cat.entries()) {
            squares += e.qdim * e.qdim;
        }
        double want = oracle::order_times_global_dimension(testing_support::s_rows(*loaded.datum), order);
        o.require(std::abs(squares - want) <= 1e-9 * std::max(1.0, want), name + ": type-one share");
        o.require(fk::qdim_relations_check(cat).ok(), name + ": qdim_relations_check");
        if (name == "z2_on_z4" || name == "trivial_z2_on_ising") {
            o.require(std::abs(squares - 8.0) <= 1e-9, name + ": share is " + fmt(squares) + ", not 8");
            values += (values.empty() ? "" : ", ") + name + " " + fmt(squares);
        }
    }
    if (o.pass) {
        o.detail = "weighted sums exact on every fixture; sum qdim^2: " + values;
    }
    return o;
}

Outcome extended_s_suite() {
    Outcome o;
    auto z4 = load_fixture("z2_on_z4").catalog();
    fk::Complex entry = fk::extended_s_entry(z4, {2, 0}, {1, 0});
    o.require(std::abs(entry - fk::Complex(-0.5, 0.0)) <= 1e-9, "(2,triv) x (1,triv) is not -0.5");
    for (const auto &name : testing_support::fixture_names()) {
        auto cat = load_fixture(name).catalog();
        auto scaling = fk::vacuum_scaling_check(cat);
        o.require(scaling.ok() && scaling.find("vacuum_row_scales_by_order")->deviation <= 1e-9, name + ": vacuum scaling");
        o.require(fk::proportionality_check(cat).ok(), name + ": proportionality");
    }
    if (o.pass) {
        o.detail = "(2,triv) x (1,triv) = " + fmt(entry.real()) + "; vacuum scaling and proportionality on every fixture";
    }
    return o;
}

Outcome fusion_suite() {
    Outcome o;
    auto loaded = load_fixture("z2_on_z4");
    auto cat = loaded.catalog();
    fk::FormalModuleSum expected;
    expected.add(0);
    expected.add(2);
    o.require(fk::fuse_over_fixed_points(*loaded.action, loaded.fusion, 1, 1) == expected, "1 x 1 is not 0 + 2");
    o.require(fk::v_regular_check(*loaded.action, loaded.fusion).ok(), "vacuum fusion is not regular");
    auto count = fk::pair_counting(*loaded.action, loaded.fusion, 1, 1, 2);
    o.require(count.pair == 2 && count.triple == 4, "pair/triple counts are not 2/4");
    o.require(fk::aggregate_fusion(cat, loaded.fusion, {1, 0}, {1, 0}, 2) == fk::Rational(2), "aggregate is not 2");

    auto resolved = fk::resolve_fusion(cat, loaded.fusion, *loaded.tables, {1, 0}, {1, 0}, 2, loaded.intertwiners.at(0));
    std::string channels;
    bool split = resolved.channels.size() == 2;
    for (const auto &ch : resolved.channels) {
        channels += (channels.empty() ? "" : ", ") + ch.name + ":" + std::to_string(ch.multiplicity);
        split = split && ch.multiplicity == 1;
    }
    o.require(split, "swap data resolves to " + channels);
    o.require(fk::resolved_sum_rule_check(resolved).ok(), "sum rule fails");

    std::ostringstream out;
    std::ostringstream err;
    int code = fk::cli::run({"orbifold-fusion", "--fixture", "z2_on_z4_bad_intertwiners"}, out, err);
    o.require(code == fk::cli::kExitMathFailure, "inconsistent data exits " + std::to_string(code));
    if (o.pass) {
        o.detail = "1 x 1 = 0 + 2, pair 2, triple 4, aggregate 2, resolved {" + channels +
                   "}, inconsistent data exits 1";
    }
    return o;
}

Outcome proportional_distribution() {
    Outcome o;
    std::size_t triples = 0;
    double worst = 0.0;
    for (const auto &name : testing_support::fixture_names()) {
        auto loaded = load_fixture(name);
        auto cat = loaded.catalog();
        const std::size_t n = loaded.datum->size();
        for (std::size_t m = 0; m < n; m++) {
            for (std::size_t k = 0; k < n; k++) {
                for (std::size_t f = 0; f < n; f++) {
                    triples++;
                    auto report = fk::proportional_distribution_check(cat, loaded.fusion, m, k, f);
                    worst = std::max(worst, report.checks.at(0).deviation);
                    o.require(report.ok(), name + ": " + report.checks.at(0).detail);
                }
            }
        }
    }
    std::mt19937 rng(20261015);
    for (int trial = 0; trial < 100; trial++) {
        auto rc = testing_support::draw(rng);
        auto act = testing_support::build_action(rc);
        auto fusion = fk::verlinde_fusion(act->datum());
        auto cat = fk::build_catalog(act, fk::TableSet(act->group()));
        o.require(fk::validate_action(*act, &fusion).ok(), testing_support::describe(rc) + ": action rejected");
        o.require(fk::aggregate_identity_check(cat, fusion).ok(), testing_support::describe(rc) + ": aggregate identity");
        const std::size_t n = act->label_count();
        for (std::size_t m = 0; m < n; m++) {
            for (std::size_t k = 0; k < n; k++) {
                for (std::size_t f = 0; f < n; f++) {
                    auto report = fk::proportional_distribution_check(cat, fusion, m, k, f);
                    worst = std::max(worst, report.checks.at(0).deviation);
                    o.require(report.ok(), testing_support::describe(rc) + ": " + report.checks.at(0).detail);
                }
            }
        }
    }
    if (o.pass) {
        o.detail = std::to_string(triples) + " fixture triples and 100 random cases, worst deviation " + fmt(worst);
    }
    return o;
}

Outcome determinism() {
    Outcome o;
    for (const auto &name : testing_support::fixture_names()) {
        std::ostringstream a;
        std::ostringstream b;
        std::ostringstream err;
        int ca = fk::cli::run({"catalog", "--fixture", name, "--format", "json"}, a, err);
        int cb = fk::cli::run({"catalog", "--fixture", name, "--format", "json"}, b, err);
        o.require(ca == 0 && cb == 0, name + ": catalog failed");
        o.require(a.str() == b.str(), name + ": outputs differ");
    }
    if (o.pass) {
        o.detail = "catalog JSON byte-identical across two runs on every fixture";
    }
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"verlinde_integrality", verlinde_integrality},
        {"s_axioms", s_axioms},
        {"action_compatibility", action_compatibility},
        {"counting_suite", counting_suite},
        {"quantum_dimension_suite", quantum_dimension_suite},
        {"extended_s_suite", extended_s_suite},
        {"fusion_suite", fusion_suite},
        {"proportional_distribution", proportional_distribution},
        {"determinism", determinism},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); i++) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failures += o.pass ? 0 : 1;
        std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    }
    return failures == 0 ? 0 : 1;
}
