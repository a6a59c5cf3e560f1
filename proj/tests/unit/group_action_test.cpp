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

#include <gtest/gtest.h>

#include <memory>
#include <vector>

#include "fusionkit/fixtures.hpp"
#include "fusionkit/group_action.hpp"
#include "loaded_fixture.hpp"
#include "oracle.hpp"

namespace fk = fusionkit;
namespace fx = fusionkit::fixtures;
using testing_support::load_fixture;

namespace {

std::shared_ptr<const fk::ModularDatum> z4() {
    return std::make_shared<const fk::ModularDatum>(fx::pointed(4));
}

fk::ModuleAction inversion_on_z4() {
    return fk::ModuleAction(fk::make_cyclic(2), z4(), {{0, 1, 2, 3}, {0, 3, 2, 1}});
}

}  // namespace

TEST(GroupAction, InversionOnZ4IsCompatible) {
    auto act = inversion_on_z4();
    auto fusion = fk::verlinde_fusion(act.datum());
    auto report = fk::validate_action(act, &fusion);
    EXPECT_TRUE(report.ok());
    EXPECT_EQ(report.find("fusion_invariant")->status, fk::CheckStatus::pass);
    EXPECT_EQ(report.find("s_invariant")->deviation, 0.0);
}

TEST(GroupAction, CorruptedPermutationFailsWithWitness) {
    // (1 2) does not preserve S: S[1,1] = i/2 but S[2,2] = 1/2.
    fk::ModuleAction act(fk::make_cyclic(2), z4(), {{0, 1, 2, 3}, {0, 2, 1, 3}});
    auto report = fk::validate_action(act);
    const auto *s = report.find("s_invariant");
    ASSERT_NE(s, nullptr);
    EXPECT_EQ(s->status, fk::CheckStatus::fail);
    EXPECT_FALSE(s->detail.empty());
    EXPECT_GT(s->deviation, 0.1);
}

TEST(GroupAction, ShiftMovesTheVacuum) {
    fk::ModuleAction act(fk::make_cyclic(4), z4(), {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}});
    auto report = fk::validate_action(act);
    EXPECT_EQ(report.find("vacuum_fixed")->status, fk::CheckStatus::fail);
    EXPECT_EQ(report.find("right_action")->status, fk::CheckStatus::pass);
}

TEST(GroupAction, NonBijectiveAndNonIdentityAreReported) {
    fk::ModuleAction collapse(fk::make_cyclic(2), z4(), {{0, 1, 2, 3}, {0, 1, 1, 3}});
    EXPECT_EQ(fk::validate_action(collapse).find("bijective")->status, fk::CheckStatus::fail);

    fk::ModuleAction moved_identity(fk::make_cyclic(2), z4(), {{0, 3, 2, 1}, {0, 3, 2, 1}});
    auto report = fk::validate_action(moved_identity);
    EXPECT_EQ(report.find("identity_acts_trivially")->status, fk::CheckStatus::fail);
}

TEST(GroupAction, LeftActionTableFailsTheRightActionLaw) {
    auto loaded = load_fixture("s3_on_toric_code");
    ASSERT_TRUE(fk::validate_action(*loaded.action, &loaded.fusion).ok());
    const auto &G = loaded.action->group();
    // Composing the other way round gives a left action.
    std::vector<std::vector<std::size_t>> swapped(G.order());
    for (std::size_t g = 0; g < G.order(); g++) {
        swapped[g] = loaded.action->permutation(G.inverse(g));
    }
    fk::ModuleAction left(G, loaded.datum, swapped);
    auto report = fk::validate_action(left);
    EXPECT_EQ(report.find("right_action")->status, fk::CheckStatus::fail);
}

TEST(GroupAction, ShapeErrorsAreStructural) {
    EXPECT_THROW(fk::ModuleAction(fk::make_cyclic(2), z4(), {{0, 1, 2, 3}}), fk::StructuralError);
    EXPECT_THROW(fk::ModuleAction(fk::make_cyclic(2), z4(), {{0, 1, 2, 3}, {0, 1, 2}}), fk::StructuralError);
    EXPECT_THROW(fk::ModuleAction(fk::make_cyclic(2), z4(), {{0, 1, 2, 3}, {0, 1, 2, 7}}), fk::StructuralError);
    EXPECT_THROW(fk::ModuleAction(fk::make_cyclic(2), nullptr, {{0}, {0}}), fk::StructuralError);
}

TEST(GroupAction, GeneratorsDetermineTheAction) {
    auto act = fk::ModuleAction::from_generators(fk::make_cyclic(4), z4(), {{1, {0, 3, 2, 1}}});
    EXPECT_EQ(act.permutation(0), (std::vector<std::size_t>{0, 1, 2, 3}));
    EXPECT_EQ(act.permutation(2), (std::vector<std::size_t>{0, 1, 2, 3}));
    EXPECT_EQ(act.permutation(3), (std::vector<std::size_t>{0, 3, 2, 1}));
    EXPECT_THROW(fk::ModuleAction::from_generators(fk::make_cyclic(4), z4(), {{2, {0, 1, 2, 3}}}), fk::StructuralError);
}

TEST(GroupAction, OrbitsAndStabilizers) {
    auto act = inversion_on_z4();
    auto orbs = fk::orbits(act);
    ASSERT_EQ(orbs.size(), 3u);
    EXPECT_EQ(orbs[0].members, (std::vector<std::size_t>{0}));
    EXPECT_EQ(orbs[1].members, (std::vector<std::size_t>{1, 3}));
    EXPECT_EQ(orbs[1].representative, 1u);
    EXPECT_EQ(orbs[2].members, (std::vector<std::size_t>{2}));
    EXPECT_EQ(fk::orbit(act, 3), (std::vector<std::size_t>{1, 3}));
    EXPECT_EQ(fk::stabilizer(act, 1).order(), 1u);
    EXPECT_EQ(fk::stabilizer(act, 2).order(), 2u);
    EXPECT_EQ(fk::stable_count(act, 0), 4u);
    EXPECT_EQ(fk::stable_count(act, 1), 2u);

    std::size_t stable_total = 0;
    std::size_t stabilizer_total = 0;
    for (std::size_t g = 0; g < 2; g++) {
        stable_total += fk::stable_count(act, g);
    }
    for (std::size_t m = 0; m < 4; m++) {
        stabilizer_total += fk::stabilizer(act, m).order();
    }
    EXPECT_EQ(stable_total, 6u);
    EXPECT_EQ(stabilizer_total, 6u);
}

TEST(GroupAction, OrbitsMatchUnionFind) {
    for (const auto &name : testing_support::fixture_names()) {
        auto loaded = load_fixture(name);
        auto perms = testing_support::permutations(*loaded.action);
        auto want = oracle::orbits(perms, loaded.datum->size());
        auto got = fk::orbits(*loaded.action);
        ASSERT_EQ(got.size(), want.size()) << name;
        for (std::size_t i = 0; i < got.size(); i++) {
            EXPECT_EQ(std::vector<std::size_t>(want[i].begin(), want[i].end()), got[i].members) << name;
            EXPECT_EQ(*want[i].begin(), got[i].representative) << name;
        }
        for (std::size_t m = 0; m < loaded.datum->size(); m++) {
            EXPECT_EQ(fk::stabilizer(*loaded.action, m).order(), oracle::stabilizer_order(perms, m)) << name;
        }
        EXPECT_TRUE(fk::burnside_check(*loaded.action).ok()) << name;
    }
}

TEST(GroupAction, BurnsideCountsOnZ4) {
    auto report = fk::burnside_check(inversion_on_z4());
    EXPECT_TRUE(report.ok());
    EXPECT_EQ(report.find("fixed_points_equal_orbits_times_order")->detail, "6 vs 6");
    EXPECT_EQ(report.find("nontrivial_fixed_points")->detail, "2 vs 2");
}

TEST(GroupAction, TwistedStabilizerCounts) {
    auto r = fk::twisted_stabilizer_checker(inversion_on_z4());
    ASSERT_TRUE(r.applicable);
    EXPECT_EQ(r.full_stabilizer_modules, 2u);
    EXPECT_EQ(r.trivial_stabilizer_modules, 2u);
    EXPECT_EQ(r.orbit_count, 3u);
    EXPECT_EQ(r.twisted_module_total, 2);
    EXPECT_EQ(r.twisted_orbit_count, 2);
    EXPECT_EQ(r.burnside_form, 2);
    EXPECT_TRUE(r.identity_holds);
    EXPECT_TRUE(r.to_report().ok());

    auto ising = std::make_shared<const fk::ModularDatum>(fx::ising());
    auto trivial = fk::twisted_stabilizer_checker(fk::ModuleAction::trivial(fk::make_cyclic(2), ising));
    ASSERT_TRUE(trivial.applicable);
    EXPECT_EQ(trivial.twisted_module_total, 3);
    EXPECT_EQ(trivial.twisted_orbit_count, 3);
    EXPECT_TRUE(trivial.identity_holds);
}

TEST(GroupAction, TwistedStabilizerInapplicableCases) {
    auto inversion = load_fixture("z4_inversion_on_z4");
    auto r = fk::twisted_stabilizer_checker(*inversion.action);
    EXPECT_FALSE(r.applicable);
    EXPECT_NE(r.reason.find("order 2"), std::string::npos);
    EXPECT_EQ(r.to_report().checks.at(0).status, fk::CheckStatus::inapplicable);

    auto s3 = load_fixture("s3_on_toric_code");
    EXPECT_FALSE(fk::twisted_stabilizer_checker(*s3.action).applicable);
}

TEST(GroupAction, EveryFixtureActionIsCompatible) {
    for (const auto &name : testing_support::fixture_names()) {
        auto loaded = load_fixture(name);
        EXPECT_TRUE(fk::validate_action(*loaded.action, &loaded.fusion).ok()) << name;
    }
}
