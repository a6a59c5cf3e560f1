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

#include <algorithm>
#include <memory>
#include <vector>

#include "fusionkit/orbifold.hpp"
#include "loaded_fixture.hpp"
#include "oracle.hpp"

namespace fk = fusionkit;
using testing_support::load_fixture;

namespace {

std::vector<std::string> entry_names(const fk::TypeOneCatalog &cat) {
    std::vector<std::string> out;
    for (const auto &e : cat.entries()) {
        out.push_back(e.name);
    }
    return out;
}

}  // namespace

TEST(Orbifold, CatalogOfInversionOnZ4) {
    auto loaded = load_fixture("z2_on_z4");
    auto cat = loaded.catalog();
    EXPECT_EQ(entry_names(cat), (std::vector<std::string>{"0:triv", "0:sign", "1:triv", "2:triv", "2:sign"}));
    std::vector<double> qdims;
    for (const auto &e : cat.entries()) {
        qdims.push_back(e.qdim);
    }
    EXPECT_EQ(qdims, (std::vector<double>{1.0, 1.0, 2.0, 1.0, 1.0}));
    EXPECT_EQ(fk::type_one_count(loaded.action, *loaded.tables), 5u);
    EXPECT_EQ(cat.vacuum_label(), (fk::TypeOneLabel{0, 0}));
    EXPECT_EQ(cat.orbit_index_of(3), 1u);
    EXPECT_THROW(cat.entry_index({1, 1}), fk::StructuralError);
}

TEST(Orbifold, ExtendedSEntries) {
    auto cat = load_fixture("z2_on_z4").catalog();
    const fk::TypeOneLabel two_triv{2, 0};
    const fk::TypeOneLabel one_triv{1, 0};
    const fk::TypeOneLabel vac{0, 0};
    EXPECT_NEAR(fk::extended_s_entry(cat, two_triv, one_triv).real(), -0.5, 1e-12);
    EXPECT_NEAR(fk::extended_s_entry(cat, vac, one_triv).real(), 0.5, 1e-12);
    EXPECT_NEAR(fk::module_s_vector(cat, 0, one_triv).real(), 1.0, 1e-12);
    EXPECT_NEAR(fk::module_s_vector(cat, 2, one_triv).real(), -1.0, 1e-12);
    EXPECT_THROW(fk::module_s_vector(cat, 9, one_triv), fk::StructuralError);

    auto block = fk::extended_s_block(cat);
    ASSERT_EQ(block.size(), 5u);
    EXPECT_EQ(block(3, 2), fk::extended_s_entry(cat, two_triv, one_triv));
}

TEST(Orbifold, ExtendedSMatchesDirectOrbitSums) {
    for (const auto &name : testing_support::fixture_names()) {
        auto loaded = load_fixture(name);
        auto cat = loaded.catalog();
        auto perms = testing_support::permutations(*loaded.action);
        auto orbs = oracle::orbits(perms, loaded.datum->size());
        for (const auto &a : cat.entries()) {
            for (const auto &b : cat.entries()) {
                const auto &rep_orbit = *std::find_if(orbs.begin(), orbs.end(), [&](const auto &o) {
                    return o.count(b.label.orbit_rep) > 0;
                });
                fk::Complex sum = 0.0;
                for (std::size_t n : rep_orbit) {
                    sum += loaded.datum->s(a.label.orbit_rep, n);
                }
                double stab = static_cast<double>(oracle::stabilizer_order(perms, a.label.orbit_rep));
                fk::Complex want = static_cast<double>(a.dim * b.dim) / stab * sum;
                EXPECT_LE(std::abs(fk::extended_s_entry(cat, a.label, b.label) - want), 1e-12) << name;
            }
        }
    }
}

TEST(Orbifold, ChecksPassOnEveryFixture) {
    for (const auto &name : testing_support::fixture_names()) {
        auto cat = load_fixture(name).catalog();
        EXPECT_TRUE(fk::module_s_consistency_check(cat).ok()) << name;
        EXPECT_TRUE(fk::proportionality_check(cat).ok()) << name;
        EXPECT_TRUE(fk::vacuum_scaling_check(cat).ok()) << name;
        EXPECT_TRUE(fk::qdim_relations_check(cat).ok()) << name;
    }
}

TEST(Orbifold, TypeOneShareMatchesBruteForce) {
    for (const auto &name : testing_support::fixture_names()) {
        auto loaded = load_fixture(name);
        auto cat = loaded.catalog();
        double squares = 0.0;
        for (const auto &e : cat.entries()) {
            squares += e.qdim * e.qdim;
        }
        double want =
            oracle::order_times_global_dimension(testing_support::s_rows(*loaded.datum), loaded.action->group().order());
        EXPECT_NEAR(squares, want, 1e-9 * std::max(1.0, want)) << name;
    }
}

TEST(Orbifold, TypeOneShareValues) {
    auto z4 = load_fixture("z2_on_z4").catalog();
    auto ising = load_fixture("trivial_z2_on_ising").catalog();
    double z4_sum = 0.0;
    double ising_sum = 0.0;
    for (const auto &e : z4.entries()) {
        z4_sum += e.qdim * e.qdim;
    }
    for (const auto &e : ising.entries()) {
        ising_sum += e.qdim * e.qdim;
    }
    EXPECT_NEAR(z4_sum, 8.0, 1e-9);
    EXPECT_NEAR(ising_sum, 8.0, 1e-9);
    EXPECT_EQ(ising.size(), 6u);
}

TEST(Orbifold, NonAbelianStabilizer) {
    auto loaded = load_fixture("s3_on_toric_code");
    auto cat = loaded.catalog();
    EXPECT_EQ(entry_names(cat), (std::vector<std::string>{"1:triv", "1:sign", "1:std", "e:triv", "e:sign"}));
    EXPECT_EQ(cat.entries()[2].qdim, 2.0);
    EXPECT_EQ(cat.entries()[3].qdim, 3.0);
    // Without the supplied table the whole group has no automatic characters.
    EXPECT_THROW(fk::build_catalog(loaded.action, fk::TableSet(loaded.action->group())), fk::StructuralError);
}

TEST(Orbifold, IncompleteSuppliedTableIsRejected) {
    auto loaded = load_fixture("z2_on_z4");
    fk::TableSet tables(loaded.action->group());
    auto whole = fk::Subgroup::whole(loaded.action->group());
    tables.add(whole, fk::CharacterTable(whole.as_group(loaded.action->group()), {{"triv", {1.0, 1.0}}}));
    EXPECT_THROW(fk::build_catalog(loaded.action, tables), fk::StructuralError);
}

TEST(Orbifold, InnerProductsOfModules) {
    auto cat = load_fixture("z2_on_z4").catalog();
    EXPECT_EQ(fk::inner_product_modules(cat, 0, 0), 2);
    EXPECT_EQ(fk::inner_product_modules(cat, 1, 3), 1);
    EXPECT_EQ(fk::inner_product_modules(cat, 1, 2), 0);
    EXPECT_THROW(fk::inner_product_modules(cat, 0, 4), fk::StructuralError);
}

TEST(Orbifold, NonInvariantDatumFailsTheClosedForms) {
    // Breaking invariance of the vacuum row on the orbit {1, 3} still builds a
    // catalog, but the orbit sums no longer collapse to the representative.
    auto loaded = load_fixture("z2_on_z4");
    auto rows = testing_support::s_rows(*loaded.datum);
    rows[0][3] = 0.3;
    rows[3][0] = 0.3;
    auto broken = std::make_shared<const fk::ModularDatum>(fk::ModularDatum::create(loaded.datum->labels(), "0", rows));
    auto act = std::make_shared<const fk::ModuleAction>(
        fk::ModuleAction(loaded.action->group(), broken, testing_support::permutations(*loaded.action)));
    EXPECT_EQ(fk::validate_action(*act).find("s_invariant")->status, fk::CheckStatus::fail);
    auto cat = fk::build_catalog(act, *loaded.tables);
    auto scaling = fk::vacuum_scaling_check(cat);
    EXPECT_EQ(scaling.find("vacuum_row_scales_by_order")->status, fk::CheckStatus::pass);
    EXPECT_EQ(scaling.find("vacuum_row_closed_form")->status, fk::CheckStatus::fail);
    EXPECT_EQ(fk::qdim_relations_check(cat).find("weighted_sum_is_order_times_qdim")->status, fk::CheckStatus::fail);
}
