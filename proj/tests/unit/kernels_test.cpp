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

#include <random>
#include <vector>

#include "fusionkit/complex_matrix.hpp"
#include "fusionkit/kernels.hpp"

namespace fk = fusionkit;
namespace kn = fusionkit::kernels;

namespace {

fk::ComplexBuffer random_buffer(std::mt19937_64 &rng, std::size_t n) {
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    fk::ComplexBuffer b(n);
    for (std::size_t i = 0; i < n; i++) {
        b.re[i] = dist(rng);
        b.im[i] = dist(rng);
    }
    return b;
}

}  // namespace

TEST(Kernels, ScalarIsAlwaysAvailable) {
    auto isas = kn::available_isas();
    ASSERT_FALSE(isas.empty());
    EXPECT_EQ(isas.front(), kn::Isa::scalar);
    EXPECT_EQ(kn::table_for(kn::Isa::scalar).name, "scalar");
}

TEST(Kernels, EveryIsaMatchesScalarOnAllTailLengths) {
    std::mt19937_64 rng(7);
    const auto &ref = kn::table_for(kn::Isa::scalar);
    for (kn::Isa isa : kn::available_isas()) {
        const auto &k = kn::table_for(isa);
        for (std::size_t n = 0; n <= 67; n++) {
            auto a = random_buffer(rng, n);
            auto b = random_buffer(rng, n);
            auto c = random_buffer(rng, n);
            const double scale = 1e-12 * static_cast<double>(n + 1);
            EXPECT_LE(std::abs(k.dot(a.view(), b.view()) - ref.dot(a.view(), b.view())), scale) << k.name << " n=" << n;
            EXPECT_LE(std::abs(k.dot_conj(a.view(), b.view()) - ref.dot_conj(a.view(), b.view())), scale)
                << k.name << " n=" << n;
            fk::ComplexBuffer got(n);
            fk::ComplexBuffer want(n);
            k.triple_product(a.view(), b.view(), c.view(), got.out());
            ref.triple_product(a.view(), b.view(), c.view(), want.out());
            for (std::size_t i = 0; i < n; i++) {
                EXPECT_LE(std::abs(got[i] - want[i]), 1e-12) << k.name << " n=" << n << " i=" << i;
            }
        }
    }
}

TEST(Kernels, ScalarDotMatchesDefinition) {
    fk::ComplexBuffer a(2);
    fk::ComplexBuffer b(2);
    a.set(0, {1.0, 2.0});
    a.set(1, {0.0, -1.0});
    b.set(0, {3.0, 0.0});
    b.set(1, {0.0, 1.0});
    const auto &k = kn::table_for(kn::Isa::scalar);
    EXPECT_EQ(k.dot(a.view(), b.view()), std::complex<double>(4.0, 6.0));
    EXPECT_EQ(k.dot_conj(a.view(), b.view()), std::complex<double>(2.0, 6.0));
}

TEST(Kernels, ActiveTableIsOneOfTheAvailable) {
    const auto &active = kn::active();
    bool found = false;
    for (kn::Isa isa : kn::available_isas()) {
        found = found || isa == active.isa;
    }
    EXPECT_TRUE(found);
}

TEST(ComplexMatrix, MultiplyAgreesAcrossIsas) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    const std::size_t n = 9;
    std::vector<std::vector<fk::Complex>> ra(n, std::vector<fk::Complex>(n));
    std::vector<std::vector<fk::Complex>> rb(n, std::vector<fk::Complex>(n));
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) {
            ra[i][j] = {dist(rng), dist(rng)};
            rb[i][j] = {dist(rng), dist(rng)};
        }
    }
    auto a = fk::ComplexMatrix::from_rows(ra);
    auto b = fk::ComplexMatrix::from_rows(rb);
    auto want = a.multiply(b, kn::table_for(kn::Isa::scalar));
    for (kn::Isa isa : kn::available_isas()) {
        auto got = a.multiply(b, kn::table_for(isa));
        for (std::size_t i = 0; i < n; i++) {
            for (std::size_t j = 0; j < n; j++) {
                fk::Complex direct = 0.0;
                for (std::size_t x = 0; x < n; x++) {
                    direct += ra[i][x] * rb[x][j];
                }
                EXPECT_LE(std::abs(got(i, j) - want(i, j)), 1e-12);
                EXPECT_LE(std::abs(got(i, j) - direct), 1e-12);
            }
        }
    }
}
