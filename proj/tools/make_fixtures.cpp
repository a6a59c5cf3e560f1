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

// Regenerates the datum.json files under the fixture directory from the
// closed-form constructors. Action, character and intertwiner files are
// written by hand.
//
//     make_fixtures [fixture_dir]

#include <filesystem>
#include <fstream>
#include <iostream>

#include "fusionkit/fixtures.hpp"
#include "fusionkit/io.hpp"

namespace fs = std::filesystem;
using namespace fusionkit;

static void write(const fs::path &dir, const std::string &name, const ModularDatum &md) {
    fs::create_directories(dir / name);
    std::ofstream out(dir / name / "datum.json");
    out << io::datum_to_json(md).dump(2) << "\n";
    std::cout << "wrote " << (dir / name / "datum.json").string() << "\n";
}

int main(int argc, char **argv) {
    fs::path dir = argc > 1 ? fs::path(argv[1]) : fs::path(fixtures::fixture_directory());
    write(dir, "single", fixtures::single());
    write(dir, "ising", fixtures::ising());
    write(dir, "z2", fixtures::pointed(2, 1));
    write(dir, "z3", fixtures::pointed(3, 1));
    write(dir, "z4", fixtures::pointed(4, 1));
    write(dir, "z5_c2", fixtures::pointed(5, 2));
    write(dir, "z8_c3", fixtures::pointed(8, 3));
    for (int k = 1; k <= 6; k++) {
        write(dir, "su2_k" + std::to_string(k), fixtures::su2(k));
    }
    // Orbifold fixtures carry their own copy of the base datum.
    write(dir, "z2_on_z4", fixtures::pointed(4, 1));
    write(dir, "z2_on_z4_bad_intertwiners", fixtures::pointed(4, 1));
    write(dir, "z4_inversion_on_z4", fixtures::pointed(4, 1));
    write(dir, "trivial_z2_on_ising", fixtures::ising());
    write(dir, "z2_on_z8_c3", fixtures::pointed(8, 3));
    return 0;
}
