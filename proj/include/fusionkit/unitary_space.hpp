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

#ifndef FUSIONKIT_UNITARY_SPACE_HPP
#define FUSIONKIT_UNITARY_SPACE_HPP

#include <cstddef>
#include <map>
#include <string>

#include "fusionkit/group_action.hpp"
#include "fusionkit/orbifold.hpp"

namespace fusionkit {

/// A vector in the span of the type-one irreducibles, with coordinates keyed
/// by catalog entry index. Twisted-sector coordinates are never stored; for
/// embedded untwisted modules they are zero.
class ModuleVector {
   public:
    explicit ModuleVector(const TypeOneCatalog &cat) : catalog_(&cat) {}

    const TypeOneCatalog &catalog() const { return *catalog_; }
    const std::map<std::size_t, Complex> &coords() const { return coords_; }
    Complex coord(std::size_t entry) const;
    void set(std::size_t entry, Complex value);

    ModuleVector operator+(const ModuleVector &other) const;
    ModuleVector scaled(Complex factor) const;

   private:
    const TypeOneCatalog *catalog_;
    std::map<std::size_t, Complex> coords_;  // only nonzero coordinates
};

/// The untwisted module m decomposed over the catalog: coefficient dim(lambda)
/// on each (orbit(m), lambda).
ModuleVector embed(const TypeOneCatalog &cat, std::size_t m);

/// Hermitian pairing with the catalog entries orthonormal. Throws
/// StructuralError if the vectors come from different catalogs.
Complex pairing(const ModuleVector &u, const ModuleVector &w);

/// Bilinear form sum_ij u_i w_j S_ext[i, j] built from the extended S-matrix.
Complex bilinear_form(const ModuleVector &u, const ModuleVector &w);

/// Two counts of the span of the fixed-point irreducibles: the type-one count
/// from the catalog, and the untwisted orbits plus twisted-sector modules.
/// They are compared only when the full-stabilizer hypotheses hold.
struct AnnihilatorReport {
    std::size_t annihilated_dimension = 0;  // type-one count
    std::size_t untwisted_orbits = 0;
    long long twisted_modules = 0;  // sum_{g != e} stable_count(g)
    bool applicable = false;
    std::string reason;

    long long sector_dimension() const { return static_cast<long long>(untwisted_orbits) + twisted_modules; }
    bool equal() const { return static_cast<long long>(annihilated_dimension) == sector_dimension(); }
    ValidationReport to_report() const;
};

AnnihilatorReport annihilator_dimension_report(const TypeOneCatalog &cat);

}  // namespace fusionkit

#endif
