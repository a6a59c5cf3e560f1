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

#ifndef FUSIONKIT_GROUP_ACTION_HPP
#define FUSIONKIT_GROUP_ACTION_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "fusionkit/group.hpp"
#include "fusionkit/modular_data.hpp"

namespace fusionkit {

/// Permutation action of a finite group on the labels of a modular datum,
/// written M -> M.g. Composition is a right action:
///
///     apply(g*h, m) == apply(h, apply(g, m))
///
/// For abelian groups this coincides with the left convention.
class ModuleAction {
   public:
    /// `images[g][m]` is the image of label m under element g. Only shapes and
    /// ranges are checked here; use `validate_action` for the axioms.
    ModuleAction(
        FiniteGroup group, std::shared_ptr<const ModularDatum> datum, std::vector<std::vector<std::size_t>> images);

    /// Every element acts as the identity.
    static ModuleAction trivial(FiniteGroup group, std::shared_ptr<const ModularDatum> datum);

    /// Builds the full table from permutations of a generating set by the
    /// composition rule above. Elements not listed default to derived values;
    /// the identity defaults to the identity permutation. Throws
    /// StructuralError if some element is not reachable.
    static ModuleAction from_generators(
        FiniteGroup group,
        std::shared_ptr<const ModularDatum> datum,
        const std::map<std::size_t, std::vector<std::size_t>> &given);

    const FiniteGroup &group() const { return group_; }
    const ModularDatum &datum() const { return *datum_; }
    const std::shared_ptr<const ModularDatum> &datum_ptr() const { return datum_; }
    std::size_t label_count() const { return datum_->size(); }

    std::size_t apply(std::size_t g, std::size_t m) const { return images_[g][m]; }
    const std::vector<std::size_t> &permutation(std::size_t g) const { return images_[g]; }

   private:
    FiniteGroup group_;
    std::shared_ptr<const ModularDatum> datum_;
    std::vector<std::vector<std::size_t>> images_;
};

struct Orbit {
    std::size_t representative;        // least label index in the orbit
    std::vector<std::size_t> members;  // sorted
};

/// Bijectivity, identity, right-action composition, vacuum fixed, S-invariance
/// and fusion invariance. Each failed check carries a (g, M, W) witness.
/// When `fusion` is null the Verlinde tensor is computed from the datum.
ValidationReport validate_action(const ModuleAction &act, const FusionTensor *fusion = nullptr);

std::vector<std::size_t> orbit(const ModuleAction &act, std::size_t m);
Subgroup stabilizer(const ModuleAction &act, std::size_t m);
std::vector<Orbit> orbits(const ModuleAction &act);

/// Number of labels fixed by g.
std::size_t stable_count(const ModuleAction &act, std::size_t g);

/// sum_g stable_count(g) = sum_M |G_M| = l |G| and
/// sum_{g != e} stable_count(g) = l |G| - n, with l orbits and n labels.
ValidationReport burnside_check(const ModuleAction &act);

/// Outcome of the full-stabilizer argument for twisted modules: for cyclic G
/// whose untwisted stabilizers are all G or trivial, every g-twisted module
/// (g != e) has stabilizer G.
struct TwistedStabilizerReport {
    bool applicable = false;
    std::string reason;  // why not applicable, naming the offending module

    std::size_t full_stabilizer_modules = 0;     // p: labels with G_M = G
    std::size_t trivial_stabilizer_modules = 0;  // q: labels with G_M = {e}
    std::size_t orbit_count = 0;                 // l
    std::size_t label_count = 0;                 // n
    std::size_t group_order = 0;

    long long twisted_module_total = 0;  // sum_{g != e} stable_count(g)
    long long twisted_orbit_count = 0;   // p|G| + q/|G| - l
    long long burnside_form = 0;         // l|G| - n
    bool identity_holds = false;

    ValidationReport to_report() const;
};

TwistedStabilizerReport twisted_stabilizer_checker(const ModuleAction &act);

}  // namespace fusionkit

#endif
