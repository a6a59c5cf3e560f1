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

#include "fusionkit/unitary_space.hpp"

namespace fusionkit {

Complex ModuleVector::coord(std::size_t entry) const {
    auto it = coords_.find(entry);
    return it == coords_.end() ? Complex(0.0, 0.0) : it->second;
}

void ModuleVector::set(std::size_t entry, Complex value) {
    if (entry >= catalog_->size()) {
        throw StructuralError("coordinate index outside the catalog");
    }
    if (value == Complex(0.0, 0.0)) {
        coords_.erase(entry);
    } else {
        coords_[entry] = value;
    }
}

ModuleVector ModuleVector::operator+(const ModuleVector &other) const {
    if (catalog_ != other.catalog_) {
        throw StructuralError("module vectors come from different catalogs");
    }
    ModuleVector out = *this;
    for (const auto &[i, v] : other.coords_) {
        out.set(i, out.coord(i) + v);
    }
    return out;
}

ModuleVector ModuleVector::scaled(Complex factor) const {
    ModuleVector out(*catalog_);
    for (const auto &[i, v] : coords_) {
        out.set(i, v * factor);
    }
    return out;
}

ModuleVector embed(const TypeOneCatalog &cat, std::size_t m) {
    if (m >= cat.datum().size()) {
        throw StructuralError("unknown label index " + std::to_string(m));
    }
    ModuleVector out(cat);
    const auto &orb = cat.orbit_of(m);
    for (std::size_t c = 0; c < orb.characters.size(); c++) {
        out.set(
            cat.entry_index(TypeOneLabel{orb.representative, c}),
            Complex(static_cast<double>(orb.characters.dim(c)), 0.0));
    }
    return out;
}

Complex pairing(const ModuleVector &u, const ModuleVector &w) {
    if (&u.catalog() != &w.catalog()) {
        throw StructuralError("module vectors come from different catalogs");
    }
    Complex sum = 0.0;
    for (const auto &[i, v] : u.coords()) {
        sum += v * std::conj(w.coord(i));
    }
    return sum;
}

Complex bilinear_form(const ModuleVector &u, const ModuleVector &w) {
    if (&u.catalog() != &w.catalog()) {
        throw StructuralError("module vectors come from different catalogs");
    }
    const auto &cat = u.catalog();
    Complex sum = 0.0;
    for (const auto &[i, x] : u.coords()) {
        for (const auto &[j, y] : w.coords()) {
            sum += x * y * extended_s_entry(cat, cat.entries()[i].label, cat.entries()[j].label);
        }
    }
    return sum;
}

AnnihilatorReport annihilator_dimension_report(const TypeOneCatalog &cat) {
    AnnihilatorReport r;
    r.annihilated_dimension = cat.size();
    r.untwisted_orbits = cat.orbits().size();
    const auto &act = cat.action();
    for (std::size_t g = 0; g < act.group().order(); g++) {
        if (g != act.group().identity()) {
            r.twisted_modules += static_cast<long long>(stable_count(act, g));
        }
    }
    auto hypotheses = twisted_stabilizer_checker(act);
    r.applicable = hypotheses.applicable;
    r.reason = hypotheses.reason;
    return r;
}

ValidationReport AnnihilatorReport::to_report() const {
    ValidationReport report;
    report.subject = "annihilator";
    std::string detail = "type-one count " + std::to_string(annihilated_dimension) + ", untwisted orbits " +
                         std::to_string(untwisted_orbits) + " + twisted modules " + std::to_string(twisted_modules) +
                         " = " + std::to_string(sector_dimension());
    if (!applicable) {
        report.add_inapplicable("dimensions_agree", reason + "; " + detail);
    } else {
        report.add("dimensions_agree", equal(), 0.0, detail);
    }
    return report;
}

}  // namespace fusionkit
