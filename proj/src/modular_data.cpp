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

#include "fusionkit/modular_data.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace fusionkit {

// ---------------------------------------------------------------------------
// FormalModuleSum

FormalModuleSum FormalModuleSum::single(std::size_t label, Rational multiplicity) {
    FormalModuleSum out;
    out.add(label, multiplicity);
    return out;
}

void FormalModuleSum::add(std::size_t label, Rational multiplicity) {
    // Compare numerators: rational-vs-integer operators recurse under C++20
    // rewritten comparisons.
    if (multiplicity.numerator() < 0) {
        throw StructuralError("formal module sums have nonnegative multiplicities");
    }
    if (multiplicity.numerator() == 0) {
        return;
    }
    terms_[label] += multiplicity;
}

Rational FormalModuleSum::multiplicity(std::size_t label) const {
    auto it = terms_.find(label);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational FormalModuleSum::total() const {
    Rational t = 0;
    for (const auto &[label, m] : terms_) {
        t += m;
    }
    return t;
}

FormalModuleSum FormalModuleSum::scaled(Rational factor) const {
    FormalModuleSum out;
    for (const auto &[label, m] : terms_) {
        out.add(label, m * factor);
    }
    return out;
}

FormalModuleSum FormalModuleSum::operator+(const FormalModuleSum &other) const {
    FormalModuleSum out = *this;
    for (const auto &[label, m] : other.terms_) {
        out.add(label, m);
    }
    return out;
}

// ---------------------------------------------------------------------------
// ModularDatum

ModularDatum::ModularDatum(std::vector<std::string> labels, ComplexMatrix s, double tolerance)
    : labels_(std::move(labels)), s_(std::move(s)), tolerance_(tolerance) {
    if (labels_.empty()) {
        throw StructuralError("modular datum needs at least one label");
    }
    if (s_.size() != labels_.size()) {
        throw StructuralError(
            "S-matrix is " + std::to_string(s_.size()) + "x" + std::to_string(s_.size()) + " but there are " +
            std::to_string(labels_.size()) + " labels");
    }
    std::set<std::string> seen;
    for (const auto &l : labels_) {
        if (!seen.insert(l).second) {
            throw StructuralError("duplicate label '" + l + "'");
        }
    }
    if (!(tolerance_ >= 0.0) || !std::isfinite(tolerance_)) {
        throw StructuralError("tolerance must be a nonnegative finite number");
    }
}

ModularDatum ModularDatum::create(
    std::vector<std::string> labels,
    const std::string &vacuum,
    const std::vector<std::vector<Complex>> &s_rows,
    double tolerance) {
    if (labels.empty()) {
        throw StructuralError("modular datum needs at least one label");
    }
    if (labels.front() != vacuum) {
        throw StructuralError("vacuum '" + vacuum + "' must be the first label");
    }
    if (s_rows.size() != labels.size()) {
        throw StructuralError(
            "S-matrix has " + std::to_string(s_rows.size()) + " rows but there are " + std::to_string(labels.size()) +
            " labels");
    }
    return ModularDatum(std::move(labels), ComplexMatrix::from_rows(s_rows), tolerance);
}

std::size_t ModularDatum::index_of(const std::string &label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        throw StructuralError("unknown label '" + label + "'");
    }
    return static_cast<std::size_t>(it - labels_.begin());
}

ModularDatum ModularDatum::with_tolerance(double tolerance) const {
    return ModularDatum(labels_, s_, tolerance);
}

// ---------------------------------------------------------------------------
// FusionTensor

FormalModuleSum FusionTensor::product(std::size_t i, std::size_t j) const {
    FormalModuleSum out;
    for (std::size_t k = 0; k < n_; k++) {
        if (at(i, j, k) != 0) {
            out.add(k, at(i, j, k));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Axioms

namespace {

struct PermutationProbe {
    std::optional<std::vector<std::size_t>> perm;
    double deviation = 0.0;
    std::string detail;
};

PermutationProbe probe_s_squared(const ModularDatum &md, const kernels::KernelTable &k) {
    const std::size_t n = md.size();
    ComplexMatrix sq = md.s_matrix().multiply(md.s_matrix(), k);
    PermutationProbe probe;
    std::vector<std::size_t> perm(n, n);
    std::vector<int> column_hits(n, 0);
    bool is_perm = true;
    for (std::size_t i = 0; i < n; i++) {
        int hits = 0;
        for (std::size_t j = 0; j < n; j++) {
            Complex v = sq(i, j);
            double to_zero = std::abs(v);
            double to_one = std::abs(v - 1.0);
            probe.deviation = std::max(probe.deviation, std::min(to_zero, to_one));
            if (to_one < to_zero) {
                hits++;
                perm[i] = j;
                column_hits[j]++;
            }
        }
        if (hits != 1 && is_perm) {
            is_perm = false;
            probe.detail = "row " + md.label(i) + " of S^2 has " + std::to_string(hits) + " unit entries";
        }
    }
    for (std::size_t j = 0; j < n && is_perm; j++) {
        if (column_hits[j] != 1) {
            is_perm = false;
            probe.detail = "column " + md.label(j) + " of S^2 has " + std::to_string(column_hits[j]) + " unit entries";
        }
    }
    if (is_perm && probe.deviation > md.tolerance()) {
        is_perm = false;
        probe.detail = "S^2 deviates from a permutation matrix";
    }
    if (is_perm) {
        probe.perm = std::move(perm);
    }
    return probe;
}

std::string format_deviation(double d) {
    std::ostringstream os;
    os.precision(3);
    os << d;
    return os.str();
}

}  // namespace

std::optional<std::vector<std::size_t>> duality_permutation(const ModularDatum &md, const kernels::KernelTable &k) {
    return probe_s_squared(md, k).perm;
}

std::size_t dual(const ModularDatum &md, std::size_t i, const kernels::KernelTable &k) {
    if (i >= md.size()) {
        throw StructuralError("label index out of range");
    }
    auto probe = probe_s_squared(md, k);
    if (!probe.perm) {
        throw MathError("S^2 is not a permutation matrix: " + probe.detail);
    }
    return (*probe.perm)[i];
}

std::vector<Complex> verlinde_raw(const ModularDatum &md, const kernels::KernelTable &k) {
    auto probe = probe_s_squared(md, k);
    if (!probe.perm) {
        throw MathError("Verlinde formula needs S^2 to be a permutation: " + probe.detail);
    }
    const auto &perm = *probe.perm;
    const std::size_t n = md.size();
    const ComplexMatrix &s = md.s_matrix();

    ComplexBuffer inverse_vacuum(n);
    for (std::size_t t = 0; t < n; t++) {
        Complex v = s(0, t);
        if (std::abs(v) == 0.0) {
            throw MathError("vacuum row has a zero entry at " + md.label(t));
        }
        inverse_vacuum.set(t, 1.0 / v);
    }

    std::vector<Complex> out(n * n * n);
    ComplexBuffer weights(n);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) {
            k.triple_product(s.row(i), s.row(j), inverse_vacuum.view(), weights.out());
            for (std::size_t c = 0; c < n; c++) {
                out[(i * n + j) * n + c] = k.dot(weights.view(), s.row(perm[c]));
            }
        }
    }
    return out;
}

FusionTensor verlinde_fusion(const ModularDatum &md, const kernels::KernelTable &k) {
    const std::size_t n = md.size();
    auto raw = verlinde_raw(md, k);
    FusionTensor tensor(n);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) {
            for (std::size_t c = 0; c < n; c++) {
                Complex v = raw[(i * n + j) * n + c];
                std::int64_t rounded = 0;
                bool integral = near_integer(v.real(), kIntegralityTolerance, &rounded) &&
                                std::abs(v.imag()) <= kIntegralityTolerance;
                if (!integral || rounded < 0) {
                    std::ostringstream os;
                    os << "Verlinde value N_{" << md.label(i) << "," << md.label(j) << "}^{" << md.label(c)
                       << "} = " << v.real() << (v.imag() < 0 ? "" : "+") << v.imag()
                       << "i is not a nonnegative integer";
                    throw MathError(os.str());
                }
                tensor.set(i, j, c, rounded);
            }
        }
    }
    return tensor;
}

ValidationReport validate(const ModularDatum &md, const kernels::KernelTable &k) {
    ValidationReport report;
    report.subject = "datum";
    const std::size_t n = md.size();
    const double tol = md.tolerance();
    const ComplexMatrix &s = md.s_matrix();

    {
        double dev = 0.0;
        std::string witness;
        for (std::size_t i = 0; i < n; i++) {
            for (std::size_t j = i + 1; j < n; j++) {
                double d = std::abs(s(i, j) - s(j, i));
                if (d > dev) {
                    dev = d;
                    witness = "S[" + md.label(i) + "," + md.label(j) + "] != S[" + md.label(j) + "," + md.label(i) + "]";
                }
            }
        }
        report.add("symmetric", dev <= tol, dev, dev <= tol ? "" : witness);
    }

    {
        double dev = 0.0;
        std::string witness;
        for (std::size_t i = 0; i < n; i++) {
            for (std::size_t j = 0; j < n; j++) {
                Complex v = k.dot_conj(s.row(i), s.row(j));
                double d = std::abs(v - (i == j ? 1.0 : 0.0));
                if (d > dev) {
                    dev = d;
                    witness = "(S S*)[" + md.label(i) + "," + md.label(j) + "]";
                }
            }
        }
        report.add("unitary", dev <= tol, dev, dev <= tol ? "" : witness + " off by " + format_deviation(dev));
    }

    auto probe = probe_s_squared(md, k);
    report.add("s_squared_permutation", probe.perm.has_value(), probe.deviation, probe.detail);

    {
        double dev = 0.0;
        std::string witness;
        for (std::size_t i = 0; i < n; i++) {
            for (Complex v : {s(0, i), s(i, 0)}) {
                dev = std::max(dev, std::abs(v.imag()));
                if ((v.real() <= tol || std::abs(v.imag()) > tol) && witness.empty()) {
                    witness = "vacuum entry at " + md.label(i) + " is not a positive real";
                }
            }
        }
        report.add("vacuum_positive", witness.empty(), dev, witness);
    }

    if (!probe.perm) {
        report.add("verlinde_integrality", false, 0.0, "skipped: S^2 is not a permutation");
        return report;
    }
    bool vacuum_row_nonzero = true;
    for (std::size_t t = 0; t < n; t++) {
        vacuum_row_nonzero = vacuum_row_nonzero && std::abs(s(0, t)) > 0.0;
    }
    if (!vacuum_row_nonzero) {
        report.add("verlinde_integrality", false, 0.0, "skipped: vacuum row has a zero entry");
        return report;
    }
    auto raw = verlinde_raw(md, k);
    double dev = 0.0;
    std::string witness;
    for (std::size_t idx = 0; idx < raw.size(); idx++) {
        Complex v = raw[idx];
        double d = std::abs(v - std::round(v.real()));
        bool negative = std::round(v.real()) < 0;
        if ((d > kIntegralityTolerance || negative) && witness.empty()) {
            std::size_t c = idx % n;
            std::size_t j = (idx / n) % n;
            std::size_t i = idx / (n * n);
            witness = "N_{" + md.label(i) + "," + md.label(j) + "}^{" + md.label(c) + "} = " +
                      format_deviation(v.real()) + (negative ? " is negative" : " is not integral");
        }
        dev = std::max(dev, d);
    }
    report.add("verlinde_integrality", witness.empty(), dev, witness);
    return report;
}

ValidationReport check_fusion_invariants(
    const ModularDatum &md, const FusionTensor &fusion, const kernels::KernelTable &k) {
    ValidationReport report;
    report.subject = "fusion";
    const std::size_t n = fusion.size();
    std::string unit_witness;
    std::string comm_witness;
    std::string dual_witness;
    auto perm = duality_permutation(md, k);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) {
            for (std::size_t c = 0; c < n; c++) {
                if (i == 0 && fusion.at(0, j, c) != (j == c ? 1 : 0) && unit_witness.empty()) {
                    unit_witness = "N_{0," + md.label(j) + "}^{" + md.label(c) + "}";
                }
                if (fusion.at(i, j, c) != fusion.at(j, i, c) && comm_witness.empty()) {
                    comm_witness = "N_{" + md.label(i) + "," + md.label(j) + "}^{" + md.label(c) + "}";
                }
                if (perm && fusion.at(i, j, c) != fusion.at((*perm)[i], (*perm)[j], (*perm)[c]) &&
                    dual_witness.empty()) {
                    dual_witness = "N_{" + md.label(i) + "," + md.label(j) + "}^{" + md.label(c) + "}";
                }
            }
        }
    }
    report.add("vacuum_unit", unit_witness.empty(), 0.0, unit_witness);
    report.add("commutative", comm_witness.empty(), 0.0, comm_witness);
    if (perm) {
        report.add("duality_symmetric", dual_witness.empty(), 0.0, dual_witness);
    } else {
        report.add_inapplicable("duality_symmetric", "S^2 is not a permutation");
    }
    return report;
}

double qdim(const ModularDatum &md, std::size_t i) {
    if (i >= md.size()) {
        throw StructuralError("label index out of range");
    }
    return md.s(0, i).real() / md.s(0, 0).real();
}

double global_dimension(const ModularDatum &md) {
    double total = 0.0;
    for (std::size_t i = 0; i < md.size(); i++) {
        double d = qdim(md, i);
        total += d * d;
    }
    return total;
}

Complex extended_s(const ModularDatum &md, const FormalModuleSum &u, const FormalModuleSum &w) {
    Complex total = 0.0;
    for (const auto &[i, mu] : u.terms()) {
        if (i >= md.size()) {
            throw StructuralError("formal sum references unknown label index " + std::to_string(i));
        }
        for (const auto &[j, mw] : w.terms()) {
            if (j >= md.size()) {
                throw StructuralError("formal sum references unknown label index " + std::to_string(j));
            }
            total += boost::rational_cast<double>(mu * mw) * md.s(i, j);
        }
    }
    return total;
}

bool identify_by_s_row(const ModularDatum &md, const FormalModuleSum &u, const FormalModuleSum &w) {
    for (std::size_t c = 0; c < md.size(); c++) {
        auto probe = FormalModuleSum::single(c);
        if (std::abs(extended_s(md, u, probe) - extended_s(md, w, probe)) > md.tolerance()) {
            return false;
        }
    }
    return true;
}

ValidationReport fusion_s_identity_check(
    const ModularDatum &md, const FusionTensor &fusion, const kernels::KernelTable &k) {
    ValidationReport report;
    report.subject = "fusion_s_identity";
    const std::size_t n = md.size();
    ComplexMatrix columns = md.s_matrix().transpose();
    ComplexBuffer coefficients(n);
    double dev = 0.0;
    std::string witness;
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) {
            for (std::size_t l = 0; l < n; l++) {
                coefficients.re[l] = static_cast<double>(fusion.at(i, j, l));
            }
            for (std::size_t c = 0; c < n; c++) {
                Complex lhs = k.dot(coefficients.view(), columns.row(c));
                Complex rhs = md.s(i, c) * md.s(j, c) / md.s(0, c);
                double d = std::abs(lhs - rhs);
                if (d > dev) {
                    dev = d;
                    witness = "(" + md.label(i) + "," + md.label(j) + "," + md.label(c) + ")";
                }
            }
        }
    }
    bool ok = dev <= md.tolerance();
    report.add("fusion_s_identity", ok, dev, ok ? "" : "worst triple " + witness);
    return report;
}

}  // namespace fusionkit
