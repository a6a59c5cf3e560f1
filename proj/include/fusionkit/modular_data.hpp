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

#ifndef FUSIONKIT_MODULAR_DATA_HPP
#define FUSIONKIT_MODULAR_DATA_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fusionkit/common.hpp"
#include "fusionkit/complex_matrix.hpp"
#include "fusionkit/kernels.hpp"

namespace fusionkit {

/// Finite nonnegative-rational combination of labels. Labels are indices
/// into whichever label set (base datum or orbifold catalog) the sum is
/// used with.
class FormalModuleSum {
   public:
    FormalModuleSum() = default;
    static FormalModuleSum single(std::size_t label, Rational multiplicity = 1);

    /// Adds `multiplicity` copies of `label`. Negative multiplicities throw.
    void add(std::size_t label, Rational multiplicity = 1);
    Rational multiplicity(std::size_t label) const;
    const std::map<std::size_t, Rational> &terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    Rational total() const;

    FormalModuleSum scaled(Rational factor) const;
    FormalModuleSum operator+(const FormalModuleSum &other) const;
    bool operator==(const FormalModuleSum &other) const = default;

   private:
    std::map<std::size_t, Rational> terms_;  // only nonzero entries
};

/// Labels, S-matrix and tolerance of a modular datum. The vacuum is always
/// index 0. Construction checks shape only; `validate` checks the axioms.
class ModularDatum {
   public:
    ModularDatum(std::vector<std::string> labels, ComplexMatrix s, double tolerance = kDefaultTolerance);

    /// Same as the constructor, but also requires `vacuum` to name the first
    /// label and takes the matrix as nested rows.
    static ModularDatum create(
        std::vector<std::string> labels,
        const std::string &vacuum,
        const std::vector<std::vector<Complex>> &s_rows,
        double tolerance = kDefaultTolerance);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string> &labels() const { return labels_; }
    const std::string &label(std::size_t i) const { return labels_.at(i); }
    std::size_t index_of(const std::string &label) const;
    static constexpr std::size_t vacuum() { return 0; }

    Complex s(std::size_t i, std::size_t j) const { return s_(i, j); }
    const ComplexMatrix &s_matrix() const { return s_; }
    double tolerance() const { return tolerance_; }

    ModularDatum with_tolerance(double tolerance) const;

   private:
    std::vector<std::string> labels_;
    ComplexMatrix s_;
    double tolerance_;
};

/// Nonnegative integer fusion coefficients N_{i,j}^k, dense over label triples.
class FusionTensor {
   public:
    FusionTensor() = default;
    explicit FusionTensor(std::size_t n) : n_(n), coeff_(n * n * n, 0) {}

    std::size_t size() const { return n_; }
    std::int64_t at(std::size_t i, std::size_t j, std::size_t k) const { return coeff_[(i * n_ + j) * n_ + k]; }
    void set(std::size_t i, std::size_t j, std::size_t k, std::int64_t v) { coeff_[(i * n_ + j) * n_ + k] = v; }

    /// Expansion of i x j as a formal sum of labels.
    FormalModuleSum product(std::size_t i, std::size_t j) const;

    bool operator==(const FusionTensor &other) const = default;

   private:
    std::size_t n_ = 0;
    std::vector<std::int64_t> coeff_;
};

/// Checks unitarity, symmetry, S^2 being a permutation, positivity of the
/// vacuum row and column, and Verlinde integrality. Every failed axiom is
/// listed with its maximum deviation.
ValidationReport validate(const ModularDatum &md, const kernels::KernelTable &k = kernels::active());

/// The permutation i -> i' read off S^2, or nullopt when S^2 is not a
/// permutation matrix within tolerance.
std::optional<std::vector<std::size_t>> duality_permutation(
    const ModularDatum &md, const kernels::KernelTable &k = kernels::active());

/// Dual label i'. Throws MathError when S^2 is not a permutation.
std::size_t dual(const ModularDatum &md, std::size_t i, const kernels::KernelTable &k = kernels::active());

/// Unrounded Verlinde sums sum_s S_{i,s} S_{j,s} S_{k',s} / S_{0,s}, laid
/// out like FusionTensor. Requires S^2 to be a permutation.
std::vector<Complex> verlinde_raw(const ModularDatum &md, const kernels::KernelTable &k = kernels::active());

/// Rounded Verlinde coefficients. Throws MathError if any raw value is more
/// than kIntegralityTolerance from a nonnegative integer.
FusionTensor verlinde_fusion(const ModularDatum &md, const kernels::KernelTable &k = kernels::active());

/// Vacuum unit, commutativity and N_{i,j}^k = N_{i',j'}^{k'}.
ValidationReport check_fusion_invariants(
    const ModularDatum &md, const FusionTensor &fusion, const kernels::KernelTable &k = kernels::active());

double qdim(const ModularDatum &md, std::size_t i);
double global_dimension(const ModularDatum &md);

/// Bilinear extension of S to formal sums: sum_ij mult_U(i) mult_W(j) S_{i,j}.
Complex extended_s(const ModularDatum &md, const FormalModuleSum &u, const FormalModuleSum &w);

/// True iff U and W have the same extended S-row against every label.
bool identify_by_s_row(const ModularDatum &md, const FormalModuleSum &u, const FormalModuleSum &w);

/// Verifies sum_l N_{i,j}^l S_{l,k} = S_{i,k} S_{j,k} / S_{0,k} for all triples.
ValidationReport fusion_s_identity_check(
    const ModularDatum &md, const FusionTensor &fusion, const kernels::KernelTable &k = kernels::active());

}  // namespace fusionkit

#endif
