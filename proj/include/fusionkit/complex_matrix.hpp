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

#ifndef FUSIONKIT_COMPLEX_MATRIX_HPP
#define FUSIONKIT_COMPLEX_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "fusionkit/common.hpp"
#include "fusionkit/kernels.hpp"

namespace fusionkit {

/// Square complex matrix stored as two row-major planes (real, imaginary)
/// so rows can be handed to the vector kernels without shuffling.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t n);
    static ComplexMatrix from_rows(const std::vector<std::vector<Complex>> &rows);

    std::size_t size() const { return n_; }

    Complex operator()(std::size_t i, std::size_t j) const { return {re_[i * n_ + j], im_[i * n_ + j]}; }
    void set(std::size_t i, std::size_t j, Complex value);

    kernels::ComplexView row(std::size_t i) const { return {re_.data() + i * n_, im_.data() + i * n_, n_}; }

    ComplexMatrix transpose() const;
    ComplexMatrix multiply(const ComplexMatrix &other, const kernels::KernelTable &k) const;

   private:
    std::size_t n_ = 0;
    std::vector<double> re_;
    std::vector<double> im_;
};

/// Owning split-layout vector, the scratch counterpart of ComplexMatrix rows.
struct ComplexBuffer {
    std::vector<double> re;
    std::vector<double> im;

    explicit ComplexBuffer(std::size_t n = 0) : re(n, 0.0), im(n, 0.0) {}
    std::size_t size() const { return re.size(); }
    kernels::ComplexView view() const { return {re.data(), im.data(), re.size()}; }
    kernels::ComplexOut out() { return {re.data(), im.data(), re.size()}; }
    Complex operator[](std::size_t i) const { return {re[i], im[i]}; }
    void set(std::size_t i, Complex v) {
        re[i] = v.real();
        im[i] = v.imag();
    }
};

}  // namespace fusionkit

#endif
