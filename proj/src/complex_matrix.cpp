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

#include "fusionkit/complex_matrix.hpp"

namespace fusionkit {

ComplexMatrix::ComplexMatrix(std::size_t n) : n_(n), re_(n * n, 0.0), im_(n * n, 0.0) {}

ComplexMatrix ComplexMatrix::from_rows(const std::vector<std::vector<Complex>> &rows) {
    ComplexMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); i++) {
        if (rows[i].size() != rows.size()) {
            throw StructuralError(
                "matrix row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                " entries, expected " + std::to_string(rows.size()));
        }
        for (std::size_t j = 0; j < rows.size(); j++) {
            m.set(i, j, rows[i][j]);
        }
    }
    return m;
}

void ComplexMatrix::set(std::size_t i, std::size_t j, Complex value) {
    re_[i * n_ + j] = value.real();
    im_[i * n_ + j] = value.imag();
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix t(n_);
    for (std::size_t i = 0; i < n_; i++) {
        for (std::size_t j = 0; j < n_; j++) {
            t.set(j, i, (*this)(i, j));
        }
    }
    return t;
}

ComplexMatrix ComplexMatrix::multiply(const ComplexMatrix &other, const kernels::KernelTable &k) const {
    ComplexMatrix cols = other.transpose();
    ComplexMatrix out(n_);
    for (std::size_t i = 0; i < n_; i++) {
        for (std::size_t j = 0; j < n_; j++) {
            out.set(i, j, k.dot(row(i), cols.row(j)));
        }
    }
    return out;
}

}  // namespace fusionkit
