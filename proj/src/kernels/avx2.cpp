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

// AVX2 + FMA kernels. This translation unit is compiled with -mavx2 -mfma
// and must only be entered after a runtime CPU check (see dispatch.cpp).

#include <immintrin.h>

#include "fusionkit/kernels.hpp"

namespace fusionkit::kernels::avx2 {

namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d swapped = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}

}  // namespace

std::complex<double> dot(ComplexView a, ComplexView b) {
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    std::size_t s = 0;
    for (; s + 4 <= a.size; s += 4) {
        __m256d ar = _mm256_loadu_pd(a.re + s);
        __m256d ai = _mm256_loadu_pd(a.im + s);
        __m256d br = _mm256_loadu_pd(b.re + s);
        __m256d bi = _mm256_loadu_pd(b.im + s);
        acc_re = _mm256_fmadd_pd(ar, br, acc_re);
        acc_re = _mm256_fnmadd_pd(ai, bi, acc_re);
        acc_im = _mm256_fmadd_pd(ar, bi, acc_im);
        acc_im = _mm256_fmadd_pd(ai, br, acc_im);
    }
    double re = hsum(acc_re);
    double im = hsum(acc_im);
    for (; s < a.size; s++) {
        re += a.re[s] * b.re[s] - a.im[s] * b.im[s];
        im += a.re[s] * b.im[s] + a.im[s] * b.re[s];
    }
    return {re, im};
}

std::complex<double> dot_conj(ComplexView a, ComplexView b) {
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    std::size_t s = 0;
    for (; s + 4 <= a.size; s += 4) {
        __m256d ar = _mm256_loadu_pd(a.re + s);
        __m256d ai = _mm256_loadu_pd(a.im + s);
        __m256d br = _mm256_loadu_pd(b.re + s);
        __m256d bi = _mm256_loadu_pd(b.im + s);
        acc_re = _mm256_fmadd_pd(ar, br, acc_re);
        acc_re = _mm256_fmadd_pd(ai, bi, acc_re);
        acc_im = _mm256_fmadd_pd(ai, br, acc_im);
        acc_im = _mm256_fnmadd_pd(ar, bi, acc_im);
    }
    double re = hsum(acc_re);
    double im = hsum(acc_im);
    for (; s < a.size; s++) {
        re += a.re[s] * b.re[s] + a.im[s] * b.im[s];
        im += a.im[s] * b.re[s] - a.re[s] * b.im[s];
    }
    return {re, im};
}

void triple_product(ComplexView a, ComplexView b, ComplexView c, ComplexOut out) {
    std::size_t s = 0;
    for (; s + 4 <= a.size; s += 4) {
        __m256d ar = _mm256_loadu_pd(a.re + s);
        __m256d ai = _mm256_loadu_pd(a.im + s);
        __m256d br = _mm256_loadu_pd(b.re + s);
        __m256d bi = _mm256_loadu_pd(b.im + s);
        __m256d cr = _mm256_loadu_pd(c.re + s);
        __m256d ci = _mm256_loadu_pd(c.im + s);
        __m256d tr = _mm256_fmsub_pd(ar, br, _mm256_mul_pd(ai, bi));
        __m256d ti = _mm256_fmadd_pd(ar, bi, _mm256_mul_pd(ai, br));
        _mm256_storeu_pd(out.re + s, _mm256_fmsub_pd(tr, cr, _mm256_mul_pd(ti, ci)));
        _mm256_storeu_pd(out.im + s, _mm256_fmadd_pd(tr, ci, _mm256_mul_pd(ti, cr)));
    }
    for (; s < a.size; s++) {
        double tr = a.re[s] * b.re[s] - a.im[s] * b.im[s];
        double ti = a.re[s] * b.im[s] + a.im[s] * b.re[s];
        out.re[s] = tr * c.re[s] - ti * c.im[s];
        out.im[s] = tr * c.im[s] + ti * c.re[s];
    }
}

}  // namespace fusionkit::kernels::avx2
