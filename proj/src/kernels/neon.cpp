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

// AArch64 NEON kernels (two doubles per lane group). NEON is mandatory on
// AArch64, so no runtime probe is needed.

#include <arm_neon.h>

#include "fusionkit/kernels.hpp"

namespace fusionkit::kernels::neon {

std::complex<double> dot(ComplexView a, ComplexView b) {
    float64x2_t acc_re = vdupq_n_f64(0.0);
    float64x2_t acc_im = vdupq_n_f64(0.0);
    std::size_t s = 0;
    for (; s + 2 <= a.size; s += 2) {
        float64x2_t ar = vld1q_f64(a.re + s);
        float64x2_t ai = vld1q_f64(a.im + s);
        float64x2_t br = vld1q_f64(b.re + s);
        float64x2_t bi = vld1q_f64(b.im + s);
        acc_re = vfmaq_f64(acc_re, ar, br);
        acc_re = vfmsq_f64(acc_re, ai, bi);
        acc_im = vfmaq_f64(acc_im, ar, bi);
        acc_im = vfmaq_f64(acc_im, ai, br);
    }
    double re = vaddvq_f64(acc_re);
    double im = vaddvq_f64(acc_im);
    for (; s < a.size; s++) {
        re += a.re[s] * b.re[s] - a.im[s] * b.im[s];
        im += a.re[s] * b.im[s] + a.im[s] * b.re[s];
    }
    return {re, im};
}

std::complex<double> dot_conj(ComplexView a, ComplexView b) {
    float64x2_t acc_re = vdupq_n_f64(0.0);
    float64x2_t acc_im = vdupq_n_f64(0.0);
    std::size_t s = 0;
    for (; s + 2 <= a.size; s += 2) {
        float64x2_t ar = vld1q_f64(a.re + s);
        float64x2_t ai = vld1q_f64(a.im + s);
        float64x2_t br = vld1q_f64(b.re + s);
        float64x2_t bi = vld1q_f64(b.im + s);
        acc_re = vfmaq_f64(acc_re, ar, br);
        acc_re = vfmaq_f64(acc_re, ai, bi);
        acc_im = vfmaq_f64(acc_im, ai, br);
        acc_im = vfmsq_f64(acc_im, ar, bi);
    }
    double re = vaddvq_f64(acc_re);
    double im = vaddvq_f64(acc_im);
    for (; s < a.size; s++) {
        re += a.re[s] * b.re[s] + a.im[s] * b.im[s];
        im += a.im[s] * b.re[s] - a.re[s] * b.im[s];
    }
    return {re, im};
}

void triple_product(ComplexView a, ComplexView b, ComplexView c, ComplexOut out) {
    std::size_t s = 0;
    for (; s + 2 <= a.size; s += 2) {
        float64x2_t ar = vld1q_f64(a.re + s);
        float64x2_t ai = vld1q_f64(a.im + s);
        float64x2_t br = vld1q_f64(b.re + s);
        float64x2_t bi = vld1q_f64(b.im + s);
        float64x2_t cr = vld1q_f64(c.re + s);
        float64x2_t ci = vld1q_f64(c.im + s);
        float64x2_t tr = vfmsq_f64(vmulq_f64(ar, br), ai, bi);
        float64x2_t ti = vfmaq_f64(vmulq_f64(ar, bi), ai, br);
        vst1q_f64(out.re + s, vfmsq_f64(vmulq_f64(tr, cr), ti, ci));
        vst1q_f64(out.im + s, vfmaq_f64(vmulq_f64(tr, ci), ti, cr));
    }
    for (; s < a.size; s++) {
        double tr = a.re[s] * b.re[s] - a.im[s] * b.im[s];
        double ti = a.re[s] * b.im[s] + a.im[s] * b.re[s];
        out.re[s] = tr * c.re[s] - ti * c.im[s];
        out.im[s] = tr * c.im[s] + ti * c.re[s];
    }
}

}  // namespace fusionkit::kernels::neon
