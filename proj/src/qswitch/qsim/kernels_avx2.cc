// Copyright 2026 The qswitch Authors
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

// Compiled with -mavx2. Only reached after a runtime CPU check.

#include <immintrin.h>

#include "qswitch/qsim/kernels.h"

namespace qswitch::kernels {

namespace {

void xor_into_avx2(std::uint64_t *dst, const std::uint64_t *src, std::size_t words) {
    std::size_t k = 0;
    for (; k + 4 <= words; k += 4) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(dst + k));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(src + k));
        _mm256_storeu_si256(reinterpret_cast<__m256i *>(dst + k), _mm256_xor_si256(a, b));
    }
    for (; k < words; k++) {
        dst[k] ^= src[k];
    }
}

// One __m256d holds two amplitudes: basis indices i and i + 1 for even i.
void cn_amplitudes_avx2(Amplitude *amps, std::size_t num_qubits, std::size_t control,
                        std::size_t target) {
    std::size_t dim = std::size_t{1} << num_qubits;
    std::size_t cm = std::size_t{1} << control;
    std::size_t tm = std::size_t{1} << target;
    auto *d = reinterpret_cast<double *>(amps);

    if (target == 0) {
        // Pairs (i, i + 1) with the control bit set swap within one register.
        for (std::size_t i = 0; i < dim; i += 2) {
            if (i & cm) {
                __m256d v = _mm256_loadu_pd(d + 2 * i);
                _mm256_storeu_pd(d + 2 * i, _mm256_permute4x64_pd(v, 0x4E));
            }
        }
        return;
    }
    if (control == 0) {
        // Odd index i + 1 swaps with i + 1 + tm: exchange the upper halves.
        for (std::size_t i = 0; i < dim; i += 2) {
            if (!(i & tm)) {
                __m256d x = _mm256_loadu_pd(d + 2 * i);
                __m256d y = _mm256_loadu_pd(d + 2 * (i + tm));
                _mm256_storeu_pd(d + 2 * i, _mm256_blend_pd(x, y, 0xC));
                _mm256_storeu_pd(d + 2 * (i + tm), _mm256_blend_pd(y, x, 0xC));
            }
        }
        return;
    }
    for (std::size_t i = 0; i < dim; i += 2) {
        if ((i & cm) && !(i & tm)) {
            __m256d x = _mm256_loadu_pd(d + 2 * i);
            __m256d y = _mm256_loadu_pd(d + 2 * (i + tm));
            _mm256_storeu_pd(d + 2 * i, y);
            _mm256_storeu_pd(d + 2 * (i + tm), x);
        }
    }
}

double norm_squared_avx2(const Amplitude *amps, std::size_t count) {
    const auto *d = reinterpret_cast<const double *>(amps);
    std::size_t doubles = 2 * count;
    __m256d acc = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 4 <= doubles; k += 4) {
        __m256d v = _mm256_loadu_pd(d + k);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; k < doubles; k++) {
        total += d[k] * d[k];
    }
    return total;
}

}  // namespace

const KernelTable &avx2_kernel_table() {
    static const KernelTable table{Isa::Avx2, xor_into_avx2, cn_amplitudes_avx2, norm_squared_avx2};
    return table;
}

}  // namespace qswitch::kernels
