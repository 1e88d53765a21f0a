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

#include <utility>

#include "qswitch/qsim/kernels.h"

namespace qswitch::kernels {

namespace {

void xor_into_scalar(std::uint64_t *dst, const std::uint64_t *src, std::size_t words) {
    for (std::size_t k = 0; k < words; k++) {
        dst[k] ^= src[k];
    }
}

void cn_amplitudes_scalar(Amplitude *amps, std::size_t num_qubits, std::size_t control,
                          std::size_t target) {
    std::size_t dim = std::size_t{1} << num_qubits;
    std::size_t cm = std::size_t{1} << control;
    std::size_t tm = std::size_t{1} << target;
    for (std::size_t i = 0; i < dim; i++) {
        if ((i & cm) && !(i & tm)) {
            std::swap(amps[i], amps[i | tm]);
        }
    }
}

double norm_squared_scalar(const Amplitude *amps, std::size_t count) {
    double total = 0;
    for (std::size_t i = 0; i < count; i++) {
        total += std::norm(amps[i]);
    }
    return total;
}

}  // namespace

const KernelTable &scalar_kernels() {
    static const KernelTable table{Isa::Scalar, xor_into_scalar, cn_amplitudes_scalar,
                                   norm_squared_scalar};
    return table;
}

}  // namespace qswitch::kernels
