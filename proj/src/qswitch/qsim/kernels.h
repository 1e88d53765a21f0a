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

#ifndef QSWITCH_QSIM_KERNELS_H
#define QSWITCH_QSIM_KERNELS_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace qswitch::kernels {

using Amplitude = std::complex<double>;

enum class Isa { Scalar, Avx2 };

const char *isa_name(Isa isa);

/// Inner loops of the simulators. Every variant must produce bit-identical
/// results for xor_into and cn_amplitudes; norm_squared may differ in
/// summation order.
struct KernelTable {
    Isa isa;
    /// dst[k] ^= src[k] for k < words.
    void (*xor_into)(std::uint64_t *dst, const std::uint64_t *src, std::size_t words);
    /// CN on a 2^num_qubits amplitude array: for every basis index with the
    /// control bit set, swap the amplitudes of target bit 0 and 1.
    /// Requires num_qubits >= 2 and control != target.
    void (*cn_amplitudes)(Amplitude *amps, std::size_t num_qubits, std::size_t control,
                          std::size_t target);
    /// Sum of |a_i|^2.
    double (*norm_squared)(const Amplitude *amps, std::size_t count);
};

const KernelTable &scalar_kernels();

/// nullptr when the build has no AVX2 variant or the CPU lacks AVX2.
const KernelTable *avx2_kernels();

/// Every variant usable on this machine, scalar first.
std::vector<const KernelTable *> available_kernels();

/// Best variant for this CPU unless overridden with select_isa().
const KernelTable &active_kernels();

/// Throws std::invalid_argument if the variant is unavailable.
void select_isa(Isa isa);

}  // namespace qswitch::kernels

#endif
