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

#include "qswitch/qsim/kernels.h"

#include <atomic>
#include <stdexcept>
#include <string>

namespace qswitch::kernels {

#if defined(QSWITCH_HAVE_AVX2_KERNELS)
const KernelTable &avx2_kernel_table();
#endif

namespace {

const KernelTable &best_kernels() {
    if (const auto *avx2 = avx2_kernels()) {
        return *avx2;
    }
    return scalar_kernels();
}

std::atomic<const KernelTable *> &active_slot() {
    static std::atomic<const KernelTable *> slot{&best_kernels()};
    return slot;
}

}  // namespace

const char *isa_name(Isa isa) {
    switch (isa) {
        case Isa::Scalar:
            return "scalar";
        case Isa::Avx2:
            return "avx2";
    }
    return "?";
}

const KernelTable *avx2_kernels() {
#if defined(QSWITCH_HAVE_AVX2_KERNELS)
    static const bool supported = __builtin_cpu_supports("avx2");
    if (supported) {
        return &avx2_kernel_table();
    }
#endif
    return nullptr;
}

std::vector<const KernelTable *> available_kernels() {
    std::vector<const KernelTable *> out{&scalar_kernels()};
    if (const auto *avx2 = avx2_kernels()) {
        out.push_back(avx2);
    }
    return out;
}

const KernelTable &active_kernels() {
    return *active_slot().load(std::memory_order_acquire);
}

void select_isa(Isa isa) {
    const KernelTable *table = nullptr;
    switch (isa) {
        case Isa::Scalar:
            table = &scalar_kernels();
            break;
        case Isa::Avx2:
            table = avx2_kernels();
            break;
    }
    if (table == nullptr) {
        throw std::invalid_argument(std::string("kernel variant unavailable: ") + isa_name(isa));
    }
    active_slot().store(table, std::memory_order_release);
}

}  // namespace qswitch::kernels
