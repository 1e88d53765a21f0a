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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qswitch/digraph/random_map.h"
#include "testing/fixtures.h"

using namespace qswitch;
using namespace qswitch::kernels;

namespace {

std::vector<Amplitude> random_amps(std::size_t count, std::mt19937_64 &rng) {
    std::vector<Amplitude> out(count);
    for (auto &a : out) {
        a = {static_cast<double>(static_cast<std::int64_t>(rng() >> 1)) / 1e18,
             static_cast<double>(static_cast<std::int64_t>(rng() >> 1)) / 1e18};
    }
    return out;
}

// Reference loop written directly from the definition.
void reference_cn(std::vector<Amplitude> &amps, std::size_t control, std::size_t target) {
    for (std::size_t i = 0; i < amps.size(); i++) {
        if (((i >> control) & 1) && !((i >> target) & 1)) {
            std::swap(amps[i], amps[i | (std::size_t{1} << target)]);
        }
    }
}

}  // namespace

TEST(Kernels, scalar_always_available) {
    auto all = available_kernels();
    ASSERT_FALSE(all.empty());
    EXPECT_EQ(all.front()->isa, Isa::Scalar);
    EXPECT_STREQ(isa_name(Isa::Avx2), "avx2");
}

TEST(Kernels, cn_matches_reference_for_every_variant) {
    auto rng = qtest::test_rng(8);
    for (const KernelTable *k : available_kernels()) {
        for (std::size_t n = 2; n <= 7; n++) {
            for (std::size_t c = 0; c < n; c++) {
                for (std::size_t t = 0; t < n; t++) {
                    if (c == t) {
                        continue;
                    }
                    auto amps = random_amps(std::size_t{1} << n, rng);
                    auto want = amps;
                    reference_cn(want, c, t);
                    k->cn_amplitudes(amps.data(), n, c, t);
                    ASSERT_EQ(amps, want) << isa_name(k->isa) << " n=" << n << " c=" << c << " t=" << t;
                }
            }
        }
    }
}

TEST(Kernels, xor_matches_scalar_on_odd_lengths) {
    auto rng = qtest::test_rng(9);
    for (const KernelTable *k : available_kernels()) {
        for (std::size_t words = 0; words <= 37; words++) {
            std::vector<std::uint64_t> dst(words);
            std::vector<std::uint64_t> src(words);
            for (std::size_t w = 0; w < words; w++) {
                dst[w] = rng();
                src[w] = rng();
            }
            auto want = dst;
            for (std::size_t w = 0; w < words; w++) {
                want[w] ^= src[w];
            }
            k->xor_into(dst.data(), src.data(), words);
            ASSERT_EQ(dst, want) << isa_name(k->isa) << " words=" << words;
        }
    }
}

TEST(Kernels, norm_agrees_across_variants) {
    auto rng = qtest::test_rng(10);
    for (std::size_t count : {1u, 2u, 3u, 4u, 5u, 64u, 1023u, 4096u}) {
        auto amps = random_amps(count, rng);
        double ref = 0;
        for (auto a : amps) {
            ref += std::norm(a);
        }
        for (const KernelTable *k : available_kernels()) {
            EXPECT_NEAR(k->norm_squared(amps.data(), count), ref, 1e-12 * std::max(1.0, ref));
        }
    }
}

TEST(Kernels, select_isa_switches_active_table) {
    Isa before = active_kernels().isa;
    select_isa(Isa::Scalar);
    EXPECT_EQ(active_kernels().isa, Isa::Scalar);
    if (avx2_kernels() != nullptr) {
        select_isa(Isa::Avx2);
        EXPECT_EQ(active_kernels().isa, Isa::Avx2);
    } else {
        EXPECT_THROW(select_isa(Isa::Avx2), std::invalid_argument);
    }
    select_isa(before);
}
