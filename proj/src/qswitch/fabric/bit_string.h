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

#ifndef QSWITCH_FABRIC_BIT_STRING_H
#define QSWITCH_FABRIC_BIT_STRING_H

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qswitch {

/// A w-bit payload word. Bit 0 is the least significant bit of the hex form.
class BitString {
   public:
    BitString() = default;
    /// All zeros.
    explicit BitString(std::size_t width);

    /// Big-endian hex, at most ceil(width / 4) digits. Throws std::invalid_argument
    /// on a bad digit or a value wider than \p width.
    static BitString from_hex(std::string_view hex, std::size_t width);
    /// Lower-case, exactly ceil(width / 4) digits.
    std::string to_hex() const;

    std::size_t width() const { return width_; }
    bool bit(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }
    void set_bit(std::size_t i, bool value);
    bool is_zero() const;

    const std::vector<std::uint64_t> &words() const { return words_; }
    std::vector<std::uint64_t> &words() { return words_; }

    friend auto operator<=>(const BitString &, const BitString &) = default;

   private:
    std::size_t width_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace qswitch

#endif
