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

#include "qswitch/fabric/bit_string.h"

#include <algorithm>

namespace qswitch {

BitString::BitString(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {}

void BitString::set_bit(std::size_t i, bool value) {
    if (i >= width_) {
        throw std::out_of_range("bit index out of range");
    }
    std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (value) {
        words_[i / 64] |= mask;
    } else {
        words_[i / 64] &= ~mask;
    }
}

bool BitString::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

BitString BitString::from_hex(std::string_view hex, std::size_t width) {
    if (hex.empty()) {
        throw std::invalid_argument("empty hex payload");
    }
    BitString out(width);
    std::size_t digits = hex.size();
    for (std::size_t k = 0; k < digits; k++) {
        char ch = hex[digits - 1 - k];
        unsigned value;
        if (ch >= '0' && ch <= '9') {
            value = ch - '0';
        } else if (ch >= 'a' && ch <= 'f') {
            value = ch - 'a' + 10;
        } else if (ch >= 'A' && ch <= 'F') {
            value = ch - 'A' + 10;
        } else {
            throw std::invalid_argument("bad hex digit '" + std::string(1, ch) + "'");
        }
        for (std::size_t b = 0; b < 4; b++) {
            if (!((value >> b) & 1)) {
                continue;
            }
            std::size_t bit = 4 * k + b;
            if (bit >= width) {
                throw std::invalid_argument("hex payload " + std::string(hex) + " wider than " +
                                            std::to_string(width) + " bits");
            }
            out.set_bit(bit, true);
        }
    }
    return out;
}

std::string BitString::to_hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::size_t digits = (width_ + 3) / 4;
    std::string out(digits, '0');
    for (std::size_t k = 0; k < digits; k++) {
        unsigned value = 0;
        for (std::size_t b = 0; b < 4; b++) {
            std::size_t bit = 4 * k + b;
            if (bit < width_ && this->bit(bit)) {
                value |= 1u << b;
            }
        }
        out[digits - 1 - k] = kDigits[value];
    }
    return out;
}

}  // namespace qswitch
