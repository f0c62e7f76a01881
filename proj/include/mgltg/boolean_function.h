// Copyright 2026 The matchgate-ltg Authors
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

#ifndef MGLTG_BOOLEAN_FUNCTION_H
#define MGLTG_BOOLEAN_FUNCTION_H

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace mgltg {

/// A fixed-length string of bits x_1 ... x_n (stored 0-based).
///
/// Row-index convention used everywhere in the library: x_1 is the most
/// significant bit of the integer index, so "0010" has index 2.
class BitString {
   public:
    BitString() = default;
    explicit BitString(size_t size) : bits_(size, 0) {
    }
    explicit BitString(std::vector<uint8_t> bits);

    static BitString parse(std::string_view text);
    static BitString from_index(uint64_t index, size_t size);

    size_t size() const {
        return bits_.size();
    }
    uint8_t operator[](size_t k) const {
        return bits_[k];
    }
    void set(size_t k, bool value) {
        bits_[k] = value ? 1 : 0;
    }

    uint64_t index() const;
    std::string str() const;

    /// Copy with bit k (0-based) flipped.
    BitString flipped(size_t k) const;
    /// Copy extended with trailing zeros up to `size` bits.
    BitString padded(size_t size) const;

    /// The +-1 encoding: 0 -> +1, 1 -> -1.
    template <typename Scalar = double>
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> signs() const {
        Eigen::Matrix<Scalar, Eigen::Dynamic, 1> out(static_cast<Eigen::Index>(bits_.size()));
        for (size_t k = 0; k < bits_.size(); k++) {
            out[static_cast<Eigen::Index>(k)] = bits_[k] ? Scalar(-1) : Scalar(1);
        }
        return out;
    }

    bool operator==(const BitString &other) const = default;

   private:
    std::vector<uint8_t> bits_;
};

/// f: {0,1}^n -> {0,1} as an explicit truth table of length 2^n.
class BooleanFunction {
   public:
    BooleanFunction(size_t num_inputs, std::vector<uint8_t> table);

    /// Binary string of length 2^n ("00010111"), or hex with a "0x" prefix
    /// (each hex digit expands to four table bits, most significant first).
    static BooleanFunction parse(std::string_view text);
    static BooleanFunction from_predicate(size_t num_inputs, const std::function<bool(const BitString &)> &pred);
    /// The census enumerates functions by this code: bit r of `code` (r = 0 the
    /// least significant) is the table entry of row r.
    static BooleanFunction from_code(size_t num_inputs, uint64_t code);

    static BooleanFunction constant(size_t num_inputs, bool value);
    /// f(x) = x_k, or 1 - x_k when negated. k is 1-based.
    static BooleanFunction dictator(size_t num_inputs, size_t k, bool negated = false);
    /// 0 iff x has more zeros than ones. Ties (even n) map to 1.
    static BooleanFunction majority(size_t num_inputs);
    static BooleanFunction parity(size_t num_inputs);
    static BooleanFunction conjunction(size_t num_inputs);
    static BooleanFunction disjunction(size_t num_inputs);

    size_t num_inputs() const {
        return num_inputs_;
    }
    size_t num_rows() const {
        return table_.size();
    }
    bool value(uint64_t row) const {
        return table_[row] != 0;
    }
    bool operator()(const BitString &x) const;

    std::string str() const;
    bool operator==(const BooleanFunction &other) const = default;

   private:
    size_t num_inputs_;
    std::vector<uint8_t> table_;
};

}  // namespace mgltg

#endif
