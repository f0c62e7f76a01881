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

#include "mgltg/boolean_function.h"

#include <bit>

#include "mgltg/errors.h"

using namespace mgltg;

namespace {

constexpr size_t kMaxTableInputs = 30;

}  // namespace

BitString::BitString(std::vector<uint8_t> bits) : bits_(std::move(bits)) {
    for (auto &b : bits_) {
        if (b > 1) {
            throw InvalidInput("bit values must be 0 or 1");
        }
    }
}

BitString BitString::parse(std::string_view text) {
    std::vector<uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw InvalidInput("bit string may only contain '0' and '1', got \"" + std::string(text) + "\"");
        }
        bits.push_back(c == '1');
    }
    return BitString(std::move(bits));
}

BitString BitString::from_index(uint64_t index, size_t size) {
    if (size < 64 && (index >> size) != 0) {
        throw InvalidInput("index does not fit in the requested number of bits");
    }
    BitString out(size);
    for (size_t k = 0; k < size; k++) {
        out.bits_[k] = (index >> (size - 1 - k)) & 1;
    }
    return out;
}

uint64_t BitString::index() const {
    if (bits_.size() > 64) {
        throw CapacityError("bit string too long to convert to an index");
    }
    uint64_t out = 0;
    for (auto b : bits_) {
        out = (out << 1) | b;
    }
    return out;
}

std::string BitString::str() const {
    std::string out;
    out.reserve(bits_.size());
    for (auto b : bits_) {
        out.push_back(b ? '1' : '0');
    }
    return out;
}

BitString BitString::flipped(size_t k) const {
    BitString out = *this;
    out.bits_.at(k) ^= 1;
    return out;
}

BitString BitString::padded(size_t size) const {
    if (size < bits_.size()) {
        throw InvalidInput("cannot pad a bit string to a shorter length");
    }
    BitString out = *this;
    out.bits_.resize(size, 0);
    return out;
}

BooleanFunction::BooleanFunction(size_t num_inputs, std::vector<uint8_t> table)
    : num_inputs_(num_inputs), table_(std::move(table)) {
    if (num_inputs > kMaxTableInputs) {
        throw CapacityError("truth tables are limited to " + std::to_string(kMaxTableInputs) + " inputs");
    }
    if (table_.size() != (size_t{1} << num_inputs)) {
        throw InvalidInput("truth table length must be exactly 2^n");
    }
    for (auto &b : table_) {
        if (b > 1) {
            throw InvalidInput("truth table entries must be 0 or 1");
        }
    }
}

BooleanFunction BooleanFunction::parse(std::string_view text) {
    std::vector<uint8_t> table;
    if (text.starts_with("0x") || text.starts_with("0X")) {
        text.remove_prefix(2);
        for (char c : text) {
            int digit;
            if (c >= '0' && c <= '9') {
                digit = c - '0';
            } else if (c >= 'a' && c <= 'f') {
                digit = c - 'a' + 10;
            } else if (c >= 'A' && c <= 'F') {
                digit = c - 'A' + 10;
            } else {
                throw InvalidInput("bad hex digit in truth table");
            }
            for (int b = 3; b >= 0; b--) {
                table.push_back((digit >> b) & 1);
            }
        }
    } else {
        for (char c : text) {
            if (c != '0' && c != '1') {
                throw InvalidInput("truth table may only contain '0' and '1' (or use a 0x hex prefix)");
            }
            table.push_back(c == '1');
        }
    }
    if (table.size() < 2 || !std::has_single_bit(table.size())) {
        throw InvalidInput("truth table length must be a power of two >= 2, got " + std::to_string(table.size()));
    }
    size_t n = static_cast<size_t>(std::countr_zero(table.size()));
    return BooleanFunction(n, std::move(table));
}

BooleanFunction BooleanFunction::from_predicate(size_t num_inputs, const std::function<bool(const BitString &)> &pred) {
    if (num_inputs > kMaxTableInputs) {
        throw CapacityError("truth tables are limited to " + std::to_string(kMaxTableInputs) + " inputs");
    }
    std::vector<uint8_t> table(size_t{1} << num_inputs);
    for (uint64_t row = 0; row < table.size(); row++) {
        table[row] = pred(BitString::from_index(row, num_inputs));
    }
    return BooleanFunction(num_inputs, std::move(table));
}

BooleanFunction BooleanFunction::from_code(size_t num_inputs, uint64_t code) {
    if (num_inputs > 6) {
        throw CapacityError("function codes only cover n <= 6");
    }
    std::vector<uint8_t> table(size_t{1} << num_inputs);
    for (uint64_t row = 0; row < table.size(); row++) {
        table[row] = (code >> row) & 1;
    }
    return BooleanFunction(num_inputs, std::move(table));
}

BooleanFunction BooleanFunction::constant(size_t num_inputs, bool value) {
    return from_predicate(num_inputs, [&](const BitString &) {
        return value;
    });
}

BooleanFunction BooleanFunction::dictator(size_t num_inputs, size_t k, bool negated) {
    if (k < 1 || k > num_inputs) {
        throw InvalidInput("variable index out of range");
    }
    return from_predicate(num_inputs, [&](const BitString &x) {
        return (x[k - 1] != 0) != negated;
    });
}

BooleanFunction BooleanFunction::majority(size_t num_inputs) {
    return from_predicate(num_inputs, [&](const BitString &x) {
        size_t ones = 0;
        for (size_t k = 0; k < x.size(); k++) {
            ones += x[k];
        }
        return 2 * ones >= num_inputs;
    });
}

BooleanFunction BooleanFunction::parity(size_t num_inputs) {
    return from_predicate(num_inputs, [](const BitString &x) {
        bool p = false;
        for (size_t k = 0; k < x.size(); k++) {
            p ^= x[k] != 0;
        }
        return p;
    });
}

BooleanFunction BooleanFunction::conjunction(size_t num_inputs) {
    return from_predicate(num_inputs, [](const BitString &x) {
        for (size_t k = 0; k < x.size(); k++) {
            if (!x[k]) {
                return false;
            }
        }
        return true;
    });
}

BooleanFunction BooleanFunction::disjunction(size_t num_inputs) {
    return from_predicate(num_inputs, [](const BitString &x) {
        for (size_t k = 0; k < x.size(); k++) {
            if (x[k]) {
                return true;
            }
        }
        return false;
    });
}

bool BooleanFunction::operator()(const BitString &x) const {
    if (x.size() != num_inputs_) {
        throw InvalidInput("input length does not match the function's arity");
    }
    return table_[x.index()] != 0;
}

std::string BooleanFunction::str() const {
    std::string out;
    out.reserve(table_.size());
    for (auto b : table_) {
        out.push_back(b ? '1' : '0');
    }
    return out;
}
