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

#ifndef MGLTG_ERRORS_H
#define MGLTG_ERRORS_H

#include <stdexcept>
#include <string>

namespace mgltg {

/// Malformed or out-of-contract input (bad lengths, non-unitary blocks, ...).
class InvalidInput : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// The request exceeds a fixed size budget (dense register size, census size, LP size).
class CapacityError : public std::length_error {
   public:
    using std::length_error::length_error;
};

/// An internal consistency check failed. Always indicates a bug, never bad input.
class VerificationError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace mgltg

#endif
