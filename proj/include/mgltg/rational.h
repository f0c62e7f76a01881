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

#ifndef MGLTG_RATIONAL_H
#define MGLTG_RATIONAL_H

#include <string>

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace mgltg {

/// Exact GMP rational. Expression templates are off so the type behaves as a
/// plain value inside Eigen and std containers.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

inline double to_double(const Rational &q) {
    return q.convert_to<double>();
}
inline double to_double(double x) {
    return x;
}

/// "p/q", or "p" for integers.
inline std::string to_string(const Rational &q) {
    return q.str();
}

}  // namespace mgltg

#endif
