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

#include "mgltg/ltg.h"

#include <limits>

#include "mgltg/simplex.h"

using namespace mgltg;

namespace {

// Row sign patterns xhat for every input, built once per LP.
std::vector<std::vector<int>> input_signs(size_t n) {
    std::vector<std::vector<int>> out(size_t{1} << n, std::vector<int>(n));
    for (uint64_t row = 0; row < out.size(); row++) {
        for (size_t k = 0; k < n; k++) {
            out[row][k] = ((row >> (n - 1 - k)) & 1) ? -1 : 1;
        }
    }
    return out;
}

// Variable layout: w+ (n), w- (n), theta+, theta-, eps.
template <typename Scalar>
LpSolution<Scalar> solve_margin_lp(const BooleanFunction &f, size_t *pivots) {
    size_t n = f.num_inputs();
    auto signs = input_signs(n);
    size_t num_vars = 2 * n + 3;
    std::vector<std::vector<Scalar>> a;
    std::vector<Scalar> b;
    a.reserve(f.num_rows() + 1);
    for (uint64_t row = 0; row < f.num_rows(); row++) {
        int s = f.value(row) ? -1 : 1;
        std::vector<Scalar> coeffs(num_vars, Scalar(0));
        for (size_t k = 0; k < n; k++) {
            coeffs[k] = Scalar(-s * signs[row][k]);
            coeffs[n + k] = Scalar(s * signs[row][k]);
        }
        coeffs[2 * n] = Scalar(-s);
        coeffs[2 * n + 1] = Scalar(s);
        coeffs[2 * n + 2] = Scalar(1);
        a.push_back(std::move(coeffs));
        b.push_back(Scalar(0));
    }
    std::vector<Scalar> norm(num_vars, Scalar(1));
    norm[2 * n + 2] = Scalar(0);
    a.push_back(std::move(norm));
    b.push_back(Scalar(1));
    std::vector<Scalar> c(num_vars, Scalar(0));
    c[2 * n + 2] = Scalar(1);

    Simplex<Scalar> lp(a, b, c);
    auto solution = lp.solve();
    *pivots = lp.pivot_count();
    if (solution.status != LpStatus::kOptimal) {
        throw VerificationError("margin LP is always feasible and bounded, but the solver reported otherwise");
    }
    return solution;
}

template <typename Scalar>
MarginResult interpret(const BooleanFunction &f, const LpSolution<Scalar> &solution, bool exact) {
    size_t n = f.num_inputs();
    MarginResult out;
    bool positive = exact ? solution.value > Scalar(0) : to_double(solution.value) > 1e-9;
    if (positive) {
        LtgRepresentation<Rational> rep;
        rep.w.resize(static_cast<Eigen::Index>(n));
        for (size_t k = 0; k < n; k++) {
            rep.w[static_cast<Eigen::Index>(k)] = Rational(solution.primal[k]) - Rational(solution.primal[n + k]);
        }
        rep.theta = Rational(solution.primal[2 * n]) - Rational(solution.primal[2 * n + 1]);
        rep = rep.normalized();
        auto m = margin_of_representation(rep);
        if (exact && m.margin != Rational(solution.value)) {
            throw VerificationError("LP optimum and enumerated margin disagree");
        }
        out.certificate = MarginCertificate{m.margin, std::move(rep), std::move(m.witness), exact};
        if (!represents(out.certificate->rep, f)) {
            throw VerificationError("LP representation does not reproduce the function");
        }
    } else {
        InfeasibilityCertificate cert;
        cert.exact = exact;
        Rational total = 0;
        for (uint64_t row = 0; row < f.num_rows(); row++) {
            cert.weights.push_back(Rational(solution.dual[row]));
            total += cert.weights.back();
        }
        if (total <= 0) {
            throw VerificationError("margin LP dual has no mass on the input constraints");
        }
        for (auto &y : cert.weights) {
            y /= total;
        }
        out.infeasibility = std::move(cert);
    }
    return out;
}

}  // namespace

MarginResult mgltg::optimal_margin(const BooleanFunction &f) {
    size_t n = f.num_inputs();
    if (n > kMaxLpInputs) {
        throw CapacityError("the margin LP is limited to n <= " + std::to_string(kMaxLpInputs));
    }
    size_t pivots = 0;
    MarginResult out;
    if (n <= kMaxExactLpInputs) {
        out = interpret(f, solve_margin_lp<Rational>(f, &pivots), true);
    } else {
        out = interpret(f, solve_margin_lp<double>(f, &pivots), false);
    }
    out.lp_pivots = pivots;
    return out;
}

bool mgltg::is_ltg(const BooleanFunction &f) {
    return optimal_margin(f).is_ltg();
}

bool mgltg::check_margin_certificate(const BooleanFunction &f, const MarginCertificate &cert) {
    size_t n = f.num_inputs();
    if (cert.rep.num_inputs() != n || cert.witness.size() != n) {
        return false;
    }
    if (cert.rep.one_norm() != 1 || cert.epsilon <= 0) {
        return false;
    }
    for (uint64_t row = 0; row < f.num_rows(); row++) {
        Rational v = affine_value(cert.rep, BitString::from_index(row, n));
        if ((f.value(row) ? -v : v) < cert.epsilon) {
            return false;
        }
    }
    Rational at_witness = affine_value(cert.rep, cert.witness);
    return abs(at_witness) == cert.epsilon;
}

bool mgltg::check_infeasibility_certificate(const BooleanFunction &f, const InfeasibilityCertificate &cert) {
    size_t n = f.num_inputs();
    if (cert.weights.size() != f.num_rows()) {
        return false;
    }
    Rational total = 0;
    std::vector<Rational> moments(n + 1, Rational(0));
    for (uint64_t row = 0; row < f.num_rows(); row++) {
        const Rational &y = cert.weights[row];
        if (y < 0) {
            return false;
        }
        total += y;
        Rational signed_y = f.value(row) ? Rational(-y) : y;
        for (size_t k = 0; k < n; k++) {
            moments[k] += ((row >> (n - 1 - k)) & 1) ? Rational(-signed_y) : signed_y;
        }
        moments[n] += signed_y;
    }
    if (cert.exact) {
        if (total != 1) {
            return false;
        }
        for (const auto &mom : moments) {
            if (mom != 0) {
                return false;
            }
        }
        return true;
    }
    if (abs(total - 1) > Rational(kTolerance)) {
        return false;
    }
    for (const auto &mom : moments) {
        if (abs(mom) > Rational(kTolerance)) {
            return false;
        }
    }
    return true;
}

std::vector<size_t> mgltg::dependent_variables(const BooleanFunction &f) {
    size_t n = f.num_inputs();
    if (n > kMaxEnumerationInputs) {
        throw CapacityError("dependence analysis is limited to n <= " + std::to_string(kMaxEnumerationInputs));
    }
    std::vector<size_t> out;
    for (size_t k = 1; k <= n; k++) {
        uint64_t mask = uint64_t{1} << (n - k);
        for (uint64_t row = 0; row < f.num_rows(); row++) {
            if (f.value(row) != f.value(row ^ mask)) {
                out.push_back(k);
                break;
            }
        }
    }
    return out;
}

int64_t IntegerRepresentation::weight() const {
    int64_t total = phi < 0 ? -phi : phi;
    for (auto x : v) {
        total += x < 0 ? -x : x;
    }
    return total;
}

LtgRepresentation<Rational> IntegerRepresentation::as_rational() const {
    LtgRepresentation<Rational> out;
    out.w.resize(static_cast<Eigen::Index>(v.size()));
    for (size_t k = 0; k < v.size(); k++) {
        out.w[static_cast<Eigen::Index>(k)] = Rational(v[k]);
    }
    out.theta = Rational(phi);
    return out;
}

int mgltg::truncation_bits(size_t num_inputs, const Rational &epsilon) {
    if (epsilon <= 0) {
        throw InvalidInput("truncation needs a positive margin");
    }
    Rational error_bound(static_cast<long>(num_inputs + 1));
    int d = 0;
    do {
        d++;
        error_bound /= 2;
        if (d > 60) {
            throw CapacityError("margin too small: the integer representation would overflow 64-bit weights");
        }
    } while (!(error_bound < epsilon));
    return d;
}

IntegerRepresentation mgltg::truncate_to_integer(const LtgRepresentation<Rational> &rep, const Rational &epsilon) {
    if (epsilon <= 0) {
        throw InvalidInput("truncation needs a positive margin");
    }
    if (rep.one_norm() != 1) {
        throw InvalidInput("truncation needs a normalized representation (||w||_1 + |theta| = 1)");
    }
    size_t n = rep.num_inputs();
    int d = truncation_bits(n, epsilon);
    Rational scale = Rational(Integer(1) << d);
    auto truncate = [&](const Rational &x) -> int64_t {
        // floor(|x| 2^d) with the sign of x.
        Rational scaled = abs(x) * scale;
        Integer q = numerator(scaled) / denominator(scaled);
        auto magnitude = q.convert_to<int64_t>();
        return x < 0 ? -magnitude : magnitude;
    };
    IntegerRepresentation out;
    for (Eigen::Index k = 0; k < rep.w.size(); k++) {
        out.v.push_back(truncate(rep.w[k]));
    }
    out.phi = truncate(rep.theta);

    auto as_rational = out.as_rational();
    for (uint64_t row = 0; row < (uint64_t{1} << n); row++) {
        BitString x = BitString::from_index(row, n);
        Rational original = affine_value(rep, x);
        Rational truncated = affine_value(as_rational, x);
        if (truncated == 0 || (truncated > 0) != (original > 0)) {
            throw VerificationError("truncated representation disagrees with the source on input " + x.str());
        }
    }
    if (out.weight() > (int64_t{1} << d)) {
        throw VerificationError("truncated weight exceeds 2^d");
    }
    return out;
}

IntegerWeightBounds mgltg::integer_weight_bounds(const BooleanFunction &f) {
    auto result = optimal_margin(f);
    if (!result.is_ltg()) {
        throw InvalidInput("function " + f.str() + " is not a linear threshold gate");
    }
    const auto &cert = *result.certificate;
    IntegerWeightBounds out{Rational(1) / cert.epsilon,
                            Rational(static_cast<long>(2 * (f.num_inputs() + 1))) / cert.epsilon,
                            truncate_to_integer(cert.rep, cert.epsilon), cert};
    return out;
}

std::vector<CensusEntry> mgltg::exhaustive_ltg_census(size_t num_inputs) {
    if (num_inputs > kMaxCensusInputs) {
        throw CapacityError("the census is limited to n <= " + std::to_string(kMaxCensusInputs));
    }
    uint64_t count = uint64_t{1} << (uint64_t{1} << num_inputs);
    std::vector<CensusEntry> out;
    out.reserve(count);
    for (uint64_t code = 0; code < count; code++) {
        BooleanFunction f = BooleanFunction::from_code(num_inputs, code);
        auto result = optimal_margin(f);
        auto dependent = dependent_variables(f);
        out.push_back(CensusEntry{std::move(f), std::move(result.certificate), std::move(dependent)});
    }
    return out;
}
