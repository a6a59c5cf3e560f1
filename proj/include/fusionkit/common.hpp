// Copyright 2026 The fusionkit Authors
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

#ifndef FUSIONKIT_COMMON_HPP
#define FUSIONKIT_COMMON_HPP

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace fusionkit {

using Complex = std::complex<double>;
using Rational = boost::rational<std::int64_t>;

/// Default comparison tolerance for matrix-level identities.
inline constexpr double kDefaultTolerance = 1e-9;

/// A Verlinde sum accumulates one rounding error per summand, so it is
/// accepted against a looser bound than matrix identities.
inline constexpr double kIntegralityTolerance = 1e-6;

/// Malformed or inconsistent input: wrong shapes, unknown labels, missing
/// tables. Maps to exit status 2 in the CLI.
class StructuralError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Well-formed input that fails a mathematical requirement (integrality,
/// a violated sum rule). Maps to exit status 1 in the CLI.
class MathError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

enum class CheckStatus { pass, fail, inapplicable };

const char *to_string(CheckStatus status);

struct Check {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    double deviation = 0.0;  // max observed deviation; 0 for exact checks
    std::string detail;      // witness or explanation
};

/// Named collection of checks. `ok()` is true when nothing failed;
/// inapplicable checks do not count as failures.
struct ValidationReport {
    std::string subject;
    std::vector<Check> checks;

    bool ok() const;
    const Check *find(const std::string &name) const;
    const Check *first_failure() const;
    Check &add(std::string name, bool passed, double deviation = 0.0, std::string detail = {});
    void add_inapplicable(std::string name, std::string detail);
    void merge(const ValidationReport &other);
};

/// Nearest-integer test used wherever a floating-point value stands in for
/// an exact count.
bool near_integer(double value, double tolerance, std::int64_t *rounded = nullptr);

/// printf-style %g with `digits` significant digits; -0 prints as 0.
std::string format_number(double value, int digits = 12);

std::string format_rational(const Rational &r);

}  // namespace fusionkit

#endif
