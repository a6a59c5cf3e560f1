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

#include "fusionkit/common.hpp"

#include <cmath>
#include <cstdio>

namespace fusionkit {

const char *to_string(CheckStatus status) {
    switch (status) {
        case CheckStatus::pass:
            return "pass";
        case CheckStatus::fail:
            return "fail";
        case CheckStatus::inapplicable:
            return "inapplicable";
    }
    return "?";
}

bool ValidationReport::ok() const {
    return first_failure() == nullptr;
}

const Check *ValidationReport::find(const std::string &name) const {
    for (const auto &c : checks) {
        if (c.name == name) {
            return &c;
        }
    }
    return nullptr;
}

const Check *ValidationReport::first_failure() const {
    for (const auto &c : checks) {
        if (c.status == CheckStatus::fail) {
            return &c;
        }
    }
    return nullptr;
}

Check &ValidationReport::add(std::string name, bool passed, double deviation, std::string detail) {
    checks.push_back(Check{
        std::move(name), passed ? CheckStatus::pass : CheckStatus::fail, deviation, std::move(detail)});
    return checks.back();
}

void ValidationReport::add_inapplicable(std::string name, std::string detail) {
    checks.push_back(Check{std::move(name), CheckStatus::inapplicable, 0.0, std::move(detail)});
}

void ValidationReport::merge(const ValidationReport &other) {
    for (const auto &c : other.checks) {
        Check copy = c;
        if (!other.subject.empty()) {
            copy.name = other.subject + "." + c.name;
        }
        checks.push_back(std::move(copy));
    }
}

bool near_integer(double value, double tolerance, std::int64_t *rounded) {
    if (!std::isfinite(value)) {
        return false;
    }
    double r = std::round(value);
    if (rounded != nullptr) {
        *rounded = static_cast<std::int64_t>(r);
    }
    return std::abs(value - r) <= tolerance;
}

std::string format_number(double value, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, value == 0.0 ? 0.0 : value);
    return buf;
}

std::string format_rational(const Rational &r) {
    if (r.denominator() == 1) {
        return std::to_string(r.numerator());
    }
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace fusionkit
