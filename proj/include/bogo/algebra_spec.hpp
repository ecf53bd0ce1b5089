/*
   Copyright 2026 The bogomolov-toolkit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef BOGO_ALGEBRA_SPEC_HPP
#define BOGO_ALGEBRA_SPEC_HPP

// Text form of a product algebra:
//   factor  := "F" p [ "^" m ] [ "[x]/x^" e ]
//   algebra := factor { "x" factor }
// e.g. "F5", "F5xF5", "F5[x]/x^2", "F7^2xF7[x]/x^3". Extensions use the
// first monic irreducible of degree m in base-p order.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "bogo/error.hpp"
#include "bogo/finite_algebra.hpp"
#include "bogo/numeric.hpp"

namespace bogo {

struct AlgebraDescription {
    i64 p = 0;
    std::vector<LocalAlgebraSpec> factors;

    ProductAlgebra build() const { return make_algebra(factors, p); }
};

namespace detail {

class SpecParser {
public:
    explicit SpecParser(std::string_view s) : s_(s) {}

    AlgebraDescription parse() {
        AlgebraDescription out;
        skip_ws();
        for (;;) {
            factor(out);
            skip_ws();
            if (pos_ == s_.size()) break;
            expect('x');
            skip_ws();
        }
        return out;
    }

private:
    void factor(AlgebraDescription& out) {
        expect('F');
        const i64 p = number("prime");
        if (!is_prime(p)) bad("F" + std::to_string(p) + ": not a prime");
        if (out.p == 0) out.p = p;
        if (out.p != p) bad("all factors must share the same characteristic");
        unsigned m = 1, e = 1;
        if (peek('^')) {
            ++pos_;
            m = static_cast<unsigned>(number("extension degree"));
        }
        if (s_.substr(pos_, 6) == "[x]/x^") {
            pos_ += 6;
            e = static_cast<unsigned>(number("nilpotency exponent"));
        }
        if (m == 0 || e == 0) bad("degrees must be positive");
        if (m == 1 && e == 1) {
            out.factors.push_back(LocalAlgebraSpec::prime_field());
        } else if (m == 1) {
            out.factors.push_back(LocalAlgebraSpec::truncated(e));
        } else {
            auto f = fp_poly::first_irreducible(p, m);
            std::vector<i64> mod(f.begin(), f.end());
            out.factors.push_back(e == 1 ? LocalAlgebraSpec::extension(mod) : LocalAlgebraSpec::ext_truncated(mod, e));
        }
    }

    i64 number(const char* what) {
        const auto start = pos_;
        i64 v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_++] - '0');
            if (v > 1'000'000) bad(std::string(what) + " too large");
        }
        if (pos_ == start) bad(std::string("expected ") + what);
        return v;
    }

    bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

    void expect(char c) {
        if (!peek(c)) bad(std::string("expected '") + c + "'");
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
    }

    [[noreturn]] void bad(const std::string& msg) const {
        fail(ErrorKind::InvalidSpec, "algebra spec '" + std::string(s_) + "' at offset " + std::to_string(pos_) + ": " + msg);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline AlgebraDescription parse_algebra_spec(std::string_view text) { return detail::SpecParser(text).parse(); }

inline std::string format_algebra_spec(const AlgebraDescription& d) {
    std::string out;
    for (const auto& f : d.factors) {
        if (!out.empty()) out += "x";
        out += "F" + std::to_string(d.p);
        if (f.m > 1) out += "^" + std::to_string(f.m);
        if (f.e > 1) out += "[x]/x^" + std::to_string(f.e);
    }
    return out;
}

}  // namespace bogo

#endif  // BOGO_ALGEBRA_SPEC_HPP
