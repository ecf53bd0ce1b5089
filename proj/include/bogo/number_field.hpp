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

#ifndef BOGO_NUMBER_FIELD_HPP
#define BOGO_NUMBER_FIELD_HPP

// Exact arithmetic in K = Q[y]/(f(y)) for a monic integer polynomial f.
// Elements are rational coordinate vectors in the power basis 1, y, ...

#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bogo/error.hpp"

namespace bogo {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class NumberField {
public:
    /// `poly` lists coefficients constant term first and must be monic.
    explicit NumberField(std::vector<BigInt> poly) : poly_(std::move(poly)) {
        while (poly_.size() > 1 && poly_.back() == 0) poly_.pop_back();
        if (poly_.size() < 2) fail(ErrorKind::InvalidSpec, "field polynomial must have degree >= 1");
        if (poly_.back() != 1) fail(ErrorKind::InvalidSpec, "field polynomial must be monic");
    }

    std::size_t degree() const noexcept { return poly_.size() - 1; }
    const std::vector<BigInt>& poly() const noexcept { return poly_; }
    bool operator==(const NumberField& o) const { return poly_ == o.poly_; }

private:
    std::vector<BigInt> poly_;
};

class NFElement {
public:
    NFElement(std::shared_ptr<const NumberField> K, std::vector<Rational> coords)
        : K_(std::move(K)), c_(std::move(coords)) {
        if (c_.size() != K_->degree()) fail(ErrorKind::InvalidSpec, "coordinate vector length differs from the field degree");
    }

    static NFElement from_int(std::shared_ptr<const NumberField> K, const BigInt& v) {
        std::vector<Rational> c(K->degree(), Rational(0));
        c[0] = Rational(v);
        return {std::move(K), std::move(c)};
    }

    const std::shared_ptr<const NumberField>& field() const noexcept { return K_; }
    const std::vector<Rational>& coords() const noexcept { return c_; }

    bool is_zero() const {
        for (const auto& x : c_) if (x != 0) return false;
        return true;
    }

    friend NFElement operator+(const NFElement& a, const NFElement& b) {
        a.check(b);
        auto c = a.c_;
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.c_[i];
        return {a.K_, std::move(c)};
    }
    friend NFElement operator-(const NFElement& a, const NFElement& b) {
        a.check(b);
        auto c = a.c_;
        for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.c_[i];
        return {a.K_, std::move(c)};
    }
    NFElement operator-() const {
        auto c = c_;
        for (auto& x : c) x = -x;
        return {K_, std::move(c)};
    }
    friend NFElement operator*(const NFElement& a, const NFElement& b) {
        a.check(b);
        const std::size_t d = a.K_->degree();
        std::vector<Rational> prod(2 * d - 1, Rational(0));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) prod[i + j] += a.c_[i] * b.c_[j];
        const auto& f = a.K_->poly();
        for (std::size_t t = prod.size(); t-- > d;) {
            const Rational lead = prod[t];
            if (lead == 0) continue;
            for (std::size_t i = 0; i <= d; ++i) prod[t - d + i] -= lead * Rational(f[i]);
        }
        prod.resize(d);
        return {a.K_, std::move(prod)};
    }
    friend bool operator==(const NFElement& a, const NFElement& b) {
        return (a.K_ == b.K_ || *a.K_ == *b.K_) && a.c_ == b.c_;
    }

    /// Polynomial in y, e.g. "2*y - 1/3".
    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = c_.size(); i-- > 0;) {
            const Rational& x = c_[i];
            if (x == 0) continue;
            const bool neg = x < 0;
            const Rational ax = neg ? Rational(-x) : x;
            os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
            if (i == 0 || ax != 1) os << ax;
            if (i > 0) os << (ax != 1 ? "*" : "") << "y" << (i > 1 ? "^" + std::to_string(i) : "");
            first = false;
        }
        return first ? "0" : os.str();
    }

private:
    void check(const NFElement& o) const {
        if (!(K_ == o.K_ || *K_ == *o.K_)) fail(ErrorKind::MixedParents, "elements of different number fields");
    }

    std::shared_ptr<const NumberField> K_;
    std::vector<Rational> c_;
};

// Scalar adaptors so that charpoly routines can be written once for integer
// and number-field scalars.
inline BigInt scalar_like(const BigInt&, const BigInt& v) { return v; }
inline NFElement scalar_like(const NFElement& proto, const BigInt& v) { return NFElement::from_int(proto.field(), v); }
inline bool scalar_is_zero(const BigInt& x) { return x == 0; }
inline bool scalar_is_zero(const NFElement& x) { return x.is_zero(); }
inline std::string scalar_to_string(const BigInt& x) { return x.str(); }
inline std::string scalar_to_string(const NFElement& x) { return x.to_string(); }

}  // namespace bogo

#endif  // BOGO_NUMBER_FIELD_HPP
