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

#ifndef BOGO_FINITE_ALGEBRA_HPP
#define BOGO_FINITE_ALGEBRA_HPP

// Finite products A = A_1 x ... x A_r of local commutative F_p-algebras.
//
// Each local factor is F_{p^m}[x]/(x^e) with F_{p^m} = F_p[y]/(f(y)) for an
// explicitly supplied monic irreducible f of degree m. The four kinds of
// factor (prime field, extension, truncated polynomial ring, truncated ring
// over an extension) are the special cases m = 1 and/or e = 1.
//
// Coordinates: an element of a factor is the coefficient list of x^0..x^{e-1},
// each coefficient an F_{p^m} element written in the basis 1, y, .., y^{m-1}.
// Flat index of (x^j, y^i) is j*m + i. Elements of A concatenate the factors.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bogo/error.hpp"
#include "bogo/fp_linalg.hpp"
#include "bogo/numeric.hpp"

namespace bogo {

namespace fp_poly {

// Dense polynomials over F_p, constant term first, no trailing zeros
// (the zero polynomial is empty).
using Poly = std::vector<i64>;

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly reduce_coeffs(Poly a, i64 p) {
    for (auto& c : a) c = mod(c, p);
    trim(a);
    return a;
}

inline Poly mul(const Poly& a, const Poly& b, i64 p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = mod(r[i + j] + mulmod(a[i], b[j], p), p);
    trim(r);
    return r;
}

inline Poly sub(Poly a, const Poly& b, i64 p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = mod(a[i] - b[i], p);
    trim(a);
    return a;
}

/// Remainder of a modulo a nonzero b.
inline Poly rem(Poly a, const Poly& b, i64 p) {
    const i64 lead_inv = invmod(b.back(), p);
    while (a.size() >= b.size()) {
        const i64 c = mulmod(a.back(), lead_inv, p);
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = mod(a[shift + i] - mulmod(c, b[i], p), p);
        trim(a);
    }
    return a;
}

inline Poly gcd(Poly a, Poly b, i64 p) {
    while (!b.empty()) {
        Poly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const i64 inv = invmod(a.back(), p);
        for (auto& c : a) c = mulmod(c, inv, p);
    }
    return a;
}

inline Poly powmod(Poly base, u64 e, const Poly& m, i64 p) {
    Poly r{1};
    base = rem(std::move(base), m, p);
    while (e) {
        if (e & 1) r = rem(mul(r, base, p), m, p);
        base = rem(mul(base, base, p), m, p);
        e >>= 1;
    }
    return r;
}

/// Ben-Or irreducibility test for a polynomial of degree >= 1.
inline bool is_irreducible(const Poly& f, i64 p) {
    const std::size_t m = f.size() - 1;
    if (m == 0) return false;
    if (m == 1) return true;
    Poly xp{0, 1};
    for (std::size_t i = 1; i <= m / 2; ++i) {
        xp = powmod(xp, static_cast<u64>(p), f, p);
        const Poly g = gcd(f, sub(xp, Poly{0, 1}, p), p);
        if (g.size() != 1) return false;
    }
    return true;
}

/// Smallest monic irreducible polynomial of degree m over F_p in the order
/// that reads the coefficient list (constant first) as a base-p numeral.
inline Poly first_irreducible(i64 p, unsigned m) {
    const i64 count = checked_pow(p, m);
    for (i64 idx = 0; idx < count; ++idx) {
        Poly f(m + 1, 0);
        f[m] = 1;
        i64 t = idx;
        for (unsigned i = 0; i < m; ++i) { f[i] = t % p; t /= p; }
        if (is_irreducible(f, p)) return f;
    }
    fail(ErrorKind::InvalidSpec, "no irreducible polynomial found");
}

}  // namespace fp_poly

/// One local factor F_{p^m}[x]/(x^e).
struct LocalAlgebraSpec {
    enum class Kind { PrimeField, FieldExtension, TruncatedPoly, ExtTruncated };

    Kind kind = Kind::PrimeField;
    unsigned m = 1;
    unsigned e = 1;
    std::vector<i64> modulus;  // monic, constant term first; empty when m == 1

    static LocalAlgebraSpec prime_field() { return {}; }
    static LocalAlgebraSpec extension(std::vector<i64> modulus) {
        const auto m = static_cast<unsigned>(modulus.empty() ? 0 : modulus.size() - 1);
        return {Kind::FieldExtension, m, 1, std::move(modulus)};
    }
    static LocalAlgebraSpec truncated(unsigned e) { return {Kind::TruncatedPoly, 1, e, {}}; }
    static LocalAlgebraSpec ext_truncated(std::vector<i64> modulus, unsigned e) {
        const auto m = static_cast<unsigned>(modulus.empty() ? 0 : modulus.size() - 1);
        return {Kind::ExtTruncated, m, e, std::move(modulus)};
    }

    unsigned dim() const noexcept { return m * e; }
    bool operator==(const LocalAlgebraSpec&) const = default;
};

class AlgebraElement;

/// Shared immutable description of A plus precomputed multiplication tables.
class ProductAlgebra {
public:
    ProductAlgebra(std::vector<LocalAlgebraSpec> factors, i64 p);

    i64 p() const noexcept { return data_->p; }
    std::size_t dim() const noexcept { return data_->dim; }
    std::size_t factor_count() const noexcept { return data_->factors.size(); }
    const std::vector<LocalAlgebraSpec>& factors() const noexcept { return data_->factors; }
    std::size_t offset(std::size_t i) const noexcept { return data_->offsets[i]; }

    /// Number of elements; ErrorKind::TooLarge when it would exceed 2^62.
    u64 size() const;
    /// |A^x| = prod over factors of (p^m - 1) p^{m(e-1)}.
    u64 unit_count() const noexcept { return data_->unit_count; }

    AlgebraElement zero() const;
    AlgebraElement one() const;
    AlgebraElement scalar(i64 c) const;
    AlgebraElement from_coords(FpVector coords) const;
    /// Standard F_p-basis: coordinate unit vectors.
    std::vector<AlgebraElement> basis() const;
    /// e_1, .., e_r.
    std::vector<AlgebraElement> idempotents() const;

    /// Element with the given index in the lexicographic enumeration of A
    /// (first coordinate most significant).
    AlgebraElement element_at(u64 index) const;

    bool operator==(const ProductAlgebra& o) const noexcept {
        return data_ == o.data_ || (data_->p == o.data_->p && data_->factors == o.data_->factors);
    }

    // Raw arithmetic on coordinate spans; used by the element type and by the
    // matrix code, which works on flat coordinate buffers.
    void mul_into(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const;
    bool local_is_unit(std::size_t factor, const std::uint32_t* a) const;
    std::optional<FpVector> inverse_coords(const FpVector& a) const;

private:
    struct Data {
        i64 p;
        std::vector<LocalAlgebraSpec> factors;
        std::vector<std::size_t> offsets;
        std::size_t dim = 0;
        u64 unit_count = 1;
        // table[f][(i*d + j)*d + k]: coefficient of basis k in b_i * b_j
        std::vector<std::vector<std::uint32_t>> tables;
    };
    std::shared_ptr<const Data> data_;
};

inline ProductAlgebra make_algebra(std::vector<LocalAlgebraSpec> factors, i64 p) {
    return ProductAlgebra(std::move(factors), p);
}

/// An element of A in canonical (fully reduced) coordinates.
class AlgebraElement {
public:
    AlgebraElement(ProductAlgebra parent, FpVector coords)
        : parent_(std::move(parent)), coords_(std::move(coords)) {}

    const ProductAlgebra& parent() const noexcept { return parent_; }
    const FpVector& coords() const noexcept { return coords_; }

    bool is_zero() const noexcept {
        for (auto c : coords_) if (c) return false;
        return true;
    }
    bool is_unit() const;

    friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
    AlgebraElement operator-() const;

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.coords_ == b.coords_ && a.parent_ == b.parent_;
    }
    friend bool operator<(const AlgebraElement& a, const AlgebraElement& b) {
        return a.coords_ < b.coords_;
    }

private:
    ProductAlgebra parent_;
    FpVector coords_;
};

inline void check_same_parent(const AlgebraElement& a, const AlgebraElement& b) {
    if (!(a.parent() == b.parent()))
        fail(ErrorKind::MixedParents, "operands belong to different algebras");
}

inline AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) { return a + b; }
inline AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) { return a * b; }
inline AlgebraElement neg(const AlgebraElement& a) { return -a; }
AlgebraElement inv(const AlgebraElement& a);

// ---------------------------------------------------------------------------

inline ProductAlgebra::ProductAlgebra(std::vector<LocalAlgebraSpec> factors, i64 p) {
    if (!is_prime(p)) fail(ErrorKind::NonPrimeP, std::to_string(p) + " is not prime");
    if (p >= (i64{1} << 31)) fail(ErrorKind::TooLarge, "characteristic too large");
    if (factors.empty()) fail(ErrorKind::InvalidSpec, "an algebra needs at least one factor");
    auto d = std::make_shared<Data>();
    d->p = p;
    for (auto& f : factors) {
        if (f.e < 1 || f.m < 1) fail(ErrorKind::InvalidSpec, "degree and nilpotency exponent must be >= 1");
        if (f.m == 1) {
            if (!f.modulus.empty() && f.modulus.size() != 2)
                fail(ErrorKind::InvalidSpec, "degree-1 factor with a nonlinear modulus");
            f.modulus.clear();
        } else {
            auto red = fp_poly::reduce_coeffs(f.modulus, p);
            if (red.size() != f.m + 1 || red.back() != 1)
                fail(ErrorKind::InvalidSpec, "extension modulus must be monic of degree " + std::to_string(f.m) + " mod p");
            if (!fp_poly::is_irreducible(red, p))
                fail(ErrorKind::ReduciblePolynomial, "extension modulus is reducible mod " + std::to_string(p));
            f.modulus = std::move(red);
        }
        d->offsets.push_back(d->dim);
        d->dim += f.dim();
        const u64 q = static_cast<u64>(checked_pow(p, f.m));
        d->unit_count = static_cast<u64>(checked_mul(static_cast<i64>(d->unit_count),
                                                      checked_mul(static_cast<i64>(q - 1), checked_pow(static_cast<i64>(q), f.e - 1))));

        // structure constants of F_{p^m}[x]/(x^e)
        const unsigned m = f.m, e = f.e, dim = f.dim();
        std::vector<std::uint32_t> table(static_cast<std::size_t>(dim) * dim * dim, 0);
        for (unsigned ja = 0; ja < e; ++ja)
            for (unsigned ia = 0; ia < m; ++ia)
                for (unsigned jb = 0; jb < e; ++jb)
                    for (unsigned ib = 0; ib < m; ++ib) {
                        if (ja + jb >= e) continue;
                        fp_poly::Poly prod(ia + ib + 1, 0);
                        prod[ia + ib] = 1;
                        if (m > 1) prod = fp_poly::rem(prod, f.modulus, p);
                        const unsigned a = ja * m + ia, b = jb * m + ib;
                        for (std::size_t t = 0; t < prod.size(); ++t)
                            table[(static_cast<std::size_t>(a) * dim + b) * dim + (ja + jb) * m + t] =
                                static_cast<std::uint32_t>(prod[t]);
                    }
        d->tables.push_back(std::move(table));
    }
    d->factors = std::move(factors);
    data_ = std::move(d);
}

inline u64 ProductAlgebra::size() const {
    return static_cast<u64>(checked_pow(data_->p, static_cast<unsigned>(data_->dim)));
}

inline void ProductAlgebra::mul_into(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const {
    const u64 p = static_cast<u64>(data_->p);
    for (std::size_t f = 0; f < data_->factors.size(); ++f) {
        const std::size_t off = data_->offsets[f];
        const std::size_t dim = data_->factors[f].dim();
        const auto& table = data_->tables[f];
        if (dim == 1) {
            out[off] = static_cast<std::uint32_t>((static_cast<u64>(a[off]) * b[off]) % p);
            continue;
        }
        u64 acc[64] = {};
        std::vector<u64> big;
        u64* r = acc;
        if (dim > 64) { big.assign(dim, 0); r = big.data(); }
        for (std::size_t i = 0; i < dim; ++i) {
            const u64 ai = a[off + i];
            if (!ai) continue;
            for (std::size_t j = 0; j < dim; ++j) {
                const u64 bj = b[off + j];
                if (!bj) continue;
                const u64 c = (ai * bj) % p;
                const std::uint32_t* row = &table[(i * dim + j) * dim];
                for (std::size_t k = 0; k < dim; ++k)
                    if (row[k]) r[k] = (r[k] + c * row[k]) % p;
            }
        }
        for (std::size_t k = 0; k < dim; ++k) out[off + k] = static_cast<std::uint32_t>(r[k]);
    }
}

inline bool ProductAlgebra::local_is_unit(std::size_t factor, const std::uint32_t* a) const {
    // a unit iff its x^0 coefficient (an F_{p^m} element) is nonzero
    const std::size_t off = data_->offsets[factor];
    for (unsigned i = 0; i < data_->factors[factor].m; ++i)
        if (a[off + i]) return true;
    return false;
}

inline std::optional<FpVector> ProductAlgebra::inverse_coords(const FpVector& a) const {
    const i64 p = data_->p;
    FpVector out(data_->dim, 0);
    for (std::size_t f = 0; f < data_->factors.size(); ++f) {
        if (!local_is_unit(f, a.data())) return std::nullopt;
        const std::size_t off = data_->offsets[f];
        const std::size_t dim = data_->factors[f].dim();
        const auto& table = data_->tables[f];
        // Solve L_a z = 1 where L_a is multiplication by a on the factor.
        std::vector<std::vector<i64>> aug(dim, std::vector<i64>(dim + 1, 0));
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                for (std::size_t k = 0; k < dim; ++k)
                    aug[k][j] = mod(aug[k][j] + static_cast<i64>(a[off + i]) * table[(i * dim + j) * dim + k], p);
        aug[0][dim] = 1;
        for (std::size_t col = 0; col < dim; ++col) {
            std::size_t piv = col;
            while (piv < dim && aug[piv][col] == 0) ++piv;
            if (piv == dim) return std::nullopt;
            std::swap(aug[piv], aug[col]);
            const i64 iv = invmod(aug[col][col], p);
            for (auto& x : aug[col]) x = mulmod(x, iv, p);
            for (std::size_t r = 0; r < dim; ++r) {
                if (r == col || aug[r][col] == 0) continue;
                const i64 c = aug[r][col];
                for (std::size_t t = col; t <= dim; ++t) aug[r][t] = mod(aug[r][t] - mulmod(c, aug[col][t], p), p);
            }
        }
        for (std::size_t k = 0; k < dim; ++k) out[off + k] = static_cast<std::uint32_t>(aug[k][dim]);
    }
    return out;
}

inline AlgebraElement ProductAlgebra::zero() const { return {*this, FpVector(dim(), 0)}; }

inline AlgebraElement ProductAlgebra::scalar(i64 c) const {
    FpVector v(dim(), 0);
    const auto cc = static_cast<std::uint32_t>(mod(c, p()));
    for (std::size_t f = 0; f < factor_count(); ++f) v[offset(f)] = cc;
    return {*this, std::move(v)};
}

inline AlgebraElement ProductAlgebra::one() const { return scalar(1); }

inline AlgebraElement ProductAlgebra::from_coords(FpVector coords) const {
    if (coords.size() != dim()) fail(ErrorKind::InvalidSpec, "coordinate vector has the wrong length");
    for (auto& c : coords) c = static_cast<std::uint32_t>(c % static_cast<u64>(p()));
    return {*this, std::move(coords)};
}

inline std::vector<AlgebraElement> ProductAlgebra::basis() const {
    std::vector<AlgebraElement> out;
    for (std::size_t i = 0; i < dim(); ++i) {
        FpVector v(dim(), 0);
        v[i] = 1;
        out.emplace_back(*this, std::move(v));
    }
    return out;
}

inline std::vector<AlgebraElement> ProductAlgebra::idempotents() const {
    std::vector<AlgebraElement> out;
    for (std::size_t f = 0; f < factor_count(); ++f) {
        FpVector v(dim(), 0);
        v[offset(f)] = 1;
        out.emplace_back(*this, std::move(v));
    }
    return out;
}

inline AlgebraElement ProductAlgebra::element_at(u64 index) const {
    FpVector v(dim(), 0);
    const u64 pp = static_cast<u64>(p());
    for (std::size_t i = dim(); i-- > 0;) {
        v[i] = static_cast<std::uint32_t>(index % pp);
        index /= pp;
    }
    return {*this, std::move(v)};
}

inline bool AlgebraElement::is_unit() const {
    for (std::size_t f = 0; f < parent_.factor_count(); ++f)
        if (!parent_.local_is_unit(f, coords_.data())) return false;
    return true;
}

inline AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    check_same_parent(a, b);
    const u64 p = static_cast<u64>(a.parent_.p());
    FpVector r(a.coords_.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = static_cast<std::uint32_t>((static_cast<u64>(a.coords_[i]) + b.coords_[i]) % p);
    return {a.parent_, std::move(r)};
}

inline AlgebraElement AlgebraElement::operator-() const {
    const u64 p = static_cast<u64>(parent_.p());
    FpVector r(coords_.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = static_cast<std::uint32_t>((p - coords_[i]) % p);
    return {parent_, std::move(r)};
}

inline AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) { return a + (-b); }

inline AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    check_same_parent(a, b);
    FpVector r(a.coords_.size(), 0);
    a.parent_.mul_into(a.coords_.data(), b.coords_.data(), r.data());
    return {a.parent_, std::move(r)};
}

inline AlgebraElement inv(const AlgebraElement& a) {
    auto r = a.parent().inverse_coords(a.coords());
    if (!r) fail(ErrorKind::NotAUnit, "element has a component in the maximal ideal");
    return {a.parent(), std::move(*r)};
}

/// Elements beyond this count are refused by enumerations.
inline constexpr u64 kAlgebraEnumerationLimit = u64{1} << 20;

/// Units of A in lexicographic coordinate order.
inline std::vector<AlgebraElement> units(const ProductAlgebra& A) {
    const u64 total = A.size();
    if (total > kAlgebraEnumerationLimit)
        fail(ErrorKind::TooLarge, "algebra has " + std::to_string(total) + " elements (limit 2^20)");
    std::vector<AlgebraElement> out;
    out.reserve(A.unit_count());
    for (u64 i = 0; i < total; ++i) {
        auto x = A.element_at(i);
        if (x.is_unit()) out.push_back(std::move(x));
    }
    return out;
}

struct UnitSquareSpan {
    Subspace span;
    bool equals_algebra;
};

/// F_p-span of { u^2 : u in A^x }.
inline UnitSquareSpan span_of_unit_squares(const ProductAlgebra& A) {
    Subspace s{Ambient::Algebra, A.dim(), EchelonBasis(A.p(), A.dim())};
    for (const auto& u : units(A)) {
        s.basis.insert((u * u).coords());
        if (s.is_full()) break;
    }
    const bool full = s.is_full();
    return {std::move(s), full};
}

}  // namespace bogo

#endif  // BOGO_FINITE_ALGEBRA_HPP
