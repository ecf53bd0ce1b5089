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

#ifndef BOGO_MATGROUP_HPP
#define BOGO_MATGROUP_HPP

// 2x2 matrix groups over a ProductAlgebra (enumeration, normal closures, the
// determinant-restricted group G^(A) and the adjoint action on trace-zero
// matrices) and 2x2 matrices over Z/p^n with the level-(n-1) log map.

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <ostream>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "bogo/error.hpp"
#include "bogo/finite_algebra.hpp"
#include "bogo/fp_linalg.hpp"
#include "bogo/numeric.hpp"
#include "bogo/weights.hpp"

namespace bogo {

/// 2x2 matrix over A, stored as the concatenated coordinates of the entries
/// in the order (0,0), (0,1), (1,0), (1,1).
class Mat2 {
public:
    Mat2(ProductAlgebra parent, FpVector flat) : parent_(std::move(parent)), flat_(std::move(flat)) {
        if (flat_.size() != 4 * parent_.dim()) fail(ErrorKind::InvalidSpec, "matrix coordinate length mismatch");
    }
    Mat2(const AlgebraElement& a, const AlgebraElement& b, const AlgebraElement& c, const AlgebraElement& d)
        : parent_(a.parent()) {
        check_same_parent(a, b);
        check_same_parent(a, c);
        check_same_parent(a, d);
        for (const auto* x : {&a, &b, &c, &d}) flat_.insert(flat_.end(), x->coords().begin(), x->coords().end());
    }

    static Mat2 identity(const ProductAlgebra& A) { return {A.one(), A.zero(), A.zero(), A.one()}; }
    static Mat2 diag(const AlgebraElement& x, const AlgebraElement& y) {
        const auto z = x.parent().zero();
        return {x, z, z, y};
    }

    const ProductAlgebra& parent() const noexcept { return parent_; }
    const FpVector& flat() const noexcept { return flat_; }

    AlgebraElement entry(int r, int c) const {
        const std::size_t d = parent_.dim();
        const auto first = flat_.begin() + static_cast<std::ptrdiff_t>((2 * r + c) * d);
        return {parent_, FpVector(first, first + static_cast<std::ptrdiff_t>(d))};
    }

    AlgebraElement det() const { return entry(0, 0) * entry(1, 1) - entry(0, 1) * entry(1, 0); }
    AlgebraElement trace() const { return entry(0, 0) + entry(1, 1); }

    Mat2 inverse() const {
        const auto dt = det();
        if (!dt.is_unit()) fail(ErrorKind::SingularMatrix, "determinant is not a unit");
        const auto di = inv(dt);
        return {entry(1, 1) * di, -entry(0, 1) * di, -entry(1, 0) * di, entry(0, 0) * di};
    }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        if (!(x.parent_ == y.parent_)) fail(ErrorKind::MixedParents, "matrices over different algebras");
        return {x.entry(0, 0) * y.entry(0, 0) + x.entry(0, 1) * y.entry(1, 0),
                x.entry(0, 0) * y.entry(0, 1) + x.entry(0, 1) * y.entry(1, 1),
                x.entry(1, 0) * y.entry(0, 0) + x.entry(1, 1) * y.entry(1, 0),
                x.entry(1, 0) * y.entry(0, 1) + x.entry(1, 1) * y.entry(1, 1)};
    }
    friend Mat2 operator+(const Mat2& x, const Mat2& y) {
        return {x.entry(0, 0) + y.entry(0, 0), x.entry(0, 1) + y.entry(0, 1),
                x.entry(1, 0) + y.entry(1, 0), x.entry(1, 1) + y.entry(1, 1)};
    }
    friend Mat2 operator-(const Mat2& x, const Mat2& y) {
        return {x.entry(0, 0) - y.entry(0, 0), x.entry(0, 1) - y.entry(0, 1),
                x.entry(1, 0) - y.entry(1, 0), x.entry(1, 1) - y.entry(1, 1)};
    }
    friend bool operator==(const Mat2& x, const Mat2& y) {
        return x.flat_ == y.flat_ && x.parent_ == y.parent_;
    }

private:
    ProductAlgebra parent_;
    FpVector flat_;
};

inline Mat2 elementary_S(const AlgebraElement& a) {
    const auto& A = a.parent();
    return {A.one(), a, A.zero(), A.one()};
}

inline Mat2 elementary_T(const AlgebraElement& a) {
    const auto& A = a.parent();
    return {A.one(), A.zero(), a, A.one()};
}

/// Maps a matrix over F_p to A through the diagonal embedding F_p -> A.
inline Mat2 embed_scalar(const Mat2& m, const ProductAlgebra& A) {
    if (m.parent().dim() != 1 || m.parent().p() != A.p())
        fail(ErrorKind::InvalidSpec, "embed_scalar expects a matrix over F_p of the same characteristic");
    return {A.scalar(m.flat()[0]), A.scalar(m.flat()[1]), A.scalar(m.flat()[2]), A.scalar(m.flat()[3])};
}

/// Group elements beyond this count are refused.
inline constexpr u64 kGroupEnumerationLimit = u64{1} << 22;

namespace detail {

// Packs 4*dim A coordinates into one u64 with the first coordinate most
// significant, so numeric order on codes is lexicographic order on entries.
class MatCodec {
public:
    explicit MatCodec(const ProductAlgebra& A) : A_(A), len_(4 * A.dim()), p_(static_cast<u64>(A.p())) {
        long double bits = 0;
        for (std::size_t i = 0; i < len_; ++i) bits += std::log2(static_cast<long double>(p_));
        if (bits > 63.0L) fail(ErrorKind::TooLarge, "matrices over this algebra do not fit the group encoding");
    }

    std::size_t length() const noexcept { return len_; }
    const ProductAlgebra& algebra() const noexcept { return A_; }

    u64 encode(const std::uint32_t* v) const noexcept {
        u64 c = 0;
        for (std::size_t i = 0; i < len_; ++i) c = c * p_ + v[i];
        return c;
    }
    void decode(u64 c, std::uint32_t* v) const noexcept {
        for (std::size_t i = len_; i-- > 0;) {
            v[i] = static_cast<std::uint32_t>(c % p_);
            c /= p_;
        }
    }
    Mat2 to_mat(u64 c) const {
        FpVector v(len_);
        decode(c, v.data());
        return {A_, std::move(v)};
    }

    // out = x * y on flat buffers; scratch must hold dim A entries
    void mul(const std::uint32_t* x, const std::uint32_t* y, std::uint32_t* out, std::uint32_t* scratch) const {
        const std::size_t d = A_.dim();
        const auto at = [d](const std::uint32_t* m, int r, int c) { return m + (2 * r + c) * d; };
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                std::uint32_t* o = out + (2 * r + c) * d;
                A_.mul_into(at(x, r, 0), at(y, 0, c), o);
                A_.mul_into(at(x, r, 1), at(y, 1, c), scratch);
                for (std::size_t i = 0; i < d; ++i) o[i] = static_cast<std::uint32_t>((o[i] + scratch[i]) % p_);
            }
    }

private:
    ProductAlgebra A_;
    std::size_t len_;
    u64 p_;
};

}  // namespace detail

/// A finite matrix group held as an explicit set of canonical encodings.
class GroupSet {
public:
    GroupSet(ProductAlgebra A, std::vector<Mat2> generators)
        : codec_(A), generators_(std::move(generators)) {
        for (const auto& g : generators_)
            if (!(g.parent() == A)) fail(ErrorKind::MixedParents, "generator over a different algebra");
        close();
    }

    const ProductAlgebra& algebra() const noexcept { return codec_.algebra(); }
    const std::vector<Mat2>& generators() const noexcept { return generators_; }
    u64 order() const noexcept { return sorted_.size(); }

    bool contains(const Mat2& m) const {
        if (!(m.parent() == algebra())) return false;
        return members_.count(codec_.encode(m.flat().data())) != 0;
    }

    /// Elements in lexicographic order of their entries.
    std::vector<Mat2> elements() const {
        std::vector<Mat2> out;
        out.reserve(sorted_.size());
        for (u64 c : sorted_) out.push_back(codec_.to_mat(c));
        return out;
    }
    const std::vector<u64>& codes() const noexcept { return sorted_; }

    /// Closure under products and inverses, checked element by element.
    bool verify_closed() const {
        const std::size_t L = codec_.length();
        FpVector x(L), y(L), z(L), scratch(algebra().dim());
        for (u64 a : sorted_) {
            codec_.decode(a, x.data());
            const Mat2 m = codec_.to_mat(a);
            if (!contains(m.inverse())) return false;
            for (const auto& g : generators_) {
                codec_.mul(x.data(), g.flat().data(), z.data(), scratch.data());
                if (!members_.count(codec_.encode(z.data()))) return false;
            }
        }
        return members_.count(codec_.encode(Mat2::identity(algebra()).flat().data())) != 0;
    }

    /// Adds a generator and extends the set to the group it generates.
    void add_generator(const Mat2& g) {
        if (contains(g)) return;
        generators_.push_back(g);
        const std::size_t L = codec_.length();
        FpVector x(L), z(L), scratch(algebra().dim());
        std::deque<u64> queue;
        // S is a group closed under the old generators; new elements are
        // reached through right multiplication by g and then by everything.
        for (u64 a : sorted_) {
            codec_.decode(a, x.data());
            codec_.mul(x.data(), g.flat().data(), z.data(), scratch.data());
            const u64 c = codec_.encode(z.data());
            if (members_.insert(c).second) queue.push_back(c);
        }
        expand(queue);
        rebuild_sorted();
    }

    friend bool operator==(const GroupSet& a, const GroupSet& b) {
        return a.algebra() == b.algebra() && a.sorted_ == b.sorted_;
    }

private:
    void close() {
        const std::size_t L = codec_.length();
        const u64 id = codec_.encode(Mat2::identity(algebra()).flat().data());
        members_.insert(id);
        std::deque<u64> queue{id};
        expand(queue);
        (void)L;
        rebuild_sorted();
    }

    void expand(std::deque<u64>& queue) {
        const std::size_t L = codec_.length();
        FpVector x(L), z(L), scratch(algebra().dim());
        while (!queue.empty()) {
            const u64 a = queue.front();
            queue.pop_front();
            codec_.decode(a, x.data());
            for (const auto& g : generators_) {
                codec_.mul(x.data(), g.flat().data(), z.data(), scratch.data());
                const u64 c = codec_.encode(z.data());
                if (members_.insert(c).second) {
                    if (members_.size() > kGroupEnumerationLimit)
                        fail(ErrorKind::TooLarge, "group exceeds 2^22 elements");
                    queue.push_back(c);
                }
            }
        }
    }

    void rebuild_sorted() {
        sorted_.assign(members_.begin(), members_.end());
        std::sort(sorted_.begin(), sorted_.end());
    }

    detail::MatCodec codec_;
    std::vector<Mat2> generators_;
    std::unordered_set<u64> members_;
    std::vector<u64> sorted_;
};

/// One matrix per line, entries in the order (0,0) (0,1) (1,0) (1,1) separated
/// by " ; ", coordinates inside an entry separated by ",".
inline void write_group(std::ostream& os, const GroupSet& G) {
    const auto& A = G.algebra();
    const std::size_t d = A.dim();
    os << "# GroupSet p=" << A.p() << " dim=" << d << " order=" << G.order() << '\n';
    for (const auto& m : G.elements()) {
        const auto& f = m.flat();
        for (std::size_t e = 0; e < 4; ++e) {
            if (e) os << " ; ";
            for (std::size_t i = 0; i < d; ++i) os << (i ? "," : "") << f[e * d + i];
        }
        os << '\n';
    }
}

/// Closed-form |SL_2(A)|: each local factor F_{p^m}[x]/(x^e) contributes
/// |SL_2(F_{p^m})| * p^{3m(e-1)}.
inline u64 predicted_sl2_order(const ProductAlgebra& A) {
    i64 order = 1;
    for (const auto& f : A.factors()) {
        const i64 q = checked_pow(A.p(), f.m);
        const i64 sl2 = checked_mul(q, checked_mul(q, q) - 1);
        order = checked_mul(order, checked_mul(sl2, checked_pow(q, 3 * (f.e - 1))));
    }
    return static_cast<u64>(order);
}

inline std::vector<Mat2> sl2_generators(const ProductAlgebra& A) {
    std::vector<Mat2> gens;
    for (const auto& b : A.basis()) {
        gens.push_back(elementary_S(b));
        gens.push_back(elementary_T(b));
    }
    return gens;
}

/// SL_2(A) as the closure of the elementary matrices S(b), T(b) over an
/// F_p-basis b of A.
inline GroupSet enumerate_SL2(const ProductAlgebra& A) {
    const u64 predicted = predicted_sl2_order(A);
    if (predicted > kGroupEnumerationLimit)
        fail(ErrorKind::TooLarge, "|SL_2(A)| = " + std::to_string(predicted) + " exceeds 2^22");
    GroupSet G(A, sl2_generators(A));
    if (G.order() != predicted)
        fail(ErrorKind::InvariantViolation, "SL_2 enumeration disagrees with the closed form");
    return G;
}

/// Generator x0 of (F_p^x)^{k-1}, as an integer in [1, p).
inline i64 det_power_generator(i64 p, i64 k) {
    const i64 g = primitive_root(p);
    return powmod(g, static_cast<u64>(std::gcd(k - 1, p - 1)), p);
}

/// True iff det(gamma) is a scalar c in F_p^x with c in (F_p^x)^{k-1}.
inline bool ghat_membership(const Mat2& gamma, i64 k) {
    const auto dt = gamma.det();
    if (!dt.is_unit()) fail(ErrorKind::SingularMatrix, "determinant is not a unit");
    const auto& A = gamma.parent();
    const i64 c = dt.coords()[0];
    if (!(dt == A.scalar(c))) return false;
    const i64 s = det_image_order(A.p(), k);
    return powmod(c, static_cast<u64>(s), A.p()) == 1;
}

/// G^(A) = { gamma in GL_2(A) : det gamma in (F_p^x)^{k-1} }, generated by
/// SL_2(A) and diag(x0, 1).
inline GroupSet enumerate_ghat(const ProductAlgebra& A, i64 k) {
    if (k < 1) fail(ErrorKind::PreconditionViolated, "k must be positive");
    const u64 sl2 = predicted_sl2_order(A);
    const u64 s = static_cast<u64>(det_image_order(A.p(), k));
    const u64 predicted = static_cast<u64>(checked_mul(static_cast<i64>(sl2), static_cast<i64>(s)));
    if (predicted > kGroupEnumerationLimit)
        fail(ErrorKind::TooLarge, "|G^(A)| = " + std::to_string(predicted) + " exceeds 2^22");
    auto gens = sl2_generators(A);
    gens.push_back(Mat2::diag(A.scalar(det_power_generator(A.p(), k)), A.one()));
    GroupSet G(A, std::move(gens));
    if (G.order() != predicted)
        fail(ErrorKind::InvariantViolation, "G^ enumeration disagrees with the closed form");
    return G;
}

/// Smallest normal subgroup of G containing the given elements.
inline GroupSet normal_closure(const std::vector<Mat2>& h_generators, const GroupSet& G) {
    for (const auto& h : h_generators)
        if (!G.contains(h)) fail(ErrorKind::NotSubgroup, "a generator of H is not in G");
    std::vector<Mat2> g_inv;
    for (const auto& g : G.generators()) g_inv.push_back(g.inverse());

    GroupSet N(G.algebra(), h_generators);
    // N is normal iff every generator of N stays in N under conjugation by
    // every generator of G; iterate until that holds.
    for (std::size_t i = 0; i < N.generators().size(); ++i) {
        for (std::size_t j = 0; j < G.generators().size(); ++j) {
            const Mat2 c = G.generators()[j] * N.generators()[i] * g_inv[j];
            if (!N.contains(c)) N.add_generator(c);
        }
    }
    return N;
}

inline GroupSet normal_closure(const GroupSet& H, const GroupSet& G) {
    return normal_closure(H.generators(), G);
}

/// Smallest SL_2(A)-stable F_p-subspace of M_2(A)^0 containing `seed`.
inline Subspace adjoint_orbit_span(const Mat2& seed) {
    const auto& A = seed.parent();
    if (!seed.trace().is_zero()) fail(ErrorKind::NonzeroTrace, "seed must have trace zero");
    Subspace V{Ambient::TraceZero, 3 * A.dim(), EchelonBasis(A.p(), 4 * A.dim())};
    std::vector<std::pair<Mat2, Mat2>> conjugators;
    for (const auto& g : sl2_generators(A)) conjugators.emplace_back(g, g.inverse());

    std::deque<FpVector> queue;
    if (V.basis.insert(seed.flat())) queue.push_back(seed.flat());
    while (!queue.empty()) {
        const Mat2 m(A, std::move(queue.front()));
        queue.pop_front();
        for (const auto& [g, gi] : conjugators) {
            FpVector w = (g * m * gi).flat();
            if (V.basis.insert(w)) queue.push_back(std::move(w));
        }
    }
    return V;
}

// ---------------------------------------------------------------------------
// Matrices over Z/p^n.

struct Mat2ZpN {
    i64 p = 2;
    unsigned n = 1;
    std::array<i64, 4> e{};  // (0,0) (0,1) (1,0) (1,1), reduced mod p^n

    i64 modulus() const { return checked_pow(p, n); }

    static Mat2ZpN make(i64 p, unsigned n, std::array<i64, 4> entries) {
        if (!is_prime(p)) fail(ErrorKind::NonPrimeP, std::to_string(p) + " is not prime");
        if (n < 1) fail(ErrorKind::PreconditionViolated, "level must be >= 1");
        Mat2ZpN m{p, n, entries};
        const i64 q = m.modulus();
        for (auto& x : m.e) x = mod(x, q);
        return m;
    }
    static Mat2ZpN identity(i64 p, unsigned n) { return make(p, n, {1, 0, 0, 1}); }

    i64 det() const {
        const i64 q = modulus();
        return mod(mulmod(e[0], e[3], q) - mulmod(e[1], e[2], q), q);
    }
    i64 trace() const { return mod(e[0] + e[3], modulus()); }

    Mat2ZpN inverse() const {
        const i64 q = modulus();
        const i64 di = invmod(det(), q);
        if (di == 0) fail(ErrorKind::SingularMatrix, "determinant is not a unit mod p^n");
        return make(p, n, {mulmod(e[3], di, q), mulmod(q - e[1], di, q), mulmod(q - e[2], di, q), mulmod(e[0], di, q)});
    }

    friend Mat2ZpN operator*(const Mat2ZpN& a, const Mat2ZpN& b) {
        if (a.p != b.p || a.n != b.n) fail(ErrorKind::MixedParents, "matrices at different levels");
        const i64 q = a.modulus();
        const auto mm = [q](i64 x, i64 y) { return mulmod(x, y, q); };
        return make(a.p, a.n, {mm(a.e[0], b.e[0]) + mm(a.e[1], b.e[2]), mm(a.e[0], b.e[1]) + mm(a.e[1], b.e[3]),
                               mm(a.e[2], b.e[0]) + mm(a.e[3], b.e[2]), mm(a.e[2], b.e[1]) + mm(a.e[3], b.e[3])});
    }
    friend bool operator==(const Mat2ZpN&, const Mat2ZpN&) = default;

    /// Reduction to level m <= n.
    Mat2ZpN reduce(unsigned m) const {
        return make(p, m, e);
    }
};

struct MatLog {
    Mat2ZpN log;         // level 1: entries mod p
    i64 trace;           // trace of log, mod p
    bool det_identity;   // det M == 1 + trace(log) p^{n-1} mod p^n
};

/// For M = I + p^{n-1} A mod p^n, returns A mod p.
inline MatLog mat_log(const Mat2ZpN& M) {
    if (M.n < 2) fail(ErrorKind::PreconditionViolated, "mat_log needs level n >= 2");
    const i64 q = M.modulus();
    const i64 step = checked_pow(M.p, M.n - 1);
    const std::array<i64, 4> id{1, 0, 0, 1};
    std::array<i64, 4> a{};
    for (int i = 0; i < 4; ++i) {
        const i64 diff = mod(M.e[i] - id[i], q);
        if (diff % step != 0) fail(ErrorKind::NotUnipotentAtLevel, "matrix is not congruent to I mod p^(n-1)");
        a[i] = diff / step;
    }
    MatLog r{Mat2ZpN::make(M.p, 1, a), 0, false};
    r.trace = r.log.trace();
    r.det_identity = M.det() == mod(1 + mulmod(r.trace, step, q), q);
    return r;
}

/// I + p^{n-1} A for A given mod p; inverse of mat_log.
inline Mat2ZpN mat_exp(const Mat2ZpN& A, unsigned n) {
    if (A.n != 1) fail(ErrorKind::PreconditionViolated, "log matrix must be given mod p");
    const i64 step = checked_pow(A.p, n - 1);
    return Mat2ZpN::make(A.p, n, {1 + A.e[0] * step, A.e[1] * step, A.e[2] * step, 1 + A.e[3] * step});
}

/// log(g sigma g^-1) == (g mod p) log(sigma) (g mod p)^-1.
inline bool log_equivariance_check(const Mat2ZpN& sigma, const Mat2ZpN& g) {
    const auto lhs = mat_log(g * sigma * g.inverse()).log;
    const auto gbar = g.reduce(1);
    const auto rhs = gbar * mat_log(sigma).log * gbar.inverse();
    return lhs == rhs;
}

/// delta(p, k) > 2 s(p, k) under p >= 5 prime, k even, (p+1)/2 not dividing k-1.
inline bool delta_vs_2s_check(i64 p, i64 k) {
    if (!is_prime(p) || p < 5) fail(ErrorKind::PreconditionViolated, "needs a prime p >= 5");
    if (k < 2 || k % 2 != 0) fail(ErrorKind::PreconditionViolated, "needs an even weight k >= 2");
    if ((k - 1) % ((p + 1) / 2) == 0 || (k - 1) % (p + 1) == 0)
        fail(ErrorKind::PreconditionViolated, "(p+1)/2 divides k-1");
    return delta(p, k) > 2 * det_image_order(p, k);
}

// ---------------------------------------------------------------------------
// Subgroups of GL_2(F_p) used to exercise the normal-closure statement.

struct NamedSubgroup {
    std::string name;
    std::vector<Mat2> generators;  // over F_p
};

namespace detail {

inline i64 matrix_order(const Mat2& m) {
    const auto id = Mat2::identity(m.parent());
    Mat2 x = m;
    for (i64 k = 1; k < (i64{1} << 24); ++k) {
        if (x == id) return k;
        x = x * m;
    }
    return 0;
}

}  // namespace detail

/// Generator of a non-split torus F_{p^2}^x inside GL_2(F_p): multiplication
/// by a + b sqrt(r) on the basis (1, sqrt(r)) for a non-square r.
inline Mat2 nonsplit_torus_generator(i64 p) {
    const ProductAlgebra F(std::vector<LocalAlgebraSpec>{LocalAlgebraSpec::prime_field()}, p);
    i64 r = 2;
    while (powmod(r, static_cast<u64>((p - 1) / 2), p) == 1) ++r;
    for (i64 a = 0; a < p; ++a)
        for (i64 b = 1; b < p; ++b) {
            Mat2 m(F.scalar(a), F.scalar(mulmod(b, r, p)), F.scalar(b), F.scalar(a));
            if (detail::matrix_order(m) == p * p - 1) return m;
        }
    fail(ErrorKind::InvariantViolation, "no generator of the non-split torus");
}

/// Subgroups H <= GL_2(F_p) with |H| > 2s and det(H) = (F_p^x)^{k-1}:
/// cyclic subgroups of the non-split torus (including the order-delta one),
/// split Cartan subgroups extended by the determinant generator, a Borel-type
/// subgroup and SL_2(F_p) extended by the determinant generator.
inline std::vector<NamedSubgroup> curated_subgroups(i64 p, i64 k) {
    const ProductAlgebra F(std::vector<LocalAlgebraSpec>{LocalAlgebraSpec::prime_field()}, p);
    const i64 s = det_image_order(p, k);
    const auto sc = [&](i64 c) { return F.scalar(c); };
    const Mat2 x0 = Mat2::diag(sc(det_power_generator(p, k)), sc(1));
    const i64 g = primitive_root(p);

    std::vector<NamedSubgroup> out;
    const Mat2 w = nonsplit_torus_generator(p);
    const i64 q1 = p * p - 1;
    const i64 d = std::gcd(q1, k - 1);
    // cyclic subgroups <w^t> with det image (F_p^x)^{k-1}, i.e. gcd(t, p-1) = gcd(k-1, p-1)
    for (i64 t = 1; t < q1; ++t) {
        if (q1 % t != 0) continue;
        if (std::gcd(t, p - 1) != std::gcd(k - 1, p - 1)) continue;
        if (q1 / t <= 2 * s) continue;
        Mat2 h = Mat2::identity(F);
        for (i64 i = 0; i < t; ++i) h = h * w;
        out.push_back({(t == d ? "nonsplit-ramification-image-order-" : "nonsplit-cyclic-order-") + std::to_string(q1 / t),
                       {h}});
    }
    out.push_back({"split-cartan", {x0, Mat2::diag(sc(g), sc(invmod(g, p)))}});
    out.push_back({"split-cartan-antidiagonal",
                   {x0, Mat2::diag(sc(g), sc(invmod(g, p))), Mat2(sc(0), sc(1), sc(p - 1), sc(0))}});
    out.push_back({"borel-unipotent", {x0, elementary_S(sc(1))}});
    out.push_back({"sl2-extended", {x0, elementary_S(sc(1)), elementary_T(sc(1))}});
    return out;
}

}  // namespace bogo

#endif  // BOGO_MATGROUP_HPP
