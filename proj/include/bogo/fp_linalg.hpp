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

#ifndef BOGO_FP_LINALG_HPP
#define BOGO_FP_LINALG_HPP

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "bogo/numeric.hpp"

namespace bogo {

using FpVector = std::vector<std::uint32_t>;

/// Incrementally maintained reduced row echelon basis of a subspace of F_p^n.
class EchelonBasis {
public:
    EchelonBasis(i64 p, std::size_t ambient) : p_(p), n_(ambient) {}

    i64 p() const noexcept { return p_; }
    std::size_t ambient_dim() const noexcept { return n_; }
    std::size_t dim() const noexcept { return rows_.size(); }
    const std::vector<FpVector>& rows() const noexcept { return rows_; }

    /// Reduces v against the basis in place; returns true when v ends up zero.
    bool reduce(FpVector& v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const std::size_t piv = pivots_[r];
            const u64 c = v[piv];
            if (c == 0) continue;
            const FpVector& row = rows_[r];
            for (std::size_t j = piv; j < n_; ++j) {
                if (row[j] == 0) continue;
                v[j] = static_cast<std::uint32_t>(mod(static_cast<i64>(v[j]) - static_cast<i64>((c * row[j]) % p_), p_));
            }
        }
        return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
    }

    bool contains(FpVector v) const { return reduce(v); }

    /// Adds v to the span. Returns false when v was already in it.
    bool insert(FpVector v) {
        if (reduce(v)) return false;
        std::size_t piv = 0;
        while (v[piv] == 0) ++piv;
        const i64 inv = invmod(v[piv], p_);
        for (std::size_t j = piv; j < n_; ++j)
            v[j] = static_cast<std::uint32_t>(mulmod(v[j], inv, p_));
        // clear the new pivot column from existing rows
        for (auto& row : rows_) {
            const u64 c = row[piv];
            if (c == 0) continue;
            for (std::size_t j = piv; j < n_; ++j)
                row[j] = static_cast<std::uint32_t>(mod(static_cast<i64>(row[j]) - static_cast<i64>((c * v[j]) % p_), p_));
        }
        const auto pos = static_cast<std::size_t>(
            std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin());
        pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), piv);
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
        return true;
    }

private:
    i64 p_;
    std::size_t n_;
    std::vector<FpVector> rows_;
    std::vector<std::size_t> pivots_;
};

/// Where a Subspace lives.
enum class Ambient {
    Algebra,     // the algebra itself, dim A
    TraceZero,   // M_2(A)^0, dim 3 dim A
    TraceInFp,   // matrices over A whose trace lies in F_p, dim 3 dim A + 1
};

inline std::string to_string(Ambient a) {
    switch (a) {
    case Ambient::Algebra: return "algebra";
    case Ambient::TraceZero: return "trace-zero";
    case Ambient::TraceInFp: return "trace-in-Fp";
    }
    return "?";
}

/// An F_p-subspace with its echelon basis. Coordinates are those of the
/// ambient container (algebra coordinates, or the four entries of a 2x2
/// matrix concatenated), so `coord_dim` may exceed `ambient_dim`.
struct Subspace {
    Ambient ambient;
    std::size_t ambient_dim;
    EchelonBasis basis;

    std::size_t dim() const noexcept { return basis.dim(); }
    bool is_full() const noexcept { return basis.dim() == ambient_dim; }
};

/// Line-oriented serialization: a header, then one basis vector per line.
inline void write_subspace(std::ostream& os, const Subspace& s) {
    os << "# Subspace ambient=" << to_string(s.ambient) << " p=" << s.basis.p()
       << " dim=" << s.dim() << " ambient_dim=" << s.ambient_dim << '\n';
    for (const auto& row : s.basis.rows()) {
        for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
        os << '\n';
    }
}

}  // namespace bogo

#endif  // BOGO_FP_LINALG_HPP
