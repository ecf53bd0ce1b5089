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

#ifndef BOGO_WEIGHTS_HPP
#define BOGO_WEIGHTS_HPP

// delta(p, k) and s(p, k): the two orders compared by the normal-closure
// argument. Kept apart from ramification.hpp so matgroup.hpp does not pull in
// the profile machinery.

#include <numeric>
#include <string>

#include "bogo/error.hpp"
#include "bogo/numeric.hpp"

namespace bogo {

/// delta = (p^2 - 1) / gcd(p^2 - 1, k - 1): the tame ramification degree of
/// Q_q(p^n)/Q_q with q = p^2.
inline i64 delta(i64 p, i64 k) {
    if (!is_prime(p) || p < 3) fail(ErrorKind::NonPrimeP, "delta needs an odd prime, got " + std::to_string(p));
    if (k < 2) fail(ErrorKind::PreconditionViolated, "weight must be >= 2");
    if (k % 2 != 0) fail(ErrorKind::OddWeight, "weight " + std::to_string(k) + " is odd");
    const i64 q1 = checked_mul(p, p) - 1;
    return q1 / std::gcd(q1, k - 1);
}

/// s = (p - 1) / gcd(k - 1, p - 1) = |(F_p^x)^{k-1}|.
inline i64 det_image_order(i64 p, i64 k) {
    return (p - 1) / std::gcd(k - 1, p - 1);
}

}  // namespace bogo

#endif  // BOGO_WEIGHTS_HPP
