// Copyright 2026 The eaqmds Authors
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

#ifndef EAQMDS_NUMTHEORY_H
#define EAQMDS_NUMTHEORY_H

#include <cstdint>
#include <optional>
#include <vector>

namespace eaqmds {

bool is_prime(std::uint64_t x);

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;
};

/// Decomposes x = p^r by trial division; nullopt when x is not a prime power.
std::optional<PrimePower> as_prime_power(std::uint64_t x);

/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t x);

std::uint64_t ipow(std::uint64_t base, unsigned exp);

/// Least non-negative residue of x mod n (n > 0).
inline std::int64_t mod(std::int64_t x, std::int64_t n) {
    std::int64_t r = x % n;
    return r < 0 ? r + n : r;
}

}  // namespace eaqmds

#endif  // EAQMDS_NUMTHEORY_H
