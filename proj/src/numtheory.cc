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

#include "eaqmds/numtheory.h"

#include <limits>
#include <stdexcept>

namespace eaqmds {

bool is_prime(std::uint64_t x) {
    if (x < 2) return false;
    for (std::uint64_t d = 2; d * d <= x; ++d) {
        if (x % d == 0) return false;
    }
    return true;
}

std::optional<PrimePower> as_prime_power(std::uint64_t x) {
    if (x < 2) return std::nullopt;
    std::uint64_t p = x;
    for (std::uint64_t d = 2; d * d <= x; ++d) {
        if (x % d == 0) {
            p = d;
            break;
        }
    }
    unsigned r = 0;
    while (x % p == 0) {
        x /= p;
        ++r;
    }
    if (x != 1) return std::nullopt;
    return PrimePower{p, r};
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t x) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= x; ++d) {
        if (x % d == 0) {
            out.push_back(d);
            while (x % d == 0) x /= d;
        }
    }
    if (x > 1) out.push_back(x);
    return out;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
            throw std::overflow_error("ipow: result does not fit in 64 bits");
        r *= base;
    }
    return r;
}

}  // namespace eaqmds
