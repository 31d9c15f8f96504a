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

#ifndef EAQMDS_COSETS_H
#define EAQMDS_COSETS_H

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace eaqmds {

using Residue = std::int64_t;

/// Sorted, duplicate-free subset of Z/nZ with members normalized to [0, n-1].
class ResidueSet {
   public:
    explicit ResidueSet(Residue n);
    /// Members are reduced mod n; duplicates after reduction throw ParameterError.
    ResidueSet(Residue n, std::vector<Residue> members);
    ResidueSet(Residue n, std::initializer_list<Residue> members) : ResidueSet(n, std::vector<Residue>(members)) {
    }
    /// Members are reduced mod n; duplicates are merged.
    static ResidueSet from_any(Residue n, std::vector<Residue> members);
    /// The cyclic interval {lo, lo+1, ..., hi} mod n (lo <= hi, hi - lo < n).
    static ResidueSet interval(Residue n, Residue lo, Residue hi);

    Residue modulus() const {
        return n_;
    }
    const std::vector<Residue> &members() const {
        return members_;
    }
    std::size_t size() const {
        return members_.size();
    }
    bool empty() const {
        return members_.empty();
    }
    bool contains(Residue x) const;
    bool is_subset_of(const ResidueSet &o) const;

    ResidueSet intersect(const ResidueSet &o) const;
    ResidueSet unite(const ResidueSet &o) const;
    ResidueSet minus(const ResidueSet &o) const;

    /// True if the members form one run of consecutive residues mod n
    /// (wrapping through n-1 -> 0 allowed). The empty set counts as a run.
    bool is_consecutive_run() const;

    std::string to_string() const;

    friend bool operator==(const ResidueSet &a, const ResidueSet &b) = default;

   private:
    void require_same(const ResidueSet &o) const;

    Residue n_;
    std::vector<Residue> members_;
};

/// q^2-cyclotomic coset modulo n; rep is the minimal member.
struct Coset {
    Residue n;
    Residue rep;
    std::vector<Residue> members;

    ResidueSet as_set() const {
        return ResidueSet(n, members);
    }
    friend bool operator==(const Coset &a, const Coset &b) = default;
};

/// Orbit of i under x -> qsq * x mod n. Requires gcd(n, qsq) = 1.
Coset cyclotomic_coset(Residue n, Residue qsq, Residue i);

/// All cosets ordered by representative; a partition of [0, n-1].
std::vector<Coset> all_cosets(Residue n, Residue qsq);

bool is_coset_closed(const ResidueSet &s, Residue qsq);

/// {(n - q x) mod n : x in s}.
ResidueSet neg_q_image(Residue q, const ResidueSet &s);

/// (-q C_{uq+v}, C_{vq-u}) as residue sets. Throws ParameterError when uq+v = 0 mod n.
std::pair<ResidueSet, ResidueSet> coset_neg_q_identity(Residue n, Residue q, Residue u, Residue v);

/// C_{s+1} u ... u C_{s+delta} with s = (n-1)/2, i.e. the interval [s+1-delta, s+delta].
ResidueSet run_defining_set(Residue n, Residue s, Residue delta);

struct Decomposition {
    ResidueSet z1;
    ResidueSet z2;
};

/// z1 = Z n (-qZ), z2 = Z \ z1. Throws ParameterError if Z is not closed under
/// multiplication by q^2.
Decomposition decompose(Residue q, const ResidueSet &z);

}  // namespace eaqmds

#endif  // EAQMDS_COSETS_H
