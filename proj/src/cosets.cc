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

#include "eaqmds/cosets.h"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "eaqmds/errors.h"
#include "eaqmds/numtheory.h"

namespace eaqmds {

namespace {

std::vector<bool> membership(const ResidueSet &s) {
    std::vector<bool> member(static_cast<std::size_t>(s.modulus()), false);
    for (Residue x : s.members()) member[static_cast<std::size_t>(x)] = true;
    return member;
}

}  // namespace

ResidueSet::ResidueSet(Residue n) : n_(n) {
    if (n <= 0) throw ParameterError("residue modulus must be positive");
}

ResidueSet::ResidueSet(Residue n, std::vector<Residue> members) : ResidueSet(n) {
    for (Residue &x : members) x = mod(x, n);
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
        throw ParameterError("duplicate residue in set");
    }
    members_ = std::move(members);
}

ResidueSet ResidueSet::from_any(Residue n, std::vector<Residue> members) {
    for (Residue &x : members) x = mod(x, n);
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return ResidueSet(n, std::move(members));
}

ResidueSet ResidueSet::interval(Residue n, Residue lo, Residue hi) {
    if (hi < lo) return ResidueSet(n);
    if (hi - lo >= n) throw ParameterError("interval longer than the modulus");
    std::vector<Residue> v(static_cast<std::size_t>(hi - lo + 1));
    std::iota(v.begin(), v.end(), lo);
    return ResidueSet(n, std::move(v));
}

bool ResidueSet::contains(Residue x) const {
    return std::binary_search(members_.begin(), members_.end(), mod(x, n_));
}

void ResidueSet::require_same(const ResidueSet &o) const {
    if (n_ != o.n_) throw ParameterError("residue sets with different moduli");
}

bool ResidueSet::is_subset_of(const ResidueSet &o) const {
    require_same(o);
    return std::includes(o.members_.begin(), o.members_.end(), members_.begin(), members_.end());
}

ResidueSet ResidueSet::intersect(const ResidueSet &o) const {
    require_same(o);
    std::vector<Residue> v;
    std::set_intersection(members_.begin(), members_.end(), o.members_.begin(), o.members_.end(),
                          std::back_inserter(v));
    return ResidueSet(n_, std::move(v));
}

ResidueSet ResidueSet::unite(const ResidueSet &o) const {
    require_same(o);
    std::vector<Residue> v;
    std::set_union(members_.begin(), members_.end(), o.members_.begin(), o.members_.end(), std::back_inserter(v));
    return ResidueSet(n_, std::move(v));
}

ResidueSet ResidueSet::minus(const ResidueSet &o) const {
    require_same(o);
    std::vector<Residue> v;
    std::set_difference(members_.begin(), members_.end(), o.members_.begin(), o.members_.end(),
                        std::back_inserter(v));
    return ResidueSet(n_, std::move(v));
}

bool ResidueSet::is_consecutive_run() const {
    if (members_.empty() || static_cast<Residue>(members_.size()) == n_) return true;
    // Count gaps along the cycle; a single run has exactly one.
    std::size_t gaps = 0;
    for (std::size_t i = 0; i < members_.size(); ++i) {
        const Residue next = members_[(i + 1) % members_.size()];
        if (mod(members_[i] + 1, n_) != next) ++gaps;
    }
    return gaps == 1;
}

std::string ResidueSet::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < members_.size(); ++i) os << (i ? "," : "") << members_[i];
    os << '}';
    return os.str();
}

Coset cyclotomic_coset(Residue n, Residue qsq, Residue i) {
    if (n <= 0) throw ParameterError("modulus must be positive");
    if (std::gcd(mod(qsq, n), n) != 1 && n > 1) throw ParameterError("q^2 is not invertible modulo n");
    const Residue start = mod(i, n);
    const Residue mult = mod(qsq, n);
    std::vector<Residue> orbit{start};
    for (Residue x = mod(start * mult, n); x != start; x = mod(x * mult, n)) orbit.push_back(x);
    std::sort(orbit.begin(), orbit.end());
    return Coset{n, orbit.front(), std::move(orbit)};
}

std::vector<Coset> all_cosets(Residue n, Residue qsq) {
    std::vector<Coset> out;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (Residue i = 0; i < n; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        Coset c = cyclotomic_coset(n, qsq, i);
        for (Residue x : c.members) seen[static_cast<std::size_t>(x)] = true;
        out.push_back(std::move(c));
    }
    return out;
}

bool is_coset_closed(const ResidueSet &s, Residue qsq) {
    const Residue n = s.modulus();
    const Residue mult = mod(qsq, n);
    const std::vector<bool> member = membership(s);
    return std::all_of(s.members().begin(), s.members().end(),
                       [&](Residue x) { return member[static_cast<std::size_t>(x * mult % n)]; });
}

ResidueSet neg_q_image(Residue q, const ResidueSet &s) {
    const Residue n = s.modulus();
    if (std::gcd(mod(q, n), n) != 1 && n > 1) throw ParameterError("q is not invertible modulo n");
    const Residue qm = mod(q, n);
    // Large sets are collected through a bitmap instead of sorting.
    if (s.size() * 16 < static_cast<std::size_t>(n)) {
        std::vector<Residue> v;
        v.reserve(s.size());
        for (Residue x : s.members()) v.push_back(mod(-qm * x, n));
        return ResidueSet(n, std::move(v));
    }
    std::vector<bool> member(static_cast<std::size_t>(n), false);
    for (Residue x : s.members()) member[static_cast<std::size_t>(mod(-qm * x, n))] = true;
    std::vector<Residue> v;
    v.reserve(s.size());
    for (Residue i = 0; i < n; ++i) {
        if (member[static_cast<std::size_t>(i)]) v.push_back(i);
    }
    return ResidueSet(n, std::move(v));
}

std::pair<ResidueSet, ResidueSet> coset_neg_q_identity(Residue n, Residue q, Residue u, Residue v) {
    const Residue index = mod(u * q + v, n);
    if (index == 0) throw ParameterError("uq+v is 0 modulo n");
    const Residue qsq = mod(q * q, n);
    const ResidueSet image = neg_q_image(q, cyclotomic_coset(n, qsq, index).as_set());
    const ResidueSet target = cyclotomic_coset(n, qsq, mod(v * q - u, n)).as_set();
    return {image, target};
}

ResidueSet run_defining_set(Residue n, Residue s, Residue delta) {
    if (delta < 1 || delta > s) {
        throw ParameterError("run half-length " + std::to_string(delta) + " outside [1, " + std::to_string(s) + "]");
    }
    return ResidueSet::interval(n, s + 1 - delta, s + delta);
}

Decomposition decompose(Residue q, const ResidueSet &z) {
    const Residue n = z.modulus();
    if (!is_coset_closed(z, mod(q * q, n))) throw ParameterError("defining set is not a union of cyclotomic cosets");
    ResidueSet z1 = z.intersect(neg_q_image(q, z));
    ResidueSet z2 = z.minus(z1);
    return Decomposition{std::move(z1), std::move(z2)};
}

}  // namespace eaqmds
