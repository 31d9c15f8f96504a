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

#include "eaqmds/families.h"

#include <algorithm>

#include "eaqmds/errors.h"
#include "eaqmds/numtheory.h"

namespace eaqmds {

std::string family_name(Family f) {
    switch (f) {
        case Family::I: return "I";
        case Family::II: return "II";
        case Family::III: return "III";
        case Family::IV: return "IV";
    }
    return "?";
}

Family family_from_int(int c) {
    if (c < 1 || c > 4) throw ParameterError("case must be 1, 2, 3 or 4 (got " + std::to_string(c) + ")");
    return static_cast<Family>(c);
}

std::int64_t family_q(Family f, std::int64_t m, std::int64_t k) {
    const std::int64_t a = m * m + 1;
    switch (f) {
        case Family::I: return 2 * a * k + m;
        case Family::II: return 2 * a * k + a + m;
        case Family::III: return 2 * a * k + a - m;
        case Family::IV: return 2 * a * k + 2 * a - m;
    }
    return 0;
}

FamilySpec make_family_spec(Family f, std::int64_t m, std::int64_t k, std::int64_t alpha) {
    if (m < 1 || m % 2 == 0) throw ParameterError("m must be an odd integer >= 1 (got " + std::to_string(m) + ")");
    if (k < 1) throw ParameterError("k must be >= 1 (got " + std::to_string(k) + ")");
    if (alpha < 1) throw ParameterError("alpha must be >= 1 (got " + std::to_string(alpha) + ")");
    if (alpha > k) {
        throw ParameterError("alpha exceeds k (alpha=" + std::to_string(alpha) + ", k=" + std::to_string(k) + ")");
    }
    const std::int64_t a = m * m + 1;
    const std::int64_t q = family_q(f, m, k);
    const auto pp = as_prime_power(static_cast<std::uint64_t>(q));
    if (!pp || pp->prime == 2) {
        throw ParameterError("q=" + std::to_string(q) + " is not an odd prime power (case " + family_name(f) + ", m=" +
                             std::to_string(m) + ", k=" + std::to_string(k) + ")");
    }
    if ((q * q + 1) % a != 0) throw AlgebraError("a does not divide q^2+1");
    const std::int64_t n = (q * q + 1) / a;
    return FamilySpec{f, m, k, alpha, a, q, n, (n - 1) / 2};
}

std::vector<FamilySpec> enumerate_admissible(Family f, std::int64_t m, std::int64_t k_max, std::int64_t q_max) {
    if (m < 1 || m % 2 == 0) throw ParameterError("m must be an odd integer >= 1 (got " + std::to_string(m) + ")");
    std::vector<FamilySpec> out;
    for (std::int64_t k = 1; k <= k_max; ++k) {
        const std::int64_t q = family_q(f, m, k);
        if (q > q_max) break;
        const auto pp = as_prime_power(static_cast<std::uint64_t>(q));
        if (!pp || pp->prime == 2) continue;
        for (std::int64_t alpha = 1; alpha <= k; ++alpha) out.push_back(make_family_spec(f, m, k, alpha));
    }
    return out;
}

ClosedForm closed_form(const FamilySpec &sp) {
    const std::int64_t a = sp.a, m = sp.m, k = sp.k, al = sp.alpha, q = sp.q;
    std::int64_t dp = 0, c = 0;
    switch (sp.family) {
        case Family::I:
            dp = al * q + m * k;
            c = 4 * al * (a * al + m);
            break;
        case Family::II:
            dp = al * q + (a + m) * k + (a + 2 * m) / 2;
            c = 4 * al * (a * al + a + m) + a + 2 * m;
            break;
        case Family::III:
            dp = al * q + (a - m) * k + (a - 2 * m) / 2;
            c = 4 * al * (a * al + a - m) + a - 2 * m;
            break;
        case Family::IV:
            dp = al * q + (2 * a - m) * k + 2 * (a - m);
            c = 4 * al * (a * al + 2 * a - m) + 4 * (a - m);
            break;
    }
    const std::int64_t classical = sp.n - 2 * dp;
    return ClosedForm{dp, c, classical, 2 * classical - sp.n + c, 2 * dp + 1};
}

std::int64_t stated_quantum_dimension(const FamilySpec &sp) {
    const std::int64_t a = sp.a, m = sp.m, k = sp.k, al = sp.alpha, q = sp.q, n = sp.n;
    switch (sp.family) {
        case Family::I: return n - 4 * al * (q - m - a * al) - 4 * m * k;
        case Family::II: return n - 4 * al * (q - a - m - a * al) - 4 * (a + m) * k - (a + 2 * m);
        case Family::III: return n - 4 * al * (q - a + m - a * al) - 4 * (a - m) * k - (a - 2 * m);
        case Family::IV: return n - 4 * al * (q - (2 * a - m) - a * al) - 4 * (2 * a - m) * k - 4 * (a - m);
    }
    return 0;
}

CodeRecord build_run_code(std::int64_t n, std::int64_t delta) {
    ResidueSet z = run_defining_set(n, (n - 1) / 2, delta);
    const bool mds = z.is_consecutive_run();
    const auto size = static_cast<std::int64_t>(z.size());
    return CodeRecord{n, std::move(z), n - size, size + 1, mds};
}

CodeRecord build_defining_set(const FamilySpec &spec) {
    const std::int64_t dp = closed_form(spec).delta_prime;
    if (dp > spec.s) throw AlgebraError("run half-length exceeds (n-1)/2");
    return build_run_code(spec.n, dp);
}

namespace {

// Accumulates unions of cosets C_{uq+v}. For v up to `full_u_limit` the index
// u runs over [0, alpha], beyond it over [0, alpha-1].
class CosetUnion {
   public:
    CosetUnion(const FamilySpec &spec, std::int64_t full_u_limit)
        : spec_(spec), full_u_limit_(full_u_limit), member_(static_cast<std::size_t>(spec.n), false) {
    }

    void add_range(std::int64_t v_lo, std::int64_t v_hi) {
        for (std::int64_t v = v_lo; v <= v_hi; ++v) add_v(v, v <= full_u_limit_ ? spec_.alpha : spec_.alpha - 1);
    }

    void add_range_fixed(std::int64_t v_lo, std::int64_t v_hi, std::int64_t u_max) {
        for (std::int64_t v = v_lo; v <= v_hi; ++v) add_v(v, u_max);
    }

    ResidueSet result() const {
        std::vector<Residue> v;
        for (std::size_t i = 0; i < member_.size(); ++i) {
            if (member_[i]) v.push_back(static_cast<Residue>(i));
        }
        return ResidueSet(spec_.n, std::move(v));
    }

   private:
    // Marks the q^2-orbit of uq+v for each u in [0, u_max].
    void add_v(std::int64_t v, std::int64_t u_max) {
        const std::int64_t n = spec_.n;
        const std::int64_t qsq = mod(spec_.q * spec_.q, n);
        for (std::int64_t u = 0; u <= u_max; ++u) {
            const std::int64_t start = mod(u * spec_.q + v, n);
            std::int64_t x = start;
            do {
                member_[static_cast<std::size_t>(x)] = true;
                x = x * qsq % n;
            } while (x != start);
        }
    }

    const FamilySpec &spec_;
    std::int64_t full_u_limit_;
    std::vector<bool> member_;
};

// (gamma1, gamma2) offsets of the t-range for block h in families II and III.
std::pair<std::int64_t, std::int64_t> block_offsets(std::int64_t h, std::int64_t m) {
    if (h <= (m - 1) / 2) return {0, 1};
    if (h == (m + 1) / 2) return {0, 0};
    return {1, 0};
}

}  // namespace

ResidueSet build_T1(const FamilySpec &sp) {
    const ClosedForm cf = closed_form(sp);
    const std::int64_t s = sp.s, k = sp.k, m = sp.m, al = sp.alpha;
    // The u = alpha layer only reaches v <= s + (delta' - alpha q).
    CosetUnion acc(sp, s + cf.delta_prime - al * sp.q);
    switch (sp.family) {
        case Family::I:
            for (std::int64_t t = -m; t <= (2 * m - 1) * m; t += 2) {
                const std::int64_t h = t < 0 ? 1 : (t - 1) / (2 * m) + 2;
                acc.add_range(s + (m + t) * k + h + al, s + (m + t + 2) * k + (h - 1) - al);
            }
            break;
        case Family::II:
        case Family::III:
            for (std::int64_t h = 1; h <= m; ++h) {
                const auto [g1, g2] = block_offsets(h, m);
                for (std::int64_t t = (h - 1) * m + g1; t <= h * m - g2; ++t) {
                    const std::int64_t base = s + t * (2 * k + 1);
                    if (sp.family == Family::II) {
                        acc.add_range(base + (h + 1) + al, base + 2 * k + 1 + (h - 1) - al);
                    } else {
                        acc.add_range(base + (2 - h) + al, base + 2 * k - (h - 1) - al);
                    }
                }
            }
            break;
        case Family::IV:
            for (std::int64_t t = -m; t <= (2 * m - 1) * m; t += 2) {
                const std::int64_t h = t < 0 ? 2 : 1 - (t - 1) / (2 * m);
                acc.add_range(s + (m + t) * (k + 1) + h + al, s + (m + t + 2) * (k + 1) + (h - 3) - al);
            }
            break;
    }
    return acc.result();
}

ResidueSet build_T1_prime(const FamilySpec &sp) {
    if (sp.family != Family::I) return decompose(sp.q, build_defining_set(sp).defining_set).z1;
    const std::int64_t s = sp.s, k = sp.k, m = sp.m, al = sp.alpha, a = sp.a, q = sp.q;
    CosetUnion acc(sp, s);
    acc.add_range_fixed(s + 1, s + al, al);
    for (std::int64_t t = 1; t <= (m - 1) / 2; ++t) acc.add_range_fixed(s + 2 * t * k + 1 - al, s + 2 * t * k + al, al);
    for (std::int64_t f = 1; f <= 2 * m - 1; f += 2) {
        for (std::int64_t t = (f * m + 3) / 2; t <= ((f + 2) * m - 1) / 2; ++t) {
            acc.add_range_fixed(s + 2 * t * k + (f + 3) / 2 - al, s + 2 * t * k + (f + 1) / 2 + al, al - 1);
        }
    }
    for (std::int64_t t = ((2 * m - 1) * m + 3) / 2; t <= m * m; ++t) {
        acc.add_range_fixed(s + 2 * t * k + m + 1 - al, s + 2 * t * k + m + al, al - 1);
    }
    acc.add_range_fixed(s + 2 * a * k + m + 1 - al, s + q, al - 1);
    for (std::int64_t g = 1; g <= 2 * m - 1; g += 2) {
        const std::int64_t centre = s + (g * m + 1) * k + (g + 1) / 2;
        acc.add_range_fixed(centre - al, centre + al, al - 1);
    }
    return acc.result();
}

EAParams ea_params_for(std::int64_t q, const CodeRecord &code) {
    const auto c = static_cast<std::int64_t>(decompose(q, code.defining_set).z1.size());
    const std::int64_t n = code.n;
    const std::int64_t kq = 2 * code.dim - n + c;
    const std::int64_t d = code.designed_distance;
    return EAParams{n, kq, d, c, n + c - kq == 2 * (d - 1), 2 * d <= n + 2};
}

EAParams ea_params(const FamilySpec &spec) {
    return ea_params_for(spec.q, build_defining_set(spec));
}

bool VerificationReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.passed; });
}

const Check *VerificationReport::find(const std::string &name) const {
    for (const Check &c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

namespace {

std::string expect_detail(std::int64_t got, std::int64_t want) {
    return "got " + std::to_string(got) + ", expected " + std::to_string(want);
}

}  // namespace

VerificationReport verify_family(const FamilySpec &spec, const VerifyOptions &opts) {
    VerificationReport rep{spec, {}};
    const ClosedForm cf = closed_form(spec);
    const std::int64_t delta = cf.delta_prime + opts.delta_fault;
    if (delta < 1 || delta > spec.s) {
        rep.checks.push_back({kCheckDefiningSetSize, false, "run half-length " + std::to_string(delta) + " out of range"});
        return rep;
    }
    const CodeRecord code = build_run_code(spec.n, delta);
    const ResidueSet &z = code.defining_set;
    const Decomposition dec = decompose(spec.q, z);
    const auto zsize = static_cast<std::int64_t>(z.size());
    const auto c = static_cast<std::int64_t>(dec.z1.size());

    rep.checks.push_back({kCheckDefiningSetSize, zsize == 2 * cf.delta_prime, expect_detail(zsize, 2 * cf.delta_prime)});
    rep.checks.push_back({kCheckConsecutiveRun, z.is_consecutive_run(), ""});
    rep.checks.push_back({kCheckEntanglementClosedForm, c == cf.c, expect_detail(c, cf.c)});

    const ResidueSet t1 = build_T1(spec);
    const ResidueSet t1_image = neg_q_image(spec.q, t1);
    rep.checks.push_back({kCheckT1InZ, t1.is_subset_of(z), ""});
    rep.checks.push_back({kCheckT1Disjoint, t1.intersect(t1_image).empty(),
                          "overlap " + std::to_string(t1.intersect(t1_image).size())});

    const ResidueSet t1p = build_T1_prime(spec);
    rep.checks.push_back({kCheckT1PrimeStable, neg_q_image(spec.q, t1p) == t1p, ""});
    rep.checks.push_back(
        {kCheckPartition, t1.unite(t1p) == z && t1.intersect(t1p).empty() && t1p == dec.z1,
         "|T1|=" + std::to_string(t1.size()) + " |T1'|=" + std::to_string(t1p.size()) + " |Z|=" + std::to_string(zsize)});

    const EAParams ea = ea_params_for(spec.q, code);
    const std::int64_t stated = stated_quantum_dimension(spec);
    rep.checks.push_back({kCheckQuantumDimension, ea.kq == stated, expect_detail(ea.kq, stated)});
    rep.checks.push_back({kCheckEASingleton, ea.ea_singleton_equality, ""});
    return rep;
}

}  // namespace eaqmds
