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

#include "eaqmds/sweep.h"

#include <algorithm>
#include <future>
#include <map>
#include <set>
#include <iterator>
#include <thread>
#include <tuple>

#include "eaqmds/errors.h"
#include "eaqmds/numtheory.h"
#include "eaqmds/rank_oracle.h"

namespace eaqmds {

std::string CheckTally::status() const {
    if (skipped) return "skipped";
    return failed > 0 ? "failed" : "passed";
}

const CheckTally *SweepSummary::find(const std::string &name) const {
    for (const auto &[n, t] : checks) {
        if (n == name) return &t;
    }
    return nullptr;
}

void SweepSummary::record(const std::string &name, bool passed, const std::string &context, const std::string &detail) {
    auto it = std::find_if(checks.begin(), checks.end(), [&](const auto &p) { return p.first == name; });
    if (it == checks.end()) {
        checks.emplace_back(name, CheckTally{});
        it = std::prev(checks.end());
    }
    if (passed) {
        ++it->second.passed;
    } else {
        ++it->second.failed;
        failures.push_back({name, context, detail});
    }
}

void SweepSummary::mark_skipped(const std::string &name) {
    checks.emplace_back(name, CheckTally{0, 0, true});
}

std::vector<FamilySpec> sweep_specs(std::int64_t m_max, std::int64_t q_max) {
    std::vector<FamilySpec> out;
    for (int c = 1; c <= 4; ++c) {
        for (std::int64_t m = 1; m <= m_max; m += 2) {
            auto specs = enumerate_admissible(family_from_int(c), m, q_max, q_max);
            out.insert(out.end(), specs.begin(), specs.end());
        }
    }
    return out;
}

std::string describe(const FamilySpec &s) {
    return "case " + family_name(s.family) + " m=" + std::to_string(s.m) + " q=" + std::to_string(s.q) +
           " k=" + std::to_string(s.k) + " alpha=" + std::to_string(s.alpha);
}

std::int64_t coset_identity_failures(std::int64_t n, std::int64_t q) {
    std::int64_t bad = 0;
    for (std::int64_t u = 0; u < q; ++u) {
        for (std::int64_t v = 0; v < q; ++v) {
            if (mod(u * q + v, n) == 0) continue;
            const auto [image, target] = coset_neg_q_identity(n, q, u, v);
            if (!(image == target)) ++bad;
        }
    }
    return bad;
}

namespace {

void check_coset_structure(SweepSummary &sum, std::int64_t n, std::int64_t q, const std::string &ctx) {
    const std::int64_t qsq = mod(q * q, n);
    const std::vector<Coset> cosets = all_cosets(n, qsq);
    std::size_t total = 0;
    bool shape = true;
    for (const Coset &c : cosets) {
        total += c.members.size();
        const ResidueSet expected = ResidueSet::from_any(n, {c.rep, n - c.rep});
        if (!(c.as_set() == expected)) shape = false;
    }
    sum.record(kCheckCosetPartition, total == static_cast<std::size_t>(n), ctx);
    sum.record(kCheckCosetShape, shape, ctx);

    bool involution = true;
    std::set<Residue> images;
    for (const Coset &c : cosets) {
        const ResidueSet img = neg_q_image(q, c.as_set());
        const Coset img_coset = cyclotomic_coset(n, qsq, img.members().front());
        if (!(img_coset.as_set() == img) || !(neg_q_image(q, img) == c.as_set())) involution = false;
        images.insert(img_coset.rep);
    }
    sum.record(kCheckNegQInvolution, involution && images.size() == cosets.size(), ctx);

    const std::int64_t bad = coset_identity_failures(n, q);
    sum.record(kCheckCosetIdentity, bad == 0, ctx, std::to_string(bad) + " failing (u,v) pairs");
}

void record_report(SweepSummary &sum, const VerificationReport &rep, const std::string &ctx) {
    for (const Check &c : rep.checks) sum.record(c.name, c.passed, ctx, c.detail);
}

// Rank reports for the oracle-eligible specs, computed concurrently and
// returned in input order.
std::vector<RankReport> oracle_reports(const std::vector<FamilySpec> &specs, std::int64_t n_max) {
    std::vector<RankReport> out(specs.size());
    const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 8u));
    std::vector<std::future<void>> jobs;
    for (unsigned w = 0; w < workers; ++w) {
        jobs.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < specs.size(); i += workers) out[i] = entanglement_rank(specs[i], n_max);
        }));
    }
    for (auto &j : jobs) j.get();
    return out;
}

}  // namespace

SweepSummary run_sweep(const SweepOptions &opts) {
    if (opts.m_max < 1 || opts.q_max < 1 || opts.oracle_n_max < 0) throw ParameterError("sweep bounds must be positive");
    SweepSummary sum;
    sum.options = opts;
    const std::vector<FamilySpec> specs = sweep_specs(opts.m_max, opts.q_max);
    sum.specs = static_cast<std::int64_t>(specs.size());

    for (const FamilySpec &s : specs) record_report(sum, verify_family(s), describe(s));

    std::set<std::pair<std::int64_t, std::int64_t>> structures;
    for (const FamilySpec &s : specs) {
        if (structures.insert({s.n, s.q}).second) {
            check_coset_structure(sum, s.n, s.q, "n=" + std::to_string(s.n) + " q=" + std::to_string(s.q));
        }
    }

    // Entanglement count grows strictly with alpha within each (case, m, k).
    std::map<std::tuple<int, std::int64_t, std::int64_t>, std::vector<std::int64_t>> by_family;
    for (const FamilySpec &s : specs) by_family[{static_cast<int>(s.family), s.m, s.k}].push_back(closed_form(s).c);
    for (const auto &[key, cs] : by_family) {
        const bool increasing = std::adjacent_find(cs.begin(), cs.end(), std::greater_equal<>()) == cs.end();
        sum.record(kCheckMonotone, increasing,
                   "case " + std::to_string(std::get<0>(key)) + " m=" + std::to_string(std::get<1>(key)) +
                       " k=" + std::to_string(std::get<2>(key)));
    }

    // For m = 1, cases I and III share q, delta' and c.
    for (const FamilySpec &s : specs) {
        if (s.family != Family::I || s.m != 1) continue;
        const FamilySpec t = make_family_spec(Family::III, 1, s.k, s.alpha);
        const ClosedForm a = closed_form(s), b = closed_form(t);
        sum.record(kCheckOverlapIandIII,
                   s.q == t.q && a.delta_prime == b.delta_prime && a.c == b.c && ea_params(s) == ea_params(t),
                   describe(s));
    }

    if (opts.oracle_n_max == 0) {
        sum.mark_skipped(kCheckRankOracle);
    } else {
        std::vector<FamilySpec> eligible;
        std::copy_if(specs.begin(), specs.end(), std::back_inserter(eligible),
                     [&](const FamilySpec &s) { return s.n <= opts.oracle_n_max; });
        for (const RankReport &r : oracle_reports(eligible, opts.oracle_n_max)) {
            sum.record(kCheckRankOracle, r.match && r.z1_size == r.closed_form_c, describe(r.spec),
                       "rank " + std::to_string(r.rank_hh_dagger) + ", |Z1| " + std::to_string(r.z1_size));
        }
        if (!sum.find(kCheckRankOracle)) sum.checks.emplace_back(kCheckRankOracle, CheckTally{});
    }

    if (opts.fault_inject) {
        const auto victim =
            std::find_if(specs.begin(), specs.end(), [](const FamilySpec &s) { return s.alpha < s.k; });
        if (victim != specs.end()) {
            record_report(sum, verify_family(*victim, VerifyOptions{1}), "fault-injected " + describe(*victim));
        }
    }
    return sum;
}

}  // namespace eaqmds
