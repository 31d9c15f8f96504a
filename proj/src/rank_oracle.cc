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

#include "eaqmds/rank_oracle.h"

#include <utility>

#include "eaqmds/cyclic_code.h"
#include "eaqmds/errors.h"

namespace eaqmds {

MatrixGF conjugate_transpose(const MatrixGF &m, std::int64_t q) {
    const Field &f = *m.field();
    MatrixGF out(m.field(), m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out.set(j, i, f.pow(m.code(i, j), static_cast<std::uint64_t>(q)));
    }
    return out;
}

std::size_t rank_gf(MatrixGF m) {
    const Field &f = *m.field();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<Code> a = m.entries();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot * cols + col] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) {
            for (std::size_t j = col; j < cols; ++j) std::swap(a[pivot * cols + j], a[rank * cols + j]);
        }
        const Code inv = f.inv(a[rank * cols + col]);
        for (std::size_t j = col; j < cols; ++j) a[rank * cols + j] = f.mul(a[rank * cols + j], inv);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const Code factor = a[r * cols + col];
            if (factor == 0) continue;
            for (std::size_t j = col; j < cols; ++j) {
                const Code pj = a[rank * cols + j];
                if (pj != 0) a[r * cols + j] = f.sub(a[r * cols + j], f.mul(factor, pj));
            }
        }
        ++rank;
    }
    return rank;
}

RankReport entanglement_rank(const FamilySpec &spec, std::int64_t max_length) {
    if (spec.n > max_length) {
        throw GuardExceeded("n=" + std::to_string(spec.n) + " exceeds the rank-oracle limit n <= " +
                                std::to_string(max_length),
                            max_length);
    }
    const CodeRecord code = build_defining_set(spec);
    const CodeTower tower = make_code_tower(spec.q, spec.n);
    const Polynomial g = generator_polynomial(tower.lambda, code.defining_set);
    const MatrixGF h = parity_check_matrix(g, static_cast<std::size_t>(spec.n));
    const auto rank = static_cast<std::int64_t>(rank_gf(h * conjugate_transpose(h, spec.q)));
    const auto z1 = static_cast<std::int64_t>(decompose(spec.q, code.defining_set).z1.size());
    return RankReport{spec, spec.n, rank, z1, closed_form(spec).c, rank == z1};
}

}  // namespace eaqmds
