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

#ifndef EAQMDS_CYCLIC_CODE_H
#define EAQMDS_CYCLIC_CODE_H

#include <cstdint>

#include "eaqmds/cosets.h"
#include "eaqmds/field.h"
#include "eaqmds/matrix.h"
#include "eaqmds/polynomial.h"

namespace eaqmds {

/// GF(q^2) for the code alphabet, its quadratic extension GF(q^4), and a
/// primitive n-th root of unity in the extension.
struct CodeTower {
    std::int64_t q;
    std::int64_t n;
    FieldPtr gf_q2;
    FieldPtr gf_q4;
    FieldElement lambda;
};

/// Requires q an odd prime power and n | q^4 - 1.
CodeTower make_code_tower(std::int64_t q, std::int64_t n);

/// prod_{j in coset} (x - lambda^j), computed in lambda's field and projected
/// onto its base subfield. Throws AlgebraError if a coefficient is not in the subfield.
Polynomial minimal_polynomial(const FieldElement &lambda, const Coset &coset);

/// Product of the minimal polynomials of the cosets making up z.
/// Throws ParameterError if z is not closed under multiplication by |base|.
Polynomial generator_polynomial(const FieldElement &lambda, const ResidueSet &z);

/// (x^n - 1) / g; throws AlgebraError on a nonzero remainder.
Polynomial check_polynomial(const Polynomial &g, std::size_t n);

/// k x n, row i holds the coefficients of x^i g(x).
MatrixGF generator_matrix(const Polynomial &g, std::size_t n);

/// deg(g) x n, row i holds the coefficients of x^i h~(x), h~ the reciprocal of the check polynomial.
MatrixGF parity_check_matrix(const Polynomial &g, std::size_t n);

/// Minimum Hamming weight over the nonzero codewords spanned by the rows of gen.
/// Throws GuardExceeded when |F|^rows exceeds `limit`.
std::int64_t brute_min_distance(const MatrixGF &gen, std::uint64_t limit = 1'000'000);

}  // namespace eaqmds

#endif  // EAQMDS_CYCLIC_CODE_H
