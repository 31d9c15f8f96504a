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

#ifndef EAQMDS_POLYNOMIAL_H
#define EAQMDS_POLYNOMIAL_H

#include <cstdint>
#include <utility>
#include <vector>

#include "eaqmds/field.h"

namespace eaqmds {

/// Univariate polynomial over a Field, low degree first, without trailing zeros.
class Polynomial {
   public:
    explicit Polynomial(FieldPtr field) : field_(std::move(field)) {
    }
    Polynomial(FieldPtr field, std::vector<Code> coeffs);

    static Polynomial constant(FieldPtr field, Code c);
    static Polynomial monomial(FieldPtr field, Code c, std::size_t degree);
    /// x^n - 1.
    static Polynomial x_pow_minus_one(FieldPtr field, std::size_t n);

    const FieldPtr &field() const {
        return field_;
    }
    const std::vector<Code> &coeffs() const {
        return coeffs_;
    }
    /// -1 for the zero polynomial.
    long degree() const {
        return static_cast<long>(coeffs_.size()) - 1;
    }
    bool is_zero() const {
        return coeffs_.empty();
    }
    bool is_monic() const {
        return !coeffs_.empty() && coeffs_.back() == 1;
    }
    Code coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : 0;
    }
    Code leading() const {
        return coeffs_.empty() ? 0 : coeffs_.back();
    }
    Code evaluate(Code x) const;

    /// x^deg * p(1/x) for deg = degree(); the reciprocal polynomial.
    Polynomial reciprocal() const;
    Polynomial monic() const;

    Polynomial operator+(const Polynomial &o) const;
    Polynomial operator-(const Polynomial &o) const;
    Polynomial operator*(const Polynomial &o) const;
    /// Quotient and remainder; throws std::domain_error on a zero divisor.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial &divisor) const;
    Polynomial operator%(const Polynomial &o) const {
        return divmod(o).second;
    }

    friend bool operator==(const Polynomial &a, const Polynomial &b);

   private:
    void trim();
    void require_same(const Polynomial &o) const;

    FieldPtr field_;
    std::vector<Code> coeffs_;
};

/// Monic gcd (zero if both are zero).
Polynomial gcd(Polynomial a, Polynomial b);
Polynomial powmod(const Polynomial &base, std::uint64_t e, const Polynomial &modulus);

}  // namespace eaqmds

#endif  // EAQMDS_POLYNOMIAL_H
