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

#include "eaqmds/polynomial.h"

#include <stdexcept>

#include "eaqmds/errors.h"

namespace eaqmds {

Polynomial::Polynomial(FieldPtr field, std::vector<Code> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (Code c : coeffs_) {
        if (!field_->contains(c)) throw ParameterError("polynomial coefficient outside field " + field_->name());
    }
    trim();
}

Polynomial Polynomial::constant(FieldPtr field, Code c) {
    return Polynomial(std::move(field), std::vector<Code>{c});
}

Polynomial Polynomial::monomial(FieldPtr field, Code c, std::size_t degree) {
    std::vector<Code> v(degree + 1, 0);
    v[degree] = c;
    return Polynomial(std::move(field), std::move(v));
}

Polynomial Polynomial::x_pow_minus_one(FieldPtr field, std::size_t n) {
    std::vector<Code> v(n + 1, 0);
    v[n] = 1;
    v[0] = field->sub(v[0], 1);
    return Polynomial(std::move(field), std::move(v));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void Polynomial::require_same(const Polynomial &o) const {
    if (!same_field(field_, o.field_)) throw FieldMismatch("polynomials over different fields");
}

Code Polynomial::evaluate(Code x) const {
    Code acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_->add(field_->mul(acc, x), *it);
    return acc;
}

Polynomial Polynomial::reciprocal() const {
    return Polynomial(field_, std::vector<Code>(coeffs_.rbegin(), coeffs_.rend()));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    const Code s = field_->inv(leading());
    std::vector<Code> v(coeffs_);
    for (Code &c : v) c = field_->mul(c, s);
    return Polynomial(field_, std::move(v));
}

Polynomial Polynomial::operator+(const Polynomial &o) const {
    require_same(o);
    std::vector<Code> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_->add(coeff(i), o.coeff(i));
    return Polynomial(field_, std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial &o) const {
    require_same(o);
    std::vector<Code> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_->sub(coeff(i), o.coeff(i));
    return Polynomial(field_, std::move(v));
}

Polynomial Polynomial::operator*(const Polynomial &o) const {
    require_same(o);
    if (is_zero() || o.is_zero()) return Polynomial(field_);
    std::vector<Code> v(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            v[i + j] = field_->add(v[i + j], field_->mul(coeffs_[i], o.coeffs_[j]));
        }
    }
    return Polynomial(field_, std::move(v));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial &divisor) const {
    require_same(divisor);
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    if (degree() < divisor.degree()) return {Polynomial(field_), *this};
    std::vector<Code> rem(coeffs_);
    const std::size_t dd = divisor.coeffs_.size() - 1;
    std::vector<Code> quo(rem.size() - dd, 0);
    const Code lead_inv = field_->inv(divisor.leading());
    for (std::size_t i = rem.size(); i-- > dd;) {
        const Code t = field_->mul(rem[i], lead_inv);
        quo[i - dd] = t;
        if (t == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) {
            rem[i - dd + j] = field_->sub(rem[i - dd + j], field_->mul(t, divisor.coeffs_[j]));
        }
    }
    rem.resize(dd);
    return {Polynomial(field_, std::move(quo)), Polynomial(field_, std::move(rem))};
}

bool operator==(const Polynomial &a, const Polynomial &b) {
    return same_field(a.field_, b.field_) && a.coeffs_ == b.coeffs_;
}

Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Polynomial powmod(const Polynomial &base, std::uint64_t e, const Polynomial &modulus) {
    Polynomial result = Polynomial::constant(base.field(), 1) % modulus;
    Polynomial b = base % modulus;
    while (e > 0) {
        if (e & 1) result = (result * b) % modulus;
        b = (b * b) % modulus;
        e >>= 1;
    }
    return result;
}

}  // namespace eaqmds
