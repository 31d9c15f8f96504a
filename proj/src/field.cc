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

#include "eaqmds/field.h"

#include <array>
#include <stdexcept>

#include "eaqmds/errors.h"
#include "eaqmds/numtheory.h"
#include "eaqmds/polynomial.h"

namespace eaqmds {

namespace {

// Rabin's test; degrees 2 and 3 fall back to root absence.
bool is_irreducible(const FieldPtr &base, const std::vector<Code> &monic) {
    const std::size_t e = monic.size() - 1;
    if (e == 1) return true;
    Polynomial f(base, monic);
    if (e <= 3) {
        for (Code x = 0; x < base->order(); ++x) {
            if (f.evaluate(x) == 0) return false;
        }
        return true;
    }
    const Polynomial x = Polynomial::monomial(base, 1, 1);
    const std::uint64_t order = base->order();
    // frob[i] = x^(Q^i) mod f.
    std::vector<Polynomial> frob{x % f};
    for (std::size_t i = 1; i <= e; ++i) frob.push_back(powmod(frob.back(), order, f));
    if (!(frob[e] == x % f)) return false;
    for (std::uint64_t r : distinct_prime_factors(e)) {
        const Polynomial g = gcd(f, frob[e / r] - x);
        if (g.degree() != 0) return false;
    }
    return true;
}

FieldPtr smallest_irreducible_extension(const FieldPtr &base, unsigned e) {
    const std::uint64_t q = base->order();
    const std::uint64_t candidates = ipow(q, e);
    std::vector<Code> coeffs(e + 1, 0);
    coeffs[e] = 1;
    for (std::uint64_t c = 0; c < candidates; ++c) {
        std::uint64_t rest = c;
        for (unsigned i = 0; i < e; ++i) {
            coeffs[i] = rest % q;
            rest /= q;
        }
        if (is_irreducible(base, coeffs)) return Field::extension(base, coeffs);
    }
    throw AlgebraError("no irreducible polynomial found");
}

}  // namespace

Field::Field(std::uint64_t p, FieldPtr base, std::vector<Code> modulus)
    : p_(p), base_(std::move(base)), modulus_(std::move(modulus)) {
    degree_ = static_cast<unsigned>(modulus_.size() - 1);
    base_order_ = base_ ? base_->order() : p_;
    absolute_degree_ = base_ ? base_->absolute_degree() * degree_ : 1;
    order_ = base_ ? ipow(base_order_, degree_) : p_;
}

FieldPtr Field::prime(std::uint64_t p) {
    if (!is_prime(p)) throw ParameterError("characteristic " + std::to_string(p) + " is not prime");
    if (p == 2) throw ParameterError("characteristic 2 is not supported");
    if (p > (1ULL << 31)) throw ParameterError("characteristic too large");
    return FieldPtr(new Field(p, nullptr, {0, 1}));
}

FieldPtr Field::extension(FieldPtr base, std::vector<Code> modulus) {
    if (!base) throw ParameterError("extension requires a base field");
    if (modulus.size() < 2) throw ParameterError("modulus must have degree >= 1");
    if (modulus.size() - 1 > kMaxExtensionDegree) throw ParameterError("extension degree too large");
    if (modulus.back() != 1) throw ParameterError("modulus must be monic");
    for (Code c : modulus) {
        if (!base->contains(c)) throw ParameterError("modulus coefficient outside base field");
    }
    try {
        ipow(base->order(), static_cast<unsigned>(modulus.size() - 1));
    } catch (const std::overflow_error &) {
        throw ParameterError("field order does not fit in 64 bits");
    }
    if (!is_irreducible(base, modulus)) throw ParameterError("modulus is reducible over " + base->name());
    const std::uint64_t p = base->characteristic();
    return FieldPtr(new Field(p, std::move(base), std::move(modulus)));
}

std::string Field::name() const {
    if (!base_) return "GF(" + std::to_string(p_) + ")";
    if (base_->is_prime_field()) return "GF(" + std::to_string(p_) + "^" + std::to_string(degree_) + ")";
    return "GF(" + std::to_string(base_order_) + "^" + std::to_string(degree_) + ")";
}

std::vector<Code> Field::digits(Code a) const {
    std::vector<Code> out(degree_);
    for (unsigned i = 0; i < degree_; ++i) {
        out[i] = a % base_order_;
        a /= base_order_;
    }
    return out;
}

Code Field::compose(std::span<const Code> d) const {
    Code a = 0;
    for (std::size_t i = d.size(); i-- > 0;) a = a * base_order_ + d[i];
    return a;
}

Code Field::add(Code a, Code b) const {
    if (!base_) {
        const Code s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Code out = 0, scale = 1;
    for (unsigned i = 0; i < degree_; ++i) {
        out += base_->add(a % base_order_, b % base_order_) * scale;
        a /= base_order_;
        b /= base_order_;
        scale *= base_order_;
    }
    return out;
}

Code Field::neg(Code a) const {
    if (!base_) return a == 0 ? 0 : p_ - a;
    Code out = 0, scale = 1;
    for (unsigned i = 0; i < degree_; ++i) {
        out += base_->neg(a % base_order_) * scale;
        a /= base_order_;
        scale *= base_order_;
    }
    return out;
}

Code Field::sub(Code a, Code b) const {
    return add(a, neg(b));
}

Code Field::mul(Code a, Code b) const {
    if (!base_) return (a * b) % p_;
    if (a == 0 || b == 0) return 0;
    std::array<Code, kMaxExtensionDegree> da{}, db{};
    std::array<Code, 2 * kMaxExtensionDegree> prod{};
    for (unsigned i = 0; i < degree_; ++i) {
        da[i] = a % base_order_;
        a /= base_order_;
        db[i] = b % base_order_;
        b /= base_order_;
    }
    for (unsigned i = 0; i < degree_; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < degree_; ++j) {
            if (db[j] == 0) continue;
            prod[i + j] = base_->add(prod[i + j], base_->mul(da[i], db[j]));
        }
    }
    for (unsigned i = 2 * degree_ - 2; i >= degree_; --i) {
        const Code t = prod[i];
        if (t == 0) continue;
        for (unsigned j = 0; j < degree_; ++j) {
            prod[i - degree_ + j] = base_->sub(prod[i - degree_ + j], base_->mul(t, modulus_[j]));
        }
    }
    return compose(std::span<const Code>(prod.data(), degree_));
}

Code Field::pow(Code a, std::uint64_t e) const {
    Code result = 1;
    while (e > 0) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

Code Field::inv(Code a) const {
    if (a == 0) throw std::domain_error("inverse of zero in " + name());
    return pow(a, order_ - 2);
}

Code Field::div(Code a, Code b) const {
    return mul(a, inv(b));
}

bool operator==(const Field &x, const Field &y) {
    if (&x == &y) return true;
    if (x.p_ != y.p_ || x.modulus_ != y.modulus_) return false;
    if (!x.base_ || !y.base_) return !x.base_ && !y.base_;
    return *x.base_ == *y.base_;
}

bool same_field(const FieldPtr &a, const FieldPtr &b) {
    return a == b || (a && b && *a == *b);
}

FieldElement::FieldElement(FieldPtr field, Code code) : field_(std::move(field)), code_(code) {
    if (!field_) throw ParameterError("element without a field");
    if (!field_->contains(code_)) throw ParameterError("code outside " + field_->name());
}

FieldElement FieldElement::from_coeffs(FieldPtr field, std::span<const Code> coeffs) {
    if (coeffs.size() != field->degree()) throw ParameterError("coefficient count does not match field degree");
    const std::uint64_t base_order = field->is_prime_field() ? field->order() : field->base()->order();
    for (Code c : coeffs) {
        if (c >= base_order) throw ParameterError("coefficient outside base field");
    }
    const Code code = field->compose(coeffs);
    return FieldElement(std::move(field), code);
}

void FieldElement::require_same(const FieldElement &o) const {
    if (!same_field(field_, o.field_)) {
        throw FieldMismatch("operands in " + field_->name() + " and " + o.field_->name());
    }
}

FieldElement FieldElement::operator+(const FieldElement &o) const {
    require_same(o);
    return FieldElement(field_, field_->add(code_, o.code_));
}

FieldElement FieldElement::operator-(const FieldElement &o) const {
    require_same(o);
    return FieldElement(field_, field_->sub(code_, o.code_));
}

FieldElement FieldElement::operator*(const FieldElement &o) const {
    require_same(o);
    return FieldElement(field_, field_->mul(code_, o.code_));
}

FieldElement FieldElement::operator/(const FieldElement &o) const {
    require_same(o);
    return FieldElement(field_, field_->div(code_, o.code_));
}

FieldElement FieldElement::operator-() const {
    return FieldElement(field_, field_->neg(code_));
}

FieldElement FieldElement::inv() const {
    return FieldElement(field_, field_->inv(code_));
}

FieldElement FieldElement::pow(std::uint64_t e) const {
    return FieldElement(field_, field_->pow(code_, e));
}

bool operator==(const FieldElement &a, const FieldElement &b) {
    return a.code_ == b.code_ && same_field(a.field_, b.field_);
}

FieldPtr construct_field(std::uint64_t p, unsigned e) {
    if (e == 0) throw ParameterError("extension degree must be positive");
    if (e > kMaxExtensionDegree) throw ParameterError("extension degree exceeds " + std::to_string(kMaxExtensionDegree));
    FieldPtr prime = Field::prime(p);
    if (e == 1) return prime;
    return smallest_irreducible_extension(prime, e);
}

FieldPtr construct_tower(const FieldPtr &base) {
    if (!base || base->absolute_degree() % 2 != 0) {
        throw ParameterError("tower base must be GF(q^2) (even absolute degree)");
    }
    return smallest_irreducible_extension(base, 2);
}

FieldElement embed(const FieldPtr &tower, const FieldElement &a) {
    if (!tower->base() || !same_field(tower->base(), a.field())) {
        throw FieldMismatch("cannot embed " + a.field()->name() + " into " + tower->name());
    }
    return FieldElement(tower, a.code());
}

bool in_base_subfield(const FieldElement &a) {
    const FieldPtr &base = a.field()->base();
    return base && a.code() < base->order();
}

FieldElement project(const FieldElement &a) {
    if (!a.field()->base()) throw FieldMismatch("prime field has no base to project onto");
    if (!in_base_subfield(a)) throw AlgebraError("element of " + a.field()->name() + " is not in its base subfield");
    return FieldElement(a.field()->base(), a.code());
}

FieldElement find_primitive_element(const FieldPtr &f) {
    const std::uint64_t group = f->order() - 1;
    const std::vector<std::uint64_t> primes = distinct_prime_factors(group);
    for (Code c = 1; c < f->order(); ++c) {
        bool primitive = true;
        for (std::uint64_t r : primes) {
            if (f->pow(c, group / r) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return FieldElement(f, c);
    }
    throw AlgebraError("no primitive element in " + f->name());
}

FieldElement nth_root_of_unity(const FieldPtr &f, std::uint64_t n) {
    const std::uint64_t group = f->order() - 1;
    if (n == 0 || group % n != 0) {
        throw ParameterError(std::to_string(n) + " does not divide the multiplicative order " + std::to_string(group));
    }
    return find_primitive_element(f).pow(group / n);
}

}  // namespace eaqmds
