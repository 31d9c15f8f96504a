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

#ifndef EAQMDS_FIELD_H
#define EAQMDS_FIELD_H

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace eaqmds {

/// Elements are stored as integer codes: sum of c_i * |base|^i over the
/// coefficients c_i (themselves base-field codes) in the polynomial basis.
/// The prime field uses the residue itself. Embedding a base element into
/// its quadratic extension therefore leaves the code unchanged.
using Code = std::uint64_t;

inline constexpr unsigned kMaxExtensionDegree = 16;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Immutable description of GF(p^e), either prime or a simple extension of a
/// base field by a monic irreducible modulus.
class Field {
   public:
    /// Prime field GF(p).
    static FieldPtr prime(std::uint64_t p);
    /// base[x]/(modulus); modulus is monic, low degree first, given in base codes.
    /// Irreducibility is checked.
    static FieldPtr extension(FieldPtr base, std::vector<Code> modulus);

    std::uint64_t characteristic() const {
        return p_;
    }
    /// Degree over the immediate base (1 for a prime field).
    unsigned degree() const {
        return degree_;
    }
    /// Degree over the prime subfield.
    unsigned absolute_degree() const {
        return absolute_degree_;
    }
    std::uint64_t order() const {
        return order_;
    }
    bool is_prime_field() const {
        return base_ == nullptr;
    }
    const FieldPtr &base() const {
        return base_;
    }
    /// Monic defining polynomial over the base, low degree first. For a prime
    /// field this is the placeholder x - 0.
    const std::vector<Code> &modulus() const {
        return modulus_;
    }
    std::string name() const;

    bool contains(Code a) const {
        return a < order_;
    }
    Code add(Code a, Code b) const;
    Code sub(Code a, Code b) const;
    Code neg(Code a) const;
    Code mul(Code a, Code b) const;
    /// Throws std::domain_error on zero.
    Code inv(Code a) const;
    Code div(Code a, Code b) const;
    Code pow(Code a, std::uint64_t e) const;

    /// Coefficients over the immediate base, length degree().
    std::vector<Code> digits(Code a) const;
    Code compose(std::span<const Code> digits) const;

    friend bool operator==(const Field &x, const Field &y);

   private:
    Field(std::uint64_t p, FieldPtr base, std::vector<Code> modulus);

    std::uint64_t p_;
    FieldPtr base_;
    std::vector<Code> modulus_;
    unsigned degree_;
    unsigned absolute_degree_;
    std::uint64_t base_order_;
    std::uint64_t order_;
};

bool same_field(const FieldPtr &a, const FieldPtr &b);

/// Value-semantic element that remembers its field. Mixing fields throws
/// FieldMismatch; use embed/project to move along a tower.
class FieldElement {
   public:
    FieldElement(FieldPtr field, Code code);

    static FieldElement zero(FieldPtr field) {
        return FieldElement(std::move(field), 0);
    }
    static FieldElement one(FieldPtr field) {
        return FieldElement(std::move(field), 1);
    }
    static FieldElement from_coeffs(FieldPtr field, std::span<const Code> coeffs);

    const FieldPtr &field() const {
        return field_;
    }
    Code code() const {
        return code_;
    }
    std::vector<Code> coeffs() const {
        return field_->digits(code_);
    }
    bool is_zero() const {
        return code_ == 0;
    }

    FieldElement operator+(const FieldElement &o) const;
    FieldElement operator-(const FieldElement &o) const;
    FieldElement operator*(const FieldElement &o) const;
    FieldElement operator/(const FieldElement &o) const;
    FieldElement operator-() const;
    FieldElement inv() const;
    FieldElement pow(std::uint64_t e) const;

    friend bool operator==(const FieldElement &a, const FieldElement &b);

   private:
    void require_same(const FieldElement &o) const;

    FieldPtr field_;
    Code code_;
};

/// GF(p^e) with the smallest monic irreducible modulus, candidates ordered by
/// their integer code (constant term is the least significant digit).
FieldPtr construct_field(std::uint64_t p, unsigned e);

/// Quadratic extension of `base` (GF(q^2) -> GF(q^4)), modulus chosen as in construct_field.
FieldPtr construct_tower(const FieldPtr &base);

FieldElement embed(const FieldPtr &tower, const FieldElement &a);
bool in_base_subfield(const FieldElement &a);
/// Inverse of embed; throws AlgebraError when the top coefficient is nonzero.
FieldElement project(const FieldElement &a);

/// Smallest element by code whose multiplicative order is |F| - 1.
FieldElement find_primitive_element(const FieldPtr &f);

/// g^((|F|-1)/n) for the canonical primitive g. Throws ParameterError unless n | |F|-1.
FieldElement nth_root_of_unity(const FieldPtr &f, std::uint64_t n);

/// x -> x^q.
inline FieldElement frobenius_q(const FieldElement &a, std::uint64_t q) {
    return a.pow(q);
}

}  // namespace eaqmds

#endif  // EAQMDS_FIELD_H
