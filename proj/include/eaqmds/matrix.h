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

#ifndef EAQMDS_MATRIX_H
#define EAQMDS_MATRIX_H

#include <cstddef>
#include <vector>

#include "eaqmds/field.h"

namespace eaqmds {

/// Dense row-major matrix over a finite field.
class MatrixGF {
   public:
    MatrixGF(FieldPtr field, std::size_t rows, std::size_t cols);
    MatrixGF(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Code> entries);
    static MatrixGF identity(FieldPtr field, std::size_t r);

    std::size_t rows() const {
        return rows_;
    }
    std::size_t cols() const {
        return cols_;
    }
    const FieldPtr &field() const {
        return field_;
    }
    Code code(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }
    void set(std::size_t i, std::size_t j, Code c);
    FieldElement at(std::size_t i, std::size_t j) const {
        return FieldElement(field_, code(i, j));
    }
    const std::vector<Code> &entries() const {
        return entries_;
    }
    std::vector<Code> row(std::size_t i) const;

    MatrixGF operator*(const MatrixGF &o) const;
    MatrixGF transpose() const;
    bool is_zero() const;

    friend bool operator==(const MatrixGF &a, const MatrixGF &b);

   private:
    FieldPtr field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Code> entries_;
};

}  // namespace eaqmds

#endif  // EAQMDS_MATRIX_H
