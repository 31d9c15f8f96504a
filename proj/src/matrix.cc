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

#include "eaqmds/matrix.h"

#include <algorithm>

#include "eaqmds/errors.h"

namespace eaqmds {

MatrixGF::MatrixGF(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, 0) {
}

MatrixGF::MatrixGF(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Code> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) throw ParameterError("matrix entry count does not match shape");
    for (Code c : entries_) {
        if (!field_->contains(c)) throw ParameterError("matrix entry outside " + field_->name());
    }
}

MatrixGF MatrixGF::identity(FieldPtr field, std::size_t r) {
    MatrixGF m(std::move(field), r, r);
    for (std::size_t i = 0; i < r; ++i) m.entries_[i * r + i] = 1;
    return m;
}

void MatrixGF::set(std::size_t i, std::size_t j, Code c) {
    if (!field_->contains(c)) throw ParameterError("matrix entry outside " + field_->name());
    entries_[i * cols_ + j] = c;
}

std::vector<Code> MatrixGF::row(std::size_t i) const {
    return std::vector<Code>(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                             entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

MatrixGF MatrixGF::operator*(const MatrixGF &o) const {
    if (!same_field(field_, o.field_)) throw FieldMismatch("matrix product over different fields");
    if (cols_ != o.rows_) throw ParameterError("matrix product shape mismatch");
    MatrixGF out(field_, rows_, o.cols_);
    const Field &f = *field_;
    for (std::size_t i = 0; i < rows_; ++i) {
        Code *dst = &out.entries_[i * o.cols_];
        for (std::size_t l = 0; l < cols_; ++l) {
            const Code a = entries_[i * cols_ + l];
            if (a == 0) continue;
            const Code *src = &o.entries_[l * o.cols_];
            for (std::size_t j = 0; j < o.cols_; ++j) {
                if (src[j] != 0) dst[j] = f.add(dst[j], f.mul(a, src[j]));
            }
        }
    }
    return out;
}

MatrixGF MatrixGF::transpose() const {
    MatrixGF out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out.entries_[j * rows_ + i] = entries_[i * cols_ + j];
    }
    return out;
}

bool MatrixGF::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](Code c) { return c == 0; });
}

bool operator==(const MatrixGF &a, const MatrixGF &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && same_field(a.field_, b.field_) && a.entries_ == b.entries_;
}

}  // namespace eaqmds
