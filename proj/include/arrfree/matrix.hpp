#pragma once

#include <optional>
#include <vector>

#include "arrfree/field.hpp"

namespace arrfree {

/// Dense row-major matrix over one exact field.
class Matrix {
  public:
    Matrix(FieldPtr f, int rows, int cols)
        : field_(std::move(f)),
          rows_(rows),
          cols_(cols),
          e_(static_cast<std::size_t>(rows) * cols, FieldElement::zero(field_)) {}

    static Matrix identity(const FieldPtr& f, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }

    FieldElement& at(int r, int c) { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
    const FieldElement& at(int r, int c) const {
        return e_[static_cast<std::size_t>(r) * cols_ + c];
    }

    Matrix operator*(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;

    /// v * M for a row covector v (the group action convention).
    std::vector<FieldElement> row_times(const std::vector<FieldElement>& v) const;

    int rank() const;
    /// Basis of the right null space, rows of the reduced echelon form of the
    /// kernel (deterministic: free columns in increasing order).
    std::vector<std::vector<FieldElement>> kernel() const;
    std::optional<Matrix> inverse() const;

  private:
    // Forward elimination to reduced echelon form with deterministic pivoting
    // (first nonzero entry, left to right). Returns pivot columns. Rows over Q
    // and Q(zeta) are rescaled to primitive integer content between steps to
    // keep entries small.
    std::vector<int> rref();

    FieldPtr field_;
    int rows_, cols_;
    std::vector<FieldElement> e_;
};

}  // namespace arrfree
