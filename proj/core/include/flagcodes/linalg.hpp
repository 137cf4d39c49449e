#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "flagcodes/field.hpp"

namespace flagcodes {

/// Dense row-major matrix over a finite field.
///
/// Zero-row matrices are permitted: they are the bases of trivial
/// subspaces and the kernels of injective maps.
class Matrix {
 public:
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Element> data);

  static Matrix identity(FieldPtr field, std::size_t n);
  static Matrix from_rows(FieldPtr field, std::initializer_list<std::initializer_list<Element>> rows);
  static Matrix from_rows(FieldPtr field, const std::vector<std::vector<Element>>& rows, std::size_t cols);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_zero() const noexcept;

  Element operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  Element& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  std::span<const Element> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<Element> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  const std::vector<Element>& data() const noexcept { return data_; }

  /// Rows [r0, r1) and columns [c0, c1).
  Matrix block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);
  Matrix first_rows(std::size_t count) const { return block(0, count, 0, cols_); }

  friend bool operator==(const Matrix& a, const Matrix& b) noexcept {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_ &&
           same_field(a.field_, b.field_);
  }

 private:
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
/// Scalar multiple.
Matrix operator*(Element s, const Matrix& m);

Matrix transpose(const Matrix& m);
/// [top; bottom]
Matrix vstack(const Matrix& top, const Matrix& bottom);
/// [left | right]
Matrix hstack(const Matrix& left, const Matrix& right);
Matrix block_diagonal(const Matrix& a, const Matrix& b);

struct RrefResult {
  Matrix reduced;
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

/// Unique reduced row echelon form, keeping all rows (zero rows at bottom).
/// Pivot selection takes the first nonzero entry in the column.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Throws ShapeMismatch for non-square and SingularMatrix for singular input.
Matrix inverse(const Matrix& m);
/// Basis rows (in RREF) of { x : m * x^T = 0 }; zero rows when trivial.
Matrix kernel(const Matrix& m);
Matrix power(const Matrix& m, std::uint64_t n);

/// Least m >= 1 with A^m = I. With `order_hint` (any multiple of the order)
/// the order is found by stripping prime factors off the hint; otherwise by
/// plain iteration capped at q^n - 1.
std::uint64_t matrix_order(const Matrix& a, std::optional<std::uint64_t> order_hint = std::nullopt);

/// Rows as whitespace-separated element integers, one row per line.
std::string to_text(const Matrix& m);
/// Inverse of to_text for a known shape; throws BadDimensions on malformed input.
Matrix matrix_from_text(FieldPtr field, std::size_t rows, std::size_t cols, const std::string& text);

namespace detail {
/// In-place RREF over `rows` x `cols` row-major storage; returns the rank
/// and appends pivot columns.
std::size_t rref_in_place(const FiniteField& f, Element* data, std::size_t rows, std::size_t cols,
                          std::vector<std::size_t>* pivots);
}  // namespace detail

}  // namespace flagcodes
