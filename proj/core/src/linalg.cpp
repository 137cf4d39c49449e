#include "flagcodes/linalg.hpp"

#include <sstream>
#include <utility>

#include "flagcodes/error.hpp"
#include "flagcodes/number_theory.hpp"

namespace flagcodes {
namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
  if (!same_field(a.field(), b.field())) {
    throw Error(Errc::FieldMismatch, "matrices over different fields");
  }
}

}  // namespace

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  if (cols_ == 0) throw Error(Errc::ShapeMismatch, "matrix needs at least one column");
}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Element> data)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
  if (cols_ == 0) throw Error(Errc::ShapeMismatch, "matrix needs at least one column");
  if (data_.size() != rows_ * cols_) throw Error(Errc::ShapeMismatch, "data size does not match shape");
  for (Element e : data_) {
    if (!field_->contains(e)) throw Error(Errc::FieldMismatch, "entry outside the field");
  }
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(FieldPtr field, std::initializer_list<std::initializer_list<Element>> rows) {
  std::vector<std::vector<Element>> v;
  for (const auto& r : rows) v.emplace_back(r);
  const std::size_t cols = v.empty() ? 0 : v.front().size();
  return from_rows(std::move(field), v, cols);
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<std::vector<Element>>& rows, std::size_t cols) {
  std::vector<Element> data;
  data.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw Error(Errc::ShapeMismatch, "ragged rows");
    data.insert(data.end(), r.begin(), r.end());
  }
  return Matrix(std::move(field), rows.size(), cols, std::move(data));
}

bool Matrix::is_zero() const noexcept {
  for (Element e : data_) {
    if (e != 0) return false;
  }
  return true;
}

Matrix Matrix::block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const {
  if (r0 > r1 || r1 > rows_ || c0 >= c1 || c1 > cols_) {
    throw Error(Errc::ShapeMismatch, "block out of range");
  }
  Matrix out(field_, r1 - r0, c1 - c0);
  for (std::size_t r = r0; r < r1; ++r) {
    for (std::size_t c = c0; c < c1; ++c) out(r - r0, c - c0) = (*this)(r, c);
  }
  return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  if (r0 + m.rows() > rows_ || c0 + m.cols() > cols_) {
    throw Error(Errc::ShapeMismatch, "block does not fit");
  }
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) (*this)(r0 + r, c0 + c) = m(r, c);
  }
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) throw Error(Errc::ShapeMismatch, "product of non-conformant matrices");
  const FiniteField& f = *a.field();
  Matrix out(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto dst = out.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Element s = a(i, k);
      if (s == 0) continue;
      auto src = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) dst[j] = f.add(dst[j], f.mul(s, src[j]));
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(Errc::ShapeMismatch, "sum shape");
  Matrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a.field()->add(a(r, c), b(r, c));
  }
  return out;
}

Matrix operator*(Element s, const Matrix& m) {
  Matrix out = m;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m.field()->mul(s, m(r, c));
  }
  return out;
}

Matrix transpose(const Matrix& m) {
  if (m.rows() == 0) throw Error(Errc::ShapeMismatch, "transpose of a zero-row matrix");
  Matrix out(m.field(), m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = m(r, c);
  }
  return out;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  require_same_field(top, bottom);
  if (top.cols() != bottom.cols()) throw Error(Errc::ShapeMismatch, "vstack column mismatch");
  std::vector<Element> data = top.data();
  data.insert(data.end(), bottom.data().begin(), bottom.data().end());
  return Matrix(top.field(), top.rows() + bottom.rows(), top.cols(), std::move(data));
}

Matrix hstack(const Matrix& left, const Matrix& right) {
  require_same_field(left, right);
  if (left.rows() != right.rows()) throw Error(Errc::ShapeMismatch, "hstack row mismatch");
  Matrix out(left.field(), left.rows(), left.cols() + right.cols());
  out.set_block(0, 0, left);
  out.set_block(0, left.cols(), right);
  return out;
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  Matrix out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

namespace detail {

std::size_t rref_in_place(const FiniteField& f, Element* data, std::size_t rows, std::size_t cols,
                          std::vector<std::size_t>* pivots) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pr = rank;
    while (pr < rows && data[pr * cols + c] == 0) ++pr;
    if (pr == rows) continue;
    Element* prow = data + pr * cols;
    if (pr != rank) {
      Element* rrow = data + rank * cols;
      for (std::size_t j = c; j < cols; ++j) std::swap(prow[j], rrow[j]);
      prow = rrow;
    }
    if (prow[c] != 1) {
      const Element s = f.inv(prow[c]);
      for (std::size_t j = c; j < cols; ++j) prow[j] = f.mul(s, prow[j]);
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      Element* row = data + r * cols;
      const Element t = row[c];
      if (t == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        if (prow[j] != 0) row[j] = f.sub(row[j], f.mul(t, prow[j]));
      }
    }
    if (pivots) pivots->push_back(c);
    ++rank;
  }
  return rank;
}

}  // namespace detail

RrefResult rref(const Matrix& m) {
  std::vector<Element> data = m.data();
  std::vector<std::size_t> pivots;
  const std::size_t r = detail::rref_in_place(*m.field(), data.data(), m.rows(), m.cols(), &pivots);
  return {Matrix(m.field(), m.rows(), m.cols(), std::move(data)), r, std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
  std::vector<Element> data = m.data();
  return detail::rref_in_place(*m.field(), data.data(), m.rows(), m.cols(), nullptr);
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw Error(Errc::ShapeMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  const RrefResult r = rref(hstack(m, Matrix::identity(m.field(), n)));
  if (r.rank < n || r.pivots[n - 1] != n - 1) throw Error(Errc::SingularMatrix, "matrix is singular");
  return r.reduced.block(0, n, n, 2 * n);
}

Matrix kernel(const Matrix& m) {
  const FiniteField& f = *m.field();
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<Element> data;
  std::size_t count = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Element> v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = f.neg(r.reduced(i, free));
    data.insert(data.end(), v.begin(), v.end());
    ++count;
  }
  Matrix basis(m.field(), count, m.cols(), std::move(data));
  if (count == 0) return basis;
  return rref(basis).reduced;
}

Matrix power(const Matrix& m, std::uint64_t n) {
  if (!m.is_square()) throw Error(Errc::ShapeMismatch, "power of a non-square matrix");
  Matrix result = Matrix::identity(m.field(), m.rows());
  Matrix base = m;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

std::uint64_t matrix_order(const Matrix& a, std::optional<std::uint64_t> order_hint) {
  if (!a.is_square()) throw Error(Errc::ShapeMismatch, "order of a non-square matrix");
  if (rank(a) < a.rows()) throw Error(Errc::SingularMatrix, "order of a singular matrix");
  const Matrix id = Matrix::identity(a.field(), a.rows());
  if (order_hint) {
    if (*order_hint == 0 || !(power(a, *order_hint) == id)) {
      throw Error(Errc::Internal, "order hint is not a multiple of the matrix order");
    }
    std::uint64_t m = *order_hint;
    for (std::uint64_t r : prime_factors(*order_hint)) {
      while (m % r == 0 && power(a, m / r) == id) m /= r;
    }
    return m;
  }
  const std::uint64_t cap = checked_pow(a.field()->order(), static_cast<unsigned>(a.rows())) - 1;
  Matrix cur = a;
  for (std::uint64_t m = 1; m <= cap; ++m) {
    if (cur == id) return m;
    cur = cur * a;
  }
  throw Error(Errc::Internal, "matrix order exceeds q^n - 1");
}

std::string to_text(const Matrix& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ' ';
      os << m(r, c);
    }
    os << '\n';
  }
  return os.str();
}

Matrix matrix_from_text(FieldPtr field, std::size_t rows, std::size_t cols, const std::string& text) {
  std::istringstream is(text);
  std::vector<Element> data;
  std::string line;
  std::size_t seen_rows = 0;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::uint64_t v;
    std::size_t count = 0;
    while (ls >> v) {
      if (!field->contains(v)) throw Error(Errc::BadDimensions, "entry outside the field");
      data.push_back(static_cast<Element>(v));
      ++count;
    }
    if (!ls.eof() || count != cols) throw Error(Errc::BadDimensions, "malformed matrix row");
    ++seen_rows;
  }
  if (seen_rows != rows) throw Error(Errc::BadDimensions, "unexpected number of matrix rows");
  return Matrix(std::move(field), rows, cols, std::move(data));
}

}  // namespace flagcodes
