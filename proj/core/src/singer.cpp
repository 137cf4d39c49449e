#include "flagcodes/singer.hpp"

#include "flagcodes/error.hpp"
#include "flagcodes/number_theory.hpp"

namespace flagcodes {

Matrix companion_matrix(const FieldPtr& field, const Poly& monic) {
  if (monic.size() < 2 || monic.back() != 1) {
    throw Error(Errc::NotMonic, "companion matrix needs a monic polynomial of degree >= 1");
  }
  const std::size_t k = monic.size() - 1;
  Matrix m(field, k, k);
  for (std::size_t i = 0; i + 1 < k; ++i) m(i, i + 1) = 1;
  for (std::size_t j = 0; j < k; ++j) m(k - 1, j) = field->neg(monic[j]);
  return m;
}

FieldReduction::FieldReduction(FieldPtr extension) : ext_(std::move(extension)) {
  if (!ext_->base()) throw Error(Errc::FieldMismatch, "field reduction needs an extension field");
  const Matrix c = companion_matrix(ext_->base(), ext_->modulus());
  const std::size_t k = ext_->degree();
  powers_.reserve(k);
  powers_.push_back(Matrix::identity(ext_->base(), k));
  for (std::size_t i = 1; i < k; ++i) powers_.push_back(powers_.back() * c);
  if (k == 1) powers_.push_back(c);
}

Matrix FieldReduction::element_matrix(Element a) const {
  if (!ext_->contains(a)) throw Error(Errc::FieldMismatch, "element outside the extension field");
  const std::size_t k = degree();
  if (k == 1) return Matrix(base(), 1, 1, {a});
  const FiniteField& f = *base();
  Matrix out(base(), k, k);
  const std::vector<Element> coeffs = ext_->coefficients(a);
  for (std::size_t i = 0; i < k; ++i) {
    const Element c = coeffs[i];
    if (c == 0) continue;
    const Matrix& p = powers_[i];
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t col = 0; col < k; ++col) out(r, col) = f.add(out(r, col), f.mul(c, p(r, col)));
    }
  }
  return out;
}

Matrix FieldReduction::expand_matrix(const Matrix& a) const {
  if (!same_field(a.field(), ext_)) throw Error(Errc::FieldMismatch, "matrix is not over the extension field");
  const std::size_t k = degree();
  Matrix out(base(), a.rows() * k, a.cols() * k);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) != 0) out.set_block(i * k, j * k, element_matrix(a(i, j)));
    }
  }
  return out;
}

Subspace FieldReduction::reduce_subspace(const Subspace& u) const {
  if (!same_field(u.field(), ext_)) throw Error(Errc::FieldMismatch, "subspace is not over the extension field");
  if (u.dim() == 0) return Subspace::zero(base(), u.ambient() * degree());
  return Subspace(expand_matrix(u.basis()));
}

CyclicMatrixGroup::CyclicMatrixGroup(Matrix generator, std::uint64_t order)
    : gen_(std::move(generator)), order_(order) {
  if (!gen_.is_square()) throw Error(Errc::ShapeMismatch, "group generator must be square");
  if (order_ == 0 || matrix_order(gen_, order_) != order_) {
    throw Error(Errc::Internal, "stated order is not the generator order");
  }
}

bool CyclicMatrixGroup::is_singer() const {
  return order_ == checked_pow(field()->order(), static_cast<unsigned>(degree())) - 1;
}

CyclicMatrixGroup singer_group(const FieldPtr& field, std::size_t n) {
  if (n == 0) throw Error(Errc::BadDimensions, "degree must be positive");
  const Poly modulus = find_primitive_polynomial(*field, static_cast<std::uint32_t>(n));
  const std::uint64_t order = checked_pow(field->order(), static_cast<unsigned>(n)) - 1;
  return CyclicMatrixGroup(companion_matrix(field, modulus), order);
}

CyclicMatrixGroup subgroup_of_order(const CyclicMatrixGroup& g, std::uint64_t t) {
  if (t == 0 || g.order() % t != 0) {
    throw Error(Errc::NotADivisor, std::to_string(t) + " does not divide the group order " + std::to_string(g.order()));
  }
  return CyclicMatrixGroup(g.element(g.order() / t), t);
}

CyclicMatrixGroup conjugate(const CyclicMatrixGroup& g, const Matrix& b) {
  const Matrix binv = inverse(b);
  return CyclicMatrixGroup(binv * g.generator() * b, g.order());
}

SubspaceOrbit orbit_subspace(const CyclicMatrixGroup& g, const Subspace& u) {
  if (u.ambient() != g.degree()) throw Error(Errc::DegreeMismatch, "group degree differs from ambient dimension");
  std::vector<Subspace> members{u};
  Subspace cur = u.transform(g.generator());
  while (!(cur == u)) {
    members.push_back(cur);
    cur = cur.transform(g.generator());
  }
  const std::uint64_t size = members.size();
  return {SubspaceCode(members), g.order() / size};
}

std::uint64_t stabilizer_order(const CyclicMatrixGroup& g, const Subspace& u) {
  if (u.ambient() != g.degree()) throw Error(Errc::DegreeMismatch, "group degree differs from ambient dimension");
  for (std::uint64_t e : divisors(g.order())) {
    if (u.transform(g.element(e)) == u) return g.order() / e;
  }
  throw Error(Errc::Internal, "generator order does not fix the subspace");
}

}  // namespace flagcodes
