#pragma once

#include <cstdint>
#include <vector>

#include "flagcodes/linalg.hpp"
#include "flagcodes/subspace.hpp"

namespace flagcodes {

/// k x k matrix with ones on the superdiagonal and last row
/// (-p_0, ..., -p_{k-1}) for the monic p = p_0 + ... + x^k.
/// Throws NotMonic.
Matrix companion_matrix(const FieldPtr& field, const Poly& monic);

/// Maps between an extension GF(q^k) over GF(q) and k x k blocks over
/// GF(q), driven by the companion matrix of the extension modulus.
class FieldReduction {
 public:
  /// `extension` must have a base field. Throws FieldMismatch otherwise.
  explicit FieldReduction(FieldPtr extension);

  const FieldPtr& extension() const noexcept { return ext_; }
  const FieldPtr& base() const noexcept { return ext_->base(); }
  std::size_t degree() const noexcept { return ext_->degree(); }
  /// Companion matrix of the extension modulus.
  const Matrix& companion() const noexcept { return powers_[1 % powers_.size()]; }

  /// sum a_i C^i for a = sum a_i w^i; a ring monomorphism into k x k matrices.
  Matrix element_matrix(Element a) const;
  /// Entrywise replacement of an s x s (or m x s) matrix by k x k blocks.
  Matrix expand_matrix(const Matrix& a) const;
  /// Image of an m-dimensional subspace of GF(q^k)^s, of dimension km in GF(q)^{ks}.
  Subspace reduce_subspace(const Subspace& u) const;

 private:
  FieldPtr ext_;
  std::vector<Matrix> powers_;
};

/// A cyclic subgroup of GL(n, q) given by a generator and its order.
class CyclicMatrixGroup {
 public:
  /// Verifies that `order` is the exact multiplicative order of `generator`.
  CyclicMatrixGroup(Matrix generator, std::uint64_t order);

  const FieldPtr& field() const noexcept { return gen_.field(); }
  std::size_t degree() const noexcept { return gen_.rows(); }
  const Matrix& generator() const noexcept { return gen_; }
  std::uint64_t order() const noexcept { return order_; }
  /// Order q^n - 1.
  bool is_singer() const;
  /// generator^e.
  Matrix element(std::uint64_t e) const { return power(gen_, e % order_); }

 private:
  Matrix gen_;
  std::uint64_t order_;
};

/// Group generated by the companion matrix of the canonical primitive
/// degree-n polynomial over `field`.
CyclicMatrixGroup singer_group(const FieldPtr& field, std::size_t n);
/// Unique subgroup of order t. Throws NotADivisor.
CyclicMatrixGroup subgroup_of_order(const CyclicMatrixGroup& g, std::uint64_t t);
/// B^-1 G B. Throws SingularMatrix.
CyclicMatrixGroup conjugate(const CyclicMatrixGroup& g, const Matrix& b);

struct SubspaceOrbit {
  SubspaceCode code;
  std::uint64_t stabilizer_order;
};

/// Orbit of `u` under right multiplication, listed as u, u g, u g^2, ...
/// Throws DegreeMismatch.
SubspaceOrbit orbit_subspace(const CyclicMatrixGroup& g, const Subspace& u);
/// |Stab(u)| from the least divisor e of |G| with u g^e = u, without
/// listing the orbit.
std::uint64_t stabilizer_order(const CyclicMatrixGroup& g, const Subspace& u);

}  // namespace flagcodes
