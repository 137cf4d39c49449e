#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "flagcodes/linalg.hpp"

namespace flagcodes {

/// A subspace of GF(q)^n held by its reduced row echelon basis.
/// Two subspaces are equal exactly when their canonical bases are.
class Subspace {
 public:
  /// Row space of `generators`; the rows need not be independent.
  explicit Subspace(const Matrix& generators);

  static Subspace zero(FieldPtr field, std::size_t n);
  static Subspace whole(FieldPtr field, std::size_t n);
  /// Span of the standard basis vectors with the given 0-based indices.
  static Subspace standard(FieldPtr field, std::size_t n, std::initializer_list<std::size_t> indices);

  const FieldPtr& field() const noexcept { return basis_.field(); }
  std::size_t ambient() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains_vector(std::span<const Element> v) const;
  bool contains(const Subspace& other) const;
  /// Right action U -> U * A.
  Subspace transform(const Matrix& a) const;

  std::size_t hash() const noexcept { return hash_; }
  friend bool operator==(const Subspace& a, const Subspace& b) noexcept {
    return a.hash_ == b.hash_ && a.basis_ == b.basis_;
  }
  /// Total order on (dim, basis entries); used for stable output.
  friend bool operator<(const Subspace& a, const Subspace& b) noexcept;

 private:
  Subspace(Matrix canonical, std::vector<std::size_t> pivots);
  void compute_hash() noexcept;

  Matrix basis_;
  std::vector<std::size_t> pivots_;
  std::size_t hash_ = 0;
};

struct SubspaceHash {
  std::size_t operator()(const Subspace& s) const noexcept { return s.hash(); }
};

/// A set of equal-dimension subspaces of one ambient space, kept in
/// insertion order.
class SubspaceCode {
 public:
  /// Throws EmptyCode for an empty list and AmbientMismatch or
  /// BadDimensions when members disagree. Duplicates are dropped.
  explicit SubspaceCode(const std::vector<Subspace>& members);

  const FieldPtr& field() const noexcept { return members_.front().field(); }
  std::size_t ambient() const noexcept { return members_.front().ambient(); }
  std::size_t dim() const noexcept { return members_.front().dim(); }
  std::size_t size() const noexcept { return members_.size(); }
  const std::vector<Subspace>& members() const noexcept { return members_; }
  bool contains(const Subspace& s) const { return index_.count(s) != 0; }

  /// Returns false when `s` was already present.
  bool insert(const Subspace& s);

  /// Same member set, regardless of order.
  friend bool operator==(const SubspaceCode& a, const SubspaceCode& b);

 private:
  std::vector<Subspace> members_;
  std::unordered_set<Subspace, SubspaceHash> index_;
};

/// 2 rank(U;V) - dim U - dim V. Throws AmbientMismatch.
std::size_t subspace_distance(const Subspace& u, const Subspace& v);
Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersection(const Subspace& u, const Subspace& v);
/// Orthogonal complement for the standard dot product.
Subspace dual(const Subspace& u);
SubspaceCode dual_code(const SubspaceCode& c);

/// 2k when 2k <= n, else 2(n - k). Throws BadDimensions unless 1 <= k < n.
std::size_t max_distance_bound(std::size_t n, std::size_t k);
/// (q^n - q^r) / (q^k - 1) with r = n mod k.
std::uint64_t partial_spread_size_bound(std::size_t n, std::size_t k, std::uint64_t q);

/// Whether the code reaches max_distance_bound. Singletons do not.
/// Certified by vector counting when the ambient space is small enough,
/// by pairwise comparison otherwise.
bool has_max_distance(const SubspaceCode& c);
/// Minimum pairwise distance, 0 for a singleton.
std::size_t code_distance(const SubspaceCode& c);
/// Minimum pairwise distance by comparing every pair.
std::size_t code_distance_pairwise(const SubspaceCode& c);

/// Members pairwise meet trivially. A singleton is a partial spread.
bool is_partial_spread(const SubspaceCode& c);
/// A partial spread of size (q^n - 1)/(q^k - 1).
bool is_spread(const SubspaceCode& c);

/// Streams every k-dimensional subspace of GF(q)^n once, by RREF pivot
/// pattern. Throws EnumerationTooLarge when the Gaussian binomial exceeds
/// `cap`.
class GrassmannianEnumerator {
 public:
  static constexpr std::uint64_t kDefaultCap = 1'000'000;

  GrassmannianEnumerator(FieldPtr field, std::size_t k, std::size_t n, std::uint64_t cap = kDefaultCap);

  std::uint64_t count() const noexcept { return count_; }
  std::optional<Subspace> next();

 private:
  bool advance_pivots();
  void reset_free();

  FieldPtr field_;
  std::size_t k_;
  std::size_t n_;
  std::uint64_t count_;
  std::vector<std::size_t> pivots_;
  std::vector<std::pair<std::size_t, std::size_t>> free_;
  std::vector<Element> values_;
  bool done_ = false;
};

std::vector<Subspace> enumerate_grassmannian(const FieldPtr& field, std::size_t k, std::size_t n,
                                             std::uint64_t cap = GrassmannianEnumerator::kDefaultCap);

/// `k n` header line followed by the k basis rows.
std::string to_text(const Subspace& s);

namespace detail {
/// Integer index of a vector of GF(q)^n: sum of v_i q^i.
std::uint64_t vector_index(std::span<const Element> v, std::uint64_t q);
/// Calls `fn` with every nonzero vector of the subspace.
void for_each_nonzero_vector(const Subspace& s, const std::function<void(std::span<const Element>)>& fn);
}  // namespace detail

}  // namespace flagcodes

template <>
struct std::hash<flagcodes::Subspace> {
  std::size_t operator()(const flagcodes::Subspace& s) const noexcept { return s.hash(); }
};
