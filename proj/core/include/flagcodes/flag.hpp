#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "flagcodes/singer.hpp"
#include "flagcodes/subspace.hpp"

namespace flagcodes {

/// Strictly increasing dimensions 0 < t_1 < ... < t_r < n.
class TypeVector {
 public:
  /// Throws BadType.
  TypeVector(std::vector<std::size_t> dims, std::size_t n);
  static TypeVector full(std::size_t n);

  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  std::size_t ambient() const noexcept { return n_; }
  std::size_t length() const noexcept { return dims_.size(); }
  std::size_t operator[](std::size_t i) const { return dims_.at(i); }
  bool is_full() const noexcept { return dims_.size() + 1 == n_; }
  /// e.g. "1,2,3".
  std::string to_string() const;

  friend bool operator==(const TypeVector& a, const TypeVector& b) noexcept {
    return a.n_ == b.n_ && a.dims_ == b.dims_;
  }

 private:
  std::vector<std::size_t> dims_;
  std::size_t n_;
};

/// 0-based positions; a is the last with 2 t_i <= n, b the first with
/// 2 t_i >= n.
struct CriticalIndices {
  std::optional<std::size_t> a;
  std::optional<std::size_t> b;
};

CriticalIndices critical_indices(const TypeVector& type);
/// 2 (sum of t_i over 2t_i <= n plus sum of n - t_i over 2t_i > n).
std::size_t flag_distance_bound(const TypeVector& type);

/// A strictly nested sequence of subspaces.
class Flag {
 public:
  /// Throws BadType for empty input, mixed ambients or non-increasing
  /// dimensions, NotNested when containment fails.
  explicit Flag(std::vector<Subspace> subspaces);

  const TypeVector& type() const noexcept { return type_; }
  const FieldPtr& field() const noexcept { return subspaces_.front().field(); }
  std::size_t ambient() const noexcept { return type_.ambient(); }
  std::size_t length() const noexcept { return subspaces_.size(); }
  const Subspace& operator[](std::size_t i) const { return subspaces_.at(i); }
  const std::vector<Subspace>& subspaces() const noexcept { return subspaces_; }

  Flag transform(const Matrix& a) const;

  std::size_t hash() const noexcept { return hash_; }
  friend bool operator==(const Flag& a, const Flag& b) noexcept {
    return a.hash_ == b.hash_ && a.subspaces_ == b.subspaces_;
  }

 private:
  Flag(TypeVector type, std::vector<Subspace> subspaces);
  void compute_hash() noexcept;

  TypeVector type_;
  std::vector<Subspace> subspaces_;
  std::size_t hash_ = 0;
};

struct FlagHash {
  std::size_t operator()(const Flag& f) const noexcept { return f.hash(); }
};

inline Flag make_flag(std::vector<Subspace> subspaces) { return Flag(std::move(subspaces)); }

/// A set of flags of one type, kept in insertion order.
class FlagCode {
 public:
  /// Throws EmptyCode or TypeMismatch. Duplicates are dropped.
  explicit FlagCode(const std::vector<Flag>& members);

  const TypeVector& type() const noexcept { return members_.front().type(); }
  const FieldPtr& field() const noexcept { return members_.front().field(); }
  std::size_t ambient() const noexcept { return type().ambient(); }
  std::size_t size() const noexcept { return members_.size(); }
  const std::vector<Flag>& members() const noexcept { return members_; }
  bool contains(const Flag& f) const { return index_.count(f) != 0; }
  bool insert(const Flag& f);

  friend bool operator==(const FlagCode& a, const FlagCode& b);

 private:
  std::vector<Flag> members_;
  std::unordered_set<Flag, FlagHash> index_;
};

/// Sum of subspace distances. Throws TypeMismatch.
std::size_t flag_distance(const Flag& f, const Flag& g);
/// Minimum over all pairs; 0 for a singleton.
std::size_t flag_code_distance(const FlagCode& c);

/// i-th projected code (0-based). Throws IndexOutOfRange.
SubspaceCode projected_code(const FlagCode& c, std::size_t i);
bool is_disjoint(const FlagCode& c);

/// At least two flags and every pair at flag_distance_bound, by scanning
/// all pairs.
bool is_odfc_by_definition(const FlagCode& c);
/// Projected codes at the critical indices have maximum distance and as
/// many members as the flag code.
bool is_odfc_by_characterization(const FlagCode& c);
/// Every projected code has maximum distance and |C| members. Equivalent
/// to the pairwise definition, but linear in the vector count rather
/// than quadratic in |C|.
bool is_odfc_componentwise(const FlagCode& c);

struct FlagOrbit {
  FlagCode code;
  std::uint64_t stabilizer_order;
};

/// Orbit under right multiplication, listed as F, F g, F g^2, ... The
/// stabilizer order is cross-checked against the gcd of the stabilizer
/// orders of the member subspaces.
FlagOrbit orbit_flag(const CyclicMatrixGroup& g, const Flag& f);
/// min of d_f(F, F A) over A outside Stab(F), with F the first listed
/// member of an orbit; 0 for a singleton.
std::size_t orbit_flag_distance(const FlagCode& orbit);

struct OrbitalOdfcReport {
  CriticalIndices indices;
  std::uint64_t group_order = 0;
  std::uint64_t orbit_size = 0;
  std::uint64_t flag_stabilizer = 0;
  std::optional<std::uint64_t> stabilizer_a;
  std::optional<std::uint64_t> stabilizer_b;
  /// Orbits at a and b reach the subspace distance bound.
  bool max_distance_at_critical = false;
  /// |Stab(F_a)| = |Stab(F_b)|.
  bool critical_stabilizers_equal = false;
  /// |Stab(F_a)| <= |Stab(F)|.
  bool critical_stabilizer_bounded = false;
  bool verdict = false;
  /// d_f of the orbit from the orbit distance formula.
  std::size_t orbit_distance = 0;
  std::size_t bound = 0;
};

/// Evaluates the orbital ODFC conditions and checks the verdict against
/// the orbit distance; throws Internal if they disagree.
OrbitalOdfcReport check_orbital_odfc_conditions(const CyclicMatrixGroup& g, const Flag& f);

/// Deduplicated union. With `assert_additive` the size must equal the sum
/// of the input sizes, else AdditivityViolated. Throws TypeMismatch.
FlagCode union_flag_codes(const std::vector<FlagCode>& codes, bool assert_additive = false);

}  // namespace flagcodes
