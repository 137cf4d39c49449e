#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "flagcodes/flag.hpp"
#include "flagcodes/singer.hpp"
#include "flagcodes/subspace.hpp"

namespace flagcodes {

/// Nested completion of generator matrices to a flag of the given type.
/// Each anchor's row space must contain the previous one and its rank
/// must occur in the type. Dimensions up to an anchor are filled with that
/// anchor's rows in order, skipping dependent ones; dimensions past the
/// last anchor with standard basis vectors of least index.
Flag complete_flag(const TypeVector& type, const std::vector<Matrix>& anchors);

// ---------------------------------------------------------------------------
// Spread type: n = ks, flags of type (1..k, n-k..n-1).

struct SpreadContext {
  FieldPtr base;
  /// GF(q^k) built over `base`.
  FieldPtr extension;
  std::size_t k;
  std::size_t s;
  std::size_t n;
  FieldReduction reduction;
  /// Companion matrix over the extension of its canonical degree-s
  /// primitive polynomial.
  Matrix singer_companion;
  /// Its blockwise image over the base; order q^n - 1.
  CyclicMatrixGroup singer;
  /// Images of all lines of GF(q^k)^s; a k-spread.
  SubspaceCode spread;
  /// Images of all hyperplanes of GF(q^k)^s.
  SubspaceCode hyperplanes;

  std::uint64_t q() const { return base->order(); }
  /// (q^n - 1) / (q^k - 1).
  std::uint64_t spread_size() const { return spread.size(); }
};

/// Builds and checks the context. Throws BadDimensions unless k >= 1 and
/// s >= 2.
SpreadContext build_spread_context(const FieldPtr& base, std::size_t k, std::size_t s);

/// S B and the conjugate group B^-1 G B. Throws SingularMatrix.
std::pair<SubspaceCode, CyclicMatrixGroup> conjugate_spread(const SpreadContext& ctx, const Matrix& b);

TypeVector admissible_type(const SpreadContext& ctx);
/// Standard flag of admissible type: F_k is the image of <e_1> and
/// F_{n-k} the image of <e_1, ..., e_{s-1}>.
Flag canonical_admissible_flag(const SpreadContext& ctx);

/// gcd(t, q^k - 1) == gcd(t, q - 1).
bool spread_gcd_condition(const SpreadContext& ctx, std::uint64_t t);
/// Throws NotADivisor unless t | q^n - 1 and GcdConditionFailed unless the
/// gcd condition holds; the message names both gcd values.
void require_spread_gcd_condition(const SpreadContext& ctx, std::uint64_t t);
/// Divisors t of q^n - 1 meeting spread_gcd_condition, ascending.
std::vector<std::uint64_t> admissible_orders(const SpreadContext& ctx);

struct SpreadOrbitCode {
  FlagCode code;
  std::uint64_t stabilizer_order;
  bool is_odfc;
};

/// Orbit of the canonical admissible flag under the order-t subgroup.
/// Throws NotADivisor; with `require_odfc`, GcdConditionFailed when the
/// orbit cannot be an ODFC.
SpreadOrbitCode spread_type_orbit_odfc(const SpreadContext& ctx, std::uint64_t t, bool require_odfc = false);

struct SpreadUnionCode {
  FlagCode code;
  /// Powers c_j of the Singer generator applied to the canonical flag.
  std::vector<std::uint64_t> representatives;
};

/// Union of T-orbits of size (q^n - 1)/(q^k - 1). Representatives come
/// from scanning c = 0, 1, 2, ... and keeping the flags whose k- and
/// (n-k)-dimensional members are not yet covered. Throws NotADivisor or
/// GcdConditionFailed.
SpreadUnionCode spread_type_max_odfc(const SpreadContext& ctx, std::uint64_t t);

struct TableRow {
  std::uint64_t t;
  std::uint64_t orbit_size;
  std::uint64_t orbits_needed;
};

/// (t, t / gcd(t, q-1), (q^n - 1) gcd(t, q-1) / ((q^k - 1) t)); the orbit
/// size is counted on a materialized orbit and checked against the formula.
TableRow table_row(const SpreadContext& ctx, std::uint64_t t);

// ---------------------------------------------------------------------------
// Full type on GF(q)^{2k+1}.

struct FullTypeContext {
  FieldPtr base;
  std::size_t k;
  std::size_t n;
  /// Companion of the canonical primitive polynomial of degree k + 1.
  Matrix companion;
  /// Generated by diag(I_k, companion); order q^{k+1} - 1.
  CyclicMatrixGroup group;
};

/// Throws KTooSmall for k < 2.
FullTypeContext build_full_type_context(const FieldPtr& base, std::size_t k);

struct FullTypeParams {
  Matrix u1;                ///< k x k
  Matrix u2;                ///< k x (k+1)
  std::vector<Element> v1;  ///< length k
  std::vector<Element> v2;  ///< length k+1
};

/// U1 = I_k, U2 = last k rows of I_{k+1}, v1 = 0, v2 = e_1.
FullTypeParams default_full_type_params(const FullTypeContext& ctx);

/// Full flag with F_k = rowsp(U1 | U2) and F_{k+1} = rowsp of U stacked
/// on (v1 | v2). Throws ShapeMismatch, RankDeficient or NotExtending.
Flag full_type_generator_flag(const FullTypeContext& ctx, const FullTypeParams& params);

struct FullTypeOrbitCode {
  FlagCode code;
  /// U1 and V2 invertible, read off F_k and F_{k+1}.
  bool rank_condition;
  bool is_odfc;
};

/// Orbit of `f` under the context group; checks the ODFC verdict against
/// the rank condition.
FullTypeOrbitCode full_type_orbit_odfc(const FullTypeContext& ctx, const Flag& f);

/// Orbit of the generator flag with v1 = 0 plus the two flags built on
/// rowsp(U1 | 0) and rowsp(0 | U2); an ODFC of size q^{k+1} + 1.
FlagCode full_type_max_odfc(const FullTypeContext& ctx, const Matrix& u1, const Matrix& u2,
                            const std::vector<Element>& v2);

namespace detail {
/// The two extra flags F' and F'' for arbitrary v1.
std::pair<Flag, Flag> full_type_extra_flags(const FullTypeContext& ctx, const FullTypeParams& params);
/// Same union as full_type_max_odfc but with caller-chosen v1 and no
/// verification; for exercising the v1 != 0 branch.
FlagCode full_type_union_with_v1(const FullTypeContext& ctx, const FullTypeParams& params);
}  // namespace detail

}  // namespace flagcodes
