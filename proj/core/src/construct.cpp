#include "flagcodes/construct.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "flagcodes/error.hpp"
#include "flagcodes/number_theory.hpp"

namespace flagcodes {
namespace {

std::uint64_t ipow(std::uint64_t b, std::size_t e) { return checked_pow(b, static_cast<unsigned>(e)); }

Matrix row_matrix(const FieldPtr& f, const std::vector<Element>& v) {
  return Matrix(f, 1, v.size(), v);
}

// Grows `rows` with candidates that are independent of the current span
// until the span has dimension `target`.
template <typename Candidates>
void grow_to(std::vector<Element>& rows, std::size_t& dim, std::size_t n, const FieldPtr& f, std::size_t target,
             Candidates&& next_candidate) {
  while (dim < target) {
    const std::optional<std::vector<Element>> cand = next_candidate();
    if (!cand) throw Error(Errc::BadType, "not enough independent vectors to reach the requested dimension");
    std::vector<Element> trial = rows;
    trial.insert(trial.end(), cand->begin(), cand->end());
    if (rank(Matrix(f, dim + 1, n, trial)) == dim + 1) {
      rows = std::move(trial);
      ++dim;
    }
  }
}

Matrix lift_row(const FieldPtr& f, std::span<const Element> left, std::span<const Element> right) {
  std::vector<Element> v(left.begin(), left.end());
  v.insert(v.end(), right.begin(), right.end());
  return row_matrix(f, v);
}

}  // namespace

Flag complete_flag(const TypeVector& type, const std::vector<Matrix>& anchors) {
  if (anchors.empty()) throw Error(Errc::BadType, "completion needs at least one anchor");
  const FieldPtr& f = anchors.front().field();
  const std::size_t n = type.ambient();
  std::vector<std::size_t> anchor_dims;
  for (const Matrix& a : anchors) {
    if (a.cols() != n) throw Error(Errc::AmbientMismatch, "anchor width differs from ambient dimension");
    const std::size_t r = rank(a);
    if (std::find(type.dims().begin(), type.dims().end(), r) == type.dims().end()) {
      throw Error(Errc::BadType, "anchor dimension " + std::to_string(r) + " is not in the type");
    }
    if (!anchor_dims.empty() && r <= anchor_dims.back()) throw Error(Errc::NotNested, "anchor ranks must increase");
    anchor_dims.push_back(r);
  }

  std::vector<Element> rows;
  std::size_t dim = 0;
  std::vector<Subspace> chain;
  std::size_t next_anchor = 0;
  std::size_t anchor_row = 0;
  std::size_t next_standard = 0;
  for (std::size_t t : type.dims()) {
    while (next_anchor < anchors.size() && anchor_dims[next_anchor] < t) {
      ++next_anchor;
      anchor_row = 0;
    }
    if (next_anchor < anchors.size()) {
      const Matrix& a = anchors[next_anchor];
      grow_to(rows, dim, n, f, t, [&]() -> std::optional<std::vector<Element>> {
        if (anchor_row >= a.rows()) return std::nullopt;
        auto r = a.row(anchor_row++);
        return std::vector<Element>(r.begin(), r.end());
      });
      if (t == anchor_dims[next_anchor]) {
        ++next_anchor;
        anchor_row = 0;
      }
    } else {
      grow_to(rows, dim, n, f, t, [&]() -> std::optional<std::vector<Element>> {
        if (next_standard >= n) return std::nullopt;
        std::vector<Element> e(n, 0);
        e[next_standard++] = 1;
        return e;
      });
    }
    chain.emplace_back(Matrix(f, dim, n, rows));
  }
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    const Subspace anchor(anchors[i]);
    if (std::find(chain.begin(), chain.end(), anchor) == chain.end()) {
      throw Error(Errc::NotNested, "anchors are not nested");
    }
  }
  return Flag(std::move(chain));
}

SpreadContext build_spread_context(const FieldPtr& base, std::size_t k, std::size_t s) {
  if (k < 1) throw Error(Errc::BadDimensions, "k must be at least 1");
  if (s < 2) throw Error(Errc::BadDimensions, "s must be at least 2");
  const std::size_t n = k * s;
  FieldPtr ext = make_field(base->characteristic(), static_cast<std::uint32_t>(k), base);
  FieldReduction red(ext);
  const Poly modulus = find_primitive_polynomial(*ext, static_cast<std::uint32_t>(s));
  Matrix ms = companion_matrix(ext, modulus);
  const std::uint64_t q = base->order();
  CyclicMatrixGroup singer(red.expand_matrix(ms), ipow(q, n) - 1);

  std::vector<Subspace> lines, hyper;
  for (const Subspace& l : enumerate_grassmannian(ext, 1, s)) lines.push_back(red.reduce_subspace(l));
  for (const Subspace& h : enumerate_grassmannian(ext, s - 1, s)) hyper.push_back(red.reduce_subspace(h));
  SubspaceCode spread(lines), hyperplanes(hyper);

  const std::uint64_t r = (ipow(q, n) - 1) / (ipow(q, k) - 1);
  if (spread.size() != r || hyperplanes.size() != r) throw Error(Errc::Internal, "field reduction lost members");
  if (!is_spread(spread)) throw Error(Errc::Internal, "line images do not form a spread");
  if (!has_max_distance(hyperplanes)) throw Error(Errc::Internal, "hyperplane images lack maximum distance");

  // Both codes are single orbits with stabilizers of order q^k - 1.
  const Subspace s1 = red.reduce_subspace(Subspace::standard(ext, s, {0}));
  const SubspaceOrbit so = orbit_subspace(singer, s1);
  if (!(so.code == spread) || so.stabilizer_order != ipow(q, k) - 1) {
    throw Error(Errc::Internal, "spread is not the Singer orbit of its first member");
  }
  Matrix h1gen(ext, s - 1, s);
  for (std::size_t i = 0; i + 1 < s; ++i) h1gen(i, i) = 1;
  const SubspaceOrbit ho = orbit_subspace(singer, red.reduce_subspace(Subspace(h1gen)));
  if (!(ho.code == hyperplanes) || ho.stabilizer_order != ipow(q, k) - 1) {
    throw Error(Errc::Internal, "hyperplane code is not the Singer orbit of its first member");
  }

  return SpreadContext{base,  ext, k, s, n, std::move(red), std::move(ms), std::move(singer), std::move(spread),
                       std::move(hyperplanes)};
}

std::pair<SubspaceCode, CyclicMatrixGroup> conjugate_spread(const SpreadContext& ctx, const Matrix& b) {
  if (!b.is_square() || b.rows() != ctx.n) throw Error(Errc::ShapeMismatch, "conjugating matrix must be n x n");
  CyclicMatrixGroup g = conjugate(ctx.singer, b);
  std::vector<Subspace> out;
  out.reserve(ctx.spread.size());
  for (const Subspace& m : ctx.spread.members()) out.push_back(m.transform(b));
  return {SubspaceCode(out), std::move(g)};
}

TypeVector admissible_type(const SpreadContext& ctx) {
  std::vector<std::size_t> dims;
  for (std::size_t i = 1; i <= ctx.k; ++i) dims.push_back(i);
  for (std::size_t i = ctx.n - ctx.k; i < ctx.n; ++i) {
    if (i > dims.back()) dims.push_back(i);
  }
  return TypeVector(std::move(dims), ctx.n);
}

Flag canonical_admissible_flag(const SpreadContext& ctx) {
  const Subspace line = Subspace::standard(ctx.extension, ctx.s, {0});
  Matrix hgen(ctx.extension, ctx.s - 1, ctx.s);
  for (std::size_t i = 0; i + 1 < ctx.s; ++i) hgen(i, i) = 1;
  std::vector<Matrix> anchors{ctx.reduction.expand_matrix(line.basis())};
  if (ctx.n - ctx.k > ctx.k) anchors.push_back(ctx.reduction.expand_matrix(hgen));
  return complete_flag(admissible_type(ctx), anchors);
}

bool spread_gcd_condition(const SpreadContext& ctx, std::uint64_t t) {
  const std::uint64_t q = ctx.q();
  return std::gcd(t, ipow(q, ctx.k) - 1) == std::gcd(t, q - 1);
}

std::vector<std::uint64_t> admissible_orders(const SpreadContext& ctx) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t t : divisors(ctx.singer.order())) {
    if (spread_gcd_condition(ctx, t)) out.push_back(t);
  }
  return out;
}

namespace {

void require_divisor(const SpreadContext& ctx, std::uint64_t t) {
  if (t == 0 || ctx.singer.order() % t != 0) {
    throw Error(Errc::NotADivisor, "t = " + std::to_string(t) + " does not divide q^n - 1 = " +
                                       std::to_string(ctx.singer.order()));
  }
}

std::string gcd_message(const SpreadContext& ctx, std::uint64_t t) {
  const std::uint64_t q = ctx.q();
  return "t = " + std::to_string(t) + " violates gcd(t, q^k - 1) = gcd(t, q - 1): gcd(t, " +
         std::to_string(ipow(q, ctx.k) - 1) + ") = " + std::to_string(std::gcd(t, ipow(q, ctx.k) - 1)) +
         ", gcd(t, " + std::to_string(q - 1) + ") = " + std::to_string(std::gcd(t, q - 1));
}

}  // namespace

void require_spread_gcd_condition(const SpreadContext& ctx, std::uint64_t t) {
  require_divisor(ctx, t);
  if (!spread_gcd_condition(ctx, t)) throw Error(Errc::GcdConditionFailed, gcd_message(ctx, t));
}

SpreadOrbitCode spread_type_orbit_odfc(const SpreadContext& ctx, std::uint64_t t, bool require_odfc) {
  require_divisor(ctx, t);
  const std::uint64_t q = ctx.q();
  const bool predicted = spread_gcd_condition(ctx, t) && std::gcd(t, q - 1) != t;
  if (require_odfc && !predicted) {
    if (!spread_gcd_condition(ctx, t)) throw Error(Errc::GcdConditionFailed, gcd_message(ctx, t));
    throw Error(Errc::GcdConditionFailed,
                "t = " + std::to_string(t) + " divides q - 1 = " + std::to_string(q - 1) + ", the orbit is a single flag");
  }
  const CyclicMatrixGroup sub = subgroup_of_order(ctx.singer, t);
  FlagOrbit orbit = orbit_flag(sub, canonical_admissible_flag(ctx));
  if (orbit.code.size() != t / std::gcd(t, q - 1)) throw Error(Errc::Internal, "orbit size differs from t / gcd(t, q - 1)");
  const bool odfc = is_odfc_by_characterization(orbit.code);
  if (odfc != predicted) throw Error(Errc::Internal, "ODFC status differs from the gcd condition");
  return {std::move(orbit.code), orbit.stabilizer_order, odfc};
}

SpreadUnionCode spread_type_max_odfc(const SpreadContext& ctx, std::uint64_t t) {
  require_spread_gcd_condition(ctx, t);
  const std::uint64_t q = ctx.q();
  const std::uint64_t orbit_size = t / std::gcd(t, q - 1);
  const std::uint64_t needed = ctx.spread_size() / orbit_size;

  const CyclicMatrixGroup sub = subgroup_of_order(ctx.singer, t);
  const Flag seed = canonical_admissible_flag(ctx);
  const CriticalIndices idx = critical_indices(seed.type());
  const std::size_t ia = *idx.a, ib = *idx.b;

  std::unordered_set<Subspace, SubspaceHash> covered_a, covered_b;
  std::vector<FlagCode> orbits;
  std::vector<std::uint64_t> reps;
  Flag cur = seed;
  for (std::uint64_t c = 0; orbits.size() < needed; ++c) {
    if (c >= ctx.singer.order()) throw Error(Errc::Internal, "ran out of representatives");
    if (c > 0) cur = cur.transform(ctx.singer.generator());
    if (covered_a.count(cur[ia]) || covered_b.count(cur[ib])) continue;
    FlagOrbit o = orbit_flag(sub, cur);
    for (const Flag& f : o.code.members()) {
      covered_a.insert(f[ia]);
      covered_b.insert(f[ib]);
    }
    orbits.push_back(std::move(o.code));
    reps.push_back(c);
  }
  FlagCode code = union_flag_codes(orbits, true);
  if (code.size() != ctx.spread_size()) throw Error(Errc::Internal, "union does not reach the spread size");
  if (!(projected_code(code, ia) == ctx.spread)) throw Error(Errc::Internal, "union does not project onto the spread");
  if (!is_odfc_by_characterization(code)) throw Error(Errc::Internal, "union of orbits is not an ODFC");
  return {std::move(code), std::move(reps)};
}

TableRow table_row(const SpreadContext& ctx, std::uint64_t t) {
  require_spread_gcd_condition(ctx, t);
  const std::uint64_t q = ctx.q();
  const std::uint64_t g = std::gcd(t, q - 1);
  const CyclicMatrixGroup sub = subgroup_of_order(ctx.singer, t);
  const std::uint64_t counted = orbit_flag(sub, canonical_admissible_flag(ctx)).code.size();
  if (counted != t / g) throw Error(Errc::Internal, "materialized orbit size differs from t / gcd(t, q - 1)");
  const std::uint64_t m = (ctx.singer.order() / (ipow(q, ctx.k) - 1)) * g / t;
  return {t, counted, m};
}

FullTypeContext build_full_type_context(const FieldPtr& base, std::size_t k) {
  if (k < 2) throw Error(Errc::KTooSmall, "full-type construction needs k >= 2 (n = 2k + 1 >= 5)");
  const Poly modulus = find_primitive_polynomial(*base, static_cast<std::uint32_t>(k + 1));
  Matrix comp = companion_matrix(base, modulus);
  Matrix g = block_diagonal(Matrix::identity(base, k), comp);
  const std::uint64_t order = ipow(base->order(), k + 1) - 1;
  return FullTypeContext{base, k, 2 * k + 1, std::move(comp), CyclicMatrixGroup(std::move(g), order)};
}

FullTypeParams default_full_type_params(const FullTypeContext& ctx) {
  const std::size_t k = ctx.k;
  Matrix u2(ctx.base, k, k + 1);
  for (std::size_t i = 0; i < k; ++i) u2(i, i + 1) = 1;
  std::vector<Element> v2(k + 1, 0);
  v2[0] = 1;
  return {Matrix::identity(ctx.base, k), std::move(u2), std::vector<Element>(k, 0), std::move(v2)};
}

namespace {

void check_params(const FullTypeContext& ctx, const FullTypeParams& p) {
  const std::size_t k = ctx.k;
  if (p.u1.rows() != k || p.u1.cols() != k || p.u2.rows() != k || p.u2.cols() != k + 1 || p.v1.size() != k ||
      p.v2.size() != k + 1) {
    throw Error(Errc::ShapeMismatch, "expected U1 k x k, U2 k x (k+1), v1 of length k, v2 of length k+1");
  }
  if (!same_field(p.u1.field(), ctx.base) || !same_field(p.u2.field(), ctx.base)) {
    throw Error(Errc::FieldMismatch, "parameters are not over the context field");
  }
  if (rank(p.u1) != k) throw Error(Errc::RankDeficient, "rk(U1) < k");
  if (rank(p.u2) != k) throw Error(Errc::RankDeficient, "rk(U2) < k");
}

Matrix v_row(const FullTypeContext& ctx, const FullTypeParams& p) { return lift_row(ctx.base, p.v1, p.v2); }

}  // namespace

Flag full_type_generator_flag(const FullTypeContext& ctx, const FullTypeParams& params) {
  check_params(ctx, params);
  const Matrix u = hstack(params.u1, params.u2);
  const Matrix v = vstack(u, v_row(ctx, params));
  if (rank(v) != ctx.k + 1) throw Error(Errc::NotExtending, "the row (v1 | v2) lies in rowsp(U1 | U2)");
  return complete_flag(TypeVector::full(ctx.n), {u, v});
}

FullTypeOrbitCode full_type_orbit_odfc(const FullTypeContext& ctx, const Flag& f) {
  const std::size_t k = ctx.k;
  if (f.ambient() != ctx.n || !f.type().is_full()) throw Error(Errc::BadType, "expected a full flag on GF(q)^{2k+1}");
  // Column-block ranks do not depend on the chosen basis.
  const Matrix& ub = f[k - 1].basis();
  const Matrix& vb = f[k].basis();
  const bool rank_ok = rank(ub.block(0, k, 0, k)) == k && rank(vb.block(0, k + 1, k, ctx.n)) == k + 1;
  FlagOrbit orbit = orbit_flag(ctx.group, f);
  const bool odfc = is_odfc_by_characterization(orbit.code);
  if (odfc != rank_ok) throw Error(Errc::Internal, "ODFC status differs from the rank condition");
  if (odfc && orbit.code.size() != ctx.group.order()) throw Error(Errc::Internal, "ODFC orbit is not regular");
  return {std::move(orbit.code), rank_ok, odfc};
}

namespace detail {

std::pair<Flag, Flag> full_type_extra_flags(const FullTypeContext& ctx, const FullTypeParams& p) {
  check_params(ctx, p);
  const std::size_t k = ctx.k;
  const Matrix u_prime = hstack(p.u1, Matrix(ctx.base, k, k + 1));
  const Matrix u_second = hstack(Matrix(ctx.base, k, k), p.u2);
  const Matrix v = v_row(ctx, p);
  const TypeVector full = TypeVector::full(ctx.n);
  return {complete_flag(full, {u_prime, vstack(u_prime, v)}), complete_flag(full, {u_second, vstack(u_second, v)})};
}

FlagCode full_type_union_with_v1(const FullTypeContext& ctx, const FullTypeParams& params) {
  const Flag f = full_type_generator_flag(ctx, params);
  FlagCode code = orbit_flag(ctx.group, f).code;
  auto [f1, f2] = full_type_extra_flags(ctx, params);
  code.insert(f1);
  code.insert(f2);
  return code;
}

}  // namespace detail

FlagCode full_type_max_odfc(const FullTypeContext& ctx, const Matrix& u1, const Matrix& u2,
                            const std::vector<Element>& v2) {
  const FullTypeParams p{u1, u2, std::vector<Element>(ctx.k, 0), v2};
  FlagCode code = detail::full_type_union_with_v1(ctx, p);
  const std::uint64_t expected = ipow(ctx.base->order(), ctx.k + 1) + 1;
  if (code.size() != expected) throw Error(Errc::Internal, "union does not have q^{k+1} + 1 flags");
  if (!is_odfc_by_characterization(code)) throw Error(Errc::Internal, "max-size union is not an ODFC");
  return code;
}

}  // namespace flagcodes
