#include "flagcodes/flag.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "flagcodes/error.hpp"

namespace flagcodes {
namespace {

TypeVector type_of(const std::vector<Subspace>& subspaces) {
  if (subspaces.empty()) throw Error(Errc::BadType, "a flag needs at least one subspace");
  std::vector<std::size_t> dims;
  dims.reserve(subspaces.size());
  for (const Subspace& s : subspaces) {
    if (s.ambient() != subspaces.front().ambient() || !same_field(s.field(), subspaces.front().field())) {
      throw Error(Errc::BadType, "flag subspaces live in different ambient spaces");
    }
    dims.push_back(s.dim());
  }
  return TypeVector(std::move(dims), subspaces.front().ambient());
}

}  // namespace

TypeVector::TypeVector(std::vector<std::size_t> dims, std::size_t n) : dims_(std::move(dims)), n_(n) {
  if (dims_.empty()) throw Error(Errc::BadType, "type vector is empty");
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (dims_[i] == 0 || dims_[i] >= n_) {
      throw Error(Errc::BadType, "dimension " + std::to_string(dims_[i]) + " outside (0, " + std::to_string(n_) + ")");
    }
    if (i > 0 && dims_[i] <= dims_[i - 1]) throw Error(Errc::BadType, "dimensions must strictly increase");
  }
}

TypeVector TypeVector::full(std::size_t n) {
  std::vector<std::size_t> dims;
  for (std::size_t i = 1; i < n; ++i) dims.push_back(i);
  return TypeVector(std::move(dims), n);
}

std::string TypeVector::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < dims_.size(); ++i) os << (i ? "," : "") << dims_[i];
  return os.str();
}

CriticalIndices critical_indices(const TypeVector& type) {
  CriticalIndices out;
  const std::size_t n = type.ambient();
  for (std::size_t i = 0; i < type.length(); ++i) {
    if (2 * type[i] <= n) out.a = i;
    if (2 * type[i] >= n && !out.b) out.b = i;
  }
  return out;
}

std::size_t flag_distance_bound(const TypeVector& type) {
  std::size_t sum = 0;
  for (std::size_t t : type.dims()) sum += max_distance_bound(type.ambient(), t);
  return sum;
}

Flag::Flag(std::vector<Subspace> subspaces) : type_(type_of(subspaces)), subspaces_(std::move(subspaces)) {
  for (std::size_t i = 1; i < subspaces_.size(); ++i) {
    if (!subspaces_[i].contains(subspaces_[i - 1])) {
      throw Error(Errc::NotNested, "subspace " + std::to_string(i) + " is not contained in subspace " +
                                       std::to_string(i + 1));
    }
  }
  compute_hash();
}

Flag::Flag(TypeVector type, std::vector<Subspace> subspaces)
    : type_(std::move(type)), subspaces_(std::move(subspaces)) {
  compute_hash();
}

void Flag::compute_hash() noexcept {
  std::size_t h = 0x84222325cbf29ce4ULL;
  for (const Subspace& s : subspaces_) h ^= s.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  hash_ = h;
}

Flag Flag::transform(const Matrix& a) const {
  std::vector<Subspace> out;
  out.reserve(subspaces_.size());
  for (const Subspace& s : subspaces_) out.push_back(s.transform(a));
  // Invertible maps preserve dimension and nesting.
  return Flag(type_, std::move(out));
}

FlagCode::FlagCode(const std::vector<Flag>& members) {
  if (members.empty()) throw Error(Errc::EmptyCode, "a flag code needs at least one member");
  members_.reserve(members.size());
  for (const Flag& f : members) {
    if (!members_.empty() && !(f.type() == members_.front().type() && same_field(f.field(), field()))) {
      throw Error(Errc::TypeMismatch, "flag codes need flags of one type over one field");
    }
    if (index_.insert(f).second) members_.push_back(f);
  }
}

bool FlagCode::insert(const Flag& f) {
  if (!(f.type() == type()) || !same_field(f.field(), field())) {
    throw Error(Errc::TypeMismatch, "flag type differs from code type");
  }
  if (!index_.insert(f).second) return false;
  members_.push_back(f);
  return true;
}

bool operator==(const FlagCode& a, const FlagCode& b) {
  if (a.size() != b.size()) return false;
  return std::all_of(a.members().begin(), a.members().end(), [&](const Flag& f) { return b.contains(f); });
}

std::size_t flag_distance(const Flag& f, const Flag& g) {
  if (!(f.type() == g.type())) throw Error(Errc::TypeMismatch, "flags of different types");
  std::size_t d = 0;
  for (std::size_t i = 0; i < f.length(); ++i) d += subspace_distance(f[i], g[i]);
  return d;
}

std::size_t flag_code_distance(const FlagCode& c) {
  const auto& m = c.members();
  if (m.size() < 2) return 0;
  std::size_t best = SIZE_MAX;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) best = std::min(best, flag_distance(m[i], m[j]));
  }
  return best;
}

SubspaceCode projected_code(const FlagCode& c, std::size_t i) {
  if (i >= c.type().length()) {
    throw Error(Errc::IndexOutOfRange, "projection index " + std::to_string(i) + " out of range");
  }
  std::vector<Subspace> out;
  out.reserve(c.size());
  for (const Flag& f : c.members()) out.push_back(f[i]);
  return SubspaceCode(out);
}

bool is_disjoint(const FlagCode& c) {
  for (std::size_t i = 0; i < c.type().length(); ++i) {
    if (projected_code(c, i).size() != c.size()) return false;
  }
  return true;
}

bool is_odfc_by_definition(const FlagCode& c) {
  if (c.size() < 2) return false;
  const std::size_t bound = flag_distance_bound(c.type());
  const auto& m = c.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (flag_distance(m[i], m[j]) != bound) return false;
    }
  }
  return true;
}

bool is_odfc_by_characterization(const FlagCode& c) {
  if (c.size() < 2) return false;
  const CriticalIndices idx = critical_indices(c.type());
  for (const auto& i : {idx.a, idx.b}) {
    if (!i) continue;
    const SubspaceCode p = projected_code(c, *i);
    if (p.size() != c.size() || !has_max_distance(p)) return false;
  }
  return true;
}

bool is_odfc_componentwise(const FlagCode& c) {
  if (c.size() < 2) return false;
  for (std::size_t i = 0; i < c.type().length(); ++i) {
    const SubspaceCode p = projected_code(c, i);
    if (p.size() != c.size() || !has_max_distance(p)) return false;
  }
  return true;
}

FlagOrbit orbit_flag(const CyclicMatrixGroup& g, const Flag& f) {
  if (f.ambient() != g.degree()) throw Error(Errc::DegreeMismatch, "group degree differs from ambient dimension");
  std::vector<Flag> members{f};
  Flag cur = f.transform(g.generator());
  while (!(cur == f)) {
    members.push_back(cur);
    cur = cur.transform(g.generator());
  }
  const std::uint64_t stab = g.order() / members.size();
  // In a cyclic group the intersection of subgroups of orders x and y has
  // order gcd(x, y).
  std::uint64_t meet = g.order();
  for (const Subspace& s : f.subspaces()) meet = std::gcd(meet, stabilizer_order(g, s));
  if (meet != stab) {
    throw Error(Errc::Internal, "flag stabilizer order " + std::to_string(stab) +
                                    " differs from the meet of subspace stabilizers " + std::to_string(meet));
  }
  return {FlagCode(members), stab};
}

std::size_t orbit_flag_distance(const FlagCode& orbit) {
  const auto& m = orbit.members();
  if (m.size() < 2) return 0;
  std::size_t best = SIZE_MAX;
  for (std::size_t j = 1; j < m.size(); ++j) best = std::min(best, flag_distance(m.front(), m[j]));
  return best;
}

OrbitalOdfcReport check_orbital_odfc_conditions(const CyclicMatrixGroup& g, const Flag& f) {
  OrbitalOdfcReport r;
  r.indices = critical_indices(f.type());
  r.group_order = g.order();
  r.bound = flag_distance_bound(f.type());

  const FlagOrbit orbit = orbit_flag(g, f);
  r.orbit_size = orbit.code.size();
  r.flag_stabilizer = orbit.stabilizer_order;
  r.orbit_distance = orbit_flag_distance(orbit.code);

  bool max_dist = true;
  if (r.indices.a) {
    const SubspaceOrbit o = orbit_subspace(g, f[*r.indices.a]);
    r.stabilizer_a = o.stabilizer_order;
    max_dist = max_dist && has_max_distance(o.code);
  }
  if (r.indices.b) {
    if (r.indices.a == r.indices.b) {
      r.stabilizer_b = r.stabilizer_a;
    } else {
      const SubspaceOrbit o = orbit_subspace(g, f[*r.indices.b]);
      r.stabilizer_b = o.stabilizer_order;
      max_dist = max_dist && has_max_distance(o.code);
    }
  }
  r.max_distance_at_critical = max_dist;
  const std::uint64_t crit = r.stabilizer_a ? *r.stabilizer_a : *r.stabilizer_b;
  r.critical_stabilizers_equal = !(r.stabilizer_a && r.stabilizer_b) || *r.stabilizer_a == *r.stabilizer_b;
  r.critical_stabilizer_bounded = crit <= r.flag_stabilizer;
  r.verdict = r.max_distance_at_critical && r.critical_stabilizers_equal && r.critical_stabilizer_bounded;

  const bool by_distance = r.orbit_size >= 2 && r.orbit_distance == r.bound;
  if (by_distance != r.verdict) {
    throw Error(Errc::Internal, "orbital conditions disagree with the orbit distance");
  }
  return r;
}

FlagCode union_flag_codes(const std::vector<FlagCode>& codes, bool assert_additive) {
  if (codes.empty()) throw Error(Errc::EmptyCode, "union of no flag codes");
  FlagCode out = codes.front();
  std::size_t total = codes.front().size();
  for (std::size_t i = 1; i < codes.size(); ++i) {
    if (!(codes[i].type() == out.type())) throw Error(Errc::TypeMismatch, "union of flag codes of different types");
    for (const Flag& f : codes[i].members()) out.insert(f);
    total += codes[i].size();
  }
  if (assert_additive && out.size() != total) {
    throw Error(Errc::AdditivityViolated, "union has " + std::to_string(out.size()) + " flags, expected " +
                                              std::to_string(total));
  }
  return out;
}

}  // namespace flagcodes
