#include "flagcodes/subspace.hpp"

#include <algorithm>
#include <sstream>

#include "flagcodes/error.hpp"
#include "flagcodes/number_theory.hpp"

namespace flagcodes {
namespace {

// Largest q^n for which covering is checked with a bitmap.
constexpr std::uint64_t kBitmapLimit = std::uint64_t{1} << 27;

void require_same_ambient(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient() || !same_field(u.field(), v.field())) {
    throw Error(Errc::AmbientMismatch, "subspaces live in different ambient spaces");
  }
}

std::optional<std::uint64_t> ambient_size(const SubspaceCode& c) {
  unsigned __int128 s = 1;
  for (std::size_t i = 0; i < c.ambient(); ++i) {
    s *= c.field()->order();
    if (s > kBitmapLimit) return std::nullopt;
  }
  return static_cast<std::uint64_t>(s);
}

// True when no nonzero vector lies in two members; nullopt when the
// ambient space is too large for the bitmap.
std::optional<bool> members_meet_trivially(const SubspaceCode& c) {
  const auto total = ambient_size(c);
  if (!total) return std::nullopt;
  std::vector<bool> seen(*total, false);
  const std::uint64_t q = c.field()->order();
  bool clash = false;
  for (const Subspace& s : c.members()) {
    detail::for_each_nonzero_vector(s, [&](std::span<const Element> v) {
      const std::uint64_t idx = detail::vector_index(v, q);
      if (seen[idx]) clash = true;
      seen[idx] = true;
    });
    if (clash) return false;
  }
  return true;
}

bool pairwise_trivial(const SubspaceCode& c) {
  const auto& m = c.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (subspace_intersection(m[i], m[j]).dim() != 0) return false;
    }
  }
  return true;
}

}  // namespace

Subspace::Subspace(const Matrix& generators) : basis_(generators.field(), 0, generators.cols()) {
  RrefResult r = rref(generators);
  basis_ = r.reduced.first_rows(r.rank);
  pivots_ = std::move(r.pivots);
  compute_hash();
}

Subspace::Subspace(Matrix canonical, std::vector<std::size_t> pivots)
    : basis_(std::move(canonical)), pivots_(std::move(pivots)) {
  compute_hash();
}

Subspace Subspace::zero(FieldPtr field, std::size_t n) { return Subspace(Matrix(std::move(field), 0, n), {}); }

Subspace Subspace::whole(FieldPtr field, std::size_t n) {
  std::vector<std::size_t> piv(n);
  for (std::size_t i = 0; i < n; ++i) piv[i] = i;
  return Subspace(Matrix::identity(std::move(field), n), std::move(piv));
}

Subspace Subspace::standard(FieldPtr field, std::size_t n, std::initializer_list<std::size_t> indices) {
  Matrix m(field, indices.size(), n);
  std::size_t r = 0;
  for (std::size_t i : indices) {
    if (i >= n) throw Error(Errc::BadDimensions, "standard basis index out of range");
    m(r++, i) = 1;
  }
  return Subspace(m);
}

void Subspace::compute_hash() noexcept {
  std::size_t h = 0xcbf29ce484222325ULL ^ basis_.rows() ^ (basis_.cols() << 16);
  for (Element e : basis_.data()) {
    h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  hash_ = h;
}

bool operator<(const Subspace& a, const Subspace& b) noexcept {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return a.basis().data() < b.basis().data();
}

bool Subspace::contains_vector(std::span<const Element> v) const {
  if (v.size() != ambient()) throw Error(Errc::AmbientMismatch, "vector length differs from ambient");
  // Reduce v against the RREF basis; it lies in the span iff it vanishes.
  const FiniteField& f = *field();
  std::vector<Element> w(v.begin(), v.end());
  for (std::size_t i = 0; i < dim(); ++i) {
    const Element c = w[pivots_[i]];
    if (c == 0) continue;
    auto row = basis_.row(i);
    for (std::size_t j = 0; j < w.size(); ++j) w[j] = f.sub(w[j], f.mul(c, row[j]));
  }
  return std::all_of(w.begin(), w.end(), [](Element e) { return e == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  require_same_ambient(*this, other);
  if (other.dim() > dim()) return false;
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains_vector(other.basis().row(i))) return false;
  }
  return true;
}

Subspace Subspace::transform(const Matrix& a) const {
  if (a.rows() != ambient() || a.cols() != ambient()) {
    throw Error(Errc::DegreeMismatch, "matrix degree differs from ambient dimension");
  }
  if (dim() == 0) return *this;
  return Subspace(basis_ * a);
}

SubspaceCode::SubspaceCode(const std::vector<Subspace>& members) {
  if (members.empty()) throw Error(Errc::EmptyCode, "a subspace code needs at least one member");
  members_.reserve(members.size());
  for (const Subspace& s : members) {
    if (!members_.empty()) {
      require_same_ambient(members_.front(), s);
      if (s.dim() != members_.front().dim()) {
        throw Error(Errc::BadDimensions, "members of a subspace code must share their dimension");
      }
    }
    if (index_.insert(s).second) members_.push_back(s);
  }
}

bool SubspaceCode::insert(const Subspace& s) {
  require_same_ambient(members_.front(), s);
  if (s.dim() != dim()) throw Error(Errc::BadDimensions, "member dimension differs from code");
  if (!index_.insert(s).second) return false;
  members_.push_back(s);
  return true;
}

bool operator==(const SubspaceCode& a, const SubspaceCode& b) {
  if (a.size() != b.size()) return false;
  for (const Subspace& s : a.members()) {
    if (!b.contains(s)) return false;
  }
  return true;
}

std::size_t subspace_distance(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v);
  if (u.dim() == 0) return v.dim();
  if (v.dim() == 0) return u.dim();
  return 2 * rank(vstack(u.basis(), v.basis())) - u.dim() - v.dim();
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v);
  return Subspace(vstack(u.basis(), v.basis()));
}

Subspace subspace_intersection(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v);
  if (u.dim() == 0 || v.dim() == 0) return Subspace::zero(u.field(), u.ambient());
  return dual(subspace_sum(dual(u), dual(v)));
}

Subspace dual(const Subspace& u) {
  if (u.dim() == 0) return Subspace::whole(u.field(), u.ambient());
  return Subspace(kernel(u.basis()));
}

SubspaceCode dual_code(const SubspaceCode& c) {
  std::vector<Subspace> out;
  out.reserve(c.size());
  for (const Subspace& s : c.members()) out.push_back(dual(s));
  return SubspaceCode(out);
}

std::size_t max_distance_bound(std::size_t n, std::size_t k) {
  if (k < 1 || k >= n) throw Error(Errc::BadDimensions, "need 1 <= k < n");
  return 2 * k <= n ? 2 * k : 2 * (n - k);
}

std::uint64_t partial_spread_size_bound(std::size_t n, std::size_t k, std::uint64_t q) {
  if (k < 1 || k >= n) throw Error(Errc::BadDimensions, "need 1 <= k < n");
  const auto qn = checked_pow(q, static_cast<unsigned>(n));
  const auto qr = checked_pow(q, static_cast<unsigned>(n % k));
  const auto qk = checked_pow(q, static_cast<unsigned>(k));
  return (qn - qr) / (qk - 1);
}

bool is_partial_spread(const SubspaceCode& c) {
  if (c.size() == 1) return true;
  if (auto fast = members_meet_trivially(c)) return *fast;
  return pairwise_trivial(c);
}

bool is_spread(const SubspaceCode& c) {
  const std::size_t n = c.ambient(), k = c.dim();
  if (k == 0 || k >= n || n % k != 0) return false;
  const std::uint64_t q = c.field()->order();
  const std::uint64_t full = (checked_pow(q, static_cast<unsigned>(n)) - 1) /
                             (checked_pow(q, static_cast<unsigned>(k)) - 1);
  return c.size() == full && is_partial_spread(c);
}

bool has_max_distance(const SubspaceCode& c) {
  if (c.size() < 2) return false;
  const std::size_t n = c.ambient(), k = c.dim();
  if (k == 0 || k >= n) return false;
  // Distance 2k means trivial intersections; distance 2(n-k) means the
  // sums fill the space, i.e. the duals meet trivially.
  if (2 * k <= n) return is_partial_spread(c);
  return is_partial_spread(dual_code(c));
}

std::size_t code_distance_pairwise(const SubspaceCode& c) {
  const auto& m = c.members();
  if (m.size() < 2) return 0;
  std::size_t best = SIZE_MAX;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) best = std::min(best, subspace_distance(m[i], m[j]));
  }
  return best;
}

std::size_t code_distance(const SubspaceCode& c) {
  if (c.size() < 2) return 0;
  if (c.dim() > 0 && c.dim() < c.ambient() && has_max_distance(c)) {
    return max_distance_bound(c.ambient(), c.dim());
  }
  return code_distance_pairwise(c);
}

GrassmannianEnumerator::GrassmannianEnumerator(FieldPtr field, std::size_t k, std::size_t n, std::uint64_t cap)
    : field_(std::move(field)), k_(k), n_(n) {
  if (k > n || n == 0) throw Error(Errc::BadDimensions, "need 0 <= k <= n and n >= 1");
  count_ = gaussian_binomial(n, k, field_->order());
  if (count_ > cap) {
    throw Error(Errc::EnumerationTooLarge,
                "Grassmannian has " + (count_ == UINT64_MAX ? std::string("too many") : std::to_string(count_)) +
                    " points, cap is " + std::to_string(cap));
  }
  pivots_.resize(k);
  for (std::size_t i = 0; i < k; ++i) pivots_[i] = i;
  reset_free();
}

void GrassmannianEnumerator::reset_free() {
  free_.clear();
  for (std::size_t i = 0; i < k_; ++i) {
    for (std::size_t c = pivots_[i] + 1; c < n_; ++c) {
      if (!std::binary_search(pivots_.begin(), pivots_.end(), c)) free_.emplace_back(i, c);
    }
  }
  values_.assign(free_.size(), 0);
}

bool GrassmannianEnumerator::advance_pivots() {
  // Next k-combination of {0..n-1} in lexicographic order.
  std::size_t i = k_;
  while (i > 0) {
    --i;
    if (pivots_[i] < n_ - k_ + i) {
      ++pivots_[i];
      for (std::size_t j = i + 1; j < k_; ++j) pivots_[j] = pivots_[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::optional<Subspace> GrassmannianEnumerator::next() {
  if (done_) return std::nullopt;
  Matrix m(field_, k_, n_);
  for (std::size_t i = 0; i < k_; ++i) m(i, pivots_[i]) = 1;
  for (std::size_t f = 0; f < free_.size(); ++f) m(free_[f].first, free_[f].second) = values_[f];
  Subspace out(m);

  const auto q = static_cast<Element>(field_->order());
  std::size_t f = 0;
  for (; f < values_.size(); ++f) {
    if (++values_[f] < q) break;
    values_[f] = 0;
  }
  if (f == values_.size()) {
    if (advance_pivots()) {
      reset_free();
    } else {
      done_ = true;
    }
  }
  return out;
}

std::vector<Subspace> enumerate_grassmannian(const FieldPtr& field, std::size_t k, std::size_t n, std::uint64_t cap) {
  GrassmannianEnumerator e(field, k, n, cap);
  std::vector<Subspace> out;
  out.reserve(e.count());
  while (auto s = e.next()) out.push_back(std::move(*s));
  return out;
}

std::string to_text(const Subspace& s) {
  std::ostringstream os;
  os << s.dim() << ' ' << s.ambient() << '\n';
  if (s.dim() > 0) os << to_text(s.basis());
  return os.str();
}

namespace detail {

std::uint64_t vector_index(std::span<const Element> v, std::uint64_t q) {
  std::uint64_t idx = 0;
  for (std::size_t i = v.size(); i-- > 0;) idx = idx * q + v[i];
  return idx;
}

void for_each_nonzero_vector(const Subspace& s, const std::function<void(std::span<const Element>)>& fn) {
  const std::size_t k = s.dim(), n = s.ambient();
  if (k == 0) return;
  const FiniteField& f = *s.field();
  const auto q = static_cast<Element>(f.order());
  std::vector<Element> coeff(k, 0);
  std::vector<Element> v(n, 0);
  while (true) {
    // Odometer step; digit i moves from old to old+1 (as integers), so the
    // vector changes by (new - old) * row_i.
    std::size_t i = 0;
    for (; i < k; ++i) {
      const Element old = coeff[i];
      const Element nxt = old + 1 < q ? old + 1 : 0;
      const Element delta = f.sub(nxt, old);
      auto row = s.basis().row(i);
      for (std::size_t j = 0; j < n; ++j) {
        if (row[j] != 0) v[j] = f.add(v[j], f.mul(delta, row[j]));
      }
      coeff[i] = nxt;
      if (nxt != 0) break;
    }
    if (i == k) return;
    fn(v);
  }
}

}  // namespace detail
}  // namespace flagcodes
