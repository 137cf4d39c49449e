#include <doctest.h>

#include <numeric>
#include <random>

#include "flagcodes/flag.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

using namespace flagcodes;

namespace {

Flag std_flag(const FieldPtr& f, std::size_t n, std::initializer_list<std::initializer_list<std::size_t>> chain) {
  std::vector<Subspace> subs;
  for (const auto& idx : chain) subs.push_back(Subspace::standard(f, n, idx));
  return Flag(std::move(subs));
}

// The three-flag type-(2,3) code on GF(2)^6 whose second projected code
// has maximum distance while the first does not.
FlagCode three_flag_code() {
  const FieldPtr f = make_field(2, 1);
  return FlagCode({std_flag(f, 6, {{0, 1}, {0, 1, 2}}), std_flag(f, 6, {{0, 2}, {0, 1, 2}}),
                   std_flag(f, 6, {{3, 4}, {3, 4, 5}})});
}

}  // namespace

TEST_CASE("type vectors") {
  const TypeVector t({1, 2, 4}, 5);
  CHECK(t.to_string() == "1,2,4");
  CHECK(t.length() == 3);
  CHECK_FALSE(t.is_full());
  CHECK(TypeVector::full(4).dims() == std::vector<std::size_t>{1, 2, 3});
  CHECK(TypeVector::full(4).is_full());
  CHECK(error_of([] { TypeVector({2, 2}, 5); }) == Errc::BadType);
  CHECK(error_of([] { TypeVector({0, 2}, 5); }) == Errc::BadType);
  CHECK(error_of([] { TypeVector({2, 5}, 5); }) == Errc::BadType);
  CHECK(error_of([] { TypeVector({}, 5); }) == Errc::BadType);
}

TEST_CASE("critical indices and the distance bound") {
  auto crit = critical_indices(TypeVector({1, 2, 3}, 4));
  CHECK(crit.a == 1u);
  CHECK(crit.b == 1u);
  crit = critical_indices(TypeVector({1, 2, 4, 5}, 6));
  CHECK(crit.a == 1u);
  CHECK(crit.b == 2u);
  crit = critical_indices(TypeVector({4, 5}, 6));
  CHECK_FALSE(crit.a);
  CHECK(crit.b == 0u);
  crit = critical_indices(TypeVector({1, 2}, 6));
  CHECK(crit.a == 1u);
  CHECK_FALSE(crit.b);
  for (std::size_t n = 2; n <= 9; ++n) {
    const TypeVector full = TypeVector::full(n);
    CHECK(flag_distance_bound(full) == oracle::flag_bound(full));
  }
  CHECK(flag_distance_bound(TypeVector({1, 2, 3, 4}, 5)) == 12);
  CHECK(flag_distance_bound(TypeVector({1, 2, 3, 4, 5}, 6)) == 18);
}

TEST_CASE("flags require strict nesting") {
  const FieldPtr f = make_field(2, 1);
  CHECK(error_of([&] { std_flag(f, 4, {{0}, {1, 2}}); }) == Errc::NotNested);
  CHECK(error_of([&] { std_flag(f, 4, {{0, 1}, {0}}); }) == Errc::BadType);
  CHECK(error_of([&] { Flag(std::vector<Subspace>{}); }) == Errc::BadType);
  const Flag fl = std_flag(f, 4, {{0}, {0, 1}, {0, 1, 2}});
  CHECK(fl.type() == TypeVector::full(4));
  CHECK(fl.length() == 3);
  CHECK(make_flag(fl.subspaces()) == fl);
}

TEST_CASE("flag distance matches the oracle and is invariant under the action") {
  std::mt19937_64 rng(53);
  for (const FieldPtr& f : {make_field(2, 1), make_field(3, 1)}) {
    const TypeVector t({1, 2, 4}, 5);
    for (int trial = 0; trial < 40; ++trial) {
      const Flag a = oracle::random_flag(f, t, rng), b = oracle::random_flag(f, t, rng);
      const std::size_t d = flag_distance(a, b);
      CHECK(d == oracle::flag_distance(a, b));
      CHECK(d == flag_distance(b, a));
      CHECK(d <= flag_distance_bound(t));
      const Matrix g = oracle::random_full_rank(f, 5, 5, rng);
      CHECK(flag_distance(a.transform(g), b.transform(g)) == d);
    }
  }
  const FieldPtr f = make_field(2, 1);
  CHECK(error_of([&] {
          flag_distance(std_flag(f, 4, {{0}, {0, 1}}), std_flag(f, 4, {{0}, {0, 1}, {0, 1, 2}}));
        }) == Errc::TypeMismatch);
}

TEST_CASE("three-flag example: one projected code reaches the bound, the other does not") {
  const FlagCode c = three_flag_code();
  CHECK(c.size() == 3);
  const SubspaceCode c1 = projected_code(c, 0), c2 = projected_code(c, 1);
  CHECK(c1.size() == 3);
  CHECK(c2.size() == 2);
  CHECK(code_distance(c1) == 2);
  CHECK(code_distance(c2) == 6);
  CHECK(has_max_distance(c2));
  CHECK_FALSE(has_max_distance(c1));
  CHECK_FALSE(is_disjoint(c));
  CHECK_FALSE(is_odfc_by_definition(c));
  CHECK_FALSE(is_odfc_by_characterization(c));
  CHECK_FALSE(is_odfc_componentwise(c));
  CHECK(error_of([&] { projected_code(c, 2); }) == Errc::IndexOutOfRange);
}

TEST_CASE("flag code construction") {
  const FieldPtr f = make_field(2, 1);
  CHECK(error_of([] { FlagCode(std::vector<Flag>{}); }) == Errc::EmptyCode);
  CHECK(error_of([&] {
          FlagCode({std_flag(f, 4, {{0}, {0, 1}}), std_flag(f, 4, {{0}, {0, 1, 2}})});
        }) == Errc::TypeMismatch);
  FlagCode c({std_flag(f, 4, {{0}, {0, 1}}), std_flag(f, 4, {{0}, {0, 1}})});
  CHECK(c.size() == 1);
  CHECK(c.insert(std_flag(f, 4, {{2}, {2, 3}})));
  CHECK_FALSE(c.insert(std_flag(f, 4, {{2}, {2, 3}})));
  CHECK(c.contains(std_flag(f, 4, {{0}, {0, 1}})));
  CHECK(flag_code_distance(c) == 6);
  CHECK(is_odfc_by_definition(c));
  CHECK(is_odfc_by_characterization(c));
  CHECK(is_odfc_componentwise(c));
  CHECK_FALSE(is_odfc_by_definition(FlagCode({std_flag(f, 4, {{0}, {0, 1}})})));
}

TEST_CASE("the three ODFC checks agree with the pairwise oracle") {
  std::mt19937_64 rng(59);
  const FieldPtr f = make_field(2, 1);
  const TypeVector t = TypeVector::full(4);
  // The order-5 subgroup has ODFC orbits of full type; the whole Singer
  // group has none since points have trivial stabilizers.
  const CyclicMatrixGroup g = subgroup_of_order(singer_group(f, 4), 5);
  std::vector<Flag> odfc_members;
  while (odfc_members.empty()) {
    const FlagOrbit orb = orbit_flag(g, oracle::random_flag(f, t, rng));
    if (oracle::is_odfc(orb.code)) odfc_members = orb.code.members();
  }
  std::vector<Flag> random_members;
  for (int i = 0; i < 30; ++i) random_members.push_back(oracle::random_flag(f, t, rng));
  int positives = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Flag> members;
    const std::size_t size = 2 + rng() % 3;
    const bool from_odfc = trial % 2 == 0;
    const auto& pool = from_odfc ? odfc_members : random_members;
    for (std::size_t i = 0; i < size; ++i) members.push_back(pool[rng() % pool.size()]);
    if (trial % 4 == 1) members.push_back(random_members[rng() % random_members.size()]);
    const FlagCode c(members);
    const bool truth = oracle::is_odfc(c);
    positives += truth;
    CHECK(is_odfc_by_definition(c) == truth);
    CHECK(is_odfc_by_characterization(c) == truth);
    CHECK(is_odfc_componentwise(c) == truth);
    if (c.size() >= 2) CHECK(flag_code_distance(c) == oracle::min_flag_distance(c));
  }
  CHECK(positives > 20);
}

TEST_CASE("flag orbits and the orbital conditions") {
  const FieldPtr f = make_field(2, 1);
  const CyclicMatrixGroup g = singer_group(f, 4);
  std::mt19937_64 rng(61);
  int odfc = 0, not_odfc = 0;
  for (std::uint64_t t : {15u, 5u, 3u}) {
    const CyclicMatrixGroup h = subgroup_of_order(g, t);
    for (int trial = 0; trial < 25; ++trial) {
      const Flag fl = oracle::random_flag(f, TypeVector::full(4), rng);
      const FlagOrbit orb = orbit_flag(h, fl);
      CHECK(orb.code.size() * orb.stabilizer_order == t);
      std::uint64_t gcd = 0;
      for (const Subspace& s : fl.subspaces()) gcd = std::gcd(gcd, stabilizer_order(h, s));
      CHECK(orb.stabilizer_order == gcd);
      CHECK(orbit_flag_distance(orb.code) == (orb.code.size() < 2 ? 0 : oracle::min_flag_distance(orb.code)));

      const OrbitalOdfcReport r = check_orbital_odfc_conditions(h, fl);
      CHECK(r.verdict == oracle::is_odfc(orb.code));
      CHECK(r.orbit_size == orb.code.size());
      CHECK(r.group_order == t);
      CHECK(r.bound == 8);
      (r.verdict ? odfc : not_odfc)++;
    }
  }
  CHECK(odfc > 0);
  CHECK(not_odfc > 0);
}

TEST_CASE("unions of flag codes") {
  const FieldPtr f = make_field(2, 1);
  const FlagCode a({std_flag(f, 4, {{0}, {0, 1}})});
  const FlagCode b({std_flag(f, 4, {{2}, {2, 3}})});
  CHECK(union_flag_codes({a, b}, true).size() == 2);
  CHECK(union_flag_codes({a, a}).size() == 1);
  CHECK(error_of([&] { union_flag_codes({a, a}, true); }) == Errc::AdditivityViolated);
  const FlagCode c({std_flag(f, 4, {{0}, {0, 1, 2}})});
  CHECK(error_of([&] { union_flag_codes({a, c}); }) == Errc::TypeMismatch);
}
