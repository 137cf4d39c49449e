#include <doctest.h>

#include <random>
#include <set>

#include "flagcodes/singer.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

using namespace flagcodes;

TEST_CASE("companion matrix layout and order") {
  const FieldPtr f = make_field(2, 1);
  const Matrix c = companion_matrix(f, {1, 1, 0, 1});
  CHECK(c == Matrix::from_rows(f, {{0, 1, 0}, {0, 0, 1}, {1, 1, 0}}));
  CHECK(matrix_order(c) == 7);
  const FieldPtr f3 = make_field(3, 1);
  // x^2 + x + 2 is primitive over GF(3).
  const Matrix c3 = companion_matrix(f3, {2, 1, 1});
  CHECK(c3 == Matrix::from_rows(f3, {{0, 1}, {1, 2}}));
  CHECK(matrix_order(c3) == 8);
  CHECK(error_of([&] { companion_matrix(f, {1, 1, 0}); }) == Errc::NotMonic);
}

TEST_CASE("element blocks form a ring monomorphism") {
  const FieldPtr gf4 = make_field(2, 2);
  for (const FieldPtr& ext : {gf4, make_field(3, 2), make_field(2, 2, gf4), make_field(2, 3)}) {
    const FieldReduction red(ext);
    CHECK(red.degree() == ext->degree());
    CHECK(red.element_matrix(ext->primitive()) == red.companion());
    CHECK(red.element_matrix(1) == Matrix::identity(ext->base(), ext->degree()));
    std::set<std::vector<Element>> images;
    for (Element a = 0; a < ext->order(); ++a) {
      const Matrix ma = red.element_matrix(a);
      images.insert(ma.data());
      for (Element b = 0; b < ext->order(); ++b) {
        const Matrix mb = red.element_matrix(b);
        CHECK(ma * mb == red.element_matrix(ext->mul(a, b)));
        CHECK(ma + mb == red.element_matrix(ext->add(a, b)));
      }
    }
    CHECK(images.size() == ext->order());
  }
  CHECK(error_of([] { FieldReduction(make_field(2, 1)); }) == Errc::FieldMismatch);
}

TEST_CASE("field reduction is equivariant on GF(4)^2 -> GF(2)^4") {
  const FieldPtr gf4 = make_field(2, 2);
  const FieldReduction red(gf4);
  std::vector<Subspace> subspaces{Subspace::zero(gf4, 2), Subspace::whole(gf4, 2)};
  for (const Subspace& l : enumerate_grassmannian(gf4, 1, 2)) subspaces.push_back(l);
  REQUIRE(subspaces.size() == 7);

  std::size_t invertible = 0;
  for (std::uint64_t ia = 0; ia < 256; ++ia) {
    const Matrix a = oracle::nth_matrix(gf4, 2, 2, ia);
    const Matrix pa = red.expand_matrix(a);
    for (std::uint64_t ib = 0; ib < 256; ib += 7) {
      const Matrix b = oracle::nth_matrix(gf4, 2, 2, ib);
      CHECK(red.expand_matrix(a * b) == pa * red.expand_matrix(b));
    }
    if (rank(a) < 2) continue;
    ++invertible;
    for (const Subspace& u : subspaces) {
      const Subspace image = red.reduce_subspace(u);
      CHECK(image.dim() == 2 * u.dim());
      CHECK(red.reduce_subspace(u.transform(a)) == image.transform(pa));
    }
  }
  CHECK(invertible == 180);

  // Lines reduce to a 2-spread of GF(2)^4.
  std::vector<Subspace> images;
  for (const Subspace& l : enumerate_grassmannian(gf4, 1, 2)) images.push_back(red.reduce_subspace(l));
  CHECK(images.size() == 5);
  CHECK(oracle::pairwise_trivial(images));
}

TEST_CASE("Singer groups, subgroups and conjugates") {
  const FieldPtr f = make_field(2, 1);
  const CyclicMatrixGroup g = singer_group(f, 4);
  CHECK(g.order() == 15);
  CHECK(g.is_singer());
  CHECK(g.degree() == 4);
  CHECK(g.element(15) == Matrix::identity(f, 4));
  const CyclicMatrixGroup h = subgroup_of_order(g, 5);
  CHECK(h.order() == 5);
  CHECK_FALSE(h.is_singer());
  CHECK(h.generator() == g.element(3));
  CHECK(error_of([&] { subgroup_of_order(g, 4); }) == Errc::NotADivisor);
  CHECK(error_of([&] { CyclicMatrixGroup(g.generator(), 5); }).has_value());

  std::mt19937_64 rng(41);
  const Matrix b = oracle::random_full_rank(f, 4, 4, rng);
  const CyclicMatrixGroup c = conjugate(g, b);
  CHECK(c.order() == 15);
  CHECK(c.generator() == inverse(b) * g.generator() * b);
  CHECK(error_of([&] { conjugate(g, Matrix(f, 4, 4)); }) == Errc::SingularMatrix);
}

TEST_CASE("orbits and stabilizers match a brute-force orbit walk") {
  const FieldPtr f = make_field(2, 1);
  const CyclicMatrixGroup g = singer_group(f, 4);
  std::mt19937_64 rng(43);
  for (const Subspace& u : enumerate_grassmannian(f, 2, 4)) {
    const SubspaceOrbit orb = orbit_subspace(g, u);
    std::set<std::set<std::uint64_t>> walk;
    Matrix m = Matrix::identity(f, 4);
    for (std::uint64_t i = 0; i < g.order(); ++i) {
      walk.insert(oracle::span(u.basis() * m));
      m = m * g.generator();
    }
    CHECK(orb.code.size() == walk.size());
    CHECK(orb.stabilizer_order * orb.code.size() == g.order());
    CHECK(stabilizer_order(g, u) == orb.stabilizer_order);
    CHECK(orb.code.members().front() == u);
  }
  // Points of GF(2)^3 form a single orbit with trivial stabilizer.
  const CyclicMatrixGroup g3 = singer_group(f, 3);
  const SubspaceOrbit points = orbit_subspace(g3, Subspace::standard(f, 3, {0}));
  CHECK(points.code.size() == 7);
  CHECK(points.stabilizer_order == 1);
  CHECK(error_of([&] { orbit_subspace(g3, Subspace::standard(f, 4, {0})); }) == Errc::DegreeMismatch);
}

TEST_CASE("field reduction preserves intersections and rejects foreign input") {
  const FieldPtr gf4 = make_field(2, 2);
  const FieldReduction red(gf4);
  CHECK(red.reduce_subspace(Subspace::standard(gf4, 2, {0})) ==
        Subspace(Matrix::from_rows(red.base(), {{1, 0, 0, 0}, {0, 1, 0, 0}})));
  CHECK(red.element_matrix(0).is_zero());
  for (Element a = 1; a < 4; ++a) CHECK(rank(red.element_matrix(a)) == 2);

  std::vector<Subspace> subs;
  for (std::size_t k = 1; k <= 2; ++k) {
    for (const Subspace& s : enumerate_grassmannian(gf4, k, 3)) subs.push_back(s);
  }
  for (const Subspace& u : subs) {
    for (const Subspace& v : subs) {
      CHECK(subspace_intersection(red.reduce_subspace(u), red.reduce_subspace(v)) ==
            red.reduce_subspace(subspace_intersection(u, v)));
    }
  }
  const FieldPtr gf2 = make_field(2, 1);
  CHECK(error_of([&] { red.reduce_subspace(Subspace::whole(gf2, 2)); }) == Errc::FieldMismatch);
  CHECK(error_of([&] { red.expand_matrix(Matrix::identity(gf2, 2)); }) == Errc::FieldMismatch);
  CHECK(error_of([&] { red.element_matrix(4); }) == Errc::FieldMismatch);
}
