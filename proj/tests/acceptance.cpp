// Acceptance suite: one PASS/FAIL line per criterion, each with a pinned
// time limit. Exit status is nonzero when any criterion fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "flagcodes/codefile.hpp"
#include "flagcodes/construct.hpp"
#include "flagcodes/number_theory.hpp"
#include "oracle.hpp"

using namespace flagcodes;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) detail << "; ";
      pass = false;
      detail << "FAILED " << what;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<void(Outcome&)> body;
};

// Codes produced by the construction criteria, rechecked by criterion 6.
std::vector<FlagCode> g_constructed;

std::string join(const std::vector<std::uint64_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

void check_table(Outcome& o, std::uint32_t p, std::uint32_t e, std::size_t k, std::size_t s,
                 const std::vector<std::uint64_t>& ts, const std::vector<std::uint64_t>& sizes,
                 const std::vector<std::uint64_t>& ms, bool keep_codes) {
  const SpreadContext ctx = build_spread_context(make_field(p, e), k, s);
  o.expect(admissible_orders(ctx) == ts, "admissible orders " + join(admissible_orders(ctx)));
  const Flag base = canonical_admissible_flag(ctx);
  std::vector<std::uint64_t> got_sizes, got_ms;
  for (std::uint64_t t : ts) {
    const TableRow row = table_row(ctx, t);
    // Count the orbit directly as well.
    const FlagOrbit orbit = orbit_flag(subgroup_of_order(ctx.singer, t), base);
    o.expect(orbit.code.size() == row.orbit_size, "materialized orbit size for t=" + std::to_string(t));
    got_sizes.push_back(orbit.code.size());
    got_ms.push_back(row.orbits_needed);
    if (keep_codes && orbit.code.size() >= 2) g_constructed.push_back(orbit.code);
  }
  o.expect(got_sizes == sizes, "orbit sizes " + join(got_sizes));
  o.expect(got_ms == ms, "orbit counts " + join(got_ms));
  o.detail << "t=" << join(ts) << " sizes=" << join(got_sizes) << " m=" << join(got_ms);
}

void criterion_1(Outcome& o) {
  check_table(o, 3, 1, 3, 2, {1, 2, 4, 7, 8, 14, 28, 56}, {1, 1, 2, 7, 4, 7, 14, 28}, {28, 28, 14, 4, 7, 4, 2, 1}, true);
}

void criterion_2(Outcome& o) {
  check_table(o, 2, 2, 3, 3, {1, 3, 19, 57, 73, 219, 1387, 4161}, {1, 1, 19, 19, 73, 73, 1387, 1387},
              {4161, 4161, 219, 219, 57, 57, 3, 3}, false);
}

void criterion_3(Outcome& o) {
  for (auto [k, size, stab] : {std::tuple{2u, 5u, 3u}, {3u, 9u, 7u}}) {
    const SpreadContext ctx = build_spread_context(make_field(2, 1), k, 2);
    o.expect(ctx.spread.size() == size, "spread size for k=" + std::to_string(k));
    o.expect(is_spread(ctx.spread), "is_spread for k=" + std::to_string(k));
    o.expect(oracle::pairwise_trivial(ctx.spread.members()), "oracle partial spread for k=" + std::to_string(k));
    for (const Subspace& m : ctx.spread.members()) {
      o.expect(stabilizer_order(ctx.singer, m) == stab, "member stabilizer for k=" + std::to_string(k));
    }
    o.detail << "k=" << k << ": |S|=" << ctx.spread.size() << " stab=" << stab << "  ";
  }
}

void criterion_4(Outcome& o) {
  const SpreadContext ctx = build_spread_context(make_field(3, 1), 3, 2);
  const SpreadUnionCode u = spread_type_max_odfc(ctx, 28);
  o.expect(u.code.size() == 28, "size " + std::to_string(u.code.size()));
  o.expect(is_odfc_by_definition(u.code), "is_odfc_by_definition");
  std::size_t pairs = 0, at_bound = 0;
  const auto& m = u.code.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      ++pairs;
      at_bound += oracle::flag_distance(m[i], m[j]) == 18;
    }
  }
  o.expect(pairs == 378 && at_bound == 378, "brute-force pairs at distance 18");
  o.detail << "size=" << u.code.size() << " pairs=" << pairs << " at d_f=18: " << at_bound;
  g_constructed.push_back(u.code);
}

void criterion_5(Outcome& o) {
  for (std::uint32_t q : {2u, 3u}) {
    const FullTypeContext ctx = build_full_type_context(make_field(q, 1), 2);
    const FullTypeParams p = default_full_type_params(ctx);
    const FullTypeOrbitCode orb = full_type_orbit_odfc(ctx, full_type_generator_flag(ctx, p));
    const FlagCode max = full_type_max_odfc(ctx, p.u1, p.u2, p.v2);
    const std::size_t bound = flag_distance_bound(TypeVector::full(5));
    o.expect(bound == 12, "bound");
    o.expect(orb.code.size() == q * q * q - 1, "orbit size for q=" + std::to_string(q));
    o.expect(max.size() == q * q * q + 1, "maximum size for q=" + std::to_string(q));
    o.expect(oracle::min_flag_distance(orb.code) == 12, "orbit distance for q=" + std::to_string(q));
    o.expect(oracle::min_flag_distance(max) == 12, "maximum-size distance for q=" + std::to_string(q));
    const std::size_t n1 = orb.code.size(), n2 = max.size();
    o.detail << "q=" << q << ": orbit " << n1 << " (" << n1 * (n1 - 1) / 2 << " pairs), max " << n2 << " ("
             << n2 * (n2 - 1) / 2 << " pairs), d_f=12  ";
    g_constructed.push_back(orb.code);
    g_constructed.push_back(max);
  }
}

void criterion_6(Outcome& o) {
  std::size_t disagreements = 0, positives = 0;
  for (const FlagCode& c : g_constructed) {
    disagreements += is_odfc_by_definition(c) != is_odfc_by_characterization(c);
  }
  const std::size_t constructed = g_constructed.size();
  o.expect(constructed > 0, "construct outputs available");

  const FieldPtr f = make_field(2, 1);
  const TypeVector t = TypeVector::full(4);
  const SpreadContext ctx = build_spread_context(f, 2, 2);
  const std::vector<Flag> odfc = spread_type_max_odfc(ctx, 5).code.members();
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t size = 2 + rng() % 4;
    std::vector<Flag> members;
    const int mode = trial % 3;
    for (std::size_t i = 0; i < size; ++i) {
      const bool from_odfc = mode == 0 || (mode == 1 && i + 1 < size);
      members.push_back(from_odfc ? odfc[rng() % odfc.size()] : oracle::random_flag(f, t, rng));
    }
    const FlagCode c(members);
    const bool def = is_odfc_by_definition(c);
    const bool chr = is_odfc_by_characterization(c);
    disagreements += def != chr;
    disagreements += def != oracle::is_odfc(c);
    positives += def;
  }
  o.expect(disagreements == 0, std::to_string(disagreements) + " disagreements");
  o.expect(positives > 0, "random codes include ODFCs");
  o.detail << constructed << " constructed codes + 500 random codes (" << positives
           << " ODFCs), disagreements=" << disagreements;
}

void criterion_7(Outcome& o) {
  const FieldPtr f = make_field(2, 1);
  const FullTypeContext ctx = build_full_type_context(f, 2);
  const std::size_t k = 2;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> combos_u, combos_v;
  std::size_t checked_u = 0, checked_v = 0, bad = 0;

  // Dimension k: every (U1 | U2) of full rank k.
  for (std::uint64_t i1 = 0; i1 < 16; ++i1) {
    const Matrix u1 = oracle::nth_matrix(f, k, k, i1);
    for (std::uint64_t i2 = 0; i2 < 64; ++i2) {
      const Matrix u2 = oracle::nth_matrix(f, k, k + 1, i2);
      const Matrix u = hstack(u1, u2);
      if (oracle::rank(u) != k) continue;
      const std::size_t r1 = oracle::rank(u1), r2 = oracle::rank(u2);
      const SubspaceOrbit orb = orbit_subspace(ctx.group, Subspace(u));
      // A partial spread here has at least two members; a fixed subspace
      // has no distance to speak of.
      const bool spread = orb.code.size() >= 2 && oracle::pairwise_trivial(orb.code.members());
      bad += spread != (r1 == k && r2 == k);
      bad += spread != (orb.code.size() >= 2 && is_partial_spread(orb.code));
      ++combos_u[{r1, r2}];
      ++checked_u;
    }
  }
  // Dimension k + 1: every (V1 | V2) of full rank k + 1.
  for (std::uint64_t i1 = 0; i1 < 64; ++i1) {
    const Matrix v1 = oracle::nth_matrix(f, k + 1, k, i1);
    for (std::uint64_t i2 = 0; i2 < 512; ++i2) {
      const Matrix v2 = oracle::nth_matrix(f, k + 1, k + 1, i2);
      const Matrix v = hstack(v1, v2);
      if (rank(v) != k + 1) continue;
      const std::size_t r1 = rank(v1), r2 = rank(v2);
      const SubspaceOrbit orb = orbit_subspace(ctx.group, Subspace(v));
      const bool max = orb.code.size() >= 2 && oracle::min_distance(orb.code.members()) == 2 * k;
      bad += max != (r1 == k && r2 == k + 1);
      bad += max != has_max_distance(orb.code);
      ++combos_v[{r1, r2}];
      ++checked_v;
    }
  }
  o.expect(bad == 0, std::to_string(bad) + " counterexamples");
  o.expect(combos_u.size() >= 4 && combos_v.size() >= 4, "rank combinations covered");
  o.detail << "U pairs=" << checked_u << " over " << combos_u.size() << " rank combos; V pairs=" << checked_v
           << " over " << combos_v.size() << " rank combos; counterexamples=" << bad;
}

void criterion_8(Outcome& o) {
  const FieldPtr f = make_field(2, 1);
  const FullTypeContext ctx = build_full_type_context(f, 2);
  std::size_t cases = 0, drops = 0, controls = 0, control_ok = 0;
  for (std::uint64_t i1 = 0; i1 < 16; ++i1) {
    const Matrix u1 = oracle::nth_matrix(f, 2, 2, i1);
    if (rank(u1) != 2) continue;
    for (std::uint64_t i2 = 0; i2 < 64; ++i2) {
      const Matrix u2 = oracle::nth_matrix(f, 2, 3, i2);
      if (rank(u2) != 2) continue;
      for (Element w = 1; w < 8; ++w) {
        std::vector<Element> v2{static_cast<Element>(w & 1), static_cast<Element>((w >> 1) & 1),
                                static_cast<Element>(w >> 2)};
        if (rank(vstack(u2, Matrix(f, 1, 3, v2))) != 3) continue;
        for (Element v = 0; v < 4; ++v) {
          FullTypeParams p{u1, u2, {static_cast<Element>(v & 1), static_cast<Element>(v >> 1)}, v2};
          const FlagCode un = detail::full_type_union_with_v1(ctx, p);
          const std::size_t d = oracle::min_distance(projected_code(un, 2).members());
          if (v == 0) {
            ++controls;
            control_ok += d == 4;
          } else {
            ++cases;
            drops += d < 4;
          }
        }
      }
    }
  }
  o.expect(cases > 0 && drops == cases, "nonzero v1 always drops below 2k");
  o.expect(control_ok == controls, "v1 = 0 keeps distance 2k");
  o.detail << "nonzero v1 cases=" << cases << " with a pair below 2k: " << drops << "; v1=0 controls at 2k: "
           << control_ok << "/" << controls;
}

void criterion_9(Outcome& o) {
  std::size_t failures = 0, checks = 0;
  // Field-reduction equivariance on GF(4)^2 -> GF(2)^4.
  const FieldPtr gf4 = make_field(2, 2);
  const FieldReduction red(gf4);
  std::vector<Subspace> subspaces{Subspace::zero(gf4, 2), Subspace::whole(gf4, 2)};
  for (const Subspace& l : enumerate_grassmannian(gf4, 1, 2)) subspaces.push_back(l);
  for (std::uint64_t ia = 0; ia < 256; ++ia) {
    const Matrix a = oracle::nth_matrix(gf4, 2, 2, ia);
    const Matrix pa = red.expand_matrix(a);
    for (std::uint64_t ib = 0; ib < 256; ++ib) {
      const Matrix b = oracle::nth_matrix(gf4, 2, 2, ib);
      failures += !(red.expand_matrix(a * b) == pa * red.expand_matrix(b));
      ++checks;
    }
    if (rank(a) < 2) continue;
    for (const Subspace& u : subspaces) {
      failures += !(red.reduce_subspace(u.transform(a)) == red.reduce_subspace(u).transform(pa));
      ++checks;
    }
  }
  // Metric axioms on G_2(2,4).
  const auto g24 = enumerate_grassmannian(make_field(2, 1), 2, 4);
  const std::size_t n = g24.size();
  std::vector<std::size_t> d(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      d[i * n + j] = subspace_distance(g24[i], g24[j]);
      failures += d[i * n + j] != oracle::distance(g24[i], g24[j]);
      ++checks;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      failures += d[i * n + j] != d[j * n + i];
      failures += (d[i * n + j] == 0) != (i == j);
      for (std::size_t k = 0; k < n; ++k) failures += d[i * n + k] > d[i * n + j] + d[j * n + k];
      checks += 2 + n;
    }
  }
  // Dual codes keep size and distance.
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 100; ++trial) {
    const FieldPtr f = make_field(trial % 2 ? 3 : 2, 1);
    const std::size_t amb = 4 + rng() % 2, k = 1 + rng() % (amb - 1), size = 2 + rng() % 4;
    std::vector<Subspace> members;
    for (std::size_t i = 0; i < size; ++i) members.emplace_back(oracle::random_full_rank(f, k, amb, rng));
    const SubspaceCode c(members);
    const SubspaceCode cd = dual_code(c);
    failures += cd.size() != c.size();
    std::vector<Subspace> duals;
    for (const Subspace& m : c.members()) duals.push_back(dual(m));
    if (c.size() >= 2) failures += oracle::min_distance(duals) != oracle::min_distance(c.members());
    if (c.size() >= 2) failures += code_distance(cd) != code_distance(c);
    checks += 3;
  }
  o.expect(failures == 0, std::to_string(failures) + " failures");
  o.detail << "checks=" << checks << " failures=" << failures;
}

void criterion_10(Outcome& o) {
  std::ifstream in(std::string(FLAGCODES_TEST_DATA) + "/three_flags.flagcode");
  std::ostringstream ss;
  ss << in.rdbuf();
  const FlagCode c = parse_flag_code(ss.str()).code;
  const SubspaceCode c1 = projected_code(c, 0), c2 = projected_code(c, 1);
  o.expect(code_distance(c1) == 2, "d_S(C1) = 2");
  o.expect(code_distance(c2) == 6, "d_S(C2) = 6");
  o.expect(c2.size() == 2, "|C2| = 2");
  o.expect(!is_disjoint(c), "not disjoint");
  o.expect(!is_odfc_by_definition(c) && !is_odfc_by_characterization(c), "not ODFC");
  o.detail << "d_S(C1)=" << code_distance(c1) << " d_S(C2)=" << code_distance(c2) << " |C2|=" << c2.size()
           << " disjoint=" << is_disjoint(c) << " odfc=" << is_odfc_by_definition(c);
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Table 1 reproduction (q=3, k=3, n=6)", 10, criterion_1},
      {2, "Table 2 reproduction (q=4, k=3, n=9)", 120, criterion_2},
      {3, "Spread verification", 1, criterion_3},
      {4, "Spread-type maximum ODFC (q=3, k=3, t=28)", 5, criterion_4},
      {5, "Full-type orbit and maximum-size codes", 1, criterion_5},
      {6, "Definition and characterization agree", 30, criterion_6},
      {7, "Rank conditions for dimensions k and k+1", 60, criterion_7},
      {8, "Nonzero v1 breaks the (k+1)-dimensional code", 10, criterion_8},
      {9, "Equivariance, metric and dual-code suites", 30, criterion_9},
      {10, "Three-flag example file", 1, criterion_10},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) o.expect(false, "time limit");
    failed += !o.pass;
    std::cout << "criterion " << std::setw(2) << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.name << "  ["
              << std::fixed << std::setprecision(3) << secs << " s / limit " << std::setprecision(0)
              << c.limit_seconds << " s]  " << o.detail.str() << '\n';
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
