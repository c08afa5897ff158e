#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "gkz/conegeom.hpp"

using namespace gkz;

namespace {

const IntMatrix kA0134{{1, 1, 1, 1}, {0, 1, 3, 4}};

std::vector<std::vector<std::size_t>> face_sets(const FaceLattice& fl) {
  std::vector<std::vector<std::size_t>> out;
  for (const Face& f : fl.faces) out.push_back(f.columns);
  return out;
}

// All points A u with total multiplicity |u| <= k, by breadth-first expansion.
std::set<IntVector> reachable(const PointedMatrix& a, int k) {
  std::set<IntVector> layer{IntVector(a.d(), Integer(0))};
  std::set<IntVector> all = layer;
  for (int step = 0; step < k; ++step) {
    std::set<IntVector> next;
    for (const IntVector& p : layer)
      for (std::size_t j = 0; j < a.n(); ++j) {
        IntVector q = p;
        for (std::size_t i = 0; i < a.d(); ++i) q[i] += a.matrix()(i, j);
        next.insert(q);
      }
    all.insert(next.begin(), next.end());
    layer = std::move(next);
  }
  return all;
}

PointedMatrix random_pointed(std::mt19937_64& rng, std::size_t d, std::size_t n, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  for (;;) {
    IntMatrix m(d, n);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = dist(rng);
    try {
      return make_pointed_matrix(m);
    } catch (const std::runtime_error&) {
    }
  }
}

}  // namespace

TEST_CASE("pointedness certificates") {
  PointedMatrix a = make_pointed_matrix(kA0134);
  CHECK(a.certificate() == IntVector{1, 0});
  CHECK(a.verify_certificate());

  PointedMatrix id = make_pointed_matrix(IntMatrix{{1, 0}, {0, 1}});
  CHECK(id.certificate() == IntVector{1, 1});

  try {
    make_pointed_matrix(IntMatrix{{1, -1}});
    FAIL("expected NotPointed");
  } catch (const NotPointed& e) {
    REQUIRE(e.counter_certificate.has_value());
    CHECK(*e.counter_certificate == IntVector{1, 1});
  }
  CHECK_THROWS_AS(make_pointed_matrix(IntMatrix{{1, 2}, {2, 4}}), NotFullRank);
  CHECK_THROWS_AS(make_pointed_matrix(IntMatrix{{1, 0, -1}, {0, 1, 0}}), NotPointed);
}

TEST_CASE("face lattices") {
  FaceLattice simplicial = face_lattice(make_pointed_matrix(IntMatrix{{1, 0}, {0, 1}}));
  CHECK(face_sets(simplicial) == std::vector<std::vector<std::size_t>>{{}, {0}, {1}, {0, 1}});

  PointedMatrix a = make_pointed_matrix(kA0134);
  FaceLattice fl = face_lattice(a);
  CHECK(face_sets(fl) == std::vector<std::vector<std::size_t>>{{}, {0}, {3}, {0, 1, 2, 3}});
  CHECK(fl.faces[0].dimension == 0);
  CHECK(fl.faces[1].dimension == 1);
  CHECK(fl.faces[3].dimension == 2);
  for (const Face& f : fl.faces) CHECK(verify_face(a, f));
  CHECK(fl.faces[fl.empty_face()].functional == a.certificate());

  FaceLattice line = face_lattice(make_pointed_matrix(IntMatrix{{2, 3}}));
  CHECK(face_sets(line) == std::vector<std::vector<std::size_t>>{{}, {0, 1}});
}

TEST_CASE("normalized volume") {
  CHECK(normalized_volume(make_pointed_matrix(IntMatrix{{1, 0}, {0, 1}})) == 1);
  CHECK(normalized_volume(make_pointed_matrix(kA0134)) == 4);
  CHECK(normalized_volume(make_pointed_matrix(IntMatrix{{1, 1, 1}, {0, 1, 2}})) == 2);
  CHECK(normalized_volume(make_pointed_matrix(IntMatrix{{2, 3}})) == 3);
  // unit cube corner plus the far vertex: conv(0, e1, e2, e3, (1,1,1))
  CHECK(normalized_volume(make_pointed_matrix(IntMatrix{{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}})) == 3);
}

TEST_CASE("semigroup membership against breadth-first enumeration") {
  PointedMatrix a = make_pointed_matrix(kA0134);
  Membership m = semigroup_member(a, IntVector{2, 2});
  REQUIRE(m.member);
  CHECK(a.matrix() * m.witness == IntVector{2, 2});
  CHECK_FALSE(semigroup_member(a, IntVector{1, 2}).member);
  Membership zero = semigroup_member(a, IntVector{0, 0});
  CHECK(zero.member);
  CHECK(zero.witness == IntVector{0, 0, 0, 0});

  std::set<IntVector> pts = reachable(a, 4);
  for (long x = 0; x <= 4; ++x)
    for (long y = -2; y <= 16; ++y) {
      IntVector v{x, y};
      CHECK(semigroup_member(a, v).member == (pts.count(v) > 0));
    }
}

TEST_CASE("localized membership") {
  PointedMatrix a = make_pointed_matrix(kA0134);
  FaceLattice fl = face_lattice(a);
  const Face& first_ray = fl.faces[1];
  REQUIRE(first_ray.columns == std::vector<std::size_t>{0});
  CHECK_FALSE(localized_member(a, first_ray, IntVector{0, -1}));
  CHECK(localized_member(a, first_ray, IntVector{-5, 2}));
  CHECK(localized_member(a, fl.faces[fl.full_face()], IntVector{-7, 3}));
  for (long x = -1; x <= 3; ++x)
    for (long y = -1; y <= 9; ++y)
      CHECK(localized_member(a, fl.faces[0], IntVector{x, y}) == semigroup_member(a, IntVector{x, y}).member);

  // Z F not saturated: columns (2,0) and (0,1); the ray through (2,0) inverts only even shifts
  PointedMatrix b = make_pointed_matrix(IntMatrix{{2, 0}, {0, 1}});
  FaceLattice fb = face_lattice(b);
  std::size_t ray = fb.find({0});
  REQUIRE(ray < fb.faces.size());
  CHECK(localized_member(b, fb.faces[ray], IntVector{-4, 1}));
  CHECK_FALSE(localized_member(b, fb.faces[ray], IntVector{-3, 1}));
}

TEST_CASE("random corpus: faces, volume orders, monotonicity, no units") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t d = 1 + rng() % 3;
    std::size_t n = d + rng() % 3;
    PointedMatrix a = random_pointed(rng, d, n, 3);
    FaceLattice fl = face_lattice(a);
    REQUIRE(fl.faces.front().columns.empty());
    REQUIRE(fl.faces.back().columns.size() == n);
    for (const Face& f : fl.faces) REQUIRE(verify_face(a, f));
    for (std::size_t i = 0; i < fl.faces.size(); ++i)
      for (std::size_t j = 0; j < fl.faces.size(); ++j) {
        std::vector<std::size_t> inter;
        std::set_intersection(fl.faces[i].columns.begin(), fl.faces[i].columns.end(), fl.faces[j].columns.begin(),
                              fl.faces[j].columns.end(), std::back_inserter(inter));
        REQUIRE(fl.find(inter) < fl.faces.size());
      }
    REQUIRE(normalized_volume(a, Placement::kLexicographic) == normalized_volume(a, Placement::kReverse));
    REQUIRE(normalized_volume(a) > 0);

    std::uniform_int_distribution<long> coord(-4, 4);
    for (int s = 0; s < 15; ++s) {
      IntVector v(d);
      for (auto& x : v) x = coord(rng);
      bool member = semigroup_member(a, v).member;
      if (member)
        for (const Face& f : fl.faces) REQUIRE(localized_member(a, f, v));
      IntVector neg = v;
      for (auto& x : neg) x = -x;
      if (member && semigroup_member(a, neg).member) REQUIRE(v == IntVector(d, Integer(0)));
    }
  }
}

TEST_CASE("cached localized membership agrees with direct enumeration") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t d = 1 + rng() % 3;
    std::size_t n = d + rng() % 3;
    PointedMatrix a = random_pointed(rng, d, n, 4);
    FaceLattice fl = face_lattice(a);
    std::uniform_int_distribution<long> coord(-6, 6);
    for (const Face& f : fl.faces) {
      LocalizedMembership cached(a, f);
      for (int s = 0; s < 30; ++s) {
        IntVector v(d);
        for (auto& x : v) x = coord(rng);
        REQUIRE(cached.contains(to_degree(v)) == localized_member(a, f, v));
      }
    }
  }
}
