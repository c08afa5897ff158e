#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gkz/localcoh.hpp"

using namespace gkz;

namespace {

const IntMatrix kA0134{{1, 1, 1, 1}, {0, 1, 3, 4}};

std::shared_ptr<const RingContext> ring(const IntMatrix& m) {
  return std::make_shared<const RingContext>(make_pointed_matrix(m));
}

}  // namespace

TEST_CASE("ishida slices") {
  auto ctx = ring(kA0134);
  IshidaComplex c(*ctx);
  CHECK(c.squares_to_zero());
  LocalCohSlice hole = c.slice({-1, -2});
  CHECK(hole.dims == std::vector<long long>{0, 1, 0});
  LocalCohSlice inside = c.slice({-2, -2});
  CHECK(inside.dims == std::vector<long long>{0, 0, 0});
  LocalCohSlice positive = c.slice({3, 1});
  CHECK(positive.dims[0] == 0);
  CHECK(positive.dims[1] == 0);
  CHECK(positive.dims[2] == 1);

  // Z A = 2 Z: odd degrees meet no localization at all
  auto even = ring(IntMatrix{{2, 4}});
  CHECK(ishida_slice(*even, {-3}).dims == std::vector<long long>{0, 0});
  CHECK(ishida_slice(*even, {-4}).dims == std::vector<long long>{0, 0});
  CHECK(ishida_slice(*even, {4}).dims == std::vector<long long>{0, 1});
}

TEST_CASE("cross check and arrangement for 0134") {
  auto ctx = ring(kA0134);
  HomologicalData data = compute_homological_data(ctx);
  CHECK(data.projective_dimension() == 3);
  CrossCheckReport rep = cross_check(data, 8);
  CHECK(rep.mismatches.empty());
  CHECK(rep.degrees_checked == 17 * 17);
  REQUIRE(rep.nonzero.size() == 1);
  CHECK(rep.nonzero[0].alpha == Degree{-1, -2});
  CHECK(rep.nonzero[0].i == 1);

  CHECK(cross_check(data, 0).degrees_checked == 1);

  ExceptionalArrangement e = exceptional_arrangement(data);
  REQUIRE(e.strata.size() == 1);
  CHECK(e.strata[0].shift == Degree{1, 2});
  CHECK(e.strata[0].face.columns.empty());
  CHECK(e.strata[0].indices == std::vector<std::size_t>{1});
  CohenMacaulayCertificate cm = is_cohen_macaulay(data, e);
  CHECK_FALSE(cm.cohen_macaulay);
  CHECK(cm.witness.size() == 1);
}

TEST_CASE("Cohen-Macaulay examples") {
  for (const IntMatrix& m : {IntMatrix{{1, 0}, {0, 1}}, IntMatrix{{1, 1, 1}, {0, 1, 2}}}) {
    HomologicalData data = compute_homological_data(ring(m));
    ExceptionalArrangement e = exceptional_arrangement(data);
    CHECK(e.empty());
    CohenMacaulayCertificate cm = is_cohen_macaulay(data, e);
    CHECK(cm.cohen_macaulay);
    CHECK(cm.projective_dimension == m.cols() - m.rows());
    CrossCheckReport rep = cross_check(data, 5);
    CHECK(rep.mismatches.empty());
    CHECK(rep.nonzero.empty());
  }
}

TEST_CASE("random corpus: oracle agreement and porism") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> dist(0, 3);
  int done = 0;
  while (done < 10) {
    std::size_t d = 1 + rng() % 3, n = d + 1 + rng() % 2;
    IntMatrix m(d, n);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = dist(rng);
    std::shared_ptr<const RingContext> ctx;
    try {
      ctx = ring(m);
    } catch (const std::runtime_error&) {
      continue;
    }
    ++done;
    HomologicalData data = compute_homological_data(ctx);
    CrossCheckReport rep = cross_check(data, d == 3 ? 4 : 8, false);
    REQUIRE(rep.mismatches.empty());
    ExceptionalArrangement e = exceptional_arrangement(data);
    for (const auto& s : e.strata) REQUIRE(s.face.dimension + 2 <= d);
    for (const auto& entry : rep.nonzero) {
      RatVector beta;
      for (std::size_t i = 0; i < d; ++i) beta.emplace_back(static_cast<long>(-entry.alpha[i]));
      bool covered = false;
      for (const auto& s : e.strata) covered = covered || in_span_translate(m, s.face, beta, s.shift);
      REQUIRE(covered);
    }
    is_cohen_macaulay(data, e);
  }
}
