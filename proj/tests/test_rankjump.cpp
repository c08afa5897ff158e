#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "gkz/rankjump.hpp"

using namespace gkz;

namespace {

const IntMatrix kA0134{{1, 1, 1, 1}, {0, 1, 3, 4}};

std::shared_ptr<const RingContext> ring(const IntMatrix& m) {
  return std::make_shared<const RingContext>(make_pointed_matrix(m));
}

// number of distinct points A u with |u| = k
long long distinct_points(const IntMatrix& a, long long k) {
  std::set<std::vector<long long>> seen;
  std::vector<long long> u(a.cols(), 0);
  std::function<void(std::size_t, long long)> rec = [&](std::size_t j, long long left) {
    if (j + 1 == a.cols()) {
      u[j] = left;
      std::vector<long long> p(a.rows(), 0);
      for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t c = 0; c < a.cols(); ++c) p[i] += a(i, c).get_si() * u[c];
      seen.insert(p);
      return;
    }
    for (long long x = 0; x <= left; ++x) {
      u[j] = x;
      rec(j + 1, left - x);
    }
  };
  rec(0, k);
  return static_cast<long long>(seen.size());
}

// coefficient of t^k in K(t) / (1 - t)^n
Integer series_coefficient(const std::vector<Integer>& k_poly, std::size_t n, long long k) {
  std::vector<Integer> s(static_cast<std::size_t>(k) + 1, 0);
  for (std::size_t i = 0; i < k_poly.size() && i < s.size(); ++i) s[i] = k_poly[i];
  for (std::size_t step = 0; step < n; ++step)
    for (std::size_t i = 1; i < s.size(); ++i) s[i] += s[i - 1];
  return s.back();
}

}  // namespace

TEST_CASE("parameter parsing") {
  ParameterPoint p = ParameterPoint::parse("1, -2/4,+3");
  REQUIRE(p.beta.size() == 3);
  CHECK(p.beta[1] == Rational(-1, 2));
  CHECK(p.to_string() == "1,-1/2,3");
  CHECK_THROWS(ParameterPoint::parse("1,x"));
  CHECK_THROWS(ParameterPoint::parse("1/0"));
  CHECK_THROWS(ParameterPoint::parse(""));
  CHECK_THROWS(ParameterPoint::parse("1,,2"));
}

TEST_CASE("rank jumps") {
  auto id = ring(IntMatrix{{1, 0}, {0, 1}});
  HomologicalData did = compute_homological_data(id);
  ExceptionalArrangement eid = exceptional_arrangement(did);
  CHECK_FALSE(is_rank_jumping(*id, eid, ParameterPoint::parse("5,7")).jumping);

  auto ctx = ring(kA0134);
  HomologicalData data = compute_homological_data(ctx);
  ExceptionalArrangement e = exceptional_arrangement(data);
  JumpVerdict v = is_rank_jumping(*ctx, e, ParameterPoint::parse("1,2"));
  CHECK(v.jumping);
  REQUIRE(v.witness);
  CHECK(v.witness->face.columns.empty());
  CHECK_FALSE(is_rank_jumping(*ctx, e, ParameterPoint::parse("0,0")).jumping);
  CHECK_FALSE(is_rank_jumping(*ctx, e, ParameterPoint::parse("1,5/2")).jumping);
  CHECK_THROWS_AS(is_rank_jumping(*ctx, e, ParameterPoint::parse("1,2,3")), DimensionMismatch);

  auto permuted = ring(IntMatrix{{1, 1, 1, 1}, {3, 0, 4, 1}});
  ExceptionalArrangement ep = exceptional_arrangement(compute_homological_data(permuted));
  for (const char* beta : {"1,2", "0,0", "2,3", "-1,7"})
    CHECK(is_rank_jumping(*permuted, ep, ParameterPoint::parse(beta)).jumping ==
          is_rank_jumping(*ctx, e, ParameterPoint::parse(beta)).jumping);
}

TEST_CASE("generic rank") {
  CHECK(generic_rank(make_pointed_matrix(IntMatrix{{1, 0}, {0, 1}})) == 1);
  CHECK(generic_rank(make_pointed_matrix(kA0134)) == 4);
  CHECK(generic_rank(make_pointed_matrix(IntMatrix{{1, 1, 1}, {0, 1, 2}})) == 2);
  // Z A has index 2 here
  CHECK(generic_rank(make_pointed_matrix(IntMatrix{{2, 2}, {0, 2}})) == 1);
}

TEST_CASE("coherence certificates") {
  auto ctx = ring(kA0134);
  const FaceLattice& fl = ctx->faces();
  CHECK(coherence_certificate(ctx, fl.faces[fl.empty_face()], {1, 3, 5, 7}).quotient_dimension == 1);
  auto id = ring(IntMatrix{{1, 0}, {0, 1}});
  CHECK(coherence_certificate(id, id->faces().faces[id->faces().full_face()], {1, 1}).quotient_dimension == 1);
  // (1,-1,-1,1) lies on the toric variety and kills both Euler forms at x = (1,1,1,1)
  CHECK_THROWS_AS(coherence_certificate(ctx, fl.faces[fl.full_face()], {1, 1, 1, 1}), InfiniteDimensional);
  CoherenceCertificate full = coherence_certificate(ctx, fl.faces[fl.full_face()], {1, 3, 5, 7});
  // regression baseline; S_A is not CM, so the length exceeds the degree 4
  CHECK(full.quotient_dimension == 5);
  CHECK_THROWS(coherence_certificate(ctx, fl.faces[0], {1, 0, 1, 1}));

  for (const RatVector& x : coherence_samples(4, 3, 7)) {
    REQUIRE(x.size() == 4);
    for (const Rational& c : x) {
      CHECK(c >= 1);
      CHECK(c <= 17);
      CHECK(c.get_num() % 2 != 0);
    }
    for (const Face& f : fl.faces) CHECK(coherence_certificate(ctx, f, x).quotient_dimension >= 1);
  }
  CHECK(coherence_samples(4, 3, 7) == coherence_samples(4, 3, 7));
}

TEST_CASE("hilbert series of homogeneous semigroup rings") {
  for (const IntMatrix& m : {kA0134, IntMatrix{{1, 1, 1}, {0, 1, 2}}, IntMatrix{{1, 1, 1, 1}, {0, 2, 3, 5}},
                             IntMatrix{{1, 1, 1, 1, 1}, {0, 1, 0, 2, 1}, {0, 0, 1, 1, 2}}}) {
    auto ctx = ring(m);
    GradedIdeal ia = toric_ideal(ctx);
    ModuleOrder ord(MonomialOrder::degrevlex(m.cols()));
    GroebnerOptions opt;
    opt.ideal = true;
    std::vector<Vec> in = ia.generators();
    for (Vec& g : in) normalize(ord, g);
    std::vector<Monomial> leads;
    for (const Vec& g : groebner(ord, in, opt).basis) leads.push_back(g.front().m);
    std::vector<Integer> k = k_polynomial(leads, m.cols());
    for (long long deg = 0; deg <= 6; ++deg) CHECK(series_coefficient(k, m.cols(), deg) == static_cast<long>(distinct_points(m, deg)));
    std::optional<Integer> e = hilbert_multiplicity(ctx);
    REQUIRE(e);
    CHECK(*e * lattice_index(m) == normalized_volume(ctx->matrix()));
  }
  CHECK(*hilbert_multiplicity(ring(kA0134)) == 4);
  CHECK(*hilbert_multiplicity(ring(IntMatrix{{1, 1}, {0, 2}})) == 1);
  CHECK_FALSE(hilbert_multiplicity(ring(IntMatrix{{1, 2}})));
}

TEST_CASE("random corpus: arrangement properties") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> entry(0, 3);
  int done = 0;
  while (done < 12) {
    IntMatrix m(2, 4);
    for (std::size_t c = 0; c < 4; ++c) {
      m(0, c) = 1;
      m(1, c) = entry(rng) + static_cast<long>(c);
    }
    std::shared_ptr<const RingContext> ctx;
    try {
      ctx = ring(m);
    } catch (const std::exception&) {
      continue;
    }
    ++done;
    HomologicalData data = compute_homological_data(ctx);
    ExceptionalArrangement e = exceptional_arrangement(data);
    CHECK(e.empty() == is_cohen_macaulay(data, e).cohen_macaulay);
    CHECK(generic_rank(ctx->matrix()) >= 1);
    // projective curves: every stratum is a point
    for (const ExceptionalStratum& s : e.strata) CHECK(s.face.columns.empty());
    for (const Face& f : ctx->faces().faces)
      for (const RatVector& x : coherence_samples(4, 3, static_cast<unsigned long long>(done)))
        CHECK_NOTHROW(coherence_certificate(ctx, f, x));
  }
}
