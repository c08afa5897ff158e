#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <map>
#include <random>

#include "gkz/gring.hpp"

using namespace gkz;

namespace {

std::shared_ptr<const RingContext> ring(const IntMatrix& m) {
  return std::make_shared<const RingContext>(make_pointed_matrix(m));
}

const IntMatrix kA0134{{1, 1, 1, 1}, {0, 1, 3, 4}};

Vec poly(const RingContext& ctx, std::vector<std::pair<long, std::vector<long long>>> terms) {
  Vec v;
  for (auto& [c, u] : terms) v.push_back(Term{Rational(c), Monomial::from_exponents(u), 0});
  normalize(ctx.poly_order(), v);
  return v;
}

// every exponent vector u in N^n with |u| <= k
std::vector<std::vector<long long>> exponents_up_to(std::size_t n, long long k) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> u(n, 0);
  std::function<void(std::size_t, long long)> rec = [&](std::size_t j, long long left) {
    if (j == n) {
      out.push_back(u);
      return;
    }
    for (long long x = 0; x <= left; ++x) {
      u[j] = x;
      rec(j + 1, left - x);
    }
    u[j] = 0;
  };
  rec(0, k);
  return out;
}

// all binomials d^mu - d^nu with |mu|, |nu| <= k and A mu = A nu, grouped by degree
std::vector<Vec> bounded_kernel_binomials(const RingContext& ctx, long long k) {
  std::map<Degree, std::vector<Monomial>> by_degree;
  for (const auto& u : exponents_up_to(ctx.n(), k)) {
    Monomial m = Monomial::from_exponents(u);
    by_degree[ctx.degree(m)].push_back(m);
  }
  std::vector<Vec> out;
  for (const auto& [deg, ms] : by_degree)
    for (std::size_t i = 0; i < ms.size(); ++i)
      for (std::size_t j = i + 1; j < ms.size(); ++j) out.push_back(binomial(ms[i], ms[j], ctx.poly_order()));
  return out;
}

// Buchberger's criterion checked directly: all S-polynomials reduce to zero.
bool s_pairs_reduce(const ModuleOrder& ord, const std::vector<Vec>& gb) {
  for (std::size_t i = 0; i < gb.size(); ++i)
    for (std::size_t j = i + 1; j < gb.size(); ++j) {
      if (gb[i].front().comp != gb[j].front().comp) continue;
      Monomial l = lcm(gb[i].front().m, gb[j].front().m);
      Vec s = sub(ord, mul_term(gb[i], 1 / gb[i].front().c, l / gb[i].front().m),
                  mul_term(gb[j], 1 / gb[j].front().c, l / gb[j].front().m));
      if (!normal_form(ord, s, gb).empty()) return false;
    }
  return true;
}

bool is_reduced(const ModuleOrder& ord, const std::vector<Vec>& gb) {
  for (std::size_t i = 0; i < gb.size(); ++i) {
    if (gb[i].front().c != 1) return false;
    std::vector<Vec> others;
    for (std::size_t j = 0; j < gb.size(); ++j)
      if (j != i) others.push_back(gb[j]);
    if (!(normal_form(ord, gb[i], others) == gb[i])) return false;
  }
  return true;
}

bool same_terms(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].c != b[i].c || !(a[i].m == b[i].m) || a[i].comp != b[i].comp) return false;
  return true;
}

bool same_basis(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!same_terms(a[i], b[i])) return false;
  return true;
}

}  // namespace

TEST_CASE("ring context conventions") {
  auto ctx = ring(kA0134);
  CHECK(ctx->variable_degrees()[2] == Degree{-1, -3});
  CHECK(ctx->epsilon() == Degree{4, 8});
  CHECK(ctx->degree(Monomial::from_exponents({1, 0, 0, 1})) == Degree{-2, -4});
}

TEST_CASE("buchberger basics") {
  auto ctx = ring(kA0134);
  Vec f = poly(*ctx, {{3, {1, 1, 0, 0}}, {-6, {0, 0, 2, 0}}});
  GradedIdeal principal(ctx, {f});
  auto gb = buchberger(principal);
  REQUIRE(gb.size() == 1);
  CHECK(gb[0].front().c == 1);
  CHECK(gb[0].size() == 2);

  GradedIdeal mono(ctx, {poly(*ctx, {{1, {1, 0, 0, 0}}}), poly(*ctx, {{1, {0, 1, 0, 0}}})});
  CHECK(buchberger(mono).size() == 2);

  GradedIdeal lbi = lattice_basis_ideal(ctx);
  CHECK(s_pairs_reduce(ctx->poly_order(), lbi.groebner_basis()));
  CHECK(is_reduced(ctx->poly_order(), lbi.groebner_basis()));
  // determinism
  GradedIdeal again = lattice_basis_ideal(ctx);
  CHECK(same_basis(again.groebner_basis(), lbi.groebner_basis()));
}

TEST_CASE("toric ideals") {
  CHECK(toric_ideal(ring(IntMatrix{{1, 0}, {0, 1}})).is_zero());

  auto line = ring(IntMatrix{{1, 1}});
  GradedIdeal il = toric_ideal(line);
  REQUIRE(il.generators().size() == 1);
  CHECK(same_terms(il.generators()[0], poly(*line, {{1, {1, 0}}, {-1, {0, 1}}})));

  auto ctx = ring(kA0134);
  GradedIdeal ia = toric_ideal(ctx);
  CHECK(ia.contains(poly(*ctx, {{1, {1, 0, 0, 1}}, {-1, {0, 1, 1, 0}}})));
  CHECK(ia.contains(poly(*ctx, {{1, {0, 3, 0, 0}}, {-1, {2, 0, 1, 0}}})));
  CHECK_FALSE(ia.contains(poly(*ctx, {{1, {0, 1, 0, 0}}})));
  for (const Vec& g : ia.generators()) CHECK(homogeneous_degree(*ctx, g).has_value());
  for (const Vec& b : bounded_kernel_binomials(*ctx, 4)) REQUIRE(ia.contains(b));
  CHECK(ia.contains(lattice_basis_ideal(ctx)));
  CHECK(s_pairs_reduce(ctx->poly_order(), ia.groebner_basis()));

  // one-shot saturation by the product of all variables agrees
  GradedIdeal one_shot = saturate(lattice_basis_ideal(ctx), poly(*ctx, {{1, {1, 1, 1, 1}}}));
  CHECK(same_basis(GradedIdeal(ctx, one_shot.groebner_basis()).groebner_basis(), ia.groebner_basis()));
}

TEST_CASE("saturation") {
  auto ctx = ring(kA0134);
  GradedIdeal i(ctx, {poly(*ctx, {{1, {1, 1, 0, 0}}})});
  GradedIdeal s = saturate(i, poly(*ctx, {{1, {1, 0, 0, 0}}}));
  REQUIRE(s.groebner_basis().size() == 1);
  CHECK(same_terms(s.groebner_basis()[0], poly(*ctx, {{1, {0, 1, 0, 0}}})));

  GradedIdeal m(ctx, {poly(*ctx, {{1, {0, 2, 0, 0}}}), poly(*ctx, {{1, {0, 0, 1, 1}}})});
  GradedIdeal same = saturate(m, poly(*ctx, {{1, {1, 0, 0, 0}}}));
  CHECK(same_basis(same.groebner_basis(), m.groebner_basis()));
}

TEST_CASE("face ideals") {
  auto ctx = ring(kA0134);
  const FaceLattice& fl = ctx->faces();
  GradedIdeal empty = face_ideal(ctx, fl.faces[fl.empty_face()]);
  REQUIRE(empty.groebner_basis().size() == 4);
  for (std::size_t j = 0; j < 4; ++j) CHECK(empty.contains(monomial_poly(Monomial::variable(j))));
  GradedIdeal full = face_ideal(ctx, fl.faces[fl.full_face()]);
  CHECK(same_basis(full.groebner_basis(), toric_ideal(ctx).groebner_basis()));
  GradedIdeal ray = face_ideal(ctx, fl.faces[fl.find({0})]);
  CHECK(ray.groebner_basis().size() == 3);
  CHECK_FALSE(ray.contains(monomial_poly(Monomial::variable(0))));
  CHECK(ray.contains(monomial_poly(Monomial::variable(3))));
}

TEST_CASE("initial ideal for total degree") {
  auto ctx = ring(kA0134);
  auto in1 = initial_ideal_total_degree({poly(*ctx, {{1, {1, 0, 0, 1}}, {-1, {0, 1, 1, 0}}})}, 4);
  REQUIRE(in1.size() == 1);
  CHECK(in1[0].size() == 2);
  auto in2 = initial_ideal_total_degree({poly(*ctx, {{1, {0, 3, 0, 0}}, {-1, {2, 0, 1, 0}}})}, 4);
  REQUIRE(in2.size() == 1);
  CHECK(in2[0].size() == 2);
  auto in3 = initial_ideal_total_degree({poly(*ctx, {{1, {1, 0, 0, 0}}, {-1, {0, 0, 0, 0}}})}, 1);
  REQUIRE(in3.size() == 1);
  CHECK(same_terms(in3[0], poly(*ctx, {{1, {1}}})));
}

TEST_CASE("random corpus: toric ideals are complete at bounded degree") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> dist(0, 3);
  int done = 0;
  while (done < 12) {
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
    GradedIdeal ia = toric_ideal(ctx);
    for (const Vec& g : ia.generators()) {
      REQUIRE(g.size() == 2);
      REQUIRE(ctx->degree(g[0].m) == ctx->degree(g[1].m));
    }
    REQUIRE(ia.contains(lattice_basis_ideal(ctx)));
    for (const Vec& b : bounded_kernel_binomials(*ctx, 3)) REQUIRE(ia.contains(b));
    REQUIRE(s_pairs_reduce(ctx->poly_order(), ia.groebner_basis()));
  }
}
