#include "gkz/gring.hpp"

#include <stdexcept>

namespace gkz {

RingContext::RingContext(PointedMatrix a) : a_(std::move(a)) {
  if (a_.n() + 1 > kMaxVars) throw std::invalid_argument("too many columns for the polynomial engine");
  const std::size_t n = a_.n(), d = a_.d();
  epsilon_.assign(d, 0);
  std::vector<Degree> cols;
  for (std::size_t j = 0; j < n; ++j) {
    Degree c = a_.column_degree(j);
    Degree neg(d);
    for (std::size_t i = 0; i < d; ++i) {
      neg[i] = -c[i];
      epsilon_[i] += c[i];
    }
    var_degrees_.push_back(neg);
    cols.push_back(c);
  }
  order_ = MonomialOrder::degrevlex(n);
  poly_order_ = ModuleOrder(order_);
  faces_ = face_lattice(a_);
  names_ = default_variable_names("d", n);
  fibers_ = FiberEnumerator(cols, a_.column_heights());
}

Degree RingContext::degree(const Monomial& m) const {
  Degree out(d(), 0);
  for (std::size_t j = 0; j < n(); ++j)
    for (std::size_t i = 0; i < d(); ++i) out[i] += var_degrees_[j][i] * m.e[j];
  return out;
}

long long RingContext::height(const Degree& deg) const { return -a_.height(deg); }

std::optional<Degree> homogeneous_degree(const RingContext& ctx, const GradedPolynomial& f) {
  if (f.empty()) return std::nullopt;
  Degree d0 = ctx.degree(f.front().m);
  for (const Term& t : f)
    if (ctx.degree(t.m) != d0) return std::nullopt;
  return d0;
}

GradedIdeal::GradedIdeal(std::shared_ptr<const RingContext> ring, std::vector<GradedPolynomial> generators)
    : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (g.empty()) continue;
    normalize(ring_->poly_order(), g);
    if (!g.empty()) {
      if (!homogeneous_degree(*ring_, g)) graded_ = false;
      generators_.push_back(std::move(g));
    }
  }
}

bool GradedIdeal::is_zero() const { return generators_.empty(); }

const std::vector<GradedPolynomial>& GradedIdeal::groebner_basis() const {
  if (!gb_) {
    GroebnerOptions opt;
    opt.ideal = true;
    if (graded_) {
      opt.var_weight = ring_->heights();
      opt.homogeneous = true;
    }
    gb_ = groebner(ring_->poly_order(), generators_, opt).basis;
  }
  return *gb_;
}

GradedPolynomial GradedIdeal::normal_form(const GradedPolynomial& f) const {
  return gkz::normal_form(ring_->poly_order(), f, groebner_basis());
}

bool GradedIdeal::contains(const GradedPolynomial& f) const { return normal_form(f).empty(); }

bool GradedIdeal::contains(const GradedIdeal& other) const {
  return reduces_to_zero(ring_->poly_order(), other.generators(), groebner_basis());
}

std::vector<GradedPolynomial> buchberger(const GradedIdeal& ideal) { return ideal.groebner_basis(); }

namespace {

std::vector<GradedPolynomial> kernel_binomials(const RingContext& ctx, const std::vector<std::size_t>& columns) {
  std::vector<GradedPolynomial> out;
  if (columns.empty()) return out;
  IntMatrix sub = ctx.matrix().matrix().select_columns(columns);
  LatticeBasis ker = lattice_kernel(sub);
  for (const IntVector& u : ker.vectors) {
    std::vector<long long> plus(ctx.n(), 0), minus(ctx.n(), 0);
    for (std::size_t k = 0; k < columns.size(); ++k) {
      long long x = u[k].get_si();
      (x > 0 ? plus : minus)[columns[k]] = x > 0 ? x : -x;
    }
    out.push_back(binomial(Monomial::from_exponents(plus), Monomial::from_exponents(minus), ctx.poly_order()));
  }
  return out;
}

GradedIdeal saturate_by_variables(GradedIdeal ideal, const std::vector<std::size_t>& vars) {
  for (std::size_t j : vars) {
    if (ideal.is_zero()) break;
    ideal = saturate(ideal, monomial_poly(Monomial::variable(j)));
  }
  return ideal;
}

}  // namespace

GradedIdeal lattice_basis_ideal(std::shared_ptr<const RingContext> ctx) {
  std::vector<std::size_t> all(ctx->n());
  for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
  auto gens = kernel_binomials(*ctx, all);
  return GradedIdeal(ctx, std::move(gens));
}

GradedIdeal toric_ideal(std::shared_ptr<const RingContext> ctx) {
  std::vector<std::size_t> all(ctx->n());
  for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
  GradedIdeal sat = saturate_by_variables(lattice_basis_ideal(ctx), all);
  return GradedIdeal(ctx, sat.groebner_basis());
}

GradedIdeal face_ideal(std::shared_ptr<const RingContext> ctx, const Face& f) {
  GradedIdeal sat = saturate_by_variables(GradedIdeal(ctx, kernel_binomials(*ctx, f.columns)), f.columns);
  std::vector<GradedPolynomial> gens = sat.groebner_basis();
  for (std::size_t j = 0; j < ctx->n(); ++j)
    if (!f.contains(j)) gens.push_back(monomial_poly(Monomial::variable(j)));
  GradedIdeal out(ctx, std::move(gens));
  return GradedIdeal(ctx, out.groebner_basis());
}

GradedIdeal saturate(const GradedIdeal& ideal, const GradedPolynomial& f) {
  const RingContext& ctx = ideal.ring();
  const std::size_t n = ctx.n();
  ModuleOrder ord(MonomialOrder::elimination_last(n + 1, 1));
  std::vector<Vec> inputs;
  for (Vec g : ideal.generators()) {
    normalize(ord, g);
    inputs.push_back(std::move(g));
  }
  Vec tf = mul_term(f, 1, Monomial::variable(n));
  tf.push_back(Term{Rational(-1), Monomial{}, 0});
  normalize(ord, tf);
  inputs.push_back(std::move(tf));
  GroebnerOptions opt;
  opt.ideal = true;
  GroebnerResult res = groebner(ord, inputs, opt);
  std::vector<GradedPolynomial> kept;
  for (Vec& g : res.basis) {
    bool has_t = false;
    for (const Term& t : g) has_t = has_t || t.m.e[n] != 0;
    if (!has_t) kept.push_back(std::move(g));
  }
  return GradedIdeal(ideal.ring_ptr(), std::move(kept));
}

GradedPolynomial top_form(const GradedPolynomial& f) {
  long long top = -1;
  for (const Term& t : f) top = std::max(top, t.m.total_degree());
  GradedPolynomial out;
  for (const Term& t : f)
    if (t.m.total_degree() == top) out.push_back(t);
  return out;
}

std::vector<GradedPolynomial> initial_ideal_total_degree(const std::vector<GradedPolynomial>& ideal_gens,
                                                         std::size_t nvars) {
  ModuleOrder ord(MonomialOrder::degrevlex(nvars));
  std::vector<Vec> inputs;
  for (Vec g : ideal_gens) {
    normalize(ord, g);
    if (!g.empty()) inputs.push_back(std::move(g));
  }
  GroebnerOptions opt;
  opt.ideal = true;
  GroebnerResult res = groebner(ord, inputs, opt);
  std::vector<GradedPolynomial> out;
  for (const Vec& g : res.basis) {
    Vec t = top_form(g);
    normalize(ord, t);
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<GradedPolynomial> initial_ideal_total_degree(const GradedIdeal& ideal) {
  return initial_ideal_total_degree(ideal.generators(), ideal.ring().n());
}

}  // namespace gkz
