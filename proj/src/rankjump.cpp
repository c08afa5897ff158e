#include "gkz/rankjump.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace gkz {

ParameterPoint ParameterPoint::parse(const std::string& text) {
  ParameterPoint p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty coordinate in parameter '" + text + "'");
    item = item.substr(b, e - b + 1);
    if (item[0] == '+') item = item.substr(1);
    Rational q;
    if (q.set_str(item, 10) != 0 || item.find('/') != item.rfind('/'))
      throw std::invalid_argument("not a rational number: '" + item + "'");
    if (item.find('/') != std::string::npos && Integer(item.substr(item.find('/') + 1)) == 0)
      throw std::invalid_argument("zero denominator in '" + item + "'");
    q.canonicalize();
    p.beta.push_back(q);
  }
  if (p.beta.empty()) throw std::invalid_argument("empty parameter");
  return p;
}

std::string ParameterPoint::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < beta.size(); ++i) out += (i ? "," : "") + beta[i].get_str();
  return out;
}

JumpVerdict is_rank_jumping(const RingContext& ctx, const ExceptionalArrangement& arrangement,
                            const ParameterPoint& beta) {
  if (beta.beta.size() != ctx.d())
    throw DimensionMismatch("parameter has " + std::to_string(beta.beta.size()) + " coordinates, expected " +
                            std::to_string(ctx.d()));
  JumpVerdict v;
  for (const ExceptionalStratum& s : arrangement.strata)
    if (in_span_translate(ctx.matrix().matrix(), s.face, beta.beta, s.shift)) {
      v.jumping = true;
      v.witness = s;
      break;
    }
  return v;
}

Integer generic_rank(const PointedMatrix& a) { return normalized_volume(a) / lattice_index(a.matrix()); }

CoherenceCertificate coherence_certificate(std::shared_ptr<const RingContext> ctx, const Face& face,
                                           const RatVector& sample) {
  const std::size_t n = ctx->n(), d = ctx->d();
  if (sample.size() != n) throw DimensionMismatch("sample point needs one coordinate per column");
  for (const Rational& x : sample)
    if (sgn(x) == 0) throw std::invalid_argument("sample point has a zero coordinate");
  ModuleOrder ord(MonomialOrder::degrevlex(n));
  std::vector<Vec> inputs = initial_ideal_total_degree(face_ideal(ctx, face));
  const IntMatrix& a = ctx->matrix().matrix();
  for (std::size_t i = 0; i < d; ++i) {
    Vec euler;
    for (std::size_t j = 0; j < n; ++j)
      if (a(i, j) != 0) euler.push_back(Term{Rational(a(i, j)) * sample[j], Monomial::variable(j), 0});
    normalize(ord, euler);
    if (!euler.empty()) inputs.push_back(std::move(euler));
  }
  GroebnerOptions opt;
  opt.ideal = true;
  std::vector<Vec> gb = groebner(ord, inputs, opt).basis;

  std::vector<Monomial> leads;
  for (const Vec& g : gb) leads.push_back(g.front().m);
  std::vector<std::int32_t> bound(n, -1);
  for (const Monomial& m : leads)
    for (std::size_t j = 0; j < n; ++j)
      if (m.mask == (1u << j) && (bound[j] < 0 || m.e[j] < bound[j])) bound[j] = m.e[j];
  for (std::size_t j = 0; j < n; ++j)
    if (bound[j] < 0) throw InfiniteDimensional("no pure power of xi_" + std::to_string(j + 1) + " in the initial ideal");

  CoherenceCertificate c{face, sample, 0};
  Monomial u;
  std::function<void(std::size_t)> walk = [&](std::size_t first) {
    for (const Monomial& l : leads)
      if (l.divides(u)) return;
    ++c.quotient_dimension;
    for (std::size_t j = first; j < n; ++j) {
      if (u.e[j] + 1 >= bound[j]) continue;
      ++u.e[j];
      u.mask |= 1u << j;
      walk(j);
      if (--u.e[j] == 0) u.mask &= ~(1u << j);
    }
  };
  walk(0);
  return c;
}

std::vector<RatVector> coherence_samples(std::size_t n, std::size_t count, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> half(0, 8);
  std::vector<RatVector> out(count);
  for (RatVector& x : out)
    for (std::size_t j = 0; j < n; ++j) x.emplace_back(2 * half(rng) + 1);
  return out;
}

namespace {

using Poly1 = std::vector<Integer>;

Poly1 poly_sub_shifted(Poly1 a, const Poly1& b, std::size_t shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= b[i];
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::vector<Monomial> out;
  std::sort(gens.begin(), gens.end(), [](const Monomial& x, const Monomial& y) {
    if (x.total_degree() != y.total_degree()) return x.total_degree() < y.total_degree();
    return x.e < y.e;
  });
  for (const Monomial& g : gens) {
    bool redundant = false;
    for (const Monomial& o : out) redundant = redundant || o.divides(g);
    if (!redundant) out.push_back(g);
  }
  return out;
}

// K(R / <g_1..g_k>) = K(R / J) - t^deg(g_k) K(R / (J : g_k)), J = <g_1..g_{k-1}>
Poly1 k_numerator(std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return Poly1{1};
  Monomial last = gens.back();
  gens.pop_back();
  std::vector<Monomial> colon;
  for (const Monomial& g : gens) {
    Monomial q;
    for (std::size_t j = 0; j < kMaxVars; ++j) q.e[j] = std::max(0, g.e[j] - last.e[j]);
    q.refresh_mask();
    colon.push_back(q);
  }
  Poly1 rest = k_numerator(gens);
  return poly_sub_shifted(rest, k_numerator(colon), static_cast<std::size_t>(last.total_degree()));
}

}  // namespace

std::vector<Integer> k_polynomial(const std::vector<Monomial>& generators, std::size_t) {
  return k_numerator(generators);
}

std::optional<Integer> hilbert_multiplicity(std::shared_ptr<const RingContext> ctx) {
  const std::size_t n = ctx->n(), d = ctx->d();
  RatMatrix rows;
  for (std::size_t i = 0; i < d; ++i) {
    RatVector r;
    for (std::size_t j = 0; j < n; ++j) r.emplace_back(ctx->matrix().matrix()(i, j));
    rows.push_back(r);
  }
  const std::size_t r0 = rational_rank(rows);
  rows.push_back(RatVector(n, Rational(1)));
  if (rational_rank(rows) != r0) return std::nullopt;

  // I_A is homogeneous for total degree here, so degrevlex leading terms
  // carry its Hilbert function.
  GradedIdeal ia = toric_ideal(ctx);
  ModuleOrder ord(MonomialOrder::degrevlex(n));
  std::vector<Vec> inputs = ia.generators();
  for (Vec& g : inputs) normalize(ord, g);
  GroebnerOptions opt;
  opt.ideal = true;
  std::vector<Monomial> leads;
  for (const Vec& g : groebner(ord, inputs, opt).basis) leads.push_back(g.front().m);
  Poly1 k = k_polynomial(leads, n);
  // K(t) = (1 - t)^(n - d) Q(t) and the multiplicity is Q(1)
  for (std::size_t step = 0; step < n - d; ++step) {
    Poly1 q(k.size() > 0 ? k.size() - 1 : 0);
    Integer carry = 0;
    for (std::size_t i = 0; i + 1 < k.size(); ++i) {
      carry += k[i];
      q[i] = carry;
    }
    if (k.empty() || carry + k.back() != 0) throw InternalInconsistency("Hilbert numerator not divisible by 1 - t");
    k = q;
  }
  Integer e = 0;
  for (const Integer& c : k) e += c;
  return e;
}

}  // namespace gkz
