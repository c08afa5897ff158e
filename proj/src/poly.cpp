#include "gkz/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gkz {

void Monomial::refresh_mask() {
  mask = 0;
  for (std::size_t j = 0; j < kMaxVars; ++j)
    if (e[j] > 0) mask |= (1u << j);
}

long long Monomial::total_degree() const {
  long long s = 0;
  for (auto x : e) s += x;
  return s;
}

bool Monomial::divides(const Monomial& other) const {
  if ((mask & ~other.mask) != 0) return false;
  for (std::size_t j = 0; j < kMaxVars; ++j)
    if (e[j] > other.e[j]) return false;
  return true;
}

Monomial Monomial::variable(std::size_t j, std::int32_t power) {
  Monomial m;
  m.e[j] = power;
  m.refresh_mask();
  return m;
}

Monomial Monomial::from_exponents(const std::vector<long long>& u) {
  if (u.size() > kMaxVars) throw std::invalid_argument("too many variables");
  Monomial m;
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (u[j] < 0) throw std::invalid_argument("negative exponent");
    m.e[j] = static_cast<std::int32_t>(u[j]);
  }
  m.refresh_mask();
  return m;
}

std::vector<long long> Monomial::exponents(std::size_t nvars) const {
  return std::vector<long long>(e.begin(), e.begin() + static_cast<long>(nvars));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t j = 0; j < kMaxVars; ++j) r.e[j] = a.e[j] + b.e[j];
  r.mask = a.mask | b.mask;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t j = 0; j < kMaxVars; ++j) r.e[j] = a.e[j] - b.e[j];
  r.refresh_mask();
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t j = 0; j < kMaxVars; ++j) r.e[j] = std::max(a.e[j], b.e[j]);
  r.mask = a.mask | b.mask;
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) { return (a.mask & b.mask) == 0; }

MonomialOrder MonomialOrder::degrevlex(std::size_t nvars) {
  MonomialOrder o;
  o.nvars = nvars;
  o.weights.push_back(std::vector<long long>(nvars, 1));
  return o;
}

MonomialOrder MonomialOrder::elimination_last(std::size_t nvars, std::size_t k) {
  MonomialOrder o;
  o.nvars = nvars;
  std::vector<long long> first(nvars, 0), second(nvars, 0);
  for (std::size_t j = 0; j < nvars; ++j) (j + k >= nvars ? first : second)[j] = 1;
  o.weights = {first, second};
  return o;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  for (const auto& w : weights) {
    long long wa = 0, wb = 0;
    for (std::size_t j = 0; j < nvars; ++j) {
      wa += w[j] * a.e[j];
      wb += w[j] * b.e[j];
    }
    if (wa != wb) return wa > wb ? 1 : -1;
  }
  for (std::size_t j = nvars; j-- > 0;)
    if (a.e[j] != b.e[j]) return a.e[j] < b.e[j] ? 1 : -1;
  return 0;
}

int ModuleOrder::compare(const Monomial& am, std::uint32_t ac, const Monomial& bm, std::uint32_t bc) const {
  int ba = block_of(ac), bb = block_of(bc);
  if (ba != bb) return ba < bb ? 1 : -1;
  int c = mono.compare(am, bm);
  if (c != 0) return c;
  if (ac != bc) return ac < bc ? 1 : -1;
  return 0;
}

int ModuleOrder::compare(const Term& a, const Term& b) const { return compare(a.m, a.comp, b.m, b.comp); }

void normalize(const ModuleOrder& ord, Vec& v) {
  std::sort(v.begin(), v.end(), [&](const Term& a, const Term& b) { return ord.compare(a, b) > 0; });
  Vec out;
  out.reserve(v.size());
  for (Term& t : v) {
    if (!out.empty() && out.back().comp == t.comp && out.back().m == t.m) {
      out.back().c += t.c;
      if (sgn(out.back().c) == 0) out.pop_back();
    } else if (sgn(t.c) != 0) {
      out.push_back(std::move(t));
    }
  }
  v = std::move(out);
}

namespace {

template <class Fn>
Vec merge(const ModuleOrder& ord, const Vec& a, const Vec& b, Fn&& transform_b) {
  Vec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Term tb = transform_b(b[j]);
    if (i == a.size()) {
      out.push_back(std::move(tb));
      ++j;
      continue;
    }
    int c = ord.compare(a[i], tb);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(std::move(tb));
      ++j;
    } else {
      Rational s = a[i].c + tb.c;
      if (sgn(s) != 0) out.push_back(Term{std::move(s), a[i].m, a[i].comp});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Vec add(const ModuleOrder& ord, const Vec& a, const Vec& b) {
  return merge(ord, a, b, [](const Term& t) { return t; });
}

Vec sub(const ModuleOrder& ord, const Vec& a, const Vec& b) {
  return merge(ord, a, b, [](const Term& t) { return Term{-t.c, t.m, t.comp}; });
}

Vec scale(const Vec& a, const Rational& c) {
  if (sgn(c) == 0) return {};
  Vec out = a;
  for (Term& t : out) t.c *= c;
  return out;
}

Vec mul_term(const Vec& a, const Rational& c, const Monomial& m) {
  if (sgn(c) == 0) return {};
  Vec out;
  out.reserve(a.size());
  for (const Term& t : a) out.push_back(Term{t.c * c, t.m * m, t.comp});
  return out;
}

Vec mul_poly(const ModuleOrder& ord, const Vec& p, const Vec& a) {
  Vec out;
  for (const Term& t : p) out = add(ord, out, mul_term(a, t.c, t.m));
  return out;
}

Vec sub_mul(const ModuleOrder& ord, const Vec& a, const Rational& c, const Monomial& m, const Vec& b) {
  return merge(ord, a, b, [&](const Term& t) { return Term{-(t.c * c), t.m * m, t.comp}; });
}

Vec shift_components(const Vec& a, long offset) {
  Vec out = a;
  for (Term& t : out) t.comp = static_cast<std::uint32_t>(static_cast<long>(t.comp) + offset);
  return out;
}

void make_monic(Vec& a) {
  if (a.empty()) return;
  Rational inv = 1 / a.front().c;
  for (Term& t : a) t.c *= inv;
}

void make_primitive(Vec& a) {
  if (a.empty()) return;
  Integer den = 1, num = 0;
  for (const Term& t : a) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.c.get_den_mpz_t());
  for (const Term& t : a) {
    Integer v = t.c.get_num() * (den / t.c.get_den());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_mpz_t());
  }
  Rational f(den, num);
  f.canonicalize();
  if (sgn(a.front().c) < 0) f = -f;
  for (Term& t : a) t.c *= f;
}

Vec component(const Vec& a, std::uint32_t k) {
  Vec out;
  for (const Term& t : a)
    if (t.comp == k) out.push_back(Term{t.c, t.m, 0});
  return out;
}

bool is_constant(const Vec& p) { return p.size() == 1 && p.front().m.is_one(); }

Vec monomial_poly(const Monomial& m, const Rational& c, std::uint32_t comp) {
  if (sgn(c) == 0) return {};
  return Vec{Term{c, m, comp}};
}

Vec binomial(const Monomial& plus, const Monomial& minus, const ModuleOrder& ord) {
  Vec v{Term{Rational(1), plus, 0}, Term{Rational(-1), minus, 0}};
  normalize(ord, v);
  return v;
}

std::string monomial_string(const Monomial& m, const std::vector<std::string>& names) {
  if (m.is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < names.size(); ++j) {
    if (m.e[j] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << names[j];
    if (m.e[j] > 1) os << '^' << m.e[j];
  }
  return os.str();
}

std::string to_string(const Vec& v, const std::vector<std::string>& names, bool show_components) {
  if (v.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Term& t = v[i];
    Rational c = t.c;
    if (i > 0) {
      os << (sgn(c) < 0 ? " - " : " + ");
      c = abs(c);
    } else if (sgn(c) < 0) {
      os << '-';
      c = abs(c);
    }
    bool unit = (c == 1);
    if (!unit || t.m.is_one()) {
      os << c.get_str();
      if (!t.m.is_one()) os << '*';
    }
    if (!t.m.is_one()) os << monomial_string(t.m, names);
    if (show_components) os << "*e" << t.comp;
  }
  return os.str();
}

std::vector<std::string> default_variable_names(const std::string& stem, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t j = 0; j < n; ++j) out.push_back(stem + std::to_string(j + 1));
  return out;
}

}  // namespace gkz
