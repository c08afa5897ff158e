#include "gkz/gmod.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace gkz {

namespace {

Degree add_deg(const Degree& a, const Degree& b) {
  Degree out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Degree sub_deg(const Degree& a, const Degree& b) {
  Degree out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Degree neg_deg(const Degree& a) {
  Degree out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

Vec unit_vector(std::uint32_t k) { return Vec{Term{Rational(1), Monomial{}, k}}; }

Degree poly_degree(const RingContext& ctx, const GradedPolynomial& g) { return ctx.degree(g.front().m); }

// sum_k b_k * elems[k], with b an element of R^p (component k multiplies elems[k])
Vec combine(const ModuleOrder& ord, const Vec& b, const std::vector<Vec>& elems) {
  std::map<std::uint32_t, Vec> parts;
  for (const Term& t : b) parts[t.comp].push_back(Term{t.c, t.m, 0});
  Vec out;
  for (auto& [k, p] : parts) out = add(ord, out, mul_poly(ord, p, elems[k]));
  return out;
}

}  // namespace

Degree GradedFreeModule::degree(const Monomial& m, std::uint32_t k) const {
  return add_deg(shifts[k], ring->degree(m));
}

std::optional<Degree> GradedFreeModule::degree(const Vec& v) const {
  if (v.empty()) return std::nullopt;
  Degree d0 = degree(v.front().m, v.front().comp);
  for (const Term& t : v)
    if (degree(t.m, t.comp) != d0) return std::nullopt;
  return d0;
}

GradedFreeModule GradedFreeModule::dual() const {
  GradedFreeModule out{ring, {}};
  for (const Degree& s : shifts) out.shifts.push_back(neg_deg(s));
  return out;
}

bool GradedMatrix::has_unit_entry() const {
  for (const Vec& c : columns)
    for (const Term& t : c)
      if (t.m.is_one()) return true;
  return false;
}

GradedMatrix GradedMatrix::transpose() const {
  GradedMatrix out;
  out.target = source().dual();
  out.source_shifts = target.dual().shifts;
  out.columns.assign(rows(), Vec{});
  for (std::size_t k = 0; k < columns.size(); ++k)
    for (const Term& t : columns[k]) out.columns[t.comp].push_back(Term{t.c, t.m, static_cast<std::uint32_t>(k)});
  ModuleOrder ord = module_order(out.target);
  for (Vec& c : out.columns) normalize(ord, c);
  return out;
}

GradedPresentation::GradedPresentation(GradedFreeModule generators, std::vector<Vec> relations)
    : gens_(std::move(generators)) {
  ModuleOrder ord = module_order(gens_);
  for (Vec& r : relations) {
    normalize(ord, r);
    if (!r.empty()) rels_.push_back(std::move(r));
  }
}

GradedMatrix GradedPresentation::relation_matrix() const {
  GradedMatrix m;
  m.target = gens_;
  for (const Vec& r : rels_) m.source_shifts.push_back(*gens_.degree(r));
  m.columns = rels_;
  return m;
}

const std::vector<Vec>& GradedPresentation::groebner_basis() const {
  if (!gb_) gb_ = submodule_groebner(gens_, rels_);
  return *gb_;
}

bool GradedPresentation::is_zero() const {
  const auto& gb = groebner_basis();
  for (std::uint32_t k = 0; k < gens_.rank(); ++k) {
    bool unit = false;
    for (const Vec& g : gb) unit = unit || (g.front().comp == k && g.front().m.is_one());
    if (!unit) return false;
  }
  return true;
}

std::vector<std::size_t> GradedResolution::ranks() const {
  std::vector<std::size_t> out;
  for (const auto& f : modules) out.push_back(f.rank());
  return out;
}

ModuleOrder module_order(const GradedFreeModule& f) { return ModuleOrder(f.ring->order()); }

GroebnerOptions graded_options(const GradedFreeModule& f) {
  GroebnerOptions opt;
  opt.var_weight = f.ring->heights();
  for (const Degree& s : f.shifts) opt.comp_weight.push_back(f.ring->height(s));
  opt.homogeneous = true;
  opt.ideal = f.rank() == 1;
  return opt;
}

std::vector<Vec> submodule_groebner(const GradedFreeModule& f, const std::vector<Vec>& gens) {
  ModuleOrder ord = module_order(f);
  std::vector<Vec> in;
  for (Vec g : gens) {
    normalize(ord, g);
    if (!g.empty()) in.push_back(std::move(g));
  }
  return groebner(ord, in, graded_options(f)).basis;
}

std::vector<Vec> minimal_generators(const GradedFreeModule& f, const std::vector<Vec>& gens) {
  ModuleOrder ord = module_order(f);
  std::vector<Vec> in;
  for (Vec g : gens) {
    normalize(ord, g);
    if (!g.empty()) in.push_back(std::move(g));
  }
  GroebnerResult res = groebner(ord, in, graded_options(f));
  std::vector<Vec> out;
  for (std::size_t i = 0; i < in.size(); ++i)
    if (res.minimal[i]) out.push_back(in[i]);
  return out;
}

std::vector<Vec> preimage(const GradedFreeModule& target, const std::vector<Vec>& k_gens, const std::vector<Vec>& vs,
                          const std::vector<Degree>& source_shifts) {
  const std::size_t r = target.rank(), p = vs.size();
  if (p == 0) return {};
  GradedFreeModule aug{target.ring, target.shifts};
  for (const Degree& s : source_shifts) aug.shifts.push_back(s);
  std::vector<int> blocks(r, 0);
  blocks.resize(r + p, 1);
  ModuleOrder ord(target.ring->order(), blocks);
  std::vector<Vec> inputs;
  for (std::size_t i = 0; i < p; ++i) {
    Vec v = vs[i];
    v.push_back(Term{Rational(1), Monomial{}, static_cast<std::uint32_t>(r + i)});
    normalize(ord, v);
    inputs.push_back(std::move(v));
  }
  for (Vec k : k_gens) {
    normalize(ord, k);
    if (!k.empty()) inputs.push_back(std::move(k));
  }
  GroebnerOptions opt = graded_options(aug);
  opt.ideal = false;
  GroebnerResult res = groebner(ord, inputs, opt);
  std::vector<Vec> kernel;
  for (const Vec& g : res.basis)
    if (g.front().comp >= r) kernel.push_back(shift_components(g, -static_cast<long>(r)));
  GradedFreeModule source{target.ring, source_shifts};
  return minimal_generators(source, kernel);
}

GradedMatrix syzygies(const GradedMatrix& m) {
  GradedMatrix out;
  out.target = m.source();
  out.columns = preimage(m.target, {}, m.columns, m.source_shifts);
  for (const Vec& c : out.columns) out.source_shifts.push_back(*out.target.degree(c));
  return out;
}

GradedPresentation prune(const GradedPresentation& m) {
  GradedFreeModule gens = m.generators();
  ModuleOrder ord = module_order(gens);
  std::vector<Vec> rels = m.relations();
  for (;;) {
    long which = -1;
    Term unit;
    for (std::size_t r = 0; r < rels.size() && which < 0; ++r)
      for (const Term& t : rels[r])
        if (t.m.is_one()) {
          which = static_cast<long>(r);
          unit = t;
          break;
        }
    if (which < 0) break;
    Vec pivot = rels[static_cast<std::size_t>(which)];
    rels.erase(rels.begin() + which);
    const std::uint32_t k = unit.comp;
    std::vector<Vec> next;
    for (Vec& s : rels) {
      Vec sk = component(s, k);
      if (!sk.empty()) s = sub(ord, s, scale(mul_poly(ord, sk, pivot), 1 / unit.c));
      Vec renum;
      for (Term& t : s) {
        if (t.comp > k) --t.comp;
        renum.push_back(std::move(t));
      }
      if (!renum.empty()) next.push_back(std::move(renum));
    }
    gens.shifts.erase(gens.shifts.begin() + k);
    rels = std::move(next);
  }
  return GradedPresentation(gens, minimal_generators(gens, rels));
}

GradedResolution minimal_free_resolution(const GradedPresentation& m, std::size_t max_length) {
  GradedPresentation p = prune(m);
  GradedResolution res;
  res.modules.push_back(p.generators());
  if (p.generators().rank() == 0) {
    res.minimal = true;
    return res;
  }
  GradedMatrix phi = p.relation_matrix();
  while (phi.cols() > 0 && res.maps.size() < max_length) {
    res.modules.push_back(phi.source());
    res.maps.push_back(phi);
    phi = syzygies(phi);
  }
  res.minimal = true;
  for (const GradedMatrix& f : res.maps)
    if (f.has_unit_entry()) res.minimal = false;
  return res;
}

bool composes_to_zero(const GradedResolution& r) {
  for (std::size_t k = 0; k + 1 < r.maps.size(); ++k) {
    const GradedMatrix& outer = r.maps[k];
    const GradedMatrix& inner = r.maps[k + 1];
    ModuleOrder ord = module_order(outer.target);
    for (const Vec& c : inner.columns)
      if (!combine(ord, c, outer.columns).empty()) return false;
  }
  return true;
}

GradedPresentation ext_module(const GradedResolution& r, std::size_t j) {
  auto ring = r.modules.front().ring;
  if (j >= r.modules.size()) return GradedPresentation(GradedFreeModule{ring, {}}, {});
  GradedFreeModule fj_dual = r.modules[j].dual();
  std::vector<Vec> cycles;
  if (j < r.maps.size()) {
    cycles = syzygies(r.maps[j].transpose()).columns;
  } else {
    for (std::uint32_t k = 0; k < fj_dual.rank(); ++k) cycles.push_back(unit_vector(k));
  }
  std::vector<Vec> boundaries;
  if (j >= 1) boundaries = r.maps[j - 1].transpose().columns;
  GradedFreeModule gens{ring, {}};
  for (const Vec& z : cycles) gens.shifts.push_back(*fj_dual.degree(z));
  std::vector<Vec> rels = preimage(fj_dual, boundaries, cycles, gens.shifts);
  return prune(GradedPresentation(gens, rels));
}

GradedPresentation ext_module(const GradedPresentation& m, std::size_t j) {
  return ext_module(minimal_free_resolution(m, m.ring().n() + 1), j);
}

long long hilbert_function(const GradedPresentation& m, const Degree& alpha) {
  const RingContext& ctx = m.ring();
  const auto& gb = m.groebner_basis();
  const GradedFreeModule& f = m.generators();
  long long total = 0;
  for (std::uint32_t k = 0; k < f.rank(); ++k) {
    std::vector<Monomial> leads;
    bool unit = false;
    for (const Vec& g : gb)
      if (g.front().comp == k) {
        leads.push_back(g.front().m);
        unit = unit || g.front().m.is_one();
      }
    if (unit) continue;
    Degree target = sub_deg(f.shifts[k], alpha);
    ctx.fibers().for_each(target, ctx.matrix().height(target), [&](const std::vector<long long>& u) {
      for (const Monomial& lm : leads) {
        bool divides = true;
        for (std::size_t j = 0; j < ctx.n() && divides; ++j) divides = lm.e[j] <= u[j];
        if (divides) return true;
      }
      ++total;
      return true;
    });
  }
  return total;
}

HilbertTable::HilbertTable(const GradedPresentation& m, long long max_height)
    : ring_(&m.ring()), shifts_(m.generators().shifts), max_height_(max_height) {
  const RingContext& ctx = m.ring();
  const std::size_t n = ctx.n();
  const auto& hts = ctx.heights();
  const auto& gb = m.groebner_basis();
  for (std::uint32_t k = 0; k < shifts_.size(); ++k) {
    std::vector<Monomial> leads;
    for (const Vec& g : gb)
      if (g.front().comp == k) leads.push_back(g.front().m);
    auto standard = [&](const Monomial& u) {
      for (const Monomial& l : leads)
        if (l.divides(u)) return false;
      return true;
    };
    Monomial u;
    if (!standard(u)) continue;
    Degree deg = shifts_[k];
    // monomials are built by adding variables in nondecreasing index order,
    // so every standard monomial is reached exactly once
    std::function<void(std::size_t, long long)> walk = [&](std::size_t first, long long height) {
      ++counts_[deg];
      for (std::size_t j = first; j < n; ++j) {
        if (height + hts[j] > max_height_) continue;
        ++u.e[j];
        u.mask |= (1u << j);
        if (standard(u)) {
          const Degree& vd = ctx.variable_degrees()[j];
          for (std::size_t i = 0; i < deg.size(); ++i) deg[i] += vd[i];
          walk(j, height + hts[j]);
          for (std::size_t i = 0; i < deg.size(); ++i) deg[i] -= vd[i];
        }
        if (--u.e[j] == 0) u.mask &= ~(1u << j);
      }
    };
    walk(0, 0);
  }
}

long long HilbertTable::required_height(const GradedPresentation& m, const Degree& alpha) {
  long long best = 0;
  for (const Degree& s : m.generators().shifts) best = std::max(best, m.ring().matrix().height(sub_deg(s, alpha)));
  return best;
}

long long HilbertTable::value(const Degree& alpha) const {
  long long total = 0;
  for (const Degree& s : shifts_) {
    long long h = ring_->matrix().height(sub_deg(s, alpha));
    if (h > max_height_) throw std::out_of_range("degree beyond the Hilbert table");
  }
  auto it = counts_.find(alpha);
  if (it != counts_.end()) total = it->second;
  return total;
}

GradedPresentation semigroup_ring_module(std::shared_ptr<const RingContext> ctx) {
  GradedIdeal ia = toric_ideal(ctx);
  GradedFreeModule f{ctx, {Degree(ctx->d(), 0)}};
  return GradedPresentation(f, ia.generators());
}

GradedPresentation face_ring_module(std::shared_ptr<const RingContext> ctx, const Face& face, const Degree& shift) {
  GradedIdeal i = face_ideal(ctx, face);
  GradedFreeModule f{ctx, {shift}};
  return GradedPresentation(f, i.groebner_basis());
}

long long step_hilbert(const RingContext& ctx, const FiltrationStep& step, const Degree& alpha) {
  Degree v = sub_deg(step.shift, alpha);
  if (step.face.columns.empty()) {
    for (long long x : v)
      if (x != 0) return 0;
    return 1;
  }
  std::vector<Degree> cols;
  std::vector<long long> w;
  for (std::size_t j : step.face.columns) {
    cols.push_back(ctx.matrix().column_degree(j));
    w.push_back(ctx.heights()[j]);
  }
  FiberEnumerator fe(cols, w);
  bool found = false;
  fe.for_each(v, ctx.matrix().height(v), [&](const std::vector<long long>&) {
    found = true;
    return false;
  });
  return found ? 1 : 0;
}

FaceIdealCache::FaceIdealCache(std::shared_ptr<const RingContext> ctx)
    : ctx_(std::move(ctx)), ideals_(ctx_->faces().faces.size()) {}

const GradedIdeal& FaceIdealCache::get(std::size_t k) {
  if (!ideals_[k]) ideals_[k] = face_ideal(ctx_, ctx_->faces().faces[k]);
  return *ideals_[k];
}

namespace {

// {a in R : a * x in K} for a single element x of F0, as ideal generators.
std::vector<GradedPolynomial> element_annihilator(const GradedFreeModule& f0, const std::vector<Vec>& k,
                                                  const Vec& x) {
  auto bs = preimage(f0, k, {x}, {*f0.degree(x)});
  std::vector<GradedPolynomial> out;
  for (const Vec& b : bs) out.push_back(component(b, 0));
  return out;
}

// Ann(F0 / K) by intersecting (K : e_i) one generator at a time.
std::vector<GradedPolynomial> module_annihilator(const GradedFreeModule& f0, const std::vector<Vec>& k) {
  const RingContext& ctx = *f0.ring;
  ModuleOrder ord = module_order(f0);
  GradedFreeModule r1{f0.ring, {Degree(ctx.d(), 0)}};
  std::vector<GradedPolynomial> ann{Vec{Term{Rational(1), Monomial{}, 0}}};
  for (std::uint32_t i = 0; i < f0.rank(); ++i) {
    std::vector<Vec> vs;
    std::vector<Degree> shifts;
    for (const GradedPolynomial& g : ann) {
      vs.push_back(mul_poly(ord, g, unit_vector(i)));
      shifts.push_back(add_deg(poly_degree(ctx, g), f0.shifts[i]));
    }
    auto bs = preimage(f0, k, vs, shifts);
    std::vector<GradedPolynomial> next;
    for (const Vec& b : bs) next.push_back(combine(ctx.poly_order(), b, ann));
    ann = minimal_generators(r1, next);
    if (ann.empty()) break;
  }
  return ann;
}

// Steps for a module of finite length given by the Groebner basis of its
// relations: every standard monomial x^u e_i contributes S_empty in its degree.
void append_point_steps(const GradedFreeModule& f0, const std::vector<Vec>& gb, const Face& empty,
                        ToricFiltration& out) {
  const std::size_t n = f0.ring->n();
  for (std::uint32_t i = 0; i < f0.rank(); ++i) {
    std::vector<Monomial> leads;
    for (const Vec& g : gb)
      if (g.front().comp == i) leads.push_back(g.front().m);
    if (std::any_of(leads.begin(), leads.end(), [](const Monomial& l) { return l.is_one(); })) continue;
    std::vector<std::int32_t> bound(n, -1);
    for (const Monomial& m : leads)
      for (std::size_t j = 0; j < n; ++j)
        if (m.mask == (1u << j) && (bound[j] < 0 || m.e[j] < bound[j])) bound[j] = m.e[j];
    if (std::any_of(bound.begin(), bound.end(), [](std::int32_t b) { return b < 0; }))
      throw NotToric("annihilator only in the maximal ideal but the quotient is infinite");
    Monomial u;
    std::function<void(std::size_t)> walk = [&](std::size_t first) {
      for (const Monomial& l : leads)
        if (l.divides(u)) return;
      out.steps.push_back(FiltrationStep{empty, f0.degree(u, i)});
      for (std::size_t j = first; j < n; ++j) {
        if (u.e[j] + 1 >= bound[j]) continue;
        ++u.e[j];
        u.mask |= 1u << j;
        walk(j);
        if (--u.e[j] == 0) u.mask &= ~(1u << j);
      }
    };
    walk(0);
  }
}

bool ideal_in(const std::vector<GradedPolynomial>& gens, const GradedIdeal& i) {
  return reduces_to_zero(i.ring().poly_order(), gens, i.groebner_basis());
}

}  // namespace

std::vector<GradedPolynomial> annihilator(const GradedPresentation& m) {
  return module_annihilator(m.generators(), m.relations());
}

ToricFiltration toric_filtration(const GradedPresentation& m, ExtractionOrder order, FaceIdealCache* cache) {
  const GradedFreeModule& f0 = m.generators();
  const RingContext& ctx = *f0.ring;
  FaceIdealCache local(f0.ring);
  FaceIdealCache& faces = cache ? *cache : local;
  ModuleOrder ord = module_order(f0);
  const auto& lattice = ctx.faces().faces;

  ToricFiltration out;
  std::vector<Vec> k = m.relations();
  for (;;) {
    std::vector<Vec> gb = submodule_groebner(f0, k);
    bool done = true;
    for (std::uint32_t i = 0; i < f0.rank() && done; ++i)
      done = normal_form(ord, unit_vector(i), gb).empty();
    if (done) break;

    auto ann = module_annihilator(f0, k);
    long chosen = -1;
    for (std::size_t fi = 0; fi < lattice.size(); ++fi) {
      if (!ideal_in(ann, faces.get(fi))) continue;
      if (chosen < 0) {
        chosen = static_cast<long>(fi);
        continue;
      }
      std::size_t best_dim = lattice[static_cast<std::size_t>(chosen)].dimension;
      if (lattice[fi].dimension > best_dim ||
          (lattice[fi].dimension == best_dim && order == ExtractionOrder::kLast))
        chosen = static_cast<long>(fi);
    }
    if (chosen < 0) throw NotToric("no face ideal contains the annihilator");
    const Face& face = lattice[static_cast<std::size_t>(chosen)];
    if (face.columns.empty()) {
      // finite length: one copy of S_empty = Q per standard monomial
      append_point_steps(f0, gb, face, out);
      break;
    }
    const GradedIdeal& iface = faces.get(static_cast<std::size_t>(chosen));

    // (K :_{F0} I_F)
    std::vector<Vec> colon;
    for (std::uint32_t i = 0; i < f0.rank(); ++i) colon.push_back(unit_vector(i));
    for (const GradedPolynomial& g : iface.groebner_basis()) {
      std::vector<Vec> vs;
      std::vector<Degree> shifts;
      for (const Vec& c : colon) {
        vs.push_back(mul_poly(ord, g, c));
        shifts.push_back(add_deg(poly_degree(ctx, g), *f0.degree(c)));
      }
      auto bs = preimage(f0, k, vs, shifts);
      std::vector<Vec> next;
      for (const Vec& b : bs) next.push_back(combine(ord, b, colon));
      colon = minimal_generators(f0, next);
    }

    std::vector<Vec> candidates;
    for (const Vec& c : colon) {
      Vec r = normal_form(ord, c, gb);
      if (!r.empty()) candidates.push_back(std::move(r));
    }
    if (order == ExtractionOrder::kLast) std::reverse(candidates.begin(), candidates.end());
    // I_F c stays inside K as K grows, so every candidate whose annihilator
    // is still exactly I_F after the earlier extractions is another step.
    // A candidate already in K has annihilator R and fails the test.
    std::size_t found = 0;
    for (Vec& c : candidates) {
      if (!ideal_in(element_annihilator(f0, k, c), iface)) continue;
      out.steps.push_back(FiltrationStep{face, *f0.degree(c)});
      k.push_back(std::move(c));
      ++found;
    }
    if (found == 0) throw NotToric("no element of the colon module has a face ideal as annihilator");
  }
  return out;
}

// ---- quasi-degree sets ----

namespace {

std::vector<IntVector> face_columns(const IntMatrix& a, const Face& f) {
  std::vector<IntVector> cols;
  for (std::size_t j : f.columns) cols.push_back(a.column(j));
  return cols;
}

RatVector to_rat(const Degree& v) {
  RatVector out;
  for (long long x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

bool subset(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

Degree reduce_shift(const IntMatrix& a, const Face& f, const Degree& shift) {
  if (f.columns.empty()) return shift;
  LatticeBasis sat = saturate_lattice(face_columns(a, f), a.rows());
  return to_degree(reduce_modulo_lattice(sat, to_integer_vector(shift)));
}

bool in_span_translate(const IntMatrix& a, const Face& f, const RatVector& point, const Degree& shift) {
  RatVector diff = point;
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= static_cast<long>(shift[i]);
  bool zero = std::all_of(diff.begin(), diff.end(), [](const Rational& x) { return sgn(x) == 0; });
  if (zero) return true;
  if (f.columns.empty()) return false;
  RatMatrix m;
  for (const IntVector& c : face_columns(a, f)) {
    RatVector row;
    for (const Integer& x : c) row.emplace_back(x);
    m.push_back(row);
  }
  std::size_t r = rational_rank(m);
  m.push_back(diff);
  return rational_rank(m) == r;
}

bool stratum_contained(const IntMatrix& a, const Stratum& inner, const Stratum& outer) {
  if (!subset(inner.face.columns, outer.face.columns)) return false;
  return in_span_translate(a, outer.face, to_rat(inner.shift), outer.shift);
}

QuasiDegreeSet::QuasiDegreeSet(const IntMatrix& a, std::vector<Stratum> strata) : a_(a) {
  for (Stratum& s : strata) s.shift = reduce_shift(a_, s.face, s.shift);
  auto key_less = [](const Stratum& x, const Stratum& y) {
    if (x.face.dimension != y.face.dimension) return x.face.dimension < y.face.dimension;
    if (x.face.columns != y.face.columns) return x.face.columns < y.face.columns;
    return x.shift < y.shift;
  };
  std::sort(strata.begin(), strata.end(), key_less);
  strata.erase(std::unique(strata.begin(), strata.end(),
                           [](const Stratum& x, const Stratum& y) {
                             return x.face.columns == y.face.columns && x.shift == y.shift;
                           }),
               strata.end());
  for (std::size_t i = 0; i < strata.size(); ++i) {
    bool contained = false;
    for (std::size_t j = 0; j < strata.size() && !contained; ++j)
      if (i != j && stratum_contained(a_, strata[i], strata[j])) contained = true;
    if (!contained) strata_.push_back(strata[i]);
  }
}

long QuasiDegreeSet::find(const RatVector& point) const {
  for (std::size_t i = 0; i < strata_.size(); ++i)
    if (in_span_translate(a_, strata_[i].face, point, strata_[i].shift)) return static_cast<long>(i);
  return -1;
}

bool QuasiDegreeSet::contains(const Degree& point) const { return find(to_rat(point)) >= 0; }

bool operator==(const QuasiDegreeSet& a, const QuasiDegreeSet& b) {
  if (a.strata_.size() != b.strata_.size()) return false;
  for (std::size_t i = 0; i < a.strata_.size(); ++i)
    if (a.strata_[i].face.columns != b.strata_[i].face.columns || a.strata_[i].shift != b.strata_[i].shift)
      return false;
  return true;
}

QuasiDegreeSet quasidegrees(const RingContext& ctx, const ToricFiltration& filtration) {
  std::vector<Stratum> strata;
  for (const FiltrationStep& s : filtration.steps) strata.push_back(Stratum{s.shift, s.face});
  return QuasiDegreeSet(ctx.matrix().matrix(), std::move(strata));
}

QuasiDegreeSet quasidegrees(const GradedPresentation& m) { return quasidegrees(m.ring(), toric_filtration(m)); }

}  // namespace gkz
