#include "gkz/localcoh.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>

namespace gkz {

namespace {

// Columns of the face, greedily reduced to a basis of its span.
std::vector<RatVector> face_basis(const PointedMatrix& a, const Face& f) {
  std::vector<RatVector> basis;
  RatMatrix rows;
  for (std::size_t j : f.columns) {
    RatVector v;
    for (std::size_t i = 0; i < a.d(); ++i) v.emplace_back(a.matrix()(i, j));
    RatMatrix trial = rows;
    trial.push_back(v);
    if (rational_rank(trial) == trial.size()) {
      rows = std::move(trial);
      basis.push_back(v);
    }
  }
  return basis;
}

int orientation_sign(const PointedMatrix& a, const Face& f, const Face& g) {
  std::vector<RatVector> bf = face_basis(a, f), bg = face_basis(a, g);
  RatVector extra;
  for (std::size_t j : g.columns)
    if (!f.contains(j)) {
      for (std::size_t i = 0; i < a.d(); ++i) extra.emplace_back(a.matrix()(i, j));
      break;
    }
  bf.push_back(extra);
  const std::size_t k = bg.size();
  RatMatrix system(a.d(), RatVector(k));
  for (std::size_t i = 0; i < a.d(); ++i)
    for (std::size_t c = 0; c < k; ++c) system[i][c] = bg[c][i];
  RatMatrix coords(k, RatVector(k));
  for (std::size_t c = 0; c < k; ++c) {
    RatVector x;
    if (!rational_solve(system, bf[c], k, x)) throw InternalInconsistency("face span is not contained in its coface");
    for (std::size_t r = 0; r < k; ++r) coords[r][c] = x[r];
  }
  return determinant_sign(coords);
}

Degree sub_deg(const Degree& a, const Degree& b) {
  Degree out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

std::string deg_string(const Degree& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace

IshidaComplex::IshidaComplex(const RingContext& ctx) : d_(ctx.d()), faces_(ctx.faces().faces) {
  const std::size_t m = faces_.size();
  sign_.assign(m, std::vector<int>(m, 0));
  for (std::size_t f = 0; f < m; ++f)
    for (std::size_t g = 0; g < m; ++g)
      if (faces_[g].dimension == faces_[f].dimension + 1 && faces_[f].is_subface_of(faces_[g]))
        sign_[f][g] = orientation_sign(ctx.matrix(), faces_[f], faces_[g]);
  for (const Face& f : faces_) members_.emplace_back(ctx.matrix(), f);
  if (!squares_to_zero()) throw InternalInconsistency("incidence signs do not define a complex");
}

bool IshidaComplex::squares_to_zero() const {
  const std::size_t m = faces_.size();
  for (std::size_t f = 0; f < m; ++f)
    for (std::size_t h = 0; h < m; ++h) {
      if (faces_[h].dimension != faces_[f].dimension + 2) continue;
      long s = 0;
      for (std::size_t g = 0; g < m; ++g) s += sign_[f][g] * sign_[g][h];
      if (s != 0) return false;
    }
  return true;
}

std::vector<long long> IshidaComplex::cohomology(const std::vector<bool>& active) const {
  std::vector<std::vector<std::size_t>> by_dim(d_ + 1);
  for (std::size_t f = 0; f < faces_.size(); ++f)
    if (active[f]) by_dim[faces_[f].dimension].push_back(f);
  std::vector<std::size_t> ranks(d_ + 1, 0);  // rank of the map out of position i
  for (std::size_t i = 0; i < d_; ++i) {
    const auto& src = by_dim[i];
    const auto& dst = by_dim[i + 1];
    if (src.empty() || dst.empty()) continue;
    RatMatrix m(dst.size(), RatVector(src.size()));
    for (std::size_t r = 0; r < dst.size(); ++r)
      for (std::size_t c = 0; c < src.size(); ++c) m[r][c] = sign_[src[c]][dst[r]];
    ranks[i] = rational_rank(m);
  }
  std::vector<long long> dims(d_ + 1, 0);
  for (std::size_t i = 0; i <= d_; ++i) {
    long long v = static_cast<long long>(by_dim[i].size()) - static_cast<long long>(ranks[i]);
    if (i > 0) v -= static_cast<long long>(ranks[i - 1]);
    dims[i] = v;
  }
  // d^2 = 0 on the slice, checked on the restricted matrices
  for (std::size_t i = 0; i + 2 <= d_; ++i)
    for (std::size_t f : by_dim[i])
      for (std::size_t h : by_dim[i + 2]) {
        long s = 0;
        for (std::size_t g : by_dim[i + 1]) s += sign_[f][g] * sign_[g][h];
        if (s != 0) throw InternalInconsistency("slice differential does not square to zero");
      }
  return dims;
}

LocalCohSlice IshidaComplex::slice(const Degree& alpha) {
  Degree neg(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) neg[i] = -alpha[i];
  std::vector<bool> active(faces_.size(), false);
  for (std::size_t f = 0; f < faces_.size(); ++f) active[f] = members_[f].contains(neg);
  auto it = memo_.find(active);
  if (it == memo_.end()) it = memo_.emplace(active, cohomology(active)).first;
  return LocalCohSlice{alpha, it->second};
}

LocalCohSlice ishida_slice(const RingContext& ctx, const Degree& alpha) {
  IshidaComplex c(ctx);
  return c.slice(alpha);
}

HomologicalData compute_homological_data(std::shared_ptr<const RingContext> ctx) {
  GradedIdeal ia = toric_ideal(ctx);
  GradedPresentation sa(GradedFreeModule{ctx, {Degree(ctx->d(), 0)}}, ia.generators());
  GradedResolution res = minimal_free_resolution(sa, ctx->n() + 1);
  if (!res.minimal) throw InternalInconsistency("resolution has a unit entry");
  std::vector<GradedPresentation> ext;
  for (std::size_t j = 0; j <= ctx->n(); ++j) ext.push_back(ext_module(res, j));
  return HomologicalData{ctx, ia, std::move(res), std::move(ext)};
}

long long local_cohomology_via_ext(const HomologicalData& data, std::size_t i, const Degree& alpha) {
  const std::size_t n = data.ctx->n();
  if (i > n) return 0;
  const GradedPresentation& e = data.ext[n - i];
  if (e.generators().rank() == 0) return 0;
  return hilbert_function(e, sub_deg(data.ctx->epsilon(), alpha));
}

long long box_from_environment() {
  const char* env = std::getenv("GKZ_DEGREE_BOX");
  if (env == nullptr || *env == '\0') return -1;
  char* end = nullptr;
  long long v = std::strtoll(env, &end, 10);
  if (*end != '\0' || v < 0) throw std::invalid_argument("GKZ_DEGREE_BOX must be a nonnegative integer");
  return v;
}

long long default_box(const HomologicalData& data) {
  long long env = box_from_environment();
  if (env >= 0) return env;
  long long m = 0;
  for (const GradedFreeModule& f : data.resolution.modules)
    for (const Degree& s : f.shifts)
      for (long long x : s) m = std::max(m, x < 0 ? -x : x);
  long long box = std::max<long long>(8, 2 * m);
  // keep (2 box + 1)^d within kMaxBoxDegrees
  const std::size_t d = data.ctx->d();
  while (box > 8) {
    double count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= static_cast<double>(2 * box + 1);
    if (count <= static_cast<double>(kMaxBoxDegrees)) break;
    --box;
  }
  return box;
}

CrossCheckReport cross_check(const HomologicalData& data, long long box, bool strict) {
  const RingContext& ctx = *data.ctx;
  const std::size_t d = ctx.d();
  IshidaComplex ishida(ctx);
  CrossCheckReport rep;
  rep.box = box;
  rep.differential_ok = ishida.squares_to_zero();
  // one Hilbert table per nonzero Ext module, deep enough for the whole box
  const std::size_t n = ctx.n();
  long long spread = 0;
  for (std::size_t i = 0; i < d; ++i) {
    Degree ei(d, 0);
    ei[i] = 1;
    long long h = ctx.matrix().height(ei);
    spread += h < 0 ? -h : h;
  }
  std::vector<std::optional<HilbertTable>> tables(d + 1);
  for (std::size_t i = 0; i <= d && i <= n; ++i) {
    const GradedPresentation& e = data.ext[n - i];
    if (e.generators().rank() == 0) continue;
    long long w = 0;
    for (const Degree& s : e.generators().shifts) w = std::max(w, ctx.matrix().height(sub_deg(s, ctx.epsilon())));
    tables[i].emplace(e, w + box * spread);
  }
  Degree alpha(d, -box);
  for (;;) {
    ++rep.degrees_checked;
    LocalCohSlice s = ishida.slice(alpha);
    for (std::size_t i = 0; i <= d; ++i) {
      long long viaext = tables[i] ? tables[i]->value(sub_deg(ctx.epsilon(), alpha)) : 0;
      CrossCheckEntry e{alpha, i, s.dims[i], viaext};
      if (s.dims[i] != viaext)
        rep.mismatches.push_back(e);
      else if (viaext != 0 && i < d)
        rep.nonzero.push_back(e);
    }
    std::size_t k = 0;
    while (k < d && alpha[k] == box) alpha[k++] = -box;
    if (k == d) break;
    ++alpha[k];
  }
  if (strict && (!rep.mismatches.empty() || !rep.differential_ok)) {
    std::ostringstream os;
    os << rep.mismatches.size() << " degree(s) disagree";
    if (!rep.mismatches.empty()) {
      const auto& e = rep.mismatches.front();
      os << ", first at alpha=" << deg_string(e.alpha) << " i=" << e.i << " (complex " << e.ishida << ", ext "
         << e.ext << ")";
    }
    throw ConventionMismatch(os.str());
  }
  return rep;
}

std::vector<ToricFiltration> local_cohomology_filtrations(const HomologicalData& data) {
  const std::size_t n = data.ctx->n(), d = data.ctx->d();
  FaceIdealCache cache(data.ctx);
  std::vector<ToricFiltration> out(d);
  for (std::size_t i = 0; i < d; ++i) {
    const GradedPresentation& e = data.ext[n - i];
    if (e.generators().rank() == 0) continue;
    out[i] = toric_filtration(e, ExtractionOrder::kFirst, &cache);
  }
  return out;
}

ExceptionalArrangement exceptional_arrangement(const HomologicalData& data) {
  const RingContext& ctx = *data.ctx;
  const IntMatrix& a = ctx.matrix().matrix();
  const std::size_t d = ctx.d();
  std::vector<ToricFiltration> filtrations = local_cohomology_filtrations(data);
  std::vector<QuasiDegreeSet> per_index;
  std::vector<Stratum> all;
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Stratum> strata;
    for (const FiltrationStep& s : filtrations[i].steps)
      strata.push_back(Stratum{sub_deg(s.shift, ctx.epsilon()), s.face});
    all.insert(all.end(), strata.begin(), strata.end());
    per_index.emplace_back(a, std::move(strata));
  }
  QuasiDegreeSet total(a, std::move(all));
  ExceptionalArrangement out;
  for (const Stratum& s : total.strata()) {
    ExceptionalStratum es{s.shift, s.face, {}};
    for (std::size_t i = 0; i < d; ++i)
      for (const Stratum& t : per_index[i].strata())
        if (stratum_contained(a, s, t)) {
          es.indices.push_back(i);
          break;
        }
    if (d < 2 || s.face.dimension > d - 2)
      throw InternalInconsistency("exceptional stratum of codimension below 2 at shift " + deg_string(s.shift));
    out.strata.push_back(std::move(es));
  }
  return out;
}

CohenMacaulayCertificate is_cohen_macaulay(const HomologicalData& data, const ExceptionalArrangement& arrangement) {
  CohenMacaulayCertificate c;
  c.projective_dimension = data.projective_dimension();
  c.expected = data.ctx->n() - data.ctx->d();
  c.cohen_macaulay = arrangement.empty();
  bool pd_cm = c.projective_dimension == c.expected;
  if (pd_cm != c.cohen_macaulay)
    throw InternalInconsistency("empty arrangement and projective dimension n - d disagree");
  if (!c.cohen_macaulay) c.witness.push_back(arrangement.strata.front());
  return c;
}

}  // namespace gkz
