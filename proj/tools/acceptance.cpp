// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fails.
//
// The corpus is 50 seeded random matrices (d <= 3, n <= 5, entries in [0, 4]),
// 20 seeded matrices with first row (1, ..., 1), and the 0134 curve.

#include <iostream>
#include <random>
#include <sstream>

#include "report.hpp"

using namespace gkz;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> failures;

  void fail(const std::string& why) {
    pass = false;
    if (failures.size() < 5) failures.push_back(why);
  }
};

struct Prepared {
  IntMatrix m;
  std::shared_ptr<const RingContext> ctx;
  HomologicalData data;
  std::optional<ExceptionalArrangement> arrangement;
  std::string arrangement_error;
};

const IntMatrix kA0134{{1, 1, 1, 1}, {0, 1, 3, 4}};

void print(int number, const std::string& title, const Outcome& o) {
  std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << number << ": " << title << " (" << o.detail.str()
            << ")" << std::endl;
  for (const std::string& f : o.failures) std::cout << "      " << f << "\n";
}

std::vector<IntMatrix> build_corpus() {
  report::CorpusSpec random;
  random.d_min = 1;
  random.d_max = 3;
  random.n_min = 2;
  random.n_max = 5;
  random.bound = 4;
  random.count = 50;
  random.seed = 20240611;
  report::CorpusSpec homogeneous = random;
  homogeneous.d_min = 2;
  homogeneous.count = 20;
  homogeneous.seed = 77;
  homogeneous.homogeneous = true;
  std::vector<IntMatrix> out = report::generate_corpus(random);
  for (IntMatrix& m : report::generate_corpus(homogeneous)) out.push_back(std::move(m));
  out.push_back(kA0134);
  return out;
}

// degrees of x^u e_k for small u, sometimes jittered off the module
std::vector<Degree> sample_degrees(const GradedPresentation& e, std::mt19937_64& rng, std::size_t count) {
  const RingContext& ctx = e.ring();
  std::vector<Degree> out;
  std::uniform_int_distribution<std::size_t> gen(0, e.generators().rank() - 1);
  std::uniform_int_distribution<int> small(0, 2), jitter(-1, 1), coin(0, 3);
  while (out.size() < count) {
    Degree a = e.generators().shifts[gen(rng)];
    for (std::size_t j = 0; j < ctx.n(); ++j) {
      int u = small(rng);
      for (std::size_t i = 0; i < ctx.d(); ++i) a[i] += u * ctx.variable_degrees()[j][i];
    }
    if (coin(rng) == 0)
      for (long long& x : a) x += jitter(rng);
    out.push_back(a);
  }
  return out;
}

}  // namespace

int main() {
  std::vector<IntMatrix> corpus = build_corpus();
  std::vector<Prepared> prepared;
  for (const IntMatrix& m : corpus) {
    auto ctx = std::make_shared<const RingContext>(make_pointed_matrix(m));
    Prepared p{m, ctx, compute_homological_data(ctx), std::nullopt, {}};
    try {
      p.arrangement = exceptional_arrangement(p.data);
    } catch (const std::exception& e) {
      p.arrangement_error = e.what();
    }
    prepared.push_back(std::move(p));
  }
  std::cout << "corpus: " << corpus.size() << " matrices\n";
  bool all = true;

  {
    Outcome o;
    std::size_t degrees = 0, values = 0, mismatches = 0;
    for (const Prepared& p : prepared) {
      CrossCheckReport rep = cross_check(p.data, default_box(p.data), false);
      degrees += rep.degrees_checked;
      values += rep.degrees_checked * (p.ctx->d() + 1);
      mismatches += rep.mismatches.size();
      if (!rep.differential_ok) o.fail(p.m.to_string() + ": complex differential does not square to zero");
      for (const CrossCheckEntry& e : rep.mismatches) {
        std::ostringstream s;
        s << p.m.to_string() << " i=" << e.i << " complex " << e.ishida << " ext " << e.ext;
        o.fail(s.str());
      }
    }
    o.detail << degrees << " degrees, " << values << " (degree, i) values, " << mismatches << " mismatches";
    print(1, "Ext/duality route equals the face-complex oracle", o);
    all = all && o.pass;
  }

  {
    Outcome o;
    std::size_t cm = 0;
    for (const Prepared& p : prepared) {
      if (!p.arrangement) {
        o.fail(p.m.to_string() + ": " + p.arrangement_error);
        continue;
      }
      const bool pd_cm = p.data.projective_dimension() == p.ctx->n() - p.ctx->d();
      cm += pd_cm;
      if (pd_cm != p.arrangement->empty()) o.fail(p.m.to_string() + ": empty arrangement and pd = n - d disagree");
    }
    o.detail << cm << " Cohen-Macaulay, " << prepared.size() - cm << " not";
    print(2, "empty arrangement iff pd = n - d", o);
    all = all && o.pass;
  }

  {
    Outcome o;
    const Prepared& p = prepared.back();
    const Integer rank = generic_rank(p.ctx->matrix());
    if (rank != 4) o.fail("generic rank " + rank.get_str());
    if (p.data.projective_dimension() == p.ctx->n() - p.ctx->d()) o.fail("reported Cohen-Macaulay");
    if (!p.arrangement || p.arrangement->strata.size() != 1) {
      o.fail("expected exactly one stratum");
    } else {
      const ExceptionalStratum& s = p.arrangement->strata.front();
      if (s.shift != Degree{1, 2} || !s.face.columns.empty()) o.fail("stratum is not the point (1,2)");
    }
    // independent confirmation from the face complex: H^1 at -(1,2) is one-dimensional
    LocalCohSlice slice = ishida_slice(*p.ctx, {-1, -2});
    if (slice.dims != std::vector<long long>{0, 1, 0}) o.fail("face complex does not see H^1 at -(1,2)");
    o.detail << "generic rank " << rank << ", strata " << (p.arrangement ? p.arrangement->strata.size() : 0);
    print(3, "0134 reproduction", o);
    all = all && o.pass;
  }

  {
    Outcome o;
    std::size_t strata = 0;
    for (const Prepared& p : prepared) {
      if (!p.arrangement) {
        o.fail(p.m.to_string() + ": " + p.arrangement_error);
        continue;
      }
      for (const ExceptionalStratum& s : p.arrangement->strata) {
        ++strata;
        if (s.face.dimension + 2 > p.ctx->d()) o.fail(p.m.to_string() + ": stratum of codimension below 2");
      }
    }
    o.detail << strata << " strata checked";
    print(4, "every stratum has codimension at least 2", o);
    all = all && o.pass;
  }

  {
    Outcome o;
    std::mt19937_64 rng(5);
    std::size_t modules = 0, checks = 0;
    for (const Prepared& p : prepared) {
      FaceIdealCache cache(p.ctx);
      for (std::size_t j = 0; j <= p.ctx->n(); ++j) {
        const GradedPresentation& e = p.data.ext[j];
        if (e.generators().rank() == 0 || e.is_zero()) continue;
        ++modules;
        ToricFiltration f = toric_filtration(e, ExtractionOrder::kFirst, &cache);
        for (const Degree& a : sample_degrees(e, rng, 20)) {
          ++checks;
          long long sum = 0;
          for (const FiltrationStep& s : f.steps) sum += step_hilbert(*p.ctx, s, a);
          if (sum != hilbert_function(e, a)) o.fail(p.m.to_string() + ": Ext^" + std::to_string(j) + " additivity");
        }
      }
    }
    o.detail << modules << " Ext modules, " << checks << " degrees";
    print(5, "Hilbert function additivity over toric filtrations", o);
    all = all && o.pass;
  }

  {
    Outcome o;
    std::size_t certificates = 0, infinite = 0;
    for (std::size_t k = 0; k < prepared.size(); ++k) {
      const Prepared& p = prepared[k];
      std::vector<RatVector> samples = coherence_samples(p.ctx->n(), 3, 1000 + k);
      for (const Face& f : p.ctx->faces().faces)
        for (const RatVector& x : samples) {
          ++certificates;
          try {
            coherence_certificate(p.ctx, f, x);
          } catch (const InfiniteDimensional& e) {
            ++infinite;
            o.fail(p.m.to_string() + " at " + ParameterPoint{x}.to_string() + ": " + e.what());
          }
        }
    }
    o.detail << certificates << " certificates, " << infinite << " infinite";
    print(6, "coherence certificates finite at 3 odd samples per face", o);
    all = all && o.pass;
  }

  {
    Outcome o;
    std::size_t reports = 0;
    for (std::size_t k = 0; k < prepared.size(); k += 7) {
      std::string a = report::dump(report::analyze(prepared[k].m, -1));
      std::string b = report::dump(report::analyze(prepared[k].m, -1));
      ++reports;
      if (a != b) o.fail(prepared[k].m.to_string() + ": analysis reports differ");
    }
    report::CorpusSpec spec;
    spec.count = 12;
    spec.seed = 99;
    std::vector<IntMatrix> c1 = report::generate_corpus(spec), c2 = report::generate_corpus(spec);
    if (!(c1 == c2)) o.fail("corpus regeneration differs");
    if (report::dump(report::batch_report(spec, c1)) != report::dump(report::batch_report(spec, c2)))
      o.fail("batch reports differ");
    o.detail << reports << " reports compared, corpus of " << c1.size() << " regenerated";
    print(7, "byte-identical reports and corpora", o);
    all = all && o.pass;
  }

  {
    Outcome o;
    std::size_t homogeneous = 0;
    for (const Prepared& p : prepared) {
      const Integer lex = normalized_volume(p.ctx->matrix(), Placement::kLexicographic);
      const Integer rev = normalized_volume(p.ctx->matrix(), Placement::kReverse);
      if (lex != rev) o.fail(p.m.to_string() + ": triangulations give " + lex.get_str() + " and " + rev.get_str());
      std::optional<Integer> e = hilbert_multiplicity(p.ctx);
      if (!e) continue;
      ++homogeneous;
      const Integer index = lattice_index(p.m);
      if (lex != index * *e)
        o.fail(p.m.to_string() + ": volume " + lex.get_str() + " but index * multiplicity " + Integer(index * *e).get_str());
    }
    o.detail << prepared.size() << " volumes, " << homogeneous << " compared with the Hilbert series";
    print(8, "volume agrees across triangulations and with the multiplicity", o);
    all = all && o.pass;
  }

  std::cout << (all ? "all criteria passed" : "some criteria failed") << "\n";
  return all ? 0 : 1;
}
