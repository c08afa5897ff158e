// gkz: command line front end. Every command prints one JSON document
// (schema v1, see docs/schema.md) on stdout.
//
// exit codes: 0 ok, 2 invalid matrix, 3 invalid query, 4 cross-check or
// internal consistency failure, 1 anything else.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "report.hpp"

using namespace gkz;
using report::Json;

namespace {

struct Options {
  std::string input = "-";
  long long box = -1;
  std::string beta, alpha, face, sample;
  long long ext_index = -1;
  std::size_t samples = 3;
  std::uint64_t seed = 1;
  bool entries = false;
  report::CorpusSpec corpus;
  std::string out_dir;
};

class QueryError : public std::invalid_argument {
 public:
  explicit QueryError(const std::string& what) : std::invalid_argument(what) {}
};

void merge(Json& dst, const Json& src) {
  for (auto it = src.begin(); it != src.end(); ++it) dst[it.key()] = it.value();
}

std::shared_ptr<const RingContext> load(const Options& o) {
  IntMatrix m = report::parse_matrix(report::read_input(o.input));
  return std::make_shared<const RingContext>(make_pointed_matrix(m));
}

long long pick_box(const Options& o, const HomologicalData& data) { return o.box >= 0 ? o.box : default_box(data); }

std::vector<std::size_t> parse_columns(const std::string& text) {
  std::vector<std::size_t> out;
  if (text.empty() || text == "-") return out;
  for (long long c : report::parse_degree(text)) {
    if (c < 0) throw QueryError("negative column index");
    out.push_back(static_cast<std::size_t>(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Json cmd_analyze(const Options& o) {
  IntMatrix m = report::parse_matrix(report::read_input(o.input));
  return report::analyze(m, o.box);
}

Json cmd_faces(const Options& o) {
  auto ctx = load(o);
  Json j = report::envelope("faces");
  j["matrix"] = report::matrix_json(ctx->matrix().matrix());
  merge(j, report::faces_json(*ctx));
  return j;
}

Json cmd_toric_ideal(const Options& o) {
  auto ctx = load(o);
  Json j = report::envelope("toric-ideal");
  j["matrix"] = report::matrix_json(ctx->matrix().matrix());
  merge(j, report::toric_ideal_json(*ctx, toric_ideal(ctx)));
  return j;
}

Json cmd_resolution(const Options& o) {
  auto ctx = load(o);
  HomologicalData data = compute_homological_data(ctx);
  Json j = report::envelope("resolution");
  j["matrix"] = report::matrix_json(ctx->matrix().matrix());
  merge(j, report::resolution_json(data));
  return j;
}

Json cmd_ext(const Options& o) {
  auto ctx = load(o);
  HomologicalData data = compute_homological_data(ctx);
  Json j = report::envelope("ext");
  j["matrix"] = report::matrix_json(ctx->matrix().matrix());
  Json mods = Json::array();
  if (o.ext_index >= 0) {
    if (static_cast<std::size_t>(o.ext_index) > ctx->n()) throw QueryError("Ext index exceeds n");
    mods.push_back(report::ext_json(data, static_cast<std::size_t>(o.ext_index)));
  } else {
    for (std::size_t k = 0; k <= ctx->n(); ++k) mods.push_back(report::ext_json(data, k));
  }
  j["modules"] = mods;
  return j;
}

Json cmd_exceptional(const Options& o) {
  auto ctx = load(o);
  HomologicalData data = compute_homological_data(ctx);
  ExceptionalArrangement e = exceptional_arrangement(data);
  CohenMacaulayCertificate cm = is_cohen_macaulay(data, e);
  Json j = report::envelope("exceptional");
  j["matrix"] = report::matrix_json(ctx->matrix().matrix());
  j["cohen_macaulay"] = cm.cohen_macaulay;
  j["strata"] = report::arrangement_json(e);
  return j;
}

Json cmd_is_jumping(const Options& o) {
  auto ctx = load(o);
  ParameterPoint beta;
  try {
    beta = ParameterPoint::parse(o.beta);
  } catch (const std::invalid_argument& e) {
    throw QueryError(e.what());
  }
  if (beta.beta.size() != ctx->d())
    throw DimensionMismatch("beta has " + std::to_string(beta.beta.size()) + " coordinates, expected " +
                            std::to_string(ctx->d()));
  HomologicalData data = compute_homological_data(ctx);
  ExceptionalArrangement e = exceptional_arrangement(data);
  JumpVerdict v = is_rank_jumping(*ctx, e, beta);
  Json j = report::envelope("is-jumping");
  j["matrix"] = report::matrix_json(ctx->matrix().matrix());
  j["beta"] = beta.to_string();
  j["jumping"] = v.jumping;
  j["witness"] = v.witness ? report::stratum_json(*v.witness) : Json(nullptr);
  j["generic_rank"] = generic_rank(ctx->matrix()).get_si();
  return j;
}

Json cmd_localcoh(const Options& o, int& exit_code) {
  auto ctx = load(o);
  Degree alpha = report::parse_degree(o.alpha);
  if (alpha.size() != ctx->d()) throw DimensionMismatch("alpha needs " + std::to_string(ctx->d()) + " coordinates");
  HomologicalData data = compute_homological_data(ctx);
  LocalCohSlice s = ishida_slice(*ctx, alpha);
  Json j = report::envelope("localcoh");
  j["matrix"] = report::matrix_json(ctx->matrix().matrix());
  j["alpha"] = report::degree_json(alpha);
  std::vector<long long> viaext;
  for (std::size_t i = 0; i <= ctx->d(); ++i) viaext.push_back(local_cohomology_via_ext(data, i, alpha));
  j["ishida"] = Json(s.dims);
  j["ext"] = Json(viaext);
  j["agree"] = s.dims == viaext;
  if (s.dims != viaext) exit_code = 4;
  return j;
}

Json cmd_crosscheck(const Options& o, int& exit_code) {
  auto ctx = load(o);
  HomologicalData data = compute_homological_data(ctx);
  CrossCheckReport rep = cross_check(data, pick_box(o, data), false);
  Json j = report::envelope("crosscheck");
  j["matrix"] = report::matrix_json(ctx->matrix().matrix());
  merge(j, report::crosscheck_json(rep, o.entries));
  if (!rep.mismatches.empty() || !rep.differential_ok) exit_code = 4;
  return j;
}

Json cmd_volume(const Options& o) {
  auto ctx = load(o);
  Json j = report::envelope("volume");
  j["matrix"] = report::matrix_json(ctx->matrix().matrix());
  merge(j, report::volume_json(ctx->matrix()));
  j["reverse_order_volume"] = normalized_volume(ctx->matrix(), Placement::kReverse).get_si();
  std::optional<Integer> e = hilbert_multiplicity(ctx);
  j["hilbert_multiplicity"] = e ? Json(e->get_si()) : Json(nullptr);
  return j;
}

Json cmd_coherence(const Options& o) {
  auto ctx = load(o);
  const FaceLattice& fl = ctx->faces();
  std::vector<std::size_t> which;
  if (o.face.empty()) {
    for (std::size_t k = 0; k < fl.faces.size(); ++k) which.push_back(k);
  } else {
    std::size_t k = fl.find(parse_columns(o.face));
    if (k == fl.faces.size()) throw QueryError("not a face: " + o.face);
    which.push_back(k);
  }
  std::vector<RatVector> samples;
  if (!o.sample.empty()) {
    ParameterPoint p;
    try {
      p = ParameterPoint::parse(o.sample);
    } catch (const std::invalid_argument& e) {
      throw QueryError(e.what());
    }
    if (p.beta.size() != ctx->n()) throw DimensionMismatch("sample needs " + std::to_string(ctx->n()) + " coordinates");
    for (const Rational& x : p.beta)
      if (sgn(x) == 0) throw QueryError("sample coordinates must be nonzero");
    samples.push_back(p.beta);
  } else {
    samples = coherence_samples(ctx->n(), o.samples, o.seed);
  }
  Json j = report::envelope("coherence");
  j["matrix"] = report::matrix_json(ctx->matrix().matrix());
  Json list = Json::array();
  bool all_finite = true;
  for (std::size_t k : which) {
    Json f;
    f["face"] = report::face_json(fl.faces[k]);
    Json res = Json::array();
    std::size_t finite = 0;
    for (const RatVector& x : samples) {
      Json r;
      r["sample"] = ParameterPoint{x}.to_string();
      try {
        r["quotient_dimension"] = coherence_certificate(ctx, fl.faces[k], x).quotient_dimension;
        ++finite;
      } catch (const InfiniteDimensional&) {
        r["quotient_dimension"] = nullptr;
      }
      res.push_back(r);
    }
    f["samples"] = res;
    f["finite"] = 2 * finite > samples.size();
    all_finite = all_finite && 2 * finite > samples.size();
    list.push_back(f);
  }
  j["faces"] = list;
  j["all_finite"] = all_finite;
  return j;
}

Json cmd_corpus(const Options& o) {
  std::vector<IntMatrix> corpus = report::generate_corpus(o.corpus);
  if (!o.out_dir.empty()) {
    std::filesystem::create_directories(o.out_dir);
    for (std::size_t k = 0; k < corpus.size(); ++k) {
      std::ostringstream name;
      name << "matrix_" << std::setw(4) << std::setfill('0') << k << ".json";
      Json m;
      m["rows"] = report::matrix_json(corpus[k]);
      std::ofstream(std::filesystem::path(o.out_dir) / name.str()) << report::dump(m);
    }
  }
  Json batch = report::batch_report(o.corpus, corpus);
  if (!o.out_dir.empty()) std::ofstream(std::filesystem::path(o.out_dir) / "batch.json") << report::dump(batch);
  return batch;
}

Json stats_json() {
  const GroebnerStats& s = global_groebner_stats();
  Json j = report::envelope("stats");
  j["pairs_created"] = s.pairs_created;
  j["pairs_reduced"] = s.pairs_reduced;
  j["zero_reductions"] = s.zero_reductions;
  j["basis_size"] = s.basis_size;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exceptional parameters, Cohen-Macaulay tests and volumes for pointed integer matrices"};
  app.require_subcommand(1);
  bool stats = false;
  app.add_flag("--stats", stats, "Print Groebner statistics as JSON on stderr");
  Options o;

  auto matrix_command = [&](const std::string& name, const std::string& help) {
    CLI::App* c = app.add_subcommand(name, help);
    c->fallthrough();
    c->add_option("input", o.input, "Matrix file, JSON {\"rows\": ...} or CSV; '-' for stdin")->required();
    return c;
  };
  CLI::App* analyze = matrix_command("analyze", "Full report");
  analyze->add_option("--box", o.box, "Cross-check cube radius (default from GKZ_DEGREE_BOX or the resolution)")
      ->check(CLI::NonNegativeNumber);
  matrix_command("faces", "Face lattice");
  matrix_command("toric-ideal", "Generators of the toric ideal");
  matrix_command("resolution", "Minimal free resolution of S_A");
  CLI::App* ext = matrix_command("ext", "Ext^j(S_A, R) presentations");
  ext->add_option("--index", o.ext_index, "Only Ext^j")->check(CLI::NonNegativeNumber);
  matrix_command("exceptional", "Exceptional arrangement");
  CLI::App* jump = matrix_command("is-jumping", "Rank-jump test for a rational parameter");
  jump->add_option("--beta", o.beta, "Comma separated rationals, e.g. 1,-1/2")->required();
  CLI::App* lc = matrix_command("localcoh", "dim H^i_m(S_A)_alpha by both routes");
  lc->add_option("--alpha", o.alpha, "Comma separated integers")->required();
  CLI::App* cc = matrix_command("crosscheck", "Compare both local cohomology routes over a cube");
  cc->add_option("--box", o.box, "Cube radius")->check(CLI::NonNegativeNumber);
  cc->add_flag("--entries", o.entries, "List nonzero and mismatching entries");
  matrix_command("volume", "Normalized volume and generic rank");
  CLI::App* coh = matrix_command("coherence", "Finiteness certificates for in(I_F) plus Euler forms");
  coh->add_option("--face", o.face, "Face columns, comma separated (default: every face)");
  coh->add_option("--sample", o.sample, "Sample point x, comma separated nonzero rationals");
  coh->add_option("--samples", o.samples, "Number of random odd samples")->check(CLI::PositiveNumber);
  coh->add_option("--seed", o.seed, "Seed for random samples");
  CLI::App* corpus = app.add_subcommand("corpus", "Seeded corpus and batch report");
  corpus->fallthrough();
  corpus->add_option("--seed", o.corpus.seed);
  corpus->add_option("--d-min", o.corpus.d_min);
  corpus->add_option("--d-max", o.corpus.d_max);
  corpus->add_option("--n-min", o.corpus.n_min);
  corpus->add_option("--n-max", o.corpus.n_max);
  corpus->add_option("--bound", o.corpus.bound, "Entries are drawn from [0, bound]");
  corpus->add_option("--count", o.corpus.count);
  corpus->add_flag("--homogeneous", o.corpus.homogeneous, "Fix the first row to all ones");
  corpus->add_option("--out", o.out_dir, "Directory for matrix_NNNN.json files and batch.json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  int exit_code = 0;
  Json out;
  try {
    const std::string cmd = app.get_subcommands().front()->get_name();
    if (cmd == "analyze") out = cmd_analyze(o);
    else if (cmd == "faces") out = cmd_faces(o);
    else if (cmd == "toric-ideal") out = cmd_toric_ideal(o);
    else if (cmd == "resolution") out = cmd_resolution(o);
    else if (cmd == "ext") out = cmd_ext(o);
    else if (cmd == "exceptional") out = cmd_exceptional(o);
    else if (cmd == "is-jumping") out = cmd_is_jumping(o);
    else if (cmd == "localcoh") out = cmd_localcoh(o, exit_code);
    else if (cmd == "crosscheck") out = cmd_crosscheck(o, exit_code);
    else if (cmd == "volume") out = cmd_volume(o);
    else if (cmd == "coherence") out = cmd_coherence(o);
    else out = cmd_corpus(o);
  } catch (const NotPointed& e) {
    out = report::error_json("NotPointed", e.what());
    if (e.counter_certificate) {
      Json c = Json::array();
      for (const Integer& x : *e.counter_certificate) c.push_back(x.get_si());
      out["counter_certificate"] = c;
    }
    exit_code = 2;
  } catch (const NotFullRank& e) {
    out = report::error_json("NotFullRank", e.what());
    exit_code = 2;
  } catch (const report::InvalidInput& e) {
    out = report::error_json("InvalidInput", e.what());
    exit_code = 2;
  } catch (const DimensionMismatch& e) {
    out = report::error_json("DimensionMismatch", e.what());
    exit_code = 3;
  } catch (const QueryError& e) {
    out = report::error_json("InvalidQuery", e.what());
    exit_code = 3;
  } catch (const ConventionMismatch& e) {
    out = report::error_json("ConventionMismatch", e.what());
    exit_code = 4;
  } catch (const InternalInconsistency& e) {
    out = report::error_json("InternalInconsistency", e.what());
    exit_code = 4;
  } catch (const NotToric& e) {
    out = report::error_json("NotToric", e.what());
    exit_code = 4;
  } catch (const std::invalid_argument& e) {
    out = report::error_json("InvalidQuery", e.what());
    exit_code = 3;
  } catch (const std::exception& e) {
    out = report::error_json("Error", e.what());
    exit_code = 1;
  }
  std::cout << report::dump(out);
  if (stats) std::cerr << report::dump(stats_json());
  return exit_code;
}
