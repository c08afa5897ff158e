#include "report.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

namespace gkz::report {

namespace {

long long checked_entry(const Json& v) {
  if (!v.is_number_integer()) throw InvalidInput("matrix entries must be integers");
  long long x = v.get<long long>();
  if (x > 1000000 || x < -1000000) throw InvalidInput("matrix entry out of range: " + std::to_string(x));
  return x;
}

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
  if (rows.empty() || rows.front().empty()) throw InvalidInput("empty matrix");
  const std::size_t cols = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != cols) throw InvalidInput("rows have different lengths");
  if (cols > kMaxVars) throw InvalidInput("at most " + std::to_string(kMaxVars) + " columns are supported");
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<long>(rows[i][j]);
  return m;
}

long long parse_integer(const std::string& raw) {
  std::size_t b = raw.find_first_not_of(" \t\r"), e = raw.find_last_not_of(" \t\r");
  if (b == std::string::npos) throw InvalidInput("empty field");
  std::string s = raw.substr(b, e - b + 1);
  std::size_t used = 0;
  long long x = 0;
  try {
    x = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw InvalidInput("not an integer: '" + s + "'");
  }
  if (used != s.size()) throw InvalidInput("not an integer: '" + s + "'");
  if (x > 1000000 || x < -1000000) throw InvalidInput("matrix entry out of range: " + s);
  return x;
}

std::vector<long long> split_integers(const std::string& line) {
  std::vector<long long> out;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_integer(item));
  if (!line.empty() && line.back() == ',') throw InvalidInput("trailing comma");
  return out;
}

long long to_ll(const Integer& x) {
  if (!x.fits_slong_p()) throw std::overflow_error("integer too large for the report");
  return x.get_si();
}

Json int_vector_json(const IntVector& v) {
  Json a = Json::array();
  for (const Integer& x : v) a.push_back(to_ll(x));
  return a;
}

Json columns_json(const std::vector<std::size_t>& cols) {
  Json a = Json::array();
  for (std::size_t c : cols) a.push_back(c);
  return a;
}

}  // namespace

IntMatrix parse_matrix(const std::string& text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw InvalidInput("empty input");
  std::vector<std::vector<long long>> rows;
  if (text[first] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
    if (!j.contains("rows") || !j["rows"].is_array()) throw InvalidInput("expected {\"rows\": [[...], ...]}");
    for (const Json& r : j["rows"]) {
      if (!r.is_array()) throw InvalidInput("each row must be an array");
      std::vector<long long> row;
      for (const Json& v : r) row.push_back(checked_entry(v));
      rows.push_back(std::move(row));
    }
  } else {
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
      std::size_t b = line.find_first_not_of(" \t\r");
      if (b == std::string::npos || line[b] == '#') continue;
      rows.push_back(split_integers(line));
    }
  }
  return from_rows(rows);
}

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

Degree parse_degree(const std::string& text) {
  Degree out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_integer(item));
  if (out.empty()) throw InvalidInput("empty degree");
  return out;
}

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(int_vector_json(m.row(i)));
  return rows;
}

Json degree_json(const Degree& v) { return Json(v); }

Json face_json(const Face& f) {
  Json j;
  j["columns"] = columns_json(f.columns);
  j["dimension"] = f.dimension;
  j["functional"] = int_vector_json(f.functional);
  return j;
}

Json stratum_json(const ExceptionalStratum& s) {
  Json j;
  j["shift"] = degree_json(s.shift);
  j["face"] = columns_json(s.face.columns);
  j["face_dimension"] = s.face.dimension;
  j["indices"] = Json(s.indices);
  return j;
}

Json faces_json(const RingContext& ctx) {
  const FaceLattice& fl = ctx.faces();
  Json j;
  std::vector<std::size_t> fvec(ctx.d() + 1, 0);
  for (const Face& f : fl.faces) ++fvec[f.dimension];
  j["count"] = fl.faces.size();
  j["f_vector"] = Json(fvec);
  Json list = Json::array();
  for (const Face& f : fl.faces) list.push_back(face_json(f));
  j["faces"] = list;
  return j;
}

Json toric_ideal_json(const RingContext& ctx, const GradedIdeal& ia) {
  Json j;
  j["variables"] = Json(ctx.variable_names());
  Json gens = Json::array();
  for (const GradedPolynomial& g : ia.generators()) gens.push_back(to_string(g, ctx.variable_names()));
  j["count"] = ia.generators().size();
  j["generators"] = gens;
  return j;
}

Json volume_json(const PointedMatrix& a) {
  Json j;
  j["normalized_volume"] = to_ll(normalized_volume(a));
  j["lattice_index"] = to_ll(lattice_index(a.matrix()));
  j["generic_rank"] = to_ll(generic_rank(a));
  return j;
}

Json resolution_json(const HomologicalData& data) {
  Json j;
  j["ranks"] = Json(data.resolution.ranks());
  j["projective_dimension"] = data.projective_dimension();
  j["minimal"] = data.resolution.minimal;
  Json shifts = Json::array();
  for (const GradedFreeModule& f : data.resolution.modules) {
    Json s = Json::array();
    for (const Degree& v : f.shifts) s.push_back(degree_json(v));
    shifts.push_back(s);
  }
  j["shifts"] = shifts;
  return j;
}

Json ext_json(const HomologicalData& data, std::size_t j) {
  const GradedPresentation& e = data.ext[j];
  Json out;
  out["index"] = j;
  out["zero"] = e.is_zero();
  Json shifts = Json::array();
  for (const Degree& v : e.generators().shifts) shifts.push_back(degree_json(v));
  out["generator_shifts"] = shifts;
  Json rels = Json::array();
  for (const Vec& r : e.relations()) rels.push_back(to_string(r, data.ctx->variable_names(), true));
  out["relations"] = rels;
  return out;
}

Json arrangement_json(const ExceptionalArrangement& e) {
  Json a = Json::array();
  for (const ExceptionalStratum& s : e.strata) a.push_back(stratum_json(s));
  return a;
}

Json crosscheck_json(const CrossCheckReport& rep, bool with_entries) {
  Json j;
  j["box"] = rep.box;
  j["degrees_checked"] = rep.degrees_checked;
  j["nonzero_below_top"] = rep.nonzero.size();
  j["mismatches"] = rep.mismatches.size();
  j["differential_ok"] = rep.differential_ok;
  if (with_entries) {
    auto entries = [](const std::vector<CrossCheckEntry>& v) {
      Json a = Json::array();
      for (const CrossCheckEntry& e : v) {
        Json x;
        x["alpha"] = degree_json(e.alpha);
        x["i"] = e.i;
        x["ishida"] = e.ishida;
        x["ext"] = e.ext;
        a.push_back(x);
      }
      return a;
    };
    j["nonzero_entries"] = entries(rep.nonzero);
    j["mismatch_entries"] = entries(rep.mismatches);
  }
  return j;
}

Json envelope(const std::string& kind) {
  Json j;
  j["schema"] = "gkz." + kind + "/" + kSchemaVersion;
  return j;
}

Json analyze(const IntMatrix& m, long long box) {
  auto ctx = std::make_shared<const RingContext>(make_pointed_matrix(m));
  HomologicalData data = compute_homological_data(ctx);
  ExceptionalArrangement e = exceptional_arrangement(data);
  CohenMacaulayCertificate cm = is_cohen_macaulay(data, e);
  CrossCheckReport rep = cross_check(data, box < 0 ? default_box(data) : box);

  Json j = envelope("analysis");
  j["matrix"] = matrix_json(m);
  j["d"] = ctx->d();
  j["n"] = ctx->n();
  Json p;
  p["certificate"] = int_vector_json(ctx->matrix().certificate());
  p["column_heights"] = Json(ctx->heights());
  j["pointedness"] = p;
  Json fsum;
  Json fj = faces_json(*ctx);
  fsum["count"] = fj["count"];
  fsum["f_vector"] = fj["f_vector"];
  j["faces"] = fsum;
  j["toric_ideal"] = toric_ideal_json(*ctx, data.toric);
  j["volume"] = volume_json(ctx->matrix());
  j["epsilon"] = degree_json(ctx->epsilon());
  j["resolution"] = resolution_json(data);
  Json c;
  c["cohen_macaulay"] = cm.cohen_macaulay;
  c["projective_dimension"] = cm.projective_dimension;
  c["expected"] = cm.expected;
  j["cohen_macaulay"] = c;
  j["exceptional_arrangement"] = arrangement_json(e);
  j["cross_check"] = crosscheck_json(rep, false);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json error_json(const std::string& kind, const std::string& message) {
  Json j = envelope("error");
  j["error"] = kind;
  j["message"] = message;
  return j;
}

std::vector<IntMatrix> generate_corpus(const CorpusSpec& spec) {
  if (spec.d_min < 1 || spec.d_min > spec.d_max || spec.n_min > spec.n_max || spec.n_max > kMaxVars ||
      spec.n_max < spec.d_min || spec.bound < 1)
    throw InvalidInput("inconsistent corpus spec");
  std::mt19937_64 rng(spec.seed);
  std::vector<IntMatrix> out;
  std::size_t attempts = 0;
  while (out.size() < spec.count) {
    if (++attempts > 1000 * (spec.count + 1)) throw InvalidInput("corpus spec admits too few pointed matrices");
    std::uniform_int_distribution<std::size_t> dd(spec.d_min, spec.d_max);
    const std::size_t d = dd(rng);
    std::uniform_int_distribution<std::size_t> nn(std::max(spec.n_min, d), std::max(spec.n_max, d));
    const std::size_t n = nn(rng);
    std::uniform_int_distribution<long> entry(0, static_cast<long>(spec.bound));
    IntMatrix m(d, n);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = spec.homogeneous && i == 0 ? 1L : entry(rng);
    try {
      make_pointed_matrix(m);
    } catch (const NotPointed&) {
      continue;
    } catch (const NotFullRank&) {
      continue;
    }
    out.push_back(std::move(m));
  }
  return out;
}

Json corpus_spec_json(const CorpusSpec& spec) {
  Json j;
  j["d"] = Json::array({spec.d_min, spec.d_max});
  j["n"] = Json::array({spec.n_min, spec.n_max});
  j["bound"] = spec.bound;
  j["count"] = spec.count;
  j["seed"] = spec.seed;
  j["homogeneous"] = spec.homogeneous;
  return j;
}

Json batch_report(const CorpusSpec& spec, const std::vector<IntMatrix>& corpus) {
  Json j = envelope("batch");
  j["spec"] = corpus_spec_json(spec);
  Json items = Json::array();
  std::size_t cm_consistent = 0, porism = 0, crosscheck_clean = 0;
  for (const IntMatrix& m : corpus) {
    auto ctx = std::make_shared<const RingContext>(make_pointed_matrix(m));
    HomologicalData data = compute_homological_data(ctx);
    ExceptionalArrangement e = exceptional_arrangement(data);
    CohenMacaulayCertificate cm = is_cohen_macaulay(data, e);
    CrossCheckReport rep = cross_check(data, default_box(data), false);
    bool codim_ok = true;
    for (const ExceptionalStratum& s : e.strata) codim_ok = codim_ok && s.face.dimension + 2 <= ctx->d();
    const bool consistent = cm.cohen_macaulay == e.empty() && cm.cohen_macaulay == (cm.projective_dimension == cm.expected);
    cm_consistent += consistent;
    porism += codim_ok;
    crosscheck_clean += rep.mismatches.empty() && rep.differential_ok;
    Json x;
    x["matrix"] = matrix_json(m);
    x["normalized_volume"] = to_ll(normalized_volume(ctx->matrix()));
    x["projective_dimension"] = cm.projective_dimension;
    x["cohen_macaulay"] = cm.cohen_macaulay;
    x["strata"] = e.strata.size();
    x["cross_check"] = crosscheck_json(rep, false);
    items.push_back(x);
  }
  Json agg;
  agg["matrices"] = corpus.size();
  agg["cm_consistent"] = cm_consistent;
  agg["codimension_at_least_two"] = porism;
  agg["cross_check_clean"] = crosscheck_clean;
  agg["all_ok"] = cm_consistent == corpus.size() && porism == corpus.size() && crosscheck_clean == corpus.size();
  j["summary"] = agg;
  j["matrices"] = items;
  return j;
}

}  // namespace gkz::report
