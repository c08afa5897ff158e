#pragma once

// JSON reports (schema v1), matrix input parsing and the seeded corpus
// generator shared by the gkz command line tool and the acceptance runner.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "gkz/rankjump.hpp"

namespace gkz::report {

using Json = nlohmann::ordered_json;

constexpr const char* kSchemaVersion = "v1";

class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// Accepts {"rows": [[...], ...]} or comma separated rows; '#' starts a
/// comment line in CSV. Throws InvalidInput.
IntMatrix parse_matrix(const std::string& text);
/// Reads a file, or standard input for "-".
std::string read_input(const std::string& path);
/// Degree from "a,b,c" with integer coordinates.
Degree parse_degree(const std::string& text);

Json matrix_json(const IntMatrix& m);
Json degree_json(const Degree& v);
Json face_json(const Face& f);
Json stratum_json(const ExceptionalStratum& s);
Json faces_json(const RingContext& ctx);
Json toric_ideal_json(const RingContext& ctx, const GradedIdeal& ia);
Json volume_json(const PointedMatrix& a);
Json resolution_json(const HomologicalData& data);
Json ext_json(const HomologicalData& data, std::size_t j);
Json arrangement_json(const ExceptionalArrangement& e);
Json crosscheck_json(const CrossCheckReport& rep, bool with_entries);

/// Wraps a payload with the schema tag: {"schema": "gkz.<kind>/v1", ...}.
Json envelope(const std::string& kind);

/// Full analysis of one matrix. Deterministic for a given matrix and box;
/// box < 0 selects default_box.
Json analyze(const IntMatrix& m, long long box);

/// Canonical serialization: two-space indent and a trailing newline.
std::string dump(const Json& j);

/// Machine-readable error report: {"schema", "error", "message", ...}.
Json error_json(const std::string& kind, const std::string& message);

struct CorpusSpec {
  std::size_t d_min = 1, d_max = 3;
  std::size_t n_min = 2, n_max = 5;
  long long bound = 4;  // entries drawn from [0, bound]
  std::size_t count = 25;
  std::uint64_t seed = 1;
  bool homogeneous = false;  // first row all ones
};

/// Pointed rank-d matrices by rejection sampling from a seeded mt19937_64.
/// Identical specs give identical corpora.
std::vector<IntMatrix> generate_corpus(const CorpusSpec& spec);

Json corpus_spec_json(const CorpusSpec& spec);

/// Per-matrix summary plus aggregate invariant checks over the whole batch.
Json batch_report(const CorpusSpec& spec, const std::vector<IntMatrix>& corpus);

}  // namespace gkz::report
