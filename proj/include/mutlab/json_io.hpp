#pragma once

// JSON file formats. All indices on the wire are 1-based.
//
//   matrix:    {"n": 3, "B": [[...],...], "c": [[...],...], "indexing": 1}
//   companion: {"A": [[...],...]}   (alongside the matrix keys)
//   word:      {"word": [2, 1, 3]}
//
// Objects are emitted with sorted keys so output is byte-stable.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mutlab/companion.hpp"
#include "mutlab/diagram.hpp"
#include "mutlab/explorer.hpp"
#include "mutlab/mutation.hpp"
#include "mutlab/oracle.hpp"

namespace mutlab::io {

using json = nlohmann::json;

struct MatrixDocument {
  ExchangeMatrix matrix;
  std::optional<std::vector<CVector>> cvectors;
  std::optional<IntMatrix> companion;
  std::optional<std::vector<Int>> word;

  /// c-vectors if present, otherwise the standard basis.
  YSeed seed() const;
  /// True when "c" is absent or is the identity.
  bool is_initial() const;
};

/// Throws ValidationError with a message naming the offending key.
MatrixDocument parse_matrix_document(const json& doc);
MatrixDocument parse_matrix_text(const std::string& text);

/// Reads {"word": [...]} or a bare array.
std::vector<Int> parse_word(const json& doc);
/// "2,1,3" or "2 1 3"; empty string is the empty word.
std::vector<Int> parse_word_list(const std::string& text);

json matrix_rows(const IntMatrix& m);
json cvector_rows(const std::vector<CVector>& c);
json seed_to_json(const YSeed& seed, const std::optional<Companion>& a = std::nullopt);
json word_to_json(const MutationWord& w);
json edges_to_json(const EdgeCut& cut);
json cycle_to_json(const Cycle& cycle);
json conditions_to_json(const ConditionReport& report);
json step_to_json(const StepRecord& record);
json walk_to_json(const WalkReport& report);
json explore_to_json(const ExploreResult& result, std::size_t depth);

/// Deterministic serialization used for every emitted document.
std::string dump(const json& j);

}  // namespace mutlab::io
