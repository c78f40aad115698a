#include "mutlab/json_io.hpp"

#include <algorithm>
#include <sstream>

namespace mutlab::io {

namespace {

std::vector<std::vector<Int>> read_rows(const json& doc, const char* key, std::size_t n) {
  const json& v = doc.at(key);
  if (!v.is_array() || v.size() != n)
    throw ValidationError(std::string("\"") + key + "\" must be an array of " + std::to_string(n) + " rows");
  std::vector<std::vector<Int>> rows;
  for (const json& row : v) {
    if (!row.is_array() || row.size() != n)
      throw ValidationError(std::string("every row of \"") + key + "\" must have " + std::to_string(n) + " entries");
    std::vector<Int> r;
    for (const json& x : row) {
      if (!x.is_number_integer()) throw ValidationError(std::string("\"") + key + "\" entries must be integers");
      r.push_back(x.get<Int>());
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

YSeed MatrixDocument::seed() const { return cvectors ? YSeed(*cvectors, matrix) : initial_seed(matrix); }

bool MatrixDocument::is_initial() const { return !cvectors || seed() == initial_seed(matrix); }

namespace {

MatrixDocument parse_document(const json& doc) {
  if (!doc.is_object()) throw ValidationError("matrix document must be a JSON object");
  if (!doc.contains("B")) throw ValidationError("matrix document is missing \"B\"");
  if (doc.contains("indexing") && doc.at("indexing") != 1)
    throw ValidationError("only \"indexing\": 1 is supported");
  const json& b = doc.at("B");
  if (!b.is_array() || b.empty()) throw ValidationError("\"B\" must be a nonempty array of rows");
  const std::size_t n = b.size();
  if (doc.contains("n") && (!doc.at("n").is_number_integer() || doc.at("n").get<Int>() != static_cast<Int>(n)))
    throw ValidationError("\"n\" does not match the number of rows of \"B\"");

  MatrixDocument out{ExchangeMatrix(IntMatrix::from_rows(read_rows(doc, "B", n))), std::nullopt, std::nullopt,
                     std::nullopt};
  if (doc.contains("c") && !doc.at("c").is_null()) {
    std::vector<CVector> c;
    for (auto& row : read_rows(doc, "c", n)) c.emplace_back(std::move(row));
    out.cvectors = std::move(c);
  }
  if (doc.contains("A") && !doc.at("A").is_null()) out.companion = IntMatrix::from_rows(read_rows(doc, "A", n));
  if (doc.contains("word")) out.word = parse_word(doc.at("word"));
  return out;
}

}  // namespace

MatrixDocument parse_matrix_document(const json& doc) {
  try {
    return parse_document(doc);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("invalid matrix document: ") + e.what());
  }
}

MatrixDocument parse_matrix_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  return parse_matrix_document(doc);
}

std::vector<Int> parse_word(const json& doc) {
  const json& arr = doc.is_object() ? doc.at("word") : doc;
  if (!arr.is_array()) throw ValidationError("word must be an array of integers");
  std::vector<Int> out;
  for (const json& x : arr) {
    if (!x.is_number_integer()) throw ValidationError("word letters must be integers");
    out.push_back(x.get<Int>());
  }
  return out;
}

std::vector<Int> parse_word_list(const std::string& text) {
  std::string s = text;
  for (char& ch : s)
    if (ch == ',' || ch == '[' || ch == ']') ch = ' ';
  std::istringstream is(s);
  std::vector<Int> out;
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    Int v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw ValidationError("word letter '" + tok + "' is not an integer");
    out.push_back(v);
  }
  return out;
}

json matrix_rows(const IntMatrix& m) { return m.rows(); }

json cvector_rows(const std::vector<CVector>& c) {
  json rows = json::array();
  for (const CVector& v : c) rows.push_back(v.coords());
  return rows;
}

json seed_to_json(const YSeed& seed, const std::optional<Companion>& a) {
  json j;
  j["n"] = seed.size();
  j["B"] = matrix_rows(seed.matrix().entries());
  j["c"] = cvector_rows(seed.cvectors());
  j["D"] = seed.matrix().symmetrizer();
  j["indexing"] = 1;
  if (a) j["A"] = matrix_rows(a->entries());
  return j;
}

json word_to_json(const MutationWord& w) { return json{{"word", w.to_one_based()}}; }

json edges_to_json(const EdgeCut& cut) {
  json out = json::array();
  for (const auto& [i, j] : cut.edges) out.push_back({i + 1, j + 1});
  return out;
}

json cycle_to_json(const Cycle& cycle) {
  json v = json::array();
  for (std::size_t x : cycle.vertices) v.push_back(x + 1);
  return json{{"vertices", v}, {"oriented", cycle.oriented}};
}

json conditions_to_json(const ConditionReport& r) {
  json j;
  j["directed_paths"] = r.paths_ok;
  j["oriented_cycles"] = r.oriented_cycles_ok;
  j["nonoriented_cycles"] = r.nonoriented_cycles_ok;
  j["admissible"] = r.admissible();
  if (r.path_witness) {
    json p = json::array();
    for (std::size_t v : *r.path_witness) p.push_back(v + 1);
    j["path_witness"] = p;
  }
  if (r.oriented_witness) j["oriented_witness"] = cycle_to_json(*r.oriented_witness);
  if (r.nonoriented_witness) j["nonoriented_witness"] = cycle_to_json(*r.nonoriented_witness);
  return j;
}

json step_to_json(const StepRecord& record) {
  json checks;
  for (const auto& [c, ok] : record.results) checks[check_name(c)] = ok;
  json failures = json::array();
  for (const Witness& w : record.failures) {
    json f{{"check", check_name(w.check)}, {"message", w.message}};
    if (w.matrix) f["matrix"] = matrix_rows(*w.matrix);
    if (w.vector) f["vector"] = *w.vector;
    failures.push_back(std::move(f));
  }
  return json{{"k", record.k + 1}, {"checks", checks}, {"failures", failures}, {"passed", record.passed()}};
}

json walk_to_json(const WalkReport& report) {
  json steps = json::array();
  for (const StepRecord& r : report.records) steps.push_back(step_to_json(r));
  return json{{"initial", report.initial_id},
              {"word", report.word.to_one_based()},
              {"steps", steps},
              {"verdict", report.verdict()}};
}

json explore_to_json(const ExploreResult& result, std::size_t depth) {
  json cv = json::array();
  for (const auto& [coords, count] : result.cvector_counts) cv.push_back(json{{"c", coords}, {"count", count}});
  json j{{"depth", depth},
         {"distinct_seeds", result.seeds.size()},
         {"levels", result.level_sizes},
         {"cvectors", cv},
         {"distinct_cvectors", result.cvector_counts.size()}};
  if (result.permutation_classes) j["permutation_classes"] = *result.permutation_classes;
  return j;
}

namespace {

bool is_flat(const json& j) {
  return std::none_of(j.begin(), j.end(), [](const json& x) { return x.is_structured(); });
}

// Two-space indentation, except that arrays without nested containers stay
// on one line so matrices read row by row.
void write(std::string& out, const json& j, std::size_t indent) {
  const std::string pad(indent + 2, ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      out += pad + json(it.key()).dump() + ": ";
      write(out, it.value(), indent + 2);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + "}";
  } else if (j.is_array() && !j.empty() && !is_flat(j)) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      write(out, j[i], indent + 2);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + "]";
  } else if (j.is_array()) {
    out += "[";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
    out += "]";
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string dump(const json& j) {
  std::string out;
  write(out, j, 0);
  return out + "\n";
}

}  // namespace mutlab::io
