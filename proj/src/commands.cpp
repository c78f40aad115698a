#include "mutlab/commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "mutlab/explorer.hpp"
#include "mutlab/json_io.hpp"

namespace mutlab::cli {

namespace {

using io::json;

template <typename F>
int guarded(const Io& io, F&& body) {
  try {
    return body();
  } catch (const OverflowError& e) {
    io.err << "overflow: " << e.what() << "\n";
    return kOverflow;
  } catch (const ValidationError& e) {
    io.err << "invalid input: " << e.what() << "\n";
    return kValidation;
  } catch (const BudgetExceeded& e) {
    io.err << "budget exceeded: " << e.what() << "\n";
    return kValidation;
  }
}

/// Companion for a seed: the supplied one (validated against B) or the
/// explicit sign formula.
Companion companion_of(const io::MatrixDocument& doc, const YSeed& seed) {
  if (doc.companion) {
    Companion a(*doc.companion, seed.matrix().symmetrizer());
    require_companion_of(a, seed.matrix());
    return a;
  }
  return explicit_companion(seed);
}

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

std::string path_string(const std::vector<std::size_t>& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "->" : "") << p[i] + 1;
  return os.str();
}

std::string cut_string(const EdgeCut& cut) {
  if (cut.edges.empty()) return "(none)";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, j] : cut.edges) {
    os << (first ? "" : " ") << "{" << i + 1 << "," << j + 1 << "}";
    first = false;
  }
  return os.str();
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int cmd_mutate(const std::string& input_text, const std::optional<std::string>& word_text, const Io& io) {
  return guarded(io, [&] {
    const io::MatrixDocument doc = io::parse_matrix_text(input_text);
    std::vector<Int> letters;
    if (word_text)
      letters = io::parse_word_list(*word_text);
    else if (doc.word)
      letters = *doc.word;
    const MutationWord word = MutationWord::from_one_based(letters, doc.matrix.size());
    const YSeed result = apply_word(doc.seed(), word);

    Companion a = explicit_companion(result);
    if (doc.is_initial() && is_acyclic(diagram_of(doc.matrix))) {
      const Companion paired = pairing_companion(result, cartan_from_acyclic(doc.matrix));
      if (paired != a) {
        io.err << "verification failed: explicit companion differs from pairing companion\n";
        return static_cast<int>(kVerificationFailed);
      }
    }
    json j = io::seed_to_json(result, a);
    j["word"] = word.to_one_based();
    io.out << io::dump(j);
    return static_cast<int>(kOk);
  });
}

int cmd_check(const std::string& input_text, const CycleOptions& cycles, const Io& io) {
  return guarded(io, [&] {
    const io::MatrixDocument doc = io::parse_matrix_text(input_text);
    const YSeed seed = doc.seed();
    const Companion a = companion_of(doc, seed);
    const ExchangeMatrix& b = seed.matrix();
    const Diagram g = diagram_of(b);
    const EdgeCut cut = positive_edges(b, a);
    const ConditionReport r = check_companion_conditions(b, a, cycles);
    const bool cut_ok = is_admissible_cut(g, cut, cycles);

    io.out << "companion: " << (doc.companion ? "supplied" : "explicit") << "\n";
    io.out << "positive edges: " << cut_string(cut) << "\n";
    io.out << "[" << verdict(r.paths_ok) << "] " << (cycles.paths == PathMode::induced ? "induced " : "")
           << "directed paths have at most one positive edge\n";
    if (r.path_witness) io.out << "  witness path: " << path_string(*r.path_witness) << "\n";
    io.out << "[" << verdict(r.oriented_cycles_ok) << "] oriented cycles have exactly one positive edge\n";
    if (r.oriented_witness) io.out << "  witness cycle: " << to_string(*r.oriented_witness) << "\n";
    io.out << "[" << verdict(r.nonoriented_cycles_ok) << "] non-oriented cycles have an even number of positive edges\n";
    if (r.nonoriented_witness) io.out << "  witness cycle: " << to_string(*r.nonoriented_witness) << "\n";
    io.out << "[" << verdict(cut_ok) << "] positive edges form an admissible cut\n";
    return static_cast<int>(r.all() && cut_ok ? kOk : kVerificationFailed);
  });
}

int cmd_walk(const std::string& input_text, const std::string& id, std::size_t depth, std::size_t trials,
             std::uint64_t rng_seed, const CycleOptions& cycles, const Io& io) {
  return guarded(io, [&] {
    const io::MatrixDocument doc = io::parse_matrix_text(input_text);
    if (!doc.is_initial()) throw ValidationError("walks start from the initial seed; drop \"c\" from the input");
    const auto reports = random_walks(doc.matrix, depth, trials, rng_seed, WalkOptions{id, cycles});
    json walks = json::array();
    std::size_t passed = 0;
    for (const WalkReport& r : reports) {
      walks.push_back(io::walk_to_json(r));
      passed += r.verdict() ? 1 : 0;
    }
    json j{{"initial", id},   {"B", io::matrix_rows(doc.matrix.entries())},
           {"depth", depth},  {"trials", trials},
           {"rng_seed", rng_seed}, {"passed", passed},
           {"failed", reports.size() - passed}, {"walks", walks}};
    io.out << io::dump(j);
    return static_cast<int>(passed == reports.size() ? kOk : kVerificationFailed);
  });
}

int cmd_explore(const std::string& input_text, std::size_t depth, std::size_t budget, bool permutation_classes,
                const Io& io) {
  return guarded(io, [&] {
    const io::MatrixDocument doc = io::parse_matrix_text(input_text);
    if (!doc.is_initial()) throw ValidationError("exploration starts from the initial seed; drop \"c\" from the input");
    const ExploreResult result = bfs_explore(doc.matrix, depth, ExploreOptions{budget, permutation_classes});
    io.out << io::dump(io::explore_to_json(result, depth));
    return static_cast<int>(kOk);
  });
}

int cmd_dot(const std::string& input_text, const Io& io) {
  return guarded(io, [&] {
    const io::MatrixDocument doc = io::parse_matrix_text(input_text);
    const YSeed seed = doc.seed();
    io.out << to_dot(diagram_of(seed.matrix()), companion_of(doc, seed));
    return static_cast<int>(kOk);
  });
}

int cmd_oracle(const std::string& input_text, OrientedRule rule, const CycleOptions& cycles, const Io& io,
               std::ostream& json_out) {
  return guarded(io, [&] {
    const io::MatrixDocument doc = io::parse_matrix_text(input_text);
    const OracleResult result = enumerate_admissible_companions(doc.matrix, OracleOptions{rule, cycles});
    const bool exists = !result.companions.empty();

    bool equivalent = true;
    json companions = json::array();
    for (const Companion& a : result.companions) {
      companions.push_back(io::matrix_rows(a.entries()));
      equivalent = equivalent && sign_equivalent(result.companions.front(), a).has_value();
    }
    if (exists)
      io.out << "FOUND " << result.companions.size() << " admissible companion"
             << (result.companions.size() == 1 ? "" : "s") << " (" << result.assignments_checked
             << " assignments checked)\n";
    else
      io.out << "NO admissible companion (" << result.assignments_checked << " assignments checked)\n";

    json j{{"B", io::matrix_rows(doc.matrix.entries())},
           {"exists", exists},
           {"assignments_checked", result.assignments_checked},
           {"rule", rule == OrientedRule::exactly_one ? "exactly-one" : "odd"},
           {"companions", companions},
           {"pairwise_sign_equivalent", equivalent}};
    json_out << io::dump(j);
    return static_cast<int>(kOk);
  });
}

}  // namespace mutlab::cli
