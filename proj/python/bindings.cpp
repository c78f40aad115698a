#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mutlab/companion.hpp"
#include "mutlab/diagram.hpp"
#include "mutlab/explorer.hpp"
#include "mutlab/mutation.hpp"
#include "mutlab/oracle.hpp"
#include "mutlab/roots.hpp"

namespace py = pybind11;
using namespace mutlab;

// Matrices cross the boundary as lists of rows; indices are 1-based on the
// Python side, matching the file formats.

namespace {

using Rows = std::vector<std::vector<Int>>;

ExchangeMatrix exchange(const Rows& b) { return ExchangeMatrix(IntMatrix::from_rows(b)); }

YSeed seed_of(const Rows& b, const std::optional<Rows>& c) {
  const ExchangeMatrix m = exchange(b);
  if (!c) return initial_seed(m);
  std::vector<CVector> cv;
  for (const auto& row : *c) cv.emplace_back(row);
  return YSeed(std::move(cv), m);
}

Rows c_rows(const YSeed& s) {
  Rows out;
  for (const auto& c : s.cvectors()) out.push_back(c.coords());
  return out;
}

py::dict seed_dict(const YSeed& s) {
  py::dict d;
  d["B"] = s.matrix().entries().rows();
  d["c"] = c_rows(s);
  d["D"] = s.matrix().symmetrizer();
  return d;
}

std::size_t index0(Int k, std::size_t n) {
  if (k < 1 || static_cast<std::size_t>(k) > n)
    throw IndexOutOfRange("index " + std::to_string(k) + " out of range 1.." + std::to_string(n));
  return static_cast<std::size_t>(k - 1);
}

Companion companion_for(const Rows& a, const ExchangeMatrix& b) {
  Companion out(IntMatrix::from_rows(a), b.symmetrizer());
  require_companion_of(out, b);
  return out;
}

py::dict conditions_dict(const ConditionReport& r) {
  py::dict d;
  d["directed_paths"] = r.paths_ok;
  d["oriented_cycles"] = r.oriented_cycles_ok;
  d["nonoriented_cycles"] = r.nonoriented_cycles_ok;
  d["admissible"] = r.admissible();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Y-seed mutation, c-vectors and quasi-Cartan companions";

  static py::exception<ValidationError> validation_error(m, "ValidationError", PyExc_ValueError);
  static py::exception<OverflowError> overflow_error(m, "IntegerOverflow", PyExc_OverflowError);
  static py::exception<BudgetExceeded> budget_error(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ValidationError& e) {
      PyErr_SetString(validation_error.ptr(), e.what());
    } catch (const OverflowError& e) {
      PyErr_SetString(overflow_error.ptr(), e.what());
    } catch (const BudgetExceeded& e) {
      PyErr_SetString(budget_error.ptr(), e.what());
    }
  });

  m.def("find_symmetrizer", [](const Rows& b) { return find_symmetrizer(IntMatrix::from_rows(b)); }, py::arg("B"));

  m.def(
      "mutate_matrix",
      [](const Rows& b, Int k) {
        const ExchangeMatrix m = exchange(b);
        return mutate_matrix(m, index0(k, m.size())).entries().rows();
      },
      py::arg("B"), py::arg("k"));

  m.def(
      "mutate_seed",
      [](const Rows& b, Int k, const std::optional<Rows>& c) {
        const YSeed s = seed_of(b, c);
        return seed_dict(mutate_seed(s, index0(k, s.size())));
      },
      py::arg("B"), py::arg("k"), py::arg("c") = py::none());

  m.def(
      "apply_word",
      [](const Rows& b, const std::vector<Int>& word, const std::optional<Rows>& c) {
        const YSeed s = seed_of(b, c);
        return seed_dict(apply_word(s, MutationWord::from_one_based(word, s.size())));
      },
      py::arg("B"), py::arg("word"), py::arg("c") = py::none());

  m.def("cartan_from_acyclic", [](const Rows& b) { return cartan_from_acyclic(exchange(b)).entries().rows(); },
        py::arg("B0"));

  m.def(
      "real_roots_up_to_height",
      [](const Rows& b0, Int h) {
        Rows out;
        for (const RootVector& r : real_roots_up_to_height(cartan_from_acyclic(exchange(b0)), h))
          out.push_back(r.coords());
        return out;
      },
      py::arg("B0"), py::arg("height"));

  m.def(
      "pairing_companion",
      [](const Rows& b0, const std::vector<Int>& word) {
        const ExchangeMatrix m = exchange(b0);
        const YSeed s = apply_word(initial_seed(m), MutationWord::from_one_based(word, m.size()));
        return pairing_companion(s, cartan_from_acyclic(m)).entries().rows();
      },
      py::arg("B0"), py::arg("word"));

  m.def(
      "explicit_companion",
      [](const Rows& b, const std::optional<Rows>& c) { return explicit_companion(seed_of(b, c)).entries().rows(); },
      py::arg("B"), py::arg("c") = py::none());

  m.def(
      "companion_mutation",
      [](const Rows& a, const Rows& b, Int k, int eps) {
        const ExchangeMatrix m = exchange(b);
        return companion_mutation(companion_for(a, m), m, index0(k, m.size()), eps).entries().rows();
      },
      py::arg("A"), py::arg("B"), py::arg("k"), py::arg("eps"));

  m.def(
      "sign_equivalent",
      [](const Rows& a1, const Rows& a2, const Rows& b) {
        const ExchangeMatrix m = exchange(b);
        return sign_equivalent(companion_for(a1, m), companion_for(a2, m));
      },
      py::arg("A1"), py::arg("A2"), py::arg("B"));

  m.def(
      "positive_edges",
      [](const Rows& b, const Rows& a) {
        const ExchangeMatrix m = exchange(b);
        std::vector<std::pair<Int, Int>> out;
        for (const auto& [i, j] : positive_edges(m, companion_for(a, m)).edges)
          out.emplace_back(static_cast<Int>(i) + 1, static_cast<Int>(j) + 1);
        return out;
      },
      py::arg("B"), py::arg("A"));

  m.def(
      "check_companion_conditions",
      [](const Rows& b, const Rows& a, const std::string& mode, const std::string& paths) {
        const ExchangeMatrix m = exchange(b);
        CycleOptions o;
        o.mode = mode == "chordless" ? CycleMode::chordless : CycleMode::all_simple;
        o.paths = paths == "all-simple" ? PathMode::all_simple : PathMode::induced;
        return conditions_dict(check_companion_conditions(m, companion_for(a, m), o));
      },
      py::arg("B"), py::arg("A"), py::arg("mode") = "all-simple", py::arg("paths") = "induced");

  m.def(
      "enumerate_cycles",
      [](const Rows& b, const std::string& mode) {
        CycleOptions o;
        o.mode = mode == "chordless" ? CycleMode::chordless : CycleMode::all_simple;
        std::vector<std::pair<std::vector<Int>, bool>> out;
        for (const Cycle& c : enumerate_cycles(diagram_of(exchange(b)), o)) {
          std::vector<Int> v;
          for (std::size_t x : c.vertices) v.push_back(static_cast<Int>(x) + 1);
          out.emplace_back(std::move(v), c.oriented);
        }
        return out;
      },
      py::arg("B"), py::arg("mode") = "all-simple");

  m.def(
      "enumerate_admissible_companions",
      [](const Rows& b) {
        std::vector<Rows> out;
        for (const Companion& a : enumerate_admissible_companions(exchange(b)).companions)
          out.push_back(a.entries().rows());
        return out;
      },
      py::arg("B"));

  m.def(
      "exists_admissible_companion",
      [](const Rows& b) {
        const ExistenceResult r = exists_admissible_companion(exchange(b));
        return std::make_pair(r.exists, r.assignments_checked);
      },
      py::arg("B"), "Returns (exists, assignments_checked).");

  m.def("figure1_matrix", [] { return figure1_matrix().entries().rows(); });

  m.def(
      "to_dot",
      [](const Rows& b, const std::optional<Rows>& a) {
        const ExchangeMatrix m = exchange(b);
        std::optional<Companion> comp;
        if (a) comp = companion_for(*a, m);
        return to_dot(diagram_of(m), comp);
      },
      py::arg("B"), py::arg("A") = py::none());

  m.def(
      "random_walks",
      [](const Rows& b0, std::size_t depth, std::size_t trials, std::uint64_t rng_seed) {
        py::list out;
        for (const WalkReport& r : random_walks(exchange(b0), depth, trials, rng_seed)) {
          py::dict d;
          d["word"] = r.word.to_one_based();
          d["verdict"] = r.verdict();
          out.append(d);
        }
        return out;
      },
      py::arg("B0"), py::arg("depth"), py::arg("trials"), py::arg("rng_seed"));

  m.def(
      "bfs_explore",
      [](const Rows& b0, std::size_t depth) {
        const ExploreResult r = bfs_explore(exchange(b0), depth);
        py::dict d;
        d["distinct_seeds"] = r.seeds.size();
        d["levels"] = r.level_sizes;
        Rows cvs;
        for (const auto& [c, count] : r.cvector_counts) cvs.push_back(c);
        d["cvectors"] = cvs;
        return d;
      },
      py::arg("B0"), py::arg("depth"));
}
