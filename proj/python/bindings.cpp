#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/operators.h>

#include "tdlab/constructions.hpp"
#include "tdlab/corpus.hpp"
#include "tdlab/error.hpp"
#include "tdlab/free_word.hpp"
#include "tdlab/htbuilder.hpp"
#include "tdlab/marked.hpp"
#include "tdlab/mixed_word.hpp"
#include "tdlab/perm.hpp"
#include "tdlab/perm_group.hpp"
#include "tdlab/stallings.hpp"

namespace py = pybind11;
using namespace tdlab;

namespace {

PermGroup make_group(std::size_t n, const std::vector<FinitaryPerm>& gens) {
  return PermGroup(n, gens);
}

}  // namespace

PYBIND11_MODULE(_tdlab, m) {
  m.doc() = "Permutation groups, mixed identities, free group subgroup graphs and "
            "certified highly transitive actions.";

  py::register_exception<BoundExceeded>(m, "BoundExceeded", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

  py::class_<FinitaryPerm>(m, "Perm")
      .def(py::init<>())
      .def_static("parse", [](const std::string& s) { return parse_perm(s); })
      .def_static("from_cycles", &FinitaryPerm::from_cycles)
      .def("__call__", &FinitaryPerm::operator())
      .def("inverse", &FinitaryPerm::inverse)
      .def("support", &FinitaryPerm::support)
      .def("is_identity", &FinitaryPerm::is_identity)
      .def("is_even", [](const FinitaryPerm& p) { return is_even(p); })
      .def("cycles", [](const FinitaryPerm& p) { return cycle_form(p); })
      .def("__mul__", [](const FinitaryPerm& a, const FinitaryPerm& b) { return a * b; })
      .def("__pow__", [](const FinitaryPerm& a, long long e) { return power(a, e); })
      .def(py::self == py::self)
      .def("__hash__", [](const FinitaryPerm& p) { return py::hash(py::str(to_string(p))); })
      .def("__str__", [](const FinitaryPerm& p) { return to_string(p); })
      .def("__repr__", [](const FinitaryPerm& p) { return "Perm('" + to_string(p) + "')"; });

  m.def("check_alt_sentence", &check_alt_sentence);

  py::class_<PermGroup>(m, "PermGroup")
      .def(py::init(&make_group), py::arg("degree"), py::arg("generators"))
      .def_property_readonly("degree", &PermGroup::domain_size)
      .def_property_readonly("generators", &PermGroup::generators)
      .def("order", &PermGroup::order)
      .def("contains", py::overload_cast<const FinitaryPerm&>(&PermGroup::contains, py::const_))
      .def("orbit", &PermGroup::orbit)
      .def("is_transitive", &PermGroup::is_transitive)
      .def("basic_orbit_sizes", &PermGroup::basic_orbit_sizes);

  m.def("is_k_transitive", &is_k_transitive, py::arg("group"), py::arg("k"));
  m.def("transitivity_of_action", &transitivity_of_action);
  m.def("is_primitive", [](const PermGroup& G) {
    return G.is_transitive() && !minimal_block_system(G).has_value();
  });
  m.def("transitivity_degree", [](const PermGroup& G, std::uint64_t budget) {
    return transitivity_degree_finite(G, budget).degree;
  }, py::arg("group"), py::arg("budget") = 60);
  m.def("verify_cameron", [](const PermGroup& G, std::size_t k, std::uint64_t max_order) {
    auto r = verify_cameron(G, k, max_order);
    py::list entries;
    for (const auto& e : r.entries)
      entries.append(py::dict(py::arg("order") = e.order, py::arg("transitivity") = e.transitivity,
                              py::arg("branch") = e.branch));
    return py::dict(py::arg("passed") = r.passed, py::arg("entries") = entries);
  }, py::arg("group"), py::arg("k"), py::arg("max_order") = 10000);
  m.def("burnside_td_upper_bound", &burnside_td_upper_bound);

  m.def("is_mixed_identity", [](const PermGroup& G, const std::string& word,
                                std::uint64_t budget, unsigned threads) {
    auto table = FiniteGroupTable::from_perm_group(G);
    auto r = is_mixed_identity(table, parse_mixed_word(table, word), budget, threads);
    py::object witness = py::none();
    if (r.witness) {
      py::list w;
      for (auto e : *r.witness) w.append(table.label(e));
      witness = w;
    }
    return py::make_tuple(r.holds, witness);
  }, py::arg("group"), py::arg("word"), py::arg("budget") = 10'000'000, py::arg("threads") = 1);

  m.def("parse_free_word", [](const std::string& s) { return parse_free_word(s); });
  m.def("word_letters", &to_letters);

  py::class_<CoreGraph>(m, "SubgroupGraph")
      .def(py::init([](const std::vector<FreeWord>& words, int k) {
        return CoreGraph::from_words(words, k);
      }), py::arg("words"), py::arg("rank"))
      .def("contains", &CoreGraph::contains)
      .def("same_coset", &CoreGraph::same_coset)
      .def("index", &CoreGraph::index)
      .def("basis", &CoreGraph::basis)
      .def("num_vertices", &CoreGraph::num_vertices)
      .def("coset_representatives", [](const CoreGraph& H, std::size_t limit) {
        return H.coset_action_prefix(limit).representatives;
      })
      .def(py::self == py::self);

  m.def("build_ht_report", [](int rank, std::size_t stages, std::uint64_t seed, bool shuffle) {
    HtConfig c;
    c.rank = rank;
    c.stages = stages;
    c.seed = seed;
    c.shuffle = shuffle;
    return report_to_json(run_builder(c));
  }, py::arg("rank") = 2, py::arg("stages") = 6, py::arg("seed") = 0, py::arg("shuffle") = false);
  m.def("verify_report", [](const std::string& text) {
    auto r = verify_report_json(text);
    return py::make_tuple(r.ok, r.failures);
  });

  m.def("affine_action", &affine_action);
  m.def("affine_f2_action", &affine_f2_action);

  m.def("load_group", [](const std::string& name) {
    auto g = load_corpus_group(resolve_group_path(name));
    return g.group();
  });
  m.def("marked_distance", [](const std::string& a, const std::string& b, std::size_t radius) {
    auto ma = MarkedGroup::from_corpus(load_corpus_group(resolve_group_path(a)));
    auto mb = MarkedGroup::from_corpus(load_corpus_group(resolve_group_path(b)));
    return marked_distance(ma, mb, radius).to_string();
  }, py::arg("a"), py::arg("b"), py::arg("radius") = 10);
}
