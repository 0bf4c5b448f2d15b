// Python bindings: loading and validating algebra description files, the
// cohomology tables, the randomized identity catalogue, and the planar-tree
// combinatorics.  The surface mirrors the CLI subcommands.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "homalg/algebra_file.hpp"
#include "homalg/cohomology.hpp"
#include "homalg/harness.hpp"
#include "homalg/trees.hpp"

namespace py = pybind11;

namespace {

using namespace homalg;

// Thin wrapper so Python sees one class for both kinds of algebra.
struct PyAlgebra {
  LoadedAlgebra loaded;

  bool is_hom() const { return std::holds_alternative<AlgebraPtr>(loaded); }
  const AlgebraPtr& hom() const { return std::get<AlgebraPtr>(loaded); }
  const DialgebraPtr& dlg() const { return std::get<DialgebraPtr>(loaded); }

  std::string kind() const { return is_hom() ? "hom-associative" : "hom-dialgebra"; }
  std::string name() const { return is_hom() ? hom()->name : dlg()->name; }
  int dim() const { return is_hom() ? hom()->dim : dlg()->dim; }

  std::vector<Violation> violations() const {
    return is_hom() ? validate(*hom()) : validate(*dlg());
  }
};

py::list violations_to_list(const std::vector<Violation>& violations) {
  py::list out;
  for (const Violation& v : violations) {
    py::dict row;
    row["rule"] = v.rule;
    row["indices"] = v.indices;
    row["detail"] = v.detail;
    out.append(row);
  }
  return out;
}

std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::skip: return "skip";
  }
  return "?";
}

py::list verdicts_to_list(const std::vector<Verdict>& verdicts) {
  py::list out;
  for (const Verdict& v : verdicts) {
    py::dict row;
    row["identity"] = v.identity;
    row["outcome"] = outcome_name(v.outcome);
    row["detail"] = v.detail;
    out.append(row);
  }
  return out;
}

template <class Tower>
py::list cohomology_rows(Tower& tower, int max_degree) {
  py::list rows;
  for (int n = 2; n <= max_degree; ++n) {
    py::dict row;
    row["n"] = n;
    row["cochains"] = py::int_(tower.slice(n).basis.size());
    row["coboundary_rank"] = tower.coboundary_rank(n);
    row["h"] = tower.cohomology_dimension(n);
    rows.append(row);
  }
  return rows;
}

py::dict algebra_cohomology(const PyAlgebra& self, int max_degree) {
  if (max_degree < 2) throw std::invalid_argument("max_degree must be at least 2");
  if (!self.violations().empty())
    throw std::invalid_argument(self.name() + " does not satisfy the algebra laws");
  py::dict out;
  out["name"] = self.name();
  out["kind"] = self.kind();
  if (self.is_hom()) {
    if (max_degree > 6) throw std::invalid_argument("max_degree above the supported cap 6");
    HomTower tower(HomComplex{self.hom()}, max_degree);
    out["z1"] = tower.cocycle_dimension(1);
    out["rows"] = cohomology_rows(tower, max_degree);
  } else {
    if (max_degree > 4) throw std::invalid_argument("max_degree above the supported cap 4");
    DialgTower tower(DialgComplex{self.dlg()}, max_degree);
    out["z1"] = tower.cocycle_dimension(1);
    out["rows"] = cohomology_rows(tower, max_degree);
  }
  return out;
}

py::list run_verify(const std::string& identity, std::optional<PyAlgebra> algebra,
                    uint64_t seed, int trials, int max_degree, long bound,
                    const std::string& fixture) {
  TrialConfig cfg;
  cfg.seed = seed;
  cfg.trials = trials;
  cfg.max_degree = max_degree;
  cfg.coefficient_bound = bound;
  cfg.fixture = fixture;
  FixtureRegistry reg = default_fixtures();
  if (algebra) {
    reg.algebras.clear();
    reg.dialgebras.clear();
    if (algebra->is_hom())
      reg.algebras.push_back(algebra->hom());
    else
      reg.dialgebras.push_back(algebra->dlg());
  }
  Session session(cfg, std::move(reg));
  return verdicts_to_list(identity == "all" ? session.run_all()
                                            : std::vector<Verdict>{session.check(identity)});
}

// Looks a label up among the enumerations; tree sizes are capped well before
// label collisions could matter.
trees::Tree tree_from_label(const std::string& label) {
  for (int n = 0; n <= 8; ++n) {
    for (const trees::Tree& y : trees::enumerate_trees(n)) {
      if (y.label() == label) return y;
    }
  }
  throw std::invalid_argument("no tree with label " + label + " (vertex counts 0..8)");
}

}  // namespace

PYBIND11_MODULE(homalg, m) {
  m.doc() = "Exact-rational engine for twisted operads, braces, and cohomology of "
            "hom-associative algebras and hom-dialgebras";

  py::register_exception<FileError>(m, "FileError");

  py::class_<PyAlgebra>(m, "Algebra")
      .def_property_readonly("name", &PyAlgebra::name)
      .def_property_readonly("kind", &PyAlgebra::kind)
      .def_property_readonly("dim", &PyAlgebra::dim)
      .def("validate",
           [](const PyAlgebra& self) { return violations_to_list(self.violations()); },
           "Law violations as dicts with rule, indices, detail; empty means valid")
      .def("is_valid", [](const PyAlgebra& self) { return self.violations().empty(); })
      .def("cohomology", &algebra_cohomology, py::arg("max_degree") = 3,
           "Cochain dimensions, coboundary ranks, and cohomology dimensions up to max_degree")
      .def("to_json", [](const PyAlgebra& self) { return serialize(self.loaded); },
           "Serialize back to the description-file format")
      .def("__repr__", [](const PyAlgebra& self) {
        return "<Algebra " + self.name() + " kind=" + self.kind() +
               " dim=" + std::to_string(self.dim()) + ">";
      });

  m.def("load", [](const std::string& path) { return PyAlgebra{load_algebra_file(path)}; },
        py::arg("path"), "Load an algebra description file");
  m.def("loads",
        [](const std::string& text, const std::string& name) {
          return PyAlgebra{load_algebra_text(text, name)};
        },
        py::arg("text"), py::arg("name") = "<string>",
        "Parse an algebra description from a JSON string");

  m.def("catalogue", [] { return identity_catalogue(); },
        "Names of the checkable identity families, in execution order");
  m.def("verify", &run_verify, py::arg("identity") = "all", py::arg("algebra") = py::none(),
        py::arg("seed") = uint64_t{1729}, py::arg("trials") = 25, py::arg("max_degree") = 4,
        py::arg("bound") = 3L, py::arg("fixture") = "all",
        "Run one identity family (or 'all') and return verdict dicts; pass an Algebra to "
        "replace the shipped fixtures");

  m.def("tree_labels",
        [](int n) {
          std::vector<std::string> out;
          for (const trees::Tree& y : trees::enumerate_trees(n)) out.push_back(y.label());
          return out;
        },
        py::arg("n"), "Labels of the planar binary trees with n interior vertices");
  m.def("tree_faces",
        [](const std::string& label) {
          const trees::Tree y = tree_from_label(label);
          std::vector<std::string> out;
          for (int i = 0; i <= y.vertices(); ++i) out.push_back(trees::face(y, i).label());
          return out;
        },
        py::arg("label"), "Labels of the faces d_0..d_n of the tree with the given label");
  m.def("tree_bullets",
        [](const std::string& label) {
          const trees::Tree y = tree_from_label(label);
          std::vector<std::string> out;
          for (int i = 0; i <= y.vertices(); ++i)
            out.push_back(trees::product_name(trees::bullet(y, i)));
          return out;
        },
        py::arg("label"), "Orientation symbols at positions 0..n of the given tree");
}
