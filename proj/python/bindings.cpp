#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "epsnc/cumulants.hpp"
#include "epsnc/eps_lattice.hpp"
#include "epsnc/errors.hpp"
#include "epsnc/json_io.hpp"
#include "epsnc/models.hpp"
#include "epsnc/oracles.hpp"
#include "epsnc/verification.hpp"

namespace py = pybind11;
using namespace epsnc;

namespace {

using Blocks = std::vector<std::vector<int>>;

py::object to_fraction(const Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(to_string(r));
}

// Accepts int, Fraction or a "p/q" string; floats are rejected.
Rational from_python(const py::handle& value) {
  if (py::isinstance<py::float_>(value)) throw InvalidArgument("floats are not accepted; use Fraction or 'p/q'");
  return parse_rational(py::str(value).cast<std::string>());
}

// A word is either text ("1,2:3,1:u") or a sequence of labels / (label, symbol)
// pairs, where symbol None or "unit" marks a UNIT letter.
Word word_from_python(const py::handle& obj) {
  if (py::isinstance<py::str>(obj)) return parse_word(obj.cast<std::string>());
  Word w;
  for (const auto& item : obj) {
    if (py::isinstance<py::int_>(item)) {
      w.push_back({item.cast<int>(), 0});
      continue;
    }
    const auto pair = item.cast<py::sequence>();
    if (pair.size() != 2) throw InvalidArgument("letters must be labels or (label, symbol) pairs");
    Letter l{pair[0].cast<int>(), 0};
    const py::object sym = pair[1];
    if (sym.is_none() || (py::isinstance<py::str>(sym) && (sym.cast<std::string>() == "unit"))) {
      l.symbol = Letter::kUnit;
    } else {
      l.symbol = sym.cast<int>();
      if (l.symbol < 0) throw InvalidArgument("negative generator symbol");
    }
    w.push_back(l);
  }
  return w;
}

py::list word_to_python(const Word& w) {
  py::list out;
  for (const auto& l : w) out.append(py::make_tuple(l.label, l.is_unit() ? py::object(py::none()) : py::int_(l.symbol)));
  return out;
}

DecoratedPartition decorated(const Blocks& blocks, const std::vector<int>& decoration) {
  return DecoratedPartition(SetPartition::from_blocks(static_cast<int>(decoration.size()), blocks),
                            Decoration(decoration));
}

SearchLimits limits_of(int max_n, std::size_t max_states) { return {max_states, max_n}; }

class PyModel {
 public:
  explicit PyModel(std::shared_ptr<const ModelFunctional> model)
      : model_(std::move(model)), engine_(*model_, model_->eps()) {}

  const ModelFunctional& model() const { return *model_; }
  Rational moment(const Word& w) const { return model_->moment(w); }
  Rational cumulant(const Word& w) { return engine_.cumulant(w); }

 private:
  std::shared_ptr<const ModelFunctional> model_;
  CumulantEngine engine_;
};

std::shared_ptr<PyModel> make_model(const EpsilonMatrix& eps, const py::dict& cumulants, int degree_cap) {
  std::vector<AlgebraSpec> specs;
  for (const auto& [label, kappas] : cumulants) {
    AlgebraSpec s;
    s.label = label.cast<int>();
    for (const auto& [degree, value] : kappas.cast<py::dict>()) s.cumulants[degree.cast<int>()] = from_python(value);
    specs.push_back(std::move(s));
  }
  return std::make_shared<PyModel>(std::make_shared<ModelFunctional>(eps, std::move(specs), degree_cap));
}

py::object json_to_python(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

std::vector<Rational> rationals(const py::iterable& values) {
  std::vector<Rational> out;
  for (const auto& v : values) out.push_back(from_python(v));
  return out;
}

py::list fractions(const std::vector<Rational>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_fraction(v));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "ε-noncrossing partitions and ε-cumulants with exact rational arithmetic";

  static py::exception<LimitExceeded> limit_exc(m, "LimitExceeded", PyExc_RuntimeError);
  static py::exception<LatticeViolation> lattice_exc(m, "LatticeViolation", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const LimitExceeded& e) {
      limit_exc(e.what());
    } catch (const LatticeViolation& e) {
      lattice_exc(e.what());
    } catch (const MissingEntry& e) {
      PyErr_SetString(PyExc_KeyError, e.what());
    } catch (const InvalidArgument& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<EpsilonMatrix>(m, "EpsilonMatrix")
      .def(py::init<std::vector<int>, const std::vector<std::vector<int>>&>(), py::arg("labels"), py::arg("rows"))
      .def_static("uniform", &EpsilonMatrix::uniform, py::arg("labels"), py::arg("off_diagonal"),
                  py::arg("diagonal"))
      .def_static("from_json",
                  [](const std::string& text) { return json_io::eps_from_json(nlohmann::json::parse(text)); })
      .def_property_readonly("labels",
                             [](const EpsilonMatrix& e) { return std::vector<int>(e.labels().begin(), e.labels().end()); })
      .def_property_readonly("rows", &EpsilonMatrix::rows)
      .def("__call__", &EpsilonMatrix::operator())
      .def("__eq__", [](const EpsilonMatrix& a, const EpsilonMatrix& b) { return a == b; })
      .def("__repr__", [](const EpsilonMatrix& e) { return "EpsilonMatrix(" + json_io::to_json(e).dump() + ")"; });

  m.def(
      "enumerate_eps_nc",
      [](const std::vector<int>& decoration, const EpsilonMatrix& eps, int max_n, std::size_t max_states) {
        std::vector<Blocks> out;
        for (const auto& dp : enumerate_eps_nc(Decoration(decoration), eps, limits_of(max_n, max_states))) {
          out.push_back(dp.partition.blocks());
        }
        return out;
      },
      py::arg("decoration"), py::arg("eps"), py::arg("max_n") = 8, py::arg("max_states") = 1'000'000,
      "ε-noncrossing partitions of a decoration, as lists of blocks in restricted-growth order.");

  m.def(
      "is_eps_noncrossing",
      [](const Blocks& blocks, const std::vector<int>& decoration, const EpsilonMatrix& eps, std::size_t max_states) {
        return is_eps_noncrossing(decorated(blocks, decoration), eps, limits_of(kMaxGroundSet, max_states));
      },
      py::arg("blocks"), py::arg("decoration"), py::arg("eps"), py::arg("max_states") = 1'000'000);

  m.def(
      "lattice",
      [](const std::vector<int>& decoration, const EpsilonMatrix& eps, int max_n) {
        const EpsLattice lattice(Decoration(decoration), eps, limits_of(max_n, 1'000'000));
        std::vector<Blocks> nodes;
        for (const auto& p : lattice.elements()) nodes.push_back(p.blocks());
        py::dict out;
        out["nodes"] = nodes;
        out["covers"] = lattice.cover_relations();
        return out;
      },
      py::arg("decoration"), py::arg("eps"), py::arg("max_n") = 8,
      "Elements and cover relations (index pairs) of the ε-noncrossing lattice.");

  m.def(
      "join",
      [](const Blocks& a, const Blocks& b, const std::vector<int>& decoration, const EpsilonMatrix& eps) {
        return join_eps(decorated(a, decoration), decorated(b, decoration), eps).partition.blocks();
      },
      py::arg("a"), py::arg("b"), py::arg("decoration"), py::arg("eps"));
  m.def(
      "meet",
      [](const Blocks& a, const Blocks& b, const std::vector<int>& decoration, const EpsilonMatrix& eps) {
        return meet_eps(decorated(a, decoration), decorated(b, decoration), eps).partition.blocks();
      },
      py::arg("a"), py::arg("b"), py::arg("decoration"), py::arg("eps"));

  py::class_<PyModel, std::shared_ptr<PyModel>>(m, "Model")
      .def(py::init(&make_model), py::arg("eps"), py::arg("cumulants"), py::arg("degree_cap") = 8,
           "cumulants maps each label to {degree: value}; values are int, Fraction or 'p/q'.")
      .def_static(
          "bundled",
          [](const std::string& name) {
            for (const auto& nm : bundled_models()) {
              if (nm.name == name) return std::make_shared<PyModel>(nm.model);
            }
            throw InvalidArgument("no bundled model named '" + name + "'");
          },
          py::arg("name"))
      .def_static("bundled_names",
                  [] {
                    std::vector<std::string> names;
                    for (const auto& nm : bundled_models()) names.push_back(nm.name);
                    return names;
                  })
      .def_static("from_json",
                  [](const std::string& text) {
                    return std::make_shared<PyModel>(json_io::model_from_json(nlohmann::json::parse(text)));
                  })
      .def_property_readonly("eps", [](const PyModel& p) { return p.model().eps(); })
      .def("moment", [](const PyModel& p, const py::object& w) { return to_fraction(p.moment(word_from_python(w))); })
      .def("cumulant", [](PyModel& p, const py::object& w) { return to_fraction(p.cumulant(word_from_python(w))); })
      .def("centered_moment",
           [](const PyModel& p, const py::object& w) {
             return to_fraction(centered_expand(p.model(), word_from_python(w)));
           });

  m.def(
      "cumulants",
      [](const py::dict& moments, const py::object& word, const EpsilonMatrix& eps) {
        MomentTable table;
        for (const auto& [w, value] : moments) table.set(word_from_python(w), from_python(value));
        CumulantEngine engine(table, eps);
        const Word target = word_from_python(word);
        (void)engine.cumulant(target);
        py::list out;
        for (const auto& [w, value] : engine.table().entries()) {
          out.append(py::make_tuple(word_to_python(w), to_fraction(value)));
        }
        return out;
      },
      py::arg("moments"), py::arg("word"), py::arg("eps"),
      "ε-cumulants of a word from moment data; returns (word, value) pairs for every subword used.");

  m.def(
      "verify",
      [](const std::string& suite, int max_n, int trials) {
        SuiteOptions options;
        options.max_n = max_n;
        options.trials = trials;
        Report report;
        {
          py::gil_scoped_release release;
          report = run_suite(suite, options);
        }
        return json_to_python(to_json(report, false));
      },
      py::arg("suite"), py::arg("max_n") = 4, py::arg("trials") = 20);

  m.def("suite_names", &suite_names);
  m.def("bell_number", [](int n) { return py::int_(py::str(oracles::bell_number(n).get_str())); });
  m.def("catalan_number", [](int n) { return py::int_(py::str(oracles::catalan_number(n).get_str())); });
  m.def("classical_cumulants",
        [](const py::iterable& moments) { return fractions(oracles::classical_cumulants(rationals(moments))); });
  m.def("free_cumulants",
        [](const py::iterable& moments) { return fractions(oracles::free_cumulants(rationals(moments))); });
}
