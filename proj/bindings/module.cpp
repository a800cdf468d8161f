#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "keypoly/io.hpp"

namespace py = pybind11;
using namespace keypoly;

namespace {

Rational rat(const std::string& s) { return parse_rational(s); }

Value value_arg(const py::object& obj) {
    if (py::isinstance<Value>(obj)) return obj.cast<Value>();
    return Value::parse(py::cast<std::string>(py::str(obj)));
}

Poly poly_arg(const py::object& obj) {
    if (py::isinstance<Poly>(obj)) return obj.cast<Poly>();
    return Poly::parse(py::cast<std::string>(py::str(obj)));
}

std::vector<Poly> poly_list(const py::iterable& it) {
    std::vector<Poly> out;
    for (py::handle h : it) out.push_back(poly_arg(py::reinterpret_borrow<py::object>(h)));
    return out;
}

SearchBound bound_arg(int max_degree, const std::string& height) {
    return SearchBound{max_degree, Integer(height)};
}

py::object json_to_py(const Json& j) {
    const py::module_ json = py::module_::import("json");
    return json.attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_keypoly, m) {
    m.doc() = "exact valuations, key polynomials and truncations on Q[x]";

    py::class_<Value>(m, "Value")
        .def(py::init([](const std::string& s) { return Value::parse(s); }))
        .def_static("infinity", &Value::infinity)
        .def_property_readonly("is_infinity", &Value::is_infinity)
        .def_property_readonly("major", [](const Value& v) { return to_string(v.major()); })
        .def_property_readonly("minor", [](const Value& v) { return to_string(v.minor()); })
        .def("__add__", [](const Value& a, const Value& b) { return a + b; })
        .def("__eq__", [](const Value& a, const Value& b) { return a == b; })
        .def("__lt__", [](const Value& a, const Value& b) { return a < b; })
        .def("__le__", [](const Value& a, const Value& b) { return a <= b; })
        .def("__gt__", [](const Value& a, const Value& b) { return a > b; })
        .def("__ge__", [](const Value& a, const Value& b) { return a >= b; })
        .def("__hash__", [](const Value& v) { return py::hash(py::str(v.str())); })
        .def("divided_by", &Value::divided_by)
        .def("times", &Value::times)
        .def("is_torsion_over_base", &Value::is_torsion_over_base)
        .def("__str__", &Value::str)
        .def("__repr__", [](const Value& v) { return "Value('" + v.str() + "')"; });

    py::class_<Poly>(m, "Poly")
        .def(py::init([](const std::string& s) { return Poly::parse(s); }))
        .def_static("from_coeffs",
                    [](const std::vector<std::string>& cs) {
                        std::vector<Rational> coeffs;
                        for (const std::string& c : cs) coeffs.push_back(rat(c));
                        return Poly::from_coeffs(std::move(coeffs));
                    })
        .def_static("from_roots",
                    [](const std::vector<std::string>& rs) {
                        std::vector<Rational> roots;
                        for (const std::string& r : rs) roots.push_back(rat(r));
                        return Poly::from_roots(roots);
                    })
        .def_property_readonly("degree", &Poly::degree)
        .def_property_readonly("is_monic", &Poly::is_monic)
        .def_property_readonly("is_zero", &Poly::is_zero)
        .def("coeff", [](const Poly& p, std::size_t i) { return to_string(p.coeff(i)); })
        .def("evaluate", [](const Poly& p, const std::string& a) { return to_string(p.evaluate(rat(a))); })
        .def("__add__", [](const Poly& a, const Poly& b) { return a + b; })
        .def("__sub__", [](const Poly& a, const Poly& b) { return a - b; })
        .def("__mul__", [](const Poly& a, const Poly& b) { return a * b; })
        .def("__neg__", [](const Poly& a) { return -a; })
        .def("__eq__", [](const Poly& a, const Poly& b) { return a == b; })
        .def("__hash__", [](const Poly& p) { return py::hash(py::str(p.str())); })
        .def("divmod", [](const Poly& p, const Poly& q) { return Poly::divmod(p, q); })
        .def("q_expansion", [](const Poly& p, const py::object& q) { return p.q_expansion(poly_arg(q)); })
        .def("hasse_derivative", &Poly::hasse_derivative)
        .def("taylor_shift", [](const Poly& p, const std::string& b) { return p.taylor_shift(rat(b)); })
        .def("__str__", &Poly::str)
        .def("__repr__", [](const Poly& p) { return "Poly('" + p.str() + "')"; });

    py::class_<Valuation>(m, "Valuation")
        .def_static("monomial",
                    [](long p, const std::string& b, const py::object& delta) {
                        return Valuation(MonomialValuation(BaseValuation(Integer(p)), rat(b), value_arg(delta)));
                    },
                    py::arg("p"), py::arg("b"), py::arg("delta"))
        .def_static("chain",
                    [](long p, const std::string& b, const py::object& delta,
                       const std::vector<std::pair<py::object, py::object>>& steps) {
                        MonomialValuation depth0(BaseValuation(Integer(p)), rat(b), value_arg(delta));
                        std::vector<ChainStep> chain_steps;
                        for (const auto& [q, gamma] : steps)
                            chain_steps.push_back({poly_arg(q), value_arg(gamma)});
                        return Valuation(AugmentedChain(std::move(depth0), std::move(chain_steps)));
                    },
                    py::arg("p"), py::arg("b"), py::arg("delta"), py::arg("steps"))
        .def_static("pcs",
                    [](long p, const std::vector<std::string>& elems) {
                        std::vector<Rational> rs;
                        for (const std::string& e : elems) rs.push_back(rat(e));
                        return Valuation(PcsPrefix(BaseValuation(Integer(p)), std::move(rs)));
                    },
                    py::arg("p"), py::arg("elems"))
        .def_static("from_json",
                    [](const std::string& text) { return valuation_from_json(Json::parse(text)); })
        .def("to_json", [](const Valuation& v) { return valuation_to_json(v).dump(); })
        .def_property_readonly("kind",
                               [](const Valuation& v) {
                                   switch (v.kind()) {
                                       case Valuation::Kind::Monomial: return "monomial";
                                       case Valuation::Kind::Chain: return "chain";
                                       default: return "pcs";
                                   }
                               })
        .def("__call__", [](const Valuation& v, const py::object& f) { return v(poly_arg(f)); })
        .def("__repr__", [](const Valuation& v) { return "Valuation(" + valuation_to_json(v).dump() + ")"; });

    m.def("newton_polygon", [](const py::object& f, long p) {
        return json_to_py(to_json(newton_polygon(poly_arg(f), Integer(p))));
    });
    m.def("is_irreducible_bounded", [](const py::object& f, const std::string& height) {
        return json_to_py(to_json(is_irreducible_bounded(poly_arg(f), Integer(height))));
    });
    m.def("truncate", [](const Valuation& V, const py::object& q, const py::object& f) {
        return json_to_py(to_json(truncate(V, poly_arg(q), poly_arg(f))));
    });
    m.def("epsilon", [](const Valuation& V, const py::object& f) {
        return json_to_py(to_json(epsilon(V, poly_arg(f))));
    });
    m.def("delta_depth1", [](const Valuation& V, const py::object& f) {
        return delta_depth1(V.monomial(), poly_arg(f));
    });
    m.def("epsilon_delta_crosscheck", [](const Valuation& V, const py::object& f) {
        return json_to_py(to_json(epsilon_delta_crosscheck(V.monomial(), poly_arg(f))));
    });
    m.def("truncation_equals",
          [](const Valuation& V, const py::object& q, const py::iterable& corpus, const std::string& note) {
              return json_to_py(to_json(truncation_equals(V, poly_arg(q), poly_list(corpus), note)));
          },
          py::arg("valuation"), py::arg("q"), py::arg("corpus"), py::arg("note") = "");
    m.def("truncation_multiplicativity_scan",
          [](const Valuation& V, const py::object& q, const py::iterable& pairs) {
              std::vector<std::pair<Poly, Poly>> ps;
              for (py::handle h : pairs) {
                  auto t = py::cast<py::tuple>(h);
                  ps.emplace_back(poly_arg(t[0]), poly_arg(t[1]));
              }
              return json_to_py(to_json(truncation_multiplicativity_scan(V, poly_arg(q), ps)));
          });
    m.def("is_key",
          [](const Valuation& V, const py::object& Q, int max_degree, const std::string& height) {
              return json_to_py(to_json(is_key(V, poly_arg(Q), bound_arg(max_degree, height))));
          },
          py::arg("valuation"), py::arg("Q"), py::arg("max_degree") = 2, py::arg("height") = "64");
    m.def("minimal_pair_check",
          [](const Valuation& V, const py::object& Q, int max_degree, const std::string& height) {
              return json_to_py(to_json(minimal_pair_check(V, poly_arg(Q), bound_arg(max_degree, height))));
          },
          py::arg("valuation"), py::arg("Q"), py::arg("max_degree") = 2, py::arg("height") = "64");
    m.def("theorem1_crosscheck",
          [](const Valuation& V, const py::object& Q, int max_degree, const std::string& height) {
              return json_to_py(to_json(theorem1_crosscheck(V, poly_arg(Q), bound_arg(max_degree, height))));
          },
          py::arg("valuation"), py::arg("Q"), py::arg("max_degree") = 2, py::arg("height") = "64");
    m.def("classify", [](const Valuation& V) { return json_to_py(to_json(classify(V))); });
    m.def("minimal_degree_torsionfree_q",
          [](const Valuation& V, int max_degree, const std::string& height, const py::iterable& corpus) {
              return json_to_py(to_json(minimal_degree_torsionfree_q(V, bound_arg(max_degree, height),
                                                                     poly_list(corpus))));
          },
          py::arg("valuation"), py::arg("max_degree"), py::arg("height"), py::arg("corpus"));
    m.def("pcs_check", [](const Valuation& V) { return pcs_check(V.pcs()); });
    m.def("pcs_value_trace", [](const Valuation& V, const py::object& f) {
        return json_to_py(to_json(pcs_value_trace(V.pcs(), poly_arg(f))));
    });
    m.def("pcs_from_chain",
          [](const std::vector<std::tuple<long, std::string, py::object>>& stages) {
              std::vector<MonomialValuation> ws;
              for (const auto& [p, b, delta] : stages)
                  ws.emplace_back(BaseValuation(Integer(p)), rat(b), value_arg(delta));
              return json_to_py(to_json(pcs_from_chain(ws)));
          },
          "stages given as (p, center, eps) triples");
    m.def("make_corpus",
          [](int max_degree, long height, std::uint64_t seed, std::size_t count, bool monic, int min_degree) {
              return make_poly_corpus(CorpusSpec{max_degree, height, seed}, count, monic, min_degree);
          },
          py::arg("max_degree") = 6, py::arg("height") = 16, py::arg("seed") = 1, py::arg("count") = 100,
          py::arg("monic") = false, py::arg("min_degree") = 0);

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
