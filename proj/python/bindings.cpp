#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rtm/basis.hpp"
#include "rtm/diamond.hpp"
#include "rtm/relations.hpp"
#include "rtm/rtm.hpp"
#include "rtm/selfcheck.hpp"

namespace py = pybind11;
using namespace rtm;

namespace {

py::object fraction(const Rational& q) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(q.get_str());
}

Rational to_rational(const py::handle& value) {
  if (py::isinstance<py::bool_>(value)) throw py::type_error("expected a rational number, got bool");
  if (py::isinstance<py::int_>(value)) return Rational(py::str(value).cast<std::string>());
  if (py::hasattr(value, "numerator") && py::hasattr(value, "denominator")) {
    Rational q(mpz_class(py::str(value.attr("numerator")).cast<std::string>()),
               mpz_class(py::str(value.attr("denominator")).cast<std::string>()));
    q.canonicalize();
    return q;
  }
  if (py::isinstance<py::str>(value)) {
    const auto text = value.cast<std::string>();
    std::size_t pos = 0;
    const bool negative = !text.empty() && text[0] == '-';
    if (negative) pos = 1;
    Rational q = parse_unsigned_rational(text, pos);
    if (pos != text.size()) throw ParseError("trailing characters in rational", pos);
    return negative ? Rational(-q) : q;
  }
  throw py::type_error("expected int, Fraction or str");
}

py::dict forest_terms(const HElem& a) {
  py::dict out;
  for (const auto& [f, c] : a.terms()) out[py::cast(f)] = fraction(c);
  return out;
}

py::dict tensor_terms(const TensorElem& u) {
  py::dict out;
  for (const auto& [k, c] : u.terms()) out[py::make_tuple(k.first, k.second)] = fraction(c);
  return out;
}

py::dict word_terms(const Poly& p) {
  py::dict out;
  for (const auto& [w, c] : p.terms()) out[py::str(to_string(w))] = fraction(c);
  return out;
}

py::list matrix_rows(const RationalMatrix& m) {
  py::list rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    py::list row;
    for (const auto& q : m.row(r)) row.append(fraction(q));
    rows.append(row);
  }
  return rows;
}

template <class T>
std::vector<std::string> strings(const std::vector<T>& items) {
  std::vector<std::string> out;
  out.reserve(items.size());
  for (const auto& item : items) out.push_back(to_string(item));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Rooted trees, the Connes-Kreimer coproduct and rooted tree maps on Q<x,y>.";

  static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
  static py::exception<DomainError> domain_error(m, "DomainError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::set_error(parse_error, e.what());
    } catch (const DomainError& e) {
      py::set_error(domain_error, e.what());
    }
  });

  py::class_<Forest>(m, "Forest", "A commutative product of canonical rooted trees.")
      .def(py::init<>())
      .def(py::init([](const std::string& text) { return parse_forest(text); }), py::arg("text"))
      .def_property_readonly("degree", &Forest::degree)
      .def_property_readonly("code", &Forest::code)
      .def_property_readonly("trees", [](const Forest& f) {
        std::vector<Forest> out(f.trees().begin(), f.trees().end());
        return out;
      })
      .def("is_tree", [](const Forest& f) { return f.trees().size() == 1; })
      .def("bplus", [](const Forest& f) { return Forest(bplus(f)); }, "Graft onto a new root.")
      .def("__mul__", [](const Forest& a, const Forest& b) { return forest_product(a, b); })
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self)
      .def("__hash__", [](const Forest& f) { return std::hash<Forest>{}(f); })
      .def("__str__", &print_forest)
      .def("__repr__", [](const Forest& f) { return "Forest('" + print_forest(f) + "')"; });
  py::implicitly_convertible<py::str, Forest>();

  py::class_<HElem>(m, "Element", "Rational linear combination of forests.")
      .def(py::init<>())
      .def(py::init<const Forest&>())
      .def(py::init([](const std::string& text) { return parse_helem(text); }), py::arg("text"))
      .def("terms", &forest_terms)
      .def("coefficient", [](const HElem& a, const Forest& f) { return fraction(a.coefficient(f)); })
      .def("is_zero", &HElem::is_zero)
      .def("is_homogeneous", &HElem::is_homogeneous)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(-py::self)
      .def("__mul__", [](const HElem& a, const HElem& b) { return h_mul(a, b); })
      .def("__mul__", [](const HElem& a, const py::object& c) { return to_rational(c) * a; })
      .def("__rmul__", [](const HElem& a, const py::object& c) { return to_rational(c) * a; })
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def("__bool__", [](const HElem& a) { return !a.is_zero(); })
      .def("__str__", [](const HElem& a) { return to_string(a); })
      .def("__repr__", [](const HElem& a) { return "Element('" + to_string(a) + "')"; });
  py::implicitly_convertible<Forest, HElem>();
  py::implicitly_convertible<py::str, HElem>();

  py::class_<Poly>(m, "Poly", "Rational noncommutative polynomial in x and y.")
      .def(py::init<>())
      .def(py::init([](const std::string& text) { return parse_poly(text); }), py::arg("text"))
      .def("terms", &word_terms)
      .def("coefficient", [](const Poly& p, const std::string& w) { return fraction(p.coefficient(Word::parse(w))); })
      .def("is_zero", &Poly::is_zero)
      .def("is_homogeneous", &Poly::is_homogeneous)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(-py::self)
      .def("__mul__", [](const Poly& a, const Poly& b) { return a * b; }, "Concatenation product.")
      .def("__mul__", [](const Poly& a, const py::object& c) { return to_rational(c) * a; })
      .def("__rmul__", [](const Poly& a, const py::object& c) { return to_rational(c) * a; })
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def("__bool__", [](const Poly& p) { return !p.is_zero(); })
      .def("__str__", [](const Poly& p) { return to_string(p); })
      .def("__repr__", [](const Poly& p) { return "Poly('" + to_string(p) + "')"; });
  py::implicitly_convertible<py::str, Poly>();

  m.def("enumerate_trees", [](std::size_t n) {
    std::vector<Forest> out;
    for (const auto& t : enumerate_trees(n)) out.emplace_back(t);
    return out;
  }, py::arg("n"), "All rooted trees with n vertices, in canonical order.");
  m.def("enumerate_forests", &enumerate_forests, py::arg("n"));
  m.def("ladder", &ladder, py::arg("n"));
  m.def("chain_over", &chain_over, py::arg("forest"), py::arg("k"));

  m.def("coproduct", [](const HElem& a) { return tensor_terms(coproduct(a)); }, py::arg("element"),
        "Coproduct as a dict mapping (left, right) forest pairs to coefficients.");
  m.def("apply", [](const HElem& f, const Poly& w) { return rtm_apply(f, w); }, py::arg("element"), py::arg("poly"),
        "Evaluate the rooted tree map of an element on a polynomial.");
  m.def("sigma", [](const HElem& a) { return sigma(a); }, py::arg("element"));
  m.def("diamond", [](const Poly& a, const Poly& b) { return diamond(a, b); }, py::arg("a"), py::arg("b"));
  m.def("op_R", [](const Poly& p, std::size_t k) { return op_R_pow(p, k); }, py::arg("poly"), py::arg("k") = 1);

  m.def("fmn", &build_fmn, py::arg("m"), py::arg("n"));
  m.def("verify_fmn", [](std::size_t mm, std::size_t n) {
    const auto r = verify_fmn(mm, n);
    py::dict out;
    out["m"] = r.m;
    out["n"] = r.n;
    out["relation"] = r.relation;
    out["sigma_is_zero"] = r.sigma_is_zero;
    out["rho_x_is_zero"] = r.rho_x_is_zero;
    out["r_identity_holds"] = r.r_identity_holds;
    out["all_hold"] = r.all_hold();
    return out;
  }, py::arg("m"), py::arg("n"));
  m.def("verify_r_identity", &verify_r_identity, py::arg("m"), py::arg("n"));

  m.def("basis_forests", &basis_forests, py::arg("d"));
  m.def("hy_words", [](std::size_t d) { return strings(hy_words(d)); }, py::arg("d"));
  m.def("basis_matrix", [](std::size_t d) { return matrix_rows(basis_matrix(d)); }, py::arg("d"));
  m.def("check_mod2_invertible", &check_mod2_invertible, py::arg("d"));
  m.def("decompose", [](const HElem& f, std::optional<std::size_t> d) {
    std::size_t deg = 0;
    if (d) {
      deg = *d;
    } else if (!f.is_zero()) {
      deg = f.terms().begin()->first.degree();
    }
    py::dict out;
    for (const auto& [u, c] : decompose(f, deg)) out[py::cast(u)] = fraction(c);
    return out;
  }, py::arg("element"), py::arg("d") = py::none());
  m.def("sigma_kernel", &sigma_kernel, py::arg("d"));

  m.def("selfcheck", [](std::size_t max_degree) {
    std::vector<std::tuple<std::string, bool, std::string>> out;
    for (const auto& r : run_selfcheck(max_degree)) out.emplace_back(r.name, r.passed, r.detail);
    return out;
  }, py::arg("max_degree") = 5);
}
