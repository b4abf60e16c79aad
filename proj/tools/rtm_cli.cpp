// Command-line front end for the rooted tree map library.
//
// Exit codes: 0 success, 1 a verification reported failure, 2 usage or parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "rtm/basis.hpp"
#include "rtm/diamond.hpp"
#include "rtm/relations.hpp"
#include "rtm/rtm.hpp"
#include "rtm/selfcheck.hpp"

namespace {

using nlohmann::json;
using namespace rtm;

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsageError = 2;

json terms_json(const HElem& a) {
  json out = json::array();
  for (const auto& [f, c] : a.terms()) out.push_back({{"forest", f.code()}, {"coefficient", to_string(c)}});
  return out;
}

json terms_json(const Poly& p) {
  json out = json::array();
  for (const auto& [w, c] : p.terms()) out.push_back({{"word", to_string(w)}, {"coefficient", to_string(c)}});
  return out;
}

json terms_json(const TensorElem& u) {
  json out = json::array();
  for (const auto& [k, c] : u.terms())
    out.push_back({{"left", k.first.code()}, {"right", k.second.code()}, {"coefficient", to_string(c)}});
  return out;
}

json matrix_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (const auto& q : m.row(r)) {
      if (q.get_den() == 1 && q.get_num().fits_slong_p())
        row.push_back(q.get_num().get_si());
      else
        row.push_back(to_string(q));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void print_matrix(std::ostream& os, const RationalMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << to_string(m(r, c));
    os << '\n';
  }
}

class Output {
 public:
  Output(bool as_json, std::string command) : as_json_(as_json) {
    doc_["schema"] = 1;
    doc_["command"] = std::move(command);
  }

  bool json_mode() const { return as_json_; }
  json& doc() { return doc_; }
  std::ostream& text() { return text_; }

  void flush() {
    if (as_json_)
      std::cout << doc_.dump(2) << '\n';
    else
      std::cout << text_.str();
  }

 private:
  bool as_json_;
  json doc_;
  std::ostringstream text_;
};

std::size_t homogeneous_degree(const HElem& f) {
  if (f.is_zero()) throw DomainError("cannot infer the degree of the zero element");
  const std::size_t d = f.terms().begin()->first.degree();
  if (!f.is_homogeneous(d)) throw DomainError("element is not homogeneous");
  if (d == 0) throw DomainError("element has degree 0");
  return d;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rooted tree maps: Hopf algebra of rooted trees acting on Q<x,y>"};
  app.fallthrough();
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit JSON (schema 1) instead of text");

  std::size_t n_arg = 0, m_arg = 0;
  bool count_only = false, verify = false, show_matrix = false, check_mod2 = false;
  std::string helem_arg, poly_arg, poly_arg2;
  std::size_t max_degree = 5;
  const auto kPositive = CLI::Range(std::size_t{1}, std::size_t{64});
  const auto kNonNegative = CLI::Range(std::size_t{0}, std::size_t{64});

  auto* trees = app.add_subcommand("trees", "Enumerate rooted trees with N vertices");
  trees->add_option("N", n_arg)->required()->check(kPositive);
  trees->add_flag("--count-only", count_only);

  auto* forests = app.add_subcommand("forests", "Enumerate rooted forests with N vertices");
  forests->add_option("N", n_arg)->required()->check(kNonNegative);
  forests->add_flag("--count-only", count_only);

  auto* cop = app.add_subcommand("coproduct", "Coproduct of an element of H");
  cop->add_option("helem", helem_arg)->required();

  auto* apply = app.add_subcommand("apply", "Apply the rooted tree map of an element to a polynomial");
  apply->add_option("helem", helem_arg)->required();
  apply->add_option("poly", poly_arg)->required();

  auto* sig = app.add_subcommand("sigma", "Polynomial F_f of an element of H");
  sig->add_option("helem", helem_arg)->required();

  auto* dia = app.add_subcommand("diamond", "Diamond product of two polynomials");
  dia->add_option("left", poly_arg)->required();
  dia->add_option("right", poly_arg2)->required();

  auto* rel = app.add_subcommand("relation", "Build the relation f_{M,N}");
  rel->add_option("M", m_arg)->required()->check(kPositive);
  rel->add_option("N", n_arg)->required()->check(kPositive);
  rel->add_flag("--verify", verify);

  auto* bas = app.add_subcommand("basis", "Basis forests U_D");
  bas->add_option("D", n_arg)->required()->check(kPositive);
  auto* matrix_flag = bas->add_flag("--matrix", show_matrix, "Print the matrix of sigma-images");
  bas->add_flag("--check-mod2", check_mod2, "Check invertibility modulo 2")->excludes(matrix_flag);

  auto* dec = app.add_subcommand("decompose", "Coefficients of an element over U_d");
  dec->add_option("helem", helem_arg)->required();

  auto* ker = app.add_subcommand("kernel", "Basis of the relations of degree D");
  ker->add_option("D", n_arg)->required()->check(kPositive);

  auto* self = app.add_subcommand("selfcheck", "Run the invariant suite");
  self->add_option("--max-degree", max_degree)->check(kPositive);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  auto* sub = app.get_subcommands().front();
  Output out(as_json, sub->get_name());
  auto& doc = out.doc();
  int status = kOk;

  try {
    if (sub == trees || sub == forests) {
      std::vector<std::string> codes;
      if (sub == trees)
        for (const auto& t : enumerate_trees(n_arg)) codes.push_back(t.code());
      else
        for (const auto& f : enumerate_forests(n_arg)) codes.push_back(f.code());
      doc["n"] = n_arg;
      doc["count"] = codes.size();
      if (!count_only) doc[sub == trees ? "trees" : "forests"] = codes;
      if (count_only)
        out.text() << codes.size() << '\n';
      else
        for (const auto& c : codes) out.text() << c << '\n';
    } else if (sub == cop) {
      const TensorElem u = coproduct(parse_helem(helem_arg));
      doc["input"] = helem_arg;
      doc["result"] = to_string(u);
      doc["terms"] = terms_json(u);
      out.text() << to_string(u) << '\n';
    } else if (sub == apply) {
      const Poly p = rtm_apply(parse_helem(helem_arg), parse_poly(poly_arg));
      doc["helem"] = helem_arg;
      doc["poly"] = poly_arg;
      doc["result"] = to_string(p);
      doc["terms"] = terms_json(p);
      out.text() << to_string(p) << '\n';
    } else if (sub == sig) {
      const Poly p = sigma(parse_helem(helem_arg));
      doc["input"] = helem_arg;
      doc["result"] = to_string(p);
      doc["terms"] = terms_json(p);
      out.text() << to_string(p) << '\n';
    } else if (sub == dia) {
      const Poly p = diamond(parse_poly(poly_arg), parse_poly(poly_arg2));
      doc["left"] = poly_arg;
      doc["right"] = poly_arg2;
      doc["result"] = to_string(p);
      doc["terms"] = terms_json(p);
      out.text() << to_string(p) << '\n';
    } else if (sub == rel) {
      doc["m"] = m_arg;
      doc["n"] = n_arg;
      if (verify) {
        const RelationReport r = verify_fmn(m_arg, n_arg);
        doc["relation"] = to_string(r.relation);
        doc["terms"] = terms_json(r.relation);
        doc["report"] = {{"sigma_is_zero", r.sigma_is_zero},
                         {"rho_x_is_zero", r.rho_x_is_zero},
                         {"r_identity_holds", r.r_identity_holds}};
        out.text() << to_string(r.relation) << '\n'
                   << "sigma_is_zero: " << std::boolalpha << r.sigma_is_zero << '\n'
                   << "rho_x_is_zero: " << r.rho_x_is_zero << '\n'
                   << "r_identity_holds: " << r.r_identity_holds << '\n';
        if (!r.all_hold()) status = kVerificationFailed;
      } else {
        const HElem f = build_fmn(m_arg, n_arg);
        doc["relation"] = to_string(f);
        doc["terms"] = terms_json(f);
        out.text() << to_string(f) << '\n';
      }
    } else if (sub == bas) {
      const auto u = basis_forests(n_arg);
      doc["d"] = n_arg;
      json codes = json::array();
      for (const auto& f : u) codes.push_back(f.code());
      doc["forests"] = codes;
      if (show_matrix) {
        const auto m = basis_matrix(n_arg);
        json cols = json::array();
        for (const auto& w : hy_words(n_arg)) cols.push_back(to_string(w));
        doc["columns"] = cols;
        doc["matrix"] = matrix_json(m);
        print_matrix(out.text(), m);
      } else if (check_mod2) {
        const bool ok = check_mod2_invertible(n_arg);
        doc["mod2_invertible"] = ok;
        out.text() << "mod2_invertible: " << std::boolalpha << ok << '\n';
        if (!ok) status = kVerificationFailed;
      } else {
        for (const auto& f : u) out.text() << f.code() << '\n';
      }
    } else if (sub == dec) {
      const HElem f = parse_helem(helem_arg);
      const std::size_t d = homogeneous_degree(f);
      const auto coeffs = decompose(f, d);
      HElem combo;
      json entries = json::array();
      for (const auto& [u, c] : coeffs) {
        combo.add_term(u, c);
        entries.push_back({{"forest", u.code()}, {"coefficient", to_string(c)}});
      }
      doc["input"] = helem_arg;
      doc["d"] = d;
      doc["coefficients"] = entries;
      doc["result"] = to_string(combo);
      out.text() << to_string(combo) << '\n';
    } else if (sub == ker) {
      const auto kernel = sigma_kernel(n_arg);
      doc["d"] = n_arg;
      doc["dimension"] = kernel.size();
      json basis = json::array();
      for (const auto& k : kernel) {
        basis.push_back(to_string(k));
        out.text() << to_string(k) << '\n';
      }
      doc["basis"] = basis;
    } else if (sub == self) {
      const auto results = run_selfcheck(max_degree);
      json checks = json::array();
      bool all = true;
      for (const auto& r : results) {
        all = all && r.passed;
        checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        out.text() << (r.passed ? "[PASS] " : "[FAIL] ") << r.name;
        if (!r.passed) out.text() << ": " << r.detail;
        out.text() << '\n';
      }
      doc["max_degree"] = max_degree;
      doc["checks"] = checks;
      doc["passed"] = all;
      if (!all) status = kVerificationFailed;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }

  out.flush();
  return status;
}
