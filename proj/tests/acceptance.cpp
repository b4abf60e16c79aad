// Acceptance suite: one line per criterion, exit status 0 iff all pass.
// All arithmetic is exact; every comparison is equality.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <tuple>

#include "oracles.hpp"
#include "rtm/basis.hpp"
#include "rtm/diamond.hpp"
#include "rtm/relations.hpp"
#include "rtm/rtm.hpp"

using namespace rtm;

namespace {

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

struct Criterion {
  int id;
  std::string title;
  double time_limit_s;  // 0 = no stated limit
  std::function<std::string()> run;  // returns a short summary on success
};

using Triple = std::map<std::tuple<Forest, Forest, Forest>, Rational>;

Triple apply_left(const TensorElem& u) {
  Triple out;
  for (const auto& [k, c] : u.terms())
    for (const TensorElem inner = coproduct(k.second); const auto& [k2, c2] : inner.terms())
      out[{k.first, k2.first, k2.second}] += c * c2;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Triple apply_right(const TensorElem& u) {
  Triple out;
  for (const auto& [k, c] : u.terms())
    for (const TensorElem inner = coproduct(k.first); const auto& [k1, c1] : inner.terms())
      out[{k1.first, k1.second, k.second}] += c * c1;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Poly z_pow(std::size_t k) {
  Poly out = Poly::constant(1);
  for (std::size_t i = 0; i < k; ++i) out = out * Poly::z();
  return out;
}

bool in_span(const std::vector<HElem>& basis, const HElem& f, const std::vector<Forest>& forests) {
  RationalMatrix m(basis.size() + 1, forests.size());
  for (std::size_t r = 0; r <= basis.size(); ++r) {
    const HElem& row = r < basis.size() ? basis[r] : f;
    for (std::size_t c = 0; c < forests.size(); ++c) m(r, c) = row.coefficient(forests[c]);
  }
  return rank(m) == basis.size();
}

// ---------------------------------------------------------------------------

std::string enumeration() {
  const std::size_t expected[] = {1, 1, 2, 4, 9, 20, 48, 115, 286, 719};
  const auto recurrence = oracle::tree_counts(10);
  for (std::size_t n = 1; n <= 10; ++n) {
    require(recurrence[n] == expected[n - 1], "recurrence disagrees with table at n=" + std::to_string(n));
    require(enumerate_trees(n).size() == expected[n - 1], "tree count at n=" + std::to_string(n));
  }
  return "counts 1,1,2,4,9,20,48,115,286,719";
}

std::string coproduct_goldens() {
  const Forest one, v = parse_forest("[]"), l2 = parse_forest("[[]]"), vv = parse_forest("[] []"),
                    cherry = parse_forest("[[][]]");
  auto T = [](std::initializer_list<std::tuple<Forest, Forest, int>> terms) {
    TensorElem out;
    for (const auto& [a, b, c] : terms) out.add_term(a, b, c);
    return out;
  };
  require(coproduct(one) == T({{one, one, 1}}), "Delta(1)");
  require(coproduct(v) == T({{v, one, 1}, {one, v, 1}}), "Delta(vertex)");
  require(coproduct(l2) == T({{l2, one, 1}, {v, v, 1}, {one, l2, 1}}), "Delta(ladder 2)");
  require(coproduct(vv) == T({{vv, one, 1}, {v, v, 2}, {one, vv, 1}}), "Delta(vertex vertex)");
  require(coproduct(cherry) == T({{cherry, one, 1}, {vv, v, 1}, {v, l2, 2}, {one, cherry, 1}}),
          "Delta(B+(vertex vertex))");
  return "5 coproducts reproduced";
}

std::string rtm_goldens() {
  require(rtm_apply(parse_helem("[] []"), Poly::x()) == parse_poly("xyy - xxy"), "(vertex vertex)~(x)");
  require(rtm_apply(parse_helem("[[][]]"), Poly::x()) == parse_poly("-xxxy - 2xxyy + xyxy + 2xyyy"),
          "B+(vertex vertex)~(x)");
  return "2 values reproduced";
}

std::string bridge() {
  const auto forests = oracle::forests_up_to(5);
  const auto words = oracle::words_up_to(4);
  std::size_t pairs = 0;
  for (const auto& f : forests)
    for (const auto& w : words) {
      const Poly lhs = rtm_apply(HElem(f), Poly(w.prepend(Letter::X)));
      const Poly rhs = left_mul(Letter::X, diamond(sigma(f), Poly(w)));
      require(lhs == rhs, "mismatch at " + f.code() + " / " + to_string(w));
      ++pairs;
    }
  std::ostringstream s;
  s << forests.size() << " forests x " << words.size() << " words = " << pairs << " pairs, 0 mismatches";
  return s.str();
}

std::string relation_family() {
  std::size_t count = 0;
  for (std::size_t total = 2; total <= 9; ++total)
    for (std::size_t m = 1; m < total; ++m) {
      const std::size_t n = total - m;
      const auto r = verify_fmn(m, n);
      const std::string tag = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
      require(r.sigma_is_zero, "sigma nonzero at " + tag);
      require(r.rho_x_is_zero, "rho(x) nonzero at " + tag);
      require(r.r_identity_holds, "R identity fails at " + tag);
      ++count;
    }
  return std::to_string(count) + " pairs with m+n <= 9";
}

std::string basis() {
  for (std::size_t d = 1; d <= 8; ++d) {
    const std::string tag = " at d=" + std::to_string(d);
    const auto u = basis_forests(d);
    require(u.size() == (std::size_t{1} << (d - 1)), "|U_d|" + tag);
    const RationalMatrix b = basis_matrix(d);
    require(rank(b) == u.size(), "rank" + tag);
    require(check_mod2_invertible(d), "mod 2" + tag);
  }
  require(basis_matrix(2) == RationalMatrix{{1, 2}, {-1, 1}}, "d=2 matrix");
  return "d = 1..8 full rank and invertible mod 2; d=2 matrix [[1,2],[-1,1]]";
}

std::string kernel_dimensions() {
  const std::size_t expected[] = {0, 0, 0, 1, 4, 16};
  for (std::size_t d = 1; d <= 6; ++d) {
    const std::size_t dim = sigma_kernel(d).size();
    require(dim == enumerate_forests(d).size() - (std::size_t{1} << (d - 1)),
            "dimension formula at d=" + std::to_string(d));
    require(dim == expected[d - 1], "frozen dimension at d=" + std::to_string(d));
  }
  require(in_span(sigma_kernel(4), build_fmn(2, 2), enumerate_forests(4)), "f_{2,2} not in kernel");
  require(in_span(sigma_kernel(5), build_fmn(2, 3), enumerate_forests(5)), "f_{2,3} not in kernel");
  return "dims 0,0,0,1,4,16; f_{2,2}, f_{2,3} in kernel";
}

std::string algebra_laws() {
  constexpr int kRandom = 200;
  oracle::Gen gen(20260101);
  std::size_t checks = 0;

  // diamond commutativity: exhaustive on total degree <= 6, plus random
  const auto short_words = oracle::words_up_to(6);
  for (const auto& a : short_words)
    for (const auto& b : short_words)
      if (a.length() + b.length() <= 6) {
        require(diamond(a, b) == diamond(b, a), "commutativity " + to_string(a) + "," + to_string(b));
        ++checks;
      }
  for (int i = 0; i < kRandom; ++i, ++checks) {
    const Poly a = gen.poly(4), b = gen.poly(4);
    require(diamond(a, b) == diamond(b, a), "commutativity (random)");
  }

  // associativity: exhaustive on total degree <= 4, plus random total degree <= 7
  const auto tiny = oracle::words_up_to(4);
  for (const auto& a : tiny)
    for (const auto& b : tiny)
      for (const auto& c : tiny)
        if (a.length() + b.length() + c.length() <= 4) {
          require(diamond(diamond(Poly(a), Poly(b)), Poly(c)) == diamond(Poly(a), diamond(Poly(b), Poly(c))),
                  "associativity");
          ++checks;
        }
  for (int i = 0; i < kRandom; ++i, ++checks) {
    const Word a = gen.word(3), b = gen.word(2), c = gen.word(7 - a.length() - b.length());
    require(diamond(diamond(Poly(a), Poly(b)), Poly(c)) == diamond(Poly(a), diamond(Poly(b), Poly(c))),
            "associativity (random)");
  }

  // vz <> w = v <> wz = (v <> w) z
  const Poly z = Poly::z();
  for (const auto& a : tiny)
    for (const auto& b : tiny) {
      const Poly rhs = diamond(Poly(a), Poly(b)) * z;
      require(diamond(Poly(a) * z, Poly(b)) == rhs && diamond(Poly(a), Poly(b) * z) == rhs, "z-shift");
      ++checks;
    }
  for (int i = 0; i < kRandom; ++i, ++checks) {
    const Poly v = gen.poly(4), w = gen.poly(4);
    const Poly rhs = diamond(v, w) * z;
    require(diamond(v * z, w) == rhs && diamond(v, w * z) == rhs, "z-shift (random)");
  }

  // three-term expansion, k, l in {1,2,3}
  const Poly y = Poly::y();
  for (std::size_t k = 1; k <= 3; ++k)
    for (std::size_t l = 1; l <= 3; ++l) {
      const Poly bk = z_pow(k - 1) * y, bl = z_pow(l - 1) * y, bkl = z_pow(k + l - 1) * y;
      auto holds = [&](const Poly& v, const Poly& w) {
        return diamond(v * bk, w * bl) == diamond(v, w * bl) * bk + diamond(v * bk, w) * bl - diamond(v, w) * bkl;
      };
      for (const auto& a : oracle::words_up_to(2))
        for (const auto& b : oracle::words_up_to(2)) {
          require(holds(Poly(a), Poly(b)), "three-term expansion");
          ++checks;
        }
      for (int i = 0; i < 25; ++i, ++checks) require(holds(gen.poly(3), gen.poly(3)), "three-term expansion (random)");
    }

  // coassociativity on every forest of degree <= 5
  for (const auto& f : oracle::forests_up_to(5)) {
    const TensorElem d = coproduct(f);
    require(apply_left(d) == apply_right(d), "coassociativity at " + f.code());
    ++checks;
  }

  // rho and sigma are homomorphisms
  for (const auto& f : oracle::forests_up_to(3))
    for (const auto& g : oracle::forests_up_to(3)) {
      const Forest fg = forest_product(f, g);
      require(sigma(fg) == diamond(sigma(f), sigma(g)), "sigma homomorphism");
      require(rtm_apply(fg, Poly::x()) == rtm_apply(f, rtm_apply(g, Poly::x())), "rho homomorphism");
      checks += 2;
    }
  for (int i = 0; i < kRandom; ++i, checks += 2) {
    const HElem a = gen.helem(5, 2), b = gen.helem(5, 2);
    require(sigma(h_mul(a, b)) == diamond(sigma(a), sigma(b)), "sigma homomorphism (random)");
    const HElem c = gen.helem(3, 2), d = gen.helem(3, 2);
    const Poly w = gen.poly(3, 2);
    require(rtm_apply(h_mul(c, d), w) == rtm_apply(c, rtm_apply(d, w)), "rho homomorphism (random)");
  }

  // first- and last-letter recurrences
  auto recurrences = [&](const HElem& f, const Poly& w) {
    return rtm_apply(f, left_mul(Letter::Y, w)) == z * rtm_apply(f, w) - rtm_apply(f, left_mul(Letter::X, w)) &&
           rtm_apply(f, right_mul(w, Letter::X)) == rtm_apply(f, w) * z - rtm_apply(f, right_mul(w, Letter::Y));
  };
  for (const auto& f : oracle::forests_up_to(3, 1))
    for (const auto& w : oracle::words_up_to(3)) {
      require(recurrences(HElem(f), Poly(w)), "letter recurrences at " + f.code());
      ++checks;
    }
  for (int i = 0; i < kRandom; ++i, ++checks)
    require(recurrences(gen.helem(4, 2, 1), gen.poly(4, 2)), "letter recurrences (random)");

  return std::to_string(checks) + " instances, 0 failures";
}

std::string full_map_nullity() {
  const auto words = oracle::words_up_to(4);
  std::size_t evaluations = 0;
  for (std::size_t total = 2; total <= 6; ++total)
    for (std::size_t m = 1; m < total; ++m) {
      const HElem f = build_fmn(m, total - m);
      for (const auto& w : words) {
        require(rtm_apply(f, Poly(w)).is_zero(),
                "nonzero at (" + std::to_string(m) + "," + std::to_string(total - m) + ") on " + to_string(w));
        ++evaluations;
      }
    }
  return std::to_string(evaluations) + " evaluations, all zero";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "tree enumeration counts n=1..10", 5.0, enumeration},
      {2, "coproduct goldens", 0, coproduct_goldens},
      {3, "rooted tree map goldens", 0, rtm_goldens},
      {4, "f~(xw) = x(F_f <> w) for deg f <= 5, |w| <= 4", 60.0, bridge},
      {5, "sigma, rho(x), R-identity vanish for m+n <= 9", 300.0, relation_family},
      {6, "basis U_d size, rank, mod-2 invertibility d <= 8", 0, basis},
      {7, "kernel dimensions d <= 6 and relation membership", 0, kernel_dimensions},
      {8, "algebra laws (property suites)", 0, algebra_laws},
      {9, "f_{m,n} vanishes on all words of length <= 4, m+n <= 6", 0, full_map_nullity},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string summary;
    bool ok = true;
    try {
      summary = c.run();
    } catch (const Failure& f) {
      ok = false;
      summary = f.what;
    } catch (const std::exception& e) {
      ok = false;
      summary = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && c.time_limit_s > 0 && secs > c.time_limit_s) {
      ok = false;
      summary += " (exceeded time limit)";
    }
    if (!ok) ++failed;
    std::printf("[%s] AC%d %s: %s (%.2fs)\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), summary.c_str(), secs);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
