#include <doctest.h>

#include <algorithm>
#include <set>

#include "bridge.hpp"
#include "oracle.hpp"
#include "superlie/error.hpp"
#include "superlie/fixtures.hpp"
#include "superlie/hnn.hpp"
#include "superlie/linalg.hpp"

using namespace superlie;

namespace {

Poly P(const AlphabetPtr& T, const char* s) { return Poly::parse(T, s); }

struct Case {
  const char* name;
  HnnPresentation p;
  oracle::Alpha A;                 ///< alphabet of T
  std::vector<std::string> leads;  ///< expected leading words of S
};

std::vector<Case> cases() {
  return {
      {"ex1", fixtures::ex1(), {"axt", ""}, {"xa", "ta"}},
      {"ex2", fixtures::ex2(), {"xat", "at"}, {"ax", "aa", "tx"}},
      {"ex3", fixtures::ex3(), {"axt", "at"}, {"xa", "aa", "ta"}},
  };
}

std::vector<oracle::Rule> lead_only(const std::vector<std::string>& leads) {
  std::vector<oracle::Rule> out;
  for (const auto& l : leads) out.push_back({l, {}});
  return out;
}

std::set<std::string> strings(const std::vector<Word>& ws) {
  std::set<std::string> out;
  for (const auto& w : ws) out.insert(bridge::str(w));
  return out;
}

}  // namespace

TEST_CASE("validation of the desk presentations") {
  CHECK(validate(fixtures::ex1().constants()).pass);
  CHECK(validate(fixtures::ex2().constants()).pass);
  CHECK(validate(fixtures::ex3().constants()).pass);
  CHECK(validate(fixtures::sl2_borel().constants()).pass);

  const ValidationReport bad = validate(fixtures::ex2_corrupted());
  CHECK_FALSE(bad.pass);
  const bool has_jacobi = std::any_of(bad.violations.begin(), bad.violations.end(),
                                      [](const Violation& v) { return v.identity == "jacobi"; });
  CHECK(has_jacobi);
  CHECK_THROWS_AS(build_relations(HnnPresentation(fixtures::ex2_corrupted())), Error);
}

TEST_CASE("validation detects each kind of defect") {
  auto basis = Alphabet::parse("b,c,x");
  auto kinds = [](const StructureConstants& sc) {
    std::set<std::string> out;
    for (const auto& v : validate(sc).violations) out.insert(v.identity);
    return out;
  };
  {
    StructureConstants sc(basis, 2, Parity::Even);
    sc.set_entry(1, 0, {{0, 1}});  // [c,b] = b without [b,c] = -b
    CHECK(kinds(sc).count("anti-commutativity"));
  }
  {
    StructureConstants sc(basis, 2, Parity::Even);
    sc.set_bracket(1, 0, {{2, 1}});  // [c,b] = x leaves the subalgebra
    CHECK(kinds(sc).count("subalgebra-closure"));
  }
  {
    StructureConstants sc(basis, 2, Parity::Even);
    sc.set_bracket(2, 0, {{1, 1}});  // [x,b] = c
    sc.set_derivation(0, {{2, 1}});
    sc.set_derivation(1, {{2, 1}});
    CHECK(kinds(sc).count("derivation"));
  }
  auto mixed = Alphabet::parse("b,y:odd,x");
  {
    StructureConstants sc(mixed, 1, Parity::Even);
    sc.set_bracket(2, 0, {{1, 1}});  // even bracket with odd value
    CHECK(kinds(sc).count("bracket-parity"));
  }
  {
    StructureConstants sc(mixed, 1, Parity::Even);
    sc.set_derivation(0, {{1, 1}});  // even d sending an even letter to an odd one
    CHECK(kinds(sc).count("derivation-parity"));
  }
}

TEST_CASE("presentation construction") {
  auto basis = Alphabet::parse("a,x");
  CHECK_THROWS_AS(HnnPresentation(StructureConstants(basis, 2, Parity::Even)), Error);
  CHECK_THROWS_AS(HnnPresentation(StructureConstants(basis, 1, Parity::Even), "x"), Error);
  const HnnPresentation p(StructureConstants(basis, 1, Parity::Odd), "s");
  CHECK((*p.alphabet())[p.t()].name == "s");
  CHECK(is_odd((*p.alphabet())[p.t()].parity));
  CHECK(p.t() == 2);
  CHECK(p.subalgebra_letters() == std::vector<Letter>{0});
  CHECK(p.complement_letters() == std::vector<Letter>{1});
  CHECK(p.is_complement(1));
  CHECK_FALSE(p.is_complement(2));
}

TEST_CASE("relation sets") {
  for (const auto& c : cases()) {
    CAPTURE(c.name);
    const RewriteSystem S = build_relations(c.p);
    std::set<std::string> leads;
    for (const auto& r : S.rules()) leads.insert(bridge::str(r.leading_word()));
    CHECK(leads == std::set<std::string>(c.leads.begin(), c.leads.end()));
  }
  const RewriteSystem S1 = build_relations(fixtures::ex1());
  const auto T = S1.alphabet();
  CHECK(S1.rules()[0].body() == P(T, "xa - ax"));
  CHECK(S1.rules()[1].body() == P(T, "ta - at - x"));

  const RewriteSystem S2 = build_relations(fixtures::ex2());
  const auto T2 = S2.alphabet();
  bool saw_half = false;
  for (const auto& r : S2.rules()) {
    if (bridge::str(r.leading_word()) == "aa") {
      saw_half = true;
      CHECK(r.body() == P(T2, "aa - 1/2*x"));
    }
  }
  CHECK(saw_half);
}

TEST_CASE("defining relations hold and L embeds") {
  for (const auto& p : {fixtures::ex1(), fixtures::ex2(), fixtures::ex3(), fixtures::sl2_borel()}) {
    const RewriteSystem S = build_relations(p);
    const auto& T = p.alphabet();
    const auto& sc = p.constants();
    const Poly t = Poly(Word::letter(T, p.t()));
    for (Letter a : p.subalgebra_letters()) {
      Poly rel = superbracket(t, Poly(Word::letter(T, a)));
      for (const auto& [v, c] : sc.derivation(a)) rel -= c * Poly(Word::letter(T, v));
      CHECK(reduce(rel, S).normal_form.is_zero());
    }
    std::vector<Poly> images;
    for (Letter x : p.basis_letters()) {
      const Poly nf = reduce(Poly(Word::letter(T, x)), S).normal_form;
      CHECK_FALSE(nf.is_zero());
      for (const auto& other : images) CHECK(other != nf);
      images.push_back(nf);
    }
    CHECK(rank(images).rank == images.size());
  }
}

TEST_CASE("Groebner-Shirshov verification and family coverage") {
  auto families = [](const HnnPresentation& p) {
    const HnnGsbReport r = verify_hnn_gsb(p);
    CHECK(r.pass);
    CHECK(r.associative.pass);
    std::set<int> out;
    for (const auto& f : r.families) {
      CHECK(f.pass);
      CHECK(f.normal_form.is_zero());
      out.insert(f.family);
    }
    return out;
  };
  CHECK(families(fixtures::ex1()).empty());
  CHECK(families(fixtures::ex2()) == std::set<int>{4});
  CHECK(families(fixtures::ex3()) == std::set<int>{3, 5});
  CHECK(families(fixtures::sl2_borel()) == std::set<int>{1, 2});

  const HnnGsbReport r3 = verify_hnn_gsb(fixtures::ex3());
  bool saw_taa = false;
  for (const auto& f : r3.families) saw_taa = saw_taa || (f.family == 5 && bridge::str(f.word) == "taa");
  CHECK(saw_taa);
}

TEST_CASE("U(H) basis examples") {
  const auto ex1 = enumerate_uh_basis(fixtures::ex1(), 2);
  CHECK(strings(ex1) == std::set<std::string>{"", "a", "x", "t", "aa", "ax", "at", "xx", "xt", "tt", "tx"});
  const auto zero = enumerate_uh_basis(fixtures::ex1(), 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].empty());

  const auto ex2 = strings(enumerate_uh_basis(fixtures::ex2(), 2));
  CHECK(ex2.count("tt"));
  CHECK_FALSE(ex2.count("aa"));
  CHECK_FALSE(ex2.count("ax"));
  CHECK_FALSE(ex2.count("tx"));
}

TEST_CASE("PBW words are exactly the S-reduced words up to length 6") {
  for (const auto& c : cases()) {
    CAPTURE(c.name);
    const auto rules = lead_only(c.leads);
    std::set<std::string> brute;
    for (const auto& s : oracle::all_words_upto(c.A, 6)) {
      if (oracle::is_reduced(rules, s)) brute.insert(s);
    }
    const auto uh = enumerate_uh_basis(c.p, 6);
    CHECK(strings(uh) == brute);
    CHECK(uh.size() == brute.size());
    for (std::size_t i = 1; i < uh.size(); ++i) CHECK(deglex_cmp(uh[i - 1], uh[i]) < 0);

    const auto T = c.p.alphabet();
    for (const auto& s : oracle::all_words_upto(c.A, 5)) {
      const Word w = bridge::word(T, s);
      const auto m = match_pbw(c.p, w);
      REQUIRE(m.has_value() == brute.count(s) > 0);
      if (m) REQUIRE(m->word(c.p) == w);
    }
  }
}

TEST_CASE("H basis matches the S-reduced super-LS words up to length 6") {
  for (const auto& c : cases()) {
    CAPTURE(c.name);
    const auto rules = lead_only(c.leads);
    std::set<std::string> brute;
    for (std::size_t n = 1; n <= 6; ++n) {
      for (const auto& s : oracle::all_words(c.A, n)) {
        if (oracle::is_super_ls(c.A, s) && oracle::is_reduced(rules, s)) brute.insert(s);
      }
    }
    const auto basis = enumerate_h_basis(c.p, 6);
    std::set<std::string> lib;
    for (const auto& m : basis) {
      lib.insert(bridge::str(forget(m)));
      CHECK(is_admissible(m));
    }
    CHECK(lib == brute);
    CHECK(basis.size() == brute.size());
  }
}

TEST_CASE("H basis examples") {
  const auto ex1 = enumerate_h_basis(fixtures::ex1(), 4);
  std::size_t counts[5] = {};
  for (const auto& m : ex1) ++counts[m.degree()];
  CHECK(counts[1] == 3);
  CHECK(counts[2] == 1);
  CHECK(counts[3] == 2);
  CHECK(counts[4] == 3);

  std::set<std::string> three;
  for (const auto& m : ex1) {
    if (m.degree() <= 3) three.insert(m.to_string());
  }
  CHECK(three == std::set<std::string>{"a", "x", "t", "[t,x]", "[t,[t,x]]", "[[t,x],x]"});

  bool has_tt = false;
  for (const auto& m : enumerate_h_basis(fixtures::ex3(), 2)) has_tt = has_tt || m.to_string() == "[t,t]";
  CHECK(has_tt);
  bool ex1_tt = false;
  for (const auto& m : ex1) ex1_tt = ex1_tt || m.to_string() == "[t,t]";
  CHECK_FALSE(ex1_tt);

  // length one: the basis of L and t
  for (const auto& p : {fixtures::ex1(), fixtures::ex2(), fixtures::ex3(), fixtures::sl2_borel()}) {
    CHECK(enumerate_h_basis(p, 1).size() == p.constants().dim() + 1);
  }
}

TEST_CASE("free generators of W") {
  auto names = [](const std::vector<NcMonomial>& ms) {
    std::vector<std::string> out;
    for (const auto& m : ms) out.push_back(m.to_string());
    return out;
  };
  CHECK(names(free_generators_W(fixtures::ex1(), 3)) == std::vector<std::string>{"t", "[t,x]", "[[t,x],x]"});
  CHECK(names(free_generators_W(fixtures::ex2(), 3)) == std::vector<std::string>{"t", "[t,a]"});
  CHECK(names(free_generators_W(fixtures::ex3(), 1)) == std::vector<std::string>{"t"});
  // sl2: complement {f}
  CHECK(free_generators_W(fixtures::sl2_borel(), 4).size() == 4);
}

TEST_CASE("W-bar alphabet") {
  const HnnPresentation p = fixtures::ex1();
  const WbarAlphabet wbar(p, 3);
  REQUIRE(wbar.size() == 3);
  // letters are ranked increasingly: txx < tx < t
  CHECK(bridge::str(wbar.t_word(0)) == "txx");
  CHECK(bridge::str(wbar.t_word(1)) == "tx");
  CHECK(bridge::str(wbar.t_word(2)) == "t");
  CHECK(lex_cmp(wbar.t_word(2), wbar.t_word(1)) > 0);
  CHECK(lex_cmp(wbar.t_word(1), wbar.t_word(0)) > 0);
  CHECK(wbar.letter_bracket(0).to_string() == "[[t,x],x]");

  const Word u = bridge::word(p.alphabet(), "ttxtxx");
  const auto f = wbar.factor(u);
  REQUIRE(f.has_value());
  CHECK(f->size() == 3);
  CHECK(wbar.flatten(*f) == u);
  CHECK_FALSE(wbar.factor(bridge::word(p.alphabet(), "xt")).has_value());
  CHECK_FALSE(wbar.factor(bridge::word(p.alphabet(), "txxx")).has_value());

  // products of total length n: compositions of n, 2^(n-1) of them here
  CHECK(wbar_words_of_length(wbar, 3).size() == 4);
}

TEST_CASE("structure theorem") {
  const StructureReport r1 = verify_structure_theorem(fixtures::ex1(), 4);
  CHECK(r1.pass);
  REQUIRE(r1.lengths.size() == 4);
  const std::size_t expected[] = {3, 1, 2, 3};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(r1.lengths[i].h_basis_count == expected[i]);
    CHECK(r1.lengths[i].pass());
  }
  CHECK(r1.lengths[0].wbar_products == 1);

  for (const auto& p : {fixtures::ex2(), fixtures::ex3(), fixtures::sl2_borel()}) {
    const StructureReport r = verify_structure_theorem(p, 4);
    CHECK(r.pass);
    for (const auto& l : r.lengths) CHECK(l.rank == l.expected_rank);
  }
}

TEST_CASE("admissible basis is unitriangular after reduction") {
  for (const auto& p : {fixtures::ex1(), fixtures::ex2(), fixtures::ex3(), fixtures::sl2_borel()}) {
    const AdmissibleBasisReport r = verify_admissible_basis(p, 4);
    CHECK(r.pass);
    CHECK(r.failures.empty());
    CHECK(r.checked > 0);
  }
}
