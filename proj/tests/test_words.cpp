#include <doctest.h>

#include <random>
#include <set>

#include "bridge.hpp"
#include "oracle.hpp"
#include "superlie/error.hpp"
#include "superlie/words.hpp"

using namespace superlie;

namespace {

const oracle::Alpha AB{"ab", ""};
const oracle::Alpha AXT{"axt", ""};

Word w(const AlphabetPtr& T, const char* s) { return Word::parse(T, s); }

}  // namespace

TEST_CASE("alphabet parsing and validation") {
  auto T = Alphabet::parse("a, x:odd ,t");
  REQUIRE(T->size() == 3);
  CHECK((*T)[1].name == "x");
  CHECK(is_odd((*T)[1].parity));
  CHECK(T->rank_of("t") == 2);
  CHECK(T->compact_names());
  CHECK(T->to_string() == "a,x:odd,t");
  CHECK(*Alphabet::parse(T->to_string()) == *T);

  CHECK_THROWS_AS(Alphabet::parse(""), Error);
  CHECK_THROWS_AS(Alphabet::parse("a,a"), Error);
  CHECK_THROWS_AS(Alphabet::parse("a,b:weird"), Error);
  CHECK_THROWS_AS(Alphabet::parse("a,1b"), Error);
  CHECK_FALSE(T->find("q").has_value());
}

TEST_CASE("word text round-trips") {
  auto T = Alphabet::parse("x1,x2,t");
  CHECK_FALSE(T->compact_names());
  const Word u = w(T, "t.x1.x1");
  CHECK(u.size() == 3);
  CHECK(u.to_string() == "t.x1.x1");
  CHECK(Word::parse(T, "1").empty());
  CHECK(Word::empty(T).to_string() == "1");
  CHECK_THROWS_AS(w(T, "t.y"), Error);

  auto C = Alphabet::parse("a,x,t");
  CHECK(w(C, "txa").to_string() == "txa");
  CHECK_THROWS_AS(w(C, "tqa"), Error);
}

TEST_CASE("parity is the number of odd letters mod 2") {
  auto T = Alphabet::parse("x:odd,y:odd,z");
  CHECK(w(T, "xy").parity() == Parity::Even);
  CHECK(w(T, "xz").parity() == Parity::Odd);
  CHECK(Word::empty(T).parity() == Parity::Even);
}

TEST_CASE("lex and deglex examples") {
  auto T = bridge::alphabet(AB);
  CHECK(lex_cmp(w(T, "ab"), w(T, "b")) == std::strong_ordering::less);
  CHECK(lex_cmp(w(T, "ba"), w(T, "ba")) == std::strong_ordering::equal);
  CHECK(lex_cmp(w(T, "b"), w(T, "ba")) == std::strong_ordering::greater);
  CHECK(deglex_cmp(w(T, "b"), w(T, "aa")) == std::strong_ordering::less);
  CHECK(deglex_cmp(w(T, "ab"), w(T, "ba")) == std::strong_ordering::less);
  CHECK(deglex_cmp(w(T, "ab"), w(T, "ab")) == std::strong_ordering::equal);

  auto U = bridge::alphabet(AXT);
  CHECK(lex_cmp(w(U, "txt"), w(U, "ttx")) == std::strong_ordering::less);

  CHECK_THROWS_AS(lex_cmp(w(T, "a"), w(U, "a")), Error);
  CHECK_THROWS_AS(deglex_cmp(w(T, "a"), w(U, "a")), Error);
}

TEST_CASE("orders agree with the oracle on all words up to length 4") {
  const oracle::Alpha A{"abc", "b"};
  auto T = bridge::alphabet(A);
  const auto words = oracle::all_words_upto(A, 4);
  for (const auto& u : words) {
    for (const auto& v : words) {
      const Word U = bridge::word(T, u), V = bridge::word(T, v);
      const auto lex = lex_cmp(U, V);
      const auto dl = deglex_cmp(U, V);
      REQUIRE((lex == std::strong_ordering::less) == oracle::lex_less(A, u, v));
      REQUIRE((lex == std::strong_ordering::equal) == (u == v));
      REQUIRE((dl == std::strong_ordering::less) == oracle::deglex_less(A, u, v));
      REQUIRE((dl == std::strong_ordering::equal) == (u == v));
    }
  }
}

TEST_CASE("orders are strict total orders on random triples") {
  const oracle::Alpha A{"abc", ""};
  auto T = bridge::alphabet(A);
  std::mt19937 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const Word u = bridge::word(T, oracle::random_word(A, rng, 5));
    const Word v = bridge::word(T, oracle::random_word(A, rng, 5));
    const Word x = bridge::word(T, oracle::random_word(A, rng, 5));
    for (auto cmp : {+[](const Word& p, const Word& q) { return lex_cmp(p, q); },
                     +[](const Word& p, const Word& q) { return deglex_cmp(p, q); }}) {
      REQUIRE((cmp(u, v) < 0) == (cmp(v, u) > 0));  // antisymmetry
      REQUIRE((cmp(u, v) == 0) == (u == v));
      if (cmp(u, v) < 0 && cmp(v, x) < 0) REQUIRE(cmp(u, x) < 0);
    }
    if (deglex_cmp(u, v) < 0) REQUIRE(u.size() <= v.size());
  }
}

TEST_CASE("Lyndon-Shirshov examples") {
  auto T = bridge::alphabet(AXT);
  CHECK(is_lyndon_shirshov(w(T, "tx")));
  CHECK_FALSE(is_lyndon_shirshov(w(T, "tt")));
  CHECK_FALSE(is_lyndon_shirshov(w(T, "txt")));
  CHECK(is_lyndon_shirshov(w(T, "t")));
  CHECK_THROWS_AS(is_lyndon_shirshov(Word::empty(T)), Error);
  CHECK_THROWS_AS(is_super_ls(Word::empty(T)), Error);

  auto odd = Alphabet::parse("x:odd");
  auto even = Alphabet::parse("x");
  CHECK(is_super_ls(w(odd, "xx")));
  CHECK_FALSE(is_super_ls(w(even, "xx")));
  CHECK_FALSE(is_super_ls(w(odd, "xxx")));
}

TEST_CASE("LS recognition matches exhaustive rotation to length 7") {
  const oracle::Alpha A{"abc", "a"};
  auto T = bridge::alphabet(A);
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& s : oracle::all_words(A, n)) {
      const Word u = bridge::word(T, s);
      REQUIRE(is_lyndon_shirshov(u) == oracle::is_ls(A, s));
      REQUIRE(is_super_ls(u) == oracle::is_super_ls(A, s));
      if (oracle::is_super_ls(A, s)) {
        // first letter is a maximal letter of the word
        for (char c : s) REQUIRE(A.rank(c) <= A.rank(s[0]));
      }
    }
  }
}

TEST_CASE("enumerate_super_ls examples and counts") {
  auto T = bridge::alphabet(AB);
  const auto two = enumerate_super_ls(T, 2);
  REQUIRE(two.size() == 3);
  CHECK(two[0].to_string() == "a");
  CHECK(two[1].to_string() == "b");
  CHECK(two[2].to_string() == "ba");

  const std::size_t expected[] = {2, 1, 2, 3, 6, 9, 18};
  const auto all = enumerate_super_ls(T, 7);
  for (std::size_t n = 1; n <= 7; ++n) {
    std::size_t lib = 0;
    for (const auto& u : all) lib += u.size() == n;
    std::size_t brute = 0;
    for (const auto& s : oracle::all_words(AB, n)) brute += oracle::is_super_ls(AB, s);
    CHECK(lib == expected[n - 1]);
    CHECK(brute == expected[n - 1]);
  }

  auto X = Alphabet::parse("x:odd");
  const auto odd = enumerate_super_ls(X, 3);
  REQUIRE(odd.size() == 2);
  CHECK(odd[0].to_string() == "x");
  CHECK(odd[1].to_string() == "xx");

  CHECK_THROWS_AS(enumerate_super_ls(T, 0), Error);
}

TEST_CASE("enumeration is sorted, duplicate-free and honours the predicate") {
  const oracle::Alpha A{"abc", "bc"};
  auto T = bridge::alphabet(A);
  const auto words = enumerate_super_ls(T, 5);
  std::set<std::string> seen;
  for (std::size_t i = 0; i < words.size(); ++i) {
    REQUIRE(is_super_ls(words[i]));
    REQUIRE(seen.insert(bridge::str(words[i])).second);
    if (i) REQUIRE(deglex_cmp(words[i - 1], words[i]) < 0);
  }
  std::size_t brute = 0;
  for (const auto& s : oracle::all_words_upto(A, 5)) brute += oracle::is_super_ls(A, s);
  CHECK(words.size() == brute);

  const auto no_a = enumerate_super_ls(T, 5, [](const Word& u) { return u.find(Word::letter(u.alphabet(), 0)) == std::nullopt; });
  for (const auto& u : no_a) CHECK(bridge::str(u).find('a') == std::string::npos);
  std::size_t brute_no_a = 0;
  for (const auto& s : oracle::all_words_upto(A, 5)) brute_no_a += oracle::is_super_ls(A, s) && s.find('a') == std::string::npos;
  CHECK(no_a.size() == brute_no_a);
}

TEST_CASE("words_of_length lists every word once in deglex order") {
  auto T = bridge::alphabet(AXT);
  const auto ws = words_of_length(T, 3);
  REQUIRE(ws.size() == 27);
  for (std::size_t i = 1; i < ws.size(); ++i) CHECK(deglex_cmp(ws[i - 1], ws[i]) < 0);
}
