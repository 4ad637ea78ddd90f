#include <doctest.h>

#include <stdexcept>

#include "sqfree/word.hpp"

using namespace sqfree;

TEST_CASE("symbol table round trip") {
  SymbolTable t;
  Word w = t.parse("1231");
  CHECK(w == Word{0, 1, 2, 0});
  CHECK(t.render(w) == "1231");
  CHECK(t.parse("").empty());
  CHECK_THROWS_AS(t.parse("12x!"), std::invalid_argument);

  SymbolTable abc("abcd");
  CHECK(abc.render(abc.parse("abacdc")) == "abacdc");
  CHECK(abc.parse("abacdc") == Word{0, 1, 0, 2, 3, 2});
  CHECK_THROWS_AS(SymbolTable("aba"), std::invalid_argument);
  CHECK_THROWS_AS(SymbolTable(""), std::invalid_argument);
}

TEST_CASE("alphabets are sorted sets") {
  Alphabet a = SymbolTable{}.parse_alphabet("312");
  CHECK(a == Alphabet::first(3));
  CHECK(a.contains(2));
  CHECK_FALSE(a.contains(3));
  CHECK(a.contains_all(word_from("1231")));
  CHECK_FALSE(a.contains_all(word_from("1241")));
  CHECK_THROWS_AS(Alphabet({}), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet({64}), std::invalid_argument);
}

TEST_CASE("prefix, suffix, extension and reduction") {
  Word w = word_from("1231");
  CHECK(prefix(w, 2) == word_from("12"));
  CHECK(suffix(w, 3) == word_from("231"));
  CHECK(prefix(w, 0).empty());
  CHECK_THROWS_AS(prefix(w, 5), std::out_of_range);
  CHECK_THROWS_AS(suffix(w, 5), std::out_of_range);

  CHECK(extend_at(w, 0, 1) == word_from("21231"));
  CHECK(extend_at(w, 4, 1) == word_from("12312"));
  CHECK_THROWS_AS(extend_at(w, 5, 0), std::out_of_range);

  CHECK(to_string(reduce_at(w, 1)) == "231");
  CHECK(to_string(reduce_at(w, 2)) == "131");
  CHECK(to_string(reduce_at(w, 4)) == "123");
  CHECK_THROWS_AS(reduce_at(w, 0), std::out_of_range);
  CHECK_THROWS_AS(reduce_at(w, 5), std::out_of_range);
}

TEST_CASE("extension then reduction at the same place is the identity") {
  Word w = word_from("1213231");
  for (std::size_t i = 0; i <= w.size(); ++i)
    for (Letter x = 0; x < 4; ++x) CHECK(reduce_at(extend_at(w, i, x), i + 1) == w);
}

TEST_CASE("canonical form relabels by first occurrence") {
  CHECK(canonicalize(word_from("3132")) == word_from("1213"));
  CHECK(canonicalize(word_from("")).empty());
  CHECK(is_canonical(word_from("1213")));
  CHECK_FALSE(is_canonical(word_from("2131")));
  CHECK_FALSE(is_canonical(word_from("13")));
  Word w = word_from("4231424");
  CHECK(canonicalize(canonicalize(w)) == canonicalize(w));
}

TEST_CASE("reverse, concat and letter bound") {
  CHECK(reverse(word_from("123")) == word_from("321"));
  CHECK(concat(word_from("12"), word_from("31")) == word_from("1231"));
  CHECK(word_from("1415").letter_bound() == 5);
  CHECK(Word{}.letter_bound() == 0);
  CHECK(WordHash{}(word_from("12")) != WordHash{}(word_from("21")));
}
