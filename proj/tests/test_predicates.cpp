#include <doctest.h>

#include "oracles.hpp"
#include "sqfree/enumeration.hpp"
#include "sqfree/errors.hpp"
#include "sqfree/predicates.hpp"
#include "sqfree/repetition.hpp"

using namespace sqfree;

namespace {
oracle::Letters letters(const Word& w) { return {w.begin(), w.end()}; }
const Alphabet kTernary = Alphabet::first(3);
}  // namespace

TEST_CASE("steady words and their reductions") {
  auto v = is_steady(word_from("1231"));
  CHECK(v.value);
  CHECK(v.square_free);
  CHECK_FALSE(v.deleted.has_value());

  v = is_steady(word_from("1213"));
  CHECK_FALSE(v.value);
  CHECK(v.square_free);
  REQUIRE(v.deleted.has_value());
  CHECK(*v.deleted == 2);
  CHECK(to_string(v.reduction) == "113");

  v = is_steady(word_from("1212"));
  CHECK_FALSE(v.value);
  CHECK_FALSE(v.square_free);

  CHECK(is_steady(Word{}).value);
  CHECK(is_steady(word_from("1")).value);
  CHECK_FALSE(is_steady(word_from("12312")).value);
}

TEST_CASE("failure class matches a direct window search") {
  // Every word whose prefix is steady: the class is 0 exactly when the
  // word is steady, and otherwise the smallest failing window half-length.
  for (std::size_t k : {3u, 4u}) {
    for_each_steady_canonical(9, k, [&](std::span<const Letter> prefix) {
      for (Letter x = 0; x < k; ++x) {
        oracle::Letters ref(prefix.begin(), prefix.end());
        ref.push_back(x);
        if (!oracle::square_free(ref)) continue;
        std::size_t cls = steady_failure_class(ref);
        CHECK(cls == oracle::failure_class(ref));
        CHECK((cls == 0) == oracle::steady(ref));
      }
      return true;
    });
  }
}

TEST_CASE("bifurcate words and their witnesses") {
  auto v = is_bifurcate(word_from("1231"), kTernary);
  CHECK(v.value);
  REQUIRE(v.witnesses.size() == 5);
  std::vector<std::string> ext;
  for (const auto& w : v.witnesses) ext.push_back(to_string(w.extended));
  CHECK(ext == std::vector<std::string>{"21231", "13231", "12131", "12321", "12312"});
  for (std::size_t i = 0; i < v.witnesses.size(); ++i) CHECK(v.witnesses[i].position == i);

  CHECK(is_bifurcate(word_from("12312"), kTernary).value);
  CHECK(bifurcate_over(word_from("12312"), 3));

  auto e = is_bifurcate(word_from("1231213231232123121323123"), kTernary);
  CHECK_FALSE(e.value);
  REQUIRE(e.failing_position.has_value());
  CHECK(*e.failing_position == 0);

  CHECK_THROWS_AS(is_bifurcate(word_from("1212"), kTernary), PreconditionError);
  CHECK_THROWS_AS(is_bifurcate(word_from("124"), kTernary), PreconditionError);
}

TEST_CASE("extremal words") {
  const Word golden = word_from("1231213231232123121323123");
  auto v = is_extremal(golden, kTernary);
  CHECK(v.value);
  CHECK_FALSE(v.counterexample.has_value());
  CHECK(oracle::extremal(letters(golden), 3));

  // A fourth letter can always be inserted.
  CHECK_FALSE(is_extremal(golden, Alphabet::first(4)).value);

  auto c = is_extremal(word_from("12312"), kTernary);
  CHECK_FALSE(c.value);
  REQUIRE(c.counterexample.has_value());
  CHECK(is_square_free(c.counterexample->extended));
}

TEST_CASE("irreducible words") {
  CHECK_FALSE(is_irreducible(word_from("123")).value);
  CHECK_FALSE(is_irreducible(word_from("1213")).value);
  CHECK(is_irreducible(word_from("121")).value);
  CHECK(is_irreducible(word_from("121323")).value);
  CHECK(is_irreducible(word_from("12")).value);
  auto v = is_irreducible(word_from("1231"));
  CHECK_FALSE(v.value);
  REQUIRE(v.deleted.has_value());
  CHECK(*v.deleted == 2);
  CHECK_FALSE(is_irreducible(word_from("11")).square_free);
}

TEST_CASE("extension letters of steady words keep the word square-free") {
  for (std::size_t k : {3u, 4u, 5u}) {
    const Alphabet alphabet = Alphabet::first(k);
    for_each_steady_canonical(10, k, [&](std::span<const Letter> s) {
      Word w(s);
      for (std::size_t j = 0; j <= w.size(); ++j) {
        Letter x = steady_extension_letter(w, j, alphabet);
        CHECK(alphabet.contains(x));
        CHECK(oracle::square_free(letters(extend_at(w, j, x))));
      }
      return true;
    });
  }
  CHECK_THROWS_AS(steady_extension_letter(word_from("1213"), 0, kTernary), PreconditionError);
  CHECK_THROWS_AS(steady_extension_letter(word_from("1231"), 5, kTernary), std::out_of_range);
}

TEST_CASE("insertion check only needs squares through the new letter") {
  std::vector<Letter> buf;
  for (std::size_t n = 0; n <= 7; ++n)
    for_each_square_free_canonical(n, 3, [&](std::span<const Letter> s) {
      oracle::Letters ref(s.begin(), s.end());
      for (std::size_t i = 0; i <= n; ++i)
        for (Letter x = 0; x < 3; ++x)
          CHECK(insertion_square_free(s, i, x, buf) == oracle::square_free(oracle::insert_at(ref, i, x)));
      return true;
    });
}
