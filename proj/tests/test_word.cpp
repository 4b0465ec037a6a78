#include "doctest.h"

#include <set>

#include "hopspec/word.hpp"
#include "support/oracles.hpp"

using namespace hopspec;

TEST_SUITE("word") {

TEST_CASE("enumeration covers every binary word in lexicographic order") {
  const auto l1 = enumerate_words(1);
  REQUIRE(l1.size() == 2);
  CHECK(l1[0].text() == "+");
  CHECK(l1[1].text() == "-");

  const auto l2 = enumerate_words(2);
  REQUIRE(l2.size() == 4);
  CHECK(l2[0].text() == "++");
  CHECK(l2[1].text() == "+-");
  CHECK(l2[2].text() == "-+");
  CHECK(l2[3].text() == "--");

  for (std::size_t L = 1; L <= 10; ++L) {
    std::size_t count = 0;
    Word prev = Word::parse("+");
    bool ordered = true;
    for_each_binary_word(L, [&](const Word& w) {
      if (count > 0) ordered = ordered && word_less(prev, w);
      prev = w;
      ++count;
    });
    CHECK(count == (std::size_t(1) << L));
    CHECK(ordered);
  }

  CHECK_THROWS_AS(enumerate_words(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_words(25), std::invalid_argument);
}

TEST_CASE("parse and text round-trip; bad letters rejected") {
  CHECK(Word::parse("++-").text() == "++-");
  CHECK(Word::parse("-").text() == "-");
  CHECK_THROWS_AS(Word::parse("+x-"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Word(std::vector<Complex>{Complex(1.0, 0.0), Complex{}}), std::invalid_argument);
  CHECK(Word::repeated_sign(+1, 3) == Word::parse("+++"));
  CHECK(Word::repeated_sign(-1, 2) == Word::parse("--"));
}

TEST_CASE("rotation and repetition") {
  const Word w = Word::parse("++-");
  CHECK(w.rotated(0) == w);
  CHECK(w.rotated(1).text() == "+-+");
  CHECK(w.rotated(3) == w);
  CHECK(w.repeated(2).text() == "++-++-");
  CHECK(w.repeated(1) == w);
}

TEST_CASE("canonical rotation: pinned cases") {
  CHECK(canonical_rotation(Word::parse("-++")).text() == "++-");
  CHECK(canonical_rotation(Word::parse("++-")).text() == "++-");
  CHECK(canonical_rotation(Word::parse("-+-+")).text() == "+-+-");
}

TEST_CASE("canonical rotation agrees with exhaustive search for all words up to L=10") {
  for (std::size_t L = 1; L <= 10; ++L) {
    for_each_binary_word(L, [&](const Word& w) {
      const Word expect = oracle::brute_canonical(w);
      CHECK(canonical_rotation(w) == expect);
      CHECK(w.rotated(canonical_rotation_index(w)) == expect);
    });
  }
}

TEST_CASE("primitivity: pinned cases and exhaustive agreement") {
  CHECK_FALSE(is_primitive(Word::parse("+-+-")));
  CHECK(is_primitive(Word::parse("++-")));
  CHECK_FALSE(is_primitive(Word::parse("++++")));
  for (std::size_t L = 1; L <= 10; ++L)
    for_each_binary_word(L, [&](const Word& w) { CHECK(is_primitive(w) == oracle::brute_primitive(w)); });
}

TEST_CASE("cyclic invariants: pinned values") {
  const auto i1 = cyclic_invariants(Word::parse("+"));
  CHECK(i1.s == Complex(1.0, 0.0));
  CHECK(i1.p == Complex(1.0, 0.0));
  CHECK_FALSE(i1.d.has_value());

  const auto i2 = cyclic_invariants(Word::parse("+-"));
  CHECK(i2.s == Complex(0.0, 0.0));
  CHECK(i2.p == Complex(-1.0, 0.0));
  CHECK(i2.require_d() == Complex(2.0, 0.0));

  const auto a = cyclic_invariants(Word::parse("+++-"));
  CHECK(a.s == Complex(2.0, 0.0));
  CHECK(a.p == Complex(-1.0, 0.0));
  CHECK(a.require_kappa() == Complex(0.0, 0.0));
  CHECK(a.require_omega() == Complex(2.0, 0.0));

  const auto b = cyclic_invariants(Word::parse("++--"));
  CHECK(b.s == Complex(0.0, 0.0));
  CHECK(b.p == Complex(1.0, 0.0));
  CHECK(b.require_kappa() == Complex(-2.0, 0.0));
  CHECK(b.require_omega() == Complex(0.0, 0.0));

  // all-ones length 6: 9 non-adjacent pairs, 2 independent triples
  const auto c = cyclic_invariants(Word::parse("++++++"));
  CHECK(c.s == Complex(6.0, 0.0));
  CHECK(c.require_kappa() == Complex(9.0, 0.0));
  CHECK(c.require_rho() == Complex(2.0, 0.0));
  CHECK(c.require_delta() == Complex(0.0, 0.0));

  CHECK_THROWS_AS(cyclic_invariants(Word::parse("++-")).require_kappa(), UnsupportedLength);
  CHECK_THROWS_AS(cyclic_invariants(Word::parse("+++-")).require_rho(), UnsupportedLength);
  CHECK_THROWS_AS(cyclic_invariants(Word::parse("++-")).require_d(), UnsupportedLength);
}

TEST_CASE("invariants s and p are rotation invariant; d, omega, delta flip under odd rotations") {
  for_each_binary_word(4, [&](const Word& w) {
    const auto base = cyclic_invariants(w);
    for (std::size_t k = 1; k < 4; ++k) {
      const auto rot = cyclic_invariants(w.rotated(k));
      CHECK(rot.s == base.s);
      CHECK(rot.p == base.p);
      CHECK(rot.require_kappa() == base.require_kappa());
      const Complex sign = (k % 2 == 0) ? Complex(1.0, 0.0) : Complex(-1.0, 0.0);
      CHECK(rot.require_omega() == sign * base.require_omega());
    }
  });
}

TEST_CASE("paragraphs parse, print and build") {
  const Paragraph p = parse_paragraph("++-:16,+++:1");
  REQUIRE(p.segments.size() == 2);
  CHECK(p.segments[0].word.text() == "++-");
  CHECK(p.segments[0].count == 16);
  CHECK(p.segments[1].word.text() == "+++");
  CHECK(p.segments[1].count == 1);
  CHECK(p.letter_count() == 51);
  CHECK(p.text() == "++-:16,+++:1");

  const auto letters = build_paragraph(p);
  REQUIRE(letters.size() == 51);
  CHECK(letters[0] == Complex(1.0, 0.0));
  CHECK(letters[2] == Complex(-1.0, 0.0));
  CHECK(letters[48] == Complex(1.0, 0.0));

  // count defaults to 1
  const Paragraph q = parse_paragraph("++-");
  REQUIRE(q.segments.size() == 1);
  CHECK(q.segments[0].count == 1);

  CHECK_THROWS_AS(parse_paragraph("++-:0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_paragraph("++-:x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_paragraph(""), std::invalid_argument);
}

TEST_CASE("letter order puts + before -") {
  CHECK(letter_less(Complex(1.0, 0.0), Complex(-1.0, 0.0)));
  CHECK_FALSE(letter_less(Complex(-1.0, 0.0), Complex(1.0, 0.0)));
  CHECK(word_less(Word::parse("++-"), Word::parse("+-+")));
}

}  // TEST_SUITE
