#include "doctest.h"

#include <cmath>
#include <random>

#include "hopspec/rootfind.hpp"
#include "hopspec/transfer.hpp"
#include "support/oracles.hpp"

using namespace hopspec;

namespace {

CPoly from(std::initializer_list<double> cs) {
  std::vector<Complex> v;
  for (double c : cs) v.emplace_back(c, 0.0);
  return CPoly(std::move(v));
}

Word random_word(std::mt19937_64& gen, std::size_t maxL) {
  std::uniform_int_distribution<std::size_t> len(1, maxL);
  std::uniform_int_distribution<int> bit(0, 1);
  std::vector<Complex> letters;
  const std::size_t L = len(gen);
  for (std::size_t i = 0; i < L; ++i) letters.emplace_back(bit(gen) ? 1.0 : -1.0, 0.0);
  return Word(std::move(letters));
}

}  // namespace

TEST_SUITE("transfer") {

TEST_CASE("single-letter word: base case of the recursion") {
  const TransferWord tw = transfer_polynomials(Word::parse("+"));
  CHECK(tw.alpha_L == CPoly::z());
  CHECK(tw.beta_L == from({-1}));
  CHECK(tw.alpha_Lm1 == from({1}));
  CHECK(tw.beta_Lm1.is_zero());
  CHECK(tw.det == Complex(1.0, 0.0));
  CHECK(tw.trace() == CPoly::z());

  const PQR f = pqr(tw);
  CHECK(f.P == CPoly::z());
  CHECK(f.Q == from({-4, 0, 1}));
  CHECK(f.R == from({1}));
}

TEST_CASE("two-letter trace and determinant") {
  const TransferWord tw = transfer_polynomials(Word::parse("+-"));
  CHECK(tw.trace() == from({0, 0, 1}));  // z^2 - w1 - w2 = z^2
  CHECK(tw.det == Complex(-1.0, 0.0));
}

TEST_CASE("three-letter word ++-: trace, Q and pole polynomial") {
  const Word w = Word::parse("++-");
  const TransferWord tw = transfer_polynomials(w);
  CHECK(tw.trace() == from({0, -1, 0, 1}));  // z^3 - z
  CHECK(tw.det == Complex(-1.0, 0.0));

  const PQR f = pqr(tw);
  CHECK(f.Q == from({4, 0, 1, 0, -2, 0, 1}));  // z^6 - 2 z^4 + z^2 + 4
  CHECK(f.R == from({1, 0, 1}));               // z^2 + 1: poles at +/- i
}

TEST_CASE("endpoint roots of ++-") {
  const PQR f = pqr(Word::parse("++-"));
  const RootSet rs = find_roots(f.Q, 1e-13);
  const double h = std::sqrt(7.0) / 2.0;
  const std::vector<Complex> expect{{0.0, 1.0},  {0.0, -1.0}, {h, 0.5},
                                    {h, -0.5},   {-h, 0.5},   {-h, -0.5}};
  CHECK(oracle::matched_max_distance(rs.roots, expect) <= 1e-10);
}

TEST_CASE("length-4 closed-form values") {
  CHECK(pqr(Word::parse("+++-")).Q == from({4, 0, 0, 0, 4, 0, -4, 0, 1}));
  CHECK(pqr(Word::parse("++--")).Q == from({0, 0, 0, 0, -4, 0, 0, 0, 1}));
  CHECK(pqr(Word::parse("+-")).Q == from({4, 0, 0, 0, 1}));
}

TEST_CASE("closed form matches the recursion exactly for every word of length 2..7") {
  for (std::size_t L = 2; L <= 7; ++L) {
    for_each_binary_word(L, [&](const Word& w) {
      const CPoly closed = q_closed_form(cyclic_invariants(w));
      CHECK(pqr(w).Q == closed);
    });
  }
}

TEST_CASE("closed form is only defined for lengths 2..7") {
  CHECK_THROWS_AS(q_closed_form(cyclic_invariants(Word::parse("+"))), UnsupportedLength);
  CHECK_THROWS_AS(q_closed_form(cyclic_invariants(Word::parse("++++++++"))), UnsupportedLength);
}

TEST_CASE("Q equals trace^2 - 4 det exactly up to length 9") {
  for (std::size_t L = 1; L <= 9; ++L) {
    for_each_binary_word(L, [&](const Word& w) {
      const TransferWord tw = transfer_polynomials(w);
      const CPoly tr = tw.trace();
      const CPoly rhs = tr * tr - CPoly::constant(4.0 * tw.det);
      CHECK(pqr(tw).Q == rhs);
    });
  }
}

TEST_CASE("Q contains only even powers") {
  std::mt19937_64 gen(17);
  for (int t = 0; t < 40; ++t) {
    const PQR f = pqr(random_word(gen, 8));
    for (std::size_t k = 1; k <= f.Q.degree(); k += 2) CHECK(f.Q[k] == Complex{});
  }
}

TEST_CASE("trace, det and Q are rotation invariant") {
  std::mt19937_64 gen(18);
  for (int t = 0; t < 30; ++t) {
    const Word w = random_word(gen, 7);
    const TransferWord base = transfer_polynomials(w);
    const CPoly q = pqr(base).Q;
    for (std::size_t k = 1; k < w.length(); ++k) {
      const TransferWord rot = transfer_polynomials(w.rotated(k));
      CHECK(rot.trace() == base.trace());
      CHECK(rot.det == base.det);
      CHECK(pqr(rot).Q == q);
    }
  }
}

TEST_CASE("fixed points of the clean chain at z=3") {
  const FixedPointPair fp = fixed_points(Word::parse("+"), Complex(3.0, 0.0));
  const double s5 = std::sqrt(5.0);
  CHECK(std::abs(fp.b_plus - Complex((3.0 + s5) / 2.0, 0.0)) <= 1e-12);
  CHECK(std::abs(fp.b_minus - Complex((3.0 - s5) / 2.0, 0.0)) <= 1e-12);
  CHECK(fp.stable_index == +1);
  CHECK_FALSE(fp.marginal);
  CHECK_FALSE(fp.degenerate);
  CHECK(std::abs(std::abs(fp.deriv_plus) - 0.145898) <= 1e-6);
}

TEST_CASE("inside the band both multipliers sit on the unit circle") {
  const FixedPointPair fp = fixed_points(Word::parse("+"), Complex(1.0, 0.0));
  CHECK(fp.marginal);
  CHECK(fp.stable_index == 0);
  CHECK(std::abs(std::abs(fp.deriv_plus) - 1.0) <= 1e-12);
  CHECK(std::abs(std::abs(fp.deriv_minus) - 1.0) <= 1e-12);
}

TEST_CASE("multiplier reciprocity over random words and points") {
  std::mt19937_64 gen(19);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  int tested = 0;
  while (tested < 200) {
    const Word w = random_word(gen, 8);
    const Complex z(dist(gen), dist(gen));
    const FixedPointPair fp = fixed_points(w, z);
    if (fp.degenerate) continue;
    if (std::abs(fp.b_plus - fp.b_minus) < 1e-6) continue;
    CHECK(std::abs(fp.deriv_plus * fp.deriv_minus - Complex(1.0, 0.0)) <= 1e-10);
    if (!fp.marginal)
      CHECK(((std::abs(fp.deriv_plus) < 1.0) != (std::abs(fp.deriv_minus) < 1.0)));
    ++tested;
  }
}

TEST_CASE("degenerate map where R vanishes") {
  // R(z) = z^3 for +++-; at z=0 the map is affine and b_plus escapes to infinity
  const FixedPointPair fp = fixed_points(Word::parse("+++-"), Complex{});
  CHECK(fp.degenerate);
  CHECK(std::isinf(fp.b_plus.real()));
  CHECK(std::abs(fp.deriv_plus * fp.deriv_minus - Complex(1.0, 0.0)) <= 1e-12);
}

TEST_CASE("continued fraction: single step and fixed-point property") {
  CHECK(std::abs(continued_fraction_f(Word::parse("+"), Complex(2.0, 0.0), Complex(3.0, 0.0)) -
                 Complex(2.5, 0.0)) <= 1e-15);

  const FixedPointPair fp = fixed_points(Word::parse("+"), Complex(3.0, 0.0));
  const Complex image = continued_fraction_f(Word::parse("+"), fp.b_plus, Complex(3.0, 0.0));
  CHECK(std::abs(image - fp.b_plus) <= 1e-12);
}

TEST_CASE("continued fraction equals the Mobius action of the transfer matrix") {
  std::mt19937_64 gen(20);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  const Word w = Word::parse("++-");
  const TransferWord tw = transfer_polynomials(w);
  for (int t = 0; t < 100; ++t) {
    const Complex b(dist(gen), dist(gen));
    const Complex z(dist(gen), dist(gen));
    const Complex denom = tw.alpha_Lm1.eval(z) * b + tw.beta_Lm1.eval(z);
    if (std::abs(denom) < 1e-3) continue;
    const Complex expect = (tw.alpha_L.eval(z) * b + tw.beta_L.eval(z)) / denom;
    CHECK(std::abs(continued_fraction_f(w, b, z) - expect) <= 1e-12 * (1.0 + std::abs(expect)));
  }
}

TEST_CASE("pqr overloads agree") {
  const Word w = Word::parse("++--");
  const PQR a = pqr(w);
  const PQR b = pqr(transfer_polynomials(w));
  CHECK(a.P == b.P);
  CHECK(a.Q == b.Q);
  CHECK(a.R == b.R);
}

}  // TEST_SUITE
