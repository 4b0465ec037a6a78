#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hopspec {

using Complex = std::complex<double>;

// Thrown when an L-specific cyclic invariant is requested for a length that
// does not define it.
struct UnsupportedLength : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A finite sequence of nonzero hopping letters w_1..w_L.  Binary words use
// letters +1/-1 and round-trip through the text form "++-".
class Word {
public:
  explicit Word(std::vector<Complex> letters);

  static Word parse(std::string_view text);   // "+-" alphabet only
  static Word repeated_sign(int sign, std::size_t length);

  std::size_t length() const { return letters_.size(); }
  const std::vector<Complex>& letters() const { return letters_; }
  const Complex& operator[](std::size_t i) const { return letters_[i]; }  // 0-based

  bool is_binary() const;
  std::string text() const;                    // "++-" for binary, "(re,im);..." otherwise

  Word rotated(std::size_t k) const;           // left rotation by k letters
  Word repeated(std::size_t times) const;

  bool operator==(const Word&) const = default;

private:
  std::vector<Complex> letters_;
};

// Letter order used everywhere a deterministic order over words is needed:
// '+' sorts before '-'; general letters by descending re, then ascending im.
bool letter_less(const Complex& a, const Complex& b);
bool word_less(const Word& a, const Word& b);

// All 2^L binary words of the given length in lexicographic order (+ first).
// Materialises the full list; use for_each_binary_word for large L.
std::vector<Word> enumerate_words(std::size_t length);
void for_each_binary_word(std::size_t length, const std::function<void(const Word&)>& fn);

// Lexicographically least rotation (Booth), under letter_less.
Word canonical_rotation(const Word& w);
std::size_t canonical_rotation_index(const Word& w);

// True when w is not a proper power of a shorter word.
bool is_primitive(const Word& w);

// Cyclic functions of the letters.  s and p exist for every length; the
// remaining fields only for the lengths that define them:
//   d     (L=2)          w1 - w2
//   kappa (L=4..7)       sum of products over cyclically non-adjacent pairs
//   rho   (L=6,7)        sum of products over cyclically independent triples
//   omega (L=4)          w1 w3 - w2 w4
//   delta (L=6)          w1 w3 w5 - w2 w4 w6
// d, omega and delta flip sign under odd rotations; only their squares are
// rotation invariants.
struct CyclicInvariants {
  std::size_t length = 0;
  Complex s{};  // sum of letters
  Complex p{};  // product of letters
  std::optional<Complex> d, kappa, rho, omega, delta;

  Complex require_d() const { return require(d, "d"); }
  Complex require_kappa() const { return require(kappa, "kappa"); }
  Complex require_rho() const { return require(rho, "rho"); }
  Complex require_omega() const { return require(omega, "omega"); }
  Complex require_delta() const { return require(delta, "delta"); }

private:
  Complex require(const std::optional<Complex>& v, const char* name) const;
};

CyclicInvariants cyclic_invariants(const Word& w);

// A concatenation of repeated words, e.g. "++-:16,+++:1,++-:16".
struct Paragraph {
  struct Segment {
    Word word;
    std::size_t count = 1;
  };
  std::vector<Segment> segments;

  std::size_t letter_count() const;
  std::string text() const;
};

Paragraph parse_paragraph(std::string_view text);
std::vector<Complex> build_paragraph(const Paragraph& p);

}  // namespace hopspec
