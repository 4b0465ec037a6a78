#include "hopspec/word.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace hopspec {

Word::Word(std::vector<Complex> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw std::invalid_argument("word: empty letter sequence");
  for (const Complex& w : letters_)
    if (w == Complex(0.0, 0.0)) throw std::invalid_argument("word: zero letter");
}

Word Word::parse(std::string_view text) {
  std::vector<Complex> letters;
  letters.reserve(text.size());
  for (char c : text) {
    if (c == '+') letters.emplace_back(1.0, 0.0);
    else if (c == '-') letters.emplace_back(-1.0, 0.0);
    else throw std::invalid_argument(std::string("word: bad letter '") + c + "' (expected + or -)");
  }
  return Word(std::move(letters));
}

Word Word::repeated_sign(int sign, std::size_t length) {
  return Word(std::vector<Complex>(length, Complex(sign < 0 ? -1.0 : 1.0, 0.0)));
}

bool Word::is_binary() const {
  for (const Complex& w : letters_)
    if (w != Complex(1.0, 0.0) && w != Complex(-1.0, 0.0)) return false;
  return true;
}

std::string Word::text() const {
  std::string out;
  if (is_binary()) {
    out.reserve(letters_.size());
    for (const Complex& w : letters_) out.push_back(w.real() > 0 ? '+' : '-');
    return out;
  }
  char buf[64];
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out.push_back(';');
    std::snprintf(buf, sizeof buf, "(%.17g,%.17g)", letters_[i].real(), letters_[i].imag());
    out += buf;
  }
  return out;
}

Word Word::rotated(std::size_t k) const {
  const std::size_t n = letters_.size();
  std::vector<Complex> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = letters_[(i + k) % n];
  return Word(std::move(out));
}

Word Word::repeated(std::size_t times) const {
  if (times == 0) throw std::invalid_argument("word: zero repetitions");
  std::vector<Complex> out;
  out.reserve(letters_.size() * times);
  for (std::size_t t = 0; t < times; ++t)
    out.insert(out.end(), letters_.begin(), letters_.end());
  return Word(std::move(out));
}

bool letter_less(const Complex& a, const Complex& b) {
  if (a.real() != b.real()) return a.real() > b.real();  // '+' before '-'
  return a.imag() < b.imag();
}

bool word_less(const Word& a, const Word& b) {
  return std::lexicographical_compare(a.letters().begin(), a.letters().end(),
                                      b.letters().begin(), b.letters().end(), letter_less);
}

std::vector<Word> enumerate_words(std::size_t length) {
  if (length < 1 || length > 24) throw std::invalid_argument("enumerate_words: length must be in [1,24]");
  std::vector<Word> out;
  out.reserve(std::size_t(1) << length);
  for_each_binary_word(length, [&](const Word& w) { out.push_back(w); });
  return out;
}

void for_each_binary_word(std::size_t length, const std::function<void(const Word&)>& fn) {
  if (length < 1 || length > 24) throw std::invalid_argument("enumerate_words: length must be in [1,24]");
  const std::uint64_t total = std::uint64_t(1) << length;
  std::vector<Complex> letters(length);
  for (std::uint64_t code = 0; code < total; ++code) {
    // bit 0 of the mask is the first letter; 0 -> '+', 1 -> '-'
    for (std::size_t i = 0; i < length; ++i)
      letters[i] = (code >> (length - 1 - i)) & 1 ? Complex(-1.0, 0.0) : Complex(1.0, 0.0);
    fn(Word(letters));
  }
}

std::size_t canonical_rotation_index(const Word& w) {
  // Booth's least-rotation algorithm on the doubled sequence.
  const auto& s = w.letters();
  const std::size_t n = s.size();
  auto at = [&](std::size_t i) -> const Complex& { return s[i % n]; };
  std::vector<std::ptrdiff_t> f(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    std::ptrdiff_t i = f[j - k - 1];
    while (i != -1 && at(j) != at(k + i + 1)) {
      if (letter_less(at(j), at(k + i + 1))) k = j - i - 1;
      i = f[i];
    }
    if (i == -1 && at(j) != at(k)) {
      if (letter_less(at(j), at(k))) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k % n;
}

Word canonical_rotation(const Word& w) { return w.rotated(canonical_rotation_index(w)); }

bool is_primitive(const Word& w) {
  const auto& s = w.letters();
  const std::size_t n = s.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < n && repeats; ++i) repeats = (s[i] == s[i % d]);
    if (repeats) return false;
  }
  return true;
}

Complex CyclicInvariants::require(const std::optional<Complex>& v, const char* name) const {
  if (!v) throw UnsupportedLength(std::string("cyclic invariant '") + name +
                                  "' undefined for length " + std::to_string(length));
  return *v;
}

namespace {

// Indices i<j (0-based) are cyclically adjacent iff they differ by 1 mod L.
bool cyclically_adjacent(std::size_t i, std::size_t j, std::size_t n) {
  std::size_t d = j - i;
  return d == 1 || d == n - 1;
}

Complex pair_sum(const std::vector<Complex>& w) {
  const std::size_t n = w.size();
  Complex k{};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!cyclically_adjacent(i, j, n)) k += w[i] * w[j];
  return k;
}

Complex triple_sum(const std::vector<Complex>& w) {
  const std::size_t n = w.size();
  Complex r{};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t l = j + 1; l < n; ++l)
        if (!cyclically_adjacent(i, j, n) && !cyclically_adjacent(j, l, n) &&
            !cyclically_adjacent(i, l, n))
          r += w[i] * w[j] * w[l];
  return r;
}

}  // namespace

CyclicInvariants cyclic_invariants(const Word& word) {
  const auto& w = word.letters();
  CyclicInvariants inv;
  inv.length = w.size();
  inv.s = Complex{};
  inv.p = Complex(1.0, 0.0);
  for (const Complex& x : w) {
    inv.s += x;
    inv.p *= x;
  }
  switch (w.size()) {
    case 2:
      inv.d = w[0] - w[1];
      break;
    case 4:
      inv.kappa = pair_sum(w);
      inv.omega = w[0] * w[2] - w[1] * w[3];
      break;
    case 5:
      inv.kappa = pair_sum(w);
      break;
    case 6:
      inv.kappa = pair_sum(w);
      inv.rho = triple_sum(w);
      inv.delta = w[0] * w[2] * w[4] - w[1] * w[3] * w[5];
      break;
    case 7:
      inv.kappa = pair_sum(w);
      inv.rho = triple_sum(w);
      break;
    default:
      break;
  }
  return inv;
}

std::size_t Paragraph::letter_count() const {
  std::size_t n = 0;
  for (const Segment& seg : segments) n += seg.word.length() * seg.count;
  return n;
}

std::string Paragraph::text() const {
  std::string out;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (i) out.push_back(',');
    out += segments[i].word.text();
    out.push_back(':');
    out += std::to_string(segments[i].count);
  }
  return out;
}

Paragraph parse_paragraph(std::string_view text) {
  Paragraph p;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                             : comma - pos);
    if (item.empty()) throw std::invalid_argument("paragraph: empty segment");
    std::size_t colon = item.find(':');
    std::string_view word_part = item.substr(0, colon);
    std::size_t count = 1;
    if (colon != std::string_view::npos) {
      std::string_view count_part = item.substr(colon + 1);
      auto [ptr, ec] = std::from_chars(count_part.data(), count_part.data() + count_part.size(), count);
      if (ec != std::errc{} || ptr != count_part.data() + count_part.size() || count == 0)
        throw std::invalid_argument("paragraph: bad repeat count '" + std::string(count_part) + "'");
    }
    p.segments.push_back({Word::parse(word_part), count});
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (p.segments.empty()) throw std::invalid_argument("paragraph: no segments");
  return p;
}

std::vector<Complex> build_paragraph(const Paragraph& p) {
  std::vector<Complex> out;
  out.reserve(p.letter_count());
  for (const Paragraph::Segment& seg : p.segments)
    for (std::size_t t = 0; t < seg.count; ++t)
      out.insert(out.end(), seg.word.letters().begin(), seg.word.letters().end());
  return out;
}

}  // namespace hopspec
