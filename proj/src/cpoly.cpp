#include "hopspec/cpoly.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace hopspec {

CPoly::CPoly(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) c_.push_back(Complex{});
  trim();
}

CPoly CPoly::z() { return CPoly({Complex{}, Complex(1.0, 0.0)}); }

void CPoly::trim() {
  while (c_.size() > 1 && c_.back() == Complex{}) c_.pop_back();
}

bool CPoly::is_zero() const { return c_.size() == 1 && c_[0] == Complex{}; }

Complex CPoly::eval(Complex z) const {
  Complex acc = c_.back();
  for (std::size_t k = c_.size() - 1; k-- > 0;) acc = acc * z + c_[k];
  return acc;
}

CPoly CPoly::derivative() const {
  if (c_.size() == 1) return CPoly();
  std::vector<Complex> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = double(k) * c_[k];
  return CPoly(std::move(d));
}

CPoly CPoly::operator+(const CPoly& o) const {
  std::vector<Complex> out(std::max(c_.size(), o.c_.size()), Complex{});
  for (std::size_t k = 0; k < c_.size(); ++k) out[k] += c_[k];
  for (std::size_t k = 0; k < o.c_.size(); ++k) out[k] += o.c_[k];
  return CPoly(std::move(out));
}

CPoly CPoly::operator-(const CPoly& o) const {
  std::vector<Complex> out(std::max(c_.size(), o.c_.size()), Complex{});
  for (std::size_t k = 0; k < c_.size(); ++k) out[k] += c_[k];
  for (std::size_t k = 0; k < o.c_.size(); ++k) out[k] -= o.c_[k];
  return CPoly(std::move(out));
}

CPoly CPoly::operator*(const CPoly& o) const {
  if (is_zero() || o.is_zero()) return CPoly();
  std::vector<Complex> out(c_.size() + o.c_.size() - 1, Complex{});
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  return CPoly(std::move(out));
}

CPoly CPoly::operator*(Complex scale) const {
  std::vector<Complex> out(c_);
  for (Complex& v : out) v *= scale;
  return CPoly(std::move(out));
}

CPoly CPoly::compose_z_squared() const {
  std::vector<Complex> out(2 * (c_.size() - 1) + 1, Complex{});
  for (std::size_t k = 0; k < c_.size(); ++k) out[2 * k] = c_[k];
  return CPoly(std::move(out));
}

std::string format_double(double v) {
  char buf[40];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, end);
}

std::string format_complex(Complex v) {
  if (v.imag() == 0.0) return format_double(v.real());
  std::string out = format_double(v.real());
  if (!(v.imag() < 0.0) && !std::signbit(v.imag())) out.push_back('+');
  out += format_double(v.imag());
  out.push_back('i');
  return out;
}

Complex parse_complex(std::string_view token) {
  if (token.empty()) throw std::invalid_argument("complex: empty token");
  const bool has_i = token.back() == 'i' || token.back() == 'I';
  std::string_view body = has_i ? token.substr(0, token.size() - 1) : token;
  if (body.empty()) throw std::invalid_argument("complex: bare 'i' not accepted");

  // Split at the sign that separates real and imaginary parts (skip a leading
  // sign and signs inside exponents).
  std::size_t split = std::string_view::npos;
  for (std::size_t k = 1; k < body.size(); ++k) {
    char c = body[k];
    if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') split = k;
  }

  auto parse_double = [](std::string_view s) {
    double v = 0.0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);  // from_chars rejects '+'
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
      throw std::invalid_argument("complex: bad number '" + std::string(s) + "'");
    return v;
  };

  if (split == std::string_view::npos) {
    double v = parse_double(body);
    return has_i ? Complex(0.0, v) : Complex(v, 0.0);
  }
  if (!has_i) throw std::invalid_argument("complex: two parts but no trailing i in '" + std::string(token) + "'");
  return Complex(parse_double(body.substr(0, split)), parse_double(body.substr(split)));
}

std::string CPoly::text() const {
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (k) out.push_back(' ');
    out += format_complex(c_[k]);
  }
  return out;
}

CPoly CPoly::parse(std::string_view text) {
  std::vector<Complex> coeffs;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos >= text.size()) break;
    std::size_t end = text.find(' ', pos);
    if (end == std::string_view::npos) end = text.size();
    coeffs.push_back(parse_complex(text.substr(pos, end - pos)));
    pos = end;
  }
  if (coeffs.empty()) throw std::invalid_argument("polynomial: no coefficients");
  return CPoly(std::move(coeffs));
}

}  // namespace hopspec
