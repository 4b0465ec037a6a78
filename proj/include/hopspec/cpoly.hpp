#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace hopspec {

using Complex = std::complex<double>;

// Dense polynomial over C, coefficients in ascending order: c[k] multiplies z^k.
// Integer-valued coefficients stay exact as long as they fit a double, so
// polynomial identities over small words can be checked with operator==.
class CPoly {
public:
  CPoly() : c_{Complex{}} {}
  explicit CPoly(std::vector<Complex> coeffs);
  static CPoly constant(Complex value) { return CPoly({value}); }
  static CPoly z();  // the monomial z

  const std::vector<Complex>& coeffs() const { return c_; }
  std::size_t degree() const { return c_.size() - 1; }  // deg 0 for the zero poly
  bool is_zero() const;
  Complex leading() const { return c_.back(); }
  Complex operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Complex{}; }

  Complex eval(Complex z) const;       // Horner
  CPoly derivative() const;

  CPoly operator+(const CPoly& o) const;
  CPoly operator-(const CPoly& o) const;
  CPoly operator*(const CPoly& o) const;
  CPoly operator*(Complex scale) const;
  CPoly operator-() const { return *this * Complex(-1.0, 0.0); }

  // p(z^2): even-degree stretch, used by the closed forms which are
  // polynomials in z^2.
  CPoly compose_z_squared() const;

  bool operator==(const CPoly& o) const { return c_ == o.c_; }

  // Space-separated ascending coefficients, each "re", "re+imi" or "re-imi".
  std::string text() const;
  static CPoly parse(std::string_view text);

private:
  void trim();
  std::vector<Complex> c_;
};

std::string format_double(double v);     // shortest round-trip decimal
std::string format_complex(Complex v);   // "re" or "re+imi", shortest round-trip
Complex parse_complex(std::string_view token);

// Deterministic total order used whenever complex values are sorted.
inline bool complex_less(const Complex& a, const Complex& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

}  // namespace hopspec
