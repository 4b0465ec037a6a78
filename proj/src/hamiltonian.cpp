#include "hopspec/hamiltonian.hpp"

#include <algorithm>
#include <cmath>

#include "hopspec/rng.hpp"
#include "hopspec/rootfind.hpp"

namespace hopspec {

std::vector<Complex> build_subdiagonal(const HamiltonianSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("hamiltonian: n must be >= 1");
  std::vector<Complex> r(spec.n);

  struct Builder {
    std::vector<Complex>& r;

    void operator()(const PeriodicSource& s) const {
      const auto& w = s.word.letters();
      for (std::size_t k = 0; k < r.size(); ++k) r[k] = w[k % w.size()];
    }
    void operator()(const RandomSignSource& s) const {
      for (std::size_t k = 0; k < r.size(); ++k) r[k] = Complex(rng::sign_at(s.seed, k), 0.0);
    }
    void operator()(const RandomPhaseSource& s) const {
      for (std::size_t k = 0; k < r.size(); ++k) {
        const double t = 2.0 * M_PI * rng::unit(rng::at(s.seed, k));
        r[k] = Complex(std::cos(t), std::sin(t));
      }
    }
    void operator()(const ParagraphSource& s) const {
      const std::vector<Complex> letters = build_paragraph(s.paragraph);
      for (std::size_t k = 0; k < r.size(); ++k) r[k] = letters[k % letters.size()];
    }
    void operator()(const ExplicitSource& s) const {
      if (s.letters.size() != r.size())
        throw std::invalid_argument("hamiltonian: explicit source has " +
                                    std::to_string(s.letters.size()) + " letters, need " +
                                    std::to_string(r.size()));
      std::copy(s.letters.begin(), s.letters.end(), r.begin());
    }
  };

  std::visit(Builder{r}, spec.source);
  for (const Complex& v : r)
    if (v == Complex{}) throw std::invalid_argument("hamiltonian: zero subdiagonal letter");
  return r;
}

namespace {

bool all_real(const std::vector<Complex>& v) {
  for (const Complex& x : v)
    if (x.imag() != 0.0) return false;
  return true;
}

}  // namespace

EigenResult eigenvalues_qr(const HamiltonianSpec& spec) {
  const std::vector<Complex> r = build_subdiagonal(spec);
  const std::size_t dim = spec.n + 1;
  EigenResult out;

  if (all_real(r)) {
    out.real_path = true;
    RMatrix h(dim);
    for (std::size_t k = 0; k < spec.n; ++k) {
      h(k, k + 1) = 1.0;
      h(k + 1, k) = r[k].real();
    }
    out.eigenvalues = eig_hessenberg_real(std::move(h), &out.stats);
  } else {
    CMatrix h(dim);
    for (std::size_t k = 0; k < spec.n; ++k) {
      h(k, k + 1) = Complex(1.0, 0.0);
      h(k + 1, k) = r[k];
    }
    out.eigenvalues = eig_hessenberg(std::move(h), &out.stats);
  }

  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), complex_less);
  return out;
}

CPoly char_poly(const HamiltonianSpec& spec) {
  const std::vector<Complex> r = build_subdiagonal(spec);
  CPoly d_prev = CPoly::constant(Complex(1.0, 0.0));  // D_0
  CPoly d_cur = CPoly::z();                           // D_1
  const CPoly z = CPoly::z();
  for (std::size_t k = 0; k < spec.n; ++k) {
    CPoly d_next = z * d_cur - d_prev * r[k];
    d_prev = std::move(d_cur);
    d_cur = std::move(d_next);
  }
  return d_cur;
}

EigenResult eigenvalues_via_roots(const HamiltonianSpec& spec, double tol) {
  const RootSet rs = find_roots(char_poly(spec), tol);
  EigenResult out;
  out.eigenvalues = rs.roots;  // find_roots sorts
  return out;
}

std::vector<Complex> gauge_reduce(const std::vector<Complex>& superdiag,
                                  const std::vector<Complex>& subdiag) {
  if (superdiag.size() != subdiag.size())
    throw std::invalid_argument("gauge_reduce: link count mismatch");
  std::vector<Complex> out(subdiag.size());
  for (std::size_t k = 0; k < subdiag.size(); ++k) {
    if (superdiag[k] == Complex{})
      throw std::invalid_argument("gauge_reduce: zero superdiagonal link at " + std::to_string(k));
    out[k] = superdiag[k] * subdiag[k];
  }
  return out;
}

}  // namespace hopspec
