#include "hopspec/rootfind.hpp"

#include <algorithm>
#include <cmath>

#include "hopspec/kernels.hpp"

namespace hopspec {

namespace {

// Stable two-root solve of c2 z^2 + c1 z + c0.
void solve_quadratic(Complex c2, Complex c1, Complex c0, Complex& r1, Complex& r2) {
  const Complex disc = c1 * c1 - 4.0 * c2 * c0;
  Complex s = std::sqrt(disc);
  if (std::real(std::conj(c1) * s) < 0.0) s = -s;
  const Complex q = -0.5 * (c1 + s);
  if (q != Complex{}) {
    r1 = q / c2;
    r2 = c0 / q;
  } else {  // c1 == 0 and c0 == 0 (double root at origin) or both tiny
    r1 = std::sqrt(-c0 / c2);
    r2 = -r1;
  }
}

double fujiwara_radius(const std::vector<Complex>& c) {
  const std::size_t d = c.size() - 1;
  const double lead = std::abs(c[d]);
  double r = 0.0;
  for (std::size_t k = 1; k <= d; ++k) {
    const double a = std::abs(c[d - k]) / lead;
    if (a > 0.0) r = std::max(r, std::pow(k == d ? 0.5 * a : a, 1.0 / double(k)));
  }
  return 2.0 * r;
}

}  // namespace

RootSet find_roots(const CPoly& p, double tol, int max_sweeps, const std::vector<Complex>* initial) {
  const std::vector<Complex>& c_all = p.coeffs();
  if (p.degree() < 1 || p.is_zero())
    throw std::invalid_argument("find_roots: degree must be >= 1");

  // Strip exact zero roots.
  std::size_t m = 0;
  while (m < c_all.size() - 1 && c_all[m] == Complex{}) ++m;
  std::vector<Complex> c(c_all.begin() + m, c_all.end());
  const std::size_t d = c.size() - 1;

  RootSet out;
  out.tolerance = tol;
  out.roots.assign(m, Complex{});
  out.residuals.assign(m, 0.0);

  if (d == 1) {
    out.roots.push_back(-c[0] / c[1]);
  } else if (d == 2) {
    Complex r1, r2;
    solve_quadratic(c[2], c[1], c[0], r1, r2);
    out.roots.push_back(r1);
    out.roots.push_back(r2);
  } else if (d >= 3) {
    const auto& K = kernels::active();

    std::vector<double> cre(d + 1), cim(d + 1), dre(d), dim(d);
    for (std::size_t k = 0; k <= d; ++k) {
      cre[k] = c[k].real();
      cim[k] = c[k].imag();
    }
    for (std::size_t k = 1; k <= d; ++k) {
      dre[k - 1] = double(k) * c[k].real();
      dim[k - 1] = double(k) * c[k].imag();
    }

    std::vector<double> zre(d), zim(d);
    if (initial && initial->size() == d) {
      for (std::size_t j = 0; j < d; ++j) {
        zre[j] = (*initial)[j].real();
        zim[j] = (*initial)[j].imag();
      }
    } else {
      const double r = std::max(fujiwara_radius(c) * 0.5, 1e-3);
      for (std::size_t j = 0; j < d; ++j) {
        // offset breaks conjugate symmetry, which can stall Jacobi sweeps
        const double a = 2.0 * M_PI * (double(j) + 0.5) / double(d) + 0.4;
        zre[j] = r * std::cos(a);
        zim[j] = r * std::sin(a);
      }
    }

    std::vector<double> pre(d), pim(d), qre(d), qim(d), sre(d), sim(d);
    std::vector<char> done(d, 0);
    int sweep = 0;
    bool all_done = false;
    for (; sweep < max_sweeps && !all_done; ++sweep) {
      K.horner_many(cre.data(), cim.data(), d + 1, zre.data(), zim.data(), d, pre.data(), pim.data());
      K.horner_many(dre.data(), dim.data(), d, zre.data(), zim.data(), d, qre.data(), qim.data());
      K.pairwise_inv_sums(zre.data(), zim.data(), d, sre.data(), sim.data());

      all_done = true;
      for (std::size_t j = 0; j < d; ++j) {
        if (done[j]) continue;
        const Complex pv(pre[j], pim[j]);
        const Complex dv(qre[j], qim[j]);
        Complex z(zre[j], zim[j]);
        if (dv == Complex{}) {  // sitting on a critical point: nudge and retry
          z += Complex(1e-6, 1e-6) * (1.0 + std::abs(z));
          zre[j] = z.real();
          zim[j] = z.imag();
          all_done = false;
          continue;
        }
        const Complex newton = pv / dv;
        const Complex denom = 1.0 - newton * Complex(sre[j], sim[j]);
        const Complex w = denom == Complex{} ? newton : newton / denom;
        z -= w;
        zre[j] = z.real();
        zim[j] = z.imag();
        if (std::abs(w) <= tol * (1.0 + std::abs(z)))
          done[j] = 1;  // freeze; keeps clusters from jittering each other
        else
          all_done = false;
      }

      // Exactly coincident iterates would receive identical updates forever.
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a + 1; b < d; ++b)
          if (zre[a] == zre[b] && zim[a] == zim[b]) {
            zre[b] += 1e-9 * (1.0 + std::abs(zre[b]));
            zim[b] += 2e-9 * (1.0 + std::abs(zim[b]));
            done[b] = 0;
          }
    }
    out.sweeps = sweep;

    std::vector<Complex> iterates(d);
    for (std::size_t j = 0; j < d; ++j) iterates[j] = Complex(zre[j], zim[j]);
    if (!all_done) {
      std::vector<Complex> best = out.roots;
      best.insert(best.end(), iterates.begin(), iterates.end());
      throw ConvergenceError("find_roots: no convergence after " + std::to_string(sweep) +
                                 " sweeps (degree " + std::to_string(p.degree()) + ")",
                             std::move(best), sweep);
    }
    out.roots.insert(out.roots.end(), iterates.begin(), iterates.end());
  }

  std::sort(out.roots.begin(), out.roots.end(), complex_less);
  out.residuals.resize(out.roots.size());
  for (std::size_t j = 0; j < out.roots.size(); ++j) out.residuals[j] = std::abs(p.eval(out.roots[j]));
  return out;
}

}  // namespace hopspec
