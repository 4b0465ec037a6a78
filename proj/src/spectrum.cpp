#include "hopspec/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "hopspec/eig.hpp"
#include "hopspec/rootfind.hpp"

namespace hopspec {

namespace {

// Greedy globally-nearest assignment between consecutive root sets.  Exact
// ties break toward the lowest index pair, so assembly is deterministic.
std::vector<std::size_t> match_points(const std::vector<Complex>& prev,
                                      const std::vector<Complex>& cur) {
  const std::size_t n = prev.size();
  std::vector<std::size_t> assign(n, n);
  std::vector<char> prev_used(n, 0), cur_used(n, 0);
  for (std::size_t round = 0; round < n; ++round) {
    double best = -1.0;
    std::size_t bi = n, bj = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (prev_used[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (cur_used[j]) continue;
        const double d = std::abs(prev[i] - cur[j]);
        if (best < 0.0 || d < best) {
          best = d;
          bi = i;
          bj = j;
        }
      }
    }
    prev_used[bi] = 1;
    cur_used[bj] = 1;
    assign[bi] = bj;
  }
  return assign;
}

std::vector<Complex> roots_or_empty(const CPoly& p) {
  if (p.degree() < 1 || p.is_zero()) return {};
  return find_roots(p).roots;
}

}  // namespace

IsolatedPoints isolated_points(const Word& w) {
  const TransferWord tw = transfer_polynomials(w);
  IsolatedPoints out;
  out.poles = roots_or_empty(tw.alpha_Lm1);
  for (const Complex& z : roots_or_empty(tw.beta_L)) {
    // b = 0 is fixed here; its multiplier is det / beta_{L-1}(z)^2
    const Complex delta = tw.beta_Lm1.eval(z);
    if (delta == Complex{}) continue;
    if (std::abs(tw.det) < std::norm(delta) * (1.0 - 1e-9)) out.points.push_back(z);
  }
  return out;
}

WordSpectrum bloch_curve(const Word& w, std::size_t theta_steps) {
  if (theta_steps < 2) throw std::invalid_argument("bloch_curve: need at least 2 theta steps");
  const std::size_t L = w.length();
  const TransferWord tw = transfer_polynomials(w);
  const PQR parts = pqr(tw);

  WordSpectrum ws{.word = w,
                  .det = tw.det,
                  .trace = tw.trace(),
                  .Q = parts.Q,
                  .R = parts.R,
                  .branches = {},
                  .endpoints = {},
                  .isolated = isolated_points(w),
                  .gap_thetas = {}};
  ws.endpoints = roots_or_empty(parts.Q);
  ws.branches.assign(L, BlochBranch{});

  const Complex sqdet = std::sqrt(tw.det);  // principal: -1 -> i
  std::vector<Complex> prev_roots;
  std::vector<std::size_t> chain_of;  // root index -> branch index at previous theta

  for (std::size_t t = 0; t < theta_steps; ++t) {
    const double theta = 2.0 * M_PI * double(t) / double(theta_steps);
    CPoly poly = ws.trace - CPoly::constant(2.0 * sqdet * std::cos(theta));

    std::vector<Complex> roots;
    try {
      const std::vector<Complex>* hint = prev_roots.empty() ? nullptr : &prev_roots;
      roots = find_roots(poly, 1e-12, 200, hint).roots;
    } catch (const ConvergenceError&) {
      ws.gap_thetas.push_back(t);
      continue;
    }

    if (prev_roots.empty()) {
      chain_of.resize(L);
      for (std::size_t j = 0; j < L; ++j) chain_of[j] = j;
    } else {
      const std::vector<std::size_t> assign = match_points(prev_roots, roots);
      std::vector<std::size_t> next_chain(L);
      for (std::size_t i = 0; i < L; ++i) next_chain[assign[i]] = chain_of[i];
      chain_of = std::move(next_chain);
    }
    for (std::size_t j = 0; j < L; ++j) {
      BlochBranch& br = ws.branches[chain_of[j]];
      br.theta.push_back(theta);
      br.points.push_back(roots[j]);
    }
    prev_roots = std::move(roots);
  }
  return ws;
}

std::vector<Complex> support_points(const WordSpectrum& ws) {
  std::vector<Complex> out;
  for (const BlochBranch& br : ws.branches)
    out.insert(out.end(), br.points.begin(), br.points.end());
  out.insert(out.end(), ws.isolated.points.begin(), ws.isolated.points.end());
  return out;
}

BlochMatrixSpectrum bloch_matrix_eigs(const Word& w, std::size_t phi_steps) {
  const std::size_t L = w.length();
  if (L > 16) throw std::invalid_argument("bloch_matrix_eigs: length capped at 16");
  if (phi_steps < 1) throw std::invalid_argument("bloch_matrix_eigs: need at least 1 phi step");

  BlochMatrixSpectrum out;
  out.phi.reserve(phi_steps);
  out.eigenvalues.reserve(phi_steps);

  for (std::size_t t = 0; t < phi_steps; ++t) {
    const double phi = 2.0 * M_PI * double(t) / double(phi_steps);
    const Complex fwd = std::polar(1.0, phi);
    const Complex bwd = std::polar(1.0, -phi);

    CMatrix h(L);
    for (std::size_t k = 0; k + 1 < L; ++k) {
      h(k, k + 1) += Complex(1.0, 0.0);
      h(k + 1, k) += w[k];
    }
    h(L - 1, 0) += fwd;           // wrap of the unit superdiagonal
    h(0, L - 1) += w[L - 1] * bwd;  // wrap of the letter subdiagonal

    std::vector<Complex> eig = eig_dense(std::move(h));
    std::sort(eig.begin(), eig.end(), complex_less);
    out.phi.push_back(phi);
    out.eigenvalues.push_back(std::move(eig));
  }
  return out;
}

}  // namespace hopspec
