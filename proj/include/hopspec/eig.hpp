#pragma once

#include <stdexcept>
#include <vector>

#include "hopspec/cpoly.hpp"

namespace hopspec {

// Row-major dense complex matrix, just enough surface for the eigensolvers.
struct CMatrix {
  std::size_t n = 0;
  std::vector<Complex> a;

  CMatrix() = default;
  explicit CMatrix(std::size_t size) : n(size), a(size * size) {}
  Complex& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

struct RMatrix {
  std::size_t n = 0;
  std::vector<double> a;

  RMatrix() = default;
  explicit RMatrix(std::size_t size) : n(size), a(size * size) {}
  double& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
  const double& operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

// A deflation window refused to converge within the iteration cap; the
// eigenvalues already deflated are retained for diagnosis.
struct EigNonConvergence : std::runtime_error {
  EigNonConvergence(std::string msg, std::vector<Complex> partial)
      : std::runtime_error(std::move(msg)), deflated(std::move(partial)) {}
  std::vector<Complex> deflated;
};

struct QRStats {
  int sweeps = 0;
  int exceptional_shifts = 0;
};

// Eigenvalues of a complex upper-Hessenberg matrix: explicit single-shift QR
// with Wilkinson shifts and standard deflation.  Unsorted output.
std::vector<Complex> eig_hessenberg(CMatrix h, QRStats* stats = nullptr);

// Eigenvalues of a real upper-Hessenberg matrix: Francis double-shift bulge
// chase, entirely in real arithmetic.  Complex conjugate pairs come out of
// the same 2x2 block, so a pair is exactly conjugate.  Unsorted output.
std::vector<Complex> eig_hessenberg_real(RMatrix h, QRStats* stats = nullptr);

// Dense complex eigenvalues: Householder reduction to Hessenberg + QR.
std::vector<Complex> eig_dense(CMatrix a, QRStats* stats = nullptr);

}  // namespace hopspec
