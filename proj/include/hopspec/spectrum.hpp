#pragma once

#include <vector>

#include "hopspec/cpoly.hpp"
#include "hopspec/transfer.hpp"
#include "hopspec/word.hpp"

namespace hopspec {

// One analytic branch of the Bloch curve: the roots of
//   trace W(z) = 2 sqrt(det) cos(theta)
// traced over the theta grid and matched point-to-point between consecutive
// theta values.  Gaps (root-finder failures at some theta) simply leave that
// theta out of every branch.
struct BlochBranch {
  std::vector<double> theta;
  std::vector<Complex> points;
};

// Roots of beta_L where the vanishing fixed point is attracting, plus the
// poles (roots of R) kept separately.
struct IsolatedPoints {
  std::vector<Complex> points;
  std::vector<Complex> poles;
};

struct WordSpectrum {
  Word word;
  Complex det{};
  CPoly trace, Q, R;
  std::vector<BlochBranch> branches;     // L branches, theta-aligned
  std::vector<Complex> endpoints;        // roots of Q (branch points of sqrt)
  IsolatedPoints isolated;
  std::vector<std::size_t> gap_thetas;   // grid indices skipped after failures
};

// theta grid is 2*pi*t/steps for t = 0..steps-1; sqrt(det) takes the
// principal branch (so det = -1 contributes the factor i).
WordSpectrum bloch_curve(const Word& w, std::size_t theta_steps = 2048);

IsolatedPoints isolated_points(const Word& w);

// Flattened support of one word: every traced curve point plus the isolated
// points.  Unions across words are concatenations of these.
std::vector<Complex> support_points(const WordSpectrum& ws);

// Spectrum of the L x L periodic Bloch matrix (unit superdiagonal, letter
// subdiagonal, phase-twisted wrap links) over a phi grid.  Dense solve; L is
// capped at 16.
struct BlochMatrixSpectrum {
  std::vector<double> phi;
  std::vector<std::vector<Complex>> eigenvalues;  // per phi, sorted
};

BlochMatrixSpectrum bloch_matrix_eigs(const Word& w, std::size_t phi_steps);

}  // namespace hopspec
