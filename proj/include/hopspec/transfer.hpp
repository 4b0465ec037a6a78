#pragma once

#include "hopspec/cpoly.hpp"
#include "hopspec/word.hpp"

namespace hopspec {

// Entries of the word transfer matrix W(z) = T_L ... T_1 with
// T_k = [[z, -w_k], [1, 0]]:
//   W = [[alpha_L, beta_L], [alpha_{L-1}, beta_{L-1}]],
// built by the three-term recursions
//   alpha_{j+1} = z alpha_j - w_{j+1} alpha_{j-1},  alpha_0 = 1, alpha_1 = z
//   beta_{j+1}  = z beta_j  - w_{j+1} beta_{j-1},   beta_0  = 0, beta_1 = -w_1.
// The recursion letters (w_1..w_L) are the word's letters read from one
// position into the period (a fixed rotation): where in the period the ratio
// map is watched is a convention, and this one normalizes R("++-") = z^2 + 1.
// Rotation-invariant outputs (trace, det, Q) are unaffected.
// det W equals the letter product p; all entries are exact integer-coefficient
// polynomials for +/-1 words.
struct TransferWord {
  std::size_t length = 0;
  CPoly alpha_L, beta_L, alpha_Lm1, beta_Lm1;
  Complex det{};  // product of the letters

  CPoly trace() const { return alpha_L + beta_Lm1; }
};

TransferWord transfer_polynomials(const Word& w);

// P = alpha_L - beta_{L-1},  Q = P^2 + 4 alpha_{L-1} beta_L,  R = alpha_{L-1}.
// Q == trace^2 - 4 det identically, and contains only even powers.
struct PQR {
  CPoly P, Q, R;
};

PQR pqr(const TransferWord& tw);
PQR pqr(const Word& w);

// Closed form of Q for lengths 2..7 from the cyclic invariants.  Throws
// UnsupportedLength outside that range.
CPoly q_closed_form(const CyclicInvariants& inv);

// Fixed points b = (P +/- sqrt(Q)) / (2R) of the Mobius map
// f(y) = (alpha_L y + beta_L) / (alpha_{L-1} y + beta_{L-1}) at a given z,
// with multipliers f'(b) = det / (alpha_{L-1} b + beta_{L-1})^2.  The two
// multipliers have product 1, so away from |f'| = 1 exactly one branch is
// attracting.
struct FixedPointPair {
  Complex b_plus{}, b_minus{};
  Complex deriv_plus{}, deriv_minus{};
  int stable_index = 0;     // +1 b_plus attracting, -1 b_minus, 0 neither
  bool marginal = false;    // some |f'| within marginal_tol of 1
  bool degenerate = false;  // R(z) == 0: map is affine, b_plus reported at infinity
};

FixedPointPair fixed_points(const TransferWord& tw, Complex z, double marginal_tol = 1e-9);
FixedPointPair fixed_points(const Word& w, Complex z, double marginal_tol = 1e-9);

// L steps of the continued fraction y <- z - w_k / y starting at y = b,
// evaluated projectively so poles pass through cleanly.  Equals f(b) of the
// word's Mobius map; returns complex infinity when the result is the point at
// infinity.
Complex continued_fraction_f(const Word& w, Complex b, Complex z);

}  // namespace hopspec
