#include "hopspec/transfer.hpp"

#include <cmath>
#include <limits>

namespace hopspec {

namespace {

// The ratio map of a periodic chain depends on where in the period it is
// watched; the trace, Q and the traced curves are rotation-invariant, but P,
// R and the fixed points are not.  We fix the window one letter into the
// word, which normalizes the pole polynomial to R = z^2 + 1 for "++-" (poles
// at +/-i).
Complex recursion_letter(const Word& w, std::size_t j) { return w[(j + 1) % w.length()]; }

}  // namespace

TransferWord transfer_polynomials(const Word& w) {
  const std::size_t L = w.length();
  TransferWord tw;
  tw.length = L;

  CPoly a_prev = CPoly::constant(Complex(1.0, 0.0));    // alpha_0
  CPoly a_cur = CPoly::z();                             // alpha_1
  CPoly b_prev;                                         // beta_0 = 0
  CPoly b_cur = CPoly::constant(-recursion_letter(w, 0));  // beta_1

  const CPoly z = CPoly::z();
  for (std::size_t j = 1; j < L; ++j) {
    const Complex wj = recursion_letter(w, j);
    CPoly a_next = z * a_cur - a_prev * wj;
    CPoly b_next = z * b_cur - b_prev * wj;
    a_prev = std::move(a_cur);
    a_cur = std::move(a_next);
    b_prev = std::move(b_cur);
    b_cur = std::move(b_next);
  }

  tw.alpha_L = std::move(a_cur);
  tw.alpha_Lm1 = std::move(a_prev);
  tw.beta_L = std::move(b_cur);
  tw.beta_Lm1 = std::move(b_prev);
  tw.det = Complex(1.0, 0.0);
  for (const Complex& x : w.letters()) tw.det *= x;
  return tw;
}

PQR pqr(const TransferWord& tw) {
  PQR out;
  out.P = tw.alpha_L - tw.beta_Lm1;
  out.Q = out.P * out.P + (tw.alpha_Lm1 * tw.beta_L) * Complex(4.0, 0.0);
  out.R = tw.alpha_Lm1;
  return out;
}

PQR pqr(const Word& w) { return pqr(transfer_polynomials(w)); }

CPoly q_closed_form(const CyclicInvariants& inv) {
  const Complex one(1.0, 0.0);
  const Complex s = inv.s, p = inv.p;
  std::vector<Complex> u;  // ascending coefficients in u = z^2
  switch (inv.length) {
    case 2: {
      const Complex d = inv.require_d();
      u = {d * d, -2.0 * s, one};
      break;
    }
    case 3:
      u = {-4.0 * p, s * s, -2.0 * s, one};
      break;
    case 4: {
      const Complex k = inv.require_kappa(), w = inv.require_omega();
      u = {w * w, -2.0 * s * k, s * s + 2.0 * k, -2.0 * s, one};
      break;
    }
    case 5: {
      const Complex k = inv.require_kappa();
      u = {-4.0 * p, k * k, -2.0 * s * k, s * s + 2.0 * k, -2.0 * s, one};
      break;
    }
    case 6: {
      const Complex k = inv.require_kappa(), r = inv.require_rho(), d = inv.require_delta();
      u = {d * d, -2.0 * k * r, k * k + 2.0 * s * r, -2.0 * (s * k + r), s * s + 2.0 * k,
           -2.0 * s, one};
      break;
    }
    case 7: {
      const Complex k = inv.require_kappa(), r = inv.require_rho();
      u = {-4.0 * p, r * r, -2.0 * k * r, k * k + 2.0 * s * r, -2.0 * (s * k + r),
           s * s + 2.0 * k, -2.0 * s, one};
      break;
    }
    default:
      throw UnsupportedLength("q_closed_form: no closed form for length " +
                              std::to_string(inv.length));
  }
  return CPoly(std::move(u)).compose_z_squared();
}

FixedPointPair fixed_points(const TransferWord& tw, Complex z, double marginal_tol) {
  FixedPointPair fp;
  const Complex alpha = tw.alpha_L.eval(z);
  const Complex beta = tw.beta_L.eval(z);
  const Complex gamma = tw.alpha_Lm1.eval(z);
  const Complex delta = tw.beta_Lm1.eval(z);
  const Complex P = alpha - delta;
  const Complex Q = P * P + 4.0 * gamma * beta;
  const Complex sq = std::sqrt(Q);

  auto multiplier = [&](Complex b) { return tw.det / ((gamma * b + delta) * (gamma * b + delta)); };

  if (gamma == Complex{}) {
    // Affine map: one fixed point at infinity (reported on the plus branch).
    fp.degenerate = true;
    const double inf = std::numeric_limits<double>::infinity();
    fp.b_plus = Complex(inf, inf);
    fp.deriv_plus = delta / alpha;
    if (P != Complex{}) {
      fp.b_minus = -beta / P;  // solves (delta - alpha) b = beta
      fp.deriv_minus = alpha / delta;
    } else {
      fp.b_minus = Complex(inf, inf);
      fp.deriv_minus = fp.deriv_plus;
    }
  } else {
    // Roots of gamma b^2 + (delta - alpha) b - beta, evaluated stably and then
    // assigned to the two sign branches of (P +/- sqrt(Q)) / (2 gamma).
    Complex ssel = sq;
    if (std::real(std::conj(P) * ssel) < 0.0) ssel = -ssel;
    const Complex big = P + ssel;  // numerator with no cancellation
    Complex r_big, r_small;
    if (big == Complex{}) {  // P == 0 and Q == 0: double root at the origin
      r_big = r_small = Complex{};
    } else {
      r_big = big / (2.0 * gamma);
      r_small = -beta / gamma / r_big;  // product of the roots is -beta/gamma
    }
    if (ssel == sq) {
      fp.b_plus = r_big;
      fp.b_minus = r_small;
    } else {
      fp.b_plus = r_small;
      fp.b_minus = r_big;
    }
    // gamma * b_pm + delta = (trace +/- sqrt(Q)) / 2, the eigenvalues of W, so the
    // multipliers are det / lambda_pm^2 = lambda_mp / lambda_pm.  Forming one ratio and
    // its reciprocal keeps deriv_plus * deriv_minus = 1 to rounding instead of
    // squaring the error in b.
    const Complex tr = alpha + delta;
    Complex tsel = sq;
    if (std::real(std::conj(tr) * tsel) < 0.0) tsel = -tsel;
    const Complex lam_big = 0.5 * (tr + tsel);
    if (lam_big == Complex{}) {  // trace and Q both round to zero
      fp.deriv_plus = multiplier(fp.b_plus);
      fp.deriv_minus = multiplier(fp.b_minus);
    } else {
      const Complex ratio = tw.det / (lam_big * lam_big);
      if (tsel == sq) {
        fp.deriv_plus = ratio;
        fp.deriv_minus = 1.0 / ratio;
      } else {
        fp.deriv_minus = ratio;
        fp.deriv_plus = 1.0 / ratio;
      }
    }
  }

  const double mp = std::abs(fp.deriv_plus);
  const double mm = std::abs(fp.deriv_minus);
  fp.marginal = std::abs(mp - 1.0) < marginal_tol || std::abs(mm - 1.0) < marginal_tol;
  if (!fp.marginal) {
    if (mp < 1.0) fp.stable_index = +1;
    else if (mm < 1.0) fp.stable_index = -1;
  }
  return fp;
}

FixedPointPair fixed_points(const Word& w, Complex z, double marginal_tol) {
  return fixed_points(transfer_polynomials(w), z, marginal_tol);
}

Complex continued_fraction_f(const Word& w, Complex b, Complex z) {
  // projective pair (u, v) with y = u / v; same letter window as
  // transfer_polynomials so the composition equals the Mobius map of W
  Complex u = b, v(1.0, 0.0);
  for (std::size_t k = 0; k < w.length(); ++k) {
    const Complex nu = z * u - recursion_letter(w, k) * v;
    v = u;
    u = nu;
    // keep magnitudes in range on long words
    const double m = std::max(std::abs(u), std::abs(v));
    if (m > 1e100) {
      u /= m;
      v /= m;
    }
  }
  if (v == Complex{}) {
    const double inf = std::numeric_limits<double>::infinity();
    return Complex(inf, inf);
  }
  return u / v;
}

}  // namespace hopspec
