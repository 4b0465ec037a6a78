#include "hopspec/eig.hpp"

#include <cfloat>
#include <cmath>

namespace hopspec {

namespace {

constexpr int kMaxItersPerBlock = 60;
constexpr int kExceptionalEvery = 10;

// Unitary G = [[c, s], [-conj(s), c]] with real c >= 0 mapping (a, b) to
// (r, 0).
void complex_givens(Complex a, Complex b, double& c, Complex& s) {
  if (b == Complex{}) {
    c = 1.0;
    s = Complex{};
    return;
  }
  if (a == Complex{}) {
    c = 0.0;
    s = std::conj(b) / std::abs(b);
    return;
  }
  const double norm = std::hypot(std::abs(a), std::abs(b));
  c = std::abs(a) / norm;
  s = (a / std::abs(a)) * std::conj(b) / norm;
}

// Eigenvalues of [[a, b], [c, d]], cancellation-safe.
void eig2x2(Complex a, Complex b, Complex c, Complex d, Complex& l1, Complex& l2) {
  const Complex mid = 0.5 * (a + d);
  const Complex det = a * d - b * c;
  Complex s = std::sqrt(mid * mid - det);
  if (std::real(std::conj(mid) * s) < 0.0) s = -s;
  l1 = mid + s;
  l2 = (l1 == Complex{}) ? mid - s : det / l1;
}

}  // namespace

std::vector<Complex> eig_hessenberg(CMatrix h, QRStats* stats) {
  const std::size_t n = h.n;
  std::vector<Complex> eig;
  eig.reserve(n);
  if (n == 0) return eig;

  double hmax = 0.0;
  for (const Complex& v : h.a) hmax = std::max(hmax, std::abs(v));
  if (hmax == 0.0) hmax = 1.0;

  std::ptrdiff_t hi = std::ptrdiff_t(n) - 1;
  int iters = 0;
  QRStats local;

  auto subdiag_negligible = [&](std::ptrdiff_t k) {
    double thr = DBL_EPSILON * (std::abs(h(k - 1, k - 1)) + std::abs(h(k, k)));
    if (thr == 0.0) thr = DBL_EPSILON * hmax;
    return std::abs(h(k, k - 1)) <= thr;
  };

  while (hi >= 0) {
    // bottom-up deflation
    if (hi == 0) {
      eig.push_back(h(0, 0));
      break;
    }
    if (subdiag_negligible(hi)) {
      eig.push_back(h(hi, hi));
      --hi;
      iters = 0;
      continue;
    }
    if (hi == 1 || subdiag_negligible(hi - 1)) {
      Complex l1, l2;
      eig2x2(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi), l1, l2);
      eig.push_back(l1);
      eig.push_back(l2);
      hi -= 2;
      iters = 0;
      continue;
    }

    // active window [lo, hi]
    std::ptrdiff_t lo = hi;
    while (lo > 0 && !subdiag_negligible(lo)) --lo;

    if (++iters > kMaxItersPerBlock)
      throw EigNonConvergence("eig_hessenberg: window [" + std::to_string(lo) + "," +
                                  std::to_string(hi) + "] stuck after " +
                                  std::to_string(kMaxItersPerBlock) + " sweeps",
                              std::move(eig));
    ++local.sweeps;

    Complex sigma;
    if (iters % kExceptionalEvery == 0) {
      ++local.exceptional_shifts;
      sigma = Complex(std::abs(h(hi, hi - 1)) + std::abs(h(hi - 1, hi - 2)), 0.0);
    } else {
      // Wilkinson: trailing 2x2 eigenvalue closest to h(hi,hi)
      Complex l1, l2;
      eig2x2(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi), l1, l2);
      sigma = std::abs(l1 - h(hi, hi)) <= std::abs(l2 - h(hi, hi)) ? l1 : l2;
    }

    for (std::ptrdiff_t k = lo; k <= hi; ++k) h(k, k) -= sigma;

    // QR by Givens rows, then RQ by the conjugate column rotations
    std::vector<double> cs(hi - lo);
    std::vector<Complex> sn(hi - lo);
    for (std::ptrdiff_t k = lo; k < hi; ++k) {
      double c;
      Complex s;
      complex_givens(h(k, k), h(k + 1, k), c, s);
      cs[k - lo] = c;
      sn[k - lo] = s;
      for (std::ptrdiff_t j = k; j <= hi; ++j) {
        const Complex t1 = h(k, j), t2 = h(k + 1, j);
        h(k, j) = c * t1 + s * t2;
        h(k + 1, j) = -std::conj(s) * t1 + c * t2;
      }
    }
    for (std::ptrdiff_t k = lo; k < hi; ++k) {
      const double c = cs[k - lo];
      const Complex s = sn[k - lo];
      const std::ptrdiff_t rmax = std::min(k + 2, hi);
      for (std::ptrdiff_t i = lo; i <= rmax; ++i) {
        const Complex t1 = h(i, k), t2 = h(i, k + 1);
        h(i, k) = c * t1 + std::conj(s) * t2;
        h(i, k + 1) = -s * t1 + c * t2;
      }
    }

    for (std::ptrdiff_t k = lo; k <= hi; ++k) h(k, k) += sigma;
  }

  if (stats) *stats = local;
  return eig;
}

std::vector<Complex> eig_hessenberg_real(RMatrix h, QRStats* stats) {
  const std::size_t n = h.n;
  std::vector<Complex> eig;
  eig.reserve(n);
  if (n == 0) return eig;

  double hmax = 0.0;
  for (double v : h.a) hmax = std::max(hmax, std::abs(v));
  if (hmax == 0.0) hmax = 1.0;

  std::ptrdiff_t hi = std::ptrdiff_t(n) - 1;
  int iters = 0;
  QRStats local;

  auto subdiag_negligible = [&](std::ptrdiff_t k) {
    double thr = DBL_EPSILON * (std::abs(h(k - 1, k - 1)) + std::abs(h(k, k)));
    if (thr == 0.0) thr = DBL_EPSILON * hmax;
    return std::abs(h(k, k - 1)) <= thr;
  };

  // eigenvalues of a real 2x2, conjugate pair shared exactly
  auto push2x2 = [&](std::ptrdiff_t k) {
    const double a = h(k, k), b = h(k, k + 1), c = h(k + 1, k), d = h(k + 1, k + 1);
    const double mid = 0.5 * (a + d);
    const double disc = 0.25 * (a - d) * (a - d) + b * c;
    if (disc >= 0.0) {
      const double s = std::sqrt(disc);
      const double l1 = mid >= 0.0 ? mid + s : mid - s;
      const double det = a * d - b * c;
      const double l2 = l1 != 0.0 ? det / l1 : mid - s;
      eig.emplace_back(l1, 0.0);
      eig.emplace_back(l2, 0.0);
    } else {
      const double s = std::sqrt(-disc);
      eig.emplace_back(mid, s);
      eig.emplace_back(mid, -s);
    }
  };

  while (hi >= 0) {
    if (hi == 0) {
      eig.emplace_back(h(0, 0), 0.0);
      break;
    }
    if (subdiag_negligible(hi)) {
      eig.emplace_back(h(hi, hi), 0.0);
      --hi;
      iters = 0;
      continue;
    }
    if (hi == 1 || subdiag_negligible(hi - 1)) {
      push2x2(hi - 1);
      hi -= 2;
      iters = 0;
      continue;
    }

    std::ptrdiff_t lo = hi;
    while (lo > 0 && !subdiag_negligible(lo)) --lo;

    if (++iters > kMaxItersPerBlock)
      throw EigNonConvergence("eig_hessenberg_real: window [" + std::to_string(lo) + "," +
                                  std::to_string(hi) + "] stuck after " +
                                  std::to_string(kMaxItersPerBlock) + " sweeps",
                              std::move(eig));
    ++local.sweeps;

    // implicit double shift: sum/product of the shift pair
    double shift_sum, shift_prod;
    if (iters % kExceptionalEvery == 0) {
      ++local.exceptional_shifts;
      const double s = std::abs(h(hi, hi - 1)) + std::abs(h(hi - 1, hi - 2));
      shift_sum = 1.5 * s;
      shift_prod = -0.4375 * s * s;
    } else {
      shift_sum = h(hi - 1, hi - 1) + h(hi, hi);
      shift_prod = h(hi - 1, hi - 1) * h(hi, hi) - h(hi - 1, hi) * h(hi, hi - 1);
    }

    // first column of (H - l1)(H - l2) on the window
    double x = h(lo, lo) * h(lo, lo) + h(lo, lo + 1) * h(lo + 1, lo) - shift_sum * h(lo, lo) +
               shift_prod;
    double y = h(lo + 1, lo) * (h(lo, lo) + h(lo + 1, lo + 1) - shift_sum);
    double z = h(lo + 1, lo) * h(lo + 2, lo + 1);

    for (std::ptrdiff_t k = lo; k <= hi - 2; ++k) {
      // Householder on (x, y, z)
      const double norm = std::sqrt(x * x + y * y + z * z);
      if (norm != 0.0) {
        const double alpha = x >= 0.0 ? -norm : norm;
        double v0 = x - alpha, v1 = y, v2 = z;
        const double vnorm2 = v0 * v0 + v1 * v1 + v2 * v2;
        if (vnorm2 != 0.0) {
          const double beta = 2.0 / vnorm2;
          const std::ptrdiff_t jlo = std::max(lo, k - 1);
          for (std::ptrdiff_t j = jlo; j <= hi; ++j) {  // left: rows k..k+2
            const double t = beta * (v0 * h(k, j) + v1 * h(k + 1, j) + v2 * h(k + 2, j));
            h(k, j) -= t * v0;
            h(k + 1, j) -= t * v1;
            h(k + 2, j) -= t * v2;
          }
          const std::ptrdiff_t imax = std::min(k + 3, hi);
          for (std::ptrdiff_t i = lo; i <= imax; ++i) {  // right: cols k..k+2
            const double t = beta * (v0 * h(i, k) + v1 * h(i, k + 1) + v2 * h(i, k + 2));
            h(i, k) -= t * v0;
            h(i, k + 1) -= t * v1;
            h(i, k + 2) -= t * v2;
          }
        }
      }
      x = h(k + 1, k);
      y = h(k + 2, k);
      z = k + 3 <= hi ? h(k + 3, k) : 0.0;
    }

    // final 2x1 rotation zeroing h(hi, hi-2)... handled via Householder on (x, y)
    {
      const double norm = std::hypot(x, y);
      if (norm != 0.0) {
        const double alpha = x >= 0.0 ? -norm : norm;
        double v0 = x - alpha, v1 = y;
        const double vnorm2 = v0 * v0 + v1 * v1;
        if (vnorm2 != 0.0) {
          const double beta = 2.0 / vnorm2;
          const std::ptrdiff_t k = hi - 1;
          for (std::ptrdiff_t j = k - 1; j <= hi; ++j) {
            const double t = beta * (v0 * h(k, j) + v1 * h(k + 1, j));
            h(k, j) -= t * v0;
            h(k + 1, j) -= t * v1;
          }
          for (std::ptrdiff_t i = lo; i <= hi; ++i) {
            const double t = beta * (v0 * h(i, k) + v1 * h(i, k + 1));
            h(i, k) -= t * v0;
            h(i, k + 1) -= t * v1;
          }
        }
      }
    }
  }

  if (stats) *stats = local;
  return eig;
}

std::vector<Complex> eig_dense(CMatrix a, QRStats* stats) {
  const std::size_t n = a.n;
  if (n <= 1) return n == 1 ? std::vector<Complex>{a(0, 0)} : std::vector<Complex>{};

  // Householder reduction to upper Hessenberg (similarity, both sides).
  std::vector<Complex> v(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double xnorm = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) xnorm = std::hypot(xnorm, std::abs(a(i, k)));
    if (xnorm == 0.0) continue;
    const Complex x0 = a(k + 1, k);
    const Complex phase = x0 == Complex{} ? Complex(1.0, 0.0) : x0 / std::abs(x0);
    const Complex alpha = -phase * xnorm;

    double vnorm2 = 0.0;
    v[k + 1] = x0 - alpha;
    vnorm2 += std::norm(v[k + 1]);
    for (std::size_t i = k + 2; i < n; ++i) {
      v[i] = a(i, k);
      vnorm2 += std::norm(v[i]);
    }
    if (vnorm2 == 0.0) continue;
    const double beta = 2.0 / vnorm2;

    // A <- (I - beta v v^H) A
    for (std::size_t j = k; j < n; ++j) {
      Complex t{};
      for (std::size_t i = k + 1; i < n; ++i) t += std::conj(v[i]) * a(i, j);
      t *= beta;
      for (std::size_t i = k + 1; i < n; ++i) a(i, j) -= t * v[i];
    }
    // A <- A (I - beta v v^H)
    for (std::size_t i = 0; i < n; ++i) {
      Complex t{};
      for (std::size_t j = k + 1; j < n; ++j) t += a(i, j) * v[j];
      t *= beta;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= t * std::conj(v[j]);
    }
    a(k + 1, k) = alpha;
    for (std::size_t i = k + 2; i < n; ++i) a(i, k) = Complex{};
  }

  return eig_hessenberg(std::move(a), stats);
}

}  // namespace hopspec
