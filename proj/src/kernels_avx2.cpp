// AVX2+FMA kernel variants.  This TU is the only one compiled with
// -mavx2 -mfma; it must not be entered unless cpuid reports support.

#include "hopspec/kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

namespace hopspec::kernels {

namespace {

void horner_many_avx2(const double* cre, const double* cim, std::size_t nc,
                      const double* zre, const double* zim, std::size_t n,
                      double* outre, double* outim) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d zr = _mm256_loadu_pd(zre + i);
    const __m256d zi = _mm256_loadu_pd(zim + i);
    __m256d ar = _mm256_set1_pd(cre[nc - 1]);
    __m256d ai = _mm256_set1_pd(cim[nc - 1]);
    for (std::size_t k = nc - 1; k-- > 0;) {
      // (ar + i ai) * (zr + i zi) + c_k
      const __m256d tr = _mm256_fmadd_pd(ar, zr, _mm256_fnmadd_pd(ai, zi, _mm256_set1_pd(cre[k])));
      const __m256d ti = _mm256_fmadd_pd(ar, zi, _mm256_fmadd_pd(ai, zr, _mm256_set1_pd(cim[k])));
      ar = tr;
      ai = ti;
    }
    _mm256_storeu_pd(outre + i, ar);
    _mm256_storeu_pd(outim + i, ai);
  }
  if (i < n)
    scalar().horner_many(cre, cim, nc, zre + i, zim + i, n - i, outre + i, outim + i);
}

void pairwise_inv_sums_avx2(const double* zre, const double* zim, std::size_t n,
                            double* outre, double* outim) {
  const __m256d zero = _mm256_setzero_pd();
  for (std::size_t j = 0; j < n; ++j) {
    const __m256d zr = _mm256_set1_pd(zre[j]);
    const __m256d zi = _mm256_set1_pd(zim[j]);
    __m256d sr = zero, si = zero;
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
      const __m256d dr = _mm256_sub_pd(zr, _mm256_loadu_pd(zre + k));
      const __m256d di = _mm256_sub_pd(zi, _mm256_loadu_pd(zim + k));
      const __m256d norm = _mm256_fmadd_pd(dr, dr, _mm256_mul_pd(di, di));
      // zero out the self term (and exact collisions) instead of branching
      const __m256d ok = _mm256_cmp_pd(norm, zero, _CMP_NEQ_OQ);
      const __m256d inv = _mm256_and_pd(ok, _mm256_div_pd(_mm256_set1_pd(1.0), norm));
      sr = _mm256_fmadd_pd(dr, inv, sr);
      si = _mm256_fnmadd_pd(di, inv, si);
    }
    alignas(32) double bufr[4], bufi[4];
    _mm256_store_pd(bufr, sr);
    _mm256_store_pd(bufi, si);
    double tr = bufr[0] + bufr[1] + bufr[2] + bufr[3];
    double ti = bufi[0] + bufi[1] + bufi[2] + bufi[3];
    for (; k < n; ++k) {
      const double dr = zre[j] - zre[k], di = zim[j] - zim[k];
      const double norm = dr * dr + di * di;
      if (norm == 0.0) continue;
      const double inv = 1.0 / norm;
      tr += dr * inv;
      ti -= di * inv;
    }
    outre[j] = tr;
    outim[j] = ti;
  }
}

void ratio_step_many_avx2(double zre_s, double zim_s,
                          const double* wre, const double* wim,
                          double* ure, double* uim,
                          double* vre, double* vim, std::size_t n) {
  const __m256d zr = _mm256_set1_pd(zre_s);
  const __m256d zi = _mm256_set1_pd(zim_s);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d ur = _mm256_loadu_pd(ure + i);
    const __m256d ui = _mm256_loadu_pd(uim + i);
    const __m256d vr = _mm256_loadu_pd(vre + i);
    const __m256d vi = _mm256_loadu_pd(vim + i);
    const __m256d wr = _mm256_loadu_pd(wre + i);
    const __m256d wi = _mm256_loadu_pd(wim + i);
    // z*u - w*v, complex
    const __m256d wvr = _mm256_fmsub_pd(wr, vr, _mm256_mul_pd(wi, vi));
    const __m256d wvi = _mm256_fmadd_pd(wr, vi, _mm256_mul_pd(wi, vr));
    const __m256d nr = _mm256_sub_pd(_mm256_fmsub_pd(zr, ur, _mm256_mul_pd(zi, ui)), wvr);
    const __m256d ni = _mm256_sub_pd(_mm256_fmadd_pd(zr, ui, _mm256_mul_pd(zi, ur)), wvi);
    _mm256_storeu_pd(ure + i, nr);
    _mm256_storeu_pd(uim + i, ni);
    _mm256_storeu_pd(vre + i, ur);
    _mm256_storeu_pd(vim + i, ui);
  }
  if (i < n)
    scalar().ratio_step_many(zre_s, zim_s, wre + i, wim + i, ure + i, uim + i, vre + i, vim + i,
                             n - i);
}

}  // namespace

const Impl& avx2() {
  static const Impl impl{"avx2", horner_many_avx2, pairwise_inv_sums_avx2, ratio_step_many_avx2};
  return impl;
}

}  // namespace hopspec::kernels

#else
#error "kernels_avx2.cpp requires -mavx2 -mfma"
#endif
