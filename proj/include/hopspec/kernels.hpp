#pragma once

#include <complex>
#include <cstddef>
#include <string>

namespace hopspec::kernels {

// Batched inner loops on split re/im arrays.  A scalar reference
// implementation always exists; an AVX2+FMA variant is selected at runtime
// when the CPU supports it.  Both produce results equal to within floating
// point reassociation (the AVX2 path contracts multiply-adds).
//
// All kernels are pure array transforms; callers own layout and batching.
struct Impl {
  const char* name;

  // out = p(z) for n points; coefficients ascending, length nc (nc >= 1).
  void (*horner_many)(const double* cre, const double* cim, std::size_t nc,
                      const double* zre, const double* zim, std::size_t n,
                      double* outre, double* outim);

  // Aberth correction sums: out_j = sum_{k != j} 1 / (z_j - z_k).
  // Terms with z_k exactly equal to z_j contribute zero (callers detect and
  // perturb collisions themselves).
  void (*pairwise_inv_sums)(const double* zre, const double* zim, std::size_t n,
                            double* outre, double* outim);

  // One projective ratio step per lane: (u, v) <- (z*u - w*v, u), with
  // per-lane letters w.  In-place on the state arrays.
  void (*ratio_step_many)(double zre, double zim,
                          const double* wre, const double* wim,
                          double* ure, double* uim,
                          double* vre, double* vim, std::size_t n);
};

const Impl& scalar();
#if defined(HOPSPEC_HAVE_AVX2_TU)
const Impl& avx2();
#endif

// Active implementation: best supported variant, overridable with
// HOPSPEC_KERNELS=scalar|avx2 in the environment (unsupported values fall
// back to the default choice).
const Impl& active();

}  // namespace hopspec::kernels
