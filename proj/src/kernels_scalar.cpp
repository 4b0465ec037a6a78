#include "hopspec/kernels.hpp"

namespace hopspec::kernels {

namespace {

void horner_many_scalar(const double* cre, const double* cim, std::size_t nc,
                        const double* zre, const double* zim, std::size_t n,
                        double* outre, double* outim) {
  for (std::size_t i = 0; i < n; ++i) {
    double ar = cre[nc - 1], ai = cim[nc - 1];
    const double zr = zre[i], zi = zim[i];
    for (std::size_t k = nc - 1; k-- > 0;) {
      const double tr = ar * zr - ai * zi + cre[k];
      const double ti = ar * zi + ai * zr + cim[k];
      ar = tr;
      ai = ti;
    }
    outre[i] = ar;
    outim[i] = ai;
  }
}

void pairwise_inv_sums_scalar(const double* zre, const double* zim, std::size_t n,
                              double* outre, double* outim) {
  for (std::size_t j = 0; j < n; ++j) {
    double sr = 0.0, si = 0.0;
    const double zr = zre[j], zi = zim[j];
    for (std::size_t k = 0; k < n; ++k) {
      const double dr = zr - zre[k], di = zi - zim[k];
      const double norm = dr * dr + di * di;
      if (norm == 0.0) continue;  // self term and exact collisions
      const double inv = 1.0 / norm;
      sr += dr * inv;
      si -= di * inv;
    }
    outre[j] = sr;
    outim[j] = si;
  }
}

void ratio_step_many_scalar(double zre, double zim,
                            const double* wre, const double* wim,
                            double* ure, double* uim,
                            double* vre, double* vim, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double ur = ure[i], ui = uim[i];
    const double nr = zre * ur - zim * ui - (wre[i] * vre[i] - wim[i] * vim[i]);
    const double ni = zre * ui + zim * ur - (wre[i] * vim[i] + wim[i] * vre[i]);
    ure[i] = nr;
    uim[i] = ni;
    vre[i] = ur;
    vim[i] = ui;
  }
}

}  // namespace

const Impl& scalar() {
  static const Impl impl{"scalar", horner_many_scalar, pairwise_inv_sums_scalar,
                         ratio_step_many_scalar};
  return impl;
}

}  // namespace hopspec::kernels
