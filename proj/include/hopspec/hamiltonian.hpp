#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "hopspec/cpoly.hpp"
#include "hopspec/eig.hpp"
#include "hopspec/word.hpp"

namespace hopspec {

// Subdiagonal letter sources for the chain Hamiltonian.  `n` letters fill the
// subdiagonal of the (n+1) x (n+1) matrix; periodic and paragraph sources
// tile cyclically when the chain is longer than the pattern.
struct PeriodicSource {
  Word word;
};
struct RandomSignSource {  // +/-1 equiprobable per site
  std::uint64_t seed = 1;
};
struct RandomPhaseSource {  // e^{i theta}, theta uniform on [0, 2pi)
  std::uint64_t seed = 1;
};
struct ParagraphSource {
  Paragraph paragraph;
};
struct ExplicitSource {  // must supply exactly n letters
  std::vector<Complex> letters;
};

using LetterSource =
    std::variant<PeriodicSource, RandomSignSource, RandomPhaseSource, ParagraphSource, ExplicitSource>;

struct HamiltonianSpec {
  std::size_t n = 1;  // number of subdiagonal letters; matrix dimension n+1
  LetterSource source;
};

std::vector<Complex> build_subdiagonal(const HamiltonianSpec& spec);

struct EigenResult {
  std::vector<Complex> eigenvalues;  // sorted by (re, im)
  QRStats stats;
  bool real_path = false;  // solved in real arithmetic (exact conjugate pairs)
};

// Spectrum of the (n+1) x (n+1) tridiagonal matrix with unit superdiagonal
// and the source letters on the subdiagonal.  Real letter sets take the
// Francis double-shift path; anything else the complex single-shift path.
EigenResult eigenvalues_qr(const HamiltonianSpec& spec);

// Characteristic polynomial det(zI - H) by the principal-minor recursion
//   D_{k+1} = z D_k - w_k D_{k-1},   D_0 = 1, D_1 = z.
// Coefficients are exact integers for +/-1 letters (n within double range).
CPoly char_poly(const HamiltonianSpec& spec);

// Spectrum as roots of char_poly.  Intended as a cross-check at moderate n;
// high-degree coefficient representations are ill-conditioned.
EigenResult eigenvalues_via_roots(const HamiltonianSpec& spec, double tol = 1e-12);

// Diagonal gauge: a tridiagonal chain with superdiagonal links s_k and
// subdiagonal links r_k is similar to the unit-superdiagonal chain whose
// subdiagonal carries the link products s_k * r_k.  Throws on a zero
// superdiagonal link.
std::vector<Complex> gauge_reduce(const std::vector<Complex>& superdiag,
                                  const std::vector<Complex>& subdiag);

}  // namespace hopspec
