#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "hopspec/cpoly.hpp"
#include "hopspec/word.hpp"

namespace hopspec {

// Letter streams feeding the ratio recursion y_{k+1} = z - w_k / y_k.
struct SignStream {  // independent +/-1 per step
  std::uint64_t seed = 1;
};
struct WordStream {  // word letters applied cyclically, w_1 first
  Word word;
};
using LetterStream = std::variant<SignStream, WordStream>;

struct DSConfig {
  Complex z{};
  LetterStream stream = SignStream{};
  std::size_t burn_in = 1000;
  std::size_t samples = 10000;
  double y_max = 1e8;           // excursion threshold; must be > 10
  std::uint64_t trajectory = 0; // replica id: distinct ids give independent streams
};

// The recursion runs projectively, y = u/v with (u, v) <- (z u - w v, u), so
// passes through 0 and infinity are exact states rather than overflows.
struct RatioTrajectory {
  std::vector<Complex> samples;  // post burn-in; (inf, inf) marks y at infinity
  std::size_t excursions = 0;    // finite samples with |y| > y_max
  double max_abs = 0.0;          // over finite samples
  std::size_t zeros = 0, infinities = 0;
};

RatioTrajectory iterate_ratio(const DSConfig& config);

// gamma = mean of log|y_k| over the sample window; exact zero/infinity states
// are excluded and counted, and the estimate is flagged unreliable if they
// exceed 1% of the window.
struct LyapunovEstimate {
  double gamma = 0.0;
  double std_error = 0.0;
  std::size_t samples_used = 0;
  std::size_t excluded = 0;
  bool reliable = true;
};

LyapunovEstimate lyapunov(const DSConfig& config);

struct GridSpec {
  double x0 = -2.2, x1 = 2.2, y0 = -2.2, y1 = 2.2;  // Gershgorin envelope of the chain
  std::size_t nx = 128, ny = 128;
};

// Escape/Lyapunov raster: per grid cell (z = cell center), `trajectories`
// independent replicas are iterated; a replica escapes when any single
// excursion exceeds y_max inside the sample window.  gamma averages log|y|
// across the window of every replica (NaN when everything was excluded).
// Cell streams are counter-based, so results are independent of threading.
struct EscapeMap {
  GridSpec grid;
  std::vector<double> gamma;            // ny * nx, row-major by (iy, ix)
  std::vector<double> escape_fraction;  // same layout
};

EscapeMap escape_map(const GridSpec& grid, const DSConfig& proto, std::size_t trajectories = 4,
                     unsigned threads = 0);

// Distance check between the visited ratio set and the stable fixed points of
// all words up to maxL at the same z.  Throws when no word has a stable fixed
// point there (maxL too small to say anything).
struct SupportCheck {
  std::vector<Complex> candidates;
  double max_min_distance = 0.0;
  std::size_t samples_used = 0;
  std::size_t excluded = 0;
};

SupportCheck support_vs_fixed_points(Complex z, std::size_t maxL, const DSConfig& proto);

}  // namespace hopspec
