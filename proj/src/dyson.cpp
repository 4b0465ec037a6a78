#include "hopspec/dyson.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "hopspec/kernels.hpp"
#include "hopspec/rng.hpp"
#include "hopspec/transfer.hpp"

namespace hopspec {

namespace {

constexpr double kRenormHi = 1e300;  // on |u|^2 + |v|^2, squared magnitudes
constexpr double kRenormLo = 1e-300;

void validate(const DSConfig& c) {
  if (!(c.y_max > 10.0)) throw std::invalid_argument("dyson: y_max must be > 10");
  if (c.samples < 1) throw std::invalid_argument("dyson: need at least 1 sample");
}

// Letter for 0-based step index k.
struct LetterAt {
  const DSConfig& config;

  Complex operator()(std::size_t k) const {
    if (const auto* ws = std::get_if<WordStream>(&config.stream))
      return ws->word[k % ws->word.length()];
    const auto& ss = std::get<SignStream>(config.stream);
    const std::uint64_t block = rng::at(ss.seed, config.trajectory, k / 64);
    return Complex(rng::sign_from_block(block, unsigned(k % 64)), 0.0);
  }
};

}  // namespace

RatioTrajectory iterate_ratio(const DSConfig& config) {
  validate(config);
  const LetterAt letter{config};
  const double inf = std::numeric_limits<double>::infinity();

  RatioTrajectory out;
  out.samples.reserve(config.samples);

  Complex u = config.z, v(1.0, 0.0);  // state 1: y_1 = z
  const std::size_t total_states = config.burn_in + config.samples;
  for (std::size_t state = 1; state <= total_states; ++state) {
    if (state > 1) {
      const Complex nu = config.z * u - letter(state - 2) * v;
      v = u;
      u = nu;
      const double m2 = std::norm(u) + std::norm(v);
      if (m2 > kRenormHi || (m2 < kRenormLo && m2 > 0.0)) {
        const double s = 1.0 / std::sqrt(m2);
        u *= s;
        v *= s;
      }
    }
    if (state <= config.burn_in) continue;

    if (v == Complex{}) {
      out.samples.emplace_back(inf, inf);
      ++out.infinities;
    } else if (u == Complex{}) {
      out.samples.emplace_back(0.0, 0.0);
      ++out.zeros;
    } else {
      const Complex y = u / v;
      out.samples.push_back(y);
      const double a = std::abs(y);
      out.max_abs = std::max(out.max_abs, a);
      if (a > config.y_max) ++out.excursions;
    }
  }
  return out;
}

LyapunovEstimate lyapunov(const DSConfig& config) {
  validate(config);
  const LetterAt letter{config};

  LyapunovEstimate out;
  double sum = 0.0, sumsq = 0.0;

  Complex u = config.z, v(1.0, 0.0);
  const std::size_t total_states = config.burn_in + config.samples;
  for (std::size_t state = 1; state <= total_states; ++state) {
    if (state > 1) {
      const Complex nu = config.z * u - letter(state - 2) * v;
      v = u;
      u = nu;
      const double m2 = std::norm(u) + std::norm(v);
      if (m2 > kRenormHi || (m2 < kRenormLo && m2 > 0.0)) {
        const double s = 1.0 / std::sqrt(m2);
        u *= s;
        v *= s;
      }
    }
    if (state <= config.burn_in) continue;

    if (u == Complex{} || v == Complex{}) {
      ++out.excluded;
      continue;
    }
    const double lg = 0.5 * std::log(std::norm(u) / std::norm(v));
    sum += lg;
    sumsq += lg * lg;
    ++out.samples_used;
  }

  if (out.samples_used > 0) {
    const double n = double(out.samples_used);
    out.gamma = sum / n;
    const double var = std::max(0.0, sumsq / n - out.gamma * out.gamma);
    out.std_error = std::sqrt(var / n);
  }
  out.reliable = out.excluded * 100 <= config.samples;
  return out;
}

namespace {

// Per-cell escape/Lyapunov evaluation: all replicas of one cell advance in
// lock step through the batched kernel; the log of |y| accumulates by
// telescoping log|u| between singular states, so only segment boundaries and
// renormalisations pay for a log call.
struct CellAccum {
  double gsum = 0.0;
  std::size_t count = 0, excluded = 0, escaped = 0;
};

CellAccum run_cell(Complex z, const DSConfig& proto, std::size_t cell_index,
                   std::size_t trajectories) {
  const auto& K = kernels::active();
  const bool word_stream = std::holds_alternative<WordStream>(proto.stream);
  const std::size_t T = word_stream ? 1 : trajectories;  // word streams are deterministic

  std::vector<double> ure(T, z.real()), uim(T, z.imag()), vre(T, 1.0), vim(T, 0.0);
  std::vector<double> wre(T), wim(T, 0.0);
  std::vector<double> rlog(T, 0.0), anchor(T, 0.0), gsum(T, 0.0);
  std::vector<std::uint64_t> block(T, 0);
  std::vector<std::size_t> count(T, 0), excluded(T, 0);
  std::vector<char> open(T, 0), escaped(T, 0);

  const Word* word = word_stream ? &std::get<WordStream>(proto.stream).word : nullptr;
  const std::uint64_t seed = word_stream ? 0 : std::get<SignStream>(proto.stream).seed;
  const double ymax2 = proto.y_max * proto.y_max;

  const std::size_t total_states = proto.burn_in + proto.samples;
  for (std::size_t state = 2; state <= total_states; ++state) {
    const std::size_t k = state - 2;  // 0-based letter index
    if (word_stream) {
      const Complex w = (*word)[k % word->length()];
      wre[0] = w.real();
      wim[0] = w.imag();
    } else {
      const unsigned bit = unsigned(k % 64);
      for (std::size_t t = 0; t < T; ++t) {
        if (bit == 0) block[t] = rng::at(seed, cell_index, t, k / 64);
        wre[t] = rng::sign_from_block(block[t], bit);
      }
    }

    K.ratio_step_many(z.real(), z.imag(), wre.data(), wim.data(), ure.data(), uim.data(),
                      vre.data(), vim.data(), T);

    for (std::size_t t = 0; t < T; ++t) {
      double un2 = ure[t] * ure[t] + uim[t] * uim[t];
      double vn2 = vre[t] * vre[t] + vim[t] * vim[t];
      const double m2 = un2 + vn2;
      if (m2 > kRenormHi || (m2 < kRenormLo && m2 > 0.0)) {
        const double s = 1.0 / std::sqrt(m2);
        ure[t] *= s;
        uim[t] *= s;
        vre[t] *= s;
        vim[t] *= s;
        rlog[t] += 0.5 * std::log(m2);
        un2 = ure[t] * ure[t] + uim[t] * uim[t];
        vn2 = vre[t] * vre[t] + vim[t] * vim[t];
      }
      if (state <= proto.burn_in) continue;

      // window sample y_state = u / v
      if (un2 == 0.0 || vn2 == 0.0) {
        ++excluded[t];
        if (open[t] && vn2 > 0.0)  // close the segment at the previous state
          gsum[t] += 0.5 * std::log(vn2) + rlog[t] - anchor[t];
        open[t] = 0;
        continue;
      }
      if (!open[t]) {  // anchor at the previous state
        anchor[t] = 0.5 * std::log(vn2) + rlog[t];
        open[t] = 1;
      }
      ++count[t];
      if (un2 / vn2 > ymax2) escaped[t] = 1;
    }
  }

  CellAccum acc;
  for (std::size_t t = 0; t < T; ++t) {
    const double un2 = ure[t] * ure[t] + uim[t] * uim[t];
    if (open[t] && un2 > 0.0) gsum[t] += 0.5 * std::log(un2) + rlog[t] - anchor[t];
    acc.gsum += gsum[t];
    acc.count += count[t];
    acc.excluded += excluded[t];
    acc.escaped += escaped[t];
  }
  // every replica of a word stream is identical; report the fraction over the
  // requested replica count anyway
  if (word_stream && escaped[0]) acc.escaped = trajectories;
  return acc;
}

}  // namespace

EscapeMap escape_map(const GridSpec& grid, const DSConfig& proto, std::size_t trajectories,
                     unsigned threads) {
  validate(proto);
  if (grid.nx < 1 || grid.ny < 1 || grid.nx > 1024 || grid.ny > 1024)
    throw std::invalid_argument("escape_map: grid must be within 1..1024 per axis");
  if (!(grid.x1 > grid.x0) || !(grid.y1 > grid.y0))
    throw std::invalid_argument("escape_map: empty grid bounds");
  if (trajectories < 1 || trajectories > 1024)
    throw std::invalid_argument("escape_map: trajectories must be in 1..1024");

  const std::size_t cells = grid.nx * grid.ny;
  EscapeMap map{grid, std::vector<double>(cells, std::numeric_limits<double>::quiet_NaN()),
                std::vector<double>(cells, 0.0)};

  const double dx = (grid.x1 - grid.x0) / double(grid.nx);
  const double dy = (grid.y1 - grid.y0) / double(grid.ny);

  auto run_range = [&](std::size_t c0, std::size_t c1) {
    for (std::size_t c = c0; c < c1; ++c) {
      const std::size_t ix = c % grid.nx, iy = c / grid.nx;
      const Complex z(grid.x0 + (double(ix) + 0.5) * dx, grid.y0 + (double(iy) + 0.5) * dy);
      const CellAccum acc = run_cell(z, proto, c, trajectories);
      if (acc.count > 0) map.gamma[c] = acc.gsum / double(acc.count);
      map.escape_fraction[c] = double(acc.escaped) / double(trajectories);
    }
  };

  unsigned nthreads = threads == 0 ? std::thread::hardware_concurrency() : threads;
  if (nthreads < 1) nthreads = 1;
  nthreads = unsigned(std::min<std::size_t>(nthreads, cells));

  if (nthreads <= 1) {
    run_range(0, cells);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned i = 0; i < nthreads; ++i) {
      const std::size_t c0 = cells * i / nthreads, c1 = cells * (i + 1) / nthreads;
      pool.emplace_back(run_range, c0, c1);
    }
    for (std::thread& th : pool) th.join();
  }
  return map;
}

SupportCheck support_vs_fixed_points(Complex z, std::size_t maxL, const DSConfig& proto) {
  if (maxL < 1 || maxL > 12)
    throw std::invalid_argument("support_vs_fixed_points: maxL must be in 1..12");

  SupportCheck out;
  for (std::size_t L = 1; L <= maxL; ++L) {
    for_each_binary_word(L, [&](const Word& w) {
      const FixedPointPair fp = fixed_points(w, z);
      if (fp.degenerate || fp.marginal) return;
      if (fp.stable_index == +1) out.candidates.push_back(fp.b_plus);
      else if (fp.stable_index == -1) out.candidates.push_back(fp.b_minus);
    });
  }
  if (out.candidates.empty())
    throw std::runtime_error("support_vs_fixed_points: no stable fixed points up to maxL=" +
                             std::to_string(maxL) + "; increase maxL");

  DSConfig config = proto;
  config.z = z;
  const RatioTrajectory traj = iterate_ratio(config);
  out.excluded = traj.zeros + traj.infinities;

  for (const Complex& y : traj.samples) {
    if (!std::isfinite(y.real()) || !std::isfinite(y.imag())) continue;
    if (y == Complex{}) continue;
    double best = std::numeric_limits<double>::infinity();
    for (const Complex& b : out.candidates) best = std::min(best, std::abs(y - b));
    out.max_min_distance = std::max(out.max_min_distance, best);
    ++out.samples_used;
  }
  return out;
}

}  // namespace hopspec
