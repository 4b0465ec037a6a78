#include "doctest.h"

#include <cmath>
#include <complex>
#include <cstring>
#include <random>
#include <string>
#include <vector>

#include "hopspec/cpoly.hpp"
#include "hopspec/kernels.hpp"

using hopspec::Complex;

namespace {

struct SplitArrays {
  std::vector<double> re, im;
  explicit SplitArrays(std::size_t n) : re(n), im(n) {}
  Complex at(std::size_t i) const { return {re[i], im[i]}; }
};

SplitArrays random_points(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  SplitArrays out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.re[i] = dist(gen);
    out.im[i] = dist(gen);
  }
  return out;
}

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("active implementation is selected and named") {
  const auto& impl = hopspec::kernels::active();
  const std::string name = impl.name;
  CHECK((name == "scalar" || name == "avx2"));
}

TEST_CASE("horner_many agrees between scalar and active, and with std::complex") {
  const std::size_t nc = 13, n = 257;
  const SplitArrays cs = random_points(nc, 11);
  const SplitArrays zs = random_points(n, 22);

  const auto& s = hopspec::kernels::scalar();
  const auto& a = hopspec::kernels::active();

  SplitArrays out_s(n), out_a(n);
  s.horner_many(cs.re.data(), cs.im.data(), nc, zs.re.data(), zs.im.data(), n, out_s.re.data(),
                out_s.im.data());
  a.horner_many(cs.re.data(), cs.im.data(), nc, zs.re.data(), zs.im.data(), n, out_a.re.data(),
                out_a.im.data());

  for (std::size_t i = 0; i < n; ++i) {
    Complex ref{};
    for (std::size_t k = nc; k-- > 0;) ref = ref * zs.at(i) + cs.at(k);
    CHECK(std::abs(out_s.at(i) - ref) <= 1e-12 * (1.0 + std::abs(ref)));
    CHECK(std::abs(out_a.at(i) - out_s.at(i)) <= 1e-12 * (1.0 + std::abs(ref)));
  }
}

TEST_CASE("pairwise_inv_sums agrees between implementations") {
  const std::size_t n = 67;
  const SplitArrays zs = random_points(n, 33);
  const auto& s = hopspec::kernels::scalar();
  const auto& a = hopspec::kernels::active();

  SplitArrays out_s(n), out_a(n);
  s.pairwise_inv_sums(zs.re.data(), zs.im.data(), n, out_s.re.data(), out_s.im.data());
  a.pairwise_inv_sums(zs.re.data(), zs.im.data(), n, out_a.re.data(), out_a.im.data());

  for (std::size_t i = 0; i < n; ++i) {
    Complex ref{};
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i) continue;
      ref += 1.0 / (zs.at(i) - zs.at(k));
    }
    CHECK(std::abs(out_s.at(i) - ref) <= 1e-10 * (1.0 + std::abs(ref)));
    CHECK(std::abs(out_a.at(i) - out_s.at(i)) <= 1e-10 * (1.0 + std::abs(ref)));
  }
}

TEST_CASE("exactly coincident points contribute zero to inverse sums") {
  // contract shared by both implementations: callers handle collisions
  std::vector<double> re{1.0, 1.0, 2.0}, im{0.5, 0.5, 0.0};
  std::vector<double> out_re(3), out_im(3);

  for (const auto* impl : {&hopspec::kernels::scalar(), &hopspec::kernels::active()}) {
    impl->pairwise_inv_sums(re.data(), im.data(), 3, out_re.data(), out_im.data());
    // points 0 and 1 coincide: only the third point contributes to them
    const Complex expect01 = 1.0 / (Complex(1.0, 0.5) - Complex(2.0, 0.0));
    CHECK(std::abs(Complex(out_re[0], out_im[0]) - expect01) <= 1e-14);
    CHECK(std::abs(Complex(out_re[1], out_im[1]) - expect01) <= 1e-14);
  }
}

TEST_CASE("ratio_step_many matches complex arithmetic lane by lane") {
  const std::size_t n = 131;
  const Complex z(0.37, -1.21);
  const SplitArrays w = random_points(n, 44);
  SplitArrays u = random_points(n, 55), v = random_points(n, 66);

  std::vector<Complex> expect_u(n), expect_v(n);
  for (std::size_t i = 0; i < n; ++i) {
    expect_u[i] = z * u.at(i) - w.at(i) * v.at(i);
    expect_v[i] = u.at(i);
  }

  SplitArrays u2 = u, v2 = v;

  const auto& s = hopspec::kernels::scalar();
  s.ratio_step_many(z.real(), z.imag(), w.re.data(), w.im.data(), u.re.data(), u.im.data(),
                    v.re.data(), v.im.data(), n);
  const auto& a = hopspec::kernels::active();
  a.ratio_step_many(z.real(), z.imag(), w.re.data(), w.im.data(), u2.re.data(), u2.im.data(),
                    v2.re.data(), v2.im.data(), n);

  for (std::size_t i = 0; i < n; ++i) {
    CHECK(std::abs(u.at(i) - expect_u[i]) <= 1e-12 * (1.0 + std::abs(expect_u[i])));
    CHECK(v.at(i) == expect_v[i]);
    CHECK(std::abs(u2.at(i) - u.at(i)) <= 1e-12 * (1.0 + std::abs(expect_u[i])));
    CHECK(v2.at(i) == expect_v[i]);
  }
}

TEST_CASE("scalar reference exists regardless of CPU features") {
  CHECK(std::strcmp(hopspec::kernels::scalar().name, "scalar") == 0);
}

}  // TEST_SUITE
