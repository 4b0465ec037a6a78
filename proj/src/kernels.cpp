#include "hopspec/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace hopspec::kernels {

namespace {

const Impl& pick() {
  const char* force = std::getenv("HOPSPEC_KERNELS");
  if (force && std::strcmp(force, "scalar") == 0) return scalar();
#if defined(HOPSPEC_HAVE_AVX2_TU) && (defined(__x86_64__) || defined(_M_X64))
  const bool can_avx2 = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  if (force && std::strcmp(force, "avx2") == 0 && can_avx2) return avx2();
  if (!force && can_avx2) return avx2();
#endif
  return scalar();
}

}  // namespace

const Impl& active() {
  static const Impl& impl = pick();
  return impl;
}

}  // namespace hopspec::kernels
