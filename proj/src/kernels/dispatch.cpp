#include <atomic>
#include <cstdlib>
#include <string>

#include "revdiam/kernels.hpp"

namespace revdiam::kernels {

namespace {

constexpr BitsetOps kScalar{Isa::Scalar, &scalar::or_into, &scalar::advance, &scalar::popcount};

#if defined(REVDIAM_HAVE_AVX2)
constexpr BitsetOps kAvx2{Isa::Avx2, &avx2::or_into, &avx2::advance, &avx2::popcount};

bool cpu_has_avx2() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
}
#endif

const BitsetOps* detect() {
  const char* forced = std::getenv("REVDIAM_KERNEL");
  if (forced && std::string(forced) == "scalar") return &kScalar;
#if defined(REVDIAM_HAVE_AVX2)
  if (cpu_has_avx2()) return &kAvx2;
#endif
  return &kScalar;
}

std::atomic<const BitsetOps*>& current() {
  static std::atomic<const BitsetOps*> ops{detect()};
  return ops;
}

}  // namespace

const BitsetOps& active() { return *current().load(std::memory_order_relaxed); }

const BitsetOps* ops_for(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return &kScalar;
    case Isa::Avx2:
#if defined(REVDIAM_HAVE_AVX2)
      return cpu_has_avx2() ? &kAvx2 : nullptr;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

bool select(Isa isa) {
  const BitsetOps* ops = ops_for(isa);
  if (!ops) return false;
  current().store(ops, std::memory_order_relaxed);
  return true;
}

std::string_view name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "unknown";
}

}  // namespace revdiam::kernels
