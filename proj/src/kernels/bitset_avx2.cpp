// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include <bit>

#include "revdiam/kernels.hpp"

namespace revdiam::kernels::avx2 {

namespace {

inline __m256i load(const Word* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(Word* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

}  // namespace

void or_into(Word* dst, const Word* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) store(dst + i, _mm256_or_si256(load(dst + i), load(src + i)));
  for (; i < words; ++i) dst[i] |= src[i];
}

bool advance(Word* next, Word* visited, std::size_t words) {
  std::size_t i = 0;
  __m256i any = _mm256_setzero_si256();
  for (; i + 4 <= words; i += 4) {
    const __m256i seen = load(visited + i);
    // andnot(a, b) = ~a & b
    const __m256i fresh = _mm256_andnot_si256(seen, load(next + i));
    store(next + i, fresh);
    store(visited + i, _mm256_or_si256(seen, fresh));
    any = _mm256_or_si256(any, fresh);
  }
  Word tail = 0;
  for (; i < words; ++i) {
    const Word fresh = next[i] & ~visited[i];
    next[i] = fresh;
    visited[i] |= fresh;
    tail |= fresh;
  }
  return tail != 0 || !_mm256_testz_si256(any, any);
}

std::size_t popcount(const Word* bits, std::size_t words) {
  // No vector popcount below AVX-512; four independent scalar chains.
  std::size_t c0 = 0, c1 = 0, c2 = 0, c3 = 0;
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    c0 += static_cast<std::size_t>(std::popcount(bits[i]));
    c1 += static_cast<std::size_t>(std::popcount(bits[i + 1]));
    c2 += static_cast<std::size_t>(std::popcount(bits[i + 2]));
    c3 += static_cast<std::size_t>(std::popcount(bits[i + 3]));
  }
  for (; i < words; ++i) c0 += static_cast<std::size_t>(std::popcount(bits[i]));
  return c0 + c1 + c2 + c3;
}

}  // namespace revdiam::kernels::avx2
