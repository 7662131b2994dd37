#include <bit>

#include "revdiam/kernels.hpp"

namespace revdiam::kernels::scalar {

void or_into(Word* dst, const Word* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] |= src[i];
}

bool advance(Word* next, Word* visited, std::size_t words) {
  Word any = 0;
  for (std::size_t i = 0; i < words; ++i) {
    const Word fresh = next[i] & ~visited[i];
    next[i] = fresh;
    visited[i] |= fresh;
    any |= fresh;
  }
  return any != 0;
}

std::size_t popcount(const Word* bits, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += static_cast<std::size_t>(std::popcount(bits[i]));
  return total;
}

}  // namespace revdiam::kernels::scalar
