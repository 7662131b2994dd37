#pragma once

// Bitset kernels behind the unit-weight BFS. Every routine has a scalar
// reference implementation; wider variants are picked at runtime from the
// host CPU and must agree with the scalar one bit for bit.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace revdiam::kernels {

using Word = std::uint64_t;

constexpr std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

enum class Isa { Scalar, Avx2 };

struct BitsetOps {
  Isa isa;
  /// dst |= src
  void (*or_into)(Word* dst, const Word* src, std::size_t words);
  /// next &= ~visited; visited |= next; returns whether next is nonzero.
  bool (*advance)(Word* next, Word* visited, std::size_t words);
  /// Number of set bits.
  std::size_t (*popcount)(const Word* bits, std::size_t words);
};

/// Best variant supported by this CPU, honoring REVDIAM_KERNEL=scalar|avx2.
const BitsetOps& active();

/// Variant for one ISA, or nullptr when it was not built or the CPU lacks it.
const BitsetOps* ops_for(Isa isa);

/// Forces a variant for the current process; used by equivalence tests.
/// Returns false (and changes nothing) when the variant is unavailable.
bool select(Isa isa);

std::string_view name(Isa isa);

namespace scalar {
void or_into(Word* dst, const Word* src, std::size_t words);
bool advance(Word* next, Word* visited, std::size_t words);
std::size_t popcount(const Word* bits, std::size_t words);
}  // namespace scalar

namespace avx2 {
void or_into(Word* dst, const Word* src, std::size_t words);
bool advance(Word* next, Word* visited, std::size_t words);
std::size_t popcount(const Word* bits, std::size_t words);
}  // namespace avx2

}  // namespace revdiam::kernels
