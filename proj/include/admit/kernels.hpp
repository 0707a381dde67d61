#pragma once

// Data-parallel inner loops over tuples in a finite power M^L.
//
// Coordinates are bytes (|M| <= 255). Every kernel has a scalar reference
// implementation; vectorised variants are selected at runtime and must agree
// with it bit for bit.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace admit::kernels {

using Byte = std::uint8_t;

enum class Scan : std::uint8_t {
  premise_fails,   // some coordinate falsifies a premise
  holds,           // premises and conclusion hold at every coordinate
  counterexample,  // premises hold everywhere, conclusion fails somewhere
};

// flags[idx] bit 0: all premises hold at that point of M^k;
//            bit 1: the conclusion holds.
inline constexpr Byte kPremiseBit = 1;
inline constexpr Byte kConclusionBit = 2;

struct KernelSet {
  std::string_view name;

  // out[i] = table[x[i]]
  void (*lift_unary)(Byte const* table, std::size_t table_len, Byte const* x,
                     Byte* out, std::size_t len);

  // out[i] = table[x[i] * n + y[i]]
  void (*lift_binary)(Byte const* table, std::size_t n, Byte const* x,
                      Byte const* y, Byte* out, std::size_t len);

  // Combines k columns coordinatewise into idx = sum_j cols[j][i] n^(k-1-j)
  // and classifies the assignment by flags[idx] over all coordinates i.
  Scan (*scan)(Byte const* flags, std::size_t n, Byte const* const* cols,
               std::size_t k, std::size_t len);

  // True iff a[i] == b[i] for all i < len.
  bool (*equal)(Byte const* a, Byte const* b, std::size_t len);
};

KernelSet const& scalar_kernels();

// Null when the variant is not compiled in or the CPU lacks the feature.
KernelSet const* avx2_kernels();

// The set used by the library. Defaults to the widest supported variant;
// the ADMIT_KERNELS environment variable ("scalar", "avx2") overrides it.
KernelSet const& active();

// Returns false (and leaves the selection unchanged) for unknown or
// unsupported names. Accepts "auto", "scalar", "avx2".
bool select(std::string_view name);

}  // namespace admit::kernels
