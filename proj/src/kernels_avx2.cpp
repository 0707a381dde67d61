// AVX2 variants of the tuple kernels. Compiled with -mavx2; only reached
// after a runtime CPU check.

#include <immintrin.h>

#include <cstring>

#include "admit/kernels.hpp"

namespace admit::kernels {

namespace {

// Up to 16 broadcast 16-byte slices of a byte table (at most 256 entries).
struct Lut {
  alignas(32) Byte padded[256];
  __m256i chunk[16];
  int chunks = 0;

  Lut(Byte const* table, std::size_t len) {
    std::memset(padded, 0, sizeof padded);
    std::memcpy(padded, table, len);
    chunks = static_cast<int>((len + 15) / 16);
    for (int c = 0; c < chunks; ++c) {
      __m128i s = _mm_loadu_si128(
          reinterpret_cast<__m128i const*>(padded + 16 * c));
      chunk[c] = _mm256_broadcastsi128_si256(s);
    }
  }

  __m256i lookup(__m256i idx) const {
    __m256i const low4 = _mm256_set1_epi8(0x0F);
    __m256i lo = _mm256_and_si256(idx, low4);
    if (chunks == 1) {
      return _mm256_shuffle_epi8(chunk[0], lo);
    }
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(idx, 4), low4);
    __m256i r = _mm256_setzero_si256();
    for (int c = 0; c < chunks; ++c) {
      __m256i v = _mm256_shuffle_epi8(chunk[c], lo);
      __m256i m = _mm256_cmpeq_epi8(hi, _mm256_set1_epi8(static_cast<char>(c)));
      r = _mm256_or_si256(r, _mm256_and_si256(v, m));
    }
    return r;
  }

  __m128i lookup(__m128i idx) const {
    __m128i const low4 = _mm_set1_epi8(0x0F);
    __m128i lo = _mm_and_si128(idx, low4);
    if (chunks == 1) {
      return _mm_shuffle_epi8(_mm256_castsi256_si128(chunk[0]), lo);
    }
    __m128i hi = _mm_and_si128(_mm_srli_epi16(idx, 4), low4);
    __m128i r = _mm_setzero_si128();
    for (int c = 0; c < chunks; ++c) {
      __m128i v = _mm_shuffle_epi8(_mm256_castsi256_si128(chunk[c]), lo);
      __m128i m = _mm_cmpeq_epi8(hi, _mm_set1_epi8(static_cast<char>(c)));
      r = _mm_or_si128(r, _mm_and_si128(v, m));
    }
    return r;
  }
};

// Bytewise x * n for byte lanes whose products stay below 256.
inline __m256i mul_bytes(__m256i x, __m256i n16) {
  __m256i const lowmask = _mm256_set1_epi16(0x00FF);
  __m256i even = _mm256_mullo_epi16(_mm256_and_si256(x, lowmask), n16);
  __m256i odd = _mm256_mullo_epi16(_mm256_srli_epi16(x, 8), n16);
  return _mm256_or_si256(_mm256_and_si256(even, lowmask),
                         _mm256_slli_epi16(odd, 8));
}

inline __m128i mul_bytes(__m128i x, __m128i n16) {
  __m128i const lowmask = _mm_set1_epi16(0x00FF);
  __m128i even = _mm_mullo_epi16(_mm_and_si128(x, lowmask), n16);
  __m128i odd = _mm_mullo_epi16(_mm_srli_epi16(x, 8), n16);
  return _mm_or_si128(_mm_and_si128(even, lowmask), _mm_slli_epi16(odd, 8));
}

void lift_unary_avx2(Byte const* table, std::size_t table_len, Byte const* x,
                     Byte* out, std::size_t len) {
  if (table_len > 256) {
    scalar_kernels().lift_unary(table, table_len, x, out, len);
    return;
  }
  Lut lut(table, table_len);
  std::size_t i = 0;
  for (; i + 32 <= len; i += 32) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<__m256i const*>(x + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), lut.lookup(v));
  }
  for (; i + 16 <= len; i += 16) {
    __m128i v = _mm_loadu_si128(reinterpret_cast<__m128i const*>(x + i));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(out + i), lut.lookup(v));
  }
  for (; i < len; ++i) {
    out[i] = table[x[i]];
  }
}

void lift_binary_avx2(Byte const* table, std::size_t n, Byte const* x,
                      Byte const* y, Byte* out, std::size_t len) {
  if (n > 16 || n * n > 256) {
    scalar_kernels().lift_binary(table, n, x, y, out, len);
    return;
  }
  Lut lut(table, n * n);
  __m256i const n16 = _mm256_set1_epi16(static_cast<short>(n));
  __m128i const n16s = _mm_set1_epi16(static_cast<short>(n));
  std::size_t i = 0;
  for (; i + 32 <= len; i += 32) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<__m256i const*>(x + i));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<__m256i const*>(y + i));
    __m256i idx = _mm256_add_epi8(mul_bytes(a, n16), b);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), lut.lookup(idx));
  }
  for (; i + 16 <= len; i += 16) {
    __m128i a = _mm_loadu_si128(reinterpret_cast<__m128i const*>(x + i));
    __m128i b = _mm_loadu_si128(reinterpret_cast<__m128i const*>(y + i));
    __m128i idx = _mm_add_epi8(mul_bytes(a, n16s), b);
    _mm_storeu_si128(reinterpret_cast<__m128i*>(out + i), lut.lookup(idx));
  }
  for (; i < len; ++i) {
    out[i] = table[x[i] * n + y[i]];
  }
}

Scan scan_avx2(Byte const* flags, std::size_t n, Byte const* const* cols,
               std::size_t k, std::size_t len) {
  std::size_t points = 1;
  for (std::size_t j = 0; j < k; ++j) {
    points *= n;
    if (points > 256) {
      return scalar_kernels().scan(flags, n, cols, k, len);
    }
  }
  Lut lut(flags, points);
  bool conclusion_fails = false;
  std::size_t i = 0;
  __m256i const n16 = _mm256_set1_epi16(static_cast<short>(n));
  __m256i const pbit = _mm256_set1_epi8(kPremiseBit);
  __m256i const cbit = _mm256_set1_epi8(kConclusionBit);
  for (; i + 32 <= len; i += 32) {
    __m256i idx = _mm256_setzero_si256();
    for (std::size_t j = 0; j < k; ++j) {
      __m256i c =
          _mm256_loadu_si256(reinterpret_cast<__m256i const*>(cols[j] + i));
      idx = _mm256_add_epi8(mul_bytes(idx, n16), c);
    }
    __m256i f = lut.lookup(idx);
    if (_mm256_movemask_epi8(_mm256_cmpeq_epi8(_mm256_and_si256(f, pbit),
                                               pbit)) != -1) {
      return Scan::premise_fails;
    }
    if (_mm256_movemask_epi8(_mm256_cmpeq_epi8(_mm256_and_si256(f, cbit),
                                               cbit)) != -1) {
      conclusion_fails = true;
    }
  }
  __m128i const n16s = _mm_set1_epi16(static_cast<short>(n));
  __m128i const pbits = _mm_set1_epi8(kPremiseBit);
  __m128i const cbits = _mm_set1_epi8(kConclusionBit);
  for (; i + 16 <= len; i += 16) {
    __m128i idx = _mm_setzero_si128();
    for (std::size_t j = 0; j < k; ++j) {
      __m128i c = _mm_loadu_si128(reinterpret_cast<__m128i const*>(cols[j] + i));
      idx = _mm_add_epi8(mul_bytes(idx, n16s), c);
    }
    __m128i f = lut.lookup(idx);
    if (_mm_movemask_epi8(_mm_cmpeq_epi8(_mm_and_si128(f, pbits), pbits)) !=
        0xFFFF) {
      return Scan::premise_fails;
    }
    if (_mm_movemask_epi8(_mm_cmpeq_epi8(_mm_and_si128(f, cbits), cbits)) !=
        0xFFFF) {
      conclusion_fails = true;
    }
  }
  for (; i < len; ++i) {
    std::size_t idx = 0;
    for (std::size_t j = 0; j < k; ++j) {
      idx = idx * n + cols[j][i];
    }
    Byte f = flags[idx];
    if (!(f & kPremiseBit)) {
      return Scan::premise_fails;
    }
    if (!(f & kConclusionBit)) {
      conclusion_fails = true;
    }
  }
  return conclusion_fails ? Scan::counterexample : Scan::holds;
}

bool equal_avx2(Byte const* a, Byte const* b, std::size_t len) {
  std::size_t i = 0;
  for (; i + 32 <= len; i += 32) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<__m256i const*>(a + i));
    __m256i y = _mm256_loadu_si256(reinterpret_cast<__m256i const*>(b + i));
    if (_mm256_movemask_epi8(_mm256_cmpeq_epi8(x, y)) != -1) {
      return false;
    }
  }
  return std::memcmp(a + i, b + i, len - i) == 0;
}

KernelSet const kAvx2{"avx2", lift_unary_avx2, lift_binary_avx2, scan_avx2,
                      equal_avx2};

}  // namespace

namespace detail {
KernelSet const* avx2_impl() { return &kAvx2; }
}  // namespace detail

}  // namespace admit::kernels
