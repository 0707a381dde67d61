#include "admit/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <string>

namespace admit::kernels {

namespace detail {
KernelSet const* avx2_impl();
}

namespace {

void lift_unary_scalar(Byte const* table, std::size_t, Byte const* x,
                       Byte* out, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    out[i] = table[x[i]];
  }
}

void lift_binary_scalar(Byte const* table, std::size_t n, Byte const* x,
                        Byte const* y, Byte* out, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    out[i] = table[x[i] * n + y[i]];
  }
}

Scan scan_scalar(Byte const* flags, std::size_t n, Byte const* const* cols,
                 std::size_t k, std::size_t len) {
  bool conclusion_fails = false;
  for (std::size_t i = 0; i < len; ++i) {
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

bool equal_scalar(Byte const* a, Byte const* b, std::size_t len) {
  return std::memcmp(a, b, len) == 0;
}

KernelSet const kScalar{"scalar", lift_unary_scalar, lift_binary_scalar,
                        scan_scalar, equal_scalar};

KernelSet const* initial() {
  if (char const* env = std::getenv("ADMIT_KERNELS")) {
    std::string v(env);
    if (v == "scalar") {
      return &kScalar;
    }
  }
  if (auto const* k = avx2_kernels()) {
    return k;
  }
  return &kScalar;
}

std::atomic<KernelSet const*>& current() {
  static std::atomic<KernelSet const*> cur{initial()};
  return cur;
}

}  // namespace

KernelSet const& scalar_kernels() { return kScalar; }

KernelSet const* avx2_kernels() {
#if defined(ADMIT_HAVE_AVX2)
  static bool const ok = __builtin_cpu_supports("avx2");
  return ok ? detail::avx2_impl() : nullptr;
#else
  return nullptr;
#endif
}

KernelSet const& active() { return *current().load(std::memory_order_relaxed); }

bool select(std::string_view name) {
  KernelSet const* k = nullptr;
  if (name == "scalar") {
    k = &kScalar;
  } else if (name == "avx2") {
    k = avx2_kernels();
  } else if (name == "auto") {
    k = avx2_kernels() ? avx2_kernels() : &kScalar;
  }
  if (!k) {
    return false;
  }
  current().store(k, std::memory_order_relaxed);
  return true;
}

}  // namespace admit::kernels
