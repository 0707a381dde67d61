#include "admit/tuple_set.hpp"

#include <cstring>

#include "admit/kernels.hpp"

namespace admit {

namespace {

inline std::uint64_t mix(std::uint64_t x) noexcept {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

}  // namespace

TupleSet::TupleSet(std::size_t width) : width_(width) {
  slots_.assign(16, kEmpty);
  mask_ = slots_.size() - 1;
}

std::uint64_t TupleSet::hash(Byte const* t) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ width_;
  std::size_t i = 0;
  for (; i + 8 <= width_; i += 8) {
    std::uint64_t w;
    std::memcpy(&w, t + i, 8);
    h = mix(h ^ w);
  }
  if (i < width_) {
    std::uint64_t w = 0;
    std::memcpy(&w, t + i, width_ - i);
    h = mix(h ^ w ^ 0xff);
  }
  return h;
}

void TupleSet::grow() {
  std::vector<std::uint32_t> slots(slots_.size() * 2, kEmpty);
  std::size_t mask = slots.size() - 1;
  for (std::size_t i = 0; i < count_; ++i) {
    std::size_t s = hash(data_.data() + i * width_) & mask;
    while (slots[s] != kEmpty) {
      s = (s + 1) & mask;
    }
    slots[s] = static_cast<std::uint32_t>(i);
  }
  slots_ = std::move(slots);
  mask_ = mask;
}

void TupleSet::reserve(std::size_t n) {
  data_.reserve(n * width_);
  while (slots_.size() < 2 * n) {
    grow();
  }
}

std::pair<std::uint32_t, bool> TupleSet::insert(std::span<Byte const> t) {
  auto const& k = kernels::active();
  std::size_t s = hash(t.data()) & mask_;
  while (slots_[s] != kEmpty) {
    std::uint32_t i = slots_[s];
    if (k.equal(data_.data() + i * width_, t.data(), width_)) {
      return {i, false};
    }
    s = (s + 1) & mask_;
  }
  auto idx = static_cast<std::uint32_t>(count_);
  slots_[s] = idx;
  data_.insert(data_.end(), t.begin(), t.end());
  ++count_;
  if (2 * count_ > slots_.size()) {
    grow();
  }
  return {idx, true};
}

std::optional<std::uint32_t> TupleSet::find(std::span<Byte const> t) const {
  auto const& k = kernels::active();
  std::size_t s = hash(t.data()) & mask_;
  while (slots_[s] != kEmpty) {
    std::uint32_t i = slots_[s];
    if (k.equal(data_.data() + i * width_, t.data(), width_)) {
      return i;
    }
    s = (s + 1) & mask_;
  }
  return std::nullopt;
}

std::size_t TupleSet::memory_bytes() const noexcept {
  return data_.capacity() + slots_.capacity() * sizeof(std::uint32_t);
}

}  // namespace admit
