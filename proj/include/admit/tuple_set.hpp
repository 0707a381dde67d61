#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace admit {

using Byte = std::uint8_t;

// Insertion-ordered set of fixed-width byte tuples with an open-addressing
// index. Tuple i lives at data()[i * width() .. (i+1) * width()).
class TupleSet {
 public:
  explicit TupleSet(std::size_t width = 0);

  std::size_t width() const noexcept { return width_; }
  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  std::span<Byte const> operator[](std::size_t i) const {
    return {data_.data() + i * width_, width_};
  }
  Byte const* data() const noexcept { return data_.data(); }

  // Returns (index, inserted).
  std::pair<std::uint32_t, bool> insert(std::span<Byte const> t);
  std::optional<std::uint32_t> find(std::span<Byte const> t) const;

  void reserve(std::size_t n);
  std::size_t memory_bytes() const noexcept;

 private:
  std::uint64_t hash(Byte const* t) const noexcept;
  void grow();

  static constexpr std::uint32_t kEmpty = 0xFFFFFFFFu;

  std::size_t width_;
  std::size_t count_ = 0;
  std::vector<Byte> data_;
  std::vector<std::uint32_t> slots_;
  std::size_t mask_ = 0;
};

}  // namespace admit
