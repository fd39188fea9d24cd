#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace km {

// A bit string with MSB-first packing. This is the wire representation of
// everything that crosses a simulated link, so packing must be bit-exact
// and identical across platforms.
struct BitBuffer {
  std::vector<std::uint8_t> bytes;
  std::uint64_t bits = 0;
};

class BitWriter {
 public:
  void put(std::uint64_t value, std::uint32_t width) {
    if (width > 64) throw std::invalid_argument("BitWriter: width > 64");
    if (width < 64 && (value >> width) != 0)
      throw std::invalid_argument("BitWriter: value does not fit width");
    for (std::uint32_t i = width; i-- > 0;) put_bit((value >> i) & 1u);
  }

  void put_bit(std::uint32_t b) {
    const std::uint32_t off = buf_.bits & 7u;
    if (off == 0) buf_.bytes.push_back(0);
    if (b) buf_.bytes.back() |= static_cast<std::uint8_t>(0x80u >> off);
    ++buf_.bits;
  }

  void append(const BitBuffer& other) {
    for (std::uint64_t i = 0; i < other.bits; ++i)
      put_bit((other.bytes[i >> 3] >> (7 - (i & 7))) & 1u);
  }

  std::uint64_t bit_count() const { return buf_.bits; }
  const BitBuffer& buffer() const { return buf_; }
  BitBuffer take() { return std::move(buf_); }

 private:
  BitBuffer buf_;
};

class BitReader {
 public:
  explicit BitReader(const BitBuffer& buf) : buf_(&buf) {}

  std::uint64_t get(std::uint32_t width) {
    if (width > 64) throw std::invalid_argument("BitReader: width > 64");
    std::uint64_t v = 0;
    for (std::uint32_t i = 0; i < width; ++i) v = (v << 1) | get_bit();
    return v;
  }

  std::uint32_t get_bit() {
    if (pos_ >= buf_->bits) throw std::out_of_range("BitReader: past end");
    const std::uint32_t b = (buf_->bytes[pos_ >> 3] >> (7 - (pos_ & 7))) & 1u;
    ++pos_;
    return b;
  }

  std::uint64_t remaining() const { return buf_->bits - pos_; }

 private:
  const BitBuffer* buf_;
  std::uint64_t pos_ = 0;
};

inline std::uint32_t bit_width_for(std::uint64_t max_exclusive) {
  // Bits needed to represent values in [0, max_exclusive).
  std::uint32_t w = 0;
  std::uint64_t v = max_exclusive > 0 ? max_exclusive - 1 : 0;
  while (v > 0) {
    ++w;
    v >>= 1;
  }
  return w == 0 ? 1 : w;
}

// ceil(log2 n), with ceil_log2(1) = 0.
inline std::uint32_t ceil_log2(std::uint64_t n) {
  std::uint32_t w = 0;
  while ((std::uint64_t{1} << w) < n) ++w;
  return w;
}

}  // namespace km
