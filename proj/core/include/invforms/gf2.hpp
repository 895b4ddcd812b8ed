#pragma once

// Bit-packed linear algebra over GF(2).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace invforms {

class BitVector {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }
  bool get(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i, bool value = true) noexcept {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }
  void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVector& operator^=(const BitVector& other);
  /// Parity of the bitwise AND.
  bool dot(const BitVector& other) const;
  bool any() const noexcept;
  std::size_t count() const noexcept;
  std::size_t first_set() const noexcept;
  /// Indices of set bits in increasing order.
  std::vector<std::size_t> ones() const;
  /// Copy with extra zero bits appended.
  BitVector resized(std::size_t size) const;

  std::string to_string() const;
  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Rows of a matrix over GF(2).
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  BitVector& row(std::size_t i) { return rows_[i]; }
  const BitVector& row(std::size_t i) const { return rows_[i]; }
  bool get(std::size_t i, std::size_t j) const { return rows_[i].get(j); }
  void set(std::size_t i, std::size_t j, bool v = true) { rows_[i].set(j, v); }
  void append_row(BitVector row);

  BitVector apply(const BitVector& x) const;
  Gf2Matrix transposed() const;
  static Gf2Matrix identity(std::size_t n);

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

/// A reduced row echelon basis grown one row at a time.
class Echelon {
 public:
  explicit Echelon(std::size_t cols) : cols_(cols) {}

  /// Reduces v in place against the basis.
  void reduce(BitVector& v) const;
  /// Adds v to the span; returns false if it was already in it.
  bool insert(BitVector v);
  bool contains(BitVector v) const;

  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  const std::vector<BitVector>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

 private:
  std::size_t cols_;
  std::vector<BitVector> rows_;
  std::vector<std::size_t> pivots_;
};

std::size_t rank(const std::vector<BitVector>& rows, std::size_t cols);
/// Basis of {x : A x = 0}.
std::vector<BitVector> kernel(const Gf2Matrix& a);
/// Some x with A x = b, or nothing.
std::optional<BitVector> solve(const Gf2Matrix& a, const BitVector& b);

}  // namespace invforms
