#include "invforms/gf2.hpp"

#include <bit>

#include "invforms/errors.hpp"

namespace invforms {

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_) throw InternalError("BitVector size mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

bool BitVector::dot(const BitVector& other) const {
  if (other.size_ != size_) throw InternalError("BitVector size mismatch");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
  return std::popcount(acc) & 1;
}

bool BitVector::any() const noexcept {
  for (auto w : words_) {
    if (w) return true;
  }
  return false;
}

std::size_t BitVector::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t BitVector::first_set() const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
  }
  return npos;
}

std::vector<std::size_t> BitVector::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (std::uint64_t w = words_[i]; w; w &= w - 1) {
      out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
    }
  }
  return out;
}

BitVector BitVector::resized(std::size_t size) const {
  BitVector out(size);
  for (auto i : ones()) {
    if (i < size) out.set(i);
  }
  return out;
}

std::string BitVector::to_string() const {
  std::string s(size_, '0');
  for (auto i : ones()) s[i] = '1';
  return s;
}

void Gf2Matrix::append_row(BitVector row) {
  if (row.size() != cols_) throw InternalError("Gf2Matrix row width mismatch");
  rows_.push_back(std::move(row));
}

BitVector Gf2Matrix::apply(const BitVector& x) const {
  BitVector out(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].dot(x)) out.set(i);
  }
  return out;
}

Gf2Matrix Gf2Matrix::transposed() const {
  Gf2Matrix t(cols_, rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (auto j : rows_[i].ones()) t.set(j, i);
  }
  return t;
}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

void Echelon::reduce(BitVector& v) const {
  // Rows are fully reduced, so each pivot bit of v is only touched by its row.
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (v.get(pivots_[r])) v ^= rows_[r];
  }
}

bool Echelon::insert(BitVector v) {
  if (v.size() != cols_) throw InternalError("Echelon width mismatch");
  reduce(v);
  const std::size_t p = v.first_set();
  if (p == BitVector::npos) return false;
  // Keep the basis fully reduced: clear column p from existing rows.
  for (auto& row : rows_) {
    if (row.get(p)) row ^= v;
  }
  pivots_.push_back(p);
  rows_.push_back(std::move(v));
  return true;
}

bool Echelon::contains(BitVector v) const {
  reduce(v);
  return !v.any();
}

std::size_t rank(const std::vector<BitVector>& rows, std::size_t cols) {
  Echelon e(cols);
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

std::vector<BitVector> kernel(const Gf2Matrix& a) {
  const std::size_t n = a.cols();
  Echelon e(n);
  for (std::size_t i = 0; i < a.rows(); ++i) e.insert(a.row(i));
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots()) is_pivot[p] = true;
  std::vector<BitVector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    BitVector x(n);
    x.set(free);
    // Fully reduced rows: pivot p equals the row's entry in the free column.
    for (std::size_t r = 0; r < e.rank(); ++r) {
      if (e.rows()[r].get(free)) x.set(e.pivots()[r]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<BitVector> solve(const Gf2Matrix& a, const BitVector& b) {
  const std::size_t n = a.cols();
  if (b.size() != a.rows()) throw InternalError("solve: right-hand side size mismatch");
  Echelon e(n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    BitVector row = a.row(i).resized(n + 1);
    if (b.get(i)) row.set(n);
    e.insert(std::move(row));
  }
  BitVector x(n);
  for (std::size_t r = 0; r < e.rank(); ++r) {
    const std::size_t p = e.pivots()[r];
    if (p == n) return std::nullopt;
    if (e.rows()[r].get(n)) x.set(p);
  }
  return x;
}

}  // namespace invforms
