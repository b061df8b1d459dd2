#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "genemagic/error.hpp"

namespace genemagic {

/// Row/column position inside a square matrix, zero-based.
struct Cell {
  std::size_t row = 0;
  std::size_t col = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Dense square matrix stored row-major.
template <typename T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;

  explicit Matrix(std::size_t side, const T& fill = T{})
      : side_(side), data_(side * side, fill) {}

  Matrix(std::size_t side, std::vector<T> data)
      : side_(side), data_(std::move(data)) {
    if (data_.size() != side_ * side_) {
      throw ShapeError("matrix data has " + std::to_string(data_.size()) +
                       " entries, expected " + std::to_string(side_ * side_));
    }
  }

  [[nodiscard]] std::size_t side() const noexcept { return side_; }
  [[nodiscard]] std::size_t size() const noexcept { return data_.size(); }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * side_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * side_ + c]; }
  T& operator[](Cell cell) { return (*this)(cell.row, cell.col); }
  const T& operator[](Cell cell) const { return (*this)(cell.row, cell.col); }

  [[nodiscard]] std::span<const T> row(std::size_t r) const {
    return std::span<const T>(data_).subspan(r * side_, side_);
  }

  [[nodiscard]] std::vector<T> column(std::size_t c) const {
    std::vector<T> out;
    out.reserve(side_);
    for (std::size_t r = 0; r < side_; ++r) out.push_back((*this)(r, c));
    return out;
  }

  [[nodiscard]] const std::vector<T>& data() const noexcept { return data_; }
  auto begin() noexcept { return data_.begin(); }
  auto end() noexcept { return data_.end(); }
  auto begin() const noexcept { return data_.begin(); }
  auto end() const noexcept { return data_.end(); }

  /// Elementwise map into a new matrix of the same side.
  template <typename F>
  [[nodiscard]] auto map(F&& f) const {
    using U = std::decay_t<decltype(f(std::declval<const T&>()))>;
    std::vector<U> out;
    out.reserve(data_.size());
    for (const auto& v : data_) out.push_back(f(v));
    return Matrix<U>(side_, std::move(out));
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t side_ = 0;
  std::vector<T> data_;
};

}  // namespace genemagic
