#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qalcove {

/// Integral weight in the fundamental-weight basis: lambda = sum_i c_i lambda_i.
class Weight {
 public:
  using value_type = std::int64_t;

  Weight() = default;
  explicit Weight(std::size_t rank) : c_(rank, 0) {}
  explicit Weight(std::vector<value_type> coords) : c_(std::move(coords)) {}
  Weight(std::initializer_list<value_type> il) : c_(il) {}

  static Weight zero(std::size_t rank) { return Weight(rank); }
  static Weight unit(std::size_t rank, std::size_t i) {
    Weight w(rank);
    w.c_[i] = 1;
    return w;
  }
  /// Parses "1,0,2". Throws ValidationError on syntax errors or rank mismatch.
  static Weight parse(std::string_view text, std::size_t rank);

  std::size_t rank() const noexcept { return c_.size(); }
  value_type operator[](std::size_t i) const { return c_[i]; }
  value_type& operator[](std::size_t i) { return c_[i]; }
  std::span<const value_type> coords() const noexcept { return c_; }
  auto begin() const noexcept { return c_.begin(); }
  auto end() const noexcept { return c_.end(); }

  bool is_zero() const noexcept;
  /// All coordinates nonnegative.
  bool is_dominant() const noexcept;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight& operator*=(value_type k);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(value_type k, Weight a) { return a *= k; }
  friend Weight operator-(Weight a) { return a *= -1; }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  /// Comma-separated coordinates, the wire format used by the CLI.
  std::string to_string() const;

 private:
  std::vector<value_type> c_;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept;
};

/// Plain dot product of coordinate vectors.
std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

}  // namespace qalcove
