#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ehs {

/// An element of Λ_{nN}: cap >= parts[0] >= ... >= parts[n-1] >= 0.
///
/// Length and cap are part of the value; (3,2,0) in Λ_{33} and in Λ_{34}
/// compare unequal and have different conjugates.
class Partition {
 public:
  /// Throws ConfigError if the parts are not nonincreasing within [0, cap].
  Partition(std::vector<int> parts, int cap);

  /// The zero partition 0^n with cap N.
  static Partition zero(int n, int cap);
  /// The full rectangle N^n.
  static Partition full(int n, int cap);

  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int cap() const noexcept { return cap_; }
  std::span<const int> parts() const noexcept { return parts_; }
  /// 0-based row access.
  int operator[](int i) const { return parts_[static_cast<size_t>(i)]; }
  int boxes() const noexcept;

  /// "λ=(3,2,0);n=3;N=4"
  std::string render() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int cap_;
};

std::uint64_t binomial(int n, int k);

/// Every element of Λ_{nN} once, lexicographically decreasing. Requires n >= 1, N >= 0.
std::vector<Partition> enumerate(int n, int N);

/// λ'_i = #{ j : λ_j >= i } for i = 1..N; the result has length N and cap n.
Partition conjugate(const Partition& lambda);

/// A box that can be added: row k (1-based) grows from l-1 to l.
struct Box {
  int row;
  int value;
  friend bool operator==(const Box&, const Box&) = default;
};

/// All boxes whose addition keeps the partition inside Λ_{nN}, by increasing row.
std::vector<Box> addable_boxes(const Partition& lambda);

/// λ with `box` added. Throws ConfigError if the box is not addable.
Partition add_box(const Partition& lambda, const Box& box);

}  // namespace ehs
