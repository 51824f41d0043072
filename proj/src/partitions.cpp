#include "ehs/partitions.hpp"

#include <cstdint>

#include "ehs/errors.hpp"

namespace ehs {

Partition::Partition(std::vector<int> parts, int cap) : parts_(std::move(parts)), cap_(cap) {
  if (cap_ < 0) throw ConfigError("partition cap must be nonnegative");
  int previous = cap_;
  for (int part : parts_) {
    if (part < 0 || part > previous) throw ConfigError("not a partition in the box: " + render());
    previous = part;
  }
}

Partition Partition::zero(int n, int cap) { return {std::vector<int>(static_cast<size_t>(n), 0), cap}; }

Partition Partition::full(int n, int cap) { return {std::vector<int>(static_cast<size_t>(n), cap), cap}; }

int Partition::boxes() const noexcept {
  int total = 0;
  for (int part : parts_) total += part;
  return total;
}

std::string Partition::render() const {
  std::string out = "λ=(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i != 0) out += ",";
    out += std::to_string(parts_[i]);
  }
  out += ");n=" + std::to_string(parts_.size()) + ";N=" + std::to_string(cap_);
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return result;
}

namespace {

void enumerate_rows(std::vector<int>& parts, size_t row, int upper, int cap, std::vector<Partition>& out) {
  if (row == parts.size()) {
    out.emplace_back(parts, cap);
    return;
  }
  for (int value = upper; value >= 0; --value) {
    parts[row] = value;
    enumerate_rows(parts, row + 1, value, cap, out);
  }
}

}  // namespace

std::vector<Partition> enumerate(int n, int N) {
  if (n < 1 || N < 0) throw ConfigError("enumerate needs n >= 1 and N >= 0");
  std::vector<Partition> out;
  out.reserve(binomial(n + N, n));
  std::vector<int> parts(static_cast<size_t>(n), 0);
  enumerate_rows(parts, 0, N, N, out);
  return out;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> parts(static_cast<size_t>(lambda.cap()), 0);
  for (int i = 1; i <= lambda.cap(); ++i) {
    int count = 0;
    for (int part : lambda.parts()) count += part >= i ? 1 : 0;
    parts[static_cast<size_t>(i - 1)] = count;
  }
  return {std::move(parts), lambda.length()};
}

std::vector<Box> addable_boxes(const Partition& lambda) {
  std::vector<Box> boxes;
  for (int k = 0; k < lambda.length(); ++k) {
    int above = k == 0 ? lambda.cap() : lambda[k - 1];
    if (lambda[k] < above) boxes.push_back({k + 1, lambda[k] + 1});
  }
  return boxes;
}

Partition add_box(const Partition& lambda, const Box& box) {
  if (box.row < 1 || box.row > lambda.length() || lambda[box.row - 1] != box.value - 1) {
    throw ConfigError("box does not extend row " + std::to_string(box.row) + " of " + lambda.render());
  }
  std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
  parts[static_cast<size_t>(box.row - 1)] = box.value;
  return {std::move(parts), lambda.cap()};
}

}  // namespace ehs
