/**
 * @file compositions.hpp
 * @brief Weak compositions: ordered tuples of non-negative integers with a
 *        prescribed sum, the summation index of every sum in this project.
 */
#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdual {

class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
      if (p < 0) throw std::invalid_argument("Composition: negative part");
      degree_ += p;
    }
  }

  int size() const { return static_cast<int>(parts_.size()); }
  int degree() const { return degree_; }
  std::span<const int> parts() const { return parts_; }

  /// Part by 1-based position (matching index-set conventions).
  int part(int i) const {
    if (i < 1 || i > size()) throw std::out_of_range("Composition: index " + std::to_string(i));
    return parts_[static_cast<size_t>(i) - 1];
  }

  /// d_ij := d_i - d_j, 1-based positions.
  int difference(int i, int j) const { return part(i) - part(j); }

  bool operator==(const Composition&) const = default;

 private:
  std::vector<int> parts_;
  int degree_ = 0;
};

namespace detail {
inline void emit_compositions(int d, int r, std::vector<int>& prefix,
                              std::vector<Composition>& out) {
  if (r == 1) {
    prefix.push_back(d);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int first = 0; first <= d; ++first) {
    prefix.push_back(first);
    emit_compositions(d - first, r - 1, prefix, out);
    prefix.pop_back();
  }
}
}  // namespace detail

/// Every r-tuple of non-negative integers summing to d, exactly once, in
/// ascending lexicographic order. Count is C(d+r-1, r-1).
inline std::vector<Composition> weak_compositions(int d, int r) {
  if (d < 0 || r < 1) throw std::invalid_argument("weak_compositions: need d >= 0, r >= 1");
  std::vector<Composition> out;
  std::vector<int> prefix;
  prefix.reserve(static_cast<size_t>(r));
  detail::emit_compositions(d, r, prefix, out);
  return out;
}

}  // namespace qdual
