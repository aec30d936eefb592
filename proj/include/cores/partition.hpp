#pragma once

#include <compare>
#include <span>
#include <vector>

#include "cores/common.hpp"

namespace cores {

/// An integer partition stored as its positive parts in weakly decreasing
/// order. Trailing zeros are implicit. Cells are addressed 1-based as (r, c).
class Partition {
 public:
  Partition() = default;

  /// Strips trailing zeros; throws NonMonotone if the input increases
  /// anywhere or contains a negative entry.
  static Partition from_parts(std::span<const Int> raw);
  static Partition from_parts(std::initializer_list<Int> raw) {
    return from_parts(std::span<const Int>(raw.begin(), raw.size()));
  }

  const std::vector<Int>& parts() const noexcept { return parts_; }
  Int length() const noexcept { return static_cast<Int>(parts_.size()); }
  Int size() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }

  /// lambda_r with the zero padding, r >= 1.
  Int part(Int r) const noexcept {
    return r >= 1 && r <= length() ? parts_[static_cast<std::size_t>(r - 1)] : 0;
  }
  bool contains(Int r, Int c) const noexcept {
    return r >= 1 && c >= 1 && c <= part(r);
  }

  auto operator<=>(const Partition&) const = default;

 private:
  explicit Partition(std::vector<Int> parts) : parts_(std::move(parts)) {}
  std::vector<Int> parts_;
};

Partition conjugate(const Partition& p);

bool is_self_conjugate(const Partition& p);

/// 1 + arm + leg of cell (r, c). Throws OutOfDiagram.
Int hook_length(const Partition& p, Int r, Int c);

/// All hook lengths, row-major.
std::vector<Int> hook_lengths(const Partition& p);

/// Removes the rim hook attached to cell (r, c): the cells (i, j) with
/// i >= r, j >= c and (i+1, j+1) outside the diagram.
Partition remove_rim_hook(const Partition& p, Int r, Int c);

/// t-core by repeated rim t-hook removal on the diagram, scanning cells in
/// row-major order. Independent of beta-sets.
Partition t_core_by_diagram(const Partition& p, Int t);

}  // namespace cores
