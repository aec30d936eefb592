#include "cores/partition.hpp"

#include <algorithm>

namespace cores {

Partition Partition::from_parts(std::span<const Int> raw) {
  std::size_t n = raw.size();
  while (n > 0 && raw[n - 1] == 0) --n;
  std::vector<Int> parts(raw.begin(), raw.begin() + static_cast<std::ptrdiff_t>(n));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) {
      throw CoreError(ErrorKind::NonMonotone,
                      "partition parts must be positive before trailing zeros");
    }
    if (i + 1 < parts.size() && parts[i] < parts[i + 1]) {
      throw CoreError(ErrorKind::NonMonotone,
                      "partition parts must be weakly decreasing");
    }
  }
  return Partition(std::move(parts));
}

Int Partition::size() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), Int{0});
}

Partition conjugate(const Partition& p) {
  const Int cols = p.part(1);
  std::vector<Int> out(static_cast<std::size_t>(cols), 0);
  for (Int part : p.parts()) {
    for (Int c = 0; c < part; ++c) ++out[static_cast<std::size_t>(c)];
  }
  return Partition::from_parts(out);
}

bool is_self_conjugate(const Partition& p) { return conjugate(p) == p; }

Int hook_length(const Partition& p, Int r, Int c) {
  if (!p.contains(r, c)) {
    throw CoreError(ErrorKind::OutOfDiagram,
                    "cell (" + std::to_string(r) + "," + std::to_string(c) +
                        ") is outside the diagram");
  }
  Int leg = 0;
  while (p.part(r + leg + 1) >= c) ++leg;
  return 1 + (p.part(r) - c) + leg;
}

std::vector<Int> hook_lengths(const Partition& p) {
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(p.size()));
  const Partition q = conjugate(p);
  for (Int r = 1; r <= p.length(); ++r) {
    for (Int c = 1; c <= p.part(r); ++c) {
      out.push_back(1 + (p.part(r) - c) + (q.part(c) - r));
    }
  }
  return out;
}

Partition remove_rim_hook(const Partition& p, Int r, Int c) {
  if (!p.contains(r, c)) {
    throw CoreError(ErrorKind::OutOfDiagram,
                    "cell (" + std::to_string(r) + "," + std::to_string(c) +
                        ") is outside the diagram");
  }
  // Row i >= r keeps its cells j < c, plus every j >= c with (i+1, j+1)
  // inside the diagram, i.e. j+1 <= lambda_{i+1}.
  std::vector<Int> parts = p.parts();
  for (Int i = r; i <= p.length(); ++i) {
    const Int below = p.part(i + 1);
    if (p.part(i) < c) break;
    const Int kept = std::max(c - 1, std::min(p.part(i), below - 1));
    parts[static_cast<std::size_t>(i - 1)] = kept;
  }
  return Partition::from_parts(parts);
}

Partition t_core_by_diagram(const Partition& p, Int t) {
  if (t < 1) throw std::domain_error("t must be positive");
  if (t == 1) return Partition{};
  Partition cur = p;
  for (;;) {
    bool removed = false;
    const Partition q = conjugate(cur);
    for (Int r = 1; r <= cur.length() && !removed; ++r) {
      for (Int c = 1; c <= cur.part(r); ++c) {
        if (1 + (cur.part(r) - c) + (q.part(c) - r) == t) {
          cur = remove_rim_hook(cur, r, c);
          removed = true;
          break;
        }
      }
    }
    if (!removed) return cur;
  }
}

}  // namespace cores
