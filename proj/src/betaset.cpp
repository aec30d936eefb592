#include "cores/betaset.hpp"

#include <algorithm>

namespace cores {

namespace {

bool sorted_contains(const std::vector<Int>& v, Int x) {
  return std::binary_search(v.begin(), v.end(), x);
}

void require_positive(Int s) {
  if (s < 1) throw std::domain_error("modulus must be positive");
}

}  // namespace

BetaSet BetaSet::make(std::vector<Int> members, std::vector<Int> gaps) {
  std::sort(members.begin(), members.end());
  std::sort(gaps.begin(), gaps.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());
  if (!members.empty() && members.front() < 0) {
    throw std::invalid_argument("beta-set members must be nonnegative");
  }
  if (!gaps.empty() && gaps.back() >= 0) {
    throw std::invalid_argument("beta-set gaps must be negative");
  }
  if (members.size() != gaps.size()) {
    throw CoreError(ErrorKind::ChargeNonzero,
                    "beta-set has nonzero charge (" +
                        std::to_string(members.size()) + " members, " +
                        std::to_string(gaps.size()) + " gaps)");
  }
  return BetaSet(std::move(members), std::move(gaps));
}

bool BetaSet::contains(Int x) const {
  return x >= 0 ? sorted_contains(members_, x) : !sorted_contains(gaps_, x);
}

Int BetaSet::floor_bound() const noexcept {
  return gaps_.empty() ? 0 : gaps_.front();
}

Int BetaSet::top() const noexcept {
  if (!members_.empty()) return members_.back();
  Int x = -1;
  while (sorted_contains(gaps_, x)) --x;
  return x;
}

ATuple ATuple::make(Int t, std::vector<Int> a) {
  if (t < 1 || static_cast<Int>(a.size()) != t) {
    throw CoreError(ErrorKind::InvalidA, "a-tuple must have exactly t entries");
  }
  Int sum = 0;
  for (Int i = 0; i < t; ++i) {
    if (mod(a[static_cast<std::size_t>(i)], t) != i) {
      throw CoreError(ErrorKind::InvalidA,
                      "a_" + std::to_string(i) + " is not congruent to " +
                          std::to_string(i) + " mod " + std::to_string(t));
    }
    sum += a[static_cast<std::size_t>(i)];
  }
  if (sum != t * (t - 1) / 2) {
    throw CoreError(ErrorKind::InvalidA, "a-tuple must sum to t(t-1)/2");
  }
  return ATuple(t, std::move(a));
}

BetaSet beta_from_partition(const Partition& p) {
  std::vector<Int> members;
  std::vector<Int> values;
  const Int len = p.length();
  for (Int i = 1; i <= len; ++i) {
    const Int x = p.part(i) - i;
    if (x >= 0) {
      members.push_back(x);
    } else {
      values.push_back(x);
    }
  }
  std::vector<Int> gaps;
  for (Int x = -len; x <= -1; ++x) {
    if (std::find(values.begin(), values.end(), x) == values.end()) {
      gaps.push_back(x);
    }
  }
  return BetaSet::make(std::move(members), std::move(gaps));
}

Partition partition_from_beta(const BetaSet& b) {
  std::vector<Int> parts;
  Int k = 0;
  for (Int x = b.top(); x >= b.floor_bound() - 1; --x) {
    if (b.contains(x)) {
      ++k;
      parts.push_back(x + k);
    }
  }
  return Partition::from_parts(parts);
}

CTuple charge(const BetaSet& b, Int s) {
  require_positive(s);
  CTuple out{s, std::vector<Int>(static_cast<std::size_t>(s), 0)};
  for (Int g : b.gaps()) ++out.c[static_cast<std::size_t>(mod(-1 - g, s))];
  for (Int m : b.members()) --out.c[static_cast<std::size_t>(mod(-1 - m, s))];
  return out;
}

Int count_removable_hooks(const BetaSet& b, Int s) {
  require_positive(s);
  Int count = 0;
  auto check_hole = [&](Int hole) {
    if (b.contains(hole + s)) ++count;
  };
  for (Int g : b.gaps()) check_hole(g);
  for (Int y = 0; y <= b.top(); ++y) {
    if (!b.contains(y)) check_hole(y);
  }
  return count;
}

bool is_s_core(const BetaSet& b, Int s) { return count_removable_hooks(b, s) == 0; }

BetaSet s_push(const BetaSet& b, Int s) {
  require_positive(s);
  std::vector<Int> excess(static_cast<std::size_t>(s), 0);
  for (Int m : b.members()) ++excess[static_cast<std::size_t>(mod(m, s))];
  for (Int g : b.gaps()) --excess[static_cast<std::size_t>(mod(g, s))];
  std::vector<Int> members;
  std::vector<Int> gaps;
  for (Int r = 0; r < s; ++r) {
    const Int n = excess[static_cast<std::size_t>(r)];
    for (Int j = 0; j < n; ++j) members.push_back(r + j * s);
    for (Int j = 1; j <= -n; ++j) gaps.push_back(r - j * s);
  }
  return BetaSet::make(std::move(members), std::move(gaps));
}

Partition t_core(const Partition& p, Int t) {
  return partition_from_beta(s_push(beta_from_partition(p), t));
}

ATuple a_coords(const Partition& p, Int s) {
  require_positive(s);
  const BetaSet b = beta_from_partition(p);
  if (!is_s_core(b, s)) {
    throw CoreError(ErrorKind::NotACore, "partition is not an " +
                                             std::to_string(s) + "-core");
  }
  std::vector<Int> a(static_cast<std::size_t>(s));
  const Int top = b.top();
  for (Int i = 0; i < s; ++i) {
    Int x = top - mod(top - i, s);
    while (!b.contains(x)) x -= s;
    a[static_cast<std::size_t>(i)] = s + x;
  }
  return ATuple::make(s, std::move(a));
}

std::vector<Int> s_set(const Partition& p, Int s) {
  std::vector<Int> out = a_coords(p, s).values();
  std::sort(out.begin(), out.end());
  return out;
}

BetaSet beta_from_a(const ATuple& a) {
  const Int s = a.t();
  std::vector<Int> members;
  std::vector<Int> gaps;
  for (Int v : a.values()) {
    for (Int x = v - s; x >= 0; x -= s) members.push_back(x);
    for (Int x = v; x <= -1; x += s) gaps.push_back(x);
  }
  return BetaSet::make(std::move(members), std::move(gaps));
}

Partition core_from_a(const ATuple& a) { return partition_from_beta(beta_from_a(a)); }

ATuple a_from_c(const CTuple& c) {
  const Int s = c.s;
  std::vector<Int> a(static_cast<std::size_t>(s));
  for (Int i = 0; i < s; ++i) {
    a[static_cast<std::size_t>(i)] = i - s * c.c[static_cast<std::size_t>(mod(-1 - i, s))];
  }
  return ATuple::make(s, std::move(a));
}

CTuple c_from_a(const ATuple& a) {
  const Int s = a.t();
  CTuple out{s, std::vector<Int>(static_cast<std::size_t>(s))};
  for (Int i = 0; i < s; ++i) {
    out.c[static_cast<std::size_t>(mod(-1 - i, s))] = exact_div(i - a[i], s);
  }
  return out;
}

BetaSet conjugate_beta(const BetaSet& b) {
  std::vector<Int> members;
  std::vector<Int> gaps;
  for (Int g : b.gaps()) members.push_back(-1 - g);
  for (Int m : b.members()) gaps.push_back(-1 - m);
  return BetaSet::make(std::move(members), std::move(gaps));
}

CTuple random_c(Int s, Int bound, std::mt19937_64& rng) {
  require_positive(s);
  std::uniform_int_distribution<Int> dist(-bound, bound);
  CTuple out{s, std::vector<Int>(static_cast<std::size_t>(s), 0)};
  for (;;) {
    Int sum = 0;
    for (Int i = 0; i + 1 < s; ++i) {
      out.c[static_cast<std::size_t>(i)] = dist(rng);
      sum += out.c[static_cast<std::size_t>(i)];
    }
    if (sum >= -bound && sum <= bound) {
      out.c.back() = -sum;
      return out;
    }
  }
}

Partition random_s_core(Int s, Int bound, std::mt19937_64& rng) {
  return core_from_a(a_from_c(random_c(s, bound, rng)));
}

}  // namespace cores
