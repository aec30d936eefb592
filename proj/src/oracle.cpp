#include "cores/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace cores {

namespace {

void partitions_of(Int remaining, Int max_part, std::vector<Int>& prefix,
                   std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition::from_parts(prefix));
    return;
  }
  for (Int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_of(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enum_partitions_up_to(Int n_max, Int cap) {
  if (n_max > cap) {
    throw CoreError(ErrorKind::CapExceeded, "n_max " + std::to_string(n_max) +
                                                " exceeds the cap " + std::to_string(cap));
  }
  std::vector<Partition> out;
  std::vector<Int> prefix;
  for (Int n = 0; n <= n_max; ++n) partitions_of(n, n, prefix, out);
  return out;
}

std::vector<Partition> brute_st_cores(const std::set<Int>& moduli, Int n_max, Int cap) {
  std::vector<Partition> out;
  for (Partition& p : enum_partitions_up_to(n_max, cap)) {
    const auto hooks = hook_lengths(p);
    const bool clean = std::none_of(hooks.begin(), hooks.end(), [&](Int h) {
      return std::any_of(moduli.begin(), moduli.end(), [h](Int m) { return h % m == 0; });
    });
    if (clean) out.push_back(std::move(p));
  }
  return out;
}

BigInt brute_stab_count(const std::vector<Int>& sset, Int t, bool self_conjugate, Int s) {
  if (s < 1 || t < 1 || static_cast<Int>(sset.size()) != s) {
    throw CoreError(ErrorKind::InvalidSSet, "an s-set has exactly s elements");
  }
  std::vector<Int> elems = sset;
  std::sort(elems.begin(), elems.end());
  std::vector<bool> seen(static_cast<std::size_t>(s), false);
  for (Int x : elems) {
    auto r = static_cast<std::size_t>(mod(x, s));
    if (seen[r]) throw CoreError(ErrorKind::InvalidSSet, "repeated residue mod s");
    seen[r] = true;
  }
  if (std::accumulate(elems.begin(), elems.end(), Int{0}) != s * (s - 1) / 2) {
    throw CoreError(ErrorKind::InvalidSSet, "s-set must sum to s(s-1)/2");
  }
  auto index_of = [&](Int x) -> Int {
    auto it = std::lower_bound(elems.begin(), elems.end(), x);
    return it != elems.end() && *it == x ? it - elems.begin() : -1;
  };
  std::vector<Int> mirror(elems.size());
  if (self_conjugate) {
    for (std::size_t i = 0; i < elems.size(); ++i) {
      mirror[i] = index_of(s - 1 - elems[i]);
      if (mirror[i] < 0) throw CoreError(ErrorKind::InvalidSSet, "s-set is not symmetric");
    }
  }
  if (s > 8) throw CoreError(ErrorKind::TooLarge, "brute stabilizer count limited to 8 elements");

  std::vector<Int> perm(elems.size());
  std::iota(perm.begin(), perm.end(), Int{0});
  BigInt count = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < perm.size() && ok; ++i) {
      const Int image = elems[static_cast<std::size_t>(perm[i])];
      ok = mod(image - elems[i], t) == 0;
      if (ok && self_conjugate) {
        // pi(s-1-m) = s-1-pi(m)
        const Int lhs = elems[static_cast<std::size_t>(perm[static_cast<std::size_t>(mirror[i])])];
        ok = lhs == s - 1 - image;
      }
    }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

std::vector<BigInt> motzkin_numbers(Int n) {
  // M_{k+1} = M_k + sum_{i=0}^{k-1} M_i M_{k-1-i}
  std::vector<BigInt> m{1};
  for (Int k = 0; k < n; ++k) {
    BigInt next = m[static_cast<std::size_t>(k)];
    for (Int i = 0; i < k; ++i) {
      next += m[static_cast<std::size_t>(i)] * m[static_cast<std::size_t>(k - 1 - i)];
    }
    m.push_back(next);
  }
  return m;
}

}  // namespace cores
