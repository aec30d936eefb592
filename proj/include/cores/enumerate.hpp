#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "cores/betaset.hpp"
#include "cores/coords.hpp"
#include "cores/partition.hpp"

namespace cores {

/// One enumerated core seen through all of its coordinate systems.
struct CoreRecord {
  ZTuple z;
  ATuple a;
  Partition partition;
  Int size = 0;
  std::optional<BigInt> stab;
};

using CoreSink = std::function<void(const CoreRecord&)>;

enum class Strategy {
  Filter,    // all weak compositions, keep the congruence class 0
  Necklace,  // one Lyndon word per cyclic orbit, rotated to its canonical shift
};

enum class TripleMethod { Symmetric, Asymmetric };

/// Visits every weak composition of n into `parts` nonnegative entries in
/// lexicographic order. The callback may not retain the span.
void for_each_weak_composition(Int n, Int parts,
                               const std::function<void(std::span<const Int>)>& visit);

/// The unique r with sum_j j x_{r+j} = 0 (mod t), t = |x|, s = sum x.
/// Throws NotCoprime when gcd(s, t) > 1.
Int canonical_cyclic_rep(std::span<const Int> x);

std::vector<Int> rotate_left(std::span<const Int> x, Int r);

/// Builds the record for a valid z-tuple (any signs allowed).
CoreRecord record_from_z(const ZTuple& z);

/// Streams the (s,t)-cores in lexicographic z order.
void for_each_st_core(Int s, Int t, const CoreSink& sink,
                      Strategy strategy = Strategy::Filter);

/// Collects and sorts; `threads` == 0 means hardware concurrency.
std::vector<CoreRecord> enum_st_cores(Int s, Int t,
                                      Strategy strategy = Strategy::Filter,
                                      unsigned threads = 1);

/// Self-conjugate (s,t)-cores from u-coordinates, sorted by z.
std::vector<CoreRecord> enum_sc_st_cores(Int s, Int t);

/// (m, m+d, m+2d)-cores as (m+d)-cores with z in {-1,0,1}, (s,t) = (d, m+d).
std::vector<CoreRecord> enum_triple_sym(Int m, Int d);
/// (m, m+d, m+2d)-cores as (m+d, m)-cores with z_j + z_{j+1} >= 1.
std::vector<CoreRecord> enum_triple_asym(Int m, Int d);
std::vector<CoreRecord> enum_triple(Int m, Int d, TripleMethod method);

BigInt count_st(Int s, Int t);
BigInt count_sc(Int s, Int t);
BigInt count_triple(Int m, Int d);

/// Reads CORES_THREADS; falls back to hardware concurrency.
unsigned default_thread_count();

}  // namespace cores
