#include "cores/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <thread>

namespace cores {

namespace {

void compose(Int remaining, Int pos, std::vector<Int>& buf,
             const std::function<void(std::span<const Int>)>& visit) {
  const Int parts = static_cast<Int>(buf.size());
  if (pos == parts - 1) {
    buf[static_cast<std::size_t>(pos)] = remaining;
    visit(buf);
    return;
  }
  for (Int v = 0; v <= remaining; ++v) {
    buf[static_cast<std::size_t>(pos)] = v;
    compose(remaining - v, pos + 1, buf, visit);
  }
}

bool congruence_holds(std::span<const Int> z) {
  const Int t = static_cast<Int>(z.size());
  Int moment = 0;
  for (Int j = 0; j < t; ++j) moment += j * z[static_cast<std::size_t>(j)];
  return mod(moment, t) == 0;
}

bool by_z(const CoreRecord& x, const CoreRecord& y) { return x.z.z < y.z.z; }

// Fredricksen-Kessler-Maiorana with a running-sum bound; emits the Lyndon
// words of length t over {0..s} whose entries sum to s.
void lyndon_words(Int s, Int t, Int pos, Int period, Int sum, std::vector<Int>& a,
                  std::vector<std::vector<Int>>& out) {
  if (pos > t) {
    if (period == t && sum == s) out.emplace_back(a.begin() + 1, a.end());
    return;
  }
  const Int inherited = a[static_cast<std::size_t>(pos - period)];
  if (sum + inherited <= s) {
    a[static_cast<std::size_t>(pos)] = inherited;
    lyndon_words(s, t, pos + 1, period, sum + inherited, a, out);
  }
  for (Int v = inherited + 1; sum + v <= s; ++v) {
    a[static_cast<std::size_t>(pos)] = v;
    lyndon_words(s, t, pos + 1, pos, sum + v, a, out);
  }
}

std::vector<std::vector<Int>> st_core_z_tuples_by_necklace(Int s, Int t) {
  std::vector<std::vector<Int>> words;
  std::vector<Int> a(static_cast<std::size_t>(t + 1), 0);
  lyndon_words(s, t, 1, 1, 0, a, words);
  for (auto& w : words) w = rotate_left(w, canonical_cyclic_rep(w));
  std::sort(words.begin(), words.end());
  return words;
}

}  // namespace

void for_each_weak_composition(Int n, Int parts,
                               const std::function<void(std::span<const Int>)>& visit) {
  if (parts <= 0) {
    if (n == 0) visit({});
    return;
  }
  std::vector<Int> buf(static_cast<std::size_t>(parts), 0);
  compose(n, 0, buf, visit);
}

Int canonical_cyclic_rep(std::span<const Int> x) {
  const Int t = static_cast<Int>(x.size());
  Int s = 0;
  for (Int v : x) s += v;
  require_coprime(s, t);
  for (Int r = 0; r < t; ++r) {
    Int moment = 0;
    for (Int j = 0; j < t; ++j) moment += j * x[static_cast<std::size_t>(mod(r + j, t))];
    if (mod(moment, t) == 0) return r;
  }
  throw std::logic_error("no rotation satisfies the congruence");
}

std::vector<Int> rotate_left(std::span<const Int> x, Int r) {
  std::vector<Int> out(x.begin(), x.end());
  if (!out.empty()) {
    std::rotate(out.begin(), out.begin() + mod(r, static_cast<Int>(out.size())), out.end());
  }
  return out;
}

CoreRecord record_from_z(const ZTuple& z) {
  ATuple a = z_to_a(z);
  Partition p = core_from_a(a);
  const Int size = p.size();
  return CoreRecord{z, std::move(a), std::move(p), size, std::nullopt};
}

void for_each_st_core(Int s, Int t, const CoreSink& sink, Strategy strategy) {
  require_coprime(s, t);
  if (strategy == Strategy::Necklace) {
    for (auto& z : st_core_z_tuples_by_necklace(s, t)) {
      sink(record_from_z(ZTuple{t, s, std::move(z)}));
    }
    return;
  }
  for_each_weak_composition(s, t, [&](std::span<const Int> z) {
    if (congruence_holds(z)) sink(record_from_z(ZTuple{t, s, {z.begin(), z.end()}}));
  });
}

std::vector<CoreRecord> enum_st_cores(Int s, Int t, Strategy strategy, unsigned threads) {
  require_coprime(s, t);
  if (threads == 0) threads = default_thread_count();
  std::vector<CoreRecord> out;
  if (threads <= 1 || t == 1 || strategy == Strategy::Necklace) {
    for_each_st_core(s, t, [&](const CoreRecord& r) { out.push_back(r); }, strategy);
    return out;
  }
  // Split on the first coordinate; each worker owns a slice of z_0 values.
  std::mutex lock;
  std::atomic<Int> next{0};
  auto worker = [&] {
    std::vector<CoreRecord> local;
    for (Int head = next++; head <= s; head = next++) {
      for_each_weak_composition(s - head, t - 1, [&](std::span<const Int> tail) {
        std::vector<Int> z{head};
        z.insert(z.end(), tail.begin(), tail.end());
        if (congruence_holds(z)) local.push_back(record_from_z(ZTuple{t, s, std::move(z)}));
      });
    }
    std::lock_guard<std::mutex> guard(lock);
    std::move(local.begin(), local.end(), std::back_inserter(out));
  };
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  std::sort(out.begin(), out.end(), by_z);
  return out;
}

std::vector<CoreRecord> enum_sc_st_cores(Int s, Int t) {
  require_coprime(s, t);
  std::vector<CoreRecord> out;
  for_each_weak_composition(s / 2, t / 2 + 1, [&](std::span<const Int> u) {
    out.push_back(record_from_z(u_to_z(UTuple{t, s, {u.begin(), u.end()}})));
  });
  std::sort(out.begin(), out.end(), by_z);
  return out;
}

std::vector<CoreRecord> enum_triple_sym(Int m, Int d) {
  require_coprime(m, d);
  const Int t = m + d;
  std::vector<CoreRecord> out;
  std::vector<Int> z(static_cast<std::size_t>(t), -1);
  // Odometer over {-1,0,1}^t in lexicographic order.
  for (;;) {
    Int sum = 0;
    for (Int v : z) sum += v;
    if (sum == d && congruence_holds(z)) out.push_back(record_from_z(ZTuple{t, d, z}));
    Int pos = t - 1;
    while (pos >= 0 && z[static_cast<std::size_t>(pos)] == 1) {
      z[static_cast<std::size_t>(pos)] = -1;
      --pos;
    }
    if (pos < 0) break;
    ++z[static_cast<std::size_t>(pos)];
  }
  return out;
}

std::vector<CoreRecord> enum_triple_asym(Int m, Int d) {
  require_coprime(m, d);
  const Int t = m;
  const Int s = m + d;
  std::vector<CoreRecord> out;
  for_each_weak_composition(s, t, [&](std::span<const Int> z) {
    if (!congruence_holds(z)) return;
    for (Int j = 0; j < t; ++j) {
      if (z[static_cast<std::size_t>(j)] + z[static_cast<std::size_t>(mod(j + 1, t))] < 1) return;
    }
    out.push_back(record_from_z(ZTuple{t, s, {z.begin(), z.end()}}));
  });
  return out;
}

std::vector<CoreRecord> enum_triple(Int m, Int d, TripleMethod method) {
  return method == TripleMethod::Symmetric ? enum_triple_sym(m, d)
                                           : enum_triple_asym(m, d);
}

BigInt count_st(Int s, Int t) {
  require_coprime(s, t);
  const BigInt num = binomial(s + t, t);
  if (num % (s + t) != 0) throw std::logic_error("rational Catalan not integral");
  return num / (s + t);
}

BigInt count_sc(Int s, Int t) {
  require_coprime(s, t);
  return binomial(s / 2 + t / 2, t / 2);
}

BigInt count_triple(Int m, Int d) {
  require_coprime(m, d);
  BigInt total = 0;
  for (Int i = 0; 2 * i <= m; ++i) total += multinomial({i, i + d, m - 2 * i});
  if (total % (m + d) != 0) throw std::logic_error("triple count not integral");
  return total / (m + d);
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("CORES_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace cores
