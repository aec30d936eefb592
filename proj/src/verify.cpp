#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "cores/betaset.hpp"
#include "cores/coords.hpp"
#include "cores/enumerate.hpp"
#include "cores/oracle.hpp"
#include "cores/stats.hpp"

namespace cores {

namespace {

std::string show(const std::vector<Int>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string show(const Partition& p) { return show(p.parts()); }

std::string pair_params(Int s, Int t) {
  return "s=" + std::to_string(s) + ",t=" + std::to_string(t);
}

// Accumulates one check; keeps the first counterexample only.
class Check {
 public:
  Check(std::string name, std::string params)
      : report_{std::move(name), std::move(params), true, std::nullopt, "", ""} {}

  bool ok() const { return report_.pass; }

  void expect(bool condition, const std::function<std::string()>& witness) {
    if (condition || !report_.pass) return;
    report_.pass = false;
    report_.witness = witness();
  }

  void compare(const std::string& lhs, const std::string& rhs) {
    if (report_.lhs.empty() && report_.rhs.empty()) {
      report_.lhs = lhs;
      report_.rhs = rhs;
    }
    expect(lhs == rhs, [&] { return "lhs " + lhs + " != rhs " + rhs; });
  }

  // Any exception inside a check is a failure with that message as witness.
  template <class F>
  Check& run(F&& body) {
    try {
      body(*this);
    } catch (const std::exception& e) {
      expect(false, [&] { return std::string("exception: ") + e.what(); });
    }
    return *this;
  }

  VerifyReport take() { return std::move(report_); }

 private:
  VerifyReport report_;
};

std::multiset<Int> residues(const std::vector<Int>& values, Int m) {
  std::multiset<Int> out;
  for (Int v : values) out.insert(mod(v, m));
  return out;
}

std::vector<Partition> sets_of(const std::vector<CoreRecord>& records) {
  std::vector<Partition> out;
  for (const auto& r : records) out.push_back(r.partition);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> up_to(const std::vector<Partition>& all, Int n) {
  std::vector<Partition> out;
  for (const auto& p : all) {
    if (p.size() <= n) out.push_back(p);
  }
  return out;
}

// All partitions reachable at the end of some rim t-hook removal sequence.
void terminal_cores(const Partition& p, Int t, std::set<Partition>& visited,
                    std::set<Partition>& terminals) {
  if (!visited.insert(p).second) return;
  bool any = false;
  const Partition q = conjugate(p);
  for (Int r = 1; r <= p.length(); ++r) {
    for (Int c = 1; c <= p.part(r); ++c) {
      if (1 + (p.part(r) - c) + (q.part(c) - r) == t) {
        any = true;
        terminal_cores(remove_rim_hook(p, r, c), t, visited, terminals);
      }
    }
  }
  if (!any) terminals.insert(p);
}

bool no_hook_divisible(const Partition& p, std::initializer_list<Int> moduli) {
  for (Int h : hook_lengths(p)) {
    for (Int m : moduli) {
      if (h % m == 0) return false;
    }
  }
  return true;
}

std::vector<std::pair<Int, Int>> coprime_pairs(Int s_max, Int t_max, Int sum_max) {
  std::vector<std::pair<Int, Int>> out;
  for (Int s = 1; s <= s_max; ++s) {
    for (Int t = 1; t <= t_max; ++t) {
      if (coprime(s, t) && s + t <= sum_max) out.emplace_back(s, t);
    }
  }
  return out;
}

ATuple random_t_core_a(Int t, Int bound, std::mt19937_64& rng) {
  return a_from_c(random_c(t, bound, rng));
}

class Suite {
 public:
  explicit Suite(const VerifyOptions& o)
      : opt_(o),
        max_mod_(std::max(o.s_max, o.t_max)),
        rng_(o.seed),
        partitions_(enum_partitions_up_to(std::min<Int>(o.n_max, 20))) {
    if (!opt_.stab_formula) opt_.stab_formula = [](const ZTuple& z) { return stab_size(z); };
  }

  std::vector<VerifyReport> run() {
    partition_checks();
    betaset_checks();
    coords_checks();
    enumerate_checks();
    stats_checks();
    oracle_checks();
    std::stable_sort(reports_.begin(), reports_.end(), [](const auto& x, const auto& y) {
      return std::tie(x.check, x.params) < std::tie(y.check, y.params);
    });
    return std::move(reports_);
  }

 private:
  template <class F>
  void add(const std::string& name, const std::string& params, F&& body) {
    Check c(name, params);
    c.run(std::forward<F>(body));
    reports_.push_back(c.take());
  }

  std::string n_params(Int n) const { return "n<=" + std::to_string(n); }

  void partition_checks() {
    const Int n20 = std::min<Int>(opt_.n_max, 20);
    const Int n12 = std::min<Int>(opt_.n_max, 12);
    add("partition.conjugate_involution", n_params(n20), [&](Check& c) {
      for (const auto& p : up_to(partitions_, n20)) {
        c.expect(conjugate(conjugate(p)) == p, [&] { return show(p); });
      }
    });
    add("partition.hook_multiset_conjugation", n_params(n12), [&](Check& c) {
      for (const auto& p : up_to(partitions_, n12)) {
        auto h1 = hook_lengths(p);
        auto h2 = hook_lengths(conjugate(p));
        std::sort(h1.begin(), h1.end());
        std::sort(h2.begin(), h2.end());
        c.expect(h1 == h2, [&] { return show(p); });
      }
    });
    for (Int t = 1; t <= max_mod_; ++t) {
      add("partition.tcore_has_no_divisible_hook", "t=" + std::to_string(t) + "," + n_params(n12),
          [&](Check& c) {
            for (const auto& p : up_to(partitions_, n12)) {
              const Partition core = t_core_by_diagram(p, t);
              c.expect(no_hook_divisible(core, {t}), [&] { return show(p); });
            }
          });
    }
    for (Int t = 1; t <= std::min<Int>(max_mod_, 5); ++t) {
      add("partition.removal_order_independence",
          "t=" + std::to_string(t) + "," + n_params(n12), [&](Check& c) {
            for (const auto& p : up_to(partitions_, n12)) {
              std::set<Partition> visited, terminals;
              terminal_cores(p, t, visited, terminals);
              c.expect(terminals.size() == 1, [&] { return show(p); });
            }
          });
    }
  }

  void betaset_checks() {
    const Int n20 = std::min<Int>(opt_.n_max, 20);
    const Int n15 = std::min<Int>(opt_.n_max, 15);
    const Int n12 = std::min<Int>(opt_.n_max, 12);
    add("betaset.round_trip", n_params(n20), [&](Check& c) {
      for (const auto& p : up_to(partitions_, n20)) {
        c.expect(partition_from_beta(beta_from_partition(p)) == p, [&] { return show(p); });
      }
    });
    add("betaset.hook_bijection", n_params(n12), [&](Check& c) {
      for (const auto& p : up_to(partitions_, n12)) {
        const auto hooks = hook_lengths(p);
        const BetaSet b = beta_from_partition(p);
        for (Int s = 1; s <= std::min<Int>(6, std::max<Int>(max_mod_, 1)); ++s) {
          const Int direct = std::count(hooks.begin(), hooks.end(), s);
          c.expect(direct == count_removable_hooks(b, s),
                   [&] { return show(p) + " s=" + std::to_string(s); });
        }
      }
    });
    add("betaset.charge_conservation", n_params(n15), [&](Check& c) {
      for (const auto& p : up_to(partitions_, n15)) {
        const BetaSet b = beta_from_partition(p);
        for (Int s = 1; s <= max_mod_; ++s) {
          const BetaSet pushed = s_push(b, s);
          c.expect(charge(pushed, s) == charge(b, s) && is_s_core(pushed, s),
                   [&] { return show(p) + " s=" + std::to_string(s); });
        }
      }
    });
    add("betaset.conjugate_charge", n_params(n15), [&](Check& c) {
      for (const auto& p : up_to(partitions_, n15)) {
        const BetaSet b = beta_from_partition(p);
        const BetaSet bc = conjugate_beta(b);
        c.expect(bc == beta_from_partition(conjugate(p)), [&] { return show(p); });
        for (Int s = 1; s <= max_mod_; ++s) {
          const CTuple lhs = charge(bc, s);
          const CTuple rhs = charge(b, s);
          for (Int i = 0; i < s; ++i) {
            c.expect(lhs.c[static_cast<std::size_t>(i)] ==
                         -rhs.c[static_cast<std::size_t>(mod(-1 - i, s))],
                     [&] { return show(p) + " s=" + std::to_string(s); });
          }
        }
      }
    });
    add("betaset.core_commutes_with_conjugation", n_params(n15), [&](Check& c) {
      for (const auto& p : up_to(partitions_, n15)) {
        for (Int s = 1; s <= std::min<Int>(max_mod_, 5); ++s) {
          c.expect(t_core(conjugate(p), s) == conjugate(t_core(p, s)),
                   [&] { return show(p) + " s=" + std::to_string(s); });
        }
      }
    });
    add("betaset.c_a_consistency", n_params(n20), [&](Check& c) {
      for (const auto& p : up_to(partitions_, n20)) {
        for (Int s = 1; s <= max_mod_; ++s) {
          if (!is_s_core(p, s)) continue;
          const ATuple a = a_coords(p, s);
          const CTuple ch = charge(p, s);
          for (Int i = 0; i < s; ++i) {
            c.expect(a[i] == i - s * ch.c[static_cast<std::size_t>(mod(-1 - i, s))],
                     [&] { return show(p) + " s=" + std::to_string(s); });
          }
          c.expect(core_from_a(a) == p, [&] { return show(p) + " rebuild"; });
        }
      }
    });
    add("betaset.conjugate_s_set", n_params(n20), [&](Check& c) {
      for (const auto& p : up_to(partitions_, n20)) {
        for (Int s = 1; s <= max_mod_; ++s) {
          if (!is_s_core(p, s)) continue;
          const ATuple a = a_coords(p, s);
          const ATuple ac = a_coords(conjugate(p), s);
          for (Int i = 0; i < s; ++i) {
            c.expect(ac[i] == s - 1 - a[-1 - i],
                     [&] { return show(p) + " s=" + std::to_string(s); });
          }
          c.expect(is_self_conjugate(p) == is_self_conjugate_a(a),
                   [&] { return show(p) + " symmetric s-set"; });
        }
      }
    });
    for (Int s = 1; s <= max_mod_; ++s) {
      add("betaset.olsson_closure", "s=" + std::to_string(s), [&](Check& c) {
        for (int trial = 0; trial < 25; ++trial) {
          const Partition lambda = random_s_core(s, 4, rng_);
          const auto sset = s_set(lambda, s);
          for (Int t = 1; t <= max_mod_; ++t) {
            const Partition core = t_core(lambda, t);
            const bool still = is_s_core(core, s);
            c.expect(still, [&] { return show(lambda) + " t=" + std::to_string(t); });
            if (!still) continue;
            c.expect(residues(s_set(core, s), t) == residues(sset, t),
                     [&] { return show(lambda) + " residues t=" + std::to_string(t); });
          }
        }
      });
    }
    for (Int s = 1; s <= max_mod_; ++s) {
      add("betaset.s_set_t_set_interaction", "s=" + std::to_string(s), [&](Check& c) {
        for (int trial = 0; trial < 25; ++trial) {
          const Partition lambda = random_s_core(s, 4, rng_);
          const auto sset = s_set(lambda, s);
          for (Int t = 1; t <= max_mod_; ++t) {
            const ATuple at = a_coords(t_core(lambda, t), t);
            for (Int j = 0; j < t; ++j) {
              const Int count = std::count_if(sset.begin(), sset.end(),
                                              [&](Int x) { return mod(x - s - j, t) == 0; });
              const Int diff = at[j] - at[j + s] + s;
              c.expect(diff >= 0 && diff == t * count, [&] {
                return show(lambda) + " t=" + std::to_string(t) + " j=" + std::to_string(j);
              });
            }
          }
        }
      });
    }
    for (auto [s, t] : coprime_pairs(std::min<Int>(max_mod_, 6), std::min<Int>(max_mod_, 6), 99)) {
      add("betaset.faithful_invariant", pair_params(s, t), [&, s = s, t = t](Check& c) {
        std::vector<Partition> sample;
        for (int i = 0; i < 30; ++i) sample.push_back(random_s_core(s, 2, rng_));
        std::vector<std::multiset<Int>> keys;
        std::vector<Partition> cores;
        for (const auto& p : sample) {
          keys.push_back(residues(s_set(p, s), t));
          cores.push_back(t_core(p, t));
        }
        for (std::size_t i = 0; i < sample.size(); ++i) {
          for (std::size_t j = i + 1; j < sample.size(); ++j) {
            c.expect((keys[i] == keys[j]) == (cores[i] == cores[j]),
                     [&] { return show(sample[i]) + " vs " + show(sample[j]); });
          }
        }
      });
    }
  }

  void coords_checks() {
    const Int bound = std::min<Int>(max_mod_, 9);
    for (auto [s, t] : coprime_pairs(bound, bound, 99)) {
      add("coords.a_z_round_trip", pair_params(s, t), [&, s = s, t = t](Check& c) {
        c.expect((s + 1) * (t - 1) % 2 == 0, [] { return std::string("k not integral"); });
        for (int trial = 0; trial < 500; ++trial) {
          const ATuple a = random_t_core_a(t, 5, rng_);
          const ZTuple z = a_to_z(a, s);
          c.expect(z_to_a(z) == a, [&] { return show(a.values()); });
        }
      });
      add("coords.z_u_round_trip", pair_params(s, t), [&, s = s, t = t](Check& c) {
        std::uniform_int_distribution<Int> dist(-4, 4);
        for (int trial = 0; trial < 500; ++trial) {
          UTuple u{t, s, std::vector<Int>(static_cast<std::size_t>(t / 2 + 1), 0)};
          Int rest = s / 2;
          for (std::size_t i = 1; i < u.u.size(); ++i) {
            u.u[i] = dist(rng_);
            rest -= u.u[i];
          }
          u.u[0] = rest;
          const ZTuple z = u_to_z(u);
          c.expect(z_to_u(z) == u, [&] { return show(u.u); });
          const ATuple a = z_to_a(z);
          c.expect(is_self_conjugate_a(a) && is_self_conjugate(core_from_a(a)),
                   [&] { return show(u.u) + " not self-conjugate"; });
        }
      });
      add("coords.nonnegative_z_iff_st_core", pair_params(s, t), [&, s = s, t = t](Check& c) {
        for (int trial = 0; trial < 500; ++trial) {
          const ATuple a = random_t_core_a(t, 2, rng_);
          const bool by_ineq = is_st_core_a(a, s);
          c.expect(by_ineq == a_to_z(a, s).nonnegative(), [&] { return show(a.values()); });
          c.expect(by_ineq == is_s_core(beta_from_a(a), s),
                   [&] { return show(a.values()) + " beta-set"; });
        }
      });
      add("coords.self_conjugacy_transfer", pair_params(s, t), [&, s = s, t = t](Check& c) {
        for (int trial = 0; trial < 500; ++trial) {
          const ATuple a = random_t_core_a(t, 3, rng_);
          c.expect(is_self_conjugate_a(a) == is_symmetric_z(a_to_z(a, s)),
                   [&] { return show(a.values()); });
        }
        for (const auto& r : enum_sc_st_cores(s, t)) {
          c.expect(is_self_conjugate_a(r.a) && is_symmetric_z(r.z),
                   [&] { return show(r.z.z); });
        }
      });
      add("coords.z_counts_s_set_residues", pair_params(s, t), [&, s = s, t = t](Check& c) {
        const Int k = z_offset(s, t);
        for (int trial = 0; trial < 40; ++trial) {
          const Partition lambda = random_s_core(s, 3, rng_);
          const auto sset = s_set(lambda, s);
          const ZTuple z = a_to_z(a_coords(t_core(lambda, t), t), s);
          for (Int j = 0; j < t; ++j) {
            const Int count = std::count_if(sset.begin(), sset.end(), [&](Int x) {
              return mod(x - s - (s * j + k), t) == 0;
            });
            c.expect(z[j] == count, [&] { return show(lambda) + " j=" + std::to_string(j); });
          }
        }
      });
    }
  }

  void enumerate_checks() {
    for (auto [s, t] : coprime_pairs(opt_.s_max, opt_.t_max, 99)) {
      add("enumerate.count_st", pair_params(s, t), [&, s = s, t = t](Check& c) {
        const auto filtered = enum_st_cores(s, t, Strategy::Filter);
        const auto necklace = enum_st_cores(s, t, Strategy::Necklace);
        c.compare(std::to_string(filtered.size()), count_st(s, t).str());
        c.expect(necklace.size() == filtered.size() &&
                     std::equal(filtered.begin(), filtered.end(), necklace.begin(),
                                [](const auto& x, const auto& y) { return x.z == y.z; }),
                 [] { return std::string("necklace strategy disagrees"); });
        for (const auto& r : filtered) {
          c.expect(no_hook_divisible(r.partition, {s, t}), [&] { return show(r.partition); });
        }
      });
      add("enumerate.count_sc", pair_params(s, t), [&, s = s, t = t](Check& c) {
        const auto all = enum_st_cores(s, t);
        const auto sc = enum_sc_st_cores(s, t);
        c.compare(std::to_string(sc.size()), count_sc(s, t).str());
        std::vector<Partition> filtered;
        for (const auto& r : all) {
          if (is_self_conjugate(r.partition)) filtered.push_back(r.partition);
        }
        std::sort(filtered.begin(), filtered.end());
        c.expect(filtered == sets_of(sc), [] { return std::string("self-conjugate subset differs"); });
      });
      if (s + t <= 14) {
        add("enumerate.cyclic_orbit_unique", pair_params(s, t), [&, s = s, t = t](Check& c) {
          for_each_weak_composition(s, t, [&](std::span<const Int> x) {
            std::set<std::vector<Int>> orbit;
            Int hits = 0;
            for (Int r = 0; r < t; ++r) {
              const auto rot = rotate_left(x, r);
              orbit.insert(rot);
              Int moment = 0;
              for (Int j = 0; j < t; ++j) moment += j * rot[static_cast<std::size_t>(j)];
              if (mod(moment, t) == 0) ++hits;
            }
            c.expect(hits == 1 && static_cast<Int>(orbit.size()) == t,
                     [&] { return show(std::vector<Int>(x.begin(), x.end())); });
          });
        });
      }
    }
    const Int triple_max = std::min<Int>(12, opt_.s_max + opt_.t_max);
    for (Int m = 1; m < triple_max; ++m) {
      for (Int d = 1; m + d <= triple_max; ++d) {
        if (!coprime(m, d)) continue;
        add("enumerate.triple_sym_vs_asym",
            "m=" + std::to_string(m) + ",d=" + std::to_string(d), [&](Check& c) {
              const auto sym = sets_of(enum_triple_sym(m, d));
              const auto asym = sets_of(enum_triple_asym(m, d));
              c.compare(std::to_string(sym.size()), count_triple(m, d).str());
              c.expect(sym == asym, [] { return std::string("partition sets differ"); });
              for (const auto& p : sym) {
                c.expect(no_hook_divisible(p, {m, m + d, m + 2 * d}), [&] { return show(p); });
              }
            });
      }
    }
    add("enumerate.motzkin", "m<=12,d=1", [&](Check& c) {
      const auto motzkin = motzkin_numbers(12);
      for (Int m = 1; m <= 12; ++m) {
        c.expect(count_triple(m, 1) == motzkin[static_cast<std::size_t>(m)],
                 [&] { return "m=" + std::to_string(m); });
      }
    });
  }

  void stats_checks() {
    for (auto [s, t] : coprime_pairs(opt_.s_max, opt_.t_max, 99)) {
      for (bool weighted : {false, true}) {
        for (bool sc : {false, true}) {
          std::string name = weighted ? "stats.weighted" : "stats.unweighted";
          name += sc ? "_self_conjugate_average" : "_average";
          add(name, pair_params(s, t), [&, s = s, t = t](Check& c) {
            const IdentityReport r = check_average_theorem(s, t, {weighted, sc});
            c.compare(to_string(r.lhs), to_string(r.rhs));
          });
        }
      }
      add("stats.unweighted_symmetry", pair_params(s, t), [&, s = s, t = t](Check& c) {
        for (bool sc : {false, true}) {
          c.compare(to_string(average_size(s, t, {false, sc})),
                    to_string(average_size(t, s, {false, sc})));
        }
      });
      add("stats.size_agreement", pair_params(s, t), [&, s = s, t = t](Check& c) {
        for (const auto& r : enum_st_cores(s, t)) {
          c.expect(size_from_a(r.a) == r.size && size_from_c(c_from_a(r.a)) == r.size,
                   [&] { return show(r.partition); });
        }
      });
      if (s + t <= 14) {
        add("stats.cyclic_sum_identities", pair_params(s, t), [&, s = s, t = t](Check& c) {
          for (const auto& id : verify_cyclic_sum_identities(s, t)) {
            c.expect(id.pass(), [&] {
              return id.name + ": " + to_string(id.lhs) + " != " + to_string(id.rhs);
            });
          }
        });
      }
      if (s + t <= 9) {
        add("stats.stab_vs_brute", pair_params(s, t), [&, s = s, t = t](Check& c) {
          for (const auto& r : enum_st_cores(s, t)) {
            const auto sset = s_set(r.partition, s);
            c.compare(brute_stab_count(sset, t, false, s).str(), opt_.stab_formula(r.z).str());
          }
          for (const auto& r : enum_sc_st_cores(s, t)) {
            const auto sset = s_set(r.partition, s);
            c.compare(brute_stab_count(sset, t, true, s).str(),
                      stab_size_sc(z_to_u(r.z)).str());
          }
        });
      }
    }
    if (opt_.s_max >= 2 && opt_.t_max >= 3) {
      add("stats.weighted_asymmetry", pair_params(2, 3), [&](Check& c) {
        const auto forward = average_size(2, 3, {true, false});
        const auto backward = average_size(3, 2, {true, false});
        c.expect(forward != backward, [&] { return "both " + to_string(forward); });
      });
    }
  }

  void oracle_checks() {
    const std::vector<std::pair<Int, Int>> pairs{{2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}};
    for (auto [s, t] : pairs) {
      if (s > opt_.s_max || t > opt_.t_max) continue;
      add("oracle.enumeration_equivalence", pair_params(s, t), [&, s = s, t = t](Check& c) {
        const auto records = enum_st_cores(s, t);
        Int largest = 0;
        for (const auto& r : records) largest = std::max(largest, r.size);
        const auto brute = brute_st_cores({s, t}, largest + s + t);
        c.compare(std::to_string(brute.size()), std::to_string(records.size()));
        auto sorted_brute = brute;
        std::sort(sorted_brute.begin(), sorted_brute.end());
        c.expect(sorted_brute == sets_of(records), [] { return std::string("sets differ"); });
      });
    }
    const Int n14 = std::min<Int>(opt_.n_max, 14);
    add("oracle.diagram_vs_abacus_core", n_params(n14), [&](Check& c) {
      for (const auto& p : up_to(partitions_, n14)) {
        for (Int t = 1; t <= std::min<Int>(max_mod_, 6); ++t) {
          c.expect(t_core_by_diagram(p, t) == t_core(p, t),
                   [&] { return show(p) + " t=" + std::to_string(t); });
        }
      }
    });
  }

  VerifyOptions opt_;
  Int max_mod_;
  std::mt19937_64 rng_;
  std::vector<Partition> partitions_;
  std::vector<VerifyReport> reports_;
};

}  // namespace

std::vector<VerifyReport> run_verify_suite(const VerifyOptions& options) {
  return Suite(options).run();
}

}  // namespace cores
