#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cores/betaset.hpp"
#include "cores/coords.hpp"
#include "cores/enumerate.hpp"
#include "cores/io.hpp"
#include "cores/oracle.hpp"
#include "cores/stats.hpp"

namespace {

using namespace cores;
using io::json;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Int positive(const std::string& text, const char* what) {
  const auto v = io::parse_int_list(text);
  if (v.size() != 1 || v[0] < 1) throw UsageError(std::string(what) + " must be a positive integer");
  return v[0];
}

// ---- count ---------------------------------------------------------------

struct CountArgs {
  std::vector<std::string> pos;
  bool self_conjugate = false;
};

int run_count(const CountArgs& a) {
  if (a.pos.size() == 3 && a.pos[0] == "triple") {
    const Int m = positive(a.pos[1], "m");
    const Int d = positive(a.pos[2], "d");
    std::cout << count_triple(m, d) << '\n';
    return kOk;
  }
  if (a.pos.size() != 2) throw UsageError("usage: count <s> <t> | count triple <m> <d>");
  const Int s = positive(a.pos[0], "s");
  const Int t = positive(a.pos[1], "t");
  std::cout << (a.self_conjugate ? count_sc(s, t) : count_st(s, t)) << '\n';
  return kOk;
}

// ---- enum ----------------------------------------------------------------

struct EnumArgs {
  std::vector<Int> pos;
  bool self_conjugate = false;
  std::vector<Int> triple;
  std::string method = "sym";
  std::string format = "jsonl";
  bool with_stab = false;
};

void emit(const std::vector<CoreRecord>& records, const std::string& format, bool with_stab) {
  if (format == "csv") std::cout << io::csv_header(with_stab) << '\n';
  json all = json::array();
  for (const auto& r : records) {
    if (format == "jsonl") {
      std::cout << io::to_json(r).dump() << '\n';
    } else if (format == "json") {
      all.push_back(io::to_json(r));
    } else if (format == "csv") {
      std::cout << io::csv_row(r) << '\n';
    } else {
      std::cout << io::plain_row(r) << '\n';
    }
  }
  if (format == "json") std::cout << all.dump() << '\n';
}

int run_enum(EnumArgs a) {
  std::vector<CoreRecord> records;
  if (!a.triple.empty()) {
    if (a.triple.size() != 2 || a.triple[0] < 1 || a.triple[1] < 1) {
      throw UsageError("--triple takes two positive integers m d");
    }
    records = enum_triple(a.triple[0], a.triple[1],
                          a.method == "asym" ? TripleMethod::Asymmetric : TripleMethod::Symmetric);
  } else {
    if (a.pos.size() != 2 || a.pos[0] < 1 || a.pos[1] < 1) {
      throw UsageError("usage: enum <s> <t> [options]");
    }
    const Int s = a.pos[0];
    const Int t = a.pos[1];
    records = a.self_conjugate ? enum_sc_st_cores(s, t)
                               : enum_st_cores(s, t, Strategy::Filter, default_thread_count());
  }
  if (a.with_stab) {
    for (auto& r : records) {
      r.stab = a.self_conjugate && a.triple.empty() ? stab_size_sc(z_to_u(r.z)) : stab_size(r.z);
    }
  }
  emit(records, a.format, a.with_stab);
  return kOk;
}

// ---- avg -----------------------------------------------------------------

struct AvgArgs {
  std::vector<Int> pos;
  bool weighted = false;
  bool self_conjugate = false;
  std::optional<Int> moment;
};

int run_avg(const AvgArgs& a) {
  if (a.pos.size() != 2 || a.pos[0] < 1 || a.pos[1] < 1) throw UsageError("usage: avg <s> <t>");
  const CoreFamily family{a.weighted, a.self_conjugate};
  if (a.moment) {
    const Int e = *a.moment;
    if (e < 0 || e > 8) throw UsageError("--moment must lie in 0..8");
    const ExactRational mass = moment_sum(a.pos[0], a.pos[1], 0, family);
    std::cout << to_string(moment_sum(a.pos[0], a.pos[1], e, family) / mass) << '\n';
    return kOk;
  }
  std::cout << to_string(average_size(a.pos[0], a.pos[1], family)) << '\n';
  return kOk;
}

// ---- convert / tcore -----------------------------------------------------

struct ConvertArgs {
  std::string partition, a, z, u;
  std::optional<Int> s, t;
};

json describe(const Partition& p, std::optional<Int> s, std::optional<Int> t) {
  json out{{"partition", io::to_json(p)},
           {"size", p.size()},
           {"beta", io::to_json(beta_from_partition(p))}};
  json views = json::array();
  for (auto m : {t, s}) {
    if (!m) continue;
    json view{{"modulus", *m}, {"charge", io::to_json(charge(p, *m))}, {"core", is_s_core(p, *m)}};
    if (is_s_core(p, *m)) {
      view["a"] = io::to_json(a_coords(p, *m));
      view["s_set"] = s_set(p, *m);
    }
    views.push_back(view);
  }
  out["views"] = views;
  if (s && t && is_s_core(p, *t)) {
    const ZTuple z = a_to_z(a_coords(p, *t), *s);
    out["z"] = io::to_json(z);
    if (is_symmetric_z(z)) out["u"] = io::to_json(z_to_u(z));
  }
  return out;
}

int run_convert(const ConvertArgs& a) {
  const int given = !a.partition.empty() + !a.a.empty() + !a.z.empty() + !a.u.empty();
  if (given != 1) throw UsageError("give exactly one of --partition, --a, --z, --u");
  std::optional<Int> s = a.s, t = a.t;
  Partition p;
  if (!a.partition.empty()) {
    p = Partition::from_parts(io::parse_int_list(a.partition));
  } else if (!a.a.empty()) {
    const auto values = io::parse_int_list(a.a);
    t = static_cast<Int>(values.size());
    p = core_from_a(ATuple::make(*t, values));
  } else {
    if (!s) throw UsageError("--z and --u need --s");
    ZTuple z;
    if (!a.z.empty()) {
      const auto values = io::parse_int_list(a.z);
      z = ZTuple{static_cast<Int>(values.size()), *s, values};
    } else {
      if (!t) throw UsageError("--u needs --t");
      z = u_to_z(UTuple{*t, *s, io::parse_int_list(a.u)});
    }
    t = z.t;
    p = core_from_a(z_to_a(z));
  }
  std::cout << describe(p, s, t).dump() << '\n';
  return kOk;
}

int run_tcore(Int t, const std::string& partition) {
  if (t < 1) throw UsageError("t must be positive");
  const Partition p = Partition::from_parts(io::parse_int_list(partition));
  std::cout << io::to_json(t_core(p, t)).dump() << '\n';
  return kOk;
}

// ---- verify --------------------------------------------------------------

struct VerifyArgs {
  Int s_max = 5, t_max = 6, n_max = 20;
  std::string format = "plain";
  bool inject_fault = false;
};

int run_verify(const VerifyArgs& a) {
  VerifyOptions options;
  options.s_max = a.s_max;
  options.t_max = a.t_max;
  options.n_max = a.n_max;
  if (a.inject_fault) {
    // Drops the z_0 factor.
    options.stab_formula = [](const ZTuple& z) {
      ZTuple cut = z;
      cut.z.front() = 0;
      return stab_size(cut);
    };
  }
  const auto reports = run_verify_suite(options);
  bool all = true;
  json list = json::array();
  for (const auto& r : reports) {
    all = all && r.pass;
    if (a.format == "json") {
      list.push_back(io::to_json(r));
    } else if (a.format == "jsonl") {
      std::cout << io::to_json(r).dump() << '\n';
    } else {
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.check << " [" << r.params << "]";
      if (r.witness) std::cout << " witness: " << *r.witness;
      std::cout << '\n';
    }
  }
  if (a.format == "json") std::cout << list.dump() << '\n';
  return all ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration and statistics of simultaneous core partitions"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"json", "jsonl", "csv", "plain"};

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Count (s,t)-cores, self-conjugate ones, or triples");
  count->add_option("args", count_args.pos, "<s> <t> or triple <m> <d>")->required();
  count->add_flag("--self-conjugate", count_args.self_conjugate);

  EnumArgs enum_args;
  auto* en = app.add_subcommand("enum", "List cores sorted by z");
  en->add_option("st", enum_args.pos, "<s> <t>");
  en->add_flag("--self-conjugate", enum_args.self_conjugate);
  en->add_option("--triple", enum_args.triple, "m d")->expected(2);
  en->add_option("--method", enum_args.method)->check(CLI::IsMember({"sym", "asym"}));
  en->add_option("--format", enum_args.format)->check(CLI::IsMember(formats));
  en->add_flag("--with-stab", enum_args.with_stab);

  AvgArgs avg_args;
  auto* avg = app.add_subcommand("avg", "Exact average size (or moment) over (s,t)-cores");
  avg->add_option("st", avg_args.pos, "<s> <t>")->required()->expected(2);
  avg->add_flag("--weighted", avg_args.weighted);
  avg->add_flag("--self-conjugate", avg_args.self_conjugate);
  avg->add_option("--moment", avg_args.moment, "mean of |lambda|^e, e <= 8");

  ConvertArgs convert_args;
  auto* convert = app.add_subcommand("convert", "Show one object in every coordinate system");
  convert->add_option("--partition", convert_args.partition, "comma-separated parts");
  convert->add_option("--a", convert_args.a, "a-coordinates of a t-core");
  convert->add_option("--z", convert_args.z, "z-coordinates (needs --s)");
  convert->add_option("--u", convert_args.u, "u-coordinates (needs --s, --t)");
  convert->add_option("--s", convert_args.s);
  convert->add_option("--t", convert_args.t);

  Int tcore_t = 0;
  std::string tcore_partition;
  auto* tcore = app.add_subcommand("tcore", "t-core of a partition");
  tcore->add_option("t", tcore_t)->required();
  tcore->add_option("--partition", tcore_partition, "comma-separated parts")->required();

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run the structural verification suite");
  verify->add_option("--smax", verify_args.s_max);
  verify->add_option("--tmax", verify_args.t_max);
  verify->add_option("--nmax", verify_args.n_max);
  verify->add_option("--format", verify_args.format)->check(CLI::IsMember(formats));
  verify->add_flag("--inject-fault", verify_args.inject_fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*count) return run_count(count_args);
    if (*en) return run_enum(enum_args);
    if (*avg) return run_avg(avg_args);
    if (*convert) return run_convert(convert_args);
    if (*tcore) return run_tcore(tcore_t, tcore_partition);
    if (*verify) return run_verify(verify_args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CoreError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
