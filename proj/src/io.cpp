#include "cores/io.hpp"

#include <charconv>
#include <limits>
#include <sstream>

namespace cores::io {

namespace {

json big_to_json(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) {
    return json(static_cast<std::uint64_t>(v));
  }
  return json(v.str());
}

Int parse_int(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  Int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

json to_json(const Partition& p) { return json(p.parts()); }

json to_json(const BetaSet& b) { return json{{"members", b.members()}, {"gaps", b.gaps()}}; }

json to_json(const ATuple& a) { return json(a.values()); }

json to_json(const CTuple& c) { return json(c.c); }

json to_json(const ZTuple& z) { return json{{"t", z.t}, {"s", z.s}, {"z", z.z}}; }

json to_json(const UTuple& u) { return json{{"t", u.t}, {"s", u.s}, {"u", u.u}}; }

json to_json(const CoreRecord& r) {
  json out{{"z", r.z.z}, {"a", r.a.values()}, {"parts", r.partition.parts()}, {"size", r.size}};
  if (r.stab) out["stab"] = big_to_json(*r.stab);
  return out;
}

json to_json(const VerifyReport& r) {
  json out{{"check", r.check},
           {"params", r.params},
           {"pass", r.pass},
           {"witness", r.witness ? json(*r.witness) : json(nullptr)}};
  if (!r.lhs.empty() || !r.rhs.empty()) out["compared"] = json{r.lhs, r.rhs};
  return out;
}

Partition partition_from_json(const json& j) {
  return Partition::from_parts(j.get<std::vector<Int>>());
}

BetaSet beta_from_json(const json& j) {
  return BetaSet::make(j.at("members").get<std::vector<Int>>(),
                       j.at("gaps").get<std::vector<Int>>());
}

ZTuple z_from_json(const json& j) {
  return ZTuple{j.at("t").get<Int>(), j.at("s").get<Int>(), j.at("z").get<std::vector<Int>>()};
}

UTuple u_from_json(const json& j) {
  return UTuple{j.at("t").get<Int>(), j.at("s").get<Int>(), j.at("u").get<std::vector<Int>>()};
}

std::string join(const std::vector<Int>& v, std::string_view sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    os << v[i];
  }
  return os.str();
}

std::string partition_cell(const Partition& p) { return join(p.parts(), "+"); }

Partition partition_from_cell(std::string_view cell) {
  std::vector<Int> parts;
  while (!cell.empty()) {
    const auto plus = cell.find('+');
    parts.push_back(parse_int(cell.substr(0, plus)));
    if (plus == std::string_view::npos) break;
    cell.remove_prefix(plus + 1);
  }
  return Partition::from_parts(parts);
}

std::string csv_header(bool with_stab) {
  return with_stab ? "z;a;parts;size;stab" : "z;a;parts;size";
}

std::string csv_row(const CoreRecord& r) {
  std::string row = join(r.z.z, ",") + ";" + join(r.a.values(), ",") + ";" +
                    partition_cell(r.partition) + ";" + std::to_string(r.size);
  if (r.stab) row += ";" + r.stab->str();
  return row;
}

std::string plain_row(const CoreRecord& r) {
  std::string row = "z=(" + join(r.z.z, ",") + ") a=(" + join(r.a.values(), ",") +
                    ") parts=(" + join(r.partition.parts(), ",") +
                    ") size=" + std::to_string(r.size);
  if (r.stab) row += " stab=" + r.stab->str();
  return row;
}

std::vector<Int> parse_int_list(std::string_view text) {
  std::vector<Int> out;
  if (text.find_first_not_of(' ') == std::string_view::npos) return out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_int(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace cores::io
