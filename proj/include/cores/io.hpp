#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cores/betaset.hpp"
#include "cores/coords.hpp"
#include "cores/enumerate.hpp"
#include "cores/oracle.hpp"

namespace cores::io {

using nlohmann::json;

json to_json(const Partition& p);
json to_json(const BetaSet& b);
json to_json(const ATuple& a);
json to_json(const CTuple& c);
json to_json(const ZTuple& z);
json to_json(const UTuple& u);
json to_json(const CoreRecord& r);
json to_json(const VerifyReport& r);
inline json to_json(const ExactRational& q) { return to_string(q); }

Partition partition_from_json(const json& j);
BetaSet beta_from_json(const json& j);
ZTuple z_from_json(const json& j);
UTuple u_from_json(const json& j);

/// "3+2+2"; empty string for the empty partition.
std::string partition_cell(const Partition& p);
Partition partition_from_cell(std::string_view cell);

std::string csv_header(bool with_stab);
/// z;a;parts;size[;stab] with ',' inside z and a and '+' inside parts.
std::string csv_row(const CoreRecord& r);
std::string plain_row(const CoreRecord& r);

/// "5,5" or "-1, 2" -> {5,5} / {-1,2}. Empty string gives an empty list.
std::vector<Int> parse_int_list(std::string_view text);

std::string join(const std::vector<Int>& v, std::string_view sep);

}  // namespace cores::io
