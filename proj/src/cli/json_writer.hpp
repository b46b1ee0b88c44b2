#pragma once

#include <string>

#include "json.hpp"

namespace agmloop::cli {

using Json = nlohmann::ordered_json;

/// Pretty-prints with two-space indentation; floating point values at 17 significant digits.
std::string write_json(const Json& doc);

}  // namespace agmloop::cli
