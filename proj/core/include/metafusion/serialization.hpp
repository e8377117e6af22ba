#pragma once

#include <string>

#include "metafusion/group_table.hpp"

namespace metafusion {

inline constexpr int kTableFormatVersion = 1;

/// Versioned JSON document {"version", "order", "source", "labels", "mul"}.
std::string table_to_json(const GroupTable& t);

/// Parses and re-validates a serialized table (the group axioms are checked
/// on load). Throws std::invalid_argument on malformed documents.
GroupTablePtr table_from_json(const std::string& json_text);

}  // namespace metafusion
