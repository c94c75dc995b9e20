#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "spfc/arthur.hpp"
#include "spfc/unramified_dual.hpp"
#include "spfc/vanishing.hpp"

namespace spfc::io {

using nlohmann::json;

/// Reads a JSON document from `path`, or from standard input when `path` is "-".
json read_document(const std::string& path);

ArthurParameter parameter_from_json(const json& doc);
json to_json(const ArthurParameter& psi);

/// The optional "local" member of a parameter document.
LocalSatakeData local_from_json(const json& doc);
json to_json(const LocalSatakeData& local);

UnitaryDualPoint point_from_json(const json& doc);
json to_json(const UnitaryDualPoint& point);

json to_json(const Partition& p);
json to_json(const JordanBlock& b);
json to_json(const ExponentTriple& t);
json to_json(const StronglyNegativeData& sn);

}  // namespace spfc::io
