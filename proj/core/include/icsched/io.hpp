#pragma once

#include <string>

#include "icsched/bin_packing.hpp"
#include "icsched/types.hpp"

namespace ics {

// Instance interchange format (single JSON object, exact field names,
// unknown fields rejected, job order preserved):
//   {"machines": <int>,
//    "jobs": [{"id": <int>, "release": <int>, "deadline": <int>,
//              "processing": <int>}, ...]}
//
// Bin-packing format:
//   {"volume": <int>, "items": [<int>, ...], "bins": <int>}

Instance parse_instance(const std::string& json_text);          // throws ParseError
std::string instance_to_json(const Instance& instance, int indent = 2);

BinPackingInstance parse_bin_packing(const std::string& json_text);  // throws ParseError
std::string bin_packing_to_json(const BinPackingInstance& bp, int indent = 2);

// Witness serialization: [{"job":..,"machine":..,"start":..}, ...] sorted by
// (machine, start) so equal schedules serialize identically.
std::string schedule_to_json(const Schedule& schedule, int indent = 2);

Instance read_instance_file(const std::string& path);           // throws ParseError
void write_file(const std::string& path, const std::string& content);

}  // namespace ics
