#pragma once

#include <string>
#include <vector>

#include "relocation/network.hpp"
#include "relocation/schedule.hpp"

namespace relo {

// JSON serialization. Writers produce a canonical byte-stable form (sorted
// keys, 2-space indent, trailing newline); node ids are written as names.
// read_instance recomputes the metric from the raw network and validates.

std::string write_instance(const Instance& inst);
Instance read_instance(const std::string& text);

std::string write_schedule(const Schedule& s, const Network& net);
Schedule read_schedule(const std::string& text, const Network& net);

std::string write_requests(const std::vector<TransportRequest>& trs,
                           const Network& net);
std::vector<TransportRequest> read_requests(const std::string& text,
                                            const Network& net);

// File helpers; save_file throws SinkWriteError, load_file throws Error.
void save_file(const std::string& path, const std::string& content);
std::string load_file(const std::string& path);

Instance load_instance(const std::string& path);
Schedule load_schedule(const std::string& path, const Network& net);

}  // namespace relo
