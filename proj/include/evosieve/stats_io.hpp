#pragma once

// Per-generation statistics as CSV, one row per generation plus a final
// comment line summarizing the run.

#include <ostream>
#include <string>

#include "evosieve/sieve.hpp"

namespace evosieve {

void write_stats_csv(const SieveResult& result, std::ostream& out);
void write_stats_csv(const SieveResult& result, const std::string& path);

}  // namespace evosieve
