#include "evosieve/stats_io.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "evosieve/errors.hpp"

namespace evosieve {

void write_stats_csv(const SieveResult& result, std::ostream& out) {
  out << "generation,pop_size,avg_norm,min_norm,replacements,"
         "cumulative_replacements,wall_ms\n";
  char line[256];
  for (const GenerationStats& g : result.trail) {
    std::snprintf(line, sizeof(line),
                  "%d,%d,%.6f,%.6f,%" PRId64 ",%" PRId64 ",%" PRId64 "\n",
                  g.generation, g.pop_size, g.avg_norm, g.min_norm,
                  g.replacements, g.cumulative_replacements, g.wall_ms);
    out << line;
  }
  std::snprintf(line, sizeof(line),
                "# best_norm=%.6f variant=%s seed=%" PRIu64
                " terminated_by=%s\n",
                std::sqrt(to_double(result.best.norm_sq)),
                variant_name(result.config.variant), result.config.seed,
                termination_name(result.terminated_by));
  out << line;
}

void write_stats_csv(const SieveResult& result, const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  write_stats_csv(result, file);
  file.flush();
  if (!file) throw IoError("write to '" + path + "' failed");
}

}  // namespace evosieve
