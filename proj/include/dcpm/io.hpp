#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dcpm/community_tree.hpp"
#include "dcpm/dynamic_cpm.hpp"

namespace dcpm::io {

void write_pd_csv(std::ostream& out, const PersistenceDiagram& pd);
void write_pd_json(std::ostream& out, const PersistenceDiagram& pd);
PersistenceDiagram read_pd_csv(std::istream& in);

// One community per line, space-separated vertex ids, under a
// `# order=<k> t=<period>` header.
void write_cover(std::ostream& out, const Cover& cover, int period);
Cover read_cover(std::istream& in);

std::vector<Timestamp> read_boundaries(const std::string& path);

struct RunConfig {
  std::string input;
  int periods = 0;                 // equal-width period count, or
  std::string boundaries_file;     // explicit boundaries (exactly one of the two)
  int window = 3;
  std::set<int> orders;            // orders to export; empty = all >= 2
  std::string out_dir = ".";
  std::string format = "csv";      // csv | json
  bool bench = false;              // additionally time from-scratch rebuilds
};

struct PeriodTiming {
  int period = 0;
  double dynamic_ms = 0;
  double scratch_ms = 0;
};

struct RunReport {
  std::vector<PeriodResult> periods;
  std::vector<PeriodTiming> timings;  // populated by bench
};

// Full pipeline: parse, snapshot, run, emit pd_<t>.<fmt>, cover_<t>_k<k>.txt
// and summary.tsv (bench adds timing.tsv) under out_dir. Throws on errors.
RunReport run_pipeline(const RunConfig& config);

}  // namespace dcpm::io
