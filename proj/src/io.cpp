#include "dcpm/io.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace dcpm::io {

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

std::ofstream open_out(const std::filesystem::path& p) {
  std::ofstream f(p);
  if (!f) throw std::runtime_error("cannot write " + p.string());
  return f;
}

}  // namespace

void write_pd_csv(std::ostream& out, const PersistenceDiagram& pd) {
  out << "death,birth,rep_id\n";
  for (const PdPoint& p : pd.points)
    out << p.death << ',' << p.birth << ',' << p.rep_id << '\n';
}

void write_pd_json(std::ostream& out, const PersistenceDiagram& pd) {
  nlohmann::json arr = nlohmann::json::array();
  for (const PdPoint& p : pd.points)
    arr.push_back({{"death", p.death}, {"birth", p.birth}, {"rep_id", p.rep_id}});
  out << arr.dump(2) << '\n';
}

PersistenceDiagram read_pd_csv(std::istream& in) {
  PersistenceDiagram pd;
  std::string line;
  if (!std::getline(in, line) || line != "death,birth,rep_id")
    throw std::runtime_error("bad persistence-diagram header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    PdPoint p;
    char c1 = 0, c2 = 0;
    std::istringstream ls(line);
    if (!(ls >> p.death >> c1 >> p.birth >> c2 >> p.rep_id) || c1 != ',' || c2 != ',')
      throw std::runtime_error("bad persistence-diagram row: " + line);
    pd.points.push_back(p);
  }
  return pd;
}

void write_cover(std::ostream& out, const Cover& cover, int period) {
  out << "# order=" << cover.order << " t=" << period << '\n';
  for (const auto& community : cover.communities) {
    for (std::size_t i = 0; i < community.size(); ++i) {
      if (i) out << ' ';
      out << community[i];
    }
    out << '\n';
  }
}

Cover read_cover(std::istream& in) {
  Cover cover;
  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error("empty cover file");
  int period = 0;
  if (std::sscanf(line.c_str(), "# order=%d t=%d", &cover.order, &period) != 2)
    throw std::runtime_error("bad cover header: " + line);
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::vector<VertexId> community;
    VertexId v;
    while (ls >> v) community.push_back(v);
    if (!community.empty()) cover.communities.push_back(std::move(community));
  }
  return cover;
}

std::vector<Timestamp> read_boundaries(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open boundaries file: " + path);
  std::vector<Timestamp> out;
  Timestamp t;
  while (f >> t) out.push_back(t);
  if (out.empty()) throw std::runtime_error("boundaries file is empty: " + path);
  return out;
}

namespace {

std::vector<Timestamp> equal_width_boundaries(const std::vector<TemporalEdgeRecord>& records,
                                              int periods) {
  if (periods < 1) throw std::invalid_argument("period count must be >= 1");
  if (records.empty()) throw std::runtime_error("no records to derive periods from");
  Timestamp lo = records.front().time;
  Timestamp hi = records.front().time;
  for (const auto& r : records) {
    lo = std::min(lo, r.time);
    hi = std::max(hi, r.time);
  }
  std::vector<Timestamp> bounds;
  bounds.reserve(static_cast<std::size_t>(periods));
  for (int i = 1; i <= periods; ++i) {
    Timestamp b = lo + (hi - lo) * i / periods;
    if (i == periods) b = hi;
    if (!bounds.empty() && b <= bounds.back())
      throw std::runtime_error("timestamp range too small for " + std::to_string(periods) +
                               " periods");
    bounds.push_back(b);
  }
  return bounds;
}

}  // namespace

RunReport run_pipeline(const RunConfig& config) {
  if (config.format != "csv" && config.format != "json")
    throw std::invalid_argument("format must be csv or json");
  if ((config.periods > 0) == !config.boundaries_file.empty())
    throw std::invalid_argument("exactly one of --periods and --boundaries is required");

  const auto records = load_temporal_edges(config.input);
  const std::vector<Timestamp> boundaries = config.boundaries_file.empty()
                                                ? equal_width_boundaries(records, config.periods)
                                                : read_boundaries(config.boundaries_file);
  const SnapshotSeries series = build_snapshots(records, boundaries);

  const std::filesystem::path out_dir(config.out_dir);
  std::filesystem::create_directories(out_dir);

  std::ofstream summary = open_out(out_dir / "summary.tsv");
  summary << "# period\tvertices\tedges\ttau\tupdated\tomega\tcommunities\tmillis\n";

  RunReport report;
  DynamicCpm runner(series, config.window);
  while (!runner.done()) {
    const auto started = std::chrono::steady_clock::now();
    PeriodResult res = runner.run_period();
    const double millis = ms_since(started);
    const int t = res.period;
    const Graph& g = series.graphs[static_cast<std::size_t>(t)];

    {
      std::ofstream pd_out =
          open_out(out_dir / ("pd_" + std::to_string(t) + "." + config.format));
      config.format == "csv" ? write_pd_csv(pd_out, res.pd) : write_pd_json(pd_out, res.pd);
    }

    std::string community_counts;
    for (int k = 2; k <= res.omega; ++k) {
      const bool wanted = config.orders.empty() || config.orders.count(k);
      Cover cover = runner.cover(k);
      if (!community_counts.empty()) community_counts += ',';
      community_counts += std::to_string(cover.communities.size());
      if (wanted) {
        std::ofstream cover_out = open_out(
            out_dir / ("cover_" + std::to_string(t) + "_k" + std::to_string(k) + ".txt"));
        write_cover(cover_out, cover, t);
      }
    }
    if (community_counts.empty()) community_counts = "-";

    summary << t << '\t' << g.vertex_count() << '\t' << g.edge_count() << '\t' << res.tau
            << '\t' << (res.updated ? 1 : 0) << '\t' << res.omega << '\t' << community_counts
            << '\t' << millis << '\n';

    if (config.bench) {
      const auto scratch_started = std::chrono::steady_clock::now();
      BuildResult scratch = build_ct(g);
      report.timings.push_back({t, millis, ms_since(scratch_started)});
      (void)scratch;
    }
    report.periods.push_back(std::move(res));
  }

  if (config.bench) {
    std::ofstream timing = open_out(out_dir / "timing.tsv");
    timing << "# period\tdynamic_ms\tdynamic_cum_ms\tscratch_ms\tscratch_cum_ms\n";
    double dyn_cum = 0;
    double scr_cum = 0;
    for (const PeriodTiming& row : report.timings) {
      dyn_cum += row.dynamic_ms;
      scr_cum += row.scratch_ms;
      timing << row.period << '\t' << row.dynamic_ms << '\t' << dyn_cum << '\t'
             << row.scratch_ms << '\t' << scr_cum << '\n';
    }
  }
  return report;
}

}  // namespace dcpm::io
