#include <string>

#include <benchmark/benchmark.h>
#include <fmt/format.h>

#include "cartroute/osm_ingest.hpp"

namespace {

using namespace cartroute;

// n x n street grid as OSM XML, one way per row and per column.
std::string grid_osm(int n) {
  std::string xml = "<?xml version='1.0'?>\n<osm version='0.6'>\n";
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      xml += fmt::format("<node id='{}' lat='{}' lon='{}'/>\n", r * n + c + 1, 0.001 * r, 0.001 * c);
    }
  }
  int way = 1;
  auto emit = [&](auto ref) {
    xml += fmt::format("<way id='{}'>", way++);
    for (int k = 0; k < n; ++k) xml += fmt::format("<nd ref='{}'/>", ref(k));
    xml += "<tag k='highway' v='residential'/><tag k='maxspeed' v='30'/></way>\n";
  };
  for (int r = 0; r < n; ++r) emit([&](int k) { return r * n + k + 1; });
  for (int c = 0; c < n; ++c) emit([&](int k) { return k * n + c + 1; });
  return xml + "</osm>\n";
}

void BM_ParseOsm(benchmark::State& state) {
  const std::string xml = grid_osm(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(parse_osm(xml));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * xml.size()));
}
BENCHMARK(BM_ParseOsm)->Arg(20)->Arg(100);

void BM_BuildGraph(benchmark::State& state) {
  const OsmData data = parse_osm(grid_osm(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(expand_bidirectional(build_graph(data), 40.0));
}
BENCHMARK(BM_BuildGraph)->Arg(20)->Arg(100);

}  // namespace
