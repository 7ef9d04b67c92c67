#include "fixtures.hpp"

#include <algorithm>
#include <vector>

namespace bidding::testing {

FrugalParityGame fix_a() {
  return make_game(5, {{"v0", 2}, {"v1", 2}, {"v2", 2}}, {{"t", AdvValue(2)}},
                   {{"v0", "v0"}, {"v0", "v1"}, {"v1", "v0"}, {"v1", "v2"},
                    {"v2", "v0"}, {"v2", "t"}});
}

FrugalParityGame fix_b() {
  return make_game(5, {{"v0", 1}, {"v1", 1}, {"v2", 1}, {"t", 2}}, {},
                   {{"v0", "v0"}, {"v0", "v1"}, {"v1", "v0"}, {"v1", "v2"},
                    {"v2", "v0"}, {"v2", "t"}, {"t", "v1"}});
}

FrugalParityGame random_game(std::mt19937_64& rng, const RandomGameOptions& o) {
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const std::uint64_t k = static_cast<std::uint64_t>(uniform(0, static_cast<int>(o.max_k)));
  const int n = uniform(1, o.max_vertices);
  const int sinks = std::min(uniform(0, o.max_sinks), n - 1);
  const int inner = n - sinks;

  std::vector<int> palette;
  for (int p = 0; p <= o.max_priority; ++p) palette.push_back(p);
  std::shuffle(palette.begin(), palette.end(), rng);
  palette.resize(std::min<std::size_t>(palette.size(), o.distinct_priorities));

  std::vector<std::pair<std::string, int>> vertices;
  for (int i = 0; i < inner; ++i) {
    vertices.emplace_back("v" + std::to_string(i), palette[uniform(0, palette.size() - 1)]);
  }
  std::vector<std::pair<std::string, ThresholdValue>> sink_list;
  for (int i = 0; i < sinks; ++i) {
    const int level = uniform(0, static_cast<int>(2 * k + 2));
    const ThresholdValue fr = level == static_cast<int>(2 * k + 2)
                                  ? ThresholdValue::top()
                                  : ThresholdValue(AdvValue::from_level(level));
    sink_list.emplace_back("s" + std::to_string(i), fr);
  }
  std::vector<std::string> all;
  for (const auto& v : vertices) all.push_back(v.first);
  for (const auto& s : sink_list) all.push_back(s.first);

  std::bernoulli_distribution edge(o.edge_probability);
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [from, priority] : vertices) {
    bool any = false;
    for (const auto& to : all) {
      if (edge(rng)) {
        edges.emplace_back(from, to);
        any = true;
      }
    }
    if (!any) edges.emplace_back(from, all[uniform(0, all.size() - 1)]);
  }
  return make_game(k, vertices, sink_list, edges);
}

std::string data_path(const std::string& name) {
  return std::string(BIDDING_TEST_DATA_DIR) + "/" + name;
}

}  // namespace bidding::testing
