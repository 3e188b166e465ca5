#include "dynwalk/fixtures.hpp"

#include <tuple>

#include "dynwalk/error.hpp"

namespace dynwalk::fixtures {

namespace {

std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("v" + std::to_string(i));
  return out;
}

PatternGraph k2() { return PatternGraph::complete(2); }

void doubled(std::vector<EdgeRecord>& edges, const std::string& a, const std::string& b) {
  edges.push_back({"e" + std::to_string(edges.size() + 1), a, b, "1"});
  edges.push_back({"e" + std::to_string(edges.size() + 1), a, b, "2"});
}

}  // namespace

HColoredMultigraph sample() {
  PatternGraph pattern({"B", "R", "G"}, {{"B", "R"}, {"G", "R"}});
  std::vector<EdgeRecord> edges{
      {"e1", "v1", "v2", "B"},  {"e2", "v1", "v2", "G"},  {"e3", "v1", "v4", "B"},
      {"e4", "v1", "v4", "R"},  {"e5", "v2", "v3", "G"},  {"e6", "v2", "v3", "R"},
      {"e7", "v3", "v4", "B"},  {"e8", "v3", "v4", "R"},  {"e9", "v4", "v5", "B"},
      {"e10", "v4", "v5", "B"}, {"e11", "v4", "v7", "G"}, {"e12", "v4", "v7", "R"},
      {"e13", "v5", "v6", "B"}, {"e14", "v5", "v6", "R"}, {"e15", "v6", "v7", "R"},
      {"e16", "v6", "v7", "R"},
  };
  return HColoredMultigraph::build(numbered(7), std::move(edges), std::move(pattern));
}

WalkDescription sample_cycle() {
  WalkDescription w;
  w.closed = true;
  w.steps = {{"v4", {"e9"}}, {"v5", {"e14", "e13"}}, {"v6", {"e16"}}, {"v7", {"e11", "e12"}}};
  return w;
}

WalkDescription sample_trail() {
  WalkDescription w;
  w.steps = {{"v1", {"e4"}}, {"v4", {"e10"}}, {"v5", {"e14", "e13"}}, {"v6", {"e15"}}};
  w.end = "v7";
  return w;
}

HColoredMultigraph doubled_triangle() {
  std::vector<EdgeRecord> edges{
      {"ab1", "a", "b", "1"}, {"ab2", "a", "b", "2"}, {"bc1", "b", "c", "1"},
      {"bc2", "b", "c", "2"}, {"ca1", "c", "a", "1"}, {"ca2", "c", "a", "2"},
  };
  return HColoredMultigraph::build({"a", "b", "c"}, std::move(edges), k2());
}

HColoredMultigraph doubled_cycle(std::size_t len) {
  if (len < 2) throw Error(ErrorKind::BadParameters, "cycle needs at least two vertices");
  const auto names = numbered(len);
  std::vector<EdgeRecord> edges;
  for (std::size_t i = 0; i < len; ++i) doubled(edges, names[i], names[(i + 1) % len]);
  if (len == 2) edges.resize(2);
  return HColoredMultigraph::build(names, std::move(edges), k2());
}

HColoredMultigraph doubled_path(std::size_t n) {
  const auto names = numbered(n);
  std::vector<EdgeRecord> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) doubled(edges, names[i], names[i + 1]);
  return HColoredMultigraph::build(names, std::move(edges), k2());
}

HColoredMultigraph bowtie() {
  const auto names = numbered(5);
  std::vector<EdgeRecord> edges;
  for (const auto& [a, b] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}}) {
    doubled(edges, names[a], names[b]);
  }
  return HColoredMultigraph::build(names, std::move(edges), k2());
}

EdgeColoredMultigraph pc_k4() {
  EdgeColoredMultigraph g;
  g.colors = 3;
  g.vertices = {"a", "b", "c", "d"};
  const std::vector<std::tuple<std::string, std::string, std::size_t, std::size_t>> pairs{
      {"a", "b", 2, 3}, {"c", "d", 2, 3}, {"a", "c", 1, 3},
      {"b", "d", 1, 3}, {"a", "d", 1, 2}, {"b", "c", 1, 2},
  };
  for (const auto& [u, v, c1, c2] : pairs) {
    g.edges.push_back({u + v + std::to_string(c1), u, v, c1});
    g.edges.push_back({u + v + std::to_string(c2), u, v, c2});
  }
  return g;
}

HColoredMultigraph dynamic_without_adjacent_pair() {
  PatternGraph pattern({"a", "b", "c", "d", "e"}, {{"a", "c"}, {"a", "d"}, {"b", "d"}, {"c", "e"}});
  std::vector<EdgeRecord> edges{
      {"e1", "w1", "w2", "c"}, {"e2", "w1", "w2", "a"}, {"e3", "w1", "w2", "d"},
      {"e4", "w1", "w4", "c"}, {"e5", "w1", "w4", "d"}, {"e6", "w3", "w4", "a"},
      {"e7", "w3", "w4", "c"},
  };
  return HColoredMultigraph::build({"w1", "w2", "w3", "w4"}, std::move(edges), std::move(pattern));
}

}  // namespace dynwalk::fixtures
