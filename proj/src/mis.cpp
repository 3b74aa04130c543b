#include "dupcodes/mis.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace dupcodes {

namespace {

class Bitset {
 public:
  explicit Bitset(std::size_t size = 0) : words_((size + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

 private:
  std::vector<std::uint64_t> words_;
};

// Max clique on the complement of a component.
class CliqueSearch {
 public:
  CliqueSearch(const std::vector<Bitset>& complement, std::vector<std::size_t> incumbent)
      : adj_(complement), best_(std::move(incumbent)) {}

  std::vector<std::size_t> run(std::vector<std::size_t> order) {
    expand(order);
    return best_;
  }

 private:
  void colour_sort(const std::vector<std::size_t>& candidates, std::vector<std::size_t>& order,
                   std::vector<std::size_t>& bounds) const {
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t v : candidates) {
      std::size_t k = 0;
      for (; k < classes.size(); ++k) {
        const bool clash = std::any_of(classes[k].begin(), classes[k].end(),
                                       [&](std::size_t w) { return adj_[v].test(w); });
        if (!clash) break;
      }
      if (k == classes.size()) classes.emplace_back();
      classes[k].push_back(v);
    }
    order.clear();
    bounds.clear();
    for (std::size_t k = 0; k < classes.size(); ++k) {
      for (std::size_t v : classes[k]) {
        order.push_back(v);
        bounds.push_back(k + 1);
      }
    }
  }

  void expand(const std::vector<std::size_t>& candidates) {
    std::vector<std::size_t> order;
    std::vector<std::size_t> bounds;
    colour_sort(candidates, order, bounds);
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (current_.size() + bounds[idx] <= best_.size()) return;
      const std::size_t v = order[idx];
      current_.push_back(v);
      std::vector<std::size_t> next;
      for (std::size_t k = 0; k < idx; ++k) {
        if (adj_[v].test(order[k])) next.push_back(order[k]);
      }
      if (next.empty()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(next);
      }
      current_.pop_back();
    }
  }

  const std::vector<Bitset>& adj_;
  std::vector<std::size_t> best_;
  std::vector<std::size_t> current_;
};

std::vector<std::size_t> solve_component(const AdjacencyList& graph,
                                         const std::vector<std::size_t>& vertices) {
  const std::size_t m = vertices.size();
  if (m == 1) return vertices;
  std::vector<std::size_t> local(graph.size(), 0);
  for (std::size_t k = 0; k < m; ++k) local[vertices[k]] = k;

  std::vector<Bitset> complement(m, Bitset(m));
  std::vector<std::size_t> degree(m, 0);
  for (std::size_t a = 0; a < m; ++a) {
    Bitset neighbours(m);
    for (std::size_t w : graph[vertices[a]]) neighbours.set(local[w]);
    for (std::size_t b = 0; b < m; ++b) {
      if (b != a && !neighbours.test(b)) complement[a].set(b);
    }
    degree[a] = graph[vertices[a]].size();
  }

  std::vector<std::size_t> by_degree(m);
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](std::size_t a, std::size_t b) { return degree[a] < degree[b]; });

  std::vector<std::size_t> greedy;
  for (std::size_t v : by_degree) {
    const bool free = std::all_of(greedy.begin(), greedy.end(),
                                  [&](std::size_t w) { return complement[v].test(w); });
    if (free) greedy.push_back(v);
  }

  // Branching takes the last vertex first; put low-degree vertices last.
  std::vector<std::size_t> order(by_degree.rbegin(), by_degree.rend());
  auto best = CliqueSearch(complement, greedy).run(order);
  std::vector<std::size_t> out;
  out.reserve(best.size());
  for (std::size_t k : best) out.push_back(vertices[k]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::size_t> maximum_independent_set(const AdjacencyList& graph) {
  const std::size_t n = graph.size();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> result;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> component{start};
    seen[start] = true;
    for (std::size_t head = 0; head < component.size(); ++head) {
      for (std::size_t w : graph[component[head]]) {
        if (!seen[w]) {
          seen[w] = true;
          component.push_back(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    const auto part = solve_component(graph, component);
    result.insert(result.end(), part.begin(), part.end());
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace dupcodes
