#include "afpgnn/sparse.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace afpgnn {

bool SparseAdjacency::has_edge(std::size_t i, std::size_t j) const {
  auto nb = neighbors(i);
  return std::binary_search(nb.begin(), nb.end(), std::uint32_t(j));
}

SparseAdjacency SparseAdjacency::from_edges(
    std::size_t node_count,
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> all;
  all.reserve(edges.size() * 2 + node_count);
  for (auto [u, v] : edges) {
    if (u >= node_count || v >= node_count)
      throw std::out_of_range("edge endpoint out of range");
    all.emplace_back(u, v);
    all.emplace_back(v, u);
  }
  for (std::uint32_t i = 0; i < node_count; ++i) all.emplace_back(i, i);

  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());

  SparseAdjacency adj;
  adj.node_count = node_count;
  adj.row_offsets.assign(node_count + 1, 0);
  adj.col_indices.resize(all.size());
  for (auto [u, v] : all) adj.row_offsets[u + 1]++;
  for (std::size_t i = 0; i < node_count; ++i)
    adj.row_offsets[i + 1] += adj.row_offsets[i];
  {
    std::vector<std::int64_t> cur(adj.row_offsets.begin(),
                                  adj.row_offsets.end() - 1);
    for (auto [u, v] : all) adj.col_indices[cur[u]++] = v;
  }

  // Reverse-edge map via per-row binary search.
  adj.reverse_edge.resize(all.size());
  for (std::size_t i = 0; i < node_count; ++i) {
    for (std::int64_t e = adj.row_offsets[i]; e < adj.row_offsets[i + 1];
         ++e) {
      std::uint32_t j = adj.col_indices[e];
      auto begin = adj.col_indices.begin() + adj.row_offsets[j];
      auto end = adj.col_indices.begin() + adj.row_offsets[j + 1];
      auto it = std::lower_bound(begin, end, std::uint32_t(i));
      assert(it != end && *it == std::uint32_t(i));
      adj.reverse_edge[e] = adj.row_offsets[j] + (it - begin);
    }
  }
  return adj;
}

bool SparseAdjacency::rows_sorted_unique() const {
  for (std::size_t i = 0; i < node_count; ++i) {
    for (std::int64_t e = row_offsets[i] + 1; e < row_offsets[i + 1]; ++e)
      if (col_indices[e - 1] >= col_indices[e]) return false;
  }
  return true;
}

bool SparseAdjacency::is_symmetric() const {
  for (std::size_t i = 0; i < node_count; ++i)
    for (std::uint32_t j : neighbors(i))
      if (!has_edge(j, i)) return false;
  return true;
}

bool SparseAdjacency::has_all_self_loops() const {
  for (std::size_t i = 0; i < node_count; ++i)
    if (!has_edge(i, i)) return false;
  return true;
}

}  // namespace afpgnn
