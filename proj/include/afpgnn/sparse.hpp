#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace afpgnn {

// Binary, unweighted adjacency in compressed-row form. Construction
// guarantees: per-row column indices sorted and deduplicated, structurally
// symmetric, and a self-loop on every node.
struct SparseAdjacency {
  std::size_t node_count = 0;
  std::vector<std::int64_t> row_offsets;   // node_count + 1
  std::vector<std::uint32_t> col_indices;  // edge endpoints, sorted per row

  // reverse_edge[e] is the storage index of edge (j,i) given that index e
  // stores (i,j); well-defined because the structure is symmetric. Derived at
  // build time so backward passes can iterate incoming edges in a fixed,
  // thread-count-independent order.
  std::vector<std::int64_t> reverse_edge;

  std::size_t edge_count() const { return col_indices.size(); }

  std::span<const std::uint32_t> neighbors(std::size_t i) const {
    return {col_indices.data() + row_offsets[i],
            col_indices.data() + row_offsets[i + 1]};
  }

  std::size_t degree(std::size_t i) const {
    return std::size_t(row_offsets[i + 1] - row_offsets[i]);
  }

  bool has_edge(std::size_t i, std::size_t j) const;

  // Builds the cleaned adjacency from an arbitrary directed pair list:
  // merges duplicates and reversed duplicates, drops nothing, symmetrizes,
  // and inserts (i,i) for every node. Idempotent on its own output.
  static SparseAdjacency from_edges(
      std::size_t node_count,
      const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges);

  // Structure checks used by tests and the loader.
  bool rows_sorted_unique() const;
  bool is_symmetric() const;
  bool has_all_self_loops() const;

  bool structurally_equal(const SparseAdjacency& o) const {
    return node_count == o.node_count && row_offsets == o.row_offsets &&
           col_indices == o.col_indices;
  }

  // Undirected edge count excluding self-loops.
  std::size_t undirected_edge_count() const {
    return (edge_count() - node_count) / 2;
  }
};

}  // namespace afpgnn
