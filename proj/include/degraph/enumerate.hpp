#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "degraph/small_graph.hpp"

namespace degraph {

struct RegularCensus {
  int n = 0;
  int k = 0;
  /// False when n*k is odd; `classes` is then empty.
  bool parity_ok = true;
  /// Isomorphism classes, connected and disconnected, sorted by code.
  std::vector<GraphClass> classes;
};

/// Every k-regular graph on n <= 10 vertices up to isomorphism.
///
/// Vertices are filled in index order. Unprocessed vertices with identical
/// adjacency to the processed ones form interchangeable cells, and each
/// vertex takes its new neighbors as a prefix of every cell, so only labelings
/// that differ outside those symmetries are generated; the survivors are
/// deduplicated by canonical form.
RegularCensus enumerate_regular(int n, int k);

struct CensusRow {
  std::size_t index;
  GraphClass graph;
  bool regular;
  int triangles;
  bool has_k4;
  bool has_k5;
  bool vertex_transitive;
};

std::vector<CensusRow> census_rows(const RegularCensus& census);

/// Census classes that contain (`require_clique`) or avoid (`free_of_clique`)
/// a clique of the given size; 0 disables a filter.
std::vector<GraphClass> filter_by_clique(const std::vector<GraphClass>& classes,
                                         int require_clique, int free_of_clique);

struct NamedGraph {
  std::string name;
  std::string description;
  SmallGraph labeled;  // vertex labels as transcribed
  GraphClass graph;
  std::optional<int> regular_degree;
  std::optional<int> triangles;
  std::filesystem::path source;
};

/// Named graphs from `<data>/graphs/*.txt`. Each file declares `order`,
/// `edges = u-v, ...` and optionally `description`, `regular` and
/// `triangles`; the optional claims are checked when the file is loaded.
class GraphCatalog {
 public:
  static GraphCatalog load(const std::filesystem::path& data_dir);
  static const GraphCatalog& bundled();

  /// Parses a single graph file; `name` is its catalog key.
  static NamedGraph parse(std::string_view text, std::string name);

  void add(NamedGraph graph);
  const NamedGraph* find(std::string_view name) const;
  const NamedGraph& at(std::string_view name) const;
  const std::map<std::string, NamedGraph, std::less<>>& graphs() const noexcept {
    return graphs_;
  }

 private:
  std::map<std::string, NamedGraph, std::less<>> graphs_;
};

}  // namespace degraph
