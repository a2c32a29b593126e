#include "degraph/enumerate.hpp"

#include <algorithm>
#include <unordered_set>

#include "degraph/error.hpp"
#include "kv_format.hpp"

#ifndef DEGRAPH_DATA_DIR
#define DEGRAPH_DATA_DIR "data"
#endif

namespace degraph {

namespace {

struct Cell {
  int begin;
  int end;
  int size() const { return end - begin; }
};

class RegularGenerator {
 public:
  RegularGenerator(int n, int k) : n_(n), k_(k), graph_(n) { degree_.fill(0); }

  std::vector<GraphClass> run() {
    if (n_ == 0) return {GraphClass{0, 0}};
    process(0, {Cell{0, n_}});
    std::vector<GraphClass> out;
    out.reserve(seen_.size());
    for (auto code : seen_) out.push_back({n_, code});
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void process(int v, std::vector<Cell> cells) {
    if (v == n_) {
      seen_.insert(canonicalize(graph_).code);
      return;
    }
    // v heads the first cell; the rest are the candidates for its neighbors.
    cells.front().begin += 1;
    if (cells.front().size() == 0) cells.erase(cells.begin());

    const int need = k_ - degree_[static_cast<std::size_t>(v)];
    if (need < 0 || need > n_ - 1 - v) return;
    std::vector<int> take(cells.size(), 0);
    distribute(v, cells, take, 0, need);
  }

  void distribute(int v, const std::vector<Cell>& cells, std::vector<int>& take,
                  std::size_t i, int left) {
    if (i == cells.size()) {
      if (left == 0) apply(v, cells, take);
      return;
    }
    int room = 0;
    for (std::size_t j = i; j < cells.size(); ++j) {
      if (degree_[static_cast<std::size_t>(cells[j].begin)] < k_) room += cells[j].size();
    }
    if (room < left) return;

    const bool open = degree_[static_cast<std::size_t>(cells[i].begin)] < k_;
    const int most = open ? std::min(left, cells[i].size()) : 0;
    for (int c = most; c >= 0; --c) {
      take[i] = c;
      distribute(v, cells, take, i + 1, left - c);
    }
    take[i] = 0;
  }

  void apply(int v, const std::vector<Cell>& cells, const std::vector<int>& take) {
    std::vector<Cell> next;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const Cell& c = cells[i];
      for (int w = c.begin; w < c.begin + take[i]; ++w) {
        graph_.add_edge(v, w);
        ++degree_[static_cast<std::size_t>(w)];
      }
      if (take[i] > 0) next.push_back({c.begin, c.begin + take[i]});
      if (take[i] < c.size()) next.push_back({c.begin + take[i], c.end});
    }
    const int before = degree_[static_cast<std::size_t>(v)];
    degree_[static_cast<std::size_t>(v)] = k_;

    bool feasible = true;
    const int remaining = n_ - v - 1;
    for (int w = v + 1; w < n_ && feasible; ++w) {
      feasible = k_ - degree_[static_cast<std::size_t>(w)] <= remaining - 1;
    }
    if (feasible) process(v + 1, std::move(next));

    degree_[static_cast<std::size_t>(v)] = before;

    for (std::size_t i = 0; i < cells.size(); ++i) {
      for (int w = cells[i].begin; w < cells[i].begin + take[i]; ++w) {
        graph_.remove_edge(v, w);
        --degree_[static_cast<std::size_t>(w)];
      }
    }
  }

  int n_;
  int k_;
  SmallGraph graph_;
  std::array<int, kMaxSmallOrder> degree_{};
  std::unordered_set<std::uint64_t> seen_;
};

std::optional<int> optional_int(const std::string& value, const std::string& where) {
  return static_cast<int>(detail::parse_u64(value, where));
}

}  // namespace

RegularCensus enumerate_regular(int n, int k) {
  if (n < 0 || n > kMaxSmallOrder) {
    throw Error(Errc::invalid_argument, "enumerate_regular: n = " + std::to_string(n) +
                                            " outside 0.." + std::to_string(kMaxSmallOrder));
  }
  if (k < 0 || (n > 0 && k >= n) || (n == 0 && k != 0)) {
    throw Error(Errc::invalid_argument, "enumerate_regular: need 0 <= k < n, got n = " +
                                            std::to_string(n) + ", k = " + std::to_string(k));
  }
  RegularCensus census{n, k, (n * k) % 2 == 0, {}};
  if (!census.parity_ok) return census;
  census.classes = RegularGenerator(n, k).run();
  return census;
}

std::vector<CensusRow> census_rows(const RegularCensus& census) {
  std::vector<CensusRow> rows;
  for (std::size_t i = 0; i < census.classes.size(); ++i) {
    const auto g = census.classes[i].graph();
    rows.push_back({i + 1, census.classes[i], is_regular(g, census.k), triangle_count(g),
                    contains_clique(g, 4), contains_clique(g, 5), is_vertex_transitive(g)});
  }
  return rows;
}

std::vector<GraphClass> filter_by_clique(const std::vector<GraphClass>& classes,
                                         int require_clique, int free_of_clique) {
  std::vector<GraphClass> out;
  for (const auto& c : classes) {
    const auto g = c.graph();
    if (require_clique > 0 && !contains_clique(g, require_clique)) continue;
    if (free_of_clique > 0 && contains_clique(g, free_of_clique)) continue;
    out.push_back(c);
  }
  return out;
}

// --- GraphCatalog -----------------------------------------------------------------

NamedGraph GraphCatalog::parse(std::string_view text, std::string name) {
  std::optional<int> order;
  std::vector<std::pair<int, int>> edges;
  NamedGraph out;
  out.name = name;

  for (const auto& kv : detail::parse_key_values(text, name)) {
    const std::string where = name + ":" + std::to_string(kv.line);
    if (kv.key == "order") {
      order = optional_int(kv.value, where);
    } else if (kv.key == "edges") {
      for (const auto& item : detail::split_list(kv.value)) {
        const auto dash = item.find('-');
        if (dash == std::string::npos) {
          throw Error(Errc::parse_error, where + ": edge `" + item + "` is not `u-v`");
        }
        edges.emplace_back(
            static_cast<int>(detail::parse_u64(std::string_view(item).substr(0, dash), where)),
            static_cast<int>(detail::parse_u64(std::string_view(item).substr(dash + 1), where)));
      }
    } else if (kv.key == "description") {
      out.description = kv.value;
    } else if (kv.key == "regular") {
      out.regular_degree = optional_int(kv.value, where);
    } else if (kv.key == "triangles") {
      out.triangles = optional_int(kv.value, where);
    } else {
      throw Error(Errc::parse_error, where + ": unknown key `" + kv.key + "`");
    }
  }
  if (!order) throw Error(Errc::parse_error, name + ": missing `order`");

  try {
    out.labeled = SmallGraph(*order, edges);
  } catch (const Error& e) {
    throw Error(Errc::parse_error, name + ": " + e.what());
  }
  if (static_cast<std::size_t>(out.labeled.edge_count()) != edges.size()) {
    throw Error(Errc::parse_error, name + ": duplicate edge");
  }
  if (out.regular_degree && !is_regular(out.labeled, *out.regular_degree)) {
    throw Error(Errc::parse_error, name + ": transcription is not " +
                                       std::to_string(*out.regular_degree) + "-regular");
  }
  if (out.triangles && triangle_count(out.labeled) != *out.triangles) {
    throw Error(Errc::parse_error, name + ": transcription has " +
                                       std::to_string(triangle_count(out.labeled)) +
                                       " triangles, expected " + std::to_string(*out.triangles));
  }
  out.graph = canonicalize(out.labeled);
  return out;
}

GraphCatalog GraphCatalog::load(const std::filesystem::path& data_dir) {
  const auto dir = data_dir / "graphs";
  if (!std::filesystem::is_directory(dir)) {
    throw Error(Errc::io_error, "graph catalog directory not found: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  GraphCatalog catalog;
  for (const auto& f : files) {
    auto g = parse(detail::read_file(f), f.stem().string());
    g.source = f;
    catalog.add(std::move(g));
  }
  return catalog;
}

const GraphCatalog& GraphCatalog::bundled() {
  static const GraphCatalog catalog = load(DEGRAPH_DATA_DIR);
  return catalog;
}

void GraphCatalog::add(NamedGraph graph) {
  auto name = graph.name;
  if (!graphs_.emplace(name, std::move(graph)).second) {
    throw Error(Errc::invalid_argument, "duplicate catalog graph `" + name + "`");
  }
}

const NamedGraph* GraphCatalog::find(std::string_view name) const {
  auto it = graphs_.find(name);
  return it == graphs_.end() ? nullptr : &it->second;
}

const NamedGraph& GraphCatalog::at(std::string_view name) const {
  if (const auto* g = find(name)) return *g;
  throw Error(Errc::invalid_argument, "no catalog graph named `" + std::string(name) + "`");
}

}  // namespace degraph
