#include "cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <thread>

#include "CLI11.hpp"

#include "degraph/enumerate.hpp"
#include "degraph/error.hpp"
#include "degraph/groups.hpp"
#include "degraph/prime_graph.hpp"
#include "degraph/verify.hpp"

namespace degraph {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Catalogs {
  std::optional<GroupCatalog> owned_groups;
  std::optional<GraphCatalog> owned_graphs;
  const GroupCatalog* groups = nullptr;
  const GraphCatalog* graphs = nullptr;

  explicit Catalogs(const std::string& data_dir) {
    if (data_dir.empty()) {
      groups = &GroupCatalog::bundled();
      graphs = &GraphCatalog::bundled();
    } else {
      owned_groups = GroupCatalog::load(data_dir);
      owned_graphs = GraphCatalog::load(data_dir);
      groups = &*owned_groups;
      graphs = &*owned_graphs;
    }
  }
};

std::string render(const PrimeGraph& g, const std::string& format, const std::string& name) {
  if (format == "dot") return to_dot(g, name);
  if (format == "json") return to_json_string(g) + "\n";
  return to_edgelist(g);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string edge_words(const SmallGraph& g) {
  std::string s;
  for (auto [u, v] : g.edges()) {
    s += (s.empty() ? "" : " ") + std::to_string(u) + "-" + std::to_string(v);
  }
  return s;
}

void print_census(std::ostream& out, const RegularCensus& census,
                  const std::vector<GraphClass>& shown, bool stats) {
  out << "# enum n=" << census.n << " k=" << census.k << ": ";
  if (!census.parity_ok) {
    out << "none (n*k is odd)\n";
    return;
  }
  out << shown.size() << " class" << (shown.size() == 1 ? "" : "es") << "\n";
  if (stats) out << "index\ttriangles\tK4\tK5\tvertex-transitive\tedges\n";
  std::size_t index = 0;
  for (const auto& c : shown) {
    const auto g = c.graph();
    out << ++index << "\t";
    if (stats) {
      out << triangle_count(g) << "\t" << yes_no(contains_clique(g, 4)) << "\t"
          << yes_no(contains_clique(g, 5)) << "\t" << yes_no(is_vertex_transitive(g)) << "\t";
    }
    out << edge_words(g) << "\n";
  }
}

void print_named(std::ostream& out, const NamedGraph& g) {
  out << "name: " << g.name << "\n";
  if (!g.description.empty()) out << "description: " << g.description << "\n";
  out << "order: " << g.labeled.order() << "\n"
      << "edges: " << edge_words(g.labeled) << "\n"
      << "triangles: " << triangle_count(g.labeled) << "\n"
      << "max_dominating(5): "
      << (g.labeled.order() >= 5 ? std::to_string(max_dominating_in_induced(g.labeled, 5)) : "-")
      << "\n"
      << "vertex-transitive: " << yes_no(is_vertex_transitive(g.labeled)) << "\n"
      << "canonical-code: " << g.graph.code << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Character degree prime graphs of simple groups and small regular graphs",
               "degraph"};
  app.require_subcommand(1);
  std::string data_dir;
  app.add_option("--data-dir", data_dir, "Directory holding groups/ and graphs/ tables");

  std::string family, param;
  auto add_spec = [&](CLI::App* sub) {
    sub->add_option("family", family, "psl2 | suzuki | psl3 | psu3 | alt | sporadic")->required();
    sub->add_option("param", param, "q (q^2 for suzuki), n for alt, name for sporadic")
        ->required();
  };
  const std::vector<std::string> formats = {"edgelist", "dot", "json"};

  auto* cd = app.add_subcommand("cd", "Print the character degree set");
  add_spec(cd);

  auto* graph = app.add_subcommand("graph", "Print the prime graph of a group");
  add_spec(graph);
  std::string format = "edgelist";
  bool structural = false;
  graph->add_option("--format", format)->check(CLI::IsMember(formats));
  graph->add_flag("--structural", structural, "Use the structure rules instead of cd(S)");

  auto* order = app.add_subcommand("order", "Print the group order");
  add_spec(order);

  auto* en = app.add_subcommand("enum", "List k-regular graphs up to isomorphism");
  int n = 0, k = 0, require_clique = 0, free_of_clique = 0;
  bool stats = false;
  en->add_option("--n", n)->required()->check(CLI::Range(0, kMaxSmallOrder));
  en->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
  en->add_option("--require-clique", require_clique)->check(CLI::Range(1, kMaxSmallOrder));
  en->add_option("--free-of-clique", free_of_clique)->check(CLI::Range(1, kMaxSmallOrder));
  en->add_flag("--stats", stats, "Add triangle, clique and transitivity columns");

  auto* product = app.add_subcommand("product", "Print the prime graph of a direct product");
  std::vector<std::string> specs;
  product->add_option("specs", specs, "family1 param1 family2 param2")->required()->expected(4);
  product->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* verify = app.add_subcommand("verify", "Run the claim suite");
  std::vector<std::string> only;
  std::string bounds_text;
  bool as_json = false;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  verify->add_option("--only", only, "Run only these claim ids");
  verify->add_option("--bounds", bounds_text, "psl2=Q,suzuki=Q2,psl3=Q,psu3=Q,trials=N,seed=S");
  verify->add_flag("--json", as_json);
  verify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  bool list = false;
  verify->add_flag("--list", list, "List claim ids and exit");

  auto* catalog = app.add_subcommand("catalog", "Print named graphs");
  std::string name;
  catalog->add_option("name", name);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const Catalogs cats(data_dir);

    if (cd->parsed()) {
      out << character_degrees(GroupSpec::parse(family, param), *cats.groups).to_string() << "\n";
    } else if (graph->parsed()) {
      const auto spec = GroupSpec::parse(family, param);
      const auto g = structural ? structural_graph(spec, *cats.groups)
                                : prime_graph_of(spec, *cats.groups);
      out << render(g, format, spec.to_string());
    } else if (order->parsed()) {
      out << group_order(GroupSpec::parse(family, param), *cats.groups) << "\n";
    } else if (en->parsed()) {
      const auto census = enumerate_regular(n, k);
      print_census(out, census, filter_by_clique(census.classes, require_clique, free_of_clique),
                   stats);
    } else if (product->parsed()) {
      const auto a = GroupSpec::parse(specs[0], specs[1]);
      const auto b = GroupSpec::parse(specs[2], specs[3]);
      const auto g = product_graph(prime_graph_of(a, *cats.groups), prime_graph_of(b, *cats.groups));
      out << render(g, format, a.to_string() + " x " + b.to_string());
    } else if (verify->parsed()) {
      if (list) {
        for (const auto& c : registered_claims()) {
          out << c.id << "\t" << c.description << "\n";
        }
        return kOk;
      }
      const auto bounds = SweepBounds::parse(bounds_text);
      Report report;
      if (only.empty()) {
        report = run_all(bounds, jobs, *cats.groups, *cats.graphs);
      } else {
        report.bounds = bounds;
        for (const auto& id : only) {
          report.claims.push_back(run_one(id, bounds, *cats.groups, *cats.graphs));
        }
      }
      out << (as_json ? to_json(report).dump(2) + "\n" : to_table(report));
      return report.ok() ? kOk : kFailed;
    } else if (catalog->parsed()) {
      if (name.empty()) {
        for (const auto& [key, g] : cats.graphs->graphs()) {
          out << key << "\t" << g.description << "\n";
        }
      } else {
        print_named(out, cats.graphs->at(name));
      }
    }
  } catch (const Error& e) {
    err << "degraph: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::invalid_argument:
      case Errc::parse_error:
      case Errc::unknown_claim:
        return kUsage;
      default:
        return kFailed;
    }
  }
  return kOk;
}

}  // namespace degraph
