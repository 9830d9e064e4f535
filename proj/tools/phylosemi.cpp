// phylosemi: command-line front end for the phylogenetic semigroup library.
//
// Exit codes: 0 success (or "true"), 1 "false" (e.g. not a member),
// 2 usage, parse or runtime error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <regex>
#include <set>
#include <sstream>
#include <thread>

#include "phylosemi/atlas.hpp"
#include "phylosemi/classify.hpp"
#include "phylosemi/decompose.hpp"
#include "phylosemi/families.hpp"
#include "phylosemi/generators.hpp"
#include "phylosemi/io.hpp"

using namespace phylosemi;

namespace {

constexpr int kFalse = 1;
constexpr int kError = 2;

Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

std::string edge_header(const Graph& g) {
  std::string out = "edges:";
  for (const auto& e : g.edges()) out += " " + e.id;
  return out;
}

bool has_valence_two(const Graph& g) {
  for (std::size_t v = 0; v < g.num_vertices(); ++v)
    if (g.valence(v) == 2) return true;
  return false;
}

std::string describe(const MembershipReport& r) {
  std::string out = "not a member: " + violation_symbol(r.violation) + " " + violation_name(r.violation);
  if (!r.where.empty()) out += " at " + r.where;
  if (!r.detail.empty()) out += ": " + r.detail;
  return out;
}

int cmd_generators(const std::string& graph_path, std::optional<int> cap, const std::string& format) {
  Graph g = load_graph(graph_path);
  GeneratorReport r = minimal_generators(g, cap.value_or(default_cap(g)));
  std::vector<std::string> tags;
  for (const auto& w : r.generators) tags.push_back(generator_tag(g, w));
  if (format == "json")
    std::cout << report_json(g, r, tags);
  else if (format == "csv")
    std::cout << report_csv(g, r, tags);
  else
    std::cout << report_text(g, r, tags);
  return 0;
}

int cmd_member(const std::string& graph_path, const std::string& labeling_path) {
  Graph g = load_graph(graph_path);
  Labeling w = parse_labeling(g, read_file(labeling_path));
  MembershipReport r = check_membership(g, w);
  if (r.member) {
    std::cout << "member\n";
    return 0;
  }
  std::cout << describe(r) << '\n';
  return kFalse;
}

int classify_graph(Graph g) {
  if (has_valence_two(g)) {
    g = suppress_degree2(g).graph;
    std::cerr << "note: valence-2 vertices suppressed before classifying\n";
  }
  int betti = first_betti_number(g);
  if (betti == 2) {
    Betti2Class c = classify_betti2(g);
    std::cout << to_string(c.tag) << " max_degree=" << c.max_degree << '\n';
  } else if (betti == 0) {
    std::cout << "betti=0 bound=1\n";
  } else if (betti == 1) {
    std::cout << "betti=1 bound=2\n";
  } else {
    std::cout << "betti=" << betti << " bound=unknown\n";
  }
  return 0;
}

int classify_labeling(const Graph& g, const Labeling& w) {
  MembershipReport r = check_membership(g, w);
  if (!r.member) {
    std::cout << describe(r) << '\n';
    return kFalse;
  }
  if (w.degree == 0) {
    std::cout << "Zero\n";
    return 0;
  }
  std::cout << generator_tag(g, w) << ' ' << (is_indecomposable(g, w) ? "indecomposable" : "decomposable") << '\n';
  if (w.degree == 3 && is_polygon_graph(g) && g.is_trivalent()) {
    Deg3Split split = split_deg3(g, w);
    std::cout << edge_header(g) << '\n';
    if (split.witness) {
      std::cout << "split w1=" << to_string(split.witness->w1) << " w2=" << to_string(split.witness->w2) << '\n';
    } else {
      std::cout << "split networks";
      for (const auto& n : split.networks) std::cout << ' ' << to_string(n);
      std::cout << '\n';
    }
  }
  return 0;
}

int cmd_classify(const std::string& graph_path, const std::optional<std::string>& labeling_path) {
  Graph g = load_graph(graph_path);
  if (!labeling_path) return classify_graph(g);
  return classify_labeling(g, parse_labeling(g, read_file(*labeling_path)));
}

int cmd_decompose(const std::string& graph_path, const std::string& labeling_path, std::optional<int> cap) {
  Graph g = load_graph(graph_path);
  Labeling w = parse_labeling(g, read_file(labeling_path));
  MembershipReport r = check_membership(g, w);
  if (!r.member) {
    std::cerr << describe(r) << '\n';
    return kFalse;
  }
  std::cout << serialize_labelings(g, decompose_full(g, w, cap.value_or(default_cap(g))));
  return 0;
}

int cmd_networks(const std::string& graph_path, const std::string& format) {
  Graph g = load_graph(graph_path);
  auto nets = enumerate_networks(g);
  if (format == "json") {
    std::cout << serialize_labelings(g, nets);
  } else if (format == "csv") {
    std::cout << "degree";
    for (const auto& e : g.edges()) std::cout << ',' << e.id;
    std::cout << '\n';
    for (const auto& n : nets) {
      std::cout << n.degree;
      for (int x : n.labels) std::cout << ',' << x;
      std::cout << '\n';
    }
  } else {
    std::cout << edge_header(g) << '\n';
    for (const auto& n : nets) std::cout << to_string(n) << '\n';
    std::cout << nets.size() << " networks\n";
  }
  return 0;
}

int cmd_family(const std::string& name, const std::vector<int>& params, const std::optional<std::string>& out) {
  Graph g = family(name, params);
  if (out) {
    std::ofstream f(*out);
    if (!f) throw ParseError("cannot write '" + *out + "'");
    f << serialize_graph(g);
  } else {
    std::cout << serialize_graph(g);
  }
  return 0;
}

unsigned thread_budget() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("PHYLOSEMI_THREADS")) {
    try {
      int cap = std::stoi(env);
      if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    } catch (const std::exception&) {
      throw ParseError(std::string("PHYLOSEMI_THREADS must be a positive integer, got '") + env + "'");
    }
  }
  return n;
}

int cmd_atlas(const std::string& name, const std::string& range, std::optional<int> cap, const std::string& out,
              bool resume) {
  static const std::regex pattern(R"(^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$)");
  std::smatch m;
  if (!std::regex_match(range, m, pattern)) throw ParseError("--param-range must look like a..b, got '" + range + "'");
  int a = std::stoi(m[1]), b = std::stoi(m[2]);
  if (a > b) throw ParseError("--param-range is empty");

  std::vector<int> skip;
  bool need_header = true;
  if (resume) {
    std::ifstream in(out);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      if (line == atlas_header()) {
        need_header = false;
        continue;
      }
      std::istringstream row(line);
      std::string fam, param;
      std::getline(row, fam, ',');
      std::getline(row, param, ',');
      if (fam == name) {
        try {
          skip.push_back(std::stoi(param));
        } catch (const std::exception&) {
          throw ParseError("unreadable row in '" + out + "': " + line);
        }
      }
    }
  }
  std::ofstream file(out, resume ? std::ios::app : std::ios::trunc);
  if (!file) throw ParseError("cannot write '" + out + "'");
  if (need_header) file << atlas_header() << '\n' << std::flush;
  for (int p : skip)
    if (p >= a && p <= b) std::cerr << "skipping " << name << ' ' << p << " (already in " << out << ")\n";

  run_atlas(name, a, b, cap, thread_budget(), skip, [&](const AtlasRow& row) {
    std::string line = atlas_csv(row);
    file << line << '\n' << std::flush;
    std::cout << line << '\n' << std::flush;
  });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Phylogenetic semigroups on multigraphs"};
  app.require_subcommand(1);

  std::string graph_path, labeling_path, format = "text", name, range, out;
  std::optional<std::string> opt_labeling, opt_out;
  std::optional<int> cap;
  std::vector<int> params;
  bool resume = false;
  std::function<int()> action;

  auto* gen = app.add_subcommand("generators", "Minimal generators up to a degree cap");
  gen->add_option("graph", graph_path, "Graph file")->required();
  gen->add_option("--cap", cap, "Degree cap (default: first Betti number + 1)")->check(CLI::PositiveNumber);
  gen->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  gen->callback([&] { action = [&] { return cmd_generators(graph_path, cap, format); }; });

  auto* mem = app.add_subcommand("member", "Exit 0 if the labeling is a member, 1 if not");
  mem->add_option("graph", graph_path, "Graph file")->required();
  mem->add_option("labeling", labeling_path, "Labeling file")->required();
  mem->callback([&] { action = [&] { return cmd_member(graph_path, labeling_path); }; });

  auto* cls = app.add_subcommand("classify", "Classify a graph, or a labeling on it");
  cls->add_option("graph", graph_path, "Graph file")->required();
  cls->add_option("labeling", opt_labeling, "Labeling file");
  cls->callback([&] { action = [&] { return cmd_classify(graph_path, opt_labeling); }; });

  auto* dec = app.add_subcommand("decompose", "Decompose a member into minimal generators");
  dec->add_option("graph", graph_path, "Graph file")->required();
  dec->add_option("labeling", labeling_path, "Labeling file")->required();
  dec->add_option("--cap", cap, "Degree cap for the generator search")->check(CLI::PositiveNumber);
  dec->callback([&] { action = [&] { return cmd_decompose(graph_path, labeling_path, cap); }; });

  auto* net = app.add_subcommand("networks", "List all networks (degree-one members)");
  net->add_option("graph", graph_path, "Graph file")->required();
  net->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  net->callback([&] { action = [&] { return cmd_networks(graph_path, format); }; });

  auto* atl = app.add_subcommand("atlas", "Maximal generator degree across a graph family");
  atl->add_option("--family", name, "Family name")->required()->check(CLI::IsMember(family_names()));
  atl->add_option("--param-range", range, "Parameter range a..b")->required();
  atl->add_option("--cap", cap, "Degree cap (default: first Betti number + 1 per row)")->check(CLI::PositiveNumber);
  atl->add_option("--out", out, "CSV output file")->required();
  atl->add_flag("--resume", resume, "Skip rows already present in the output file");
  atl->callback([&] { action = [&] { return cmd_atlas(name, range, cap, out, resume); }; });

  auto* fam = app.add_subcommand("family", "Write a family member as a graph file");
  fam->add_option("name", name, "Family name")->required()->check(CLI::IsMember(family_names()));
  fam->add_option("params", params, "Integer parameters");
  fam->add_option("--out", opt_out, "Output file (default: stdout)");
  fam->callback([&] { action = [&] { return cmd_family(name, params, opt_out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    return action();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kError;
}
