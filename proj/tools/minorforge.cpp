#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "minorforge/canon.hpp"
#include "minorforge/complex.hpp"
#include "minorforge/complex_cert.hpp"
#include "minorforge/complex_io.hpp"
#include "minorforge/families.hpp"
#include "minorforge/graph_io.hpp"
#include "minorforge/minors.hpp"
#include "minorforge/planarity.hpp"
#include "minorforge/verify.hpp"

using namespace minorforge;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

MultiGraph named_graph(const std::string& name) {
  if (name == "k6") return complete_graph(6);
  if (name == "k7") return complete_graph(7);
  if (name == "k331") return complete_multipartite({3, 3, 1});
  if (name == "k3311") return complete_multipartite({3, 3, 1, 1});
  if (name == "petersen") return petersen_graph();
  if (name == "heawood") return heawood_graph();
  if (name.rfind("g6:", 0) == 0) return from_graph6(name.substr(3));
  throw UsageError("unknown generator '" + name + "' (k6, k7, k331, k3311, petersen, heawood or g6:<graph6>)");
}

MultiGraph read_graph(const std::string& arg) {
  if (arg != "-") return from_graph6(arg);
  std::string line;
  if (!std::getline(std::cin, line)) throw UsageError("no graph6 line on stdin");
  return from_graph6(line);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text).flush()) throw std::runtime_error("cannot write " + path);
}

std::string export_members(const FamilyClosure& f, const std::string& format) {
  if (format == "graph6") {
    std::string out;
    for (const auto& m : f.members) out += to_graph6(m.graph) + "\n";
    return out;
  }
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& m : f.members) arr.push_back(to_json(m.graph));
  return arr.dump() + "\n";
}

std::vector<VertexId> parse_vertices(const std::string& s) {
  std::vector<VertexId> out;
  for (const auto& t : split(s, ',')) out.push_back(static_cast<VertexId>(std::stoul(t)));
  if (out.empty()) throw UsageError("empty vertex list");
  return out;
}

TwoComplex read_complex(const std::string& path) {
  nlohmann::json j;
  if (path == "-") {
    j = nlohmann::json::parse(std::cin);
  } else {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    j = nlohmann::json::parse(in);
  }
  return complex_from_json(j);
}

void print_rotation(const RotationSystem& rs) {
  for (std::size_t v = 0; v < rs.order.size(); ++v) {
    std::cout << v << ":";
    for (auto w : rs.order[v]) std::cout << ' ' << w;
    std::cout << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph minors, delta-wye families and 2-complex rewriting"};
  app.require_subcommand(1);
  int exit_code = 0;

  // family
  auto* family = app.add_subcommand("family", "Delta-wye / wye-delta closure of generator graphs");
  std::string generators = "k7,k3311", ops = "dy,yd", export_path, family_format = "graph6";
  family->add_option("--generators", generators, "Comma-separated: k6,k7,k331,k3311,petersen,heawood,g6:<graph6>");
  family->add_option("--ops", ops, "Comma-separated subset of dy,yd");
  family->add_option("--export", export_path, "Write the members to this file");
  family->add_option("--format", family_format)->check(CLI::IsMember({"graph6", "json"}));
  family->callback([&] {
    std::vector<MultiGraph> gens;
    for (const auto& name : split(generators, ',')) gens.push_back(named_graph(name));
    FamilyOps fo{false, false};
    for (const auto& op : split(ops, ',')) {
      if (op == "dy") fo.delta_wye = true;
      else if (op == "yd") fo.wye_delta = true;
      else throw UsageError("unknown op '" + op + "' (dy, yd)");
    }
    auto f = family_closure(gens, fo);
    std::cout << "members: " << f.size() << "\n";
    std::cout << "generators: " << f.generator_count() << "\n";
    std::cout << "excluding generators: " << f.size() - f.generator_count() << "\n";
    std::size_t linkless = 0, remaining = 0;
    for (const auto& m : f.members) {
      linkless += is_linkless(m.graph);
      remaining += m.graph.min_degree() >= 4;
    }
    std::cout << "min degree >= 4: " << remaining << "\n";
    std::cout << "linkless: " << linkless << "\n";
    if (!export_path.empty()) write_text(export_path, export_members(f, family_format));
  });

  // families export
  auto* families = app.add_subcommand("families", "Named families");
  families->require_subcommand(1);
  auto* fexport = families->add_subcommand("export", "Write a named family");
  std::string set = "heawood", set_format = "graph6", set_out;
  fexport->add_option("--set", set)->check(CLI::IsMember({"heawood", "petersen"}));
  fexport->add_option("--format", set_format)->check(CLI::IsMember({"graph6", "json"}));
  fexport->add_option("--out", set_out, "Output file (default stdout)");
  fexport->callback([&] {
    write_text(set_out, export_members(set == "heawood" ? heawood_family() : petersen_family(), set_format));
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Excluded-minor certification and cross-checks");
  std::string target = "heawood", report_path, report_format = "json";
  std::size_t jobs = 1;
  verify->add_option("target", target, "heawood, petersen, hand-proofs or locally-linkless")
      ->check(CLI::IsMember({"heawood", "petersen", "hand-proofs", "locally-linkless"}));
  verify->add_option("--report", report_path, "Write the report to this file");
  verify->add_option("--format", report_format)->check(CLI::IsMember({"json", "markdown"}));
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->callback([&] {
    if (target == "hand-proofs") {
      auto rep = crosscheck_hand_proofs(remaining_heawood());
      for (const auto& c : rep.checks) {
        std::cout << (c.passed ? "ok   " : "FAIL ") << c.name << ": expected " << c.expected << ", got " << c.actual
                  << "\n";
      }
      exit_code = rep.all_passed() ? 0 : 3;
      return;
    }
    if (target == "locally-linkless") {
      for (const auto& e : locally_linkless_sweep(heawood_family())) {
        std::cout << e.graph6 << " fails at";
        for (auto v : e.failing_vertices) std::cout << ' ' << v;
        std::cout << "\n";
      }
      return;
    }
    const auto& f = target == "heawood" ? heawood_family() : petersen_family();
    auto r = verify_excluded_minors(f, {jobs, true});
    if (!report_path.empty()) {
      emit_report(r, report_format == "json" ? ReportFormat::Json : ReportFormat::Markdown, report_path);
    }
    std::cout << "members: " << r.members.size() << "\n";
    std::cout << "minors checked: " << r.minors_checked << "\n";
    std::cout << "counterexamples: " << r.counterexamples << "\n";
    for (const auto& w : r.warnings) std::cout << "warning: " << w << "\n";
    std::cout << (r.counterexample_found() ? "Counterexample found!" : "No counterexample found!") << "\n";
    std::cerr << "elapsed: " << r.seconds << " s\n";
    exit_code = r.exit_code();
  });

  // single-graph queries
  std::string graph_arg;
  bool witness = false;
  auto* planar = app.add_subcommand("planar", "Planarity test");
  planar->add_option("graph", graph_arg, "graph6 string or - for stdin")->required();
  planar->add_flag("--witness", witness, "Print the rotation system");
  planar->callback([&] {
    auto g = read_graph(graph_arg);
    auto r = is_planar(g);
    std::cout << (r.planar ? "planar" : "nonplanar") << "\n";
    if (witness && r.witness) print_rotation(*r.witness);
  });

  auto* apex2 = app.add_subcommand("apex2", "Find two vertices whose removal leaves a planar graph");
  apex2->add_option("graph", graph_arg, "graph6 string or - for stdin")->required();
  apex2->callback([&] {
    auto g = read_graph(graph_arg);
    auto c = apex_pair_search(g);
    if (!c) {
      std::cout << "none\n";
      exit_code = 1;
      return;
    }
    std::cout << "pair " << c->v << " " << c->w << "\n";
    std::cout << "validated " << (validate_apex_certificate(g, *c) ? "yes" : "no") << "\n";
  });

  auto* linkless = app.add_subcommand("linkless", "Petersen-family minor test");
  linkless->add_option("graph", graph_arg, "graph6 string or - for stdin")->required();
  linkless->callback([&] {
    auto g = read_graph(graph_arg);
    std::vector<MultiGraph> obs;
    for (const auto& m : petersen_family().members) obs.push_back(m.graph);
    auto hit = find_any_minor(g, obs);
    if (!hit) {
      std::cout << "linkless\n";
      return;
    }
    std::cout << "not linkless: minor " << to_graph6(obs[*hit]) << "\n";
  });

  auto* orbits = app.add_subcommand("orbits", "Edge orbits under the automorphism group");
  orbits->add_option("graph", graph_arg, "graph6 string or - for stdin")->required();
  orbits->callback([&] {
    auto g = read_graph(graph_arg);
    auto p = edge_orbits(g);
    std::cout << "edge orbits: " << p.blocks.size() << "\n";
    for (const auto& b : p.blocks) {
      std::cout << " ";
      for (auto e : b) std::cout << " " << g.edge(e).u << "-" << g.edge(e).v;
      std::cout << "\n";
    }
  });

  // complexes
  auto* complex = app.add_subcommand("complex", "2-complexes");
  complex->require_subcommand(1);
  auto* build = complex->add_subcommand("build", "Build a named complex");
  std::string name = "k7", out_path;
  build->add_option("--name", name, "kN (complete complex), k7-delta or fkt")->required();
  build->add_option("--out", out_path, "Output file (default stdout)");
  build->callback([&] {
    TwoComplex x;
    if (name == "k7-delta") x = k7_minus_delta();
    else if (name == "fkt") x = fkt_complex();
    else if (name.size() > 1 && name[0] == 'k' && name.find_first_not_of("0123456789", 1) == std::string::npos)
      x = complete_complex(std::stoul(name.substr(1)));
    else throw UsageError("unknown complex '" + name + "'");
    write_text(out_path, to_json(x).dump() + "\n");
  });

  auto* info = complex->add_subcommand("info", "Counts, Euler characteristic and certificate");
  std::string in_path = "-";
  info->add_option("--in", in_path, "Complex JSON (default stdin)");
  info->callback([&] {
    auto x = read_complex(in_path);
    std::size_t regular = 0;
    for (const auto& c : x.cells) regular += is_regular(x.skeleton, c.boundary);
    std::cout << "vertices: " << x.skeleton.num_vertices() << "\n";
    std::cout << "edges: " << x.skeleton.num_edges() << "\n";
    std::cout << "cells: " << x.num_cells() << " (" << regular << " regular)\n";
    std::cout << "euler characteristic: " << euler_characteristic(x) << "\n";
  });

  auto* op = complex->add_subcommand("op", "Apply one operation to a complex");
  std::string op_name, path1, path2, cycle;
  std::size_t cell1 = 0, cell2 = 0, edge1 = 0, edge2 = 0, offset = 0, first_length = 1;
  bool allow_long = false, graph_only = false;
  op->add_option("--in", in_path, "Complex JSON (default stdin)");
  op->add_option("--out", out_path, "Output file (default stdout)");
  op->add_option("--op", op_name)
      ->required()
      ->check(CLI::IsMember({"clone-cell", "join", "reroute", "collapse", "stellify", "clone-edge", "merge-edges",
                             "contract-edge", "remove-cell"}));
  op->add_option("--cell", cell1);
  op->add_option("--cell2", cell2);
  op->add_option("--path", path1, "Vertex list a,b,c (join: shared path; reroute: path to replace)");
  op->add_option("--path2", path2, "Vertex list of the replacement path (reroute)");
  op->add_option("--cycle", cycle, "Vertex list of the cycle (stellify)");
  op->add_option("--edge", edge1);
  op->add_option("--edge2", edge2);
  op->add_option("--offset", offset, "Collapse: first step of the first path");
  op->add_option("--first-length", first_length, "Collapse: length of the first path");
  op->add_flag("--allow-long", allow_long, "Allow join/reroute along paths longer than one edge");
  op->add_flag("--graph-only", graph_only, "Stellify the skeleton only and drop the cells");
  op->callback([&] {
    auto x = read_complex(in_path);
    const auto& g = x.skeleton;
    auto cid = [](std::size_t c) { return static_cast<CellId>(c); };
    auto eid = [](std::size_t e) { return static_cast<EdgeId>(e); };
    TwoComplex y;
    if (op_name == "clone-cell") y = clone_cell(x, cid(cell1));
    else if (op_name == "remove-cell") y = remove_cell(x, cid(cell1));
    else if (op_name == "join") y = join_cells(x, cid(cell1), cid(cell2), path_through(g, parse_vertices(path1)), allow_long);
    else if (op_name == "reroute")
      y = reroute_cell(x, cid(cell1), path_through(g, parse_vertices(path1)), path_through(g, parse_vertices(path2)),
                       allow_long);
    else if (op_name == "collapse") y = collapse_cell(x, cid(cell1), {offset, first_length, {}});
    else if (op_name == "stellify") {
      auto r = stellify(x, closed_walk(g, parse_vertices(cycle)), graph_only);
      if (r.had_cell_on_cycle) std::cerr << "warning: a cell is bounded by the stellified cycle\n";
      y = std::move(r.complex);
    } else if (op_name == "clone-edge") y = clone_edge_complex(x, eid(edge1)).complex;
    else if (op_name == "merge-edges") y = merge_parallel_edges(x, eid(edge1), eid(edge2));
    else y = contract_edge_complex(x, eid(edge1));
    write_text(out_path, to_json(y).dump() + "\n");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 64;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return exit_code;
}
