#include "minorforge/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "minorforge/canon.hpp"
#include "minorforge/graph_io.hpp"
#include "minorforge/surgery.hpp"

namespace minorforge {

namespace {

// Runs f(i) for i in [0, n) on up to `jobs` threads.
template <class F>
void parallel_for(std::size_t n, std::size_t jobs, F&& f) {
  jobs = std::max<std::size_t>(1, std::min(jobs, n));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (std::size_t t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < n;) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

std::string graph6_or_empty(const MultiGraph& g) { return g.is_simple() ? to_graph6(g) : std::string(); }

const char* kind_name(MinorKind k) { return k == MinorKind::Delete ? "delete" : "contract"; }

}  // namespace

int VerificationReport::exit_code() const {
  if (invalid_certificates > 0) return 3;
  if (counterexamples > 0) return 2;
  return 0;
}

VerificationReport verify_excluded_minors(const FamilyClosure& family, const VerifyOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport r;
  r.members.resize(family.size());

  struct Item {
    std::size_t member;
    std::size_t minor;
  };
  std::vector<Item> items;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& g = family.members[i].graph;
    auto& m = r.members[i];
    m.cert = family.members[i].cert;
    m.graph6 = graph6_or_empty(g);
    m.vertices = g.num_vertices();
    m.edges = g.num_edges();
    m.min_degree = g.num_vertices() ? g.min_degree() : 0;
    for (auto& step : one_step_minors(g)) {
      items.push_back({i, m.minors.size()});
      m.minors.push_back({std::move(step), std::nullopt, false});
    }
  }

  parallel_for(items.size(), options.jobs, [&](std::size_t k) {
    auto& cm = r.members[items[k].member].minors[items[k].minor];
    cm.apex = apex_pair_search(cm.step.graph);
    cm.validated = cm.apex && validate_apex_certificate(cm.step.graph, *cm.apex);
  });
  if (options.auxiliary_checks) {
    parallel_for(family.size(), options.jobs, [&](std::size_t i) {
      const auto& g = family.members[i].graph;
      r.members[i].nonplanar = !is_planar(g).planar;
      r.members[i].petersen_minor = !is_linkless(g);
    });
  }

  for (std::size_t i = 0; i < r.members.size(); ++i) {
    const auto& m = r.members[i];
    for (const auto& cm : m.minors) {
      ++r.minors_checked;
      if (!cm.apex) ++r.counterexamples;
      else if (!cm.validated) ++r.invalid_certificates;
    }
    if (options.auxiliary_checks && !(m.nonplanar && m.petersen_minor)) {
      r.warnings.push_back("member " + std::to_string(i) + " is planar or has no Petersen-family minor");
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

bool HandProofReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const HandCheck& c) { return c.passed; });
}

HandProofReport crosscheck_hand_proofs(const std::vector<MultiGraph>& remaining) {
  HandProofReport rep;
  auto add = [&](std::string name, std::string expected, std::string actual, bool ok) {
    rep.checks.push_back({std::move(name), std::move(expected), std::move(actual), ok});
  };
  auto orbits = [](const MultiGraph& g) { return edge_orbits(g).blocks.size(); };

  const auto k7 = complete_graph(7);
  const auto k3311 = complete_multipartite({3, 3, 1, 1});
  std::map<std::pair<std::size_t, std::size_t>, std::vector<const MultiGraph*>> by_size;
  const MultiGraph* found_k7 = nullptr;
  const MultiGraph* found_k3311 = nullptr;
  for (const auto& g : remaining) {
    if (!found_k7 && are_isomorphic(g, k7)) found_k7 = &g;
    else if (!found_k3311 && are_isomorphic(g, k3311)) found_k3311 = &g;
    else by_size[{g.num_vertices(), g.num_edges()}].push_back(&g);
  }
  add("count", "7", std::to_string(remaining.size()), remaining.size() == 7);
  add("K7 identified", "yes", found_k7 ? "yes" : "no", found_k7 != nullptr);
  add("K3,3,1,1 identified", "yes", found_k3311 ? "yes" : "no", found_k3311 != nullptr);
  if (found_k7) {
    auto n = orbits(*found_k7);
    add("K7 edge orbits", "1", std::to_string(n), n == 1);
  }

  auto single = [&](std::size_t v, std::size_t e) -> const MultiGraph* {
    auto it = by_size.find({v, e});
    return it != by_size.end() && it->second.size() == 1 ? it->second.front() : nullptr;
  };
  auto label = [](std::size_t v, std::size_t e) { return "(" + std::to_string(v) + "," + std::to_string(e) + ")"; };
  auto exact_orbits = [&](std::size_t v, std::size_t e, std::size_t want) {
    const auto* g = single(v, e);
    if (!g) return add(label(v, e) + " identified", "one graph", "missing or ambiguous", false);
    auto n = orbits(*g);
    add(label(v, e) + " edge orbits", std::to_string(want), std::to_string(n), n == want);
  };
  exact_orbits(11, 22, 5);
  exact_orbits(10, 21, 4);

  if (const auto* g = single(9, 21)) {
    auto n = orbits(*g);
    add("(9,21) edge orbits", "<= 4", std::to_string(n), n <= 4);
    // square of a hexagon: C6 plus the chords joining vertices at distance two
    MultiGraph sq = cycle_graph(6);
    for (VertexId i = 0; i < 6; ++i) sq.add_edge(i, (i + 2) % 6);
    std::string triple = "none";
    bool planar = false;
    for (VertexId a = 0; a < 9 && triple == "none"; ++a) {
      for (VertexId b = a + 1; b < 9 && triple == "none"; ++b) {
        for (VertexId c = b + 1; c < 9 && triple == "none"; ++c) {
          VertexId del[] = {a, b, c};
          auto rest = delete_vertices(*g, del);
          if (!are_isomorphic(rest, sq)) continue;
          triple = "{" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "}";
          planar = is_planar(rest).planar;
        }
      }
    }
    add("(9,21) minus three vertices is the square of a hexagon", "some triple", triple, triple != "none");
    add("(9,21) square of a hexagon is planar", "planar", planar ? "planar" : "not planar", planar);
  } else {
    add("(9,21) identified", "one graph", "missing or ambiguous", false);
  }

  auto it = by_size.find({9, 22});
  if (it != by_size.end() && it->second.size() == 2) {
    auto a = orbits(*it->second[0]), b = orbits(*it->second[1]);
    bool distinct = !are_isomorphic(*it->second[0], *it->second[1]);
    add("(9,22) two non-isomorphic graphs", "yes", distinct ? "yes" : "no", distinct);
    std::size_t sevens = (a == 7) + (b == 7);
    add("(9,22)_2 edge orbits", "7 (for exactly one of the two)",
        std::to_string(a) + " and " + std::to_string(b), sevens == 1);
  } else {
    add("(9,22) identified", "two graphs", "missing", false);
  }
  return rep;
}

std::vector<LocalLinklessEntry> locally_linkless_sweep(const FamilyClosure& family) {
  std::vector<LocalLinklessEntry> out;
  for (const auto& m : family.members) {
    const auto& g = m.graph;
    bool possible = false;
    for (VertexId v = 0; v < g.num_vertices() && !possible; ++v) possible = g.degree(v) >= 6;
    if (!possible) continue;
    auto failing = non_linkless_neighbourhoods(g);
    if (failing.empty()) continue;
    out.push_back({m.cert, graph6_or_empty(g), std::move(failing)});
  }
  return out;
}

nlohmann::json report_json(const VerificationReport& r) {
  nlohmann::json members = nlohmann::json::array();
  for (const auto& m : r.members) {
    nlohmann::json minors = nlohmann::json::array();
    for (const auto& cm : m.minors) {
      nlohmann::json jm{{"kind", kind_name(cm.step.kind)},
                        {"edge", cm.step.edge},
                        {"minor_graph6", graph6_or_empty(cm.step.graph)},
                        {"vertices", cm.step.graph.num_vertices()},
                        {"edges", cm.step.graph.num_edges()},
                        {"validated", cm.validated}};
      jm["apex_pair"] = cm.apex ? nlohmann::json::array({cm.apex->v, cm.apex->w}) : nlohmann::json(nullptr);
      minors.push_back(std::move(jm));
    }
    members.push_back({{"cert", m.cert.hex()},
                       {"graph6", m.graph6},
                       {"vertices", m.vertices},
                       {"edges", m.edges},
                       {"min_degree", m.min_degree},
                       {"nonplanar", m.nonplanar},
                       {"petersen_minor", m.petersen_minor},
                       {"minors", std::move(minors)}});
  }
  return {{"members", std::move(members)},
          {"summary",
           {{"members", r.members.size()},
            {"minors_checked", r.minors_checked},
            {"counterexamples", r.counterexamples},
            {"invalid_certificates", r.invalid_certificates},
            {"counterexample_found", r.counterexample_found()},
            {"warnings", r.warnings}}}};
}

std::string report_markdown(const VerificationReport& r) {
  std::ostringstream os;
  os << "# Excluded-minor verification\n\n";
  os << "- members: " << r.members.size() << "\n";
  os << "- one-step minors checked: " << r.minors_checked << "\n";
  os << "- counterexamples: " << r.counterexamples << "\n";
  os << "- invalid certificates: " << r.invalid_certificates << "\n\n";
  os << "| # | graph6 | V | E | min deg | minors | certified |\n";
  os << "|---|---|---|---|---|---|---|\n";
  for (std::size_t i = 0; i < r.members.size(); ++i) {
    const auto& m = r.members[i];
    std::size_t ok = 0;
    for (const auto& cm : m.minors) ok += cm.validated;
    os << "| " << i << " | `" << m.graph6 << "` | " << m.vertices << " | " << m.edges << " | " << m.min_degree
       << " | " << m.minors.size() << " | " << ok << " |\n";
  }
  os << "\n";
  for (std::size_t i = 0; i < r.members.size(); ++i) {
    for (const auto& cm : r.members[i].minors) {
      if (!cm.apex) {
        os << "Counterexample found! member " << i << ", " << kind_name(cm.step.kind) << " edge " << cm.step.edge
           << "\n";
      } else if (!cm.validated) {
        os << "Invalid certificate: member " << i << ", " << kind_name(cm.step.kind) << " edge " << cm.step.edge
           << "\n";
      }
    }
  }
  for (const auto& w : r.warnings) os << "Warning: " << w << "\n";
  if (!r.counterexample_found()) os << "No counterexample found!\n";
  return os.str();
}

void emit_report(const VerificationReport& r, ReportFormat format, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  if (format == ReportFormat::Json) out << report_json(r).dump(2) << "\n";
  else out << report_markdown(r);
  if (!out.flush()) throw std::runtime_error("cannot write " + path.string());
}

}  // namespace minorforge
