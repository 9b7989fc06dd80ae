#include "minorforge/graph_io.hpp"

#include <stdexcept>

namespace minorforge {

namespace {

void encode_size(std::string& out, std::size_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  } else if (n <= 68719476735ull) {
    out.push_back(126);
    out.push_back(126);
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  } else {
    throw std::invalid_argument("graph too large for graph6");
  }
}

int sextet(char c) {
  if (c < 63 || c > 126) throw std::invalid_argument(std::string("invalid graph6 character '") + c + "'");
  return c - 63;
}

}  // namespace

std::string to_graph6(const MultiGraph& g) {
  if (!g.is_simple()) throw std::invalid_argument("graph6 requires a simple graph");
  const std::size_t n = g.num_vertices();
  auto m = g.multiplicity_matrix();
  std::string out;
  encode_size(out, n);
  int acc = 0;
  int bits = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (m[i][j] ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

MultiGraph from_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  auto is_space = [](char c) { return c == ' ' || c == '\n' || c == '\r' || c == '\t'; };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  if (text.starts_with(header)) text.remove_prefix(header.size());
  if (text.empty()) throw std::invalid_argument("empty graph6 string");
  if (text.front() == ':' || text.front() == '&') {
    throw std::invalid_argument("sparse6/digraph6 input is not graph6");
  }

  std::size_t pos = 0;
  std::size_t n = 0;
  if (text[0] != 126) {
    n = static_cast<std::size_t>(sextet(text[0]));
    pos = 1;
  } else if (text.size() >= 2 && text[1] != 126) {
    if (text.size() < 4) throw std::invalid_argument("truncated graph6 size");
    for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | static_cast<std::size_t>(sextet(text[k]));
    pos = 4;
  } else {
    if (text.size() < 8) throw std::invalid_argument("truncated graph6 size");
    for (std::size_t k = 2; k <= 7; ++k) n = (n << 6) | static_cast<std::size_t>(sextet(text[k]));
    pos = 8;
  }

  const std::size_t bit_count = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t need = (bit_count + 5) / 6;
  if (text.size() - pos != need) {
    throw std::invalid_argument("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                                std::to_string(need));
  }
  MultiGraph g(n);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      int byte = sextet(text[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
    }
  }
  // Padding bits must be zero.
  if (bit_count % 6 != 0) {
    int last = sextet(text.back());
    if (last & ((1 << (6 - bit_count % 6)) - 1)) throw std::invalid_argument("nonzero graph6 padding bits");
  }
  return g;
}

nlohmann::json to_json(const MultiGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"vertices", g.num_vertices()}, {"edges", std::move(edges)}};
}

MultiGraph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
    throw std::invalid_argument("graph JSON needs \"vertices\" and \"edges\"");
  }
  if (!j.at("vertices").is_number_unsigned()) throw std::invalid_argument("\"vertices\" must be a count");
  MultiGraph g(j.at("vertices").get<std::size_t>());
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a [u, v] pair");
    g.add_edge(e[0].get<VertexId>(), e[1].get<VertexId>());
  }
  return g;
}

}  // namespace minorforge
