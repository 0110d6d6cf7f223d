#include "satforge/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "satforge/residues.hpp"

namespace satforge {

namespace {

void append_sextets(std::string& out, uint64_t value, int count) {
  for (int i = count - 1; i >= 0; --i)
    out.push_back(static_cast<char>(63 + (value >> (6 * i) & 63)));
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const uint64_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back('~');
    append_sextets(out, n, 3);
  } else {
    out.push_back('~');
    out.push_back('~');
    append_sextets(out, n, 6);
  }

  int bits = 0;
  int acc = 0;
  for (uint32_t v = 1; v < n; ++v)
    for (uint32_t u = 0; u < v; ++u) {
      acc = acc << 1 | (g.has_edge(u, v) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        bits = 0;
        acc = 0;
      }
    }
  if (bits) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
  return out;
}

Graph from_graph6(const std::string& text) {
  std::string s = text;
  if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.empty()) throw std::invalid_argument("graph6: empty input");

  size_t pos = 0;
  auto sextet = [&]() -> uint64_t {
    if (pos >= s.size()) throw std::invalid_argument("graph6: truncated input");
    char c = s[pos++];
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: bad character");
    return static_cast<uint64_t>(c - 63);
  };

  uint64_t n;
  if (s[pos] != '~') {
    n = sextet();
  } else {
    ++pos;
    if (pos < s.size() && s[pos] == '~') {
      ++pos;
      n = 0;
      for (int i = 0; i < 6; ++i) n = n << 6 | sextet();
    } else {
      n = 0;
      for (int i = 0; i < 3; ++i) n = n << 6 | sextet();
    }
  }
  if (n == 0) throw std::invalid_argument("graph6: empty graph order");

  Graph g(static_cast<uint32_t>(n));
  int bits = 0;
  uint64_t acc = 0;
  for (uint32_t v = 1; v < n; ++v)
    for (uint32_t u = 0; u < v; ++u) {
      if (bits == 0) {
        acc = sextet();
        bits = 6;
      }
      if (acc >> (bits - 1) & 1) g.add_edge(u, v);
      --bits;
    }
  return g;
}

std::string to_dot(const Graph& g) {
  std::ostringstream os;
  os << "graph g {\n";
  for (uint32_t u = 0; u < g.order(); ++u)
    if (g.degree(u) == 0) os << "  " << u << ";\n";
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

nlohmann::json to_edge_list_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return nlohmann::json{{"n", g.order()}, {"edges", edges}};
}

Graph from_edge_list_json(const nlohmann::json& j) {
  Graph g(j.at("n").get<uint32_t>());
  for (const auto& e : j.at("edges"))
    g.add_edge(e.at(0).get<uint32_t>(), e.at(1).get<uint32_t>());
  return g;
}

Graph load_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::string ext = path.extension().string();
  if (ext == ".json") {
    nlohmann::json j;
    in >> j;
    if (j.contains("set")) return cayley_graph(SymmetricSet::from_json(j));
    return from_edge_list_json(j);
  }
  std::string line;
  std::getline(in, line);
  return from_graph6(line);
}

void save_graph_file(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  std::string ext = path.extension().string();
  if (ext == ".json")
    out << to_edge_list_json(g).dump() << "\n";
  else if (ext == ".dot")
    out << to_dot(g);
  else
    out << to_graph6(g) << "\n";
}

}  // namespace satforge
