#include "conex/graph6.hpp"

#include <sstream>

namespace conex {

namespace {
constexpr long long kMaxSmallN = 62;
constexpr long long kMaxMediumN = 258047;

void append_bits(std::string& out, long long value, int sextets) {
  for (int i = sextets - 1; i >= 0; --i)
    out.push_back(static_cast<char>(63 + ((value >> (6 * i)) & 63)));
}
}  // namespace

std::string graph6_encode(const Graph& g) {
  long long n = g.order();
  std::string out;
  if (n <= kMaxSmallN) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= kMaxMediumN) {
    out.push_back('~');
    append_bits(out, n, 3);
  } else {
    out += "~~";
    append_bits(out, n, 6);
  }
  int bit = 0;
  unsigned char cur = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      cur = static_cast<unsigned char>(cur << 1 | (g.has_edge(u, v) ? 1 : 0));
      if (++bit == 6) {
        out.push_back(static_cast<char>(63 + cur));
        bit = 0;
        cur = 0;
      }
    }
  }
  if (bit) out.push_back(static_cast<char>(63 + (cur << (6 - bit))));
  return out;
}

Graph graph6_decode(std::string_view s) {
  if (s.empty()) throw G6ParseError("empty graph6 string", 0);
  for (size_t i = 0; i < s.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) throw G6ParseError("character out of graph6 range", i);
  }
  size_t pos = 0;
  long long n;
  if (s[0] != '~') {
    n = s[0] - 63;
    pos = 1;
  } else if (s.size() >= 2 && s[1] != '~') {
    if (s.size() < 4) throw G6ParseError("truncated 3-byte order field", s.size());
    n = 0;
    for (size_t i = 1; i < 4; ++i) n = n << 6 | (s[i] - 63);
    pos = 4;
  } else {
    if (s.size() < 8) throw G6ParseError("truncated 6-byte order field", s.size());
    n = 0;
    for (size_t i = 2; i < 8; ++i) n = n << 6 | (s[i] - 63);
    pos = 8;
  }
  if (n > 1'000'000) throw G6ParseError("graph order exceeds 10^6", 0);

  long long pairs = n * (n - 1) / 2;
  size_t body = static_cast<size_t>((pairs + 5) / 6);
  if (s.size() - pos < body) throw G6ParseError("graph6 body too short", s.size());
  if (s.size() - pos > body) throw G6ParseError("trailing bytes after graph6 body", pos + body);

  std::vector<std::pair<int, int>> edges;
  long long k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      int c = s[pos + k / 6] - 63;
      if ((c >> (5 - k % 6)) & 1) edges.emplace_back(u, v);
    }
  }
  // padding bits must be zero
  if (pairs % 6) {
    int c = s[pos + body - 1] - 63;
    if (c & ((1 << (6 - pairs % 6)) - 1))
      throw G6ParseError("nonzero padding bits", pos + body - 1);
  }
  return Graph(static_cast<int>(n), edges);
}

std::vector<Graph> graph6_decode_lines(std::string_view text) {
  std::vector<Graph> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (!line.empty()) out.push_back(graph6_decode(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

std::string to_dot(const Graph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (int v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
  for (auto [u, v] : g.edge_list()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace conex
