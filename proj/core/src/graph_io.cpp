#include "rgl/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "rgl/error.hpp"

namespace rgl {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

void append_size(std::string& out, int n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    out += "~~";
    const auto nn = static_cast<unsigned long long>(n);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(63 + ((nn >> shift) & 63)));
  }
}

int six_bits(std::string_view s, std::size_t pos) {
  if (pos >= s.size()) throw ParseError("graph6 string truncated", pos);
  const int c = static_cast<unsigned char>(s[pos]);
  if (c < 63 || c > 126) throw ParseError("graph6 byte outside 63..126", pos);
  return c - 63;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  std::string out;
  append_size(out, g.order());
  int acc = 0;
  int nbits = 0;
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

Graph from_graph6(std::string_view text) {
  text = trim(text);
  std::size_t pos = 0;
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  if (pos >= text.size()) throw ParseError("empty graph6 string", pos);

  long long n = 0;
  if (text[pos] != '~') {
    n = six_bits(text, pos++);
  } else if (pos + 1 < text.size() && text[pos + 1] == '~') {
    pos += 2;
    for (int i = 0; i < 6; ++i) n = (n << 6) | six_bits(text, pos++);
  } else {
    ++pos;
    for (int i = 0; i < 3; ++i) n = (n << 6) | six_bits(text, pos++);
  }
  if (n > kMaxOrder) throw ResourceLimit("graph6 order " + std::to_string(n) + " exceeds cap");

  const int order = static_cast<int>(n);
  Graph g(order);
  const long long bits = static_cast<long long>(order) * (order - 1) / 2;
  const std::size_t bytes = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos != bytes) {
    throw ParseError("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                         std::to_string(bytes),
                     pos);
  }
  long long k = 0;
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = six_bits(text, pos + static_cast<std::size_t>(k / 6));
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = six_bits(text, text.size() - 1);
    const int pad = static_cast<int>(6 - bits % 6);
    if (last & ((1 << pad) - 1)) throw ParseError("graph6 padding bits not zero", text.size() - 1);
  }
  return g;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    out.push_back(from_graph6(line));
  }
  return out;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.order() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

Graph from_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t offset = 0;
  std::optional<Graph> g;
  while (std::getline(in, line)) {
    const std::size_t here = offset;
    offset += line.size() + 1;
    auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    if (!g) {
      if (body.substr(0, 2) != "n=") throw ParseError("edge list must start with n=<order>", here);
      int n = 0;
      auto [p, ec] = std::from_chars(body.data() + 2, body.data() + body.size(), n);
      if (ec != std::errc() || p != body.data() + body.size()) throw ParseError("bad order in header", here);
      g.emplace(n);
      continue;
    }
    std::istringstream fields{std::string(body)};
    int u = -1;
    int v = -1;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra)) throw ParseError("expected \"u v\" edge line", here);
    if (u < 0 || v < 0 || u >= g->order() || v >= g->order() || u == v) {
      throw ParseError("edge endpoint out of range or self-loop", here);
    }
    g->add_edge(u, v);
  }
  if (!g) throw ParseError("edge list has no n=<order> header", 0);
  return *g;
}

std::string to_dot(const Graph& g, std::string_view name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open graph file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  if (trim(text).substr(0, 2) == "n=") return from_edge_list(text);
  const auto nl = text.find('\n');
  return from_graph6(text.substr(0, nl));
}

}  // namespace rgl
