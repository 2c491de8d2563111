#include "qdtough/io.hpp"

#include <cctype>
#include <optional>
#include <fstream>
#include <sstream>

#include "qdtough/error.hpp"

namespace qdtough {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder) throw Error(ErrorKind::InvalidArgument, "graph6 writer supports n <= 258047");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int value = 0;
  int bits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      value = (value << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(value + 63));
        value = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((value << (6 - bits)) + 63));
  return out;
}

Graph from_graph6(std::string_view text) {
  text = trim(text);
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  if (text.empty()) throw Error(ErrorKind::Parse, "empty graph6 string");
  for (char ch : text) {
    if (ch < 63 || ch > 126) throw Error(ErrorKind::Parse, "graph6 character out of range");
  }
  std::size_t n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = static_cast<std::size_t>(text[0] - 63);
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~') throw Error(ErrorKind::Parse, "graph6 orders above 258047 are unsupported");
    if (text.size() < 4) throw Error(ErrorKind::Parse, "truncated graph6 size field");
    for (int k = 1; k <= 3; ++k) n = (n << 6) | static_cast<std::size_t>(text[k] - 63);
    if (n <= 62) throw Error(ErrorKind::Parse, "non-canonical graph6 size field");
    pos = 4;
  }
  const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t expected = (pairs + 5) / 6;
  if (text.size() - pos != expected) {
    throw Error(ErrorKind::Parse, "graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                                      std::to_string(expected));
  }
  Graph g(n);
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const int byte = text[pos + bit / 6] - 63;
      if ((byte >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bit % 6 != 0) {
    const int byte = text[pos + bit / 6] - 63;
    if ((byte & ((1 << (6 - bit % 6)) - 1)) != 0) throw Error(ErrorKind::Parse, "graph6 padding bits are not zero");
  }
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

Graph from_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::pair<std::size_t, std::size_t>> header;
  std::optional<Graph> g;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::Parse, "edge list line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string_view body = trim(line);
    if (body.empty()) continue;
    std::istringstream fields{std::string(body)};
    long long a = -1, b = -1;
    std::string extra;
    if (!(fields >> a >> b) || (fields >> extra) || a < 0 || b < 0) fail("expected two nonnegative integers");
    if (!header) {
      header = {static_cast<std::size_t>(a), static_cast<std::size_t>(b)};
      g.emplace(header->first);
      continue;
    }
    if (static_cast<std::size_t>(a) >= header->first || static_cast<std::size_t>(b) >= header->first) fail("vertex out of range");
    if (a == b) fail("self-loop");
    if (!g->add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b))) fail("duplicate edge");
  }
  if (!header) throw Error(ErrorKind::Parse, "edge list has no header line");
  if (g->size() != header->second) {
    throw Error(ErrorKind::Parse, "edge list header promises " + std::to_string(header->second) + " edges, found " +
                                      std::to_string(g->size()));
  }
  return std::move(*g);
}

GraphFormat detect_format(const std::filesystem::path& path, std::string_view content) {
  const auto ext = path.extension().string();
  if (ext == ".g6") return GraphFormat::Graph6;
  if (ext == ".edges" || ext == ".el" || ext == ".txt") return GraphFormat::EdgeList;
  std::istringstream in{std::string(content)};
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::istringstream fields{std::string(body)};
    long long a = 0, b = 0;
    std::string extra;
    return (fields >> a >> b) && !(fields >> extra) ? GraphFormat::EdgeList : GraphFormat::Graph6;
  }
  return GraphFormat::Graph6;
}

Graph parse_graph(std::string_view content, GraphFormat format) {
  if (format == GraphFormat::EdgeList) return from_edge_list(content);
  // First non-empty line only; graph6 files may hold several graphs.
  std::istringstream in{std::string(content)};
  std::string line;
  while (std::getline(in, line)) {
    if (!trim(line).empty()) return from_graph6(line);
  }
  throw Error(ErrorKind::Parse, "no graph6 string found");
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::Graph6 ? to_graph6(g) + "\n" : to_edge_list(g);
}

Graph read_graph(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string content = buf.str();
  return parse_graph(content, detect_format(path, content));
}

}  // namespace qdtough
