#include <string>

#include "flagspec/errors.hpp"
#include "flagspec/graph.hpp"

namespace flagspec {

namespace {

constexpr int kSmallLimit = 62;
constexpr int kMediumLimit = 258047;

}  // namespace

std::string to_graph6(const Graph& g) {
  std::vector<Vertex> identity(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) identity[i] = i;
  return to_graph6(g, identity);
}

std::string to_graph6(const Graph& g, std::span<const Vertex> order) {
  const int n = g.order();
  if (static_cast<int>(order.size()) != n) throw InvalidGraph("vertex order has the wrong length");
  if (n > kMediumLimit) throw InvalidGraph("graph6 encoding supports n <= 258047");
  std::string out;
  if (n <= kSmallLimit) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  // Column-major upper triangle: x(0,1), x(0,2), x(1,2), x(0,3), ...
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(order[i], order[j]) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph from_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 string");

  auto sextet = [&](std::size_t pos) {
    int c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) throw ParseError("graph6 byte out of range at " + std::to_string(pos));
    return c - 63;
  };

  int n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = sextet(0);
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~') throw ParseError("graph6 orders above 258047 are not supported");
    if (text.size() < 4) throw ParseError("truncated graph6 header");
    n = (sextet(1) << 12) | (sextet(2) << 6) | sextet(3);
    pos = 4;
  }

  const long long bits = static_cast<long long>(n) * (n - 1) / 2;
  const std::size_t expected = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos != expected) {
    throw ParseError("graph6 body has " + std::to_string(text.size() - pos) +
                     " bytes, expected " + std::to_string(expected));
  }

  std::vector<Edge> edges;
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = sextet(pos + static_cast<std::size_t>(k / 6));
      if ((byte >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  // Padding bits must be zero for the encoding to be canonical.
  if (bits % 6 != 0) {
    int last = sextet(text.size() - 1);
    if (last & ((1 << (6 - bits % 6)) - 1)) throw ParseError("nonzero graph6 padding bits");
  }
  return Graph(n, std::move(edges));
}

}  // namespace flagspec
