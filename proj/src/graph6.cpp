#include <rosekit/graph6.hpp>

#include <stdexcept>
#include <vector>

namespace rosekit {
namespace graph6_detail {

std::string encode_order(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("negative order");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else if (n <= 68719476735LL) {
    out.push_back('~');
    out.push_back('~');
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    throw std::invalid_argument("order too large for graph6");
  }
  return out;
}

std::pair<std::int64_t, int> decode_order(std::string_view text) {
  auto group = [&](size_t i) -> std::int64_t {
    if (i >= text.size()) throw std::invalid_argument("graph6: truncated order header");
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte outside printable range");
    return c - 63;
  };
  if (group(0) != 63) return {group(0), 1};
  if (group(1) != 63) {
    std::int64_t n = (group(1) << 12) | (group(2) << 6) | group(3);
    return {n, 4};
  }
  std::int64_t n = 0;
  for (int i = 2; i < 8; ++i) n = (n << 6) | group(static_cast<size_t>(i));
  return {n, 8};
}

}  // namespace graph6_detail

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out = graph6_detail::encode_order(n);
  int bits = n * (n - 1) / 2;
  int groups = (bits + 5) / 6;
  std::vector<int> packed(static_cast<size_t>(groups), 0);
  int pos = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      if (g.has_edge(u, v)) packed[static_cast<size_t>(pos / 6)] |= 1 << (5 - pos % 6);
      ++pos;
    }
  for (int group : packed) out.push_back(static_cast<char>(group + 63));
  return out;
}

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("graph6: empty input");
  auto [order, consumed] = graph6_detail::decode_order(text);
  if (order > Graph::kMaxOrder)
    throw std::invalid_argument("graph6: order above 64 is unsupported");
  const int n = static_cast<int>(order);
  const int bits = n * (n - 1) / 2;
  const int groups = (bits + 5) / 6;
  if (static_cast<int>(text.size()) != consumed + groups)
    throw std::invalid_argument(static_cast<int>(text.size()) < consumed + groups
                                    ? "graph6: truncated body"
                                    : "graph6: trailing bytes");
  std::vector<Edge> edges;
  int pos = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      unsigned char c = static_cast<unsigned char>(text[static_cast<size_t>(consumed + pos / 6)]);
      if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte outside printable range");
      if ((c - 63) >> (5 - pos % 6) & 1) edges.emplace_back(u, v);
      ++pos;
    }
  if (bits % 6 != 0) {
    unsigned char last = static_cast<unsigned char>(text.back());
    if (last < 63 || last > 126) throw std::invalid_argument("graph6: byte outside printable range");
    if ((last - 63) & ((1 << (6 - bits % 6)) - 1))
      throw std::invalid_argument("graph6: nonzero padding bits");
  }
  return Graph(n, std::move(edges));
}

}  // namespace rosekit
