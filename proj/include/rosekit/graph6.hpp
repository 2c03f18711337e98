#ifndef ROSEKIT_GRAPH6_HPP
#define ROSEKIT_GRAPH6_HPP

#include <rosekit/graph.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace rosekit {

/// graph6 text form: 6-bit groups offset by 63, order header in 1, 4,
/// or 8 bytes, then the upper triangle in column-major bit order.
std::string write_graph6(const Graph& g);
Graph parse_graph6(std::string_view text);

namespace graph6_detail {
// Header codec, split out so the 4- and 8-byte forms stay testable even
// though Graph itself caps the order at 64.
std::string encode_order(std::int64_t n);
// Returns (order, bytes consumed).
std::pair<std::int64_t, int> decode_order(std::string_view text);
}  // namespace graph6_detail

}  // namespace rosekit

#endif
