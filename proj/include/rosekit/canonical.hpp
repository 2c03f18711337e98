#ifndef ROSEKIT_CANONICAL_HPP
#define ROSEKIT_CANONICAL_HPP

#include <rosekit/graph.hpp>

#include <compare>
#include <string>

namespace rosekit {

/// Canonical encoding of an isomorphism class. Two graphs have equal
/// labels exactly when they are isomorphic.
struct CanonicalLabel {
  std::string bytes;
  auto operator<=>(const CanonicalLabel&) const = default;
};

/// The canonical representative of g's isomorphism class: the
/// relabeling whose upper-triangle adjacency code (column-major, the
/// graph6 bit order) is lexicographically largest. Found by
/// backtracking over vertex placements with prefix pruning.
Graph canonical_form(const Graph& g);

/// graph6 string of canonical_form(g).
CanonicalLabel canonical_label(const Graph& g);

/// True when g already is its own canonical form. This is the
/// acceptance predicate of the orderly enumerator and is cheaper than
/// canonical_form on rejects.
bool is_canonical_form(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

namespace canonical_detail {
/// Mask-level form of is_canonical_form used by the enumerator's inner
/// loop; adj points at n neighborhood bitmasks.
bool is_max_code(int n, const std::uint64_t* adj);
}  // namespace canonical_detail

}  // namespace rosekit

#endif
