#pragma once

// Exact chromatic number, zig-zag number and 2-colorability defect at desk
// scale.

#include "minorforge/core.hpp"
#include "minorforge/limits.hpp"

#include <optional>
#include <utility>

namespace minorforge {

/// A zigzag z_1..z_l in a properly colored graph: colors strictly increase
/// along the sequence and the odd-position vertices are complete to the
/// even-position vertices.
struct ZigzagWitness {
  VertexSet sequence;  // in zigzag order, not sorted
  Coloring coloring;

  int length() const { return static_cast<int>(sequence.size()); }
  VertexSet odd_positions() const;   // z_1, z_3, ... (sorted)
  VertexSet even_positions() const;  // z_2, z_4, ... (sorted)
};

/// Does `seq` form a zigzag of (g, c)?
bool is_zigzag(const Graph& g, const Coloring& c, const VertexSet& seq);

/// Color classes X1, X2 of a hypergraph 2-coloring (1-based elements).
struct TwoColoring {
  Label x1;
  Label x2;
  friend bool operator==(const TwoColoring&, const TwoColoring&) = default;
};

/// Minimum-size deletion set U (lexicographically smallest among those)
/// and a 2-coloring of the remaining ground elements.
struct DefectWitness {
  Label u;
  TwoColoring coloring;
};

struct ChromaticResult {
  int chi = 0;
  Coloring coloring;
};

struct ZigResult {
  int zig = 0;
  Coloring coloring;
  ZigzagWitness witness;
};

struct CdResult {
  int cd = 0;
  DefectWitness witness;
};

ChromaticResult chromatic_number(const Graph& g, const Limits& limits = {});

/// Longest zigzag of (g, c), lexicographically smallest vertex sequence
/// among the longest. Requires c proper.
ZigzagWitness longest_zigzag(const Graph& g, const Coloring& c);

/// min over proper colorings of the longest zigzag length.
ZigResult zig(const Graph& g, const Limits& limits = {});

/// 2-coloring with no monochromatic hyperedge, or nullopt.
std::optional<TwoColoring> is_two_colorable(const Hypergraph& h);

/// h - U: drop the elements of U and every hyperedge meeting U. The ground
/// keeps its original element names.
Hypergraph delete_elements(const Hypergraph& h, const Label& u);

CdResult cd(const Hypergraph& h, const Limits& limits = {});

}  // namespace minorforge
