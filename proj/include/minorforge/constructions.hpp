#pragma once

// Constructive extraction of clique-minor and odd-clique-minor certificates:
//  - from a long zigzag in the partition coloring (odd K_{floor(l/2)+1}),
//  - from a Kneser representation with 2-colorability defect t (K_t minor),
//  - directly inside Schrijver graphs S(n,k) (odd K_{n-2k+2}).
// Every construction verifies its certificate before returning it and
// raises InternalError if that fails.

#include "minorforge/bounds.hpp"
#include "minorforge/certificates.hpp"
#include "minorforge/decompose.hpp"

#include <utility>

namespace minorforge {

/// Tree 2-coloring, indexed by vertex; 0 where undefined.
using TreeColoring = std::vector<int>;

/// An edge a-b with a in `ti`, b in `tj` and f(a) == f(b).
///
/// `ti` and `tj` must be disjoint, and for some joining edge the endpoint in
/// the earlier part must have its whole part inside its own side with f
/// proper on that part. The later endpoint then has neighbors on both sides
/// of the earlier part, one of them matching its own color.
Edge find_monochromatic_edge(const Graph& g, const PartitionCertificate& p, const TreeColoring& f,
                             const VertexSet& ti, const VertexSet& tj);

/// Odd K_k-expansion with k = floor(l/2) + 1 from a zigzag of length l >= 2
/// in (g, partition_coloring(g, p)).
OddExpansion extract_odd_expansion(const Graph& g, const PartitionCertificate& p,
                                   const ZigzagWitness& w);

struct OddHadwigerResult {
  int zigzag_length = 0;
  PartitionCertificate partition;
  ZigzagWitness zigzag;
  OddExpansion expansion;
};

/// partition -> coloring -> longest zigzag -> expansion of order
/// floor(l/2) + 1 (order 1 for edgeless graphs, 0 for the null graph).
OddHadwigerResult odd_hadwiger_witness(const Graph& g);

struct KneserMinorResult {
  int t = 0;
  CdResult defect;
  Graph kneser;   // kneser_graph(h), the host of the model
  MinorModel model;
};

/// K_t minor model in kneser_graph(h) with t = cd(h).
KneserMinorResult extract_minor_from_kneser_rep(const Hypergraph& h, const Limits& limits = {});

/// Odd K_{n-2k+2}-expansion in schrijver(n, k).
OddExpansion schrijver_expansion(int n, int k);

/// K_{n-2k+2} minor model in schrijver(n, k).
MinorModel schrijver_minor_model(int n, int k);

}  // namespace minorforge
