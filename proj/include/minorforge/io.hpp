#pragma once

// JSON and DOT encodings of graphs, hypergraphs and certificates. JSON
// output is compact, with sorted edges and sets, so identical inputs give
// identical bytes.

#include "minorforge/bounds.hpp"
#include "minorforge/certificates.hpp"
#include "minorforge/decompose.hpp"

#include "json.hpp"

#include <string>

namespace minorforge {

using Json = nlohmann::ordered_json;

Json to_json(const Graph& g);
Json to_json(const Hypergraph& h);
Json to_json(const PartitionCertificate& p);
Json to_json(const OddExpansion& x);
Json to_json(const MinorModel& m);
Json to_json(const Coloring& c);
Json to_json(const ZigzagWitness& w);
Json to_json(const DefectWitness& d);
Json to_json(const ValidationReport& r);

Graph graph_from_json(const Json& j);
Hypergraph hypergraph_from_json(const Json& j);
PartitionCertificate partition_from_json(const Json& j);
OddExpansion expansion_from_json(const Json& j);
MinorModel minor_model_from_json(const Json& j);

/// Parse text, mapping syntax errors to InputError.
Json parse_json(const std::string& text);

/// Compact one-line rendering followed by a newline.
std::string dump(const Json& j);

/// DOT rendering. Labelled vertices show their set, e.g. "{1,3}".
std::string to_dot(const Graph& g);

/// DOT rendering with tree / branch-set membership as node fill colors and
/// connector / link edges drawn bold.
std::string to_dot(const Graph& g, const OddExpansion& x);
std::string to_dot(const Graph& g, const MinorModel& m);

}  // namespace minorforge
