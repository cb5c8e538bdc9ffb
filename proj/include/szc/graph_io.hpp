#ifndef SZC_GRAPH_IO_HPP
#define SZC_GRAPH_IO_HPP

#include <string>
#include <string_view>

#include "szc/graph.hpp"
#include "szc/szeged.hpp"

namespace szc {

// graph6: printable encoding of the upper triangle of the adjacency matrix.
// A line is N(n) followed by R(x) where
//   N(n) = byte n+63 for n <= 62; bytes 126 then three 6-bit groups of the
//          18-bit big-endian value for n <= 258047; bytes 126 126 then six
//          6-bit groups of the 36-bit value above that;
//   x    = bits x(0,1) x(0,2) x(1,2) x(0,3) ... (column by column), padded
//          with zeros to a multiple of 6, each group stored as byte
//          group+63.
// Parsing is strict: bytes outside 63..126, a non-canonical size prefix, a
// wrong body length or nonzero padding bits are all rejected, so
// write(parse(line)) == line for every accepted line.

Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

/// Plain text edge list: optional "n m" header, one "u v" pair per line,
/// '#' comments and blank lines ignored.  Without a header n is inferred as
/// the largest endpoint + 1.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

/// Report serialization.  Index values are exact integers; the edge-vertex
/// index appears only as its doubled value (field suffix _x2).
std::string report_to_json(const Graph& g, const IndexReport& report);
std::string report_to_csv(const Graph& g, const IndexReport& report);

}  // namespace szc

#endif
