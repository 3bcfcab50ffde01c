#pragma once

#include <string>
#include <vector>

#include "ikg/graph.hpp"

namespace ikg {

/// graph6 text encoding for order <= 62: first byte is order+63, then the
/// upper triangle of the adjacency matrix in column order
/// (0,1),(0,2),(1,2),(0,3),... packed big-endian into 6-bit groups, each
/// emitted as value+63, zero-padded at the end.
std::string graph6_encode(const SimpleGraph& g);

/// Inverse of graph6_encode. Throws GraphError(Err::ParseError) on a bad
/// header, bad characters, wrong length, or nonzero padding bits.
SimpleGraph graph6_decode(const std::string& s);

/// One graph per line, single '\n' separators.
std::vector<SimpleGraph> graph6_read_lines(const std::string& text);
std::string graph6_write_lines(const std::vector<SimpleGraph>& graphs);

}  // namespace ikg
