#include "ikg/graph6.hpp"

namespace ikg {

std::string graph6_encode(const SimpleGraph& g) {
  int n = g.order();
  if (n > 62)
    throw GraphError(Err::ParseError, "graph6: order > 62 unsupported");
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int acc = 0, nbits = 0;
  for (int c = 1; c < n; ++c) {
    for (int r = 0; r < c; ++r) {
      acc = acc << 1 | (g.has_edge(r, c) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

SimpleGraph graph6_decode(const std::string& s) {
  if (s.empty()) throw GraphError(Err::ParseError, "graph6: empty string");
  int n = static_cast<unsigned char>(s[0]) - 63;
  if (n < 0 || n > 62)
    throw GraphError(Err::ParseError, "graph6: bad header byte");
  long npairs = static_cast<long>(n) * (n - 1) / 2;
  long ngroups = (npairs + 5) / 6;
  if (static_cast<long>(s.size()) != 1 + ngroups)
    throw GraphError(Err::ParseError, "graph6: wrong length");
  SimpleGraph g = SimpleGraph::empty(n);
  long bit = 0;
  for (long i = 0; i < ngroups; ++i) {
    int val = static_cast<unsigned char>(s[1 + i]) - 63;
    if (val < 0 || val > 63)
      throw GraphError(Err::ParseError, "graph6: bad body byte");
    for (int k = 5; k >= 0; --k, ++bit) {
      int b = val >> k & 1;
      if (bit >= npairs) {
        if (b) throw GraphError(Err::ParseError, "graph6: nonzero padding");
        continue;
      }
      if (b) {
        // Invert the column-major pair index.
        long t = bit;
        int c = 1;
        while (t >= c) t -= c, ++c;
        g.add_edge(static_cast<int>(t), c);
      }
    }
  }
  return g;
}

std::vector<SimpleGraph> graph6_read_lines(const std::string& text) {
  std::vector<SimpleGraph> out;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) nl = text.size();
    if (nl > pos) out.push_back(graph6_decode(text.substr(pos, nl - pos)));
    pos = nl + 1;
  }
  return out;
}

std::string graph6_write_lines(const std::vector<SimpleGraph>& graphs) {
  std::string out;
  for (const auto& g : graphs) {
    out += graph6_encode(g);
    out.push_back('\n');
  }
  return out;
}

}  // namespace ikg
