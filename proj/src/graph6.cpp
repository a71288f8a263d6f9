#include "pentaflag/graph6.hpp"

#include <stdexcept>
#include <vector>

namespace pentaflag::graph6 {

namespace {

constexpr int kBias = 63;

void append_order(std::string& out, int n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
    return;
  }
  out.push_back(static_cast<char>(126));
  for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 0x3F) + kBias));
}

}  // namespace

std::string encode(const graph::Graph& g) {
  const int n = g.order();
  std::string out;
  append_order(out, n);
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

std::string encode(const graph::CanonGraph& g) { return encode(g.to_graph()); }

graph::Graph decode(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  if (text.empty()) throw std::invalid_argument("graph6: empty input");

  std::vector<int> values;
  values.reserve(text.size());
  for (char c : text) {
    const int v = static_cast<unsigned char>(c) - kBias;
    if (v < 0 || v > 63) throw std::invalid_argument("graph6: byte out of range");
    values.push_back(v);
  }

  std::size_t pos = 0;
  long n = 0;
  if (values[0] < 63) {
    n = values[0];
    pos = 1;
  } else {
    if (values.size() < 4 || values[1] == 63) throw std::invalid_argument("graph6: unsupported order encoding");
    n = (static_cast<long>(values[1]) << 12) | (values[2] << 6) | values[3];
    pos = 4;
  }
  if (n > graph::kMaxHostOrder) throw std::invalid_argument("graph6: more than 64 vertices");

  const long bits = n * (n - 1) / 2;
  const std::size_t expected = pos + static_cast<std::size_t>((bits + 5) / 6);
  if (values.size() != expected) throw std::invalid_argument("graph6: wrong length for order " + std::to_string(n));

  graph::Graph g(static_cast<int>(n));
  long t = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++t) {
      const int byte = values[pos + static_cast<std::size_t>(t / 6)];
      if ((byte >> (5 - t % 6)) & 1) g.add_edge(i, j);
    }
  }
  // Padding bits must be zero.
  if (bits % 6 != 0) {
    const int last = values.back();
    const int pad = static_cast<int>(6 - bits % 6);
    if ((last & ((1 << pad) - 1)) != 0) throw std::invalid_argument("graph6: nonzero padding bits");
  }
  return g;
}

}  // namespace pentaflag::graph6
