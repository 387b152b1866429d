#include "spokecycles/graph6.hpp"

#include <istream>

namespace spokecycles {

namespace {

constexpr int kBias = 63;
constexpr int kShortLimit = 62;
constexpr int kLongLimit = 258047;

std::size_t body_length(int n) {
  const auto bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

std::string graph6_encode(const SimpleGraph& g) {
  const int n = g.vertex_count();
  if (n > kLongLimit) throw CapExceeded("graph6: more than 258047 vertices");
  std::string out;
  if (n <= kShortLimit) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
    }
  }
  if (n < 2) return out;

  // Upper triangle in column order: x(0,1), x(0,2), x(1,2), x(0,3), ...
  const auto total = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  std::vector<unsigned char> bits(total, 0);
  for (const Edge& e : g.edges()) {
    const auto col = static_cast<std::size_t>(e.v);
    bits[col * (col - 1) / 2 + static_cast<std::size_t>(e.u)] = 1;
  }
  const std::size_t groups = body_length(n);
  for (std::size_t k = 0; k < groups; ++k) {
    int value = 0;
    for (std::size_t b = 0; b < 6; ++b) {
      const std::size_t idx = k * 6 + b;
      value = (value << 1) | (idx < total ? bits[idx] : 0);
    }
    out.push_back(static_cast<char>(value + kBias));
  }
  return out;
}

SimpleGraph graph6_decode(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  if (text.empty()) throw GraphError("graph6: empty input");
  for (char c : text) {
    if (c < kBias || c > 126) throw GraphError("graph6: invalid character");
  }
  int n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = text[0] - kBias;
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~') {
      throw GraphError("graph6: 8-byte size form is not supported");
    }
    if (text.size() < 4) throw GraphError("graph6: truncated size field");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | (text[i] - kBias);
    if (n <= kShortLimit) throw GraphError("graph6: non-canonical long size field");
    pos = 4;
  }
  const std::string_view body = text.substr(pos);
  const std::size_t expected = n < 2 ? 0 : body_length(n);
  if (body.size() != expected) {
    throw GraphError("graph6: expected " + std::to_string(expected) + " data bytes, got " +
                     std::to_string(body.size()));
  }
  std::vector<Edge> edges;
  if (n >= 2) {
    const auto total = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    std::size_t idx = 0;
    Vertex row = 0;
    Vertex col = 1;
    for (std::size_t k = 0; k < body.size(); ++k) {
      const int value = body[k] - kBias;
      for (int b = 5; b >= 0; --b, ++idx) {
        const bool bit = ((value >> b) & 1) != 0;
        if (idx >= total) {
          if (bit) throw GraphError("graph6: nonzero padding bits");
          continue;
        }
        if (bit) edges.emplace_back(row, col);
        if (++row == col) {
          row = 0;
          ++col;
        }
      }
    }
  }
  return {n, std::move(edges)};
}

std::vector<SimpleGraph> read_graph6_stream(std::istream& in) {
  std::vector<SimpleGraph> graphs;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    graphs.push_back(graph6_decode(line));
  }
  return graphs;
}

}  // namespace spokecycles
