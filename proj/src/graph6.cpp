#include "spexlab/graph6.hpp"

#include <cstdint>

#include "spexlab/error.hpp"

namespace spexlab {

namespace {

constexpr std::size_t kMaxOrder = 68719476735ULL;  // 2^36 - 1

void put_order(std::string& out, std::size_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  } else {
    out.append("~~");
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  }
}

int sextet(std::string_view s, std::size_t pos) {
  if (pos >= s.size()) throw ParseError("graph6: unexpected end of input", pos);
  const int c = static_cast<unsigned char>(s[pos]);
  if (c < 63 || c > 126) throw ParseError("graph6: byte outside printable range", pos);
  return c - 63;
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxOrder) throw InvalidArgument("graph6: graph too large");
  std::string out;
  put_order(out, n);
  int acc = 0, nbits = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = nbits = 0;
      }
    }
  if (nbits) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

Graph decode_graph6(std::string_view text) {
  std::size_t pos = 0;
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) pos = header.size();
  std::size_t end = text.size();
  while (end > pos && (text[end - 1] == '\n' || text[end - 1] == '\r' || text[end - 1] == ' ')) --end;
  text = text.substr(0, end);
  if (pos >= text.size()) throw ParseError("graph6: empty input", pos);

  std::size_t n = 0;
  if (text[pos] != '~') {
    n = static_cast<std::size_t>(sextet(text, pos++));
  } else if (pos + 1 < text.size() && text[pos + 1] == '~') {
    pos += 2;
    for (int k = 0; k < 6; ++k) n = (n << 6) | static_cast<std::size_t>(sextet(text, pos++));
  } else {
    ++pos;
    for (int k = 0; k < 3; ++k) n = (n << 6) | static_cast<std::size_t>(sextet(text, pos++));
    if (n <= 62) throw ParseError("graph6: non-minimal order prefix", pos - 1);
  }
  if (n > 100000) throw ParseError("graph6: order too large for this tool", pos - 1);

  const std::size_t bits = n * (n - (n ? 1 : 0)) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (text.size() - pos < need) throw ParseError("graph6: truncated adjacency data", text.size());
  if (text.size() - pos > need) throw ParseError("graph6: trailing bytes", pos + need);

  GraphBuilder b(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int w = sextet(text, pos + k / 6);
      if ((w >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  if (need) {
    const std::size_t last = pos + need - 1;
    const int pad = static_cast<int>(need * 6 - bits);
    const int w = sextet(text, last);
    if (w & ((1 << pad) - 1)) throw ParseError("graph6: nonzero padding bits", last);
  }
  return std::move(b).build();
}

std::vector<Graph> decode_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(start, nl - start);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (!line.empty() && line.front() != '#') {
      try {
        out.push_back(decode_graph6(line));
      } catch (const ParseError& e) {
        throw ParseError(e.message(), start + e.offset());
      }
    }
    start = nl + 1;
  }
  return out;
}

}  // namespace spexlab
