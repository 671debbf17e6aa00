#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "qsys/hypergraph.hpp"

namespace qsys {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_index(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

bool skippable(const std::vector<std::string_view>& tokens) {
  return tokens.empty() || tokens.front().front() == '#';
}

}  // namespace

ReadResult read_hypergraph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<Hypergraph4> h;
  std::vector<std::string> warnings;

  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_ws(line);
    if (skippable(tokens)) continue;

    if (!h) {
      if (tokens.size() != 1) throw ParseError(line_no, "first line must hold the vertex count");
      const auto n = parse_index(tokens[0], line_no);
      if (n > kMaxVertices) throw ParseError(line_no, "vertex count too large");
      h.emplace(static_cast<std::size_t>(n));
      continue;
    }

    if (tokens.size() != 4) {
      throw ParseError(line_no, "expected 4 vertex indices, got " + std::to_string(tokens.size()));
    }
    std::array<Vertex, 4> v{};
    for (int i = 0; i < 4; ++i) {
      const auto x = parse_index(tokens[i], line_no);
      if (x >= h->num_vertices()) {
        throw ParseError(line_no, "vertex " + std::to_string(x) + " out of range for n=" +
                                      std::to_string(h->num_vertices()));
      }
      v[i] = static_cast<Vertex>(x);
    }
    std::optional<Edge4> e;
    try {
      e.emplace(v[0], v[1], v[2], v[3]);
    } catch (const std::invalid_argument& err) {
      throw ParseError(line_no, err.what());
    }
    if (!h->add_edge(*e)) {
      warnings.push_back("line " + std::to_string(line_no) + ": duplicate edge " +
                         e->to_string() + " ignored");
    }
  }
  if (!h) throw ParseError(line_no, "missing vertex count");
  return {std::move(*h), std::move(warnings)};
}

ReadResult read_hypergraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_hypergraph(in);
}

void write_hypergraph(const Hypergraph4& h, std::ostream& out) {
  out << h.num_vertices() << '\n';
  for (const Edge4& e : h.sorted_edges()) {
    out << e[0] << ' ' << e[1] << ' ' << e[2] << ' ' << e[3] << '\n';
  }
}

void write_hypergraph_file(const Hypergraph4& h, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_hypergraph(h, out);
}

}  // namespace qsys
