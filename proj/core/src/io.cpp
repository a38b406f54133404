#include "hkcut/io.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hkcut/rng.hpp"

namespace hkcut {

namespace {

bool ignorable(const std::string& line) {
  for (char c : line) {
    if (c == '%') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;  // blank
}

std::vector<long long> parse_ints(const std::string& line, int line_no) {
  std::vector<long long> out;
  std::istringstream in(line);
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      const long long value = std::stoll(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      out.push_back(value);
    } catch (const std::exception&) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": malformed integer '" +
                               token + "'");
    }
  }
  return out;
}

}  // namespace

Hypergraph parse_instance(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;

  long long m = -1, n = -1;
  bool weighted = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (ignorable(line)) continue;
    const std::vector<long long> header = parse_ints(line, line_no);
    if (header.size() < 2 || header.size() > 3) {
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": header must be 'm n' or 'm n fmt'");
    }
    m = header[0];
    n = header[1];
    if (m < 0 || n < 1) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": invalid header counts");
    }
    if (header.size() == 3) {
      if (header[2] == 10 || header[2] == 11) {
        throw std::runtime_error("line " + std::to_string(line_no) +
                                 ": vertex-weight formats (fmt 10/11) are not supported");
      }
      if (header[2] != 0 && header[2] != 1) {
        throw std::runtime_error("line " + std::to_string(line_no) + ": unknown fmt flag " +
                                 std::to_string(header[2]));
      }
      weighted = header[2] == 1;
    }
    break;
  }
  if (m < 0) throw std::runtime_error("missing header line");

  std::vector<std::pair<std::vector<int>, Cost>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  while (std::getline(in, line)) {
    ++line_no;
    if (ignorable(line)) continue;
    if (static_cast<long long>(edges.size()) == m) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": expected " +
                               std::to_string(m) + " hyperedge lines, found extra data");
    }
    std::vector<long long> tokens = parse_ints(line, line_no);
    Cost cost = 1;
    std::size_t first_vertex = 0;
    if (weighted) {
      if (tokens.empty()) {
        throw std::runtime_error("line " + std::to_string(line_no) + ": missing weight");
      }
      if (tokens[0] < 0) {
        throw std::runtime_error("line " + std::to_string(line_no) + ": negative weight " +
                                 std::to_string(tokens[0]));
      }
      cost = tokens[0];
      first_vertex = 1;
    } else if (tokens.empty()) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": empty hyperedge line");
    }
    std::vector<int> vertices;
    vertices.reserve(tokens.size() - first_vertex);
    for (std::size_t i = first_vertex; i < tokens.size(); ++i) {
      if (tokens[i] < 1 || tokens[i] > n) {
        throw std::runtime_error("line " + std::to_string(line_no) + ": vertex index " +
                                 std::to_string(tokens[i]) + " out of range [1, " +
                                 std::to_string(n) + "]");
      }
      vertices.push_back(static_cast<int>(tokens[i]) - 1);
    }
    edges.emplace_back(std::move(vertices), cost);
  }
  if (static_cast<long long>(edges.size()) != m) {
    throw std::runtime_error("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(m) + " hyperedge lines, found " +
                             std::to_string(edges.size()));
  }
  return Hypergraph::build(static_cast<int>(n), std::move(edges));
}

std::string write_instance(const Hypergraph& g) {
  std::ostringstream out;
  out << g.num_edges() << ' ' << g.num_vertices() << " 1\n";
  for (const Hyperedge& e : g.edges()) {
    out << e.cost;
    for (int v : e.vertices) out << ' ' << v + 1;
    out << '\n';
  }
  return out.str();
}

Hypergraph gen_random(const GenParams& params) {
  if (params.n < 1) throw std::invalid_argument("n must be at least 1");
  if (params.m < 0) throw std::invalid_argument("m must be non-negative");
  if (params.rank_max < 2 || params.rank_max > params.n) {
    throw std::invalid_argument("rank_max must be within [2, n]");
  }
  if (params.weight_max < 1) throw std::invalid_argument("weight_max must be at least 1");

  SplitMix64 rng(params.seed);
  std::vector<std::pair<std::vector<int>, Cost>> edges;
  edges.reserve(params.m);
  std::vector<int> pool(params.n);
  for (int i = 0; i < params.m; ++i) {
    const int size = 2 + static_cast<int>(rng.below(params.rank_max - 1));
    std::iota(pool.begin(), pool.end(), 0);
    for (int j = 0; j < size; ++j) {
      const int pick = j + static_cast<int>(rng.below(params.n - j));
      std::swap(pool[j], pool[pick]);
    }
    std::vector<int> vertices(pool.begin(), pool.begin() + size);
    const Cost cost = 1 + static_cast<Cost>(rng.below(static_cast<std::uint64_t>(params.weight_max)));
    edges.emplace_back(std::move(vertices), cost);
  }
  return Hypergraph::build(params.n, std::move(edges));
}

}  // namespace hkcut
