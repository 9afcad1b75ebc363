#pragma once

#include <Eigen/Dense>
#include <cctype>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "wsbm/errors.hpp"

namespace wsbm {

/// Symmetric real weight matrix with zero diagonal: the observed network.
/// Immutable after construction; share freely across threads.
class WeightedGraph {
 public:
  explicit WeightedGraph(Eigen::MatrixXd weights) : w_(std::move(weights)) {
    const Eigen::Index n = w_.rows();
    if (n < 3 || w_.cols() != n)
      throw InputError("WeightedGraph: need a square matrix with n >= 3");
    for (Eigen::Index i = 0; i < n; ++i) {
      if (w_(i, i) != 0.0) throw InputError("WeightedGraph: nonzero diagonal entry");
      for (Eigen::Index j = i + 1; j < n; ++j)
        if (w_(i, j) != w_(j, i)) throw InputError("WeightedGraph: asymmetric weights");
    }
  }

  int n() const { return static_cast<int>(w_.rows()); }
  double operator()(int i, int j) const { return w_(i, j); }
  const Eigen::MatrixXd& weights() const { return w_; }

 private:
  Eigen::MatrixXd w_;
};

enum class DuplicatePolicy { Sum, Max, Last, Error };

struct EdgeListOptions {
  int index_base = 1;
  DuplicatePolicy duplicates = DuplicatePolicy::Sum;  // interaction counts accumulate
  double missing_weight = 0.0;
};

/// Parse an edge list: one `<i> <j> <w> [ignored...]` record per line,
/// whitespace or comma separated, `#` comments skipped. Absent pairs get
/// opts.missing_weight; n is the largest node index observed.
inline WeightedGraph parse_edge_list(std::istream& in, const EdgeListOptions& opts = {}) {
  if (opts.index_base != 0 && opts.index_base != 1)
    throw InputError("parse_edge_list: index base must be 0 or 1");

  std::map<std::pair<int, int>, double> edges;
  int max_node = -1;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    for (char& c : line)
      if (c == ',') c = ' ';
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;

    std::istringstream ls(line);
    long ri, rj;
    double w;
    if (!(ls >> ri >> rj >> w))
      throw InputError("parse_edge_list: malformed record at line " + std::to_string(lineno));
    int i = static_cast<int>(ri) - opts.index_base;
    int j = static_cast<int>(rj) - opts.index_base;
    if (i < 0 || j < 0)
      throw InputError("parse_edge_list: node index below base at line " + std::to_string(lineno));
    if (i == j)
      throw InputError("parse_edge_list: self-loop record at line " + std::to_string(lineno));
    if (i > j) std::swap(i, j);
    max_node = std::max(max_node, j);

    auto key = std::make_pair(i, j);
    auto it = edges.find(key);
    if (it == edges.end()) {
      edges.emplace(key, w);
    } else {
      switch (opts.duplicates) {
        case DuplicatePolicy::Sum: it->second += w; break;
        case DuplicatePolicy::Max: it->second = std::max(it->second, w); break;
        case DuplicatePolicy::Last: it->second = w; break;
        case DuplicatePolicy::Error:
          throw InputError("parse_edge_list: duplicate edge record at line " +
                           std::to_string(lineno));
      }
    }
  }
  if (max_node + 1 < 3) throw InputError("parse_edge_list: fewer than 3 nodes");

  const int n = max_node + 1;
  Eigen::MatrixXd w = Eigen::MatrixXd::Constant(n, n, opts.missing_weight);
  w.diagonal().setZero();
  for (const auto& [key, val] : edges) {
    w(key.first, key.second) = val;
    w(key.second, key.first) = val;
  }
  return WeightedGraph(std::move(w));
}

/// Serialize the lower triangle, 1-indexed, weights at 17 significant digits.
/// parse(serialize(g)) reproduces g bitwise (zero weights are omitted, so use
/// missing_weight = 0 when re-reading).
inline void serialize_edge_list(const WeightedGraph& g, std::ostream& out) {
  char buf[64];
  for (int i = 1; i < g.n(); ++i)
    for (int j = 0; j < i; ++j) {
      if (g(i, j) == 0.0) continue;
      std::snprintf(buf, sizeof(buf), "%d %d %.17g\n", i + 1, j + 1, g(i, j));
      out << buf;
    }
}

/// Binary thresholding: out[i][j] = 1 iff g[i][j] > t0 (strict).
inline WeightedGraph dichotomize(const WeightedGraph& g, double t0) {
  const int n = g.n();
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && g(i, j) > t0) w(i, j) = 1.0;
  return WeightedGraph(std::move(w));
}

/// Entrywise l-th power of the off-diagonal weights.
inline Eigen::MatrixXd elementwise_power(const WeightedGraph& g, int l) {
  if (l < 1) throw InputError("elementwise_power: l must be >= 1");
  if (l == 1) return g.weights();
  Eigen::MatrixXd out = g.weights().array().pow(static_cast<double>(l));
  out.diagonal().setZero();
  return out;
}

}  // namespace wsbm
