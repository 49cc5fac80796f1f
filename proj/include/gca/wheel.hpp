#pragma once

#include "gca/graph.hpp"

#include <cstddef>
#include <vector>

namespace gca::wheel {

using graph::Graph;

// Rim 1..n in a cycle, hub n+1 joined to every rim vertex. n odd, >= 3.
Graph wheel(int n);

struct Orientation {
  Graph graph;
  std::vector<bool> forward;  // edge (i,j) points i -> j; always true on loops

  int tail(int e) const;
  int head(int e) const;
  std::vector<int> out_degrees() const;  // a loop is outgoing at its vertex
};

// Orientations in which every vertex other than the last has at most one outgoing edge.
std::vector<Orientation> valid_orientations(const Graph& g);
std::size_t count_valid_orientations(const Graph& g);

// g is a wheel with the given hub: hub joined once to every other vertex, which form one cycle.
bool is_wheel(const Graph& g, int hub);

struct WheelEntry {
  Graph graph;  // relabeled so that the designated vertex is last
  std::size_t orientations = 0;
  bool is_wheel = false;
};

struct WheelReport {
  int max_vertices = 0;
  std::size_t graphs_examined = 0;  // isomorphism classes passing the filter
  std::size_t pairs_examined = 0;   // (class, designated vertex orbit) pairs
  std::vector<WheelEntry> entries;  // pairs that orient validly or are wheels
  bool ok() const;                  // orientable <=> wheel, and wheels orient in exactly 2 ways
};

WheelReport check_wheels_only(int max_vertices);

// True iff no orientation gives every vertex exactly one outgoing edge. Needs min valency 3.
bool one_out_edge_obstruction(const Graph& g);

}  // namespace gca::wheel
