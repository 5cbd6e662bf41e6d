#pragma once

#include <map>
#include <string>
#include <vector>

#include "h8mp/poly.hpp"

namespace h8mp {

struct PolySystem {
  std::vector<std::string> var_names;
  std::vector<Poly> eqs;

  int add_var(const std::string& name) {
    var_names.push_back(name);
    return static_cast<int>(var_names.size()) - 1;
  }
  void add(const Poly& p) {
    if (!p.is_zero()) eqs.push_back(p);
  }
  std::string var_name(int v) const {
    return v < static_cast<int>(var_names.size()) ? var_names[v] : "x" + std::to_string(v);
  }
};

// Branch tree record; replaying the same system reproduces it node for node.
struct SolverTranscript {
  struct Node {
    int id = 0;
    int parent = -1;
    std::string action;
  };
  std::vector<Node> nodes;

  int add(int parent, std::string action) {
    nodes.push_back({static_cast<int>(nodes.size()), parent, std::move(action)});
    return nodes.back().id;
  }
  bool operator==(const SolverTranscript& o) const {
    if (nodes.size() != o.nodes.size()) return false;
    for (size_t k = 0; k < nodes.size(); ++k)
      if (nodes[k].id != o.nodes[k].id || nodes[k].parent != o.nodes[k].parent ||
          nodes[k].action != o.nodes[k].action)
        return false;
    return true;
  }
};

using Assignment = std::map<int, FieldElement>;

// Complete means: every branch ended solved or contradictory, so the listed
// assignments are the entire solution set (and all coordinates lie in the
// field, hence the enumeration is also complete over any field extension).
struct SolutionSet {
  bool complete = true;
  std::vector<Assignment> solutions;
  std::vector<std::string> incomplete_notes;
};

struct SolverOptions {
  int max_nodes = 200000;
  int max_reduction_rounds = 6;
};

SolutionSet solve_system(const PolySystem& sys, SolverTranscript* transcript = nullptr,
                         const SolverOptions& opts = {});

// True when q vanishes at every enumerated solution. With a Complete set this
// certifies the system implies q = 0.
bool vanishes_on_solutions(const SolutionSet& sols, const Poly& q);

}  // namespace h8mp
