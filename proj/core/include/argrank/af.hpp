#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace argrank {

// Finite directed attack graph. Node identity is positional; labels are
// unique display strings. Edges are kept sorted and duplicate-free, so a
// framework compares and serializes deterministically.
struct AbstractAF {
  std::vector<std::string> labels;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;

  std::size_t size() const { return labels.size(); }

  void add_edge(std::uint32_t from, std::uint32_t to);
  void finalize();  // sort + dedupe edges; call once after bulk insertion

  // attackers_of(n) = sorted list of nodes with an edge into n.
  std::vector<std::vector<std::uint32_t>> attacker_lists() const;

  // Stable content hash over labels and edges.
  std::string fingerprint() const;
};

}  // namespace argrank
