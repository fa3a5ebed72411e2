#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "omset/hf.hpp"
#include "omset/lattice.hpp"

namespace omset {

using NodeId = int;

// One element of the bounded-rank universe over a fixed Logic: an assignment
// of lattice values to previously built nodes. Entries are kept sorted.
// Directly constructed nodes have distinct children; restriction keeps one
// entry per pre-image child, so a restricted node may carry the same child
// twice with different values. All truth-value formulas iterate entries.
struct NodeData {
  std::vector<std::pair<NodeId, Elem>> entries;
  int rank = 1;
  Subset support = 0;
};

// Arena of structurally deduplicated nodes over one Logic. Nodes are append
// only; ids are stable and children always precede parents.
class Universe {
 public:
  explicit Universe(const Logic& logic) : logic_(&logic) {
    intern({});  // id 0 is the empty node
  }

  const Logic& logic() const { return *logic_; }
  int size() const { return static_cast<int>(nodes_.size()); }
  const NodeData& node(NodeId id) const { return nodes_[id]; }
  int rank(NodeId id) const { return nodes_[id].rank; }
  Subset support(NodeId id) const { return nodes_[id].support; }

  NodeId emptyNode() const { return 0; }

  // Canonicalizes (sorts) the entries and returns the unique node id.
  NodeId intern(std::vector<std::pair<NodeId, Elem>> entries);

  // u|_p: hereditary meet of every value with p, one entry per entry of u.
  NodeId restrictNode(NodeId u, Elem p);

  // Check embedding: all values 1, children embedded recursively.
  NodeId checkEmbed(const Hf& set);

  // u_b: the single-entry node {empty -> b}.
  NodeId makeUb(Elem b);

  Subset supportOfAll(const std::vector<NodeId>& nodes) const;

  // com of a node tuple: commutator of the union of supports.
  Elem qsetCommutator(const std::vector<NodeId>& nodes) const;

  // Q(A) = L(A)^{!!}.
  Subset generatedLogic(const std::vector<NodeId>& nodes) const;

  std::string toString(NodeId id) const;

 private:
  const Logic* logic_;
  std::vector<NodeData> nodes_;
  std::unordered_map<std::string, NodeId> index_;
  std::unordered_map<std::uint64_t, NodeId> restrictMemo_;

  static std::string keyOf(const std::vector<std::pair<NodeId, Elem>>& e);
};

struct FragmentLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The nodes of V^(Q) up to rankBound with domains of at most domCap children,
// enumerated deterministically (by rank, then lexicographic entries).
struct Fragment {
  int rankBound = 0;
  int domCap = 0;
  std::vector<NodeId> nodes;
};

// Enumerates every function from a subset (size <= domCap) of lower strata to
// the carrier. Throws FragmentLimitError when the enumeration would exceed
// nodeBudget nodes.
Fragment buildFragment(Universe& u, int rankBound, int domCap,
                       long nodeBudget = 1000000);

// Copies a node between universes over different logics through an element
// map (parent elem -> target elem, -1 meaning not representable).
NodeId mapNode(const Universe& from, NodeId id, Universe& to,
               const std::vector<Elem>& elemMap);

// Node literal syntax used by the CLI:
//   {}                      empty node
//   {<lit>: <elem>, ...}    entries by element name
//   check(<hf-literal>)     check embedding
//   ub(<elem>)              single-entry node
NodeId parseNodeLiteral(Universe& u, const std::string& text);

}  // namespace omset
