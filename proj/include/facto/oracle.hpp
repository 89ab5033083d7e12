#ifndef FACTO_ORACLE_HPP
#define FACTO_ORACLE_HPP

#include <memory>

#include "facto/partition.hpp"
#include "facto/tuples.hpp"

namespace facto {

// Decision data for the C-group of an equipment: the full graph, the graph
// with free factors pruned, the word-class partition of the pruned graph and
// its realized group. An element of the C-group is pinned exactly by its
// per-component letter counts together with its class in the realized group
// (the kernel of the quotient meets the kernel of ab trivially), which is
// what equal_in_cgroup compares.
class CGroupOracle {
public:
  explicit CGroupOracle(const EquippedGroup& eg, const Caps& caps = Caps{});

  const EquippedGroup& equipment() const { return *eg_; }
  const CGraph& graph() const { return graph_; }
  const CGraph& pruned() const { return pruned_; }
  const WordClassPartition& partition() const { return partition_; }
  const TildeGroup& tilde() const { return tilde_; }
  uint64_t threshold_t1() const { return t1_; }

  struct Invariant {
    std::vector<uint32_t> ab;   // per full-graph component, exact counts
    uint32_t tilde_class;       // class of the pruned word
    bool operator==(const Invariant& o) const {
      return ab == o.ab && tilde_class == o.tilde_class;
    }
  };

  Invariant invariant(const Tuple& t) const;
  bool equal_in_cgroup(const Tuple& a, const Tuple& b) const;

  // Word over the pruned graph corresponding to a tuple (letters from
  // period-1 free factors are dropped; they are tracked by ab alone).
  Word pruned_word(const Tuple& t) const;

  Vid vertex_of(Eid e) const;                      // full-graph vertex
  uint32_t component_count_bound() const { return static_cast<uint32_t>(graph_.comps.size()); }

private:
  const EquippedGroup* eg_;
  CGraph graph_;
  CGraph pruned_;
  WordClassPartition partition_;
  TildeGroup tilde_;
  uint64_t t1_ = 0;
  std::vector<int32_t> vid_full_;    // element -> full-graph vertex
  std::vector<int32_t> vid_pruned_;  // element -> pruned-graph vertex (-1 if pruned)
};

}  // namespace facto

#endif
