#include "facto/oracle.hpp"

namespace facto {

CGroupOracle::CGroupOracle(const EquippedGroup& eg, const Caps& caps)
    : eg_(&eg), graph_(build_cgraph(eg)) {
  auto [reduced, pruned_verts] = prune_free_factors(graph_);
  pruned_ = std::move(reduced);
  partition_ = refine_partition(pruned_, caps);
  tilde_ = tilde_group(pruned_, partition_);
  t1_ = threshold_T1(graph_);

  vid_full_.assign(eg.G().size(), -1);
  for (Vid v = 0; v < graph_.nv; ++v) vid_full_[graph_.vertex_elem[v]] = static_cast<int32_t>(v);
  vid_pruned_.assign(eg.G().size(), -1);
  for (Vid v = 0; v < pruned_.nv; ++v)
    vid_pruned_[pruned_.vertex_elem[v]] = static_cast<int32_t>(v);
}

Vid CGroupOracle::vertex_of(Eid e) const {
  int32_t v = vid_full_[e];
  if (v < 0) throw Error(ErrorKind::PositionOutOfRange, "element not in O");
  return static_cast<Vid>(v);
}

Word CGroupOracle::pruned_word(const Tuple& t) const {
  Word w;
  w.reserve(t.size());
  for (Eid e : t) {
    int32_t v = vid_pruned_[e];
    if (v >= 0) w.push_back(static_cast<Vid>(v));
  }
  return w;
}

CGroupOracle::Invariant CGroupOracle::invariant(const Tuple& t) const {
  Invariant inv;
  inv.ab.assign(graph_.comps.size(), 0);
  for (Eid e : t) ++inv.ab[graph_.comp_of[vertex_of(e)]];
  inv.tilde_class = word_class(pruned_, partition_, tilde_, pruned_word(t));
  return inv;
}

bool CGroupOracle::equal_in_cgroup(const Tuple& a, const Tuple& b) const {
  return invariant(a) == invariant(b);
}

}  // namespace facto
