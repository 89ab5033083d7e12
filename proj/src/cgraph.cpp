#include "facto/cgraph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace facto {

namespace {

struct UF {
  std::vector<uint32_t> parent;
  explicit UF(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  uint32_t find(uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(uint32_t a, uint32_t b) { parent[find(a)] = find(b); }
};

uint32_t perm_order_on(const CGraph& g, Vid label) {
  // Order of pi_label as a permutation of all vertices.
  uint32_t ord = 1;
  std::vector<bool> seen(g.nv, false);
  for (Vid v = 0; v < g.nv; ++v) {
    if (seen[v]) continue;
    uint32_t len = 0;
    Vid w = v;
    while (!seen[w]) {
      seen[w] = true;
      w = g.pi(label, w);
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

void finalize(CGraph& g, const std::vector<int32_t>* class_of_vertex) {
  g.action_inv.assign(g.action.size(), 0);
  for (Vid u = 0; u < g.nv; ++u)
    for (Vid v = 0; v < g.nv; ++v) g.action_inv[size_t(u) * g.nv + g.pi(u, v)] = v;

  UF uf(g.nv);
  for (Vid u = 0; u < g.nv; ++u)
    for (Vid v = 0; v < g.nv; ++v) uf.unite(v, g.pi(u, v));

  // Components inherit the class numbering; within a class (or for
  // hand-built graphs) ties break by least vertex.
  std::vector<std::pair<std::pair<int32_t, Vid>, uint32_t>> roots;
  std::vector<int32_t> root_seen(g.nv, -1);
  for (Vid v = 0; v < g.nv; ++v) {
    uint32_t r = uf.find(v);
    if (root_seen[r] < 0) {
      int32_t ci = class_of_vertex ? (*class_of_vertex)[v] : -1;
      root_seen[r] = static_cast<int32_t>(roots.size());
      roots.push_back({{ci, v}, r});
    }
  }
  std::sort(roots.begin(), roots.end());

  g.comps.clear();
  g.comps.resize(roots.size());
  std::vector<uint32_t> comp_index_of_root(g.nv, 0);
  for (size_t i = 0; i < roots.size(); ++i) {
    comp_index_of_root[roots[i].second] = static_cast<uint32_t>(i);
    g.comps[i].class_index = roots[i].first.first;
  }
  g.comp_of.assign(g.nv, 0);
  for (Vid v = 0; v < g.nv; ++v) {
    uint32_t c = comp_index_of_root[uf.find(v)];
    g.comp_of[v] = c;
    g.comps[c].verts.push_back(v);
  }

  for (auto& comp : g.comps) {
    uint32_t p = perm_order_on(g, comp.verts.front());
    for (Vid v : comp.verts) {
      uint32_t pv = perm_order_on(g, v);
      if (pv != p)
        throw Error(ErrorKind::Internal, "period not constant on a component");
    }
    comp.period = p;
  }
}

}  // namespace

uint32_t CGraph::period(uint32_t comp) const {
  if (comp >= comps.size())
    throw Error(ErrorKind::PositionOutOfRange, "component index out of range");
  return comps[comp].period;
}

size_t CGraph::canonical_length(const std::vector<uint32_t>& subset) const {
  size_t total = 0;
  if (subset.empty()) {
    for (const auto& c : comps) total += c.verts.size() * c.period;
  } else {
    for (uint32_t ci : subset) total += comps.at(ci).verts.size() * comps.at(ci).period;
  }
  return total;
}

CGraph build_cgraph(const EquippedGroup& eg) {
  CGraph g;
  g.nv = static_cast<uint32_t>(eg.O.size());
  g.vertex_elem = eg.O;  // sorted by element index
  const FiniteGroup& G = eg.G();

  std::vector<int32_t> vid_of(G.size(), -1);
  for (Vid v = 0; v < g.nv; ++v) vid_of[eg.O[v]] = static_cast<int32_t>(v);

  g.action.resize(size_t(g.nv) * g.nv);
  for (Vid u = 0; u < g.nv; ++u) {
    for (Vid v = 0; v < g.nv; ++v) {
      Eid c = G.conj(eg.O[v], eg.O[u]);
      int32_t w = vid_of[c];
      if (w < 0)
        throw Error(ErrorKind::Internal, "O is not closed under conjugation");
      g.action[size_t(u) * g.nv + v] = static_cast<Vid>(w);
    }
  }
  std::vector<int32_t> class_of_vertex(g.nv);
  for (Vid v = 0; v < g.nv; ++v) class_of_vertex[v] = eg.class_of[eg.O[v]];
  finalize(g, &class_of_vertex);
  return g;
}

CGraph assemble_cgraph(uint32_t nv, const std::vector<std::vector<Vid>>& action,
                       bool check_axioms) {
  CGraph g;
  g.nv = nv;
  g.action.resize(size_t(nv) * nv);
  if (action.size() != nv)
    throw Error(ErrorKind::ParseError, "need one action row per label");
  for (Vid u = 0; u < nv; ++u) {
    if (action[u].size() != nv)
      throw Error(ErrorKind::ParseError, "action row has wrong size");
    std::vector<bool> hit(nv, false);
    for (Vid v = 0; v < nv; ++v) {
      Vid w = action[u][v];
      if (w >= nv || hit[w])
        throw Error(ErrorKind::InvalidPermutation, "action row is not a bijection");
      hit[w] = true;
      g.action[size_t(u) * nv + v] = w;
    }
  }
  finalize(g, nullptr);
  if (check_axioms) {
    auto report = validate_cgraph(g);
    if (!report.all_pass)
      throw Error(ErrorKind::PartitionViolation, "assembled graph fails C-graph axioms");
  }
  return g;
}

ValidationReport validate_cgraph(const CGraph& g) {
  ValidationReport rep;
  auto add = [&](const char* cond, bool pass, std::string detail) {
    rep.results.push_back({cond, pass, std::move(detail)});
    rep.all_pass = rep.all_pass && pass;
  };

  // (i) each pi_u is a bijection of the vertex set
  {
    bool pass = true;
    std::string detail;
    for (Vid u = 0; u < g.nv && pass; ++u) {
      std::vector<bool> hit(g.nv, false);
      for (Vid v = 0; v < g.nv; ++v) {
        Vid w = g.pi(u, v);
        if (w >= g.nv || hit[w]) {
          pass = false;
          detail = "label " + std::to_string(u) + " is not a bijection";
          break;
        }
        hit[w] = true;
      }
    }
    add("i", pass, detail);
  }
  // (ii) the edge with tail v and label v is the loop
  {
    bool pass = true;
    std::string detail;
    for (Vid v = 0; v < g.nv; ++v)
      if (g.pi(v, v) != v) {
        pass = false;
        detail = "pi_v(v) != v at vertex " + std::to_string(v);
        break;
      }
    add("ii", pass, detail);
  }
  // (iii) pi_{v2}(v1) = v1 implies pi_{v1}(v2) = v2
  {
    bool pass = true;
    std::string detail;
    for (Vid v1 = 0; v1 < g.nv && pass; ++v1)
      for (Vid v2 = 0; v2 < g.nv; ++v2)
        if (g.pi(v2, v1) == v1 && g.pi(v1, v2) != v2) {
          pass = false;
          detail = "loop at (" + std::to_string(v1) + "," + std::to_string(v2) +
                   ") has no partner loop";
          break;
        }
    add("iii", pass, detail);
  }
  // (iv) pi_{v3} . pi_{v1} = pi_{pi_{v3}(v1)} . pi_{v3}
  {
    bool pass = true;
    std::string detail;
    for (Vid v1 = 0; v1 < g.nv && pass; ++v1)
      for (Vid v3 = 0; v3 < g.nv && pass; ++v3) {
        Vid v2 = g.pi(v3, v1);
        for (Vid v = 0; v < g.nv; ++v)
          if (g.pi(v3, g.pi(v1, v)) != g.pi(v2, g.pi(v3, v))) {
            pass = false;
            detail = "equivariance fails at (v=" + std::to_string(v) +
                     ", v1=" + std::to_string(v1) + ", v3=" + std::to_string(v3) + ")";
            break;
          }
      }
    add("iv", pass, detail);
  }
  // period constancy per component
  {
    bool pass = true;
    std::string detail;
    for (const auto& comp : g.comps) {
      uint32_t p0 = perm_order_on(g, comp.verts.front());
      for (Vid v : comp.verts)
        if (perm_order_on(g, v) != p0) {
          pass = false;
          detail = "period differs inside a component at vertex " + std::to_string(v);
          break;
        }
      if (!pass) break;
    }
    add("period", pass, detail);
  }
  return rep;
}

namespace {

std::vector<Vid> subset_labels(const CGraph& g, const std::vector<uint32_t>& subset) {
  std::vector<Vid> labels;
  for (uint32_t ci : subset) {
    if (ci >= g.comps.size())
      throw Error(ErrorKind::PositionOutOfRange, "component index out of range");
    labels.insert(labels.end(), g.comps[ci].verts.begin(), g.comps[ci].verts.end());
  }
  return labels;
}

}  // namespace

std::vector<uint32_t> all_components(const CGraph& g) {
  std::vector<uint32_t> r(g.comps.size());
  std::iota(r.begin(), r.end(), 0);
  return r;
}

bool is_ample(const CGraph& g, const std::vector<uint32_t>& component_subset) {
  if (component_subset.empty()) return false;
  std::vector<Vid> labels = subset_labels(g, component_subset);
  for (const auto& comp : g.comps) {
    // reachability from any one vertex must cover the component
    std::vector<bool> seen(g.nv, false);
    std::deque<Vid> todo{comp.verts.front()};
    seen[comp.verts.front()] = true;
    size_t reached = 1;
    while (!todo.empty()) {
      Vid v = todo.front();
      todo.pop_front();
      for (Vid u : labels) {
        Vid w = g.pi(u, v);
        if (!seen[w]) {
          seen[w] = true;
          ++reached;
          todo.push_back(w);
        }
      }
    }
    if (reached != comp.verts.size()) return false;
  }
  return true;
}

uint32_t diameter(const CGraph& g, const std::vector<uint32_t>& component_subset) {
  if (!is_ample(g, component_subset))
    throw Error(ErrorKind::NotAmple, "component subset is not ample");
  std::vector<Vid> labels = subset_labels(g, component_subset);
  uint32_t diam = 0;
  std::vector<int32_t> dist(g.nv);
  for (Vid src = 0; src < g.nv; ++src) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[src] = 0;
    std::deque<Vid> todo{src};
    while (!todo.empty()) {
      Vid v = todo.front();
      todo.pop_front();
      for (Vid u : labels) {
        Vid w = g.pi(u, v);
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          todo.push_back(w);
        }
      }
    }
    for (Vid t : g.comps[g.comp_of[src]].verts)
      diam = std::max(diam, static_cast<uint32_t>(dist[t]));
  }
  return diam;
}

std::vector<std::pair<Vid, uint32_t>> canonical_exponents(
    const CGraph& g, const std::vector<uint32_t>& component_subset) {
  std::vector<std::pair<Vid, uint32_t>> out;
  for (uint32_t ci : component_subset) {
    const auto& comp = g.comps.at(ci);
    for (Vid v : comp.verts) out.emplace_back(v, comp.period);
  }
  return out;
}

uint64_t threshold_T1(const CGraph& g) {
  uint64_t d = diameter(g, all_components(g));
  uint64_t m = 0;
  for (const auto& comp : g.comps)
    m = std::max(m, uint64_t(comp.verts.size()) * comp.period);
  return (d + 1) * m + 1;
}

std::pair<CGraph, std::vector<Vid>> prune_free_factors(const CGraph& g) {
  std::vector<Vid> pruned;
  std::vector<Vid> kept;
  for (const auto& comp : g.comps) {
    if (comp.period == 1) {
      // a period-1 label acts trivially and, by condition (iii), its vertex
      // is fixed by every label, so it splits off as a free factor
      pruned.insert(pruned.end(), comp.verts.begin(), comp.verts.end());
    } else {
      kept.insert(kept.end(), comp.verts.begin(), comp.verts.end());
    }
  }
  std::sort(kept.begin(), kept.end());
  std::sort(pruned.begin(), pruned.end());

  CGraph out;
  out.nv = static_cast<uint32_t>(kept.size());
  std::vector<int32_t> new_vid(g.nv, -1);
  for (Vid i = 0; i < out.nv; ++i) new_vid[kept[i]] = static_cast<int32_t>(i);
  if (!g.vertex_elem.empty()) {
    out.vertex_elem.resize(out.nv);
    for (Vid i = 0; i < out.nv; ++i) out.vertex_elem[i] = g.vertex_elem[kept[i]];
  }
  out.action.resize(size_t(out.nv) * out.nv);
  for (Vid u = 0; u < out.nv; ++u)
    for (Vid v = 0; v < out.nv; ++v) {
      Vid w = g.pi(kept[u], kept[v]);
      out.action[size_t(u) * out.nv + v] = static_cast<Vid>(new_vid[w]);
    }
  std::vector<int32_t> class_of_vertex;
  const std::vector<int32_t>* cls = nullptr;
  if (!g.comps.empty() && g.comps.front().class_index >= 0) {
    class_of_vertex.resize(out.nv);
    for (Vid v = 0; v < out.nv; ++v)
      class_of_vertex[v] = g.comps[g.comp_of[kept[v]]].class_index;
    cls = &class_of_vertex;
  }
  finalize(out, cls);
  return {std::move(out), std::move(pruned)};
}

}  // namespace facto
