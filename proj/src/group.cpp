#include "facto/group.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <sstream>

namespace facto {

namespace {

uint64_t hash_bytes(const uint8_t* p, size_t n) {
  uint64_t h = 0x9e3779b97f4a7c15ull;
  for (size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdull;
  h ^= h >> 33;
  return h;
}

}  // namespace

bool Subgroup::contains(Eid g) const {
  return std::binary_search(members.begin(), members.end(), g);
}

Perm FiniteGroup::perm(Eid g) const {
  return Perm(std::vector<uint8_t>(image(g), image(g) + degree_));
}

void FiniteGroup::rebuild_index() {
  size_t want = 2;
  while (want < count_ * 2) want <<= 1;
  slots_.assign(want, UINT32_MAX);
  slot_mask_ = static_cast<uint32_t>(want - 1);
  for (Eid e = 0; e < count_; ++e) {
    uint64_t h = hash_bytes(image(e), degree_);
    uint32_t s = static_cast<uint32_t>(h) & slot_mask_;
    while (slots_[s] != UINT32_MAX) s = (s + 1) & slot_mask_;
    slots_[s] = e;
  }
}

Eid FiniteGroup::intern_find(const uint8_t* img) const {
  uint64_t h = hash_bytes(img, degree_);
  uint32_t s = static_cast<uint32_t>(h) & slot_mask_;
  while (slots_[s] != UINT32_MAX) {
    Eid e = slots_[s];
    if (std::memcmp(image(e), img, degree_) == 0) return e;
    s = (s + 1) & slot_mask_;
  }
  return static_cast<Eid>(count_);
}

int64_t FiniteGroup::index_of(const Perm& p) const {
  if (p.degree() != degree_) {
    if (p.degree() > degree_) return -1;
    Perm q = p.extended(degree_);
    Eid e = intern_find(q.images().data());
    return e == count_ ? -1 : int64_t(e);
  }
  Eid e = intern_find(p.images().data());
  return e == count_ ? -1 : int64_t(e);
}

FiniteGroup FiniteGroup::close_generators(uint32_t degree, std::vector<Perm> gens,
                                          size_t cap) {
  if (cap < 1) throw Error(ErrorKind::CapExceeded, "cap must be >= 1");
  for (auto& g : gens) {
    if (g.degree() > degree)
      throw Error(ErrorKind::InvalidPermutation, "generator degree exceeds group degree");
    g = g.extended(degree);
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  gens.erase(std::remove_if(gens.begin(), gens.end(),
                            [](const Perm& p) { return p.is_identity(); }),
             gens.end());

  FiniteGroup G;
  G.degree_ = degree;
  G.gens_ = gens;
  G.arena_.reserve((gens.size() + 1) * degree);

  auto push = [&](const uint8_t* img) -> Eid {
    G.arena_.insert(G.arena_.end(), img, img + degree);
    ++G.count_;
    return static_cast<Eid>(G.count_ - 1);
  };

  Perm id(degree);
  push(id.images().data());
  G.rebuild_index();

  std::vector<uint8_t> buf(degree);
  for (Eid e = 0; e < G.count_; ++e) {
    for (const Perm& g : gens) {
      const uint8_t* base = G.image(e);
      for (uint32_t x = 0; x < degree; ++x) buf[x] = g[base[x]];  // e then g
      if (G.intern_find(buf.data()) == G.count_) {
        if (G.count_ + 1 > cap)
          throw Error(ErrorKind::CapExceeded, "group closure exceeds cap");
        push(buf.data());
        if (G.count_ * 2 > G.slots_.size()) G.rebuild_index();
        else {
          uint64_t h = hash_bytes(buf.data(), degree);
          uint32_t s = static_cast<uint32_t>(h) & G.slot_mask_;
          while (G.slots_[s] != UINT32_MAX) s = (s + 1) & G.slot_mask_;
          G.slots_[s] = static_cast<Eid>(G.count_ - 1);
        }
      }
    }
  }

  G.gen_ids_.reserve(gens.size());
  for (const Perm& g : gens)
    G.gen_ids_.push_back(static_cast<Eid>(G.intern_find(g.images().data())));

  G.inverse_.resize(G.count_);
  std::vector<uint8_t> invbuf(degree);
  for (Eid e = 0; e < G.count_; ++e) {
    const uint8_t* img = G.image(e);
    for (uint32_t x = 0; x < degree; ++x) invbuf[img[x]] = static_cast<uint8_t>(x);
    G.inverse_[e] = G.intern_find(invbuf.data());
  }

  if (G.count_ <= kDenseLimit) {
    G.table_.resize(G.count_ * G.count_);
    std::vector<uint8_t> prod(degree);
    for (Eid a = 0; a < G.count_; ++a) {
      const uint8_t* ia = G.image(a);
      for (Eid b = 0; b < G.count_; ++b) {
        const uint8_t* ib = G.image(b);
        for (uint32_t x = 0; x < degree; ++x) prod[x] = ib[ia[x]];
        G.table_[size_t(a) * G.count_ + b] = G.intern_find(prod.data());
      }
    }
  }
  return G;
}

Eid FiniteGroup::mult(Eid a, Eid b) const {
  if (!table_.empty()) return table_[size_t(a) * count_ + b];
  const uint8_t* ia = image(a);
  const uint8_t* ib = image(b);
  uint8_t buf[256];
  for (uint32_t x = 0; x < degree_; ++x) buf[x] = ib[ia[x]];
  return intern_find(buf);
}

Eid FiniteGroup::conj(Eid g, Eid by) const {
  if (!table_.empty()) return mult(mult(inv(by), g), by);
  const uint8_t* ig = image(g);
  const uint8_t* ib = image(by);
  uint8_t buf[256];
  for (uint32_t x = 0; x < degree_; ++x) buf[ib[x]] = ib[ig[x]];
  return intern_find(buf);
}

int FiniteGroup::element_order(Eid g) const {
  int n = 1;
  Eid e = g;
  while (e != 0) {
    e = mult(e, g);
    ++n;
  }
  return n;
}

ConjClass FiniteGroup::conjugacy_class(Eid g) const {
  if (g >= count_) throw Error(ErrorKind::PositionOutOfRange, "element index out of range");
  std::vector<bool> seen(count_, false);
  std::deque<Eid> todo{g};
  seen[g] = true;
  ConjClass cls;
  cls.members.push_back(g);
  while (!todo.empty()) {
    Eid e = todo.front();
    todo.pop_front();
    for (Eid h : gen_ids_) {
      Eid c = conj(e, h);
      if (!seen[c]) {
        seen[c] = true;
        cls.members.push_back(c);
        todo.push_back(c);
      }
    }
  }
  std::sort(cls.members.begin(), cls.members.end());
  cls.representative = cls.members.front();
  return cls;
}

const std::vector<ConjClass>& FiniteGroup::conjugacy_classes() const {
  if (!classes_.empty() || count_ == 0) return classes_;
  std::vector<bool> done(count_, false);
  for (Eid e = 0; e < count_; ++e) {
    if (done[e]) continue;
    ConjClass cls = conjugacy_class(e);
    for (Eid m : cls.members) done[m] = true;
    classes_.push_back(std::move(cls));
  }
  return classes_;
}

Subgroup FiniteGroup::centralizer(const std::vector<Eid>& S) const {
  Subgroup result;
  for (Eid g = 0; g < count_; ++g) {
    bool ok = true;
    for (Eid s : S)
      if (mult(g, s) != mult(s, g)) {
        ok = false;
        break;
      }
    if (ok) result.members.push_back(g);
  }
  return result;
}

Subgroup FiniteGroup::center() const {
  // The centralizer of a generating set is the centralizer of the group.
  return centralizer(gen_ids_);
}

Subgroup FiniteGroup::subgroup_generated(const std::vector<Eid>& elems) const {
  std::vector<bool> seen(count_, false);
  std::vector<Eid> order{0};
  seen[0] = true;
  std::vector<Eid> gens;
  for (Eid e : elems)
    if (e < count_) gens.push_back(e);
  for (size_t i = 0; i < order.size(); ++i) {
    for (Eid g : gens) {
      Eid p = mult(order[i], g);
      if (!seen[p]) {
        seen[p] = true;
        order.push_back(p);
      }
    }
  }
  Subgroup H;
  H.members = std::move(order);
  std::sort(H.members.begin(), H.members.end());
  return H;
}

bool FiniteGroup::is_generating(const std::vector<Eid>& elems) const {
  // Incremental closure with early exit once the whole group is reached.
  std::vector<bool> seen(count_, false);
  std::vector<Eid> order{0};
  seen[0] = true;
  size_t found = 1;
  for (size_t i = 0; i < order.size(); ++i) {
    for (Eid g : elems) {
      Eid p = mult(order[i], g);
      if (!seen[p]) {
        seen[p] = true;
        order.push_back(p);
        if (++found == count_) return true;
      }
    }
  }
  return found == count_;
}

Subgroup FiniteGroup::commutator_subgroup() const {
  // Normal closure of the commutators of the generators: G modulo it is
  // abelian, and every commutator lies in any normal subgroup with abelian
  // quotient.
  std::vector<Eid> hgens;
  for (Eid a : gen_ids_)
    for (Eid b : gen_ids_) {
      Eid c = mult(mult(inv(a), inv(b)), mult(a, b));
      if (c != 0) hgens.push_back(c);
    }
  Subgroup H = subgroup_generated(hgens);
  for (;;) {
    std::vector<Eid> fresh;
    for (Eid m : H.members)
      for (Eid g : gen_ids_) {
        Eid c = conj(m, g);
        if (!H.contains(c)) fresh.push_back(c);
      }
    if (fresh.empty()) break;
    hgens.insert(hgens.end(), fresh.begin(), fresh.end());
    H = subgroup_generated(hgens);
  }
  return H;
}

FiniteGroup parse_group_file(const std::string& text, size_t cap) {
  std::istringstream in(text);
  std::string line;
  uint32_t degree = 0;
  std::vector<Perm> gens;
  std::vector<std::string> cycle_lines;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    size_t a = line.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) continue;
    size_t b = line.find_last_not_of(" \t\r\n");
    line = line.substr(a, b - a + 1);
    if (line.rfind("degree:", 0) == 0) {
      degree = static_cast<uint32_t>(std::stoul(line.substr(7)));
      continue;
    }
    cycle_lines.push_back(line);
  }
  for (const auto& cl : cycle_lines) gens.push_back(Perm::parse_cycles(cl));
  uint32_t d = degree;
  for (const auto& g : gens) d = std::max(d, g.degree());
  if (d == 0) d = 1;
  for (auto& g : gens) g = g.extended(d);
  return FiniteGroup::close_generators(d, std::move(gens), cap);
}

}  // namespace facto
