#include "facto/tuples.hpp"

#include <numeric>
#include <sstream>

namespace facto {

uint32_t TypeVector::total() const {
  return std::accumulate(counts.begin(), counts.end(), 0u);
}

std::string TypeVector::str() const {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < counts.size(); ++i) {
    if (i) out << ",";
    out << counts[i];
  }
  out << ")";
  return out.str();
}

void check_tuple(const EquippedGroup& eg, const Tuple& t) {
  for (Eid e : t)
    if (e >= eg.G().size() || eg.class_of[e] < 0)
      throw Error(ErrorKind::PositionOutOfRange, "tuple entry not in O");
}

Tuple hurwitz_move(const EquippedGroup& eg, const Tuple& t, uint32_t pos, MoveDir dir) {
  if (pos < 1 || pos >= t.size())
    throw Error(ErrorKind::PositionOutOfRange, "move position out of range");
  const FiniteGroup& G = eg.G();
  Tuple r = t;
  Eid a = t[pos - 1], b = t[pos];
  if (dir == MoveDir::forward) {
    r[pos - 1] = b;
    r[pos] = G.conj(a, b);           // b^{-1} a b
  } else {
    r[pos - 1] = G.conj(b, G.inv(a));  // a b a^{-1}
    r[pos] = a;
  }
  return r;
}

Eid alpha(const EquippedGroup& eg, const Tuple& t) {
  const FiniteGroup& G = eg.G();
  Eid p = 0;
  for (Eid e : t) p = G.mult(p, e);
  return p;
}

TypeVector type_of(const EquippedGroup& eg, const Tuple& t) {
  TypeVector tv;
  tv.counts.assign(eg.num_classes(), 0);
  for (Eid e : t) {
    int32_t c = eg.class_of[e];
    if (c < 0) throw Error(ErrorKind::PositionOutOfRange, "tuple entry not in O");
    ++tv.counts[c];
  }
  return tv;
}

Subgroup generated_subgroup(const EquippedGroup& eg, const Tuple& t) {
  return eg.G().subgroup_generated(t);
}

bool tuple_generates(const EquippedGroup& eg, const Tuple& t) {
  return eg.G().is_generating(t);
}

Tuple conjugate_tuple(const EquippedGroup& eg, Eid g, const Tuple& t) {
  const FiniteGroup& G = eg.G();
  Tuple r;
  r.reserve(t.size());
  Eid ginv = G.inv(g);
  for (Eid e : t) r.push_back(G.conj(e, ginv));  // g e g^{-1}
  return r;
}

Tuple lambda_tuple(const EquippedGroup& eg, Eid g, const Tuple& t) {
  return conjugate_tuple(eg, eg.G().inv(g), t);
}

Tuple rho_S(const EquippedGroup& eg, const Tuple& s, const Tuple& t) {
  return conjugate_tuple(eg, alpha(eg, s), t);
}

Tuple lambda_S(const EquippedGroup& eg, const Tuple& s, const Tuple& t) {
  return lambda_tuple(eg, alpha(eg, s), t);
}

Tuple concat(const Tuple& a, const Tuple& b) {
  Tuple r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

std::string tuple_str(const EquippedGroup& eg, const Tuple& t) {
  std::ostringstream out;
  out << "[";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) out << ", ";
    out << eg.G().cycles(t[i]);
  }
  out << "]";
  return out.str();
}

}  // namespace facto
