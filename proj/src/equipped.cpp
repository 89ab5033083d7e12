#include "facto/equipped.hpp"

#include <algorithm>
#include <sstream>

namespace facto {

bool EquippedGroup::o_generates() const {
  return group->is_generating(O);
}

std::string EquippedGroup::describe() const {
  std::ostringstream out;
  out << "|G|=" << group->size() << ", classes:";
  for (const auto& c : classes)
    out << " " << group->cycles(c.representative) << "[" << c.members.size() << "]";
  return out.str();
}

EquippedGroup make_equipment(std::shared_ptr<const FiniteGroup> G,
                             const std::vector<Eid>& representatives) {
  EquippedGroup eg;
  eg.group = std::move(G);
  eg.class_of.assign(eg.group->size(), -1);
  for (Eid rep : representatives) {
    if (rep == 0)
      throw Error(ErrorKind::ParseError, "the identity cannot be an equipment class");
    if (rep >= eg.group->size())
      throw Error(ErrorKind::PositionOutOfRange, "class representative out of range");
    if (eg.class_of[rep] >= 0)
      throw Error(ErrorKind::ParseError, "two representatives lie in the same class");
    ConjClass cls = eg.group->conjugacy_class(rep);
    int32_t idx = static_cast<int32_t>(eg.classes.size());
    for (Eid m : cls.members) eg.class_of[m] = idx;
    eg.O.insert(eg.O.end(), cls.members.begin(), cls.members.end());
    eg.classes.push_back(std::move(cls));
  }
  std::sort(eg.O.begin(), eg.O.end());
  return eg;
}

EquippedGroup make_equipment_cycles(std::shared_ptr<const FiniteGroup> G,
                                    const std::vector<std::string>& rep_cycles) {
  std::vector<Eid> reps;
  for (const auto& s : rep_cycles) {
    Perm p = Perm::parse_cycles(s, G->degree());
    int64_t id = G->index_of(p);
    if (id < 0)
      throw Error(ErrorKind::ParseError, "representative not in group: " + s);
    reps.push_back(static_cast<Eid>(id));
  }
  return make_equipment(std::move(G), reps);
}

}  // namespace facto
