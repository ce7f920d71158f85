#pragma once

// Named ground-truth instances used across the test and acceptance suites:
// the pointed-set skeletons PS2/PS3 with the ideal of maps factoring
// through the one-point set, the one-object category Z1 with everything
// null, and chains with a caller-supplied ideal.

#include "sextor/ideal.hpp"

namespace sextor {
namespace fixtures {

struct Instance {
  FinCategory cat;
  Ideal null_ideal;
};

inline Instance ps(int max_size) {
  FinCategory c = build_pointed_sets(max_size);
  Ideal n = ideal_from_objects(c, {*c.find_obj("P1")});
  return {std::move(c), std::move(n)};
}

inline Instance ps2() { return ps(2); }
inline Instance ps3() { return ps(3); }

inline Instance z1() {
  FinCategory c = build_pointed_sets(1);
  Ideal n = Ideal::all(c);
  return {std::move(c), std::move(n)};
}

inline Instance chain(int n, const std::vector<std::string>& null_objs = {}) {
  FinCategory c = build_chain(n);
  std::vector<ObjId> zs;
  for (const auto& s : null_objs) zs.push_back(*c.find_obj(s));
  Ideal ideal = ideal_from_objects(c, zs);
  return {std::move(c), std::move(ideal)};
}

}  // namespace fixtures
}  // namespace sextor
