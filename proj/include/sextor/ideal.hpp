#pragma once

// Closed ideals of null morphisms. An ideal is stored extensionally as a
// bitset over MorId so the quantifier sweeps in the kernel searches get
// O(1) membership. Closedness witnesses (factorizations through a null
// object) are kept alongside.

#include "sextor/core.hpp"

namespace sextor {

class Ideal {
 public:
  Ideal() = default;
  explicit Ideal(std::size_t n_morphisms) : member_(n_morphisms, 0) {}

  static Ideal from_morphisms(const FinCategory& c, const std::vector<MorId>& ms) {
    Ideal n(c.n_morphisms());
    for (MorId m : ms) n.member_[m] = 1;
    return n;
  }
  static Ideal all(const FinCategory& c) {
    Ideal n(c.n_morphisms());
    std::fill(n.member_.begin(), n.member_.end(), char(1));
    return n;
  }
  static Ideal none(const FinCategory& c) { return Ideal(c.n_morphisms()); }

  bool contains(MorId m) const { return member_[m] != 0; }
  std::size_t size() const {
    std::size_t s = 0;
    for (char b : member_) s += std::size_t(b != 0);
    return s;
  }
  std::vector<MorId> members() const {
    std::vector<MorId> out;
    for (MorId m = 0; m < member_.size(); ++m)
      if (member_[m]) out.push_back(m);
    return out;
  }

  /// Factorization of a member through a null object, as (f, g) with g∘f = m.
  std::optional<std::pair<MorId, MorId>> closure_witness(MorId m) const {
    auto it = witness_.find(m);
    if (it == witness_.end()) return std::nullopt;
    return it->second;
  }
  void set_witness(MorId m, MorId f, MorId g) { witness_[m] = {f, g}; }

  bool operator==(const Ideal& o) const { return member_ == o.member_; }

 private:
  std::vector<char> member_;
  std::map<MorId, std::pair<MorId, MorId>> witness_;
};

/// Absorption check: for every member n and composable g, f, both g∘n and
/// n∘f stay in the set. On failure returns the violating composite.
struct IdealCheck {
  bool ok = true;
  std::string witness;  // e.g. "r . i = id1 not in N"
};

inline IdealCheck is_ideal(const FinCategory& c, const Ideal& n) {
  IdealCheck r;
  for (MorId m = 0; m < c.n_morphisms(); ++m) {
    if (!n.contains(m)) continue;
    for (MorId g : c.outof(c.cod(m))) {
      MorId gm = c.try_compose(g, m);
      if (gm != kNoMor && !n.contains(gm)) {
        r.ok = false;
        r.witness = c.mor_name(g) + " . " + c.mor_name(m) + " = " + c.mor_name(gm);
        return r;
      }
    }
    for (MorId f : c.into(c.dom(m))) {
      MorId mf = c.try_compose(m, f);
      if (mf != kNoMor && !n.contains(mf)) {
        r.ok = false;
        r.witness = c.mor_name(m) + " . " + c.mor_name(f) + " = " + c.mor_name(mf);
        return r;
      }
    }
  }
  return r;
}

/// Objects whose identity is null, in canonical name order.
inline std::vector<ObjId> null_objects(const FinCategory& c, const Ideal& n) {
  std::vector<ObjId> out;
  for (ObjId o = 0; o < c.n_objects(); ++o)
    if (n.contains(c.identity(o))) out.push_back(o);
  std::sort(out.begin(), out.end(),
            [&](ObjId a, ObjId b) { return c.obj_name_less(a, b); });
  return out;
}

inline bool is_null_object(const FinCategory& c, const Ideal& n, ObjId o) {
  return n.contains(c.identity(o));
}

/// Closedness: every member factors through a null object. Returns false
/// plus the first member with no factorization; on success records a
/// witness per member into `n` if `record` is set.
struct ClosednessCheck {
  bool ok = true;
  MorId failing = kNoMor;
};

inline ClosednessCheck is_closed(const FinCategory& c, Ideal& n, bool record = true) {
  ClosednessCheck r;
  std::vector<ObjId> nulls = null_objects(c, n);
  for (MorId m = 0; m < c.n_morphisms(); ++m) {
    if (!n.contains(m)) continue;
    bool found = false;
    for (ObjId z : nulls) {
      for (MorId f : c.hom(c.dom(m), z)) {
        for (MorId g : c.hom(z, c.cod(m))) {
          if (c.try_compose(g, f) == m) {
            if (record) n.set_witness(m, f, g);
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) {
      r.ok = false;
      r.failing = m;
      return r;
    }
  }
  return r;
}

inline ClosednessCheck is_closed(const FinCategory& c, const Ideal& n) {
  Ideal copy = n;
  return is_closed(c, copy, false);
}

/// The ideal of morphisms factoring through an object of Z, with closure
/// witnesses. Always passes is_ideal and is_closed.
inline Ideal ideal_from_objects(const FinCategory& c, const std::vector<ObjId>& zs) {
  std::vector<ObjId> z = zs;
  std::sort(z.begin(), z.end(), [&](ObjId a, ObjId b) { return c.obj_name_less(a, b); });
  Ideal n(c.n_morphisms());
  std::vector<MorId> found;
  for (MorId m = 0; m < c.n_morphisms(); ++m) {
    for (ObjId mid : z) {
      for (MorId f : c.hom(c.dom(m), mid)) {
        for (MorId g : c.hom(mid, c.cod(m))) {
          if (c.try_compose(g, f) == m) {
            found.push_back(m);
            n.set_witness(m, f, g);
            goto next_mor;
          }
        }
      }
    }
  next_mor:;
  }
  Ideal out = Ideal::from_morphisms(c, found);
  for (MorId m : found) {
    auto w = n.closure_witness(m);
    out.set_witness(m, w->first, w->second);
  }
  return out;
}

/// Two-sided compositional closure of a generating set (cross-check for
/// ideal_from_objects; the object-generated ideal is already closed).
inline Ideal ideal_closure(const FinCategory& c, const Ideal& gen) {
  std::vector<char> in(c.n_morphisms(), 0);
  std::vector<MorId> work = gen.members();
  for (MorId m : work) in[m] = 1;
  while (!work.empty()) {
    MorId m = work.back();
    work.pop_back();
    for (MorId g : c.outof(c.cod(m))) {
      MorId gm = c.try_compose(g, m);
      if (gm != kNoMor && !in[gm]) {
        in[gm] = 1;
        work.push_back(gm);
      }
    }
    for (MorId f : c.into(c.dom(m))) {
      MorId mf = c.try_compose(m, f);
      if (mf != kNoMor && !in[mf]) {
        in[mf] = 1;
        work.push_back(mf);
      }
    }
  }
  std::vector<MorId> all;
  for (MorId m = 0; m < c.n_morphisms(); ++m)
    if (in[m]) all.push_back(m);
  return Ideal::from_morphisms(c, all);
}

/// ξ reflects null morphisms: ξ∘a null implies a null, over all a into dom ξ.
inline bool reflects_null(const FinCategory& c, const Ideal& n, MorId xi) {
  for (MorId a : c.into(c.dom(xi))) {
    MorId xa = c.try_compose(xi, a);
    if (xa != kNoMor && n.contains(xa) && !n.contains(a)) return false;
  }
  return true;
}

/// Dual: a∘ξ null implies a null, over all a out of cod ξ.
inline bool coreflects_null(const FinCategory& c, const Ideal& n, MorId xi) {
  for (MorId a : c.outof(c.cod(xi))) {
    MorId ax = c.try_compose(a, xi);
    if (ax != kNoMor && n.contains(ax) && !n.contains(a)) return false;
  }
  return true;
}

}  // namespace sextor
