#pragma once

// Functors and natural transformations as explicit tables, validated
// exhaustively, plus brute-force enumeration of all functors between two
// finite categories (used by the endofunctor sweeps).

#include <functional>

#include "sextor/core.hpp"

namespace sextor {

struct FinFunctor {
  const FinCategory* src = nullptr;
  const FinCategory* tgt = nullptr;
  std::vector<ObjId> obj_map;  // indexed by source ObjId
  std::vector<MorId> mor_map;  // indexed by source MorId

  ObjId on_obj(ObjId o) const { return obj_map[o]; }
  MorId on_mor(MorId m) const { return mor_map[m]; }

  bool same_tables(const FinFunctor& o) const {
    return obj_map == o.obj_map && mor_map == o.mor_map;
  }
};

inline FinFunctor identity_functor(const FinCategory& c) {
  FinFunctor f;
  f.src = f.tgt = &c;
  f.obj_map.resize(c.n_objects());
  f.mor_map.resize(c.n_morphisms());
  for (ObjId o = 0; o < c.n_objects(); ++o) f.obj_map[o] = o;
  for (MorId m = 0; m < c.n_morphisms(); ++m) f.mor_map[m] = m;
  return f;
}

/// Constant functor at an object: every morphism goes to id_z.
inline FinFunctor constant_functor(const FinCategory& c, const FinCategory& d, ObjId z) {
  FinFunctor f;
  f.src = &c;
  f.tgt = &d;
  f.obj_map.assign(c.n_objects(), z);
  f.mor_map.assign(c.n_morphisms(), d.identity(z));
  return f;
}

/// g ∘ f (apply f first).
inline FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f) {
  if (f.tgt != g.src) throw std::logic_error("compose_functors: endpoint mismatch");
  FinFunctor h;
  h.src = f.src;
  h.tgt = g.tgt;
  h.obj_map.resize(f.obj_map.size());
  h.mor_map.resize(f.mor_map.size());
  for (std::size_t o = 0; o < f.obj_map.size(); ++o) h.obj_map[o] = g.obj_map[f.obj_map[o]];
  for (std::size_t m = 0; m < f.mor_map.size(); ++m) h.mor_map[m] = g.mor_map[f.mor_map[m]];
  return h;
}

inline ValidationReport validate_functor(const FinFunctor& F) {
  ValidationReport r;
  const FinCategory& c = *F.src;
  const FinCategory& d = *F.tgt;
  if (F.obj_map.size() != c.n_objects() || F.mor_map.size() != c.n_morphisms()) {
    r.add("table-size", "object/morphism map size mismatch");
    return r;
  }
  for (MorId m = 0; m < c.n_morphisms(); ++m) {
    MorId fm = F.mor_map[m];
    if (d.dom(fm) != F.obj_map[c.dom(m)] || d.cod(fm) != F.obj_map[c.cod(m)])
      r.add("endpoint", "image of " + c.mor_name(m) + " has wrong domain/codomain");
  }
  for (ObjId o = 0; o < c.n_objects(); ++o)
    if (F.mor_map[c.identity(o)] != d.identity(F.obj_map[o]))
      r.add("identity", "image of id of " + c.obj_name(o) + " is not an identity");
  for (MorId g = 0; g < c.n_morphisms(); ++g)
    for (MorId f = 0; f < c.n_morphisms(); ++f) {
      if (!c.composable(g, f)) continue;
      MorId gf = c.try_compose(g, f);
      if (gf == kNoMor) continue;
      MorId lhs = F.mor_map[gf];
      MorId rhs = d.try_compose(F.mor_map[g], F.mor_map[f]);
      if (lhs != rhs)
        r.add("composition", "(" + c.mor_name(g) + ", " + c.mor_name(f) + ")");
    }
  return r;
}

struct NatTrans {
  const FinFunctor* src = nullptr;  // G
  const FinFunctor* tgt = nullptr;  // H, parallel to G
  std::vector<MorId> components;    // per source object, morphism G(X) -> H(X)
};

inline NatTrans identity_nat(const FinFunctor& F) {
  NatTrans a;
  a.src = a.tgt = &F;
  a.components.resize(F.obj_map.size());
  for (ObjId o = 0; o < F.obj_map.size(); ++o)
    a.components[o] = F.tgt->identity(F.obj_map[o]);
  return a;
}

inline ValidationReport validate_nat(const NatTrans& a) {
  ValidationReport r;
  const FinFunctor& G = *a.src;
  const FinFunctor& H = *a.tgt;
  if (G.src != H.src || G.tgt != H.tgt) {
    r.add("parallel", "functors are not parallel");
    return r;
  }
  const FinCategory& c = *G.src;
  const FinCategory& d = *G.tgt;
  if (a.components.size() != c.n_objects()) {
    r.add("table-size", "component count mismatch");
    return r;
  }
  for (ObjId o = 0; o < c.n_objects(); ++o) {
    MorId comp = a.components[o];
    if (d.dom(comp) != G.obj_map[o] || d.cod(comp) != H.obj_map[o])
      r.add("component-endpoints", "component at " + c.obj_name(o));
  }
  if (!r.ok()) return r;
  for (MorId m = 0; m < c.n_morphisms(); ++m) {
    // a_cod ∘ G(m) = H(m) ∘ a_dom, both legs evaluated in the target.
    MorId lhs = d.try_compose(a.components[c.cod(m)], G.mor_map[m]);
    MorId rhs = d.try_compose(H.mor_map[m], a.components[c.dom(m)]);
    if (lhs != rhs || lhs == kNoMor)
      r.add("naturality", "square at " + c.mor_name(m));
  }
  return r;
}

/// All functors C -> D, by backtracking over object images and then
/// morphism images with early pruning on identities and composition.
/// Deterministic order. Intended for desk-scale categories only.
inline std::vector<FinFunctor> enumerate_functors(const FinCategory& c, const FinCategory& d) {
  std::vector<FinFunctor> out;
  const std::size_t no = c.n_objects(), nm = c.n_morphisms();
  std::vector<ObjId> omap(no, 0);
  std::vector<MorId> mmap(nm, kNoMor);

  auto consistent = [&](MorId just_set) -> bool {
    for (MorId g = 0; g < nm; ++g) {
      if (mmap[g] == kNoMor) continue;
      for (MorId f = 0; f < nm; ++f) {
        if (mmap[f] == kNoMor || !c.composable(g, f)) continue;
        if (g != just_set && f != just_set && c.try_compose(g, f) != just_set) continue;
        MorId gf = c.try_compose(g, f);
        if (gf == kNoMor || mmap[gf] == kNoMor) continue;
        if (d.try_compose(mmap[g], mmap[f]) != mmap[gf]) return false;
      }
    }
    return true;
  };

  std::function<void(MorId)> place_mor = [&](MorId m) {
    if (m == nm) {
      FinFunctor F;
      F.src = &c;
      F.tgt = &d;
      F.obj_map = omap;
      F.mor_map = mmap;
      out.push_back(std::move(F));
      return;
    }
    if (c.is_identity(m)) {
      mmap[m] = d.identity(omap[c.dom(m)]);
      if (consistent(m)) place_mor(m + 1);
      mmap[m] = kNoMor;
      return;
    }
    for (MorId im : d.hom(omap[c.dom(m)], omap[c.cod(m)])) {
      mmap[m] = im;
      if (consistent(m)) place_mor(m + 1);
      mmap[m] = kNoMor;
    }
  };

  std::function<void(ObjId)> place_obj = [&](ObjId o) {
    if (o == no) {
      place_mor(0);
      return;
    }
    for (ObjId im = 0; im < d.n_objects(); ++im) {
      omap[o] = im;
      place_obj(o + 1);
    }
  };
  place_obj(0);
  return out;
}

/// All natural transformations G => H, enumerated componentwise with
/// naturality pruning.
inline std::vector<NatTrans> enumerate_nats(const FinFunctor& G, const FinFunctor& H) {
  std::vector<NatTrans> out;
  const FinCategory& c = *G.src;
  const FinCategory& d = *G.tgt;
  const std::size_t no = c.n_objects();
  std::vector<MorId> comp(no, kNoMor);

  std::function<void(ObjId)> place = [&](ObjId o) {
    if (o == no) {
      NatTrans a;
      a.src = &G;
      a.tgt = &H;
      a.components = comp;
      if (validate_nat(a).ok()) out.push_back(std::move(a));
      return;
    }
    for (MorId m : d.hom(G.obj_map[o], H.obj_map[o])) {
      comp[o] = m;
      place(o + 1);
    }
    comp[o] = kNoMor;
  };
  place(0);
  return out;
}

}  // namespace sextor
