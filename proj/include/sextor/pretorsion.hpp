#pragma once

// Pretorsion theories: the two axioms (triviality of T-to-F morphisms
// modulo the ideal generated by Z = T ∩ F, and per-object short exact
// decomposition), torsion assignments with their induced morphism parts,
// hereditarity, rectangularity, brute-force enumeration, and the chain
// characterization used as the enumeration oracle.

#include "sextor/exactness.hpp"

namespace sextor {

using ObjSet = std::vector<ObjId>;  // kept sorted by ObjId

inline bool obj_set_contains(const ObjSet& s, ObjId o) {
  return std::binary_search(s.begin(), s.end(), o);
}

inline ObjSet obj_set_intersect(const ObjSet& a, const ObjSet& b) {
  ObjSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

struct PretorsionCheck {
  ObjSet torsion, torsionfree, z;
  Ideal nprime;          // morphisms factoring through Z
  bool iso_closed = true;
  std::string iso_closed_witness;
  bool nprime_closed = true;
  bool t1 = true;
  std::string t1_witness;
  bool t2 = true;
  ObjSet t2_missing;
  SesScan scan;          // all short exact sequences relative to nprime
  std::vector<std::optional<std::pair<MorId, MorId>>> chosen;  // minimal T2 witness per object

  bool pass() const { return iso_closed && nprime_closed && t1 && t2; }
};

/// Verifies both pretorsion axioms for the pair (T, F) on c, relative to
/// the ideal generated by Z = T ∩ F. Repleteness of T and F is verified,
/// not assumed. The report keeps the s.e.s. scan and the minimal per-object
/// decomposition so the torsion assignment can reuse them.
inline PretorsionCheck check_pretorsion(const FinCategory& c, ObjSet torsion, ObjSet torsionfree) {
  PretorsionCheck r;
  std::sort(torsion.begin(), torsion.end());
  std::sort(torsionfree.begin(), torsionfree.end());
  r.torsion = std::move(torsion);
  r.torsionfree = std::move(torsionfree);
  r.z = obj_set_intersect(r.torsion, r.torsionfree);

  for (const ObjSet* s : {&r.torsion, &r.torsionfree}) {
    for (ObjId a : *s)
      for (ObjId b = 0; b < c.n_objects(); ++b)
        if (!obj_set_contains(*s, b) && c.objs_isomorphic(a, b)) {
          r.iso_closed = false;
          r.iso_closed_witness = c.obj_name(a) + " ~ " + c.obj_name(b);
        }
  }

  r.nprime = ideal_from_objects(c, r.z);
  r.nprime_closed = is_ideal(c, r.nprime).ok && is_closed(c, r.nprime).ok;

  // (T1) every morphism from a torsion object to a torsion-free object is
  // in nprime (equivalently factors through Z; the witness lives in nprime).
  for (ObjId a : r.torsion) {
    for (ObjId b : r.torsionfree)
      for (MorId h : c.hom(a, b))
        if (!r.nprime.contains(h)) {
          r.t1 = false;
          r.t1_witness = c.mor_name(h) + ": " + c.obj_name(a) + " -> " + c.obj_name(b);
        }
  }

  // (T2) a short exact T -> X -> F decomposition for every object, found in
  // the precomputed scan indexed by middle object.
  r.scan = SesScan::run(c, r.nprime);
  r.chosen.assign(c.n_objects(), std::nullopt);
  for (ObjId x = 0; x < c.n_objects(); ++x) {
    for (std::size_t idx : r.scan.by_middle[x]) {
      auto [f, g] = r.scan.seqs[idx];
      if (obj_set_contains(r.torsion, c.dom(f)) && obj_set_contains(r.torsionfree, c.cod(g))) {
        r.chosen[x] = {f, g};  // scan order is (name f, name g): minimal wins
        break;
      }
    }
    if (!r.chosen[x]) {
      r.t2 = false;
      r.t2_missing.push_back(x);
    }
  }
  return r;
}

/// The deterministic torsion assignment: per object the minimal valid
/// decomposition, per morphism the parts induced by the kernel/cokernel
/// universal properties of the chosen legs.
struct TorsionAssignment {
  // Per object X: the chosen sequence T^X --l--> X --r--> F^X.
  std::vector<MorId> l, rr;
  std::vector<ObjId> t_obj, f_obj;
  // Per morphism h: the torsion and torsion-free parts.
  std::vector<MorId> part_t, part_f;
  bool ok = true;
  std::string error;
};

inline TorsionAssignment torsion_assignment(const FinCategory& c, const PretorsionCheck& pc) {
  TorsionAssignment a;
  if (!pc.pass()) {
    a.ok = false;
    a.error = "pretorsion axioms do not hold";
    return a;
  }
  const Ideal& n = pc.nprime;
  a.l.resize(c.n_objects());
  a.rr.resize(c.n_objects());
  a.t_obj.resize(c.n_objects());
  a.f_obj.resize(c.n_objects());
  for (ObjId x = 0; x < c.n_objects(); ++x) {
    auto [f, g] = *pc.chosen[x];
    a.l[x] = f;
    a.rr[x] = g;
    a.t_obj[x] = c.dom(f);
    a.f_obj[x] = c.cod(g);
  }
  a.part_t.resize(c.n_morphisms());
  a.part_f.resize(c.n_morphisms());
  for (MorId h = 0; h < c.n_morphisms(); ++h) {
    ObjId x = c.dom(h), y = c.cod(h);
    // l_Y ∘ h_T = h ∘ l_X, induced through the kernel l_Y = ker(r_Y);
    // the composite r_Y ∘ h ∘ l_X is null by (T1).
    MorId ht = factor_through_kernel(c, a.l[y], c.compose(h, a.l[x]));
    MorId hf = factor_through_cokernel(c, a.rr[x], c.compose(a.rr[y], h));
    if (ht == kNoMor || hf == kNoMor) {
      a.ok = false;
      a.error = "no induced part for " + c.mor_name(h);
      return a;
    }
    a.part_t[h] = ht;
    a.part_f[h] = hf;
  }
  return a;
}

/// Functoriality of the parts: identities to identities, composites to
/// composites, on the nose. Guaranteed by uniqueness; verified anyway.
inline ValidationReport validate_assignment(const FinCategory& c, const TorsionAssignment& a) {
  ValidationReport r;
  for (ObjId x = 0; x < c.n_objects(); ++x) {
    MorId idx = c.identity(x);
    if (a.part_t[idx] != c.identity(a.t_obj[x]) || a.part_f[idx] != c.identity(a.f_obj[x]))
      r.add("identity-part", "at " + c.obj_name(x));
  }
  for (MorId g = 0; g < c.n_morphisms(); ++g)
    for (MorId f = 0; f < c.n_morphisms(); ++f) {
      if (!c.composable(g, f)) continue;
      MorId gf = c.try_compose(g, f);
      if (a.part_t[gf] != c.try_compose(a.part_t[g], a.part_t[f]) ||
          a.part_f[gf] != c.try_compose(a.part_f[g], a.part_f[f]))
        r.add("composite-part", "(" + c.mor_name(g) + ", " + c.mor_name(f) + ")");
    }
  return r;
}

/// Hereditary: the torsion part of every canonical kernel again satisfies
/// the kernel universal property (kernels are only defined up to iso, so
/// the predicate is used, not equality of canonical choices). Quantifies
/// over the morphisms whose canonical kernel exists.
inline bool is_hereditary(const FinCategory& c, const PretorsionCheck& pc,
                          const TorsionAssignment& a) {
  for (MorId g = 0; g < c.n_morphisms(); ++g) {
    auto k = kernel(c, pc.nprime, g);
    if (!k) continue;
    if (!is_kernel_of(c, pc.nprime, a.part_t[k->kernel], a.part_t[g])) return false;
  }
  return true;
}

inline bool is_cohereditary(const FinCategory& c, const PretorsionCheck& pc,
                            const TorsionAssignment& a) {
  for (MorId f = 0; f < c.n_morphisms(); ++f) {
    auto q = cokernel(c, pc.nprime, f);
    if (!q) continue;
    if (!is_cokernel_of(c, pc.nprime, a.part_f[q->kernel], a.part_f[f])) return false;
  }
  return true;
}

inline bool is_bihereditary(const FinCategory& c, const PretorsionCheck& pc,
                            const TorsionAssignment& a) {
  return is_hereditary(c, pc, a) && is_cohereditary(c, pc, a);
}

/// Rectangularity: the comparison X ↦ (T^X, F^X) into the product of the
/// two full subcategories is an equivalence (essentially surjective and
/// fully faithful), decided exhaustively.
inline bool is_rectangular(const FinCategory& c, const PretorsionCheck& pc,
                           const TorsionAssignment& a) {
  for (ObjId t : pc.torsion)
    for (ObjId f : pc.torsionfree) {
      bool hit = false;
      for (ObjId x = 0; x < c.n_objects() && !hit; ++x)
        hit = c.objs_isomorphic(a.t_obj[x], t) && c.objs_isomorphic(a.f_obj[x], f);
      if (!hit) return false;
    }
  for (ObjId x = 0; x < c.n_objects(); ++x)
    for (ObjId y = 0; y < c.n_objects(); ++y) {
      const auto& hs = c.hom(x, y);
      // injectivity and surjectivity of h ↦ (h_T, h_F)
      for (std::size_t i = 0; i < hs.size(); ++i)
        for (std::size_t j = i + 1; j < hs.size(); ++j)
          if (a.part_t[hs[i]] == a.part_t[hs[j]] && a.part_f[hs[i]] == a.part_f[hs[j]])
            return false;
      for (MorId pt : c.hom(a.t_obj[x], a.t_obj[y]))
        for (MorId pf : c.hom(a.f_obj[x], a.f_obj[y])) {
          bool hit = false;
          for (MorId h : hs)
            if (a.part_t[h] == pt && a.part_f[h] == pf) {
              hit = true;
              break;
            }
          if (!hit) return false;
        }
    }
  return true;
}

// ---------------------------------------------------------------------------
// Enumeration.

/// All pretorsion theories (T, F) on c: brute force over pairs of nonempty
/// iso-closed object families, filtered by (T1) then (T2). Deterministic
/// order: by object-name lists of T, then of F.
inline std::vector<std::pair<ObjSet, ObjSet>> enumerate_pretorsion(const FinCategory& c) {
  // iso-classes, represented canonically
  std::vector<int> cls(c.n_objects(), -1);
  int ncls = 0;
  for (ObjId o = 0; o < c.n_objects(); ++o) {
    if (cls[o] >= 0) continue;
    for (ObjId p = o; p < c.n_objects(); ++p)
      if (cls[p] < 0 && c.objs_isomorphic(o, p)) cls[p] = ncls;
    ++ncls;
  }
  std::vector<ObjSet> unions;
  for (std::uint64_t mask = 1; mask < (1ull << ncls); ++mask) {
    ObjSet s;
    for (ObjId o = 0; o < c.n_objects(); ++o)
      if (mask & (1ull << cls[o])) s.push_back(o);
    unions.push_back(std::move(s));
  }

  std::vector<std::pair<ObjSet, ObjSet>> out;
  for (const ObjSet& t : unions)
    for (const ObjSet& f : unions) {
      PretorsionCheck pc = check_pretorsion(c, t, f);
      if (pc.pass()) out.emplace_back(t, f);
    }
  auto names = [&](const ObjSet& s) {
    std::vector<std::string> v;
    for (ObjId o : s) v.push_back(c.obj_name(o));
    std::sort(v.begin(), v.end());
    return v;
  };
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    auto ta = names(a.first), tb = names(b.first);
    if (ta != tb) return ta < tb;
    return names(a.second) < names(b.second);
  });
  return out;
}

/// The chain oracle: subset pairs over {1..n} satisfying
///   (i) T ∪ F = X, (ii) 1 ∈ T and n ∈ F,
///   (iii) i ∈ T and i+1 ∈ F imply i ∈ F or i+1 ∈ T, for i < n.
/// Returned as object-index sets of build_chain(n), in the same order as
/// enumerate_pretorsion would produce.
inline std::vector<std::pair<ObjSet, ObjSet>> chain_characterization(int n) {
  if (n < 1) throw std::invalid_argument("chain_characterization: n must be >= 1");
  std::vector<std::pair<ObjSet, ObjSet>> out;
  for (std::uint64_t tm = 0; tm < (1ull << n); ++tm)
    for (std::uint64_t fm = 0; fm < (1ull << n); ++fm) {
      if ((tm | fm) != (1ull << n) - 1) continue;       // (i)
      if (!(tm & 1ull) || !(fm & (1ull << (n - 1)))) continue;  // (ii)
      bool ok = true;
      for (int i = 0; i + 1 < n && ok; ++i)
        if ((tm & (1ull << i)) && (fm & (1ull << (i + 1))) && !(fm & (1ull << i)) &&
            !(tm & (1ull << (i + 1))))
          ok = false;                                    // (iii)
      if (!ok) continue;
      ObjSet t, f;
      for (int i = 0; i < n; ++i) {
        if (tm & (1ull << i)) t.push_back(ObjId(i));
        if (fm & (1ull << i)) f.push_back(ObjId(i));
      }
      out.emplace_back(std::move(t), std::move(f));
    }
  // order by the name lists of the chain category ("1" < "10" < "2" ...)
  FinCategory ch = build_chain(n);
  auto names = [&](const ObjSet& s) {
    std::vector<std::string> v;
    for (ObjId o : s) v.push_back(ch.obj_name(o));
    std::sort(v.begin(), v.end());
    return v;
  };
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    auto ta = names(a.first), tb = names(b.first);
    if (ta != tb) return ta < tb;
    return names(a.second) < names(b.second);
  });
  return out;
}

}  // namespace sextor
