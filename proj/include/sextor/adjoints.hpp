#pragma once

// The five functors between C and Ses(C) — outer projections, the two
// one-sided embeddings, and the middle projection — and the four
// adjunctions between them, verified by constructing the canonical
// hom-set bijections and checking bijectivity plus naturality in both
// variables, exhaustively.

#include "sextor/comonad.hpp"

namespace sextor {

/// X -> (ker id_X -> X = X); requires kernels of identities.
inline FinFunctor left_embedding(const SesLevel& s) {
  const FinCategory& c = s.base();
  const Ideal& n = s.base_ideal();
  FinFunctor f;
  f.src = &c;
  f.tgt = &s.cat();
  f.obj_map.resize(c.n_objects());
  f.mor_map.resize(c.n_morphisms());
  for (ObjId x = 0; x < c.n_objects(); ++x) {
    auto k = kernel(c, n, c.identity(x));
    if (!k) throw ModeViolation("left embedding needs kernels of identities");
    f.obj_map[x] = s.object(k->kernel, c.identity(x));
  }
  for (MorId h = 0; h < c.n_morphisms(); ++h) {
    ObjId a = f.obj_map[c.dom(h)], b = f.obj_map[c.cod(h)];
    const auto& da = s.obj_data(a);
    const auto& db = s.obj_data(b);
    MorId u = factor_through_kernel(c, db.f, c.compose(h, da.f));
    if (u == kNoMor) throw ModeViolation("left embedding filler missing");
    f.mor_map[h] = s.morphism(a, b, u, h, h);
  }
  return f;
}

/// X -> (X = X -> coker id_X); requires cokernels of identities.
inline FinFunctor right_embedding(const SesLevel& s) {
  const FinCategory& c = s.base();
  const Ideal& n = s.base_ideal();
  FinFunctor f;
  f.src = &c;
  f.tgt = &s.cat();
  f.obj_map.resize(c.n_objects());
  f.mor_map.resize(c.n_morphisms());
  for (ObjId x = 0; x < c.n_objects(); ++x) {
    auto q = cokernel(c, n, c.identity(x));
    if (!q) throw ModeViolation("right embedding needs cokernels of identities");
    f.obj_map[x] = s.object(c.identity(x), q->kernel);
  }
  for (MorId h = 0; h < c.n_morphisms(); ++h) {
    ObjId a = f.obj_map[c.dom(h)], b = f.obj_map[c.cod(h)];
    const auto& da = s.obj_data(a);
    const auto& db = s.obj_data(b);
    MorId w = factor_through_cokernel(c, da.g, c.compose(db.g, h));
    if (w == kNoMor) throw ModeViolation("right embedding filler missing");
    f.mor_map[h] = s.morphism(a, b, h, h, w);
  }
  return f;
}

inline FinFunctor left_projection(const SesLevel& s) {  // first object
  const FinCategory& c = s.base();
  FinFunctor f;
  f.src = &s.cat();
  f.tgt = &c;
  f.obj_map.resize(s.cat().n_objects());
  f.mor_map.resize(s.cat().n_morphisms());
  for (ObjId e = 0; e < s.cat().n_objects(); ++e) f.obj_map[e] = c.dom(s.obj_data(e).f);
  for (MorId m = 0; m < s.cat().n_morphisms(); ++m) f.mor_map[m] = s.mor_data(m).u;
  return f;
}

inline FinFunctor right_projection(const SesLevel& s) {  // last object
  const FinCategory& c = s.base();
  FinFunctor f;
  f.src = &s.cat();
  f.tgt = &c;
  f.obj_map.resize(s.cat().n_objects());
  f.mor_map.resize(s.cat().n_morphisms());
  for (ObjId e = 0; e < s.cat().n_objects(); ++e) f.obj_map[e] = c.cod(s.obj_data(e).g);
  for (MorId m = 0; m < s.cat().n_morphisms(); ++m) f.mor_map[m] = s.mor_data(m).w;
  return f;
}

struct AdjointReport {
  bool ok = true;
  std::vector<std::string> failures;
  void fail(std::string m) {
    ok = false;
    failures.push_back(std::move(m));
  }
};

namespace detail {

/// Generic adjunction check F -| G with F: A -> B, G: B -> A and a
/// transposition map hom_B(F a, b) -> hom_A(a, G b). Verifies the
/// transpose is a bijection on every hom-set and natural in both
/// variables.
inline void check_adjunction(AdjointReport& r, const std::string& label, const FinFunctor& F,
                             const FinFunctor& G,
                             const std::function<MorId(ObjId, ObjId, MorId)>& transpose) {
  const FinCategory& A = *F.src;
  const FinCategory& B = *F.tgt;
  for (ObjId a = 0; a < A.n_objects(); ++a)
    for (ObjId b = 0; b < B.n_objects(); ++b) {
      const auto& upper = B.hom(F.on_obj(a), b);
      const auto& lower = A.hom(a, G.on_obj(b));
      if (upper.size() != lower.size()) {
        r.fail(label + ": hom-set size mismatch at (" + A.obj_name(a) + ", " +
               B.obj_name(b) + ")");
        continue;
      }
      std::vector<MorId> image;
      for (MorId m : upper) {
        MorId t = transpose(a, b, m);
        if (t == kNoMor) {
          r.fail(label + ": transpose undefined at " + B.mor_name(m));
          continue;
        }
        image.push_back(t);
      }
      std::sort(image.begin(), image.end());
      if (std::adjacent_find(image.begin(), image.end()) != image.end())
        r.fail(label + ": transpose not injective at (" + A.obj_name(a) + ", " +
               B.obj_name(b) + ")");
      for (MorId t : lower)
        if (!std::binary_search(image.begin(), image.end(), t))
          r.fail(label + ": transpose not surjective at (" + A.obj_name(a) + ", " +
                 B.obj_name(b) + ")");
    }
  // naturality: transpose(q ∘ m ∘ F p) = G q ∘ transpose(m) ∘ p
  for (ObjId a = 0; a < A.n_objects(); ++a)
    for (ObjId b = 0; b < B.n_objects(); ++b)
      for (MorId m : B.hom(F.on_obj(a), b))
        for (MorId p = 0; p < A.n_morphisms(); ++p) {
          if (A.cod(p) != a) continue;
          for (MorId q : B.outof(b)) {
            MorId lhs = transpose(A.dom(p), B.cod(q),
                                  B.compose(q, B.compose(m, F.on_mor(p))));
            MorId rhs = A.compose(G.on_mor(q), A.compose(transpose(a, b, m), p));
            if (lhs != rhs) {
              r.fail(label + ": naturality fails at (" + B.mor_name(m) + ", " +
                     A.mor_name(p) + ", " + B.mor_name(q) + ")");
              return;  // one witness is enough
            }
          }
        }
}

}  // namespace detail

/// The chain of four adjunctions among the five functors, checked
/// exhaustively on a semiexact instance.
inline AdjointReport check_adjoint_quintuple(const SesLevel& s) {
  AdjointReport r;
  const FinCategory& c = s.base();
  const FinCategory& S = s.cat();
  FinFunctor pi1 = left_projection(s);
  FinFunctor pi3 = right_projection(s);
  FinFunctor L, R;
  try {
    L = left_embedding(s);
    R = right_embedding(s);
  } catch (const ModeViolation& ex) {
    r.fail(ex.what());
    return r;
  }
  FinFunctor eps = counit_functor(s);

  // pi3 -| L: hom_C(pi3 E, X) ~ hom_Ses(E, L X); m -> (induced, m∘g, m)
  detail::check_adjunction(r, "pi3 -| L", pi3, L, [&](ObjId e, ObjId x, MorId m) -> MorId {
    const auto& d = s.obj_data(e);
    const auto& lx = s.obj_data(L.on_obj(x));
    MorId v = c.compose(m, d.g);
    MorId u = factor_through_kernel(c, lx.f, c.compose(v, d.f));
    if (u == kNoMor) return kNoMor;
    auto t = s.find_morphism(e, L.on_obj(x), u, v, m);
    return t ? *t : kNoMor;
  });

  // L -| eps: hom_Ses(L A, E) ~ hom_C(A, eps E); (u,v,w) -> v
  detail::check_adjunction(r, "L -| eps", L, eps,
                           [&](ObjId, ObjId, MorId m) -> MorId { return s.mor_data(m).v; });

  // eps -| R: hom_C(eps E, X) ~ hom_Ses(E, R X); m -> (m∘f, m, induced)
  detail::check_adjunction(r, "eps -| R", eps, R, [&](ObjId e, ObjId x, MorId m) -> MorId {
    const auto& d = s.obj_data(e);
    const auto& rx = s.obj_data(R.on_obj(x));
    MorId u = c.compose(m, d.f);
    MorId w = factor_through_cokernel(c, d.g, c.compose(rx.g, m));
    if (w == kNoMor) return kNoMor;
    auto t = s.find_morphism(e, R.on_obj(x), u, m, w);
    return t ? *t : kNoMor;
  });

  // R -| pi1: hom_Ses(R X, E) ~ hom_C(X, pi1 E); (u,v,w) -> u
  detail::check_adjunction(r, "R -| pi1", R, pi1,
                           [&](ObjId, ObjId, MorId m) -> MorId { return s.mor_data(m).u; });

  (void)S;
  return r;
}

}  // namespace sextor
