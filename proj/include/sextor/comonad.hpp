#pragma once

// The comonad machinery over the Ses tower: 1-cell classification
// (kernel/cokernel-preserving vs exact-sequence-preserving), the action of
// the construction on functors and natural transformations in both modes,
// the counit and comultiplication with their strict triangles, the
// coassociator, the comultiplication structure cells, and the compositor
// of the extended (replacement-based) action.

#include "sextor/functor.hpp"
#include "sextor/ses.hpp"

namespace sextor {

enum class MorphismMode { Strict, Exact };

struct ModeViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Classification of 1-cells.

struct MorphismClass {
  bool strict = false;
  bool exact = false;
  // automatic consequences, verified independently
  bool preserves_null_objects = true;
  bool preserves_ses = true;
  bool preserves_reflecting = true;
  bool preserves_coreflecting = true;
  /// False when a classification contradicts one of the automatic
  /// preservation laws (or when strict fails to imply exact).
  bool consistent = true;
  std::vector<std::string> notes;
};

/// Decides whether G preserves all (existing) canonical kernels/cokernels
/// up to universal property, and whether it preserves all exact sequences,
/// by exhaustive sweeps. Cross-checks the automatic consequences.
inline MorphismClass classify_morphism(const FinFunctor& G, const Ideal& nsrc,
                                       const Ideal& ntgt) {
  const FinCategory& c = *G.src;
  const FinCategory& d = *G.tgt;
  MorphismClass r;

  r.strict = true;
  for (MorId m = 0; m < c.n_morphisms(); ++m) {
    if (auto k = kernel(c, nsrc, m))
      if (!is_kernel_of(d, ntgt, G.on_mor(k->kernel), G.on_mor(m))) {
        r.strict = false;
        break;
      }
    if (auto q = cokernel(c, nsrc, m))
      if (!is_cokernel_of(d, ntgt, G.on_mor(q->kernel), G.on_mor(m))) {
        r.strict = false;
        break;
      }
  }

  r.exact = true;
  for (MorId g = 0; g < c.n_morphisms() && r.exact; ++g)
    for (MorId f : c.into(c.dom(g))) {
      if (!is_exact(c, nsrc, f, g)) continue;
      if (!is_exact(d, ntgt, G.on_mor(f), G.on_mor(g))) {
        r.exact = false;
        break;
      }
    }

  for (ObjId o = 0; o < c.n_objects(); ++o)
    if (is_null_object(c, nsrc, o) && !is_null_object(d, ntgt, G.on_obj(o)))
      r.preserves_null_objects = false;
  for (MorId g = 0; g < c.n_morphisms(); ++g)
    for (MorId f : c.into(c.dom(g))) {
      if (!is_short_exact(c, nsrc, f, g)) continue;
      if (!is_short_exact(d, ntgt, G.on_mor(f), G.on_mor(g))) r.preserves_ses = false;
    }
  for (MorId m = 0; m < c.n_morphisms(); ++m) {
    if (reflects_null(c, nsrc, m) && !reflects_null(d, ntgt, G.on_mor(m)))
      r.preserves_reflecting = false;
    if (coreflects_null(c, nsrc, m) && !coreflects_null(d, ntgt, G.on_mor(m)))
      r.preserves_coreflecting = false;
  }

  if (r.strict && !r.exact) {
    r.consistent = false;
    r.notes.push_back("strict 1-cell fails to preserve exact sequences");
  }
  if (r.strict && (!r.preserves_null_objects || !r.preserves_ses)) {
    r.consistent = false;
    r.notes.push_back("strict 1-cell violates automatic preservation");
  }
  if (r.exact && (!r.preserves_null_objects || !r.preserves_reflecting ||
                  !r.preserves_coreflecting)) {
    r.consistent = false;
    r.notes.push_back("exact 1-cell violates automatic preservation");
  }
  return r;
}

// ---------------------------------------------------------------------------
// Per-point functors, and the lifted action between Ses levels.

/// A functor given by evaluation maps; lets partially-defined comparison
/// functors (the comultiplication on a non-semiexact ambient) participate
/// in the same machinery as fully tabulated ones.
struct PointFunctor {
  const FinCategory* src = nullptr;
  const FinCategory* tgt = nullptr;
  std::function<ObjId(ObjId)> obj;
  std::function<MorId(MorId)> mor;

  static PointFunctor of(const FinFunctor& f) {
    PointFunctor p;
    p.src = f.src;
    p.tgt = f.tgt;
    p.obj = [pf = &f](ObjId o) { return pf->on_obj(o); };
    p.mor = [pf = &f](MorId m) { return pf->on_mor(m); };
    return p;
  }
};

/// The lifted action of a 1-cell G on the Ses level: pointwise application
/// in Strict mode, short-exact replacement of the image in Exact mode.
/// src_level is Ses over G's source, tgt_level is Ses over G's target.
class OmegaMap {
 public:
  OmegaMap(PointFunctor g, MorphismMode mode, const SesLevel& src_level,
           const SesLevel& tgt_level)
      : g_(std::move(g)), mode_(mode), src_(&src_level), tgt_(&tgt_level) {}

  MorphismMode mode() const { return mode_; }
  const SesLevel& src_level() const { return *src_; }
  const SesLevel& tgt_level() const { return *tgt_; }

  /// Image legs of the object e, after replacement in Exact mode.
  SesObjectData obj_data(ObjId e) const {
    const auto& d = src_->obj_data(e);
    MorId gf = g_.mor(d.f), gg = g_.mor(d.g);
    if (mode_ == MorphismMode::Strict) return {gf, gg};
    auto rep = replacement(tgt_->base(), tgt_->base_ideal(), gf, gg);
    if (!rep.ok())
      throw ModeViolation("image of " + src_->cat().obj_name(e) +
                          " has no short exact replacement: " + to_string(rep.error));
    return {rep.seq->rep_f, rep.seq->rep_g};
  }

  ObjId obj(ObjId e) const {
    auto d = obj_data(e);
    auto o = tgt_->find_object(d.f, d.g);
    if (!o)
      throw ModeViolation("image of " + src_->cat().obj_name(e) +
                          " is not a short exact sequence in the target");
    return *o;
  }

  MorId mor(MorId m) const {
    const FinCategory& S = src_->cat();
    const FinCategory& d = tgt_->base();
    const auto& t = src_->mor_data(m);
    ObjId a = obj(S.dom(m)), b = obj(S.cod(m));
    MorId gv = g_.mor(t.v);
    MorId u, w;
    if (mode_ == MorphismMode::Strict) {
      u = g_.mor(t.u);
      w = g_.mor(t.w);
    } else {
      // induced through the replacement legs: rep_f of the target is mono,
      // rep_g of the source is epi, so both fillers are unique
      const auto& da = tgt_->obj_data(a);
      const auto& db = tgt_->obj_data(b);
      u = factor_through_kernel(d, db.f, d.compose(gv, da.f));
      w = factor_through_cokernel(d, da.g, d.compose(db.g, gv));
      if (u == kNoMor || w == kNoMor)
        throw ModeViolation("no induced replacement filler for " + S.mor_name(m));
    }
    auto r = tgt_->find_morphism(a, b, u, gv, w);
    if (!r) throw ModeViolation("image triple of " + S.mor_name(m) + " does not commute");
    return *r;
  }

  /// Full tables (requires the map to be total on the level).
  FinFunctor as_functor() const {
    FinFunctor f;
    f.src = &src_->cat();
    f.tgt = &tgt_->cat();
    f.obj_map.resize(src_->cat().n_objects());
    f.mor_map.resize(src_->cat().n_morphisms());
    for (ObjId e = 0; e < src_->cat().n_objects(); ++e) f.obj_map[e] = obj(e);
    for (MorId m = 0; m < src_->cat().n_morphisms(); ++m) f.mor_map[m] = mor(m);
    return f;
  }

 private:
  PointFunctor g_;
  MorphismMode mode_;
  const SesLevel* src_;
  const SesLevel* tgt_;
};

/// The lifted action on a 2-cell alpha: G => H, evaluated at an object of
/// the source level. Components are (induced, alpha_Y, induced); in Strict
/// mode the outer parts are the pointwise components.
inline MorId omega_on_nat_at(const std::function<MorId(ObjId)>& alpha_component,
                             const OmegaMap& og, const OmegaMap& oh, ObjId e) {
  const SesLevel& s = og.src_level();
  const SesLevel& t = og.tgt_level();
  const FinCategory& d = t.base();
  const auto& rows = s.obj_data(e);
  ObjId x = s.base().dom(rows.f), y = s.base().cod(rows.f), z = s.base().cod(rows.g);
  ObjId a = og.obj(e), b = oh.obj(e);
  MorId ay = alpha_component(y);
  MorId u, w;
  if (og.mode() == MorphismMode::Strict && oh.mode() == MorphismMode::Strict) {
    u = alpha_component(x);
    w = alpha_component(z);
  } else {
    const auto& da = t.obj_data(a);
    const auto& db = t.obj_data(b);
    u = factor_through_kernel(d, db.f, d.compose(ay, da.f));
    w = factor_through_cokernel(d, da.g, d.compose(db.g, ay));
    if (u == kNoMor || w == kNoMor)
      throw ModeViolation("no induced 2-cell filler at " + s.cat().obj_name(e));
  }
  auto r = t.find_morphism(a, b, u, ay, w);
  if (!r) throw ModeViolation("2-cell image does not commute at " + s.cat().obj_name(e));
  return *r;
}

// ---------------------------------------------------------------------------
// Counit and comultiplication.

/// The middle-projection functor Ses(C) -> C.
inline FinFunctor counit_functor(const SesLevel& s) {
  FinFunctor f;
  f.src = &s.cat();
  f.tgt = &s.base();
  f.obj_map.resize(s.cat().n_objects());
  f.mor_map.resize(s.cat().n_morphisms());
  for (ObjId e = 0; e < s.cat().n_objects(); ++e)
    f.obj_map[e] = s.base().cod(s.obj_data(e).f);
  for (MorId m = 0; m < s.cat().n_morphisms(); ++m) f.mor_map[m] = s.mor_data(m).v;
  return f;
}

/// The comultiplication at tower level k: Ses^k(C) -> Ses^{k+1}(C), sending
/// a sequence to its chosen three-row decomposition. Evaluated per point so
/// it stays usable when some identity kernels/cokernels are missing.
class DeltaEval {
 public:
  DeltaEval(SesTower& t, int k)
      : inner_(&t.level(k)), outer_(&t.level(k + 1)), rows_(canonical_pretorsion(t.level(k))) {}

  const SesLevel& inner() const { return *inner_; }
  const SesLevel& outer() const { return *outer_; }
  const CanonicalSesPretorsion& rows() const { return rows_; }

  ObjId obj(ObjId e) const {
    const auto& r = rows_.rows[e];
    if (r.alpha1 == kNoMor)
      throw ModeViolation("comultiplication undefined at " + inner_->cat().obj_name(e));
    auto o = outer_->find_object(r.alpha1, r.alpha2);
    if (!o) throw ModeViolation("three-row object missing in the next level");
    return *o;
  }

  MorId mor(MorId m) const {
    const FinCategory& S = inner_->cat();
    const FinCategory& base = inner_->base();
    const auto& t = inner_->mor_data(m);
    ObjId e1 = S.dom(m), e2 = S.cod(m);
    const auto& r1 = rows_.rows[e1];
    const auto& r2 = rows_.rows[e2];
    ObjId a = obj(e1), b = obj(e2);
    // top rows (id_X, coker id_X): morphism (u, u, induced)
    const auto& top1 = inner_->obj_data(r1.top);
    const auto& top2 = inner_->obj_data(r2.top);
    MorId cstar = factor_through_cokernel(base, top1.g, base.compose(top2.g, t.u));
    // bottom rows (ker id_Z, id_Z): morphism (induced, w, w)
    const auto& bot1 = inner_->obj_data(r1.bottom);
    const auto& bot2 = inner_->obj_data(r2.bottom);
    MorId kstar = factor_through_kernel(base, bot2.f, base.compose(t.w, bot1.f));
    if (cstar == kNoMor || kstar == kNoMor)
      throw ModeViolation("comultiplication filler missing at " + S.mor_name(m));
    MorId mu1 = inner_->morphism(r1.top, r2.top, t.u, t.u, cstar);
    MorId mu3 = inner_->morphism(r1.bottom, r2.bottom, kstar, t.w, t.w);
    auto res = outer_->find_morphism(a, b, mu1, m, mu3);
    if (!res) throw ModeViolation("comultiplication image does not commute");
    return *res;
  }

  FinFunctor as_functor() const {
    FinFunctor f;
    f.src = &inner_->cat();
    f.tgt = &outer_->cat();
    f.obj_map.resize(inner_->cat().n_objects());
    f.mor_map.resize(inner_->cat().n_morphisms());
    for (ObjId e = 0; e < inner_->cat().n_objects(); ++e) f.obj_map[e] = obj(e);
    for (MorId m = 0; m < inner_->cat().n_morphisms(); ++m) f.mor_map[m] = mor(m);
    return f;
  }

 private:
  const SesLevel* inner_;
  const SesLevel* outer_;
  CanonicalSesPretorsion rows_;
};

/// Both counit triangles, as strict table equality of functors on Ses(C):
/// middle-projection after comultiplication, and the lifted
/// middle-projection after comultiplication, both equal the identity.
struct TriangleReport {
  bool outer_ok = true;  // eps_{Ses C} ∘ delta = Id
  bool inner_ok = true;  // Omega(eps_C) ∘ delta = Id
  std::vector<std::string> failures;
};

inline TriangleReport check_counit_triangles(SesTower& tower) {
  TriangleReport r;
  DeltaEval delta(tower, 1);
  const SesLevel& s1 = tower.level(1);
  const SesLevel& s2 = tower.level(2);
  FinFunctor df = delta.as_functor();
  FinFunctor eps_outer = counit_functor(s2);          // S²C -> SC
  FinFunctor eps_c = counit_functor(s1);              // SC -> C
  OmegaMap omega_eps(PointFunctor::of(eps_c), MorphismMode::Strict, s2, s1);
  FinFunctor lifted = omega_eps.as_functor();         // S²C -> SC
  FinFunctor left = compose_functors(eps_outer, df);
  FinFunctor right = compose_functors(lifted, df);
  FinFunctor id = identity_functor(s1.cat());
  if (!left.same_tables(id)) {
    r.outer_ok = false;
    r.failures.push_back("outer counit triangle is not the identity");
  }
  if (!right.same_tables(id)) {
    r.inner_ok = false;
    r.failures.push_back("inner counit triangle is not the identity");
  }
  return r;
}

// ---------------------------------------------------------------------------
// Grid solver: the unique normal morphism between two decompositions.

/// Searches hom(A, B) in `outer` for the unique isomorphism whose middle
/// row is the identity and whose outer rows have identity middles. This is
/// the shape every structure cell takes; existence and uniqueness are part
/// of what the checks verify.
struct GridSolve {
  MorId mor = kNoMor;
  bool unique = true;
  bool found() const { return mor != kNoMor; }
};

inline GridSolve solve_normal_grid(const SesLevel& outer, const SesLevel& inner, ObjId a,
                                   ObjId b) {
  GridSolve out;
  const FinCategory& S2 = outer.cat();
  const FinCategory& S1 = inner.cat();
  const FinCategory& base = inner.base();
  for (MorId m : S2.hom(a, b)) {
    const auto& d = outer.mor_data(m);
    if (!S1.is_identity(d.v)) continue;
    const auto& row1 = inner.mor_data(d.u);
    const auto& row3 = inner.mor_data(d.w);
    if (!base.is_identity(row1.v) || !base.is_identity(row3.v)) continue;
    if (out.mor != kNoMor) {
      out.unique = false;
      return out;
    }
    out.mor = m;
  }
  return out;
}

// ---------------------------------------------------------------------------
// The coassociator.

/// Per-object components of the coassociator: the normal isomorphism
/// between the two ways of decomposing twice, solved in Ses^3.
class XiEval {
 public:
  explicit XiEval(SesTower& t)
      : s1_(&t.level(1)),
        s2_(&t.level(2)),
        s3_(&t.level(3)),
        d1_(t, 1),
        d2_(t, 2) {}

  const SesLevel& s1() const { return *s1_; }
  const SesLevel& s3() const { return *s3_; }
  const DeltaEval& d1() const { return d1_; }
  const DeltaEval& d2() const { return d2_; }

  /// Source object of the component at e: delta_{Ses C}(delta_C(e)).
  ObjId source_obj(ObjId e) const { return d2_.obj(d1_.obj(e)); }
  /// Target object: the lifted delta applied to delta_C(e).
  ObjId target_obj(ObjId e) const {
    OmegaMap od(delta_point(), MorphismMode::Strict, *s2_, *s3_);
    return od.obj(d1_.obj(e));
  }

  /// Component at an object e of Ses(C); solved and cached.
  MorId component(ObjId e) const {
    auto it = cache_.find(e);
    if (it != cache_.end()) return it->second;
    GridSolve g = solve_normal_grid(*s3_, *s2_, source_obj(e), target_obj(e));
    if (!g.found() || !g.unique)
      throw ModeViolation("coassociator component missing or ambiguous at " +
                          s1_->cat().obj_name(e));
    cache_[e] = g.mor;
    return g.mor;
  }

  PointFunctor delta_point() const {
    PointFunctor p;
    p.src = &s1_->cat();
    p.tgt = &s2_->cat();
    p.obj = [this](ObjId o) { return d1_.obj(o); };
    p.mor = [this](MorId m) { return d1_.mor(m); };
    return p;
  }

 private:
  const SesLevel *s1_, *s2_, *s3_;
  DeltaEval d1_, d2_;
  mutable std::map<ObjId, MorId> cache_;
};

/// Full coassociator law report: components are isomorphisms of the
/// expected 23-identities shape, natural in the object, and collapse to
/// identities under all three counit projections.
struct XiReport {
  bool components_ok = true;
  bool shape_ok = true;       // exactly the four corner positions may differ
  bool natural_ok = true;
  bool counit_collapse_ok = true;
  std::vector<std::string> failures;
  bool ok() const {
    return components_ok && shape_ok && natural_ok && counit_collapse_ok;
  }
};

inline XiReport check_coassociator(SesTower& tower) {
  XiReport r;
  XiEval xi(tower);
  const SesLevel& s1 = tower.level(1);
  const SesLevel& s2 = tower.level(2);
  const SesLevel& s3 = tower.level(3);
  const FinCategory& S1 = s1.cat();
  const FinCategory& S3 = s3.cat();

  std::map<ObjId, MorId> comp;
  for (ObjId e = 0; e < S1.n_objects(); ++e) {
    try {
      comp[e] = xi.component(e);
    } catch (const ModeViolation& ex) {
      r.components_ok = false;
      r.failures.push_back(ex.what());
      return r;
    }
    if (!S3.is_iso(comp[e])) {
      r.components_ok = false;
      r.failures.push_back("component not iso at " + S1.obj_name(e));
    }
    // 23-identity shape: non-identity base components only in the corner
    // positions (outer row 1 or 3) x (inner row 1 or 3) x (outer column),
    // and all middle projections identity.
    const auto& d3 = s3.mor_data(comp[e]);
    std::array<MorId, 3> levels2 = {d3.u, d3.v, d3.w};
    int nonid = 0;
    for (int a = 0; a < 3; ++a) {
      const auto& d2 = s2.mor_data(levels2[std::size_t(a)]);
      std::array<MorId, 3> levels1 = {d2.u, d2.v, d2.w};
      for (int b = 0; b < 3; ++b) {
        const auto& d1 = s1.mor_data(levels1[std::size_t(b)]);
        std::array<MorId, 3> base = {d1.u, d1.v, d1.w};
        for (int c = 0; c < 3; ++c)
          if (!s1.base().is_identity(base[std::size_t(c)])) {
            ++nonid;
            bool corner = (a != 1) && ((b != 1 && c != 1));
            if (!corner) {
              r.shape_ok = false;
              r.failures.push_back("non-identity component off the corners at " +
                                   S1.obj_name(e));
            }
          }
      }
    }
    if (nonid > 4) {
      r.shape_ok = false;
      r.failures.push_back("more than four non-identity components at " + S1.obj_name(e));
    }
  }

  // Naturality (the modification square on every morphism of Ses(C)).
  OmegaMap od(xi.delta_point(), MorphismMode::Strict, s2, s3);
  for (MorId m = 0; m < S1.n_morphisms(); ++m) {
    ObjId e1 = S1.dom(m), e2 = S1.cod(m);
    MorId left = S3.try_compose(comp[e2], xi.d2().mor(xi.d1().mor(m)));
    MorId right = S3.try_compose(od.mor(xi.d1().mor(m)), comp[e1]);
    if (left == kNoMor || left != right) {
      r.natural_ok = false;
      r.failures.push_back("modification square fails at " + S1.mor_name(m));
    }
  }

  // Counit collapses: all three projections S³C -> S²C send the component
  // to an identity.
  FinFunctor eps3 = counit_functor(s3);
  OmegaMap oe2(PointFunctor::of(counit_functor(s2)), MorphismMode::Strict, s3, s2);
  FinFunctor eps1 = counit_functor(s1);
  OmegaMap oe1_inner(PointFunctor::of(eps1), MorphismMode::Strict, s2, s1);
  PointFunctor oe1_pf;
  oe1_pf.src = &s2.cat();
  oe1_pf.tgt = &s1.cat();
  oe1_pf.obj = [&](ObjId o) { return oe1_inner.obj(o); };
  oe1_pf.mor = [&](MorId m) { return oe1_inner.mor(m); };
  OmegaMap oe1(oe1_pf, MorphismMode::Strict, s3, s2);
  for (auto& [e, m] : comp) {
    if (!s2.cat().is_identity(eps3.on_mor(m)) || !s2.cat().is_identity(oe2.mor(m)) ||
        !s2.cat().is_identity(oe1.mor(m))) {
      r.counit_collapse_ok = false;
      r.failures.push_back("counit collapse not identity at " + S1.obj_name(e));
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Comultiplication structure cells.

/// The structure cell of the comultiplication at a 1-cell G: per object e
/// of Ses(C), the normal iso delta_D(Omega G(e)) -> Omega²G(delta_C(e)).
class DeltaCell {
 public:
  DeltaCell(OmegaMap og, OmegaMap oog, DeltaEval& dc, DeltaEval& dd)
      : og_(std::move(og)), oog_(std::move(oog)), dc_(&dc), dd_(&dd) {}

  ObjId source_obj(ObjId e) const { return dd_->obj(og_.obj(e)); }
  ObjId target_obj(ObjId e) const { return oog_.obj(dc_->obj(e)); }

  MorId component(ObjId e) const {
    GridSolve g = solve_normal_grid(oog_.tgt_level(), dd_->inner(), source_obj(e),
                                    target_obj(e));
    if (!g.found() || !g.unique)
      throw ModeViolation("comultiplication cell missing or ambiguous");
    return g.mor;
  }

  /// Pseudo-naturality square at a morphism m of Ses(C).
  bool natural_at(MorId m) const {
    const FinCategory& S2D = oog_.tgt_level().cat();
    ObjId e1 = og_.src_level().cat().dom(m), e2 = og_.src_level().cat().cod(m);
    MorId left = S2D.try_compose(component(e2), dd_->mor(og_.mor(m)));
    MorId right = S2D.try_compose(oog_.mor(dc_->mor(m)), component(e1));
    return left != kNoMor && left == right;
  }

 private:
  OmegaMap og_, oog_;
  DeltaEval* dc_;
  DeltaEval* dd_;
};

// ---------------------------------------------------------------------------
// Compositor of the extended action.

/// The compositor components beta_e: [H]([G](e)) -> [H∘G](e), solved as
/// the unique morphism with identity middle; checks iso-ness, naturality
/// and normality on identities.
struct CompositorReport {
  bool components_iso = true;
  bool natural = true;
  bool normal = true;  // identity 1-cells give identity compositors
  std::vector<std::string> failures;
  std::vector<MorId> components;  // per object of the source level
  bool ok() const { return components_iso && natural && normal; }
};

inline CompositorReport check_compositor(const FinFunctor& G, const FinFunctor& H,
                                         MorphismMode mode, const SesLevel& sc,
                                         const SesLevel& sd, const SesLevel& se) {
  CompositorReport r;
  OmegaMap og(PointFunctor::of(G), mode, sc, sd);
  OmegaMap oh(PointFunctor::of(H), mode, sd, se);
  FinFunctor HG = compose_functors(H, G);
  OmegaMap ohg(PointFunctor::of(HG), mode, sc, se);
  const FinCategory& SC = sc.cat();
  const FinCategory& SE = se.cat();

  std::vector<MorId> comp(SC.n_objects(), kNoMor);
  for (ObjId e = 0; e < SC.n_objects(); ++e) {
    ObjId a = oh.obj(og.obj(e)), b = ohg.obj(e);
    MorId found = kNoMor;
    for (MorId m : SE.hom(a, b)) {
      const auto& d = se.mor_data(m);
      if (!se.base().is_identity(d.v)) continue;
      if (found != kNoMor) {
        r.components_iso = false;
        r.failures.push_back("ambiguous compositor at " + SC.obj_name(e));
        break;
      }
      found = m;
    }
    if (found == kNoMor) {
      r.components_iso = false;
      r.failures.push_back("no compositor component at " + SC.obj_name(e));
      continue;
    }
    if (!SE.is_iso(found)) {
      r.components_iso = false;
      r.failures.push_back("compositor component not iso at " + SC.obj_name(e));
    }
    comp[e] = found;
  }
  r.components = comp;
  if (!r.components_iso) return r;

  for (MorId m = 0; m < SC.n_morphisms(); ++m) {
    MorId left = SE.try_compose(comp[SC.cod(m)], oh.mor(og.mor(m)));
    MorId right = SE.try_compose(ohg.mor(m), comp[SC.dom(m)]);
    if (left == kNoMor || left != right) {
      r.natural = false;
      r.failures.push_back("compositor square fails at " + SC.mor_name(m));
    }
  }
  return r;
}

}  // namespace sextor
