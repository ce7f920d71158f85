#pragma once

// The category of short exact sequences Ses(C) over a category with a
// closed ideal, materialized as a FinCategory with provenance back to the
// base. Includes the induced ideal [N] (generated by the iso-iso
// sequences), the structural fast paths for kernels and cokernels in
// Ses(C), the canonical pretorsion theory on Ses(C), and a memoized tower
// Ses^k(C).

#include <sstream>

#include "sextor/exactness.hpp"

namespace sextor {

struct SesObjectData {
  MorId f = kNoMor, g = kNoMor;
};
struct SesMorData {
  MorId u = kNoMor, v = kNoMor, w = kNoMor;
};

class SesLevel {
 public:
  /// Builds Ses(base) for the pair (base, n). The construction itself only
  /// needs the short-exact-sequence scan, so it also works for bases that
  /// are not semiexact (the public entry point gates on that separately).
  SesLevel(const FinCategory& base, const Ideal& n) : base_(&base), base_ideal_(n) {
    SesScan scan = SesScan::run(base, n);
    CategoryBuilder b("Ses(" + base.name() + ")");
    objs_.reserve(scan.seqs.size());
    for (auto& [f, g] : scan.seqs) {
      b.add_object(obj_name_for(base, f, g));
      objs_.push_back({f, g});
    }
    // morphisms: commuting triples, enumerated per object pair
    for (ObjId a = 0; a < objs_.size(); ++a) {
      const auto& A = objs_[a];
      ObjId ax = base.dom(A.f), ay = base.cod(A.f), az = base.cod(A.g);
      for (ObjId c = 0; c < objs_.size(); ++c) {
        const auto& C = objs_[c];
        ObjId cx = base.dom(C.f), cy = base.cod(C.f), cz = base.cod(C.g);
        for (MorId u : base.hom(ax, cx))
          for (MorId v : base.hom(ay, cy)) {
            if (base.try_compose(v, A.f) != base.try_compose(C.f, u)) continue;
            for (MorId w : base.hom(az, cz)) {
              if (base.try_compose(w, A.g) != base.try_compose(C.g, v)) continue;
              MorId m = b.add_morphism(mor_name_for(base, u, v, w), a, c);
              mors_.push_back({u, v, w});
              mor_lookup_[key(a, c, u, v, w)] = m;
              if (a == c && u == base.identity(ax) && v == base.identity(ay) &&
                  w == base.identity(az))
                b.set_identity(a, m);
            }
          }
      }
    }
    // composition is componentwise
    for (MorId m2 = 0; m2 < mors_.size(); ++m2)
      for (MorId m1 = 0; m1 < mors_.size(); ++m1) {
        if (b.mor_cod(m1) != b.mor_dom(m2)) continue;
        const auto& p = mors_[m1];
        const auto& q = mors_[m2];
        MorId u = base.compose(q.u, p.u), v = base.compose(q.v, p.v),
              w = base.compose(q.w, p.w);
        b.set_compose(m2, m1, mor_lookup_.at(key(b.mor_dom(m1), b.mor_cod(m2), u, v, w)));
      }
    cat_ = std::make_unique<FinCategory>(b.build());
    ideal_ = ideal_from_objects(*cat_, iso_iso_objects());
  }

  SesLevel(const SesLevel&) = delete;
  SesLevel& operator=(const SesLevel&) = delete;

  const FinCategory& base() const { return *base_; }
  const Ideal& base_ideal() const { return base_ideal_; }
  const FinCategory& cat() const { return *cat_; }
  const Ideal& ideal() const { return ideal_; }

  const SesObjectData& obj_data(ObjId o) const { return objs_[o]; }
  const SesMorData& mor_data(MorId m) const { return mors_[m]; }

  std::optional<ObjId> find_object(MorId f, MorId g) const {
    for (ObjId o = 0; o < objs_.size(); ++o)
      if (objs_[o].f == f && objs_[o].g == g) return o;
    return std::nullopt;
  }
  ObjId object(MorId f, MorId g) const {
    auto o = find_object(f, g);
    if (!o) throw std::logic_error("SesLevel: pair is not a short exact sequence here");
    return *o;
  }
  std::optional<MorId> find_morphism(ObjId dom, ObjId cod, MorId u, MorId v, MorId w) const {
    auto it = mor_lookup_.find(key(dom, cod, u, v, w));
    if (it == mor_lookup_.end()) return std::nullopt;
    return it->second;
  }
  MorId morphism(ObjId dom, ObjId cod, MorId u, MorId v, MorId w) const {
    auto m = find_morphism(dom, cod, u, v, w);
    if (!m) throw std::logic_error("SesLevel: triple is not a morphism here");
    return *m;
  }

  /// Objects whose two legs are isomorphisms in the base.
  std::vector<ObjId> iso_iso_objects() const {
    std::vector<ObjId> out;
    for (ObjId o = 0; o < objs_.size(); ++o)
      if (base_->is_iso(objs_[o].f) && base_->is_iso(objs_[o].g)) out.push_back(o);
    return out;
  }

  /// Objects all three of whose base objects are null. Must coincide with
  /// iso_iso_objects; computed independently so the two can be compared.
  std::vector<ObjId> all_null_objects() const {
    std::vector<ObjId> out;
    for (ObjId o = 0; o < objs_.size(); ++o) {
      const auto& d = objs_[o];
      if (is_null_object(*base_, base_ideal_, base_->dom(d.f)) &&
          is_null_object(*base_, base_ideal_, base_->cod(d.f)) &&
          is_null_object(*base_, base_ideal_, base_->cod(d.g)))
        out.push_back(o);
    }
    return out;
  }

  static std::string obj_name_for(const FinCategory& base, MorId f, MorId g) {
    return "[" + base.mor_name(f) + "," + base.mor_name(g) + "]";
  }
  static std::string mor_name_for(const FinCategory& base, MorId u, MorId v, MorId w) {
    return "(" + base.mor_name(u) + "," + base.mor_name(v) + "," + base.mor_name(w) + ")";
  }

 private:
  static std::string key(ObjId a, ObjId c, MorId u, MorId v, MorId w) {
    std::ostringstream os;
    os << a << '|' << c << '|' << u << '|' << v << '|' << w;
    return os.str();
  }

  const FinCategory* base_;
  Ideal base_ideal_;
  std::unique_ptr<FinCategory> cat_;
  Ideal ideal_;
  std::vector<SesObjectData> objs_;
  std::vector<SesMorData> mors_;
  std::map<std::string, MorId> mor_lookup_;
};

/// Ses(C), gated on semiexactness: the module-level contract. Construction
/// for non-semiexact bases is available through SesTower/SesLevel directly.
inline std::unique_ptr<SesLevel> build_ses(const FinCategory& c, const Ideal& n) {
  if (!is_semiexact(c, n).ok)
    throw std::invalid_argument("build_ses: base category is not semiexact");
  return std::make_unique<SesLevel>(c, n);
}

// ---------------------------------------------------------------------------
// Structural fast paths for kernels and cokernels in Ses(C).

/// Kernel of m in Ses(C) built componentwise: (ker u, ker v, induced w)
/// into the object (f: K(u) -> K(v), coker f). Returns the Ses morphism id,
/// or nullopt if a required base kernel is missing.
inline std::optional<MorId> ses_kernel_fast(const SesLevel& s, MorId m) {
  const FinCategory& c = s.base();
  const Ideal& n = s.base_ideal();
  const FinCategory& S = s.cat();
  const SesMorData& t = s.mor_data(m);
  const SesObjectData& E1 = s.obj_data(S.dom(m));  // (f', g')
  auto ku = kernel(c, n, t.u);
  auto kv = kernel(c, n, t.v);
  if (!ku || !kv) return std::nullopt;
  MorId f = factor_through_kernel(c, kv->kernel, c.compose(E1.f, ku->kernel));
  if (f == kNoMor) return std::nullopt;
  auto cf = cokernel(c, n, f);
  if (!cf) return std::nullopt;
  MorId w = factor_through_cokernel(c, cf->kernel, c.compose(E1.g, kv->kernel));
  if (w == kNoMor) return std::nullopt;
  auto kobj = s.find_object(f, cf->kernel);
  if (!kobj) return std::nullopt;  // would contradict the construction
  return s.find_morphism(*kobj, S.dom(m), ku->kernel, kv->kernel, w);
}

/// Dual construction: cokernel of m out of the object (ker g*, g*) with
/// g*: C(v) -> C(w) induced, as the morphism (induced, coker v, coker w).
inline std::optional<MorId> ses_cokernel_fast(const SesLevel& s, MorId m) {
  const FinCategory& c = s.base();
  const Ideal& n = s.base_ideal();
  const FinCategory& S = s.cat();
  const SesMorData& t = s.mor_data(m);
  const SesObjectData& E1 = s.obj_data(S.cod(m));  // (f', g') — the target row
  auto qv = cokernel(c, n, t.v);
  auto qw = cokernel(c, n, t.w);
  if (!qv || !qw) return std::nullopt;
  MorId gstar = factor_through_cokernel(c, qv->kernel, c.compose(qw->kernel, E1.g));
  if (gstar == kNoMor) return std::nullopt;
  auto kg = kernel(c, n, gstar);
  if (!kg) return std::nullopt;
  MorId q1 = factor_through_kernel(c, kg->kernel, c.compose(qv->kernel, E1.f));
  if (q1 == kNoMor) return std::nullopt;
  auto qobj = s.find_object(kg->kernel, gstar);
  if (!qobj) return std::nullopt;
  return s.find_morphism(S.cod(m), *qobj, q1, qv->kernel, qw->kernel);
}

// ---------------------------------------------------------------------------
// The canonical pretorsion theory on Ses(C).

/// Torsion objects are the sequences with an isomorphism on the left,
/// torsion-free ones have it on the right. The chosen sequence for E is
/// the three-row construction: top row (id_X, coker id_X), bottom row
/// (ker id_Z, id_Z), with the induced fillers.
struct CanonicalSesPretorsion {
  std::vector<ObjId> torsion, torsionfree;  // objects of Ses(C)
  struct Rows {
    ObjId top = kNoObj, bottom = kNoObj;  // objects of Ses(C)
    MorId alpha1 = kNoMor, alpha2 = kNoMor;  // Ses(C) morphisms R1->R2, R2->R3
    MorId filler_w = kNoMor, filler_u = kNoMor;  // base fillers for reference
  };
  std::vector<Rows> rows;  // indexed by Ses(C) ObjId
  bool ok = true;
  std::string error;
};

inline CanonicalSesPretorsion canonical_pretorsion(const SesLevel& s) {
  const FinCategory& c = s.base();
  const Ideal& n = s.base_ideal();
  const FinCategory& S = s.cat();
  CanonicalSesPretorsion out;
  out.rows.resize(S.n_objects());
  for (ObjId e = 0; e < S.n_objects(); ++e) {
    const auto& d = s.obj_data(e);
    if (c.is_iso(d.f)) out.torsion.push_back(e);
    if (c.is_iso(d.g)) out.torsionfree.push_back(e);
  }
  for (ObjId e = 0; e < S.n_objects(); ++e) {
    const auto& d = s.obj_data(e);
    ObjId x = c.dom(d.f), z = c.cod(d.g);
    auto cx = cokernel(c, n, c.identity(x));
    auto kz = kernel(c, n, c.identity(z));
    if (!cx || !kz) {
      out.ok = false;
      out.error = "identity kernel/cokernel missing at " + S.obj_name(e);
      continue;
    }
    MorId gf = c.compose(d.g, d.f);
    MorId w = factor_through_cokernel(c, cx->kernel, gf);   // C(id_X) -> Z
    MorId u = factor_through_kernel(c, kz->kernel, gf);     // X -> K(id_Z)
    auto top = s.find_object(c.identity(x), cx->kernel);
    auto bot = s.find_object(kz->kernel, c.identity(z));
    if (w == kNoMor || u == kNoMor || !top || !bot) {
      out.ok = false;
      out.error = "three-row construction failed at " + S.obj_name(e);
      continue;
    }
    auto a1 = s.find_morphism(*top, e, c.identity(x), d.f, w);
    auto a2 = s.find_morphism(e, *bot, u, d.g, c.identity(z));
    if (!a1 || !a2 || !is_short_exact(S, s.ideal(), *a1, *a2)) {
      out.ok = false;
      out.error = "three-row certificate failed at " + S.obj_name(e);
      continue;
    }
    out.rows[e] = {*top, *bot, *a1, *a2, w, u};
  }
  return out;
}

// ---------------------------------------------------------------------------
// Memoized tower Ses^k(C).

inline std::string fingerprint(const FinCategory& c, const Ideal& n) {
  std::ostringstream os;
  os << c.name() << ';';
  for (ObjId o = 0; o < c.n_objects(); ++o) os << c.obj_name(o) << ',';
  os << ';';
  for (MorId m = 0; m < c.n_morphisms(); ++m)
    os << c.mor_name(m) << ':' << c.dom(m) << '>' << c.cod(m) << ',';
  os << ';';
  for (ObjId o = 0; o < c.n_objects(); ++o) os << c.identity(o) << ',';
  os << ';';
  for (MorId g = 0; g < c.n_morphisms(); ++g)
    for (MorId f = 0; f < c.n_morphisms(); ++f)
      if (c.composable(g, f)) os << c.try_compose(g, f) << ',';
  os << ';';
  for (MorId m = 0; m < c.n_morphisms(); ++m) os << (n.contains(m) ? '1' : '0');
  return os.str();
}

/// Levels of the tower: level(0) is the base pair, level(k) is Ses applied
/// k times. Levels are built on demand and owned by the tower.
class SesTower {
 public:
  SesTower(FinCategory base, Ideal n) : base_(std::move(base)), base_ideal_(std::move(n)) {}
  SesTower(const SesTower&) = delete;

  const FinCategory& cat(int level) {
    return level == 0 ? base_ : this->level(level).cat();
  }
  const Ideal& ideal(int level) {
    return level == 0 ? base_ideal_ : this->level(level).ideal();
  }
  /// Ses-level k >= 1; builds (and caches) lower levels as needed.
  const SesLevel& level(int k) {
    if (k < 1) throw std::invalid_argument("SesTower::level: k must be >= 1");
    while (int(levels_.size()) < k) {
      const FinCategory& b = levels_.empty() ? base_ : levels_.back()->cat();
      const Ideal& bn = levels_.empty() ? base_ideal_ : levels_.back()->ideal();
      levels_.push_back(std::make_unique<SesLevel>(b, bn));
    }
    return *levels_[std::size_t(k - 1)];
  }

 private:
  FinCategory base_;
  Ideal base_ideal_;
  std::vector<std::unique_ptr<SesLevel>> levels_;
};

/// Process-wide tower cache keyed by the category fingerprint, so repeated
/// law checks against the same base reuse the (expensive) Ses towers.
/// Safe for concurrent reads; population is serialized.
inline std::shared_ptr<SesTower> tower_for(const FinCategory& c, const Ideal& n) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<SesTower>> cache;
  std::string fp = fingerprint(c, n);
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(fp);
  if (it != cache.end()) return it->second;
  auto t = std::make_shared<SesTower>(c.clone(), n);
  cache[fp] = t;
  return t;
}

}  // namespace sextor
