#pragma once

// Relative kernels and cokernels by exhaustive universal-property search,
// with a canonical selection rule; short exact sequences; exact sequences
// and their short-exact replacement; the semiexactness check.
//
// Cokernels are kernels in the opposite category, and are implemented that
// way: FinCategory::op() shares morphism ids, so an Ideal works unchanged.

#include "sextor/ideal.hpp"

namespace sextor {

/// Universal-property predicate: k is a kernel of f relative to N.
/// True iff f∘k is null and every t with f∘t null factors through k
/// uniquely. Requires cod(k) == dom(f).
inline bool is_kernel_of(const FinCategory& c, const Ideal& n, MorId k, MorId f) {
  if (c.cod(k) != c.dom(f)) return false;
  MorId fk = c.try_compose(f, k);
  if (fk == kNoMor || !n.contains(fk)) return false;
  const ObjId b = c.dom(f), a = c.dom(k);
  for (MorId t : c.into(b)) {
    MorId ft = c.try_compose(f, t);
    if (ft == kNoMor || !n.contains(ft)) continue;
    int count = 0;
    for (MorId d : c.hom(c.dom(t), a)) {
      if (c.try_compose(k, d) == t && ++count > 1) break;
    }
    if (count != 1) return false;
  }
  return true;
}

inline bool is_cokernel_of(const FinCategory& c, const Ideal& n, MorId q, MorId f) {
  return is_kernel_of(c.op(), n, q, f);
}

struct KernelResult {
  MorId kernel = kNoMor;
  /// For each test morphism t with null composite, its unique factoring d.
  std::vector<std::pair<MorId, MorId>> mediators;
};

/// The canonical kernel of f: among all universal-property satisfiers,
/// the one minimal by (domain object name, morphism name).
inline std::optional<KernelResult> kernel(const FinCategory& c, const Ideal& n, MorId f) {
  MorId best = kNoMor;
  for (MorId k : c.into(c.dom(f))) {
    MorId fk = c.try_compose(f, k);
    if (fk == kNoMor || !n.contains(fk)) continue;
    if (!is_kernel_of(c, n, k, f)) continue;
    if (best == kNoMor || c.kernel_choice_less(k, best)) best = k;
  }
  if (best == kNoMor) return std::nullopt;
  KernelResult r;
  r.kernel = best;
  for (MorId t : c.into(c.dom(f))) {
    MorId ft = c.try_compose(f, t);
    if (ft == kNoMor || !n.contains(ft)) continue;
    for (MorId d : c.hom(c.dom(t), c.dom(best)))
      if (c.try_compose(best, d) == t) {
        r.mediators.emplace_back(t, d);
        break;
      }
  }
  return r;
}

inline std::optional<KernelResult> cokernel(const FinCategory& c, const Ideal& n, MorId f) {
  return kernel(c.op(), n, f);
}

/// The unique d with k∘d = t, where k satisfies the kernel property for
/// some morphism and f∘t is null. kNoMor when no factoring exists.
inline MorId factor_through_kernel(const FinCategory& c, MorId k, MorId t) {
  for (MorId d : c.hom(c.dom(t), c.dom(k)))
    if (c.try_compose(k, d) == t) return d;
  return kNoMor;
}

inline MorId factor_through_cokernel(const FinCategory& c, MorId q, MorId t) {
  return factor_through_kernel(c.op(), q, t);
}

inline bool is_short_exact(const FinCategory& c, const Ideal& n, MorId f, MorId g) {
  return c.cod(f) == c.dom(g) && is_kernel_of(c, n, f, g) && is_cokernel_of(c, n, g, f);
}

struct SemiexactReport {
  bool ok = true;
  std::vector<MorId> missing_kernels;
  std::vector<MorId> missing_cokernels;
};

inline SemiexactReport is_semiexact(const FinCategory& c, const Ideal& n) {
  SemiexactReport r;
  for (MorId m = 0; m < c.n_morphisms(); ++m) {
    if (!kernel(c, n, m)) {
      r.ok = false;
      r.missing_kernels.push_back(m);
    }
    if (!cokernel(c, n, m)) {
      r.ok = false;
      r.missing_cokernels.push_back(m);
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Exact sequences and their short-exact replacement.

enum class ExactError {
  None,
  NotNullComposite,        // g∘f is not null
  NoKernel,                // kernel of g missing
  NoCokernel,              // cokernel of f missing
  ReplacementNotShortExact,
  Xi1NotCoreflecting,
  Xi2NotReflecting,
};

inline const char* to_string(ExactError e) {
  switch (e) {
    case ExactError::None: return "none";
    case ExactError::NotNullComposite: return "not-null-composite";
    case ExactError::NoKernel: return "no-kernel";
    case ExactError::NoCokernel: return "no-cokernel";
    case ExactError::ReplacementNotShortExact: return "replacement-not-short-exact";
    case ExactError::Xi1NotCoreflecting: return "xi1-not-coreflecting";
    case ExactError::Xi2NotReflecting: return "xi2-not-reflecting";
  }
  return "?";
}

struct ExactSeq {
  MorId f = kNoMor, g = kNoMor;
  MorId xi1 = kNoMor;    // X -> K(g) with ker(g)∘xi1 = f
  MorId xi2 = kNoMor;    // C(f) -> Z with xi2∘coker(f) = g
  MorId rep_f = kNoMor;  // the replacement pair (ker g, coker f);
  MorId rep_g = kNoMor;  // equals (f, g) itself when already short exact
};

struct ExactResult {
  ExactError error = ExactError::None;
  std::optional<ExactSeq> seq;
  bool ok() const { return error == ExactError::None; }
};

/// The chosen short-exact replacement of (f, g). A pair that is already
/// short exact is returned unchanged (this aliasing is load-bearing: the
/// extended comparison functors preserve identities because of it).
inline ExactResult replacement(const FinCategory& c, const Ideal& n, MorId f, MorId g) {
  ExactResult r;
  MorId gf = c.try_compose(g, f);
  if (gf == kNoMor || !n.contains(gf)) {
    r.error = ExactError::NotNullComposite;
    return r;
  }
  if (is_short_exact(c, n, f, g)) {
    ExactSeq s;
    s.f = f;
    s.g = g;
    s.xi1 = c.identity(c.dom(f));
    s.xi2 = c.identity(c.cod(g));
    s.rep_f = f;
    s.rep_g = g;
    r.seq = s;
    return r;
  }
  auto kg = kernel(c, n, g);
  if (!kg) {
    r.error = ExactError::NoKernel;
    return r;
  }
  auto cf = cokernel(c, n, f);
  if (!cf) {
    r.error = ExactError::NoCokernel;
    return r;
  }
  ExactSeq s;
  s.f = f;
  s.g = g;
  s.rep_f = kg->kernel;
  s.rep_g = cf->kernel;
  s.xi1 = factor_through_kernel(c, kg->kernel, f);
  s.xi2 = factor_through_cokernel(c, cf->kernel, g);
  if (s.xi1 == kNoMor || s.xi2 == kNoMor) {
    // cannot happen for a null composite; guards table corruption
    r.error = ExactError::ReplacementNotShortExact;
    return r;
  }
  if (!is_short_exact(c, n, s.rep_f, s.rep_g)) {
    r.error = ExactError::ReplacementNotShortExact;
    return r;
  }
  if (!coreflects_null(c, n, s.xi1)) {
    r.error = ExactError::Xi1NotCoreflecting;
    return r;
  }
  if (!reflects_null(c, n, s.xi2)) {
    r.error = ExactError::Xi2NotReflecting;
    return r;
  }
  r.seq = s;
  return r;
}

inline bool is_exact(const FinCategory& c, const Ideal& n, MorId f, MorId g) {
  return replacement(c, n, f, g).ok();
}

/// reflects_null(ξ) via the kernel: true iff K(ξ) is a null object.
/// Agrees with the direct predicate whenever the kernel exists.
inline std::optional<bool> reflects_null_via_kernel(const FinCategory& c, const Ideal& n,
                                                    MorId xi) {
  auto k = kernel(c, n, xi);
  if (!k) return std::nullopt;
  return is_null_object(c, n, c.dom(k->kernel));
}

inline std::optional<bool> coreflects_null_via_cokernel(const FinCategory& c, const Ideal& n,
                                                        MorId xi) {
  auto q = cokernel(c, n, xi);
  if (!q) return std::nullopt;
  return is_null_object(c, n, c.cod(q->kernel));
}

/// All short exact sequences of (c, n), ordered by (name f, name g);
/// shared by the Ses construction and the per-object T2 searches.
struct SesScan {
  std::vector<std::pair<MorId, MorId>> seqs;
  std::vector<std::vector<std::size_t>> by_middle;  // indexed by middle ObjId

  static SesScan run(const FinCategory& c, const Ideal& n) {
    SesScan s;
    s.by_middle.resize(c.n_objects());
    for (ObjId y = 0; y < c.n_objects(); ++y)
      for (MorId f : c.into(y))
        for (MorId g : c.outof(y))
          if (is_short_exact(c, n, f, g)) s.seqs.emplace_back(f, g);
    std::sort(s.seqs.begin(), s.seqs.end(),
              [&](const auto& a, const auto& b) {
                if (a.first != b.first) {
                  if (c.mor_name(a.first) != c.mor_name(b.first))
                    return c.mor_name(a.first) < c.mor_name(b.first);
                }
                return c.mor_name(a.second) < c.mor_name(b.second);
              });
    for (std::size_t i = 0; i < s.seqs.size(); ++i)
      s.by_middle[c.cod(s.seqs[i].first)].push_back(i);
    return s;
  }
};

}  // namespace sextor
