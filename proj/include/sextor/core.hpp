#pragma once

// Finite categories as explicit tables: objects, morphisms with
// domain/codomain, an identity assignment and a total composition table.
// Everything downstream (kernels, short exact sequences, pretorsion
// theories, the comonad checks) works by exhaustive search over these
// tables, so categories are kept small and immutable after construction.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sextor {

using ObjId = std::uint32_t;
using MorId = std::uint32_t;

/// Sentinel for "no morphism" (absent composition entry, missing identity).
inline constexpr MorId kNoMor = static_cast<MorId>(-1);
inline constexpr ObjId kNoObj = static_cast<ObjId>(-1);

struct MorDecl {
  std::string name;
  ObjId dom = kNoObj;
  ObjId cod = kNoObj;
};

/// One violated law, with enough context to reconstruct the witness.
struct Violation {
  std::string rule;    // short machine-readable tag, e.g. "unit-law"
  std::string detail;  // human-readable witness description
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  void add(std::string rule, std::string detail) {
    violations.push_back({std::move(rule), std::move(detail)});
  }
};

/// A finite category stored as plain tables. The structure may be lawless
/// (validate_category reports violations); operations beyond validation
/// assume a validated category.
///
/// Identifier order is the insertion (file) order and is preserved by
/// serialization. Canonical *choices* ("the minimal kernel", ...) instead
/// use the name-lexicographic order, which is stable across reorderings.
class FinCategory {
 public:
  FinCategory() = default;

  FinCategory(std::string name, std::vector<std::string> objects,
              std::vector<MorDecl> morphisms, std::vector<MorId> identities,
              std::vector<MorId> comp_table)
      : name_(std::move(name)),
        objs_(std::move(objects)),
        mors_(std::move(morphisms)),
        identity_(std::move(identities)),
        comp_(std::move(comp_table)) {
    const std::size_t m = mors_.size();
    if (identity_.size() != objs_.size())
      throw std::invalid_argument("identity table size mismatch");
    if (comp_.size() != m * m)
      throw std::invalid_argument("composition table size mismatch");
    freeze();
  }

  const std::string& name() const { return name_; }
  std::size_t n_objects() const { return objs_.size(); }
  std::size_t n_morphisms() const { return mors_.size(); }

  const std::string& obj_name(ObjId o) const { return objs_[o]; }
  const std::string& mor_name(MorId m) const { return mors_[m].name; }
  ObjId dom(MorId m) const { return mors_[m].dom; }
  ObjId cod(MorId m) const { return mors_[m].cod; }
  MorId identity(ObjId o) const { return identity_[o]; }
  bool is_identity(MorId m) const {
    return identity_[mors_[m].dom] == m && mors_[m].dom == mors_[m].cod;
  }

  bool composable(MorId g, MorId f) const { return cod(f) == dom(g); }

  /// g∘f; kNoMor when the pair is not composable or the entry is missing.
  MorId try_compose(MorId g, MorId f) const {
    return comp_[static_cast<std::size_t>(g) * mors_.size() + f];
  }
  MorId compose(MorId g, MorId f) const {
    MorId h = try_compose(g, f);
    if (h == kNoMor) throw std::logic_error("compose: undefined pair");
    return h;
  }

  std::optional<ObjId> find_obj(const std::string& n) const {
    auto it = obj_index_.find(n);
    if (it == obj_index_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<MorId> find_mor(const std::string& n) const {
    auto it = mor_index_.find(n);
    if (it == mor_index_.end()) return std::nullopt;
    return it->second;
  }

  const std::vector<MorId>& into(ObjId o) const { return into_[o]; }
  const std::vector<MorId>& outof(ObjId o) const { return outof_[o]; }
  const std::vector<MorId>& hom(ObjId a, ObjId b) const {
    return hom_[static_cast<std::size_t>(a) * objs_.size() + b];
  }

  bool is_iso(MorId m) const { return inverse_[m] != kNoMor; }
  MorId inverse(MorId m) const { return inverse_[m]; }
  bool objs_isomorphic(ObjId a, ObjId b) const {
    if (a == b) return true;
    for (MorId m : hom(a, b))
      if (is_iso(m)) return true;
    return false;
  }

  // Name-lexicographic order: the canonical order used whenever a choice
  // has to be made. Independent of insertion order.
  bool obj_name_less(ObjId a, ObjId b) const {
    return obj_rank_[a] < obj_rank_[b];
  }
  bool mor_name_less(MorId a, MorId b) const {
    return mor_rank_[a] < mor_rank_[b];
  }
  /// Rule for canonical (co)kernel selection: minimal by the name of the
  /// far object (domain for kernels), then by morphism name.
  bool kernel_choice_less(MorId a, MorId b) const {
    if (obj_rank_[dom(a)] != obj_rank_[dom(b)])
      return obj_rank_[dom(a)] < obj_rank_[dom(b)];
    return mor_rank_[a] < mor_rank_[b];
  }

  bool operator==(const FinCategory& o) const {
    return name_ == o.name_ && objs_ == o.objs_ && identity_ == o.identity_ &&
           comp_ == o.comp_ && mor_decls_equal(o);
  }

  /// Deep copy (FinCategory is otherwise move-only because of the cached
  /// opposite category).
  FinCategory clone() const {
    return FinCategory(name_, objs_, mors_, identity_, comp_);
  }

  /// The opposite category: same names, dom/cod swapped, composition
  /// transposed. Built once on demand; kernels in op are cokernels here.
  const FinCategory& op() const {
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (!op_) {
      std::vector<MorDecl> oms;
      oms.reserve(mors_.size());
      for (const auto& m : mors_) oms.push_back({m.name, m.cod, m.dom});
      const std::size_t n = mors_.size();
      std::vector<MorId> ocomp(n * n, kNoMor);
      for (std::size_t g = 0; g < n; ++g)
        for (std::size_t f = 0; f < n; ++f)
          ocomp[g * n + f] = comp_[f * n + g];
      op_ = std::make_unique<FinCategory>(name_ + "^op", objs_, std::move(oms),
                                          identity_, std::move(ocomp));
    }
    return *op_;
  }

 private:
  void freeze() {
    const std::size_t no = objs_.size(), nm = mors_.size();
    obj_index_.clear();
    mor_index_.clear();
    for (std::size_t i = 0; i < no; ++i) obj_index_[objs_[i]] = ObjId(i);
    for (std::size_t i = 0; i < nm; ++i) mor_index_[mors_[i].name] = MorId(i);
    if (obj_index_.size() != no) throw std::invalid_argument("duplicate object name");
    if (mor_index_.size() != nm) throw std::invalid_argument("duplicate morphism name");

    into_.assign(no, {});
    outof_.assign(no, {});
    hom_.assign(no * no, {});
    for (MorId m = 0; m < nm; ++m) {
      if (mors_[m].dom >= no || mors_[m].cod >= no)
        throw std::invalid_argument("morphism endpoint out of range");
      into_[mors_[m].cod].push_back(m);
      outof_[mors_[m].dom].push_back(m);
      hom_[static_cast<std::size_t>(mors_[m].dom) * no + mors_[m].cod].push_back(m);
    }

    // Name ranks for canonical order.
    obj_rank_.resize(no);
    mor_rank_.resize(nm);
    {
      std::vector<ObjId> ord(no);
      std::iota(ord.begin(), ord.end(), 0);
      std::sort(ord.begin(), ord.end(),
                [&](ObjId a, ObjId b) { return objs_[a] < objs_[b]; });
      for (std::size_t i = 0; i < no; ++i) obj_rank_[ord[i]] = uint32_t(i);
      std::vector<MorId> mord(nm);
      std::iota(mord.begin(), mord.end(), 0);
      std::sort(mord.begin(), mord.end(), [&](MorId a, MorId b) {
        return mors_[a].name < mors_[b].name;
      });
      for (std::size_t i = 0; i < nm; ++i) mor_rank_[mord[i]] = uint32_t(i);
    }

    // Inverses (meaningful only on lawful categories; harmless otherwise).
    inverse_.assign(nm, kNoMor);
    for (MorId m = 0; m < nm; ++m) {
      if (inverse_[m] != kNoMor) continue;
      ObjId a = mors_[m].dom, b = mors_[m].cod;
      MorId ida = identity_[a], idb = identity_[b];
      if (ida == kNoMor || idb == kNoMor) continue;
      for (MorId n : hom(b, a)) {
        if (try_compose(n, m) == ida && try_compose(m, n) == idb) {
          inverse_[m] = n;
          inverse_[n] = m;
          break;
        }
      }
    }
  }

  bool mor_decls_equal(const FinCategory& o) const {
    if (mors_.size() != o.mors_.size()) return false;
    for (std::size_t i = 0; i < mors_.size(); ++i)
      if (mors_[i].name != o.mors_[i].name || mors_[i].dom != o.mors_[i].dom ||
          mors_[i].cod != o.mors_[i].cod)
        return false;
    return true;
  }

  std::string name_;
  std::vector<std::string> objs_;
  std::vector<MorDecl> mors_;
  std::vector<MorId> identity_;
  std::vector<MorId> comp_;  // comp_[g*nm + f] = g∘f

  std::map<std::string, ObjId> obj_index_;
  std::map<std::string, MorId> mor_index_;
  std::vector<std::vector<MorId>> into_, outof_;
  std::vector<std::vector<MorId>> hom_;
  std::vector<uint32_t> obj_rank_, mor_rank_;
  std::vector<MorId> inverse_;
  mutable std::unique_ptr<FinCategory> op_;
};

/// Incremental builder used by the parser and the fixture generators.
class CategoryBuilder {
 public:
  explicit CategoryBuilder(std::string name) : name_(std::move(name)) {}

  ObjId add_object(const std::string& n) {
    if (obj_index_.count(n)) throw std::invalid_argument("duplicate object " + n);
    objs_.push_back(n);
    obj_index_[n] = ObjId(objs_.size() - 1);
    return ObjId(objs_.size() - 1);
  }
  MorId add_morphism(const std::string& n, ObjId dom, ObjId cod) {
    if (mor_index_.count(n)) throw std::invalid_argument("duplicate morphism " + n);
    mors_.push_back({n, dom, cod});
    mor_index_[n] = MorId(mors_.size() - 1);
    return MorId(mors_.size() - 1);
  }
  void set_identity(ObjId o, MorId m) { identities_.emplace_back(o, m); }
  void set_compose(MorId g, MorId f, MorId h) { comps_.push_back({g, f, h}); }

  std::optional<ObjId> find_obj(const std::string& n) const {
    auto it = obj_index_.find(n);
    return it == obj_index_.end() ? std::nullopt : std::optional<ObjId>(it->second);
  }
  std::optional<MorId> find_mor(const std::string& n) const {
    auto it = mor_index_.find(n);
    return it == mor_index_.end() ? std::nullopt : std::optional<MorId>(it->second);
  }
  std::size_t n_objects() const { return objs_.size(); }
  std::size_t n_morphisms() const { return mors_.size(); }
  ObjId mor_dom(MorId m) const { return mors_[m].dom; }
  ObjId mor_cod(MorId m) const { return mors_[m].cod; }
  const std::string& obj_name(ObjId o) const { return objs_[o]; }
  const std::string& mor_name(MorId m) const { return mors_[m].name; }

  /// Missing composition entries for composable pairs, as (g, f).
  std::vector<std::pair<MorId, MorId>> missing_composites() const {
    const std::size_t nm = mors_.size();
    std::vector<char> have(nm * nm, 0);
    for (const auto& c : comps_) have[std::size_t(c[0]) * nm + c[1]] = 1;
    std::vector<std::pair<MorId, MorId>> missing;
    for (MorId g = 0; g < nm; ++g)
      for (MorId f = 0; f < nm; ++f)
        if (mors_[f].cod == mors_[g].dom && !have[std::size_t(g) * nm + f])
          missing.emplace_back(g, f);
    return missing;
  }

  FinCategory build() const {
    const std::size_t nm = mors_.size();
    std::vector<MorId> ids(objs_.size(), kNoMor);
    for (auto& [o, m] : identities_) ids[o] = m;
    std::vector<MorId> comp(nm * nm, kNoMor);
    for (const auto& c : comps_) comp[std::size_t(c[0]) * nm + c[1]] = c[2];
    return FinCategory(name_, objs_, mors_, std::move(ids), std::move(comp));
  }

 private:
  std::string name_;
  std::vector<std::string> objs_;
  std::vector<MorDecl> mors_;
  std::vector<std::pair<ObjId, MorId>> identities_;
  std::vector<std::array<MorId, 3>> comps_;
  std::map<std::string, ObjId> obj_index_;
  std::map<std::string, MorId> mor_index_;
};

/// Checks every category law exhaustively and reports each violation with
/// its witnessing data. Pure: equal inputs give identical reports.
inline ValidationReport validate_category(const FinCategory& c) {
  ValidationReport r;
  const std::size_t no = c.n_objects(), nm = c.n_morphisms();
  for (ObjId o = 0; o < no; ++o) {
    MorId i = c.identity(o);
    if (i == kNoMor) {
      r.add("identity-missing", "object " + c.obj_name(o) + " has no identity");
      continue;
    }
    if (c.dom(i) != o || c.cod(i) != o)
      r.add("identity-endpoints", "identity " + c.mor_name(i) + " of " +
                                      c.obj_name(o) + " is not an endomorphism");
  }
  // Totality: defined exactly on composable pairs.
  for (MorId g = 0; g < nm; ++g)
    for (MorId f = 0; f < nm; ++f) {
      MorId h = c.try_compose(g, f);
      if (c.composable(g, f)) {
        if (h == kNoMor)
          r.add("composition-missing",
                "no entry for " + c.mor_name(g) + " . " + c.mor_name(f));
        else if (c.dom(h) != c.dom(f) || c.cod(h) != c.cod(g))
          r.add("composition-endpoints",
                c.mor_name(g) + " . " + c.mor_name(f) + " = " + c.mor_name(h) +
                    " has wrong endpoints");
      } else if (h != kNoMor) {
        r.add("composition-noncomposable",
              "entry for non-composable pair " + c.mor_name(g) + " . " + c.mor_name(f));
      }
    }
  // Unit laws.
  for (MorId f = 0; f < nm; ++f) {
    MorId idd = c.identity(c.dom(f)), idc = c.identity(c.cod(f));
    if (idd != kNoMor && c.try_compose(f, idd) != f)
      r.add("unit-law", "(" + c.mor_name(f) + ", " + c.mor_name(idd) + ")");
    if (idc != kNoMor && c.try_compose(idc, f) != f)
      r.add("unit-law", "(" + c.mor_name(idc) + ", " + c.mor_name(f) + ")");
  }
  // Associativity over all composable triples.
  for (MorId h = 0; h < nm; ++h)
    for (MorId g = 0; g < nm; ++g) {
      if (!c.composable(h, g)) continue;
      MorId hg = c.try_compose(h, g);
      if (hg == kNoMor) continue;
      for (MorId f = 0; f < nm; ++f) {
        if (!c.composable(g, f)) continue;
        MorId gf = c.try_compose(g, f);
        if (gf == kNoMor) continue;
        if (c.try_compose(h, gf) != c.try_compose(hg, f))
          r.add("associativity", "(" + c.mor_name(h) + ", " + c.mor_name(g) +
                                     ", " + c.mor_name(f) + ")");
      }
    }
  return r;
}

// ---------------------------------------------------------------------------
// Fixture generators.

/// The chain category 1 ≤ 2 ≤ ... ≤ n: one morphism i -> j whenever i ≤ j.
inline FinCategory build_chain(int n) {
  if (n < 1) throw std::invalid_argument("build_chain: n must be >= 1");
  CategoryBuilder b("CH" + std::to_string(n));
  for (int i = 1; i <= n; ++i) b.add_object(std::to_string(i));
  // identities first, then the strict inequalities
  std::vector<std::vector<MorId>> arrow(n + 1, std::vector<MorId>(n + 1, kNoMor));
  for (int i = 1; i <= n; ++i) {
    MorId m = b.add_morphism("id" + std::to_string(i), ObjId(i - 1), ObjId(i - 1));
    arrow[i][i] = m;
    b.set_identity(ObjId(i - 1), m);
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      arrow[i][j] = b.add_morphism("m" + std::to_string(i) + "_" + std::to_string(j),
                                   ObjId(i - 1), ObjId(j - 1));
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      for (int k = j; k <= n; ++k)
        b.set_compose(arrow[j][k], arrow[i][j], arrow[i][k]);
  return b.build();
}

namespace detail {
// Basepoint-preserving maps Pa -> Pb, where Pa = {0,...,a-1} with basepoint 0.
// A map is encoded by its values on 1..a-1.
inline std::vector<std::vector<int>> pointed_maps(int a, int b) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(std::size_t(a > 0 ? a - 1 : 0), 0);
  std::size_t total = 1;
  for (int i = 0; i < a - 1; ++i) total *= std::size_t(b);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (int i = 0; i < a - 1; ++i) {
      v[std::size_t(i)] = int(c % std::size_t(b));
      c /= std::size_t(b);
    }
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}
}  // namespace detail

/// Skeleton of pointed finite sets of cardinality 1..max_size. Objects are
/// P1..Pk; morphisms are basepoint-preserving maps. The three classical
/// P1/P2 maps keep their traditional names i, r, c; everything else is
/// named m{a}{b}_{values}.
inline FinCategory build_pointed_sets(int max_size) {
  if (max_size < 1 || max_size > 4)
    throw std::invalid_argument("build_pointed_sets: max_size must be in 1..4");
  const int k = max_size;
  CategoryBuilder b("PS" + std::to_string(k));
  for (int a = 1; a <= k; ++a) b.add_object("P" + std::to_string(a));

  // morphism key: (a, b, value vector)
  std::map<std::tuple<int, int, std::vector<int>>, MorId> table;
  auto map_name = [&](int a, int bb, const std::vector<int>& v) -> std::string {
    std::vector<int> idv;
    for (int x = 1; x < a; ++x) idv.push_back(x);
    if (a == bb && v == idv) return "id" + std::to_string(a);
    if (a == 1 && bb == 2) return "i";
    if (a == 2 && bb == 1) return "r";
    if (a == 2 && bb == 2) return "c";  // the only non-identity P2 -> P2 map
    std::string s = "m" + std::to_string(a) + std::to_string(bb) + "_";
    for (int x : v) s += std::to_string(x);
    return s;
  };

  // identities first so they head the morphism list
  for (int a = 1; a <= k; ++a) {
    std::vector<int> idv;
    for (int x = 1; x < a; ++x) idv.push_back(x);
    MorId m = b.add_morphism(map_name(a, a, idv), ObjId(a - 1), ObjId(a - 1));
    table[{a, a, idv}] = m;
    b.set_identity(ObjId(a - 1), m);
  }
  for (int a = 1; a <= k; ++a)
    for (int bb = 1; bb <= k; ++bb)
      for (const auto& v : detail::pointed_maps(a, bb)) {
        if (table.count({a, bb, v})) continue;
        table[{a, bb, v}] = b.add_morphism(map_name(a, bb, v), ObjId(a - 1), ObjId(bb - 1));
      }

  // composition: (g: Pb->Pc) ∘ (f: Pa->Pb)
  auto apply = [](const std::vector<int>& g, int x) { return x == 0 ? 0 : g[std::size_t(x - 1)]; };
  for (const auto& [fk, fid] : table)
    for (const auto& [gk, gid] : table) {
      const auto& [fa, fb, fv] = fk;
      const auto& [ga, gb, gv] = gk;
      if (fb != ga) continue;
      std::vector<int> hv;
      for (int x = 1; x < fa; ++x) hv.push_back(apply(gv, fv[std::size_t(x - 1)]));
      b.set_compose(gid, fid, table.at({fa, gb, hv}));
    }
  return b.build();
}

}  // namespace sextor
