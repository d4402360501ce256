#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "equimorse/core.hpp"

namespace equimorse {

/// Loopfree poset-enriched category.  Objects and morphisms are dense ids;
/// hom-set partial orders are stored as strict related pairs, transitively
/// closed; composition is a total table over composable pairs.
class LPCategory {
 public:
  struct Mor {
    int src = -1;
    int dst = -1;
    std::string label;
  };

  std::vector<std::string> objects;
  std::vector<Mor> mors;
  std::vector<int> idmor;  // object -> identity morphism id

  int add_object(std::string label) {
    objects.push_back(std::move(label));
    idmor.push_back(-1);
    return static_cast<int>(objects.size()) - 1;
  }

  int add_morphism(int src, int dst, std::string label) {
    mors.push_back({src, dst, std::move(label)});
    int id = static_cast<int>(mors.size()) - 1;
    homs_[{src, dst}].push_back(id);
    return id;
  }

  void add_identity(int obj) {
    int id = add_morphism(obj, obj, "id:" + objects[obj]);
    idmor[obj] = id;
  }

  void set_compose(int f, int g, int h) { comp_[{f, g}] = h; }

  // g after f; throws if the pair was never registered.
  int compose(int f, int g) const {
    auto it = comp_.find({f, g});
    if (it == comp_.end())
      throw CheckError("composition not defined: " + mors[f].label + " ; " +
                       mors[g].label);
    return it->second;
  }
  bool has_compose(int f, int g) const { return comp_.count({f, g}) != 0; }

  void add_le(int f, int g) {
    if (f != g) strict_le_.insert({f, g});
  }

  // f => g in the hom-set order (reflexive).
  bool leq(int f, int g) const {
    return f == g || strict_le_.count({f, g}) != 0;
  }

  void close_order() {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<std::pair<int, int>> add;
      for (const auto& [a, b] : strict_le_)
        for (const auto& [c, d] : strict_le_)
          if (b == c && a != d && !strict_le_.count({a, d})) add.push_back({a, d});
      for (auto& p : add) {
        strict_le_.insert(p);
        changed = true;
      }
    }
  }

  const std::vector<int>& hom(int x, int y) const {
    static const std::vector<int> kEmpty;
    auto it = homs_.find({x, y});
    return it == homs_.end() ? kEmpty : it->second;
  }

  int n_objects() const { return static_cast<int>(objects.size()); }
  int n_morphisms() const { return static_cast<int>(mors.size()); }

  const std::set<std::pair<int, int>>& strict_le() const { return strict_le_; }
  const std::map<std::pair<int, int>, int>& compositions() const { return comp_; }
  const std::map<std::pair<int, int>, std::vector<int>>& homsets() const {
    return homs_;
  }

  std::string mor_desc(int f) const {
    return mors[f].label + " (" + objects[mors[f].src] + " -> " +
           objects[mors[f].dst] + ")";
  }

 private:
  std::map<std::pair<int, int>, std::vector<int>> homs_;
  std::map<std::pair<int, int>, int> comp_;
  std::set<std::pair<int, int>> strict_le_;
};

/// Checks every LP axiom and reports violations with witnesses.
inline ValidationReport validate_lp(const LPCategory& C) {
  ValidationReport rep;
  const int nobj = C.n_objects();
  for (int x = 0; x < nobj; ++x) {
    if (x >= static_cast<int>(C.idmor.size()) || C.idmor[x] < 0) {
      rep.add("identity-missing", C.objects[x]);
      return rep;
    }
  }
  for (int f = 0; f < C.n_morphisms(); ++f) {
    const auto& m = C.mors[f];
    if (m.src == m.dst && C.idmor[m.src] != f)
      rep.add("loopfree-endomorphism", C.mor_desc(f));
  }
  for (int x = 0; x < nobj; ++x)
    for (int y = x + 1; y < nobj; ++y)
      if (!C.hom(x, y).empty() && !C.hom(y, x).empty())
        rep.add("loopfree-2cycle", C.objects[x] + " <-> " + C.objects[y]);

  // composition total, typed, unital, associative
  for (int f = 0; f < C.n_morphisms(); ++f)
    for (int g = 0; g < C.n_morphisms(); ++g) {
      if (C.mors[f].dst != C.mors[g].src) continue;
      if (!C.has_compose(f, g)) {
        rep.add("composition-missing", C.mor_desc(f) + " ; " + C.mor_desc(g));
        continue;
      }
      int h = C.compose(f, g);
      if (C.mors[h].src != C.mors[f].src || C.mors[h].dst != C.mors[g].dst)
        rep.add("composition-typed", C.mor_desc(f) + " ; " + C.mor_desc(g));
    }
  if (!rep.ok()) return rep;
  for (int f = 0; f < C.n_morphisms(); ++f) {
    if (C.compose(C.idmor[C.mors[f].src], f) != f ||
        C.compose(f, C.idmor[C.mors[f].dst]) != f)
      rep.add("unit", C.mor_desc(f));
  }
  for (int f = 0; f < C.n_morphisms(); ++f)
    for (int g = 0; g < C.n_morphisms(); ++g) {
      if (C.mors[f].dst != C.mors[g].src) continue;
      for (int h = 0; h < C.n_morphisms(); ++h) {
        if (C.mors[g].dst != C.mors[h].src) continue;
        if (C.compose(C.compose(f, g), h) != C.compose(f, C.compose(g, h)))
          rep.add("associativity",
                  C.mor_desc(f) + " ; " + C.mor_desc(g) + " ; " + C.mor_desc(h));
      }
    }

  // order: within hom-sets, antisymmetric, transitive
  for (const auto& [a, b] : C.strict_le()) {
    if (C.mors[a].src != C.mors[b].src || C.mors[a].dst != C.mors[b].dst)
      rep.add("order-not-parallel", C.mor_desc(a) + " => " + C.mor_desc(b));
    if (C.strict_le().count({b, a}))
      rep.add("order-antisymmetry", C.mor_desc(a) + " <=> " + C.mor_desc(b));
  }
  for (const auto& [a, b] : C.strict_le())
    for (const auto& [c, d] : C.strict_le())
      if (b == c && a != d && !C.leq(a, d))
        rep.add("order-transitivity",
                C.mor_desc(a) + " => " + C.mor_desc(b) + " => " + C.mor_desc(d));

  // order-preserving composition
  for (const auto& [f0, f1] : C.strict_le())
    for (int g0 = 0; g0 < C.n_morphisms(); ++g0) {
      if (C.mors[f0].dst != C.mors[g0].src) continue;
      for (int g1 : C.hom(C.mors[g0].src, C.mors[g0].dst)) {
        if (!C.leq(g0, g1)) continue;
        if (!C.leq(C.compose(f0, g0), C.compose(f1, g1)))
          rep.add("order-composition",
                  C.mor_desc(f0) + "=>" + C.mor_desc(f1) + " with " +
                      C.mor_desc(g0) + "=>" + C.mor_desc(g1));
      }
    }
  for (const auto& [g0, g1] : C.strict_le())
    for (int f0 = 0; f0 < C.n_morphisms(); ++f0) {
      if (C.mors[f0].dst != C.mors[g0].src) continue;
      if (!C.leq(C.compose(f0, g0), C.compose(f0, g1)))
        rep.add("order-composition",
                C.mor_desc(f0) + " with " + C.mor_desc(g0) + "=>" + C.mor_desc(g1));
    }
  return rep;
}

/// Functor between LP-categories as explicit object/morphism maps.
struct LPFunctor {
  std::vector<int> obj_map;  // source object -> target object
  std::vector<int> mor_map;  // source morphism -> target morphism
};

inline ValidationReport check_lp_functor(const LPFunctor& F, const LPCategory& C,
                                         const LPCategory& D) {
  ValidationReport rep;
  if (static_cast<int>(F.obj_map.size()) != C.n_objects() ||
      static_cast<int>(F.mor_map.size()) != C.n_morphisms()) {
    rep.add("totality", "object or morphism map has wrong size");
    return rep;
  }
  for (int x = 0; x < C.n_objects(); ++x)
    if (F.obj_map[x] < 0 || F.obj_map[x] >= D.n_objects()) {
      rep.add("totality", "object " + C.objects[x]);
      return rep;
    }
  for (int f = 0; f < C.n_morphisms(); ++f) {
    int g = F.mor_map[f];
    if (g < 0 || g >= D.n_morphisms()) {
      rep.add("totality", C.mor_desc(f));
      return rep;
    }
    if (D.mors[g].src != F.obj_map[C.mors[f].src] ||
        D.mors[g].dst != F.obj_map[C.mors[f].dst])
      rep.add("typing", C.mor_desc(f));
  }
  if (!rep.ok()) return rep;
  for (int x = 0; x < C.n_objects(); ++x)
    if (F.mor_map[C.idmor[x]] != D.idmor[F.obj_map[x]])
      rep.add("identity", C.objects[x]);
  for (const auto& [pair, h] : C.compositions()) {
    int img = D.compose(F.mor_map[pair.first], F.mor_map[pair.second]);
    if (img != F.mor_map[h])
      rep.add("composition",
              C.mor_desc(pair.first) + " ; " + C.mor_desc(pair.second));
  }
  for (const auto& [a, b] : C.strict_le())
    if (!D.leq(F.mor_map[a], F.mor_map[b]))
      rep.add("order", C.mor_desc(a) + " => " + C.mor_desc(b));
  return rep;
}

inline LPFunctor identity_functor(const LPCategory& C) {
  LPFunctor F;
  F.obj_map.resize(C.n_objects());
  F.mor_map.resize(C.n_morphisms());
  for (int i = 0; i < C.n_objects(); ++i) F.obj_map[i] = i;
  for (int i = 0; i < C.n_morphisms(); ++i) F.mor_map[i] = i;
  return F;
}

inline LPFunctor compose_functors(const LPFunctor& F, const LPFunctor& G) {
  LPFunctor H;
  for (int x : F.obj_map) H.obj_map.push_back(G.obj_map[x]);
  for (int f : F.mor_map) H.mor_map.push_back(G.mor_map[f]);
  return H;
}

inline bool is_identity_functor(const LPFunctor& F) {
  for (int i = 0; i < static_cast<int>(F.obj_map.size()); ++i)
    if (F.obj_map[i] != i) return false;
  for (int i = 0; i < static_cast<int>(F.mor_map.size()); ++i)
    if (F.mor_map[i] != i) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Category dump format:
//   object <id> <label>
//   mor <id> <src> -> <dst> <label>
//   le <id> <id>
//   comp <f> <g> = <h>

inline std::string sanitize_label(const std::string& s) {
  std::string t = s;
  for (char& c : t)
    if (std::isspace(static_cast<unsigned char>(c))) c = '_';
  return t.empty() ? "_" : t;
}

inline std::string dump_category(const LPCategory& C) {
  std::ostringstream out;
  for (int x = 0; x < C.n_objects(); ++x)
    out << "object " << x << " " << sanitize_label(C.objects[x]) << "\n";
  for (int f = 0; f < C.n_morphisms(); ++f)
    out << "mor " << f << " " << C.mors[f].src << " -> " << C.mors[f].dst << " "
        << sanitize_label(C.mors[f].label) << "\n";
  for (const auto& [a, b] : C.strict_le()) out << "le " << a << " " << b << "\n";
  for (const auto& [pair, h] : C.compositions())
    out << "comp " << pair.first << " " << pair.second << " = " << h << "\n";
  return out.str();
}

inline LPCategory load_category(const std::string& text) {
  LPCategory C;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::vector<std::pair<int, int>> le_pairs;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    auto fail = [&](const std::string& why) {
      throw InputError("category dump line " + std::to_string(lineno) + ": " + why);
    };
    if (kw == "object") {
      int id;
      std::string label;
      if (!(ls >> id >> label)) fail("expected 'object <id> <label>'");
      if (id != C.n_objects()) fail("object ids must be dense and in order");
      C.add_object(label);
    } else if (kw == "mor") {
      int id, src, dst;
      std::string arrow, label;
      if (!(ls >> id >> src >> arrow >> dst >> label) || arrow != "->")
        fail("expected 'mor <id> <src> -> <dst> <label>'");
      if (id != C.n_morphisms()) fail("morphism ids must be dense and in order");
      if (src < 0 || src >= C.n_objects() || dst < 0 || dst >= C.n_objects())
        fail("morphism endpoints out of range");
      int got = C.add_morphism(src, dst, label);
      if (src == dst && C.idmor[src] < 0) C.idmor[src] = got;
    } else if (kw == "le") {
      int a, b;
      if (!(ls >> a >> b)) fail("expected 'le <id> <id>'");
      le_pairs.push_back({a, b});
    } else if (kw == "comp") {
      int f, g, h;
      std::string eq;
      if (!(ls >> f >> g >> eq >> h) || eq != "=")
        fail("expected 'comp <f> <g> = <h>'");
      C.set_compose(f, g, h);
    } else {
      fail("unknown keyword '" + kw + "'");
    }
  }
  for (auto [a, b] : le_pairs) {
    if (a < 0 || a >= C.n_morphisms() || b < 0 || b >= C.n_morphisms())
      throw InputError("le pair out of range");
    C.add_le(a, b);
  }
  return C;
}

}  // namespace equimorse
