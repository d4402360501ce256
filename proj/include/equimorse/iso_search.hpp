#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "equimorse/core.hpp"
#include "equimorse/lp_category.hpp"

namespace equimorse {

enum class IsoOutcome { Found, None, Inconclusive };

struct IsoResult {
  IsoOutcome outcome = IsoOutcome::None;
  LPFunctor fwd;  // C -> D
  LPFunctor bwd;  // D -> C, inverse of fwd
  bool found() const { return outcome == IsoOutcome::Found; }
};

namespace detail {

// Degree/hom-shape signatures refined a few rounds (1-WL style).  Colors are
// canonical across the two categories being compared.
inline std::vector<std::uint64_t> object_colors(const LPCategory& C) {
  const int n = C.n_objects();
  std::vector<std::uint64_t> color(n, 0x9e3779b97f4a7c15ULL);
  auto hom_shape = [&](int x, int y) -> std::uint64_t {
    const auto& h = C.hom(x, y);
    std::uint64_t v = splitmix64(h.size());
    std::size_t rel = 0;
    for (int a : h)
      for (int b : h)
        if (a != b && C.leq(a, b)) ++rel;
    return splitmix64(v ^ splitmix64(rel * 1315423911ULL));
  };
  for (int round = 0; round < 4; ++round) {
    std::vector<std::uint64_t> next(n);
    for (int x = 0; x < n; ++x) {
      std::vector<std::uint64_t> out, in;
      for (int y = 0; y < n; ++y) {
        if (y == x) continue;
        if (!C.hom(x, y).empty())
          out.push_back(splitmix64(color[y] ^ hom_shape(x, y)));
        if (!C.hom(y, x).empty())
          in.push_back(splitmix64(color[y] ^ (hom_shape(y, x) * 3ULL)));
      }
      std::sort(out.begin(), out.end());
      std::sort(in.begin(), in.end());
      std::uint64_t h = color[x];
      for (auto v : out) h = splitmix64(h ^ v);
      h = splitmix64(h ^ 0xabcdefULL);
      for (auto v : in) h = splitmix64(h ^ v);
      next[x] = h;
    }
    color = next;
  }
  return color;
}

struct IsoSearch {
  const LPCategory& C;
  const LPCategory& D;
  std::size_t budget;
  std::size_t nodes = 0;
  bool exhausted_budget = false;

  // equivariance constraints: if set, obj_orbit maps must commute
  const std::vector<std::vector<int>>* c_obj_act = nullptr;  // [g][x]
  const std::vector<std::vector<int>>* d_obj_act = nullptr;
  const std::vector<std::vector<int>>* c_mor_act = nullptr;
  const std::vector<std::vector<int>>* d_mor_act = nullptr;
  int n_group = 0;

  std::vector<int> obj_map;       // C object -> D object or -1
  std::vector<int> obj_used;      // D object -> C object or -1
  std::vector<int> mor_map;       // C morphism -> D morphism or -1
  std::vector<int> mor_used;      // D morphism -> C morphism or -1
  std::vector<std::uint64_t> ccol, dcol;

  explicit IsoSearch(const LPCategory& c, const LPCategory& d, std::size_t b)
      : C(c), D(d), budget(b) {}

  bool assign_morphism(int f, int g, std::vector<std::pair<int, int>>& log);
  bool propagate_action_obj(int x, int y, std::vector<std::pair<int, int>>& log);
  bool extend_objects(int next_obj);
  bool extend_morphisms(std::size_t next_mor);
  bool run(const std::vector<std::pair<int, int>>& hints);
};

inline bool IsoSearch::assign_morphism(int f, int g,
                                       std::vector<std::pair<int, int>>& log) {
  if (mor_map[f] == g) return true;
  if (mor_map[f] != -1 || mor_used[g] != -1) return false;
  if (D.mors[g].src != obj_map[C.mors[f].src] ||
      D.mors[g].dst != obj_map[C.mors[f].dst])
    return false;
  mor_map[f] = g;
  mor_used[g] = f;
  log.push_back({f, g});
  // forced consequences: composition with already-mapped morphisms
  for (const auto& [pair, h] : C.compositions()) {
    auto [a, b] = pair;
    if (mor_map[a] == -1 || mor_map[b] == -1) continue;
    if (!D.has_compose(mor_map[a], mor_map[b])) return false;
    int img = D.compose(mor_map[a], mor_map[b]);
    if (mor_map[h] == -1) {
      if (!assign_morphism(h, img, log)) return false;
    } else if (mor_map[h] != img) {
      return false;
    }
  }
  // action consequences
  if (c_mor_act) {
    for (int gg = 0; gg < n_group; ++gg) {
      int fa = (*c_mor_act)[gg][f];
      int ga = (*d_mor_act)[gg][g];
      if (mor_map[fa] == -1) {
        if (!assign_morphism(fa, ga, log)) return false;
      } else if (mor_map[fa] != ga) {
        return false;
      }
    }
  }
  return true;
}

inline bool IsoSearch::propagate_action_obj(int x, int y,
                                            std::vector<std::pair<int, int>>& log) {
  if (!c_obj_act) return true;
  for (int g = 0; g < n_group; ++g) {
    int xa = (*c_obj_act)[g][x];
    int ya = (*d_obj_act)[g][y];
    if (obj_map[xa] == -1 && obj_used[ya] == -1) {
      obj_map[xa] = ya;
      obj_used[ya] = xa;
      log.push_back({~xa, ya});
      if (ccol[xa] != dcol[ya]) return false;
    } else if (obj_map[xa] != ya) {
      return false;
    }
  }
  return true;
}

inline bool IsoSearch::extend_objects(int next_obj) {
  if (++nodes > budget) {
    exhausted_budget = true;
    return false;
  }
  int x = -1;
  for (int i = next_obj; i < C.n_objects(); ++i)
    if (obj_map[i] == -1) {
      x = i;
      break;
    }
  if (x == -1) {
    // all objects mapped; check hom-set sizes then map morphisms
    for (int a = 0; a < C.n_objects(); ++a)
      for (int b = 0; b < C.n_objects(); ++b)
        if (C.hom(a, b).size() != D.hom(obj_map[a], obj_map[b]).size())
          return false;
    // identities are forced
    std::vector<std::pair<int, int>> log;
    for (int i = 0; i < C.n_objects(); ++i)
      if (!assign_morphism(C.idmor[i], D.idmor[obj_map[i]], log)) {
        for (auto [f, g] : log) {
          mor_map[f] = -1;
          mor_used[g] = -1;
        }
        return false;
      }
    if (extend_morphisms(0)) return true;
    for (auto [f, g] : log) {
      mor_map[f] = -1;
      mor_used[g] = -1;
    }
    return false;
  }
  for (int y = 0; y < D.n_objects(); ++y) {
    if (obj_used[y] != -1) continue;
    if (ccol[x] != dcol[y]) continue;
    std::vector<std::pair<int, int>> log;
    obj_map[x] = y;
    obj_used[y] = x;
    log.push_back({~x, y});
    bool ok = propagate_action_obj(x, y, log);
    if (ok) {
      // hom-size compatibility against already-assigned objects
      for (int z = 0; z < C.n_objects() && ok; ++z) {
        if (obj_map[z] == -1) continue;
        if (C.hom(x, z).size() != D.hom(y, obj_map[z]).size()) ok = false;
        if (C.hom(z, x).size() != D.hom(obj_map[z], y).size()) ok = false;
      }
    }
    if (ok && extend_objects(x + 1)) return true;
    for (auto [a, b] : log) {
      if (a < 0) {
        obj_map[~a] = -1;
        obj_used[b] = -1;
      }
    }
    if (exhausted_budget) return false;
  }
  return false;
}

inline bool IsoSearch::extend_morphisms(std::size_t next_mor) {
  if (++nodes > budget) {
    exhausted_budget = true;
    return false;
  }
  int f = -1;
  for (std::size_t i = next_mor; i < mor_map.size(); ++i)
    if (mor_map[i] == -1) {
      f = static_cast<int>(i);
      break;
    }
  if (f == -1) {
    // full check of order preservation both ways
    for (const auto& [a, b] : C.strict_le())
      if (!D.leq(mor_map[a], mor_map[b])) return false;
    for (const auto& [a, b] : D.strict_le())
      if (!C.leq(mor_used[a], mor_used[b])) return false;
    return true;
  }
  const auto& candidates =
      D.hom(obj_map[C.mors[f].src], obj_map[C.mors[f].dst]);
  for (int g : candidates) {
    if (mor_used[g] != -1) continue;
    std::vector<std::pair<int, int>> log;
    if (assign_morphism(f, g, log)) {
      // local order screening against assigned parallel morphisms
      bool ok = true;
      for (int f2 : C.hom(C.mors[f].src, C.mors[f].dst)) {
        if (mor_map[f2] == -1) continue;
        if (C.leq(f, f2) != D.leq(mor_map[f], mor_map[f2])) ok = false;
        if (C.leq(f2, f) != D.leq(mor_map[f2], mor_map[f])) ok = false;
      }
      if (ok && extend_morphisms(f + 1)) return true;
    }
    for (auto [a, b] : log) {
      mor_map[a] = -1;
      mor_used[b] = -1;
    }
    if (exhausted_budget) return false;
  }
  return false;
}

inline bool IsoSearch::run(const std::vector<std::pair<int, int>>& hints) {
  if (C.n_objects() != D.n_objects() || C.n_morphisms() != D.n_morphisms())
    return false;
  if (C.strict_le().size() != D.strict_le().size()) return false;
  if (C.compositions().size() != D.compositions().size()) return false;
  ccol = object_colors(C);
  dcol = object_colors(D);
  {
    auto a = ccol;
    auto b = dcol;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  obj_map.assign(C.n_objects(), -1);
  obj_used.assign(D.n_objects(), -1);
  mor_map.assign(C.n_morphisms(), -1);
  mor_used.assign(D.n_morphisms(), -1);
  std::vector<std::pair<int, int>> log;
  for (auto [x, y] : hints) {
    if (x < 0 || x >= C.n_objects() || y < 0 || y >= D.n_objects())
      throw InputError("isomorphism hint out of range");
    if (obj_map[x] == y) continue;
    if (obj_map[x] != -1 || obj_used[y] != -1) return false;
    obj_map[x] = y;
    obj_used[y] = x;
    if (!propagate_action_obj(x, y, log)) return false;
  }
  return extend_objects(0);
}

}  // namespace detail

/// Backtracking isomorphism search between LP-categories, with signature
/// pruning.  Returns the functor and its inverse; "inconclusive" means the
/// node budget ran out before the search space was exhausted.
inline IsoResult find_isomorphism(const LPCategory& C, const LPCategory& D,
                                  const std::vector<std::pair<int, int>>& hints = {},
                                  std::size_t budget = Budgets{}.iso_nodes) {
  detail::IsoSearch s(C, D, budget);
  IsoResult res;
  if (s.run(hints)) {
    res.outcome = IsoOutcome::Found;
    res.fwd.obj_map = s.obj_map;
    res.fwd.mor_map = s.mor_map;
    res.bwd.obj_map = s.obj_used;
    res.bwd.mor_map = s.mor_used;
    auto repF = check_lp_functor(res.fwd, C, D);
    auto repB = check_lp_functor(res.bwd, D, C);
    if (!repF.ok() || !repB.ok())
      throw CheckError("isomorphism search returned an invalid functor: " +
                       repF.summary() + repB.summary());
    return res;
  }
  (void)hints;
  res.outcome = s.exhausted_budget ? IsoOutcome::Inconclusive : IsoOutcome::None;
  return res;
}

}  // namespace equimorse
