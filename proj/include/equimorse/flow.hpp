#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "equimorse/action.hpp"
#include "equimorse/cog.hpp"
#include "equimorse/core.hpp"
#include "equimorse/matching.hpp"

namespace equimorse {

/// A matching zigzag in reduced normal form: alternating descending legs
/// and backward matched pairs, with all legs non-trivial between critical
/// endpoints and no repeated pair.
struct Zigzag {
  std::vector<EntPath> legs;  // legs.size() == arrows.size() + 1
  std::vector<int> arrows;    // indices into Matching::pairs

  int source() const { return legs.front().front(); }
  int target() const { return legs.back().back(); }
  bool is_identity() const {
    return arrows.empty() && legs.size() == 1 && legs[0].size() == 1;
  }
  bool operator<(const Zigzag& o) const {
    return std::tie(arrows, legs) < std::tie(o.arrows, o.legs);
  }
  bool operator==(const Zigzag& o) const {
    return arrows == o.arrows && legs == o.legs;
  }
};

inline Zigzag identity_zigzag(int cell) { return Zigzag{{{cell}}, {}}; }

inline Zigzag compose_zigzags(const Zigzag& a, const Zigzag& b) {
  // a then b; junction legs merge into one
  Zigzag c;
  c.legs = a.legs;
  EntPath joint = c.legs.back();
  joint.insert(joint.end(), b.legs.front().begin() + 1, b.legs.front().end());
  c.legs.back() = joint;
  c.legs.insert(c.legs.end(), b.legs.begin() + 1, b.legs.end());
  c.arrows = a.arrows;
  c.arrows.insert(c.arrows.end(), b.arrows.begin(), b.arrows.end());
  return c;
}

inline Zigzag act_on_zigzag(const SimplicialAction& A,
                            const std::map<std::pair<int, int>, int>& pair_index,
                            int g, const Zigzag& z) {
  Zigzag out;
  for (const auto& leg : z.legs) {
    EntPath img;
    for (int c : leg) img.push_back(A.cell_act[g][c]);
    out.legs.push_back(img);
  }
  out.arrows.reserve(z.arrows.size());
  for (std::size_t i = 0; i < z.arrows.size(); ++i) {
    int up = out.legs[i + 1].front();
    int lo = out.legs[i].back();
    auto it = pair_index.find({up, lo});
    if (it == pair_index.end())
      throw CheckError("matching is not invariant under the action");
    out.arrows.push_back(it->second);
  }
  return out;
}

inline std::string zigzag_label(const SimplicialComplex& X, const Zigzag& z) {
  std::string s;
  for (std::size_t i = 0; i < z.legs.size(); ++i) {
    const auto& leg = z.legs[i];
    for (std::size_t j = 0; j < leg.size(); ++j) {
      if (j) s += '>';
      s += "{" + X.cell_name(leg[j]) + "}";
    }
    if (i + 1 < z.legs.size()) s += '<';
  }
  return s;
}

// ---------------------------------------------------------------------------
// Ladder search between two zigzags.  Columns align backward arrows:
// equal arrows copy across, a top-only arrow is absorbed into a vertical,
// a bottom-only arrow is emitted from a padding point.  Squares compare
// composite entrance paths, either on the nose (equivalence) or by
// refinement with the top composite coarser (order).

enum class SquareRel { Equal, TopCoarser, EitherWay };

namespace detail {

inline bool square_ok(const EntPath& lhs, const EntPath& rhs, SquareRel rel) {
  if (lhs.front() != rhs.front() || lhs.back() != rhs.back()) return false;
  switch (rel) {
    case SquareRel::Equal:
      return lhs == rhs;
    case SquareRel::TopCoarser:
      return is_subsequence(lhs, rhs);
    case SquareRel::EitherWay:
      return is_subsequence(lhs, rhs) || is_subsequence(rhs, lhs);
  }
  return false;
}

struct LadderSearch {
  const Matching& M;
  const Zigzag& top;
  const Zigzag& bot;
  SquareRel rel;
  std::set<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t, int>>
      failed;

  // pending vertical v: -1 for identity or a pair index whose one-step
  // entrance path prefixes the bottom side of the next square
  bool go(std::size_t ti, std::size_t toff, std::size_t bi, std::size_t boff,
          int v) {
    auto key = std::make_tuple(ti, toff, bi, boff, v);
    if (failed.count(key)) return false;
    bool done_top = ti == top.arrows.size();
    bool done_bot = bi == bot.arrows.size();

    auto segment = [](const Zigzag& z, std::size_t leg, std::size_t from,
                      std::size_t to) {
      return EntPath(z.legs[leg].begin() + from, z.legs[leg].begin() + to + 1);
    };
    auto with_prefix = [&](int vv, EntPath p) {
      if (vv >= 0) p.insert(p.begin(), M.pairs[vv].first);
      return p;
    };

    if (done_top && done_bot) {
      EntPath t = segment(top, ti, toff, top.legs[ti].size() - 1);
      EntPath b = segment(bot, bi, boff, bot.legs[bi].size() - 1);
      if (square_ok(t, with_prefix(v, b), rel)) return true;
      failed.insert(key);
      return false;
    }
    // copy column
    if (!done_top && !done_bot && top.arrows[ti] == bot.arrows[bi]) {
      EntPath t = segment(top, ti, toff, top.legs[ti].size() - 1);
      EntPath b = segment(bot, bi, boff, bot.legs[bi].size() - 1);
      if (square_ok(t, with_prefix(v, b), rel) && go(ti + 1, 0, bi + 1, 0, -1))
        return true;
    }
    // absorb the top arrow: bottom lands mid-leg on the arrow's lower cell
    if (!done_top) {
      int a = top.arrows[ti];
      int lower = M.pairs[a].second;
      EntPath t = segment(top, ti, toff, top.legs[ti].size() - 1);
      for (std::size_t off = boff; off < bot.legs[bi].size(); ++off) {
        if (bot.legs[bi][off] != lower) continue;
        EntPath b = segment(bot, bi, boff, off);
        if (square_ok(t, with_prefix(v, b), rel) && go(ti + 1, 0, bi, off, a))
          return true;
      }
    }
    // emit the bottom arrow: top pads mid-leg on the arrow's upper cell
    if (!done_bot) {
      int a = bot.arrows[bi];
      int upper = M.pairs[a].first;
      int lower = M.pairs[a].second;
      EntPath b = segment(bot, bi, boff, bot.legs[bi].size() - 1);
      for (std::size_t off = toff; off < top.legs[ti].size(); ++off) {
        if (top.legs[ti][off] != upper) continue;
        EntPath t = segment(top, ti, toff, off);
        t.push_back(lower);
        if (square_ok(t, with_prefix(v, b), rel) && go(ti, off, bi + 1, 0, -1))
          return true;
      }
    }
    failed.insert(key);
    return false;
  }
};

}  // namespace detail

/// True when a single ladder diagram relates the two zigzags, with `rel`
/// governing the square cells (Equal for equivalence, TopCoarser for the
/// order with the top row coarser, EitherWay for the lenient variant).
inline bool ladder_exists(const Matching& M, const Zigzag& top, const Zigzag& bot,
                          SquareRel rel) {
  if (top.source() != bot.source() || top.target() != bot.target()) return false;
  detail::LadderSearch s{M, top, bot, rel, {}};
  return s.go(0, 0, 0, 0, -1);
}

// ---------------------------------------------------------------------------
// Flow category.

struct FlowData {
  LPCategory cat;
  Matching matching;
  std::vector<int> object_cell;  // object -> cell id
  std::vector<int> cell_object;  // cell id -> object or -1
  std::vector<std::vector<Zigzag>> members;  // morphism -> class, sorted
  std::map<Zigzag, int> class_of;

  const Zigzag& rep(int mor) const { return members[mor].front(); }
};

/// Enumerates all reduced zigzags out of each critical cell (depth-first,
/// budgeted), groups them into classes by the equivalence-ladder relation,
/// computes the class order by ladder search over representative pairs,
/// and assembles the LP-category.  The result re-checks every LP axiom.
inline FlowData flow_category(const SimplicialComplex& X, const Matching& M,
                              const Budgets& budgets = {},
                              SquareRel order_rel = SquareRel::TopCoarser) {
  {
    auto rep = validate_matching(X, M);
    if (!rep.ok()) throw CheckError("invalid matching:\n" + rep.summary());
  }
  FlowData out;
  out.matching = M;
  auto crit = critical_cells(X, M);
  out.cell_object.assign(X.n_cells(), -1);
  for (int c : crit) {
    out.cell_object[c] = static_cast<int>(out.object_cell.size());
    out.object_cell.push_back(c);
    out.cat.add_object(X.cell_name(c));
  }

  // enumerate raw zigzags per source
  std::map<std::pair<int, int>, std::vector<Zigzag>> raw;
  std::size_t count = 0;
  for (int w : crit) {
    std::vector<EntPath> legs;
    std::vector<int> arrows;
    std::vector<char> used(M.pairs.size(), 0);
    EntPath leg{w};
    std::function<void()> dfs = [&]() {
      int cur = leg.back();
      if (out.cell_object[cur] >= 0 && leg.size() >= 2) {
        Zigzag z;
        z.legs = legs;
        z.legs.push_back(leg);
        z.arrows = arrows;
        raw[{w, cur}].push_back(z);
        if (++count > budgets.zigzags)
          throw BudgetError("zigzag budget exceeded: over " +
                            std::to_string(budgets.zigzags));
      }
      for (int c = 0; c < X.n_cells(); ++c) {
        if (X.dim(c) >= X.dim(cur) || !X.is_face(c, cur)) continue;
        leg.push_back(c);
        dfs();
        leg.pop_back();
      }
      int p = M.find_by_lower(cur);
      if (p >= 0 && !used[p] && leg.size() >= 2) {
        used[p] = 1;
        legs.push_back(leg);
        arrows.push_back(p);
        EntPath saved = leg;
        leg = {M.pairs[p].first};
        dfs();
        leg = saved;
        arrows.pop_back();
        legs.pop_back();
        used[p] = 0;
      }
    };
    dfs();
  }

  // identities
  for (int q = 0; q < out.cat.n_objects(); ++q) {
    int id = out.cat.add_morphism(q, q, "id:{" + out.cat.objects[q] + "}");
    out.cat.idmor[q] = id;
    out.members.push_back({identity_zigzag(out.object_cell[q])});
    out.class_of[identity_zigzag(out.object_cell[q])] = id;
  }

  // equivalence classes per hom-set (union-find over the ladder relation)
  for (auto& [key, zs] : raw) {
    std::sort(zs.begin(), zs.end());
    const int n = static_cast<int>(zs.size());
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (find(i) == find(j)) continue;
        if (ladder_exists(M, zs[i], zs[j], SquareRel::Equal) ||
            ladder_exists(M, zs[j], zs[i], SquareRel::Equal))
          parent[find(j)] = find(i);
      }
    std::map<int, std::vector<Zigzag>> classes;
    for (int i = 0; i < n; ++i) classes[find(i)].push_back(zs[i]);
    for (auto& [root, group] : classes) {
      if (out.members.size() >= budgets.zigzag_classes)
        throw BudgetError("zigzag class budget exceeded");
      int src = out.cell_object[key.first];
      int dst = out.cell_object[key.second];
      int id = out.cat.add_morphism(src, dst, zigzag_label(X, group.front()));
      out.members.push_back(group);
      for (const auto& z : group) out.class_of[z] = id;
    }
  }

  // composition by concatenating representatives
  for (int f = 0; f < out.cat.n_morphisms(); ++f)
    for (int g = 0; g < out.cat.n_morphisms(); ++g) {
      if (out.cat.mors[f].dst != out.cat.mors[g].src) continue;
      Zigzag comp;
      if (out.rep(f).is_identity())
        comp = out.rep(g);
      else if (out.rep(g).is_identity())
        comp = out.rep(f);
      else
        comp = compose_zigzags(out.rep(f), out.rep(g));
      auto it = out.class_of.find(comp);
      if (it == out.class_of.end())
        throw CheckError("composite zigzag missing from enumeration: " +
                         zigzag_label(X, comp));
      out.cat.set_compose(f, g, it->second);
    }

  // order between classes: a single ladder between some representatives
  for (int f = 0; f < out.cat.n_morphisms(); ++f)
    for (int g = 0; g < out.cat.n_morphisms(); ++g) {
      if (f == g) continue;
      if (out.cat.mors[f].src != out.cat.mors[g].src ||
          out.cat.mors[f].dst != out.cat.mors[g].dst)
        continue;
      bool rel = false;
      for (const auto& a : out.members[f]) {
        for (const auto& b : out.members[g])
          if (ladder_exists(M, a, b, order_rel)) {
            rel = true;
            break;
          }
        if (rel) break;
      }
      if (rel) out.cat.add_le(f, g);
    }
  out.cat.close_order();
  // antisymmetry after closure would merge classes; that would indicate a
  // closure bug, so fail loudly
  for (const auto& [a, b] : out.cat.strict_le())
    if (out.cat.strict_le().count({b, a}))
      throw CheckError("flow order not antisymmetric between " +
                       out.cat.mor_desc(a) + " and " + out.cat.mor_desc(b));

  auto rep = validate_lp(out.cat);
  if (!rep.ok()) throw CheckError("flow category invalid:\n" + rep.summary());
  return out;
}

// ---------------------------------------------------------------------------
// Compatibility of a matching with a complex of groups over face_poset(Y)
// (conditions (1) and (2)).

inline ValidationReport check_compatibility(const ComplexOfGroups& F,
                                            const SimplicialComplex& Y,
                                            const Matching& M) {
  ValidationReport rep;
  const LPCategory& C = *F.base;
  std::map<std::pair<int, int>, int> mor_of;
  for (int f = 0; f < C.n_morphisms(); ++f)
    mor_of[{C.mors[f].src, C.mors[f].dst}] = f;
  auto maps_equal = [&](const GroupHom& a, const GroupHom& b) {
    return a.source.members == b.source.members && a.map == b.map;
  };
  for (auto [up, lo] : M.pairs) {
    int f = mor_of.at({up, lo});
    if (!F.hom_of[f].surjective_onto_target())
      rep.add("compatibility-1",
              "F({" + Y.cell_name(up) + "} -> {" + Y.cell_name(lo) +
                  "}) is not an isomorphism onto the target stabilizer");
    // shape (i): g: w -> up, then f; images must compose strictly
    for (int w = 0; w < C.n_objects(); ++w) {
      auto it = mor_of.find({w, up});
      if (it == mor_of.end() || w == up) continue;
      int g = it->second;
      int gp = C.compose(g, f);
      if (!maps_equal(F.hom_of[gp], compose_homs(F.hom_of[g], F.hom_of[f])))
        rep.add("compatibility-2",
                "triangle {" + Y.cell_name(w) + "} -> {" + Y.cell_name(up) +
                    "} -> {" + Y.cell_name(lo) + "} does not commute strictly");
    }
    // shape (ii): f, then h: lo -> z
    for (int z = 0; z < C.n_objects(); ++z) {
      auto it = mor_of.find({lo, z});
      if (it == mor_of.end() || z == lo) continue;
      int h = it->second;
      int hp = C.compose(f, h);
      if (!maps_equal(F.hom_of[hp], compose_homs(F.hom_of[f], F.hom_of[h])))
        rep.add("compatibility-2",
                "triangle {" + Y.cell_name(up) + "} -> {" + Y.cell_name(lo) +
                    "} -> {" + Y.cell_name(z) + "} does not commute strictly");
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Lifted equivariant matching.

struct LiftedMatching {
  Matching matching;            // on X
  std::vector<int> pair_class;  // lifted pair -> index of its Sigma pair
};

/// Lifts a compatible matching on the quotient to the G-orbit matching on
/// X, re-verifying the matching axioms, G-invariance, and that the
/// projection recovers the original pairs.
inline LiftedMatching lift_matching(const SimplicialAction& A,
                                    const QuotientComplex& QC,
                                    const ComplexOfGroups& F, const Matching& M) {
  {
    auto rep = check_compatibility(F, QC.complex, M);
    if (!rep.ok())
      throw CheckError(
          "matching is not compatible (see check_compatibility):\n" +
          rep.summary());
  }
  const SimplicialComplex& X = *A.complex;
  LiftedMatching out;
  for (std::size_t i = 0; i < M.pairs.size(); ++i) {
    auto [upY, loY] = M.pairs[i];
    for (int U : QC.fibers[upY]) {
      int found = -1;
      for (const auto& fsimp : X.facets(X.cells[U])) {
        int L = X.index_of(fsimp);
        if (L >= 0 && QC.cell_class[L] == loY) {
          if (found >= 0)
            throw CheckError("two faces of {" + X.cell_name(U) +
                             "} project to the matched cell");
          found = L;
        }
      }
      if (found < 0)
        throw CheckError("no face of {" + X.cell_name(U) +
                         "} projects to the matched cell");
      out.matching.pairs.push_back({U, found});
      out.pair_class.push_back(static_cast<int>(i));
    }
  }
  auto rep = validate_matching(X, out.matching);
  if (!rep.ok())
    throw CheckError("lifted matching is not an acyclic matching:\n" +
                     rep.summary());
  // G-invariance as a set of pairs
  std::set<std::pair<int, int>> pairset(out.matching.pairs.begin(),
                                        out.matching.pairs.end());
  for (auto [U, L] : out.matching.pairs)
    for (int g = 0; g < A.group->n; ++g)
      if (!pairset.count({A.cell_act[g][U], A.cell_act[g][L]}))
        throw CheckError("lifted matching is not G-invariant");
  // projection recovers the original matching
  for (std::size_t i = 0; i < out.matching.pairs.size(); ++i) {
    auto [U, L] = out.matching.pairs[i];
    auto want = M.pairs[out.pair_class[i]];
    if (QC.cell_class[U] != want.first || QC.cell_class[L] != want.second)
      throw CheckError("lifted pair projects to the wrong pair");
  }
  return out;
}

/// The G-action on the flow category of the lifted matching: elements act
/// arrow-wise on zigzag representatives.  Well-definedness on classes and
/// the LP-action axioms are re-verified.
inline LPAction induced_flow_action(const SimplicialAction& A,
                                    const FlowData& flowX) {
  const FiniteGroup& G = *A.group;
  std::map<std::pair<int, int>, int> pair_index;
  for (std::size_t i = 0; i < flowX.matching.pairs.size(); ++i)
    pair_index[flowX.matching.pairs[i]] = static_cast<int>(i);
  LPAction act;
  act.category = &flowX.cat;
  act.group = &G;
  act.obj_act.assign(G.n, std::vector<int>(flowX.cat.n_objects(), -1));
  act.mor_act.assign(G.n, std::vector<int>(flowX.cat.n_morphisms(), -1));
  for (int g = 0; g < G.n; ++g) {
    for (int q = 0; q < flowX.cat.n_objects(); ++q) {
      int img = A.cell_act[g][flowX.object_cell[q]];
      int obj = flowX.cell_object[img];
      if (obj < 0)
        throw CheckError("critical cell maps to a matched cell under " +
                         G.names[g]);
      act.obj_act[g][q] = obj;
    }
    for (int f = 0; f < flowX.cat.n_morphisms(); ++f) {
      Zigzag img = act_on_zigzag(A, pair_index, g, flowX.rep(f));
      auto it = flowX.class_of.find(img);
      if (it == flowX.class_of.end())
        throw CheckError("image zigzag missing from enumeration under " +
                         G.names[g]);
      act.mor_act[g][f] = it->second;
    }
    // well-defined on classes: every member maps into the same class
    for (int f = 0; f < flowX.cat.n_morphisms(); ++f)
      for (const auto& z : flowX.members[f]) {
        Zigzag img = act_on_zigzag(A, pair_index, g, z);
        auto it = flowX.class_of.find(img);
        if (it == flowX.class_of.end() || it->second != act.mor_act[g][f])
          throw CheckError("action is not well-defined on zigzag classes at " +
                           flowX.cat.mor_desc(f) + " under " + G.names[g]);
      }
  }
  auto rep = act.validate();
  if (!rep.ok())
    throw CheckError("induced flow action invalid:\n" + rep.summary());
  return act;
}

}  // namespace equimorse
