#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "equimorse/core.hpp"
#include "equimorse/group.hpp"
#include "equimorse/lp_category.hpp"
#include "equimorse/simplicial.hpp"

namespace equimorse {

/// Group action on a simplicial complex through vertex permutations.
/// cell_act[g][c] is the image cell of c under element g.
struct SimplicialAction {
  const FiniteGroup* group = nullptr;
  const SimplicialComplex* complex = nullptr;
  std::vector<std::vector<int>> vertex_act;  // [g][v]
  std::vector<std::vector<int>> cell_act;    // [g][cell]

  int act_cell(int g, int c) const { return cell_act[g][c]; }
};

/// Builds the total action table from the group's defining permutations
/// (points must be the complex's vertices).  Fails loudly if some element
/// does not map simplices to simplices.
inline SimplicialAction action_from_vertex_perms(const SimplicialComplex& X,
                                                 const FiniteGroup& G) {
  if (G.n_points != static_cast<int>(X.vertices.size()))
    throw InputError("group permutation degree does not match vertex count");
  SimplicialAction A;
  A.group = &G;
  A.complex = &X;
  A.vertex_act = G.perms;
  A.cell_act.assign(G.n, std::vector<int>(X.n_cells(), -1));
  for (int g = 0; g < G.n; ++g)
    for (int c = 0; c < X.n_cells(); ++c) {
      Simplex img;
      for (int v : X.cells[c]) img.push_back(G.perms[g][v]);
      std::sort(img.begin(), img.end());
      int idx = X.index_of(img);
      if (idx < 0)
        throw InputError("element " + G.names[g] + " maps simplex {" +
                         X.cell_name(c) + "} outside the complex");
      A.cell_act[g][c] = idx;
    }
  return A;
}

inline Subgroup cell_stabilizer(const SimplicialAction& A, int cell) {
  Subgroup H;
  H.parent = A.group;
  for (int g = 0; g < A.group->n; ++g)
    if (A.cell_act[g][cell] == cell) H.members.push_back(g);
  return H;
}

inline std::vector<int> cell_orbit(const SimplicialAction& A, int cell) {
  std::set<int> orb;
  for (int g = 0; g < A.group->n; ++g) orb.insert(A.cell_act[g][cell]);
  return {orb.begin(), orb.end()};
}

/// Regularity of a simplicial action: (1) cell stabilizers fix vertices
/// individually, (2) mixed-orbit vertex tuples that form a simplex stay in
/// the simplex's orbit.  On failure the report carries a note that two
/// barycentric subdivisions repair the action (CLI `subdivide`).
inline ValidationReport check_regularity(const SimplicialAction& A) {
  const SimplicialComplex& X = *A.complex;
  const FiniteGroup& G = *A.group;
  ValidationReport rep;
  for (int c = 0; c < X.n_cells(); ++c) {
    for (int g = 0; g < G.n; ++g) {
      if (A.cell_act[g][c] != c) continue;
      for (int v : X.cells[c])
        if (A.vertex_act[g][v] != v) {
          rep.add("regularity-1", "element " + G.names[g] + " stabilises {" +
                                      X.cell_name(c) +
                                      "} without fixing vertex " +
                                      X.vertices[v]);
          break;
        }
    }
  }
  // condition (2): enumerate tuples (g_0 v_0, ..., g_d v_d) by taking each
  // simplex whose vertices lie in the orbits of x's vertices, in order
  for (int c = 0; c < X.n_cells(); ++c) {
    const Simplex& s = X.cells[c];
    std::vector<std::set<int>> vorbit(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
      for (int g = 0; g < G.n; ++g) vorbit[i].insert(A.vertex_act[g][s[i]]);
    std::set<int> orbit_cells;
    for (int g = 0; g < G.n; ++g) orbit_cells.insert(A.cell_act[g][c]);
    // candidate simplices with matching dimension
    for (int d = 0; d < X.n_cells(); ++d) {
      if (X.dim(d) != X.dim(c)) continue;
      const Simplex& t = X.cells[d];
      // does some ordering of t hit the per-position orbits?
      std::vector<int> assign(t.size(), -1);
      std::vector<char> used(t.size(), 0);
      std::function<bool(std::size_t)> match = [&](std::size_t pos) {
        if (pos == s.size()) return true;
        for (std::size_t j = 0; j < t.size(); ++j) {
          if (used[j] || !vorbit[pos].count(t[j])) continue;
          used[j] = 1;
          if (match(pos + 1)) return true;
          used[j] = 0;
        }
        return false;
      };
      if (match(0) && !orbit_cells.count(d))
        rep.add("regularity-2", "simplex {" + X.cell_name(d) +
                                    "} mixes orbits of {" + X.cell_name(c) +
                                    "} but is not in its orbit");
    }
  }
  if (!rep.ok())
    rep.add("note",
            "a non-regular action becomes regular after two barycentric "
            "subdivisions; see the `subdivide` command");
  return rep;
}

/// Group action on an LP-category by explicit object/morphism tables.
struct LPAction {
  const LPCategory* category = nullptr;
  const FiniteGroup* group = nullptr;
  std::vector<std::vector<int>> obj_act;  // [g][x]
  std::vector<std::vector<int>> mor_act;  // [g][f]

  ValidationReport validate() const {
    ValidationReport rep;
    const LPCategory& C = *category;
    const FiniteGroup& G = *group;
    for (int g = 0; g < G.n; ++g) {
      LPFunctor F;
      F.obj_map = obj_act[g];
      F.mor_map = mor_act[g];
      auto r = check_lp_functor(F, C, C);
      if (!r.ok()) {
        rep.add("functorial", "element " + G.names[g] + ": " + r.summary());
        return rep;
      }
      std::set<int> objs(obj_act[g].begin(), obj_act[g].end());
      std::set<int> morss(mor_act[g].begin(), mor_act[g].end());
      if (static_cast<int>(objs.size()) != C.n_objects() ||
          static_cast<int>(morss.size()) != C.n_morphisms())
        rep.add("invertible", "element " + G.names[g]);
    }
    for (int g = 0; g < G.n; ++g)
      for (int h = 0; h < G.n; ++h) {
        int gh = G.op(g, h);
        for (int x = 0; x < C.n_objects(); ++x)
          if (obj_act[gh][x] != obj_act[g][obj_act[h][x]]) {
            rep.add("homomorphic", G.names[g] + "," + G.names[h]);
            goto after;
          }
        for (int f = 0; f < C.n_morphisms(); ++f)
          if (mor_act[gh][f] != mor_act[g][mor_act[h][f]]) {
            rep.add("homomorphic", G.names[g] + "," + G.names[h]);
            goto after;
          }
      }
  after:
    // Def 4.2(1): for non-identity f: x -> y and all g, g.x != y
    for (int f = 0; f < C.n_morphisms(); ++f) {
      int x = C.mors[f].src, y = C.mors[f].dst;
      if (C.idmor[x] == f) continue;
      for (int g = 0; g < G.n; ++g)
        if (obj_act[g][x] == y)
          rep.add("action-no-shift",
                  "element " + G.names[g] + " sends source of " + C.mor_desc(f) +
                      " to its target");
    }
    // Def 4.2(2): g.x = x implies g.f = f for f with source x
    for (int g = 0; g < G.n; ++g)
      for (int f = 0; f < C.n_morphisms(); ++f) {
        int x = C.mors[f].src;
        if (obj_act[g][x] == x && mor_act[g][f] != f)
          rep.add("action-fix-source",
                  "element " + G.names[g] + " fixes source of " + C.mor_desc(f) +
                      " but moves the morphism");
      }
    return rep;
  }

  Subgroup obj_stabilizer(int x) const {
    Subgroup H;
    H.parent = group;
    for (int g = 0; g < group->n; ++g)
      if (obj_act[g][x] == x) H.members.push_back(g);
    return H;
  }
  Subgroup mor_stabilizer(int f) const {
    Subgroup H;
    H.parent = group;
    for (int g = 0; g < group->n; ++g)
      if (mor_act[g][f] == f) H.members.push_back(g);
    return H;
  }
};

/// Induced action on the face poset.  Rejects non-regular actions.
inline LPAction lp_action_from_simplicial(const SimplicialAction& A,
                                          const LPCategory& fac) {
  auto reg = check_regularity(A);
  if (!reg.ok())
    throw CheckError("action is not regular:\n" + reg.summary());
  const SimplicialComplex& X = *A.complex;
  const FiniteGroup& G = *A.group;
  LPAction act;
  act.category = &fac;
  act.group = &G;
  act.obj_act.assign(G.n, std::vector<int>(fac.n_objects(), -1));
  act.mor_act.assign(G.n, std::vector<int>(fac.n_morphisms(), -1));
  // objects of fac are cells in cell order
  std::map<std::pair<int, int>, int> mor_of;  // (src,dst) -> morphism
  for (int f = 0; f < fac.n_morphisms(); ++f)
    mor_of[{fac.mors[f].src, fac.mors[f].dst}] = f;
  for (int g = 0; g < G.n; ++g) {
    for (int c = 0; c < X.n_cells(); ++c) act.obj_act[g][c] = A.cell_act[g][c];
    for (int f = 0; f < fac.n_morphisms(); ++f)
      act.mor_act[g][f] =
          mor_of.at({A.cell_act[g][fac.mors[f].src], A.cell_act[g][fac.mors[f].dst]});
  }
  auto rep = act.validate();
  if (!rep.ok()) throw CheckError("induced face-poset action invalid:\n" + rep.summary());
  return act;
}

/// Quotient LP-category data: the quotient, the orbit functor, and orbit /
/// stabilizer tables.
struct QuotientData {
  LPCategory quotient;
  LPFunctor orbit_functor;              // C -> quotient
  std::vector<std::vector<int>> obj_orbits;  // quotient object -> members
  std::vector<std::vector<int>> mor_orbits;  // quotient morphism -> members
  std::vector<Subgroup> obj_stab;       // per quotient object (of the rep)
};

/// Quotient by Prop 4.4: objects and morphisms are orbits; Gf => Gf' iff
/// some g has gf => f'.  The partial-order axioms are re-verified
/// exhaustively on every instance.
inline QuotientData quotient_lp(const LPAction& A) {
  const LPCategory& C = *A.category;
  const FiniteGroup& G = *A.group;
  QuotientData Q;

  std::vector<int> obj_class(C.n_objects(), -1);
  for (int x = 0; x < C.n_objects(); ++x) {
    if (obj_class[x] != -1) continue;
    int id = static_cast<int>(Q.obj_orbits.size());
    std::set<int> orb;
    for (int g = 0; g < G.n; ++g) orb.insert(A.obj_act[g][x]);
    Q.obj_orbits.push_back({orb.begin(), orb.end()});
    for (int m : Q.obj_orbits.back()) obj_class[m] = id;
  }
  std::vector<int> mor_class(C.n_morphisms(), -1);
  for (int f = 0; f < C.n_morphisms(); ++f) {
    if (mor_class[f] != -1) continue;
    int id = static_cast<int>(Q.mor_orbits.size());
    std::set<int> orb;
    for (int g = 0; g < G.n; ++g) orb.insert(A.mor_act[g][f]);
    Q.mor_orbits.push_back({orb.begin(), orb.end()});
    for (int m : Q.mor_orbits.back()) mor_class[m] = id;
  }

  for (const auto& orb : Q.obj_orbits)
    Q.quotient.add_object("[" + C.objects[orb.front()] + "]");
  // morphisms in orbit order; identities are the orbits of identities
  for (const auto& orb : Q.mor_orbits) {
    int rep = orb.front();
    int src = obj_class[C.mors[rep].src];
    int dst = obj_class[C.mors[rep].dst];
    int id = Q.quotient.add_morphism(src, dst, "[" + C.mors[rep].label + "]");
    if (C.idmor[C.mors[rep].src] == rep) Q.quotient.idmor[src] = id;
  }
  for (int q = 0; q < Q.quotient.n_objects(); ++q)
    if (Q.quotient.idmor[q] < 0)
      throw CheckError("quotient object missing identity orbit");

  // composition: compose representatives with aligned sources
  for (int qf = 0; qf < Q.quotient.n_morphisms(); ++qf)
    for (int qg = 0; qg < Q.quotient.n_morphisms(); ++qg) {
      if (Q.quotient.mors[qf].dst != Q.quotient.mors[qg].src) continue;
      int f = Q.mor_orbits[qf].front();
      int y = C.mors[f].dst;
      int comp = -1;
      for (int g = 0; g < G.n && comp < 0; ++g) {
        int gg = Q.mor_orbits[qg][0];
        if (C.mors[A.mor_act[g][gg]].src == y)
          comp = mor_class[C.compose(f, A.mor_act[g][gg])];
      }
      if (comp < 0) throw CheckError("quotient composition has no aligned representative");
      Q.quotient.set_compose(qf, qg, comp);
    }

  // order: Gf => Gf' iff exists g with gf => f'
  for (int qa = 0; qa < Q.quotient.n_morphisms(); ++qa)
    for (int qb = 0; qb < Q.quotient.n_morphisms(); ++qb) {
      if (qa == qb) continue;
      if (Q.quotient.mors[qa].src != Q.quotient.mors[qb].src ||
          Q.quotient.mors[qa].dst != Q.quotient.mors[qb].dst)
        continue;
      bool rel = false;
      int fa = Q.mor_orbits[qa].front();
      for (int fb : Q.mor_orbits[qb]) {
        for (int g = 0; g < G.n && !rel; ++g)
          if (C.leq(A.mor_act[g][fa], fb)) rel = true;
        if (rel) break;
      }
      if (rel) Q.quotient.add_le(qa, qb);
    }
  // Prop 4.4 re-check: antisymmetry and transitivity of the literal relation
  for (const auto& [a, b] : Q.quotient.strict_le()) {
    if (Q.quotient.strict_le().count({b, a}))
      throw CheckError("quotient order not antisymmetric: " +
                       Q.quotient.mor_desc(a) + " <=> " + Q.quotient.mor_desc(b));
    for (const auto& [c, d] : Q.quotient.strict_le())
      if (b == c && a != d && !Q.quotient.leq(a, d))
        throw CheckError("quotient order not transitive at " +
                         Q.quotient.mor_desc(a));
  }

  Q.orbit_functor.obj_map = obj_class;
  Q.orbit_functor.mor_map = mor_class;
  auto repF = check_lp_functor(Q.orbit_functor, C, Q.quotient);
  if (!repF.ok()) throw CheckError("orbit functor invalid:\n" + repF.summary());
  auto repQ = validate_lp(Q.quotient);
  if (!repQ.ok()) throw CheckError("quotient is not an LP-category:\n" + repQ.summary());
  for (int q = 0; q < Q.quotient.n_objects(); ++q)
    Q.obj_stab.push_back(A.obj_stabilizer(Q.obj_orbits[q].front()));
  return Q;
}

/// Lift function and transfer elements for a quotient (Defs 4.6-4.7).
struct LiftTransfer {
  std::vector<int> lift;      // quotient object -> C object with P(lift)=id
  std::vector<int> transfer;  // quotient morphism -> group element sigma(f)
  std::vector<int> lift_mor;  // quotient morphism -> the unique lifted morphism
};

namespace detail {
// All valid transfer elements for quotient morphism qf given lifts:
// g is valid iff a (unique) morphism lift(src) -> g^{-1} lift(dst) lies in
// the orbit of qf.
inline std::vector<int> valid_transfers(const LPAction& A, const QuotientData& Q,
                                        const std::vector<int>& lift, int qf) {
  const LPCategory& C = *A.category;
  const FiniteGroup& G = *A.group;
  int src = lift[Q.quotient.mors[qf].src];
  int dstlift = lift[Q.quotient.mors[qf].dst];
  std::vector<int> out;
  for (int g = 0; g < G.n; ++g) {
    int target = A.obj_act[G.inv[g]][dstlift];
    int found = 0;
    for (int m : Q.mor_orbits[qf])
      if (C.mors[m].src == src && C.mors[m].dst == target) ++found;
    if (found == 1) out.push_back(g);
    if (found > 1)
      throw CheckError("transfer not unique for " + Q.quotient.mor_desc(qf));
  }
  return out;
}
}  // namespace detail

/// Deterministic choice of lifts and transfers; the canonically least
/// candidate under a seed-scrambled order wins, and sigma(id) = 1 always.
inline LiftTransfer choose_lifts_transfers(const LPAction& A, const QuotientData& Q,
                                           std::uint64_t seed) {
  const LPCategory& C = *A.category;
  LiftTransfer LT;
  for (int q = 0; q < Q.quotient.n_objects(); ++q) {
    int best = -1;
    std::uint64_t best_rank = 0;
    for (int m : Q.obj_orbits[q]) {
      std::uint64_t r = seeded_rank(seed, static_cast<std::uint64_t>(m));
      if (best < 0 || r < best_rank) {
        best = m;
        best_rank = r;
      }
    }
    LT.lift.push_back(best);
  }
  LT.transfer.assign(Q.quotient.n_morphisms(), -1);
  LT.lift_mor.assign(Q.quotient.n_morphisms(), -1);
  for (int qf = 0; qf < Q.quotient.n_morphisms(); ++qf) {
    int qsrc = Q.quotient.mors[qf].src;
    if (Q.quotient.idmor[qsrc] == qf) {
      LT.transfer[qf] = 0;
      LT.lift_mor[qf] = C.idmor[LT.lift[qsrc]];
      continue;
    }
    auto valid = detail::valid_transfers(A, Q, LT.lift, qf);
    if (valid.empty())
      throw CheckError("no valid transfer for " + Q.quotient.mor_desc(qf));
    int best = valid[0];
    std::uint64_t best_rank = seeded_rank(seed, static_cast<std::uint64_t>(valid[0]));
    for (int g : valid) {
      std::uint64_t r = seeded_rank(seed, static_cast<std::uint64_t>(g));
      if (r < best_rank) {
        best = g;
        best_rank = r;
      }
    }
    LT.transfer[qf] = best;
    // record the unique lifted morphism
    int src = LT.lift[qsrc];
    int target = A.obj_act[A.group->inv[best]][LT.lift[Q.quotient.mors[qf].dst]];
    for (int m : Q.mor_orbits[qf])
      if (C.mors[m].src == src && C.mors[m].dst == target) LT.lift_mor[qf] = m;
  }
  return LT;
}

/// Verifies an explicitly supplied lift/transfer pair (Defs 4.6-4.7).
inline ValidationReport validate_lift_transfer(const LPAction& A,
                                               const QuotientData& Q,
                                               const LiftTransfer& LT) {
  ValidationReport rep;
  const LPCategory& C = *A.category;
  const FiniteGroup& G = *A.group;
  for (int q = 0; q < Q.quotient.n_objects(); ++q) {
    bool in_orbit = std::binary_search(Q.obj_orbits[q].begin(),
                                       Q.obj_orbits[q].end(), LT.lift[q]);
    if (!in_orbit) rep.add("lift-section", Q.quotient.objects[q]);
  }
  for (int qf = 0; qf < Q.quotient.n_morphisms(); ++qf) {
    if (Q.quotient.idmor[Q.quotient.mors[qf].src] == qf) {
      if (LT.transfer[qf] != 0) rep.add("transfer-identity", Q.quotient.mor_desc(qf));
      continue;
    }
    int g = LT.transfer[qf];
    int src = LT.lift[Q.quotient.mors[qf].src];
    int target = A.obj_act[G.inv[g]][LT.lift[Q.quotient.mors[qf].dst]];
    int found = 0, the = -1;
    for (int m : Q.mor_orbits[qf])
      if (C.mors[m].src == src && C.mors[m].dst == target) {
        ++found;
        the = m;
      }
    if (found != 1)
      rep.add("transfer-unique-lift",
              Q.quotient.mor_desc(qf) + " has " + std::to_string(found) +
                  " lifts for sigma=" + G.names[g]);
    else if (LT.lift_mor[qf] >= 0 && LT.lift_mor[qf] != the)
      rep.add("lift-mor-mismatch", Q.quotient.mor_desc(qf));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Quotient simplicial complex of a regular action.

struct QuotientComplex {
  SimplicialComplex complex;            // Y
  std::vector<int> vertex_orbit_rep;    // Y vertex -> X vertex (least)
  std::vector<int> vertex_class;        // X vertex -> Y vertex
  std::vector<int> cell_class;          // X cell -> Y cell
  std::vector<std::vector<int>> fibers; // Y cell -> X cells
};

/// Quotient complex of a regular action: vertices are vertex orbits (named
/// by their least representative), simplices are cell orbits.  Errors if
/// some simplex has two vertices in one orbit (the quotient would not be
/// simplicial; subdivision repairs this).
inline QuotientComplex quotient_complex(const SimplicialAction& A) {
  const SimplicialComplex& X = *A.complex;
  const FiniteGroup& G = *A.group;
  QuotientComplex Q;
  int nv = static_cast<int>(X.vertices.size());
  Q.vertex_class.assign(nv, -1);
  for (int v = 0; v < nv; ++v) {
    if (Q.vertex_class[v] != -1) continue;
    int id = static_cast<int>(Q.vertex_orbit_rep.size());
    Q.vertex_orbit_rep.push_back(v);
    for (int g = 0; g < G.n; ++g) Q.vertex_class[A.vertex_act[g][v]] = id;
  }
  std::vector<std::vector<std::string>> maximal;
  for (int c = 0; c < X.n_cells(); ++c) {
    std::set<int> classes;
    for (int v : X.cells[c]) classes.insert(Q.vertex_class[v]);
    if (static_cast<int>(classes.size()) != X.dim(c) + 1)
      throw CheckError("quotient not simplicial: simplex {" + X.cell_name(c) +
                       "} has two vertices in one orbit (subdivide first)");
    std::vector<std::string> names;
    for (int cl : classes) names.push_back(X.vertices[Q.vertex_orbit_rep[cl]]);
    maximal.push_back(names);
  }
  Q.complex = complex_from_maximal(maximal);
  Q.cell_class.assign(X.n_cells(), -1);
  Q.fibers.assign(Q.complex.n_cells(), {});
  for (int c = 0; c < X.n_cells(); ++c) {
    Simplex img;
    for (int v : X.cells[c]) {
      const std::string& nm = X.vertices[Q.vertex_orbit_rep[Q.vertex_class[v]]];
      auto it = std::lower_bound(Q.complex.vertices.begin(),
                                 Q.complex.vertices.end(), nm);
      img.push_back(static_cast<int>(it - Q.complex.vertices.begin()));
    }
    std::sort(img.begin(), img.end());
    int idx = Q.complex.index_of(img);
    if (idx < 0) throw CheckError("quotient cell lookup failed");
    Q.cell_class[c] = idx;
    Q.fibers[idx].push_back(c);
  }
  // distinct orbits must map to distinct quotient cells (regularity 2)
  std::map<int, int> orbit_of_cell;
  for (int y = 0; y < Q.complex.n_cells(); ++y) {
    if (Q.fibers[y].empty())
      throw CheckError("quotient cell with empty fiber");
    int c0 = Q.fibers[y].front();
    std::set<int> orb;
    for (int g = 0; g < G.n; ++g) orb.insert(A.cell_act[g][c0]);
    if (orb.size() != Q.fibers[y].size() ||
        !std::includes(Q.fibers[y].begin(), Q.fibers[y].end(), orb.begin(),
                       orb.end()))
      throw CheckError("two distinct orbits share quotient cell {" +
                       Q.complex.cell_name(y) + "}");
  }
  (void)orbit_of_cell;
  return Q;
}

/// Canonical identification Fac[Y] = Fac[X]/G for a regular action, as an
/// LP functor from the computed quotient category to face_poset(Y).
/// Verified as an isomorphism.
inline LPFunctor identify_quotient_faces(const QuotientData& QD,
                                         const QuotientComplex& QC,
                                         const LPCategory& facX,
                                         const LPCategory& facY) {
  LPFunctor F;
  F.obj_map.assign(QD.quotient.n_objects(), -1);
  F.mor_map.assign(QD.quotient.n_morphisms(), -1);
  for (int q = 0; q < QD.quotient.n_objects(); ++q)
    F.obj_map[q] = QC.cell_class[QD.obj_orbits[q].front()];
  std::map<std::pair<int, int>, int> mor_of;
  for (int f = 0; f < facY.n_morphisms(); ++f)
    mor_of[{facY.mors[f].src, facY.mors[f].dst}] = f;
  for (int qf = 0; qf < QD.quotient.n_morphisms(); ++qf) {
    int rep = QD.mor_orbits[qf].front();
    F.mor_map[qf] = mor_of.at(
        {QC.cell_class[facX.mors[rep].src], QC.cell_class[facX.mors[rep].dst]});
  }
  auto repF = check_lp_functor(F, QD.quotient, facY);
  if (!repF.ok())
    throw CheckError("quotient/face-poset identification fails:\n" + repF.summary());
  std::set<int> objs(F.obj_map.begin(), F.obj_map.end());
  std::set<int> morss(F.mor_map.begin(), F.mor_map.end());
  if (static_cast<int>(objs.size()) != facY.n_objects() ||
      static_cast<int>(morss.size()) != facY.n_morphisms())
    throw CheckError("quotient/face-poset identification is not bijective");
  return F;
}

}  // namespace equimorse
