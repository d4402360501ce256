#pragma once

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "equimorse/action.hpp"
#include "equimorse/core.hpp"
#include "equimorse/group.hpp"
#include "equimorse/lp_category.hpp"

namespace equimorse {

/// Complex of groups over an LP-category.  All member groups are subgroups
/// of one ambient `universe` group; homomorphisms are explicit element maps
/// even when they arise from conjugation, and twisting elements live in the
/// universe (validators pin them into the right subgroups).
struct ComplexOfGroups {
  const LPCategory* base = nullptr;
  const FiniteGroup* universe = nullptr;
  std::vector<Subgroup> group_of;   // per object
  std::vector<GroupHom> hom_of;     // per morphism
  std::map<std::pair<int, int>, int> order_twist;  // (f => f') -> element
  std::map<std::pair<int, int>, int> pair_twist;   // (f1,f2) composable -> gamma

  int gamma(int f1, int f2) const {
    auto it = pair_twist.find({f1, f2});
    if (it == pair_twist.end())
      throw CheckError("missing pair twist gamma(" + base->mors[f1].label + "," +
                       base->mors[f2].label + ")");
    return it->second;
  }
  int otwist(int f, int fp) const {
    auto it = order_twist.find({f, fp});
    if (it == order_twist.end())
      throw CheckError("missing order twist " + base->mors[f].label + " => " +
                       base->mors[fp].label);
    return it->second;
  }
};

/// Monomorphism to the constant G-valued complex of groups: per-object
/// injections into G plus per-morphism transfer elements tau.
struct CoGMorphismToConstant {
  const FiniteGroup* target = nullptr;  // G
  std::vector<GroupHom> phi;            // per object, F(x) -> G (injective)
  std::vector<int> tau;                 // per morphism, element of G
};

inline ValidationReport validate_cog(const ComplexOfGroups& F) {
  ValidationReport rep;
  const LPCategory& C = *F.base;
  const FiniteGroup& U = *F.universe;

  for (int f = 0; f < C.n_morphisms(); ++f) {
    const GroupHom& h = F.hom_of[f];
    if (!(h.source == F.group_of[C.mors[f].src]))
      rep.add("hom-source", C.mor_desc(f));
    if (!(h.target == F.group_of[C.mors[f].dst]))
      rep.add("hom-target", C.mor_desc(f));
    auto hr = h.validate();
    if (!hr.ok()) rep.add("hom-invalid", C.mor_desc(f) + ": " + hr.summary());
    if (!h.injective()) rep.add("hom-injective", C.mor_desc(f));
  }
  if (!rep.ok()) return rep;
  for (int x = 0; x < C.n_objects(); ++x) {
    const GroupHom& h = F.hom_of[C.idmor[x]];
    if (h.map != F.group_of[x].members) rep.add("identity-hom", C.objects[x]);
  }

  // order twists: F(f) = t . F(f') . t^{-1}, associativity across =>
  for (const auto& [pair, t] : F.order_twist) {
    auto [f, fp] = pair;
    if (!C.leq(f, fp)) rep.add("order-twist-domain", C.mor_desc(f));
    int y = C.mors[f].dst;
    if (!F.group_of[y].contains(t))
      rep.add("order-twist-membership",
              C.mor_desc(f) + " => " + C.mor_desc(fp) + " twist " + U.names[t]);
    for (int k : F.group_of[C.mors[f].src].members)
      if (F.hom_of[f].apply(k) != U.op(U.op(t, F.hom_of[fp].apply(k)), U.inv[t])) {
        rep.add("order-twist-conjugation",
                C.mor_desc(f) + " => " + C.mor_desc(fp) + " at " + U.names[k]);
        break;
      }
  }
  for (const auto& [ab, t1] : F.order_twist)
    for (const auto& [bc, t2] : F.order_twist) {
      if (ab.second != bc.first || ab.first == bc.second) continue;
      auto it = F.order_twist.find({ab.first, bc.second});
      if (it == F.order_twist.end()) {
        rep.add("order-twist-missing",
                C.mor_desc(ab.first) + " => " + C.mor_desc(bc.second));
        continue;
      }
      if (U.op(t1, t2) != it->second)
        rep.add("order-twist-associativity",
                C.mor_desc(ab.first) + " => " + C.mor_desc(ab.second) + " => " +
                    C.mor_desc(bc.second));
    }
  for (const auto& [a, b] : C.strict_le())
    if (!F.order_twist.count({a, b}))
      rep.add("order-twist-missing", C.mor_desc(a) + " => " + C.mor_desc(b));

  // pair twists: unit, membership, conjugation, cocycle
  for (const auto& [pair, h] : C.compositions()) {
    auto [f1, f2] = pair;
    if (!F.pair_twist.count({f1, f2})) {
      rep.add("pair-twist-missing", C.mor_desc(f1) + " , " + C.mor_desc(f2));
      continue;
    }
    int g = F.pair_twist.at({f1, f2});
    int z = C.mors[f2].dst;
    if (!F.group_of[z].contains(g))
      rep.add("pair-twist-membership", C.mor_desc(f1) + " , " + C.mor_desc(f2));
    if ((C.idmor[C.mors[f1].src] == f1 || C.idmor[C.mors[f2].src] == f2) && g != 0)
      rep.add("pair-twist-unit", C.mor_desc(f1) + " , " + C.mor_desc(f2));
    int comp = h;
    for (int k : F.group_of[C.mors[f1].src].members) {
      int lhs = F.hom_of[f2].apply(F.hom_of[f1].apply(k));
      int rhs = U.op(U.op(g, F.hom_of[comp].apply(k)), U.inv[g]);
      if (lhs != rhs) {
        rep.add("pair-twist-conjugation",
                C.mor_desc(f1) + " , " + C.mor_desc(f2) + " at " + U.names[k]);
        break;
      }
    }
  }
  if (!rep.ok()) return rep;
  // cocycle over composable triples
  for (int f1 = 0; f1 < C.n_morphisms(); ++f1)
    for (int f2 = 0; f2 < C.n_morphisms(); ++f2) {
      if (C.mors[f1].dst != C.mors[f2].src) continue;
      for (int f3 = 0; f3 < C.n_morphisms(); ++f3) {
        if (C.mors[f2].dst != C.mors[f3].src) continue;
        int lhs = U.op(F.gamma(f2, f3), F.gamma(f1, C.compose(f2, f3)));
        int rhs = U.op(F.hom_of[f3].apply(F.gamma(f1, f2)),
                       F.gamma(C.compose(f1, f2), f3));
        if (lhs != rhs)
          rep.add("cocycle", C.mor_desc(f1) + " , " + C.mor_desc(f2) + " , " +
                                 C.mor_desc(f3));
      }
    }
  return rep;
}

inline ValidationReport validate_cog_morphism(const CoGMorphismToConstant& Phi,
                                              const ComplexOfGroups& F) {
  ValidationReport rep;
  const LPCategory& C = *F.base;
  const FiniteGroup& G = *Phi.target;
  for (int x = 0; x < C.n_objects(); ++x) {
    const GroupHom& p = Phi.phi[x];
    if (!(p.source == F.group_of[x])) rep.add("phi-source", C.objects[x]);
    auto pr = p.validate();
    if (!pr.ok()) rep.add("phi-invalid", C.objects[x] + ": " + pr.summary());
    if (!p.injective()) rep.add("phi-injective", C.objects[x]);
  }
  if (!rep.ok()) return rep;
  for (int x = 0; x < C.n_objects(); ++x)
    if (Phi.tau[C.idmor[x]] != 0) rep.add("tau-identity", C.objects[x]);
  // twisting law: tau(f) Phi_x(k) tau(f)^{-1} = Phi_y(F(f)(k))
  for (int f = 0; f < C.n_morphisms(); ++f) {
    int x = C.mors[f].src, y = C.mors[f].dst, t = Phi.tau[f];
    for (int k : F.group_of[x].members) {
      int lhs = G.op(G.op(t, Phi.phi[x].apply(k)), G.inv[t]);
      int rhs = Phi.phi[y].apply(F.hom_of[f].apply(k));
      if (lhs != rhs) {
        rep.add("tau-twisting-law", C.mor_desc(f) + " at " + G.names[k]);
        break;
      }
    }
  }
  // composition law: Phi_z(gamma(f1,f2)) tau(f2 f1) = tau(f2) tau(f1)
  for (const auto& [pair, comp] : C.compositions()) {
    auto [f1, f2] = pair;
    int z = C.mors[f2].dst;
    int lhs = G.op(Phi.phi[z].apply(F.gamma(f1, f2)), Phi.tau[comp]);
    int rhs = G.op(Phi.tau[f2], Phi.tau[f1]);
    if (lhs != rhs)
      rep.add("tau-composition-law", C.mor_desc(f1) + " , " + C.mor_desc(f2));
  }
  return rep;
}

/// Constant G-valued complex of groups plus its identity morphism data.
inline std::pair<ComplexOfGroups, CoGMorphismToConstant> constant_cog(
    const LPCategory& C, const FiniteGroup& G) {
  ComplexOfGroups F;
  F.base = &C;
  F.universe = &G;
  Subgroup whole = whole_group(G);
  for (int x = 0; x < C.n_objects(); ++x) F.group_of.push_back(whole);
  for (int f = 0; f < C.n_morphisms(); ++f)
    F.hom_of.push_back(identity_hom(whole));
  for (const auto& [a, b] : C.strict_le()) F.order_twist[{a, b}] = 0;
  for (const auto& [pair, h] : C.compositions()) F.pair_twist[pair] = 0;
  CoGMorphismToConstant Phi;
  Phi.target = &G;
  for (int x = 0; x < C.n_objects(); ++x) Phi.phi.push_back(identity_hom(whole));
  Phi.tau.assign(C.n_morphisms(), 0);
  return {F, Phi};
}

/// Bundle produced by the canonical construction from an action.
struct ActionCoG {
  ComplexOfGroups F;
  CoGMorphismToConstant Phi;
  LiftTransfer LT;
};

/// The canonical complex of groups of an action with chosen lifts and
/// transfers: F(y) is the stabilizer of the lift, F(h) conjugation by
/// sigma(h), order twists sigma(h)sigma(h')^{-1}, pair twists
/// sigma(h2)sigma(h1)sigma(h2h1)^{-1}; Phi is inclusion with tau = sigma.
inline ActionCoG cog_from_action(const LPAction& A, const QuotientData& Q,
                                 const LiftTransfer& LT) {
  auto lt_rep = validate_lift_transfer(A, Q, LT);
  if (!lt_rep.ok())
    throw CheckError("invalid lift/transfer data:\n" + lt_rep.summary());
  const FiniteGroup& G = *A.group;
  const LPCategory& B = Q.quotient;
  ActionCoG out;
  out.LT = LT;
  out.F.base = &B;
  out.F.universe = &G;
  for (int y = 0; y < B.n_objects(); ++y)
    out.F.group_of.push_back(A.obj_stabilizer(LT.lift[y]));
  for (int f = 0; f < B.n_morphisms(); ++f) {
    int s = LT.transfer[f];
    const Subgroup& src = out.F.group_of[B.mors[f].src];
    const Subgroup& dst = out.F.group_of[B.mors[f].dst];
    GroupHom h;
    h.source = src;
    h.target = dst;
    for (int k : src.members) h.map.push_back(G.conj(s, k));
    out.F.hom_of.push_back(h);
  }
  for (const auto& [a, b] : B.strict_le())
    out.F.order_twist[{a, b}] = G.op(LT.transfer[a], G.inv[LT.transfer[b]]);
  for (const auto& [pair, comp] : B.compositions()) {
    auto [f1, f2] = pair;
    out.F.pair_twist[pair] =
        G.op(G.op(LT.transfer[f2], LT.transfer[f1]), G.inv[LT.transfer[comp]]);
  }
  out.Phi.target = &G;
  for (int y = 0; y < B.n_objects(); ++y)
    out.Phi.phi.push_back(inclusion_hom(out.F.group_of[y], whole_group(G)));
  out.Phi.tau = LT.transfer;

  auto repF = validate_cog(out.F);
  if (!repF.ok())
    throw CheckError("canonical complex of groups invalid:\n" + repF.summary());
  auto repP = validate_cog_morphism(out.Phi, out.F);
  if (!repP.ok())
    throw CheckError("canonical monomorphism invalid:\n" + repP.summary());
  return out;
}

// ---------------------------------------------------------------------------
// CoG dump format:
//   grp <object> : <subgroup elements>
//   hom <mor> : map <k>-><v> ...
//   otwist <f> => <g> = <element>
//   twist <f>,<g> = <element>
//   tau <mor> = <element>

inline std::string dump_cog(const ComplexOfGroups& F,
                            const CoGMorphismToConstant* Phi = nullptr) {
  std::ostringstream out;
  const FiniteGroup& U = *F.universe;
  for (int x = 0; x < F.base->n_objects(); ++x) {
    out << "grp " << x << " :";
    for (int k : F.group_of[x].members) out << " " << U.names[k];
    out << "\n";
  }
  for (int f = 0; f < F.base->n_morphisms(); ++f) {
    out << "hom " << f << " : map";
    for (std::size_t i = 0; i < F.hom_of[f].map.size(); ++i)
      out << " " << U.names[F.hom_of[f].source.members[i]] << "->"
          << U.names[F.hom_of[f].map[i]];
    out << "\n";
  }
  for (const auto& [pair, t] : F.order_twist)
    out << "otwist " << pair.first << " => " << pair.second << " = " << U.names[t]
        << "\n";
  for (const auto& [pair, t] : F.pair_twist)
    out << "twist " << pair.first << "," << pair.second << " = " << U.names[t]
        << "\n";
  if (Phi)
    for (int f = 0; f < F.base->n_morphisms(); ++f)
      out << "tau " << f << " = " << Phi->target->names[Phi->tau[f]] << "\n";
  return out.str();
}

}  // namespace equimorse
