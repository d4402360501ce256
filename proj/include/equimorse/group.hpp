#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "equimorse/core.hpp"

namespace equimorse {

/// Finite group stored by explicit multiplication table.  Element 0 is the
/// identity; element order is insertion order during generator closure.
/// When the group was generated from permutations, `perms` records the
/// permutation realising each element (the defining action on points).
struct FiniteGroup {
  int n = 1;
  std::vector<std::vector<int>> mul;  // n x n
  std::vector<int> inv;               // n
  std::vector<std::string> names;     // display labels, names[0] == "e"
  std::vector<std::vector<int>> perms;  // optional: element -> point permutation
  int n_points = 0;

  FiniteGroup() : mul{{0}}, inv{0}, names{"e"} {}

  int op(int a, int b) const { return mul[a][b]; }
  int inverse(int a) const { return inv[a]; }
  int conj(int g, int k) const { return op(op(g, k), inv[g]); }
  const std::string& name(int g) const { return names[g]; }

  ValidationReport validate() const {
    ValidationReport rep;
    for (int a = 0; a < n; ++a) {
      if (mul[0][a] != a || mul[a][0] != a)
        rep.add("identity", "element " + names[a]);
      if (mul[inv[a]][a] != 0 || mul[a][inv[a]] != 0)
        rep.add("inverse", "element " + names[a]);
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) {
            rep.add("associativity",
                    names[a] + "," + names[b] + "," + names[c]);
            return rep;
          }
    return rep;
  }
};

/// Subgroup as a sorted member list of the parent group.
struct Subgroup {
  const FiniteGroup* parent = nullptr;
  std::vector<int> members;  // sorted element indices, contains 0

  bool contains(int g) const {
    return std::binary_search(members.begin(), members.end(), g);
  }
  int order() const { return static_cast<int>(members.size()); }

  bool operator==(const Subgroup& o) const {
    return parent == o.parent && members == o.members;
  }
};

/// Group homomorphism between subgroups, stored as an explicit element map
/// (parallel to source.members).
struct GroupHom {
  Subgroup source;
  Subgroup target;
  std::vector<int> map;  // map[i] = image of source.members[i]

  int apply(int g) const {
    auto it = std::lower_bound(source.members.begin(), source.members.end(), g);
    if (it == source.members.end() || *it != g)
      throw InputError("GroupHom::apply: element not in source");
    return map[static_cast<std::size_t>(it - source.members.begin())];
  }

  ValidationReport validate() const {
    ValidationReport rep;
    const FiniteGroup& G = *source.parent;
    for (int i = 0; i < source.order(); ++i)
      if (!target.contains(map[i]))
        rep.add("image", G.names[source.members[i]] + " maps outside target");
    for (int a : source.members)
      for (int b : source.members)
        if (apply(G.op(a, b)) != G.op(apply(a), apply(b))) {
          rep.add("homomorphism", G.names[a] + "," + G.names[b]);
          return rep;
        }
    return rep;
  }

  bool injective() const {
    std::set<int> img(map.begin(), map.end());
    return img.size() == map.size();
  }
  bool surjective_onto_target() const {
    std::set<int> img(map.begin(), map.end());
    return injective() && static_cast<int>(img.size()) == target.order();
  }
};

/// Left cosets gH of a subgroup.  Representatives are the least element
/// index in each coset; class_of is total on the parent.
struct CosetSpace {
  Subgroup subgroup;
  std::vector<int> reps;
  std::vector<int> class_of;  // parent element -> coset index

  int count() const { return static_cast<int>(reps.size()); }
};

inline std::vector<int> identity_perm(int n_points) {
  std::vector<int> p(n_points);
  for (int i = 0; i < n_points; ++i) p[i] = i;
  return p;
}

inline std::vector<int> compose_perm(const std::vector<int>& f,
                                     const std::vector<int>& g) {
  // (f*g)(x) = f(g(x))
  std::vector<int> h(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) h[i] = f[g[i]];
  return h;
}

/// Closure of permutation generators under composition.  Element 0 is the
/// identity; remaining elements appear in BFS order over right
/// multiplication by generators, which fixes names and indices.
inline FiniteGroup group_from_generators(
    int n_points, const std::vector<std::vector<int>>& gen_perms,
    const std::vector<std::string>& gen_names = {},
    std::size_t max_order = Budgets{}.group_order) {
  for (const auto& p : gen_perms) {
    if (static_cast<int>(p.size()) != n_points)
      throw InputError("generator permutation has wrong degree");
    std::vector<char> seen(n_points, 0);
    for (int v : p) {
      if (v < 0 || v >= n_points || seen[v])
        throw InputError("generator is not a bijection");
      seen[v] = 1;
    }
  }
  FiniteGroup G;
  G.n_points = n_points;
  G.perms = {identity_perm(n_points)};
  G.names = {"e"};
  std::map<std::vector<int>, int> index;
  index[G.perms[0]] = 0;
  std::vector<std::string> gnames = gen_names;
  for (std::size_t i = gnames.size(); i < gen_perms.size(); ++i)
    gnames.push_back("g" + std::to_string(i));

  for (std::size_t head = 0; head < G.perms.size(); ++head) {
    for (std::size_t gi = 0; gi < gen_perms.size(); ++gi) {
      // left-multiply by the generator: gen ∘ current
      auto q = compose_perm(gen_perms[gi], G.perms[head]);
      if (!index.count(q)) {
        if (G.perms.size() >= max_order) throw BudgetError("group too large");
        index[q] = static_cast<int>(G.perms.size());
        G.perms.push_back(q);
        G.names.push_back(head == 0 ? gnames[gi]
                                    : gnames[gi] + "." + G.names[head]);
      }
    }
  }
  G.n = static_cast<int>(G.perms.size());
  G.mul.assign(G.n, std::vector<int>(G.n, 0));
  G.inv.assign(G.n, 0);
  for (int a = 0; a < G.n; ++a)
    for (int b = 0; b < G.n; ++b)
      G.mul[a][b] = index.at(compose_perm(G.perms[a], G.perms[b]));
  for (int a = 0; a < G.n; ++a)
    for (int b = 0; b < G.n; ++b)
      if (G.mul[a][b] == 0) G.inv[a] = b;
  return G;
}

inline Subgroup subgroup_generated(const FiniteGroup& G,
                                   const std::vector<int>& elems) {
  std::set<int> closed{0};
  std::vector<int> frontier{0};
  for (int e : elems)
    if (closed.insert(e).second) frontier.push_back(e);
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    int a = frontier[head];
    if (closed.insert(G.inv[a]).second) frontier.push_back(G.inv[a]);
    for (std::size_t j = 0; j < frontier.size(); ++j) {
      for (int c : {G.mul[a][frontier[j]], G.mul[frontier[j]][a]})
        if (closed.insert(c).second) frontier.push_back(c);
    }
  }
  Subgroup H;
  H.parent = &G;
  H.members.assign(closed.begin(), closed.end());
  return H;
}

inline Subgroup whole_group(const FiniteGroup& G) {
  Subgroup H;
  H.parent = &G;
  H.members.resize(G.n);
  for (int i = 0; i < G.n; ++i) H.members[i] = i;
  return H;
}

inline Subgroup trivial_subgroup(const FiniteGroup& G) {
  Subgroup H;
  H.parent = &G;
  H.members = {0};
  return H;
}

inline CosetSpace left_cosets(const Subgroup& H) {
  const FiniteGroup& G = *H.parent;
  CosetSpace cs;
  cs.subgroup = H;
  cs.class_of.assign(G.n, -1);
  for (int g = 0; g < G.n; ++g) {
    if (cs.class_of[g] >= 0) continue;
    int idx = cs.count();
    cs.reps.push_back(g);  // g is least: elements scanned in order
    for (int h : H.members) cs.class_of[G.mul[g][h]] = idx;
  }
  return cs;
}

/// Conjugation k -> g k g^{-1} as an explicit hom H -> gHg^{-1}.
inline GroupHom conjugation_hom(const FiniteGroup& G, int g, const Subgroup& H) {
  GroupHom hom;
  hom.source = H;
  std::vector<int> image;
  for (int k : H.members) image.push_back(G.conj(g, k));
  std::sort(image.begin(), image.end());
  hom.target.parent = &G;
  hom.target.members = image;
  for (int k : H.members) hom.map.push_back(G.conj(g, k));
  return hom;
}

inline GroupHom identity_hom(const Subgroup& H) {
  GroupHom hom;
  hom.source = H;
  hom.target = H;
  hom.map = H.members;
  return hom;
}

inline GroupHom inclusion_hom(const Subgroup& H, const Subgroup& K) {
  GroupHom hom;
  hom.source = H;
  hom.target = K;
  hom.map = H.members;
  return hom;
}

inline GroupHom compose_homs(const GroupHom& first, const GroupHom& then) {
  GroupHom hom;
  hom.source = first.source;
  hom.target = then.target;
  for (std::size_t i = 0; i < first.map.size(); ++i)
    hom.map.push_back(then.apply(first.map[i]));
  return hom;
}

/// All subgroups of G, by closure over the subgroup lattice.  Intended for
/// small groups only (fixed-point checks).
inline std::vector<Subgroup> all_subgroups(const FiniteGroup& G) {
  std::set<std::vector<int>> found;
  std::vector<Subgroup> out;
  std::vector<Subgroup> frontier{trivial_subgroup(G)};
  found.insert(frontier[0].members);
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    Subgroup H = frontier[head];
    for (int g = 0; g < G.n; ++g) {
      if (H.contains(g)) continue;
      auto elems = H.members;
      elems.push_back(g);
      Subgroup K = subgroup_generated(G, elems);
      if (found.insert(K.members).second) frontier.push_back(K);
    }
  }
  out = frontier;
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members < b.members;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Group input file: lines `gen <name> = <cycles on point names>`.

inline std::vector<int> parse_cycles(const std::string& text,
                                     const std::map<std::string, int>& point_of,
                                     int n_points) {
  std::vector<int> perm = identity_perm(n_points);
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    if (text[pos] != '(') throw InputError("expected '(' in cycle notation");
    std::size_t close = text.find(')', pos);
    if (close == std::string::npos) throw InputError("unbalanced cycle");
    std::istringstream cyc(text.substr(pos + 1, close - pos - 1));
    std::vector<int> pts;
    std::string tok;
    while (cyc >> tok) {
      auto it = point_of.find(tok);
      if (it == point_of.end()) throw InputError("unknown point '" + tok + "'");
      pts.push_back(it->second);
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
      int from = pts[i], to = pts[(i + 1) % pts.size()];
      if (perm[from] != from) throw InputError("point repeated across cycles");
      perm[from] = to;
    }
    pos = close + 1;
  }
  return perm;
}

struct ParsedGroupFile {
  std::vector<std::string> gen_names;
  std::vector<std::vector<int>> gen_perms;
};

inline ParsedGroupFile parse_group_file(const std::string& contents,
                                        const std::vector<std::string>& points) {
  std::map<std::string, int> point_of;
  for (std::size_t i = 0; i < points.size(); ++i)
    point_of[points[i]] = static_cast<int>(i);
  ParsedGroupFile out;
  std::istringstream in(contents);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw != "gen")
      throw InputError("group file line " + std::to_string(lineno) +
                       ": expected 'gen'");
    std::string name, eq;
    if (!(ls >> name >> eq) || eq != "=")
      throw InputError("group file line " + std::to_string(lineno) +
                       ": expected 'gen <name> = <cycles>'");
    std::string rest;
    std::getline(ls, rest);
    try {
      out.gen_perms.push_back(
          parse_cycles(rest, point_of, static_cast<int>(points.size())));
    } catch (const InputError& e) {
      throw InputError("group file line " + std::to_string(lineno) + ": " +
                       e.what());
    }
    out.gen_names.push_back(name);
  }
  return out;
}

}  // namespace equimorse
