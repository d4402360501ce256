#pragma once

// Shared test inputs: the D8 annulus (two concentric octagons, sixteen
// triangles, alternating quad diagonals so the full dihedral symmetry acts
// simplicially) and a few small symmetric actions.

#include <string>
#include <vector>

#include "equimorse/action.hpp"
#include "equimorse/group.hpp"
#include "equimorse/simplicial.hpp"

namespace fixtures {

using equimorse::FiniteGroup;
using equimorse::SimplicialAction;
using equimorse::SimplicialComplex;

inline std::vector<std::vector<std::string>> annulus_triangles() {
  auto a = [](int k) { return "a" + std::to_string(((k % 8) + 8) % 8); };
  auto b = [](int k) { return "b" + std::to_string(((k % 8) + 8) % 8); };
  std::vector<std::vector<std::string>> tris;
  for (int k = 0; k < 8; ++k) {
    if (k % 2 == 0) {
      tris.push_back({a(k), b(k), b(k + 1)});
      tris.push_back({a(k), a(k + 1), b(k + 1)});
    } else {
      tris.push_back({a(k), a(k + 1), b(k)});
      tris.push_back({a(k + 1), b(k), b(k + 1)});
    }
  }
  return tris;
}

inline SimplicialComplex annulus_complex() {
  return equimorse::complex_from_maximal(annulus_triangles());
}

// r: position k -> k+2 (quarter turn), s: k -> 4-k (reflection)
inline FiniteGroup annulus_d8(const SimplicialComplex& X) {
  int nv = static_cast<int>(X.vertices.size());
  std::vector<int> r(nv), s(nv);
  auto vid = [&](const std::string& nm) {
    for (int i = 0; i < nv; ++i)
      if (X.vertices[i] == nm) return i;
    throw equimorse::InputError("vertex " + nm + " missing");
  };
  for (int k = 0; k < 8; ++k) {
    auto nm = [&](char ring, int j) {
      return std::string(1, ring) + std::to_string(((j % 8) + 8) % 8);
    };
    r[vid(nm('a', k))] = vid(nm('a', k + 2));
    r[vid(nm('b', k))] = vid(nm('b', k + 2));
    s[vid(nm('a', k))] = vid(nm('a', 4 - k));
    s[vid(nm('b', k))] = vid(nm('b', 4 - k));
  }
  return equimorse::group_from_generators(nv, {r, s}, {"r", "s"});
}

inline SimplicialAction annulus_action(const SimplicialComplex& X,
                                       const FiniteGroup& G) {
  return equimorse::action_from_vertex_perms(X, G);
}

// path a - c - b with Z/2 swapping the endpoints; regular, quotient is an
// edge
inline SimplicialComplex path3_complex() {
  return equimorse::complex_from_maximal({{"a", "c"}, {"b", "c"}});
}

inline FiniteGroup path3_z2(const SimplicialComplex& X) {
  int nv = static_cast<int>(X.vertices.size());
  std::vector<int> s(nv);
  for (int i = 0; i < nv; ++i) s[i] = i;
  int ia = -1, ib = -1;
  for (int i = 0; i < nv; ++i) {
    if (X.vertices[i] == "a") ia = i;
    if (X.vertices[i] == "b") ib = i;
  }
  s[ia] = ib;
  s[ib] = ia;
  return equimorse::group_from_generators(nv, {s}, {"s"});
}

// two triangles glued along an edge, Z/2 swapping the free vertices;
// regular, quotient is a full triangle
inline SimplicialComplex strip_complex() {
  return equimorse::complex_from_maximal({{"a", "b", "c"}, {"b", "c", "d"}});
}

inline FiniteGroup strip_z2(const SimplicialComplex& X) {
  int nv = static_cast<int>(X.vertices.size());
  std::vector<int> s(nv);
  for (int i = 0; i < nv; ++i) s[i] = i;
  int ia = -1, id = -1;
  for (int i = 0; i < nv; ++i) {
    if (X.vertices[i] == "a") ia = i;
    if (X.vertices[i] == "d") id = i;
  }
  s[ia] = id;
  s[id] = ia;
  return equimorse::group_from_generators(nv, {s}, {"s"});
}

// n-gon with the rotation action of Z/n (regular; the LP quotient is fine
// even though the quotient complex is degenerate)
inline SimplicialComplex cycle_complex(int n) {
  std::vector<std::vector<std::string>> edges;
  for (int i = 0; i < n; ++i) {
    std::string u = "v" + std::to_string(i);
    std::string v = "v" + std::to_string((i + 1) % n);
    edges.push_back({u, v});
  }
  return equimorse::complex_from_maximal(edges);
}

inline FiniteGroup cycle_rotation(const SimplicialComplex& X, int n) {
  int nv = static_cast<int>(X.vertices.size());
  std::vector<int> r(nv);
  auto vid = [&](int j) {
    std::string nm = "v" + std::to_string(((j % n) + n) % n);
    for (int i = 0; i < nv; ++i)
      if (X.vertices[i] == nm) return i;
    throw equimorse::InputError("vertex missing");
  };
  for (int j = 0; j < n; ++j) r[vid(j)] = vid(j + 1);
  return equimorse::group_from_generators(nv, {r}, {"r"});
}

}  // namespace fixtures
