#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "equimorse/core.hpp"
#include "equimorse/lp_category.hpp"

namespace equimorse {

using Simplex = std::vector<int>;  // sorted vertex ids

/// Finite abstract simplicial complex.  Cells carry dense ids ordered by
/// (dimension, lexicographic vertex tuple); vertices are strings ordered
/// lexicographically.
struct SimplicialComplex {
  std::vector<std::string> vertices;          // sorted names
  std::vector<Simplex> cells;                 // sorted by (dim, lex)
  std::map<Simplex, int> cell_index;

  int n_cells() const { return static_cast<int>(cells.size()); }
  int dim(int cell) const { return static_cast<int>(cells[cell].size()) - 1; }
  int top_dim() const {
    int d = -1;
    for (const auto& s : cells) d = std::max<int>(d, static_cast<int>(s.size()) - 1);
    return d;
  }
  int index_of(const Simplex& s) const {
    auto it = cell_index.find(s);
    return it == cell_index.end() ? -1 : it->second;
  }
  bool has(const Simplex& s) const { return cell_index.count(s) != 0; }

  std::vector<int> cells_of_dim(int d) const {
    std::vector<int> out;
    for (int i = 0; i < n_cells(); ++i)
      if (dim(i) == d) out.push_back(i);
    return out;
  }

  std::string cell_name(int cell) const {
    std::string s;
    for (std::size_t i = 0; i < cells[cell].size(); ++i) {
      if (i) s += ' ';
      s += vertices[cells[cell][i]];
    }
    return s;
  }

  // codimension-1 faces, in drop-index order
  std::vector<Simplex> facets(const Simplex& s) const {
    std::vector<Simplex> out;
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex f;
      for (std::size_t j = 0; j < s.size(); ++j)
        if (j != i) f.push_back(s[j]);
      out.push_back(f);
    }
    return out;
  }

  bool is_face(int small, int big) const {
    return std::includes(cells[big].begin(), cells[big].end(),
                         cells[small].begin(), cells[small].end());
  }

  ValidationReport validate() const {
    ValidationReport rep;
    for (const auto& s : cells) {
      if (s.empty()) rep.add("empty-simplex", "");
      for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] >= s[i + 1]) rep.add("unsorted-simplex", cell_name(cell_index.at(s)));
      for (int v : s)
        if (v < 0 || v >= static_cast<int>(vertices.size()))
          rep.add("undeclared-vertex", "");
      if (s.size() > 1)
        for (const auto& f : facets(s))
          if (!has(f)) {
            rep.add("not-closed", cell_name(cell_index.at(s)));
            break;
          }
    }
    return rep;
  }
};

/// Downward closure of the given maximal simplices (vertex names).
inline SimplicialComplex complex_from_maximal(
    const std::vector<std::vector<std::string>>& maximal) {
  std::set<std::string> vnames;
  for (const auto& s : maximal)
    for (const auto& v : s) vnames.insert(v);
  SimplicialComplex X;
  X.vertices.assign(vnames.begin(), vnames.end());
  std::map<std::string, int> vid;
  for (std::size_t i = 0; i < X.vertices.size(); ++i)
    vid[X.vertices[i]] = static_cast<int>(i);

  std::set<Simplex> all;
  for (const auto& s : maximal) {
    Simplex t;
    for (const auto& v : s) t.push_back(vid[v]);
    std::sort(t.begin(), t.end());
    if (std::adjacent_find(t.begin(), t.end()) != t.end())
      throw InputError("simplex with repeated vertex");
    // all nonempty subsets
    std::size_t n = t.size();
    for (std::size_t mask = 1; mask < (1u << n); ++mask) {
      Simplex sub;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) sub.push_back(t[i]);
      all.insert(sub);
    }
  }
  X.cells.assign(all.begin(), all.end());
  std::sort(X.cells.begin(), X.cells.end(), [](const Simplex& a, const Simplex& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  for (int i = 0; i < X.n_cells(); ++i) X.cell_index[X.cells[i]] = i;
  return X;
}

/// Face poset Fac[X] as an LP-category: one object per cell, one morphism
/// x -> x' per strict co-face relation, trivial hom-set orders.
inline LPCategory face_poset(const SimplicialComplex& X) {
  LPCategory C;
  for (int i = 0; i < X.n_cells(); ++i) C.add_object(X.cell_name(i));
  for (int i = 0; i < X.n_cells(); ++i) C.add_identity(i);
  std::map<std::pair<int, int>, int> arrow;
  for (int a = 0; a < X.n_cells(); ++a)
    for (int b = 0; b < X.n_cells(); ++b) {
      if (a == b || X.dim(b) >= X.dim(a)) continue;
      if (X.is_face(b, a))
        arrow[{a, b}] =
            C.add_morphism(a, b, X.cell_name(a) + ">" + X.cell_name(b));
    }
  auto get = [&](int a, int b) { return a == b ? C.idmor[a] : arrow.at({a, b}); };
  for (int a = 0; a < X.n_cells(); ++a)
    for (int b = 0; b < X.n_cells(); ++b) {
      if (a != b && !(X.dim(b) < X.dim(a) && X.is_face(b, a))) continue;
      for (int c = 0; c < X.n_cells(); ++c) {
        if (b != c && !(X.dim(c) < X.dim(b) && X.is_face(c, b))) continue;
        C.set_compose(get(a, b), get(b, c), get(a, c));
      }
    }
  return C;
}

/// Barycentric subdivision.  New vertices are named by joining the old
/// cell's vertex names with '.'; simplices are strict face chains.
inline SimplicialComplex barycentric_subdivide(const SimplicialComplex& X) {
  std::vector<std::string> names(X.n_cells());
  for (int i = 0; i < X.n_cells(); ++i) {
    std::string s;
    for (std::size_t j = 0; j < X.cells[i].size(); ++j) {
      if (j) s += '.';
      s += X.vertices[X.cells[i][j]];
    }
    names[i] = s;
  }
  // enumerate maximal chains by DFS from each cell upward is overkill; all
  // chains are simplices, so emit every chain (closure handles the rest).
  std::vector<std::vector<std::string>> maximal;
  std::vector<int> chain;
  std::vector<std::vector<int>> cofaces(X.n_cells());
  for (int a = 0; a < X.n_cells(); ++a)
    for (int b = 0; b < X.n_cells(); ++b)
      if (X.dim(a) < X.dim(b) && X.is_face(a, b)) cofaces[a].push_back(b);
  // chains emitted from each bottom cell; non-maximal duplicates are cheap
  auto emit = [&]() {
    std::vector<std::string> s;
    for (int c : chain) s.push_back(names[c]);
    maximal.push_back(s);
  };
  std::function<void(int)> grow = [&](int cell) {
    chain.push_back(cell);
    emit();
    for (int up : cofaces[cell]) grow(up);
    chain.pop_back();
  };
  for (int c = 0; c < X.n_cells(); ++c) grow(c);
  return complex_from_maximal(maximal);
}

/// Vertex permutation of X induced on the subdivision's barycenters.
inline std::vector<int> subdivide_perm(const SimplicialComplex& X,
                                       const SimplicialComplex& sd,
                                       const std::vector<int>& vertex_perm) {
  std::vector<int> out(sd.vertices.size());
  std::map<std::string, int> sd_vid;
  for (std::size_t i = 0; i < sd.vertices.size(); ++i)
    sd_vid[sd.vertices[i]] = static_cast<int>(i);
  for (int i = 0; i < X.n_cells(); ++i) {
    Simplex img;
    for (int v : X.cells[i]) img.push_back(vertex_perm[v]);
    std::sort(img.begin(), img.end());
    std::string from, to;
    for (std::size_t j = 0; j < X.cells[i].size(); ++j) {
      if (j) { from += '.'; to += '.'; }
      from += X.vertices[X.cells[i][j]];
      to += X.vertices[img[j]];
    }
    out[sd_vid.at(from)] = sd_vid.at(to);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Complex input file: lines `simplex <v0> <v1> ...` listing maximal cells.

inline SimplicialComplex parse_complex_file(const std::string& contents) {
  std::vector<std::vector<std::string>> maximal;
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
    if (kw != "simplex")
      throw InputError("complex file line " + std::to_string(lineno) +
                       ": expected 'simplex'");
    std::vector<std::string> verts;
    std::string v;
    while (ls >> v) verts.push_back(v);
    if (verts.empty())
      throw InputError("complex file line " + std::to_string(lineno) +
                       ": empty simplex");
    maximal.push_back(verts);
  }
  return complex_from_maximal(maximal);
}

inline std::string dump_complex(const SimplicialComplex& X) {
  // emit maximal cells only
  std::ostringstream out;
  for (int i = 0; i < X.n_cells(); ++i) {
    bool maximal = true;
    for (int j = 0; j < X.n_cells() && maximal; ++j)
      if (i != j && X.dim(i) < X.dim(j) && X.is_face(i, j)) maximal = false;
    if (maximal) out << "simplex " << X.cell_name(i) << "\n";
  }
  return out.str();
}

}  // namespace equimorse
