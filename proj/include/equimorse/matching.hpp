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
#include "equimorse/simplicial.hpp"

namespace equimorse {

/// Acyclic partial matching: pairs (upper, lower) of cell ids with
/// dim(upper) = dim(lower) + 1.
struct Matching {
  std::vector<std::pair<int, int>> pairs;  // (upper, lower)

  int find_by_lower(int cell) const {
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (pairs[i].second == cell) return static_cast<int>(i);
    return -1;
  }
  int find_by_upper(int cell) const {
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (pairs[i].first == cell) return static_cast<int>(i);
    return -1;
  }
  bool matched(int cell) const {
    return find_by_lower(cell) >= 0 || find_by_upper(cell) >= 0;
  }
};

/// Checks dimension, partition, and acyclicity.  Acyclicity witnesses
/// include the offending cycle of pairs.
inline ValidationReport validate_matching(const SimplicialComplex& X,
                                          const Matching& M) {
  ValidationReport rep;
  for (auto [up, lo] : M.pairs) {
    if (up < 0 || up >= X.n_cells() || lo < 0 || lo >= X.n_cells()) {
      rep.add("unknown-cell", "pair indices out of range");
      return rep;
    }
    if (X.dim(up) != X.dim(lo) + 1)
      rep.add("dimension", "{" + X.cell_name(up) + "} > {" + X.cell_name(lo) + "}");
    else if (!X.is_face(lo, up))
      rep.add("dimension", "{" + X.cell_name(lo) + "} is not a face of {" +
                               X.cell_name(up) + "}");
  }
  std::map<int, int> uses;
  for (auto [up, lo] : M.pairs) {
    ++uses[up];
    ++uses[lo];
  }
  for (auto [cell, count] : uses)
    if (count > 1)
      rep.add("partition", "{" + X.cell_name(cell) + "} lies in " +
                               std::to_string(count) + " pairs");
  if (!rep.ok()) return rep;

  // acyclicity of the |> relation: pair i |> pair j when upper(i) > lower(j)
  const int n = static_cast<int>(M.pairs.size());
  std::vector<std::vector<int>> next(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (X.dim(M.pairs[j].second) < X.dim(M.pairs[i].first) &&
          X.is_face(M.pairs[j].second, M.pairs[i].first))
        next[i].push_back(j);
    }
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<int> stack;
  std::function<bool(int)> dfs = [&](int v) -> bool {
    state[v] = 1;
    stack.push_back(v);
    for (int w : next[v]) {
      if (state[w] == 1) {
        std::string cyc;
        auto it = std::find(stack.begin(), stack.end(), w);
        for (; it != stack.end(); ++it)
          cyc += "{" + X.cell_name(M.pairs[*it].first) + ">" +
                 X.cell_name(M.pairs[*it].second) + "} ";
        rep.add("acyclicity", "cycle: " + cyc);
        return false;
      }
      if (state[w] == 0 && !dfs(w)) return false;
    }
    state[v] = 2;
    stack.pop_back();
    return true;
  };
  for (int v = 0; v < n; ++v)
    if (state[v] == 0 && !dfs(v)) break;
  return rep;
}

inline std::vector<int> critical_cells(const SimplicialComplex& X,
                                       const Matching& M) {
  std::set<int> used;
  for (auto [up, lo] : M.pairs) {
    used.insert(up);
    used.insert(lo);
  }
  std::vector<int> out;
  for (int c = 0; c < X.n_cells(); ++c)
    if (!used.count(c)) out.push_back(c);
  return out;
}

// ---------------------------------------------------------------------------
// Entrance paths: strictly descending face chains, ordered by refinement
// (coarser => finer).

using EntPath = std::vector<int>;  // cells, strictly descending

inline bool is_subsequence(const EntPath& coarse, const EntPath& fine) {
  if (coarse.front() != fine.front() || coarse.back() != fine.back())
    return false;
  std::size_t i = 0;
  for (int c : fine) {
    if (i < coarse.size() && coarse[i] == c) ++i;
  }
  return i == coarse.size();
}

/// All strictly descending chains from cell `from` to cell `to`.
inline std::vector<EntPath> entrance_paths(const SimplicialComplex& X, int from,
                                           int to,
                                           std::size_t budget = Budgets{}.entrance_paths) {
  std::vector<EntPath> out;
  EntPath cur{from};
  std::function<void(int)> dfs = [&](int at) {
    if (at == to) {
      out.push_back(cur);
      if (out.size() > budget) throw BudgetError("entrance path budget exceeded");
      return;
    }
    for (int c = 0; c < X.n_cells(); ++c) {
      if (X.dim(c) >= X.dim(at) || X.dim(c) < X.dim(to)) continue;
      if (!X.is_face(c, at)) continue;
      if (c != to && !X.is_face(to, c)) continue;
      cur.push_back(c);
      dfs(c);
      cur.pop_back();
    }
  };
  if (from == to)
    out.push_back({from});
  else if (X.is_face(to, from))
    dfs(from);
  return out;
}

struct EntranceCategory {
  LPCategory cat;
  std::vector<EntPath> path_of;  // morphism id -> chain
  std::map<EntPath, int> mor_of;
};

inline std::string path_label(const SimplicialComplex& X, const EntPath& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += '>';
    s += "{" + X.cell_name(p[i]) + "}";
  }
  return s;
}

/// The entrance path category: objects are cells, hom(x,x') all descending
/// chains, composition is concatenation, order is refinement.
inline EntranceCategory entrance_category(const SimplicialComplex& X,
                                          std::size_t budget = Budgets{}.entrance_paths) {
  EntranceCategory E;
  for (int c = 0; c < X.n_cells(); ++c) E.cat.add_object(X.cell_name(c));
  std::size_t total = 0;
  for (int a = 0; a < X.n_cells(); ++a)
    for (int b = 0; b < X.n_cells(); ++b) {
      if (a != b && !(X.dim(b) < X.dim(a) && X.is_face(b, a))) continue;
      for (auto& p : entrance_paths(X, a, b, budget)) {
        if (++total > budget) throw BudgetError("entrance category too large");
        int id = E.cat.add_morphism(a, b, path_label(X, p));
        E.path_of.push_back(p);
        E.mor_of[p] = id;
        if (a == b) E.cat.idmor[a] = id;
      }
    }
  for (int f = 0; f < E.cat.n_morphisms(); ++f)
    for (int g = 0; g < E.cat.n_morphisms(); ++g) {
      if (E.cat.mors[f].dst != E.cat.mors[g].src) continue;
      EntPath comp = E.path_of[f];
      comp.insert(comp.end(), E.path_of[g].begin() + 1, E.path_of[g].end());
      E.cat.set_compose(f, g, E.mor_of.at(comp));
    }
  for (int f = 0; f < E.cat.n_morphisms(); ++f)
    for (int g : E.cat.hom(E.cat.mors[f].src, E.cat.mors[f].dst)) {
      if (f == g) continue;
      if (is_subsequence(E.path_of[f], E.path_of[g])) E.cat.add_le(f, g);
    }
  auto rep = validate_lp(E.cat);
  if (!rep.ok()) throw CheckError("entrance category invalid:\n" + rep.summary());
  return E;
}

// ---------------------------------------------------------------------------
// Matching input file: lines `pair <lower vertices> -> <upper vertices>`.

inline Matching parse_matching_file(const std::string& contents,
                                    const SimplicialComplex& X) {
  Matching M;
  std::istringstream in(contents);
  std::string line;
  int lineno = 0;
  std::map<std::string, int> vid;
  for (std::size_t i = 0; i < X.vertices.size(); ++i)
    vid[X.vertices[i]] = static_cast<int>(i);
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw != "pair")
      throw InputError("matching file line " + std::to_string(lineno) +
                       ": expected 'pair'");
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    auto arrow = std::find(toks.begin(), toks.end(), "->");
    if (arrow == toks.end() || arrow == toks.begin() || arrow + 1 == toks.end())
      throw InputError("matching file line " + std::to_string(lineno) +
                       ": expected 'pair <lower> -> <upper>'");
    auto to_cell = [&](std::vector<std::string> names) {
      Simplex s;
      for (const auto& nm : names) {
        auto it = vid.find(nm);
        if (it == vid.end())
          throw InputError("matching file line " + std::to_string(lineno) +
                           ": unknown vertex '" + nm + "'");
        s.push_back(it->second);
      }
      std::sort(s.begin(), s.end());
      int idx = X.index_of(s);
      if (idx < 0)
        throw InputError("matching file line " + std::to_string(lineno) +
                         ": simplex not in complex");
      return idx;
    };
    int lower = to_cell({toks.begin(), arrow});
    int upper = to_cell({arrow + 1, toks.end()});
    M.pairs.push_back({upper, lower});
  }
  return M;
}

inline std::string dump_matching(const SimplicialComplex& X, const Matching& M) {
  std::ostringstream out;
  for (auto [up, lo] : M.pairs)
    out << "pair " << X.cell_name(lo) << " -> " << X.cell_name(up) << "\n";
  return out.str();
}

}  // namespace equimorse
