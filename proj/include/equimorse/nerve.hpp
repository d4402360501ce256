#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "equimorse/core.hpp"
#include "equimorse/lp_category.hpp"

namespace equimorse {

/// One nondegenerate simplex of the geometric nerve: pairwise-distinct
/// objects x0..xn and a compatible system f_ij : x_i -> x_j (i < j) with
/// f_ik => f_jk ∘ f_ij.  Stored flat: fs[k] for pairs (i,j) in
/// lexicographic order.
struct NerveSimplex {
  std::vector<int> objs;
  std::vector<int> fs;  // morphism per (i<j) pair, lexicographic

  bool operator<(const NerveSimplex& o) const {
    if (objs != o.objs) return objs < o.objs;
    return fs < o.fs;
  }
};

struct NerveSimplicialSet {
  // simplices[n] = nondegenerate n-simplices, sorted
  std::vector<std::vector<NerveSimplex>> simplices;
  // faces[n][i] = ids (into simplices[n-1]) of the n+1 faces of simplex i
  std::vector<std::vector<std::vector<int>>> faces;

  std::vector<std::size_t> f_vector() const {
    std::vector<std::size_t> f;
    for (const auto& level : simplices) f.push_back(level.size());
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
  }
};

namespace detail {
inline int pair_pos(int n, int i, int j) {
  // position of (i,j), i<j, among lexicographic pairs over 0..n
  int pos = 0;
  for (int a = 0; a < i; ++a) pos += n - a;
  return pos + (j - i - 1);
}

inline NerveSimplex nerve_face(const NerveSimplex& s, int drop) {
  NerveSimplex out;
  int n = static_cast<int>(s.objs.size()) - 1;
  for (int i = 0; i <= n; ++i)
    if (i != drop) out.objs.push_back(s.objs[i]);
  for (int i = 0; i <= n; ++i) {
    if (i == drop) continue;
    for (int j = i + 1; j <= n; ++j) {
      if (j == drop) continue;
      out.fs.push_back(s.fs[pair_pos(n, i, j)]);
    }
  }
  return out;
}
}  // namespace detail

/// Enumerates the nondegenerate nerve simplices of an LP-category by
/// extending object chains with compatible morphism systems.  max_dim < 0
/// means unbounded (loopfreeness bounds the dimension anyway).
inline NerveSimplicialSet geometric_nerve(const LPCategory& C, int max_dim = -1,
                                          std::size_t budget = Budgets{}.nerve_simplices) {
  NerveSimplicialSet N;
  N.simplices.resize(1);
  for (int x = 0; x < C.n_objects(); ++x)
    N.simplices[0].push_back({{x}, {}});
  std::size_t total = N.simplices[0].size();
  if (total > budget) throw BudgetError("nerve too large");

  int n = 0;
  while (max_dim < 0 || n < max_dim) {
    std::vector<NerveSimplex> next;
    for (const auto& s : N.simplices[n]) {
      // append a new object y with morphisms f_{i,n+1} for all i <= n
      for (int y = 0; y < C.n_objects(); ++y) {
        if (std::find(s.objs.begin(), s.objs.end(), y) != s.objs.end()) continue;
        if (C.hom(s.objs[n], y).empty()) continue;
        // choose f_i : objs[i] -> y; constraint: f_i => f_j ∘ f_{ij} (i<j)
        std::vector<int> chosen(n + 1, -1);
        std::function<void(int)> pick = [&](int at) {
          if (at < 0) {
            NerveSimplex t;
            t.objs = s.objs;
            t.objs.push_back(y);
            // new pair layout over n+1: old pairs (i<j<=n) plus (i, n+1)
            for (int i = 0; i <= n; ++i)
              for (int j = i + 1; j <= n + 1; ++j) {
                if (j <= n)
                  t.fs.push_back(s.fs[detail::pair_pos(n, i, j)]);
                else
                  t.fs.push_back(chosen[i]);
              }
            next.push_back(t);
            return;
          }
          for (int f : C.hom(s.objs[at], y)) {
            // constraint: f_{at,n+1} => f_{j,n+1} ∘ f_{at,j} for at < j <= n
            bool ok = true;
            for (int j = at + 1; j <= n && ok; ++j) {
              int fij = s.fs[detail::pair_pos(n, at, j)];
              if (!C.leq(f, C.compose(fij, chosen[j]))) ok = false;
            }
            if (ok) {
              chosen[at] = f;
              pick(at - 1);
            }
          }
        };
        pick(n);
      }
    }
    std::sort(next.begin(), next.end());
    total += next.size();
    if (total > budget) throw BudgetError("nerve too large");
    if (next.empty()) break;
    N.simplices.push_back(std::move(next));
    ++n;
  }

  // face maps
  N.faces.resize(N.simplices.size());
  for (std::size_t d = 1; d < N.simplices.size(); ++d) {
    std::map<NerveSimplex, int> lower;
    for (std::size_t i = 0; i < N.simplices[d - 1].size(); ++i)
      lower[N.simplices[d - 1][i]] = static_cast<int>(i);
    N.faces[d].resize(N.simplices[d].size());
    for (std::size_t i = 0; i < N.simplices[d].size(); ++i) {
      for (int drop = 0; drop <= static_cast<int>(d); ++drop) {
        auto f = detail::nerve_face(N.simplices[d][i], drop);
        auto it = lower.find(f);
        if (it == lower.end())
          throw CheckError("nerve face missing from enumeration");
        N.faces[d][i].push_back(it->second);
      }
    }
  }
  return N;
}

}  // namespace equimorse
