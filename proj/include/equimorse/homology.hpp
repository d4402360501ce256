#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "equimorse/core.hpp"
#include "equimorse/nerve.hpp"
#include "equimorse/simplicial.hpp"

namespace equimorse {

using IntMatrix = std::vector<std::vector<std::int64_t>>;  // row-major

inline std::size_t rows(const IntMatrix& m) { return m.size(); }
inline std::size_t cols(const IntMatrix& m) { return m.empty() ? 0 : m[0].size(); }

namespace detail {
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw CheckError("integer overflow during matrix reduction");
  return r;
}
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw CheckError("integer overflow during matrix reduction");
  return r;
}
}  // namespace detail

struct SmithResult {
  std::vector<std::int64_t> factors;  // nonzero invariant factors d1 | d2 | ...
  int rank = 0;
  IntMatrix U, V;  // recorded row/col operations: U * A * V = diag(factors)
};

/// Smith normal form over the integers with minimal-absolute-value pivoting.
/// Row/column operations are recorded so small instances can be re-verified.
inline SmithResult smith_normal_form(IntMatrix A) {
  const std::size_t m = rows(A), n = cols(A);
  SmithResult res;
  res.U.assign(m, std::vector<std::int64_t>(m, 0));
  res.V.assign(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < m; ++i) res.U[i][i] = 1;
  for (std::size_t j = 0; j < n; ++j) res.V[j][j] = 1;

  auto row_add = [&](std::size_t dst, std::size_t src, std::int64_t c) {
    for (std::size_t j = 0; j < n; ++j)
      A[dst][j] = detail::checked_add(A[dst][j], detail::checked_mul(c, A[src][j]));
    for (std::size_t j = 0; j < m; ++j)
      res.U[dst][j] =
          detail::checked_add(res.U[dst][j], detail::checked_mul(c, res.U[src][j]));
  };
  auto col_add = [&](std::size_t dst, std::size_t src, std::int64_t c) {
    for (std::size_t i = 0; i < m; ++i)
      A[i][dst] = detail::checked_add(A[i][dst], detail::checked_mul(c, A[i][src]));
    for (std::size_t i = 0; i < n; ++i)
      res.V[i][dst] =
          detail::checked_add(res.V[i][dst], detail::checked_mul(c, res.V[i][src]));
  };
  auto row_swap = [&](std::size_t a, std::size_t b) {
    std::swap(A[a], A[b]);
    std::swap(res.U[a], res.U[b]);
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < m; ++i) std::swap(A[i][a], A[i][b]);
    for (std::size_t i = 0; i < n; ++i) std::swap(res.V[i][a], res.V[i][b]);
  };
  auto row_neg = [&](std::size_t r) {
    for (auto& x : A[r]) x = -x;
    for (auto& x : res.U[r]) x = -x;
  };

  std::size_t t = 0;
  while (t < m && t < n) {
    // find minimal nonzero |entry| in the remaining block
    std::size_t pi = t, pj = t;
    std::int64_t best = 0;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (A[i][j] != 0 &&
            (best == 0 || std::llabs(A[i][j]) < std::llabs(best))) {
          best = A[i][j];
          pi = i;
          pj = j;
        }
    if (best == 0) break;
    row_swap(t, pi);
    col_swap(t, pj);
    if (A[t][t] < 0) row_neg(t);

    // eliminate column and row; restart block if a remainder appears
    bool progress = true;
    while (progress) {
      progress = false;
      for (std::size_t i = t + 1; i < m; ++i)
        if (A[i][t] != 0) {
          std::int64_t q = A[i][t] / A[t][t];
          row_add(i, t, -q);
          if (A[i][t] != 0) {  // remainder smaller than pivot: swap up
            row_swap(t, i);
            if (A[t][t] < 0) row_neg(t);
            progress = true;
          }
        }
      for (std::size_t j = t + 1; j < n; ++j)
        if (A[t][j] != 0) {
          std::int64_t q = A[t][j] / A[t][t];
          col_add(j, t, -q);
          if (A[t][j] != 0) {
            col_swap(t, j);
            progress = true;
          }
        }
    }
    // divisibility: pivot must divide the rest of the block
    bool redo = false;
    for (std::size_t i = t + 1; i < m && !redo; ++i)
      for (std::size_t j = t + 1; j < n && !redo; ++j)
        if (A[i][j] % A[t][t] != 0) {
          row_add(t, i, 1);
          redo = true;
        }
    if (redo) continue;
    ++t;
  }
  for (std::size_t i = 0; i < t; ++i)
    if (A[i][i] < 0) row_neg(i);
  for (std::size_t i = 0; i < t; ++i) res.factors.push_back(A[i][i]);
  res.rank = static_cast<int>(t);
  return res;
}

/// Re-multiplies the recorded operations; intended for matrices up to
/// ~200x200 as a self-check of the reduction.
inline bool verify_smith(const IntMatrix& A, const SmithResult& s) {
  const std::size_t m = rows(A), n = cols(A);
  if (m > 200 || n > 200) return true;
  // U*A
  IntMatrix UA(m, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k) {
      if (s.U[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        UA[i][j] = detail::checked_add(
            UA[i][j], detail::checked_mul(s.U[i][k], A[k][j]));
    }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t want = 0;
      // (U A V)[i][j]
      std::int64_t acc = 0;
      for (std::size_t k = 0; k < n; ++k)
        if (s.V[k][j] != 0)
          acc = detail::checked_add(acc, detail::checked_mul(UA[i][k], s.V[k][j]));
      if (i == j && i < s.factors.size()) want = s.factors[i];
      if (acc != want) return false;
    }
  return true;
}

/// Bounded chain complex of free Z-modules; boundary[n] maps degree n to
/// degree n-1 (rows index degree n-1, columns degree n).
struct ChainComplex {
  std::vector<std::size_t> dims;     // rank of C_n
  std::vector<IntMatrix> boundary;   // boundary[n]; boundary[0] is empty
  std::vector<std::vector<std::string>> basis_labels;

  int top_degree() const { return static_cast<int>(dims.size()) - 1; }

  ValidationReport validate() const {
    ValidationReport rep;
    for (std::size_t nn = 2; nn < boundary.size(); ++nn) {
      const IntMatrix& d1 = boundary[nn];      // C_n -> C_{n-1}
      const IntMatrix& d0 = boundary[nn - 1];  // C_{n-1} -> C_{n-2}
      if (d1.empty() || d0.empty()) continue;
      for (std::size_t j = 0; j < cols(d1); ++j)
        for (std::size_t i = 0; i < rows(d0); ++i) {
          std::int64_t acc = 0;
          for (std::size_t k = 0; k < rows(d1); ++k)
            acc = detail::checked_add(acc,
                                      detail::checked_mul(d0[i][k], d1[k][j]));
          if (acc != 0) {
            rep.add("boundary-squared",
                    "degree " + std::to_string(nn) + " column " + std::to_string(j));
            return rep;
          }
        }
    }
    return rep;
  }
};

struct HomologyProfile {
  std::vector<int> betti;
  std::vector<std::vector<std::int64_t>> torsion;  // per degree, sorted, d_i | d_{i+1}

  bool operator==(const HomologyProfile& o) const {
    return betti == o.betti && torsion == o.torsion;
  }
  std::string to_string() const {
    std::ostringstream out;
    for (std::size_t n = 0; n < betti.size(); ++n) {
      if (n) out << ", ";
      out << "H" << n << "=Z^" << betti[n];
      for (auto t : torsion[n]) out << "+Z/" << t;
    }
    return out.str();
  }
};

// trims trailing zero-homology degrees (keeps at least degree 0)
inline void trim_profile(HomologyProfile& h) {
  while (h.betti.size() > 1 && h.betti.back() == 0 && h.torsion.back().empty()) {
    h.betti.pop_back();
    h.torsion.pop_back();
  }
}

inline HomologyProfile homology(const ChainComplex& C) {
  auto rep = C.validate();
  if (!rep.ok()) throw CheckError("chain complex invalid: " + rep.summary());
  HomologyProfile h;
  const int top = C.top_degree();
  std::vector<SmithResult> snf(top + 2);
  for (int n = 1; n <= top; ++n) {
    if (n < static_cast<int>(C.boundary.size())) {
      snf[n] = smith_normal_form(C.boundary[n]);
      if (!verify_smith(C.boundary[n], snf[n]))
        throw CheckError("smith normal form self-check failed");
    }
  }
  for (int n = 0; n <= top; ++n) {
    int rank_dn = (n >= 1) ? snf[n].rank : 0;          // rank of d_n
    int rank_dn1 = (n + 1 <= top) ? snf[n + 1].rank : 0;  // rank of d_{n+1}
    int betti = static_cast<int>(C.dims[n]) - rank_dn - rank_dn1;
    std::vector<std::int64_t> tors;
    if (n + 1 <= top)
      for (auto d : snf[n + 1].factors)
        if (d != 1 && d != -1) tors.push_back(std::llabs(d));
    std::sort(tors.begin(), tors.end());
    h.betti.push_back(betti);
    h.torsion.push_back(tors);
  }
  trim_profile(h);
  return h;
}

/// Chain complex of a simplicial complex with the induced lexicographic
/// orientation.
inline ChainComplex simplicial_chains(const SimplicialComplex& X) {
  ChainComplex C;
  int top = X.top_dim();
  if (top < 0) throw InputError("empty complex has no chain complex");
  std::vector<std::vector<int>> by_dim(top + 1);
  std::vector<int> pos(X.n_cells());
  for (int d = 0; d <= top; ++d) {
    by_dim[d] = X.cells_of_dim(d);
    for (std::size_t i = 0; i < by_dim[d].size(); ++i) pos[by_dim[d][i]] = static_cast<int>(i);
  }
  C.dims.resize(top + 1);
  C.boundary.resize(top + 1);
  C.basis_labels.resize(top + 1);
  for (int d = 0; d <= top; ++d) {
    C.dims[d] = by_dim[d].size();
    for (int c : by_dim[d]) C.basis_labels[d].push_back(X.cell_name(c));
  }
  for (int d = 1; d <= top; ++d) {
    C.boundary[d].assign(by_dim[d - 1].size(),
                         std::vector<std::int64_t>(by_dim[d].size(), 0));
    for (std::size_t j = 0; j < by_dim[d].size(); ++j) {
      const Simplex& s = X.cells[by_dim[d][j]];
      auto fs = X.facets(s);
      for (std::size_t i = 0; i < fs.size(); ++i) {
        int face = X.index_of(fs[i]);
        C.boundary[d][pos[face]][j] += (i % 2 == 0) ? 1 : -1;
      }
    }
  }
  return C;
}

inline HomologyProfile simplicial_homology_oracle(const SimplicialComplex& X) {
  return homology(simplicial_chains(X));
}

/// Normalized chain complex of a nerve: basis = nondegenerate simplices,
/// boundary = alternating face sum (faces are never degenerate here).
inline ChainComplex normalized_chains(const NerveSimplicialSet& N) {
  ChainComplex C;
  int top = static_cast<int>(N.simplices.size()) - 1;
  while (top > 0 && N.simplices[top].empty()) --top;
  C.dims.resize(top + 1);
  C.boundary.resize(top + 1);
  C.basis_labels.resize(top + 1);
  for (int d = 0; d <= top; ++d) {
    C.dims[d] = N.simplices[d].size();
    for (const auto& s : N.simplices[d]) {
      std::string label;
      for (std::size_t i = 0; i < s.objs.size(); ++i) {
        if (i) label += '|';
        label += std::to_string(s.objs[i]);
      }
      C.basis_labels[d].push_back(label);
    }
  }
  for (int d = 1; d <= top; ++d) {
    C.boundary[d].assign(N.simplices[d - 1].size(),
                         std::vector<std::int64_t>(N.simplices[d].size(), 0));
    for (std::size_t j = 0; j < N.simplices[d].size(); ++j)
      for (int drop = 0; drop <= d; ++drop) {
        int face = N.faces[d][j][drop];
        C.boundary[d][face][j] += (drop % 2 == 0) ? 1 : -1;
      }
  }
  auto rep = C.validate();
  if (!rep.ok()) throw CheckError("nerve chains: " + rep.summary());
  return C;
}

inline HomologyProfile nerve_homology(const LPCategory& C,
                                      std::size_t budget = Budgets{}.nerve_simplices) {
  return homology(normalized_chains(geometric_nerve(C, -1, budget)));
}

}  // namespace equimorse
