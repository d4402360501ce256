#include <catch2/catch_amalgamated.hpp>

#include "equimorse/homology.hpp"
#include "equimorse/nerve.hpp"
#include "equimorse/simplicial.hpp"

using namespace equimorse;

namespace {

// gcd of all k x k minors; independent oracle for invariant factor products
// on tiny matrices (d1*...*dk = gcd of k-minors).
std::int64_t minor_gcd(const IntMatrix& A, int k) {
  int m = static_cast<int>(rows(A)), n = static_cast<int>(cols(A));
  std::vector<int> ri(k), ci(k);
  std::int64_t g = 0;
  std::function<std::int64_t(std::vector<int>&, std::vector<int>&)> det =
      [&](std::vector<int>& rs, std::vector<int>& cs) -> std::int64_t {
    int kk = static_cast<int>(rs.size());
    if (kk == 1) return A[rs[0]][cs[0]];
    std::int64_t acc = 0;
    for (int i = 0; i < kk; ++i) {
      std::vector<int> rs2(rs.begin() + 1, rs.end());
      std::vector<int> cs2;
      for (int j = 0; j < kk; ++j)
        if (j != i) cs2.push_back(cs[j]);
      std::int64_t sub = det(rs2, cs2);
      acc += ((i % 2) ? -1 : 1) * A[rs[0]][cs[i]] * sub;
    }
    return acc;
  };
  std::function<void(int, int)> pick_cols = [&](int from, int got) {
    if (got == k) {
      auto rs = ri;
      auto cs = ci;
      g = std::gcd(g, det(rs, cs));
      return;
    }
    for (int c = from; c < n; ++c) {
      ci[got] = c;
      pick_cols(c + 1, got + 1);
    }
  };
  std::function<void(int, int)> pick_rows = [&](int from, int got) {
    if (got == k) {
      pick_cols(0, 0);
      return;
    }
    for (int r = from; r < m; ++r) {
      ri[got] = r;
      pick_rows(r + 1, got + 1);
    }
  };
  pick_rows(0, 0);
  return g < 0 ? -g : g;
}

IntMatrix random_matrix(SplitMix& rng, int m, int n, int lo, int hi) {
  IntMatrix A(m, std::vector<std::int64_t>(n));
  for (auto& row : A)
    for (auto& x : row) x = lo + static_cast<std::int64_t>(rng.below(hi - lo + 1));
  return A;
}

}  // namespace

TEST_CASE("smith_normal_form basics") {
  SECTION("zero matrix has rank 0") {
    IntMatrix A(3, std::vector<std::int64_t>(4, 0));
    auto s = smith_normal_form(A);
    REQUIRE(s.rank == 0);
    REQUIRE(s.factors.empty());
    REQUIRE(verify_smith(A, s));
  }
  SECTION("identity has unit factors") {
    IntMatrix A(3, std::vector<std::int64_t>(3, 0));
    for (int i = 0; i < 3; ++i) A[i][i] = 1;
    auto s = smith_normal_form(A);
    REQUIRE(s.rank == 3);
    REQUIRE(s.factors == std::vector<std::int64_t>{1, 1, 1});
  }
  SECTION("classic 2x2 with nontrivial factor") {
    IntMatrix A = {{2, 4}, {4, 2}};
    auto s = smith_normal_form(A);
    REQUIRE(s.factors == std::vector<std::int64_t>{2, 6});
    REQUIRE(verify_smith(A, s));
  }
  SECTION("divisibility chain holds on random matrices") {
    SplitMix rng(7);
    for (int trial = 0; trial < 30; ++trial) {
      auto A = random_matrix(rng, 4, 5, -6, 6);
      auto s = smith_normal_form(A);
      REQUIRE(verify_smith(A, s));
      for (std::size_t i = 0; i + 1 < s.factors.size(); ++i)
        REQUIRE(s.factors[i + 1] % s.factors[i] == 0);
      // independent oracle: product of first k factors = gcd of k-minors
      std::int64_t prod = 1;
      for (int k = 1; k <= s.rank && k <= 3; ++k) {
        prod *= s.factors[k - 1];
        REQUIRE(prod == minor_gcd(A, k));
      }
    }
  }
  SECTION("invariant under random unimodular pre/post multiplication") {
    SplitMix rng(11);
    for (int trial = 0; trial < 20; ++trial) {
      auto A = random_matrix(rng, 3, 4, -4, 4);
      auto base = smith_normal_form(A).factors;
      // random elementary row/col ops preserve factors
      auto B = A;
      for (int k = 0; k < 6; ++k) {
        int op = static_cast<int>(rng.below(2));
        if (op == 0) {
          int i = static_cast<int>(rng.below(rows(B)));
          int j = static_cast<int>(rng.below(rows(B)));
          if (i == j) continue;
          std::int64_t c = static_cast<std::int64_t>(rng.below(5)) - 2;
          for (std::size_t t = 0; t < cols(B); ++t) B[i][t] += c * B[j][t];
        } else {
          int i = static_cast<int>(rng.below(cols(B)));
          int j = static_cast<int>(rng.below(cols(B)));
          if (i == j) continue;
          std::int64_t c = static_cast<std::int64_t>(rng.below(5)) - 2;
          for (std::size_t t = 0; t < rows(B); ++t) B[t][i] += c * B[t][j];
        }
      }
      REQUIRE(smith_normal_form(B).factors == base);
    }
  }
}

TEST_CASE("homology of standard complexes") {
  SECTION("point") {
    auto h = simplicial_homology_oracle(complex_from_maximal({{"a"}}));
    REQUIRE(h.betti == std::vector<int>{1});
  }
  SECTION("sphere S2 as tetrahedron boundary: (1,0,1)") {
    auto X = complex_from_maximal(
        {{"a", "b", "c"}, {"a", "b", "d"}, {"a", "c", "d"}, {"b", "c", "d"}});
    auto h = simplicial_homology_oracle(X);
    REQUIRE(h.betti == std::vector<int>{1, 0, 1});
    REQUIRE(h.torsion[1].empty());
  }
  SECTION("torus (7-vertex triangulation): (1,2,1)") {
    // Z7 triangulation: triangles {i,i+1,i+3} and {i,i+2,i+3}
    std::vector<std::vector<std::string>> tris;
    for (int i = 0; i < 7; ++i) {
      auto v = [&](int k) { return std::to_string((i + k) % 7 + 1); };
      tris.push_back({v(0), v(1), v(3)});
      tris.push_back({v(0), v(2), v(3)});
    }
    auto X = complex_from_maximal(tris);
    REQUIRE(X.cells_of_dim(0).size() == 7);
    REQUIRE(X.cells_of_dim(1).size() == 21);
    REQUIRE(X.cells_of_dim(2).size() == 14);
    auto h = simplicial_homology_oracle(X);
    REQUIRE(h.betti == std::vector<int>{1, 2, 1});
    REQUIRE(h.torsion[1].empty());
  }
  SECTION("euler characteristic consistency") {
    auto X = complex_from_maximal({{"a", "b", "c"}, {"b", "c", "d"}, {"d", "e"}});
    auto C = simplicial_chains(X);
    long chi_chain = 0;
    for (std::size_t n = 0; n < C.dims.size(); ++n)
      chi_chain += (n % 2 ? -1 : 1) * static_cast<long>(C.dims[n]);
    auto h = simplicial_homology_oracle(X);
    long chi_betti = 0;
    for (std::size_t n = 0; n < h.betti.size(); ++n)
      chi_betti += (n % 2 ? -1 : 1) * h.betti[n];
    REQUIRE(chi_chain == chi_betti);
  }
}

TEST_CASE("normalized nerve chains") {
  SECTION("one-object category is a point") {
    LPCategory C;
    C.add_object("x");
    C.add_identity(0);
    C.set_compose(0, 0, 0);
    auto h = homology(normalized_chains(geometric_nerve(C)));
    REQUIRE(h.betti == std::vector<int>{1});
  }
  SECTION("poset a > b is an interval") {
    auto X = complex_from_maximal({{"a", "b"}});
    // face poset of an edge deformation-retracts to a point
    auto h = nerve_homology(face_poset(X));
    REQUIRE(h.betti == std::vector<int>{1});
  }
  SECTION("nerve of the face poset of a circle is a circle") {
    auto X = complex_from_maximal({{"a", "b"}, {"b", "c"}, {"c", "a"}});
    auto h = nerve_homology(face_poset(X));
    REQUIRE(h.betti == std::vector<int>{1, 1});
  }
  SECTION("boundary squared is asserted") {
    auto X = complex_from_maximal({{"a", "b", "c"}, {"b", "c", "d"}});
    auto C = normalized_chains(geometric_nerve(face_poset(X)));
    REQUIRE(C.validate().ok());
  }
}

TEST_CASE("torsion via the nerve route agrees with the simplicial route") {
  auto rp2 = complex_from_maximal({{"1", "2", "3"}, {"1", "3", "4"}, {"1", "4", "5"},
                                   {"1", "2", "6"}, {"1", "5", "6"}, {"2", "3", "5"},
                                   {"2", "4", "5"}, {"2", "4", "6"}, {"3", "4", "6"},
                                   {"3", "5", "6"}});
  auto oracle = simplicial_homology_oracle(rp2);
  auto viaNerve = nerve_homology(face_poset(rp2));
  REQUIRE(viaNerve == oracle);
  REQUIRE(viaNerve.torsion[1] == std::vector<std::int64_t>{2});
}
