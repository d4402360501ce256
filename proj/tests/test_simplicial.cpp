#include <catch2/catch_amalgamated.hpp>

#include "equimorse/homology.hpp"
#include "equimorse/nerve.hpp"
#include "equimorse/simplicial.hpp"

using namespace equimorse;

TEST_CASE("full 2-simplex closes to 7 cells") {
  auto X = complex_from_maximal({{"a", "b", "c"}});
  REQUIRE(X.n_cells() == 7);
  REQUIRE(X.validate().ok());
  REQUIRE(X.cells_of_dim(0).size() == 3);
  REQUIRE(X.cells_of_dim(1).size() == 3);
  REQUIRE(X.cells_of_dim(2).size() == 1);
}

TEST_CASE("tetrahedron boundary has 14 cells") {
  auto X = complex_from_maximal(
      {{"a", "b", "c"}, {"a", "b", "d"}, {"a", "c", "d"}, {"b", "c", "d"}});
  REQUIRE(X.n_cells() == 14);
  REQUIRE(X.validate().ok());
}

TEST_CASE("every d-simplex has d+1 facets present") {
  auto X = complex_from_maximal({{"a", "b", "c"}, {"c", "d"}, {"d", "e", "f"}});
  for (int i = 0; i < X.n_cells(); ++i) {
    if (X.dim(i) == 0) continue;
    int count = 0;
    for (const auto& f : X.facets(X.cells[i]))
      if (X.has(f)) ++count;
    REQUIRE(count == X.dim(i) + 1);
  }
}

TEST_CASE("face_poset shapes") {
  SECTION("single vertex") {
    auto X = complex_from_maximal({{"a"}});
    auto C = face_poset(X);
    REQUIRE(C.n_objects() == 1);
    REQUIRE(C.n_morphisms() == 1);
    REQUIRE(validate_lp(C).ok());
  }
  SECTION("one edge") {
    auto X = complex_from_maximal({{"a", "b"}});
    auto C = face_poset(X);
    REQUIRE(C.n_objects() == 3);
    REQUIRE(C.n_morphisms() - C.n_objects() == 2);
    REQUIRE(validate_lp(C).ok());
  }
  SECTION("full triangle has 12 non-identity morphisms") {
    // brute-force strict face pairs: 3 edges x 2 vertices, triangle -> 3
    // edges, triangle -> 3 vertices
    auto X = complex_from_maximal({{"a", "b", "c"}});
    auto C = face_poset(X);
    REQUIRE(C.n_objects() == 7);
    REQUIRE(C.n_morphisms() - C.n_objects() == 12);
    REQUIRE(validate_lp(C).ok());
  }
}

TEST_CASE("face_poset is loopfree for assorted complexes") {
  auto shapes = std::vector<std::vector<std::vector<std::string>>>{
      {{"a"}},
      {{"a", "b"}, {"b", "c"}, {"c", "a"}},
      {{"a", "b", "c"}, {"b", "c", "d"}},
      {{"a", "b", "c", "d"}},
  };
  for (const auto& maximal : shapes)
    REQUIRE(validate_lp(face_poset(complex_from_maximal(maximal))).ok());
}

TEST_CASE("simplicial homology oracle") {
  SECTION("point") {
    auto h = simplicial_homology_oracle(complex_from_maximal({{"a"}}));
    REQUIRE(h.betti == std::vector<int>{1});
    REQUIRE(h.torsion[0].empty());
  }
  SECTION("circle from 3 edges") {
    auto h = simplicial_homology_oracle(
        complex_from_maximal({{"a", "b"}, {"b", "c"}, {"c", "a"}}));
    REQUIRE(h.betti == std::vector<int>{1, 1});
  }
  SECTION("RP2 (6-vertex triangulation) has Z/2 in degree 1") {
    auto rp2 = complex_from_maximal({{"1", "2", "3"},
                                     {"1", "3", "4"},
                                     {"1", "4", "5"},
                                     {"1", "2", "6"},
                                     {"1", "5", "6"},
                                     {"2", "3", "5"},
                                     {"2", "4", "5"},
                                     {"2", "4", "6"},
                                     {"3", "4", "6"},
                                     {"3", "5", "6"}});
    REQUIRE(rp2.cells_of_dim(0).size() == 6);
    REQUIRE(rp2.cells_of_dim(1).size() == 15);
    REQUIRE(rp2.cells_of_dim(2).size() == 10);
    auto h = simplicial_homology_oracle(rp2);
    REQUIRE(h.betti == std::vector<int>{1, 0});
    REQUIRE(h.torsion[1] == std::vector<std::int64_t>{2});
  }
}

TEST_CASE("nerve of the face poset matches the oracle homology") {
  auto shapes = std::vector<std::vector<std::vector<std::string>>>{
      {{"a", "b"}, {"b", "c"}, {"c", "a"}},
      {{"a", "b", "c"}, {"c", "d"}},
      {{"a", "b", "c"}, {"b", "c", "d"}, {"a", "c", "d"}, {"a", "b", "d"}},
  };
  for (const auto& maximal : shapes) {
    auto X = complex_from_maximal(maximal);
    auto oracle = simplicial_homology_oracle(X);
    auto viaNerve = nerve_homology(face_poset(X));
    REQUIRE(viaNerve == oracle);
  }
}

TEST_CASE("barycentric subdivision matches the nerve f-vector") {
  auto X = complex_from_maximal({{"a", "b", "c"}});
  auto sd = barycentric_subdivide(X);
  auto N = geometric_nerve(face_poset(X));
  auto f = N.f_vector();
  REQUIRE(f == std::vector<std::size_t>{7, 12, 6});
  REQUIRE(sd.cells_of_dim(0).size() == f[0]);
  REQUIRE(sd.cells_of_dim(1).size() == f[1]);
  REQUIRE(sd.cells_of_dim(2).size() == f[2]);
}

TEST_CASE("subdivide_perm transports a reflection to the subdivision") {
  auto X = complex_from_maximal({{"a", "b"}});
  std::vector<int> perm = {1, 0};  // swap a and b
  auto sd = barycentric_subdivide(X);
  auto sp = subdivide_perm(X, sd, perm);
  std::vector<int> ident(sd.vertices.size());
  for (std::size_t i = 0; i < ident.size(); ++i) ident[i] = static_cast<int>(i);
  for (std::size_t i = 0; i < sd.vertices.size(); ++i)
    if (sd.vertices[i] == "a.b") REQUIRE(sp[i] == static_cast<int>(i));
  REQUIRE(sp != ident);
}

TEST_CASE("complex file parsing") {
  auto X = parse_complex_file("# comment\nsimplex a b c\nsimplex c d\n\n");
  REQUIRE(X.n_cells() == 7 + 2);
  REQUIRE_THROWS_AS(parse_complex_file("simplex\n"), InputError);
  REQUIRE_THROWS_AS(parse_complex_file("simplexx a\n"), InputError);
  auto again = parse_complex_file(dump_complex(X));
  REQUIRE(again.cells == X.cells);
  REQUIRE(again.vertices == X.vertices);
}
