#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include "bolforge/canonical.hpp"
#include "bolforge/constructions.hpp"

using namespace bolforge;
using namespace testing;

namespace {

// Naive powers straight from the recursion, on the raw table.
int naive_power(const oracle::Table& t, int x, long long k) {
  const int n = oracle::n_of(t);
  if (k < 0) {
    int inv = -1;
    for (int y = 0; y < n; ++y)
      if (t[x][y] == 0 && t[y][x] == 0) inv = y;
    REQUIRE(inv >= 0);
    int acc = 0;
    for (long long i = 0; i < -k; ++i) acc = t[inv][acc];
    return acc;
  }
  int acc = 0;
  for (long long i = 0; i < k; ++i) acc = t[x][acc];
  return acc;
}

const char* kNonBol5 = "5\n0 1 2 3 4\n1 0 3 4 2\n2 3 4 0 1\n3 4 1 2 0\n4 2 0 1 3\n";

}  // namespace

TEST_CASE("parse and serialize round trip") {
  const LoopTable z3 = parse_loop("3\n0 1 2\n1 2 0\n2 0 1\n");
  CHECK(z3.order() == 3);
  CHECK(z3.identity() == Element(0));
  CHECK(serialize_loop(z3) == "3\n0 1 2\n1 2 0\n2 0 1\n");
  CHECK(parse_loop(serialize_loop(z3)) == z3);
  CHECK(serialize_loop_csv(z3) == "0,1,2\n1,2,0\n2,0,1\n");
  CHECK(parse_loop(serialize_loop_csv(z3)) == z3);
}

TEST_CASE("parser accepts comments, blank lines and identity annotation") {
  const LoopTable a = parse_loop("# cyclic\n\n3\n  0 1 2\n1 2 0\n# mid\n2 0 1\nidentity=0\n");
  CHECK(a == cyclic_group(3));
  // Identity 1: rows/columns of 1 are the identity permutation.
  const LoopTable b = parse_loop("3\n2 0 1\n0 1 2\n1 2 0\n");
  CHECK(b.identity() == Element(1));
  CHECK(parse_loop("3\n2 0 1\n0 1 2\n1 2 0\nidentity=1\n").identity() == Element(1));
  const LoopTable norm = parse_loop("3\n2 0 1\n0 1 2\n1 2 0\n", {.normalize = true});
  CHECK(norm.identity() == Element(0));
  CHECK(are_isomorphic(norm, cyclic_group(3)));
}

TEST_CASE("parse errors carry line numbers") {
  auto line_of = [](const char* text) -> std::size_t {
    try {
      parse_loop(text);
    } catch (const MalformedInput& e) {
      return e.line();
    }
    return 999;
  };
  CHECK(line_of("3\n0 1 2\n1 2\n2 0 1\n") == 3);
  CHECK(line_of("3\n0 1 2\n1 2 x\n2 0 1\n") == 3);
  CHECK(line_of("# c\n3\n0 1 2\n1 2 0\n2 0 7\n") == 5);
  CHECK(line_of("3 3\n0 1 2\n1 2 0\n2 0 1\n") == 1);
  CHECK(line_of("3\n0 1 2\n1 2 0\n") == 3);
  CHECK(line_of("") == 0);
  CHECK(line_of("0\n") == 1);
  CHECK(line_of("256\n") == 1);
  CHECK_THROWS_AS(load_loop_file("/nonexistent/loop.txt"), MalformedInput);
}

TEST_CASE("structural validation") {
  SUBCASE("row repeat") {
    try {
      parse_loop("3\n0 1 2\n1 1 0\n2 0 1\n");
      FAIL("accepted");
    } catch (const NotLatinSquare& e) {
      CHECK(e.axis() == NotLatinSquare::Axis::Row);
      CHECK(e.index() == 1);
    }
  }
  SUBCASE("column repeat") {
    try {
      parse_loop("3\n0 1 2\n1 2 0\n2 2 1\n");
      FAIL("accepted");
    } catch (const NotLatinSquare& e) {
      // Row 2 is also bad; rows are checked first.
      CHECK(e.axis() == NotLatinSquare::Axis::Row);
    }
    try {
      parse_loop("3\n0 1 2\n1 2 0\n1 2 0\n");
      FAIL("accepted");
    } catch (const NotLatinSquare& e) {
      CHECK(e.axis() == NotLatinSquare::Axis::Column);
      CHECK(e.index() == 0);
    }
  }
  SUBCASE("quasigroup without identity") {
    CHECK_THROWS_AS(parse_loop("3\n0 2 1\n2 1 0\n1 0 2\n"), NoIdentity);
  }
  SUBCASE("declared identity wrong") {
    CHECK_THROWS_AS(parse_loop("3\n0 1 2\n1 2 0\n2 0 1\nidentity=2\n"), NoIdentity);
  }
  SUBCASE("order bounds") {
    CHECK_THROWS(LoopTable::from_cells(0, {}));
    CHECK_THROWS(LoopTable::from_cells(2, {0, 1, 1}));
    CHECK_THROWS(LoopTable::from_cells(2, {0, 1, 1, 2}));
  }
}

TEST_CASE("element range checks") {
  const LoopTable z3 = cyclic_group(3);
  CHECK_THROWS_AS(z3.mul(Element(3), Element(0)), IndexOutOfRange);
  CHECK_THROWS_AS(z3.ldiv(Element(0), Element(5)), IndexOutOfRange);
  CHECK_THROWS_AS(z3.inverse(Element(3)), IndexOutOfRange);
  CHECK_THROWS_AS(ElementSubset(z3, elems({0, 3})), IndexOutOfRange);
}

TEST_CASE("divisions solve the defining equations") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& t : oracle::all_loops(static_cast<int>(n))) {
      const LoopTable L = from_oracle(t);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          const Element x = L.ldiv(Element(a), Element(b));
          const Element y = L.rdiv(Element(b), Element(a));
          CHECK(static_cast<std::size_t>(t[a][x.index()]) == b);
          CHECK(static_cast<std::size_t>(t[y.index()][a]) == b);
        }
      }
    }
  }
}

TEST_CASE("inverses") {
  const LoopTable bad = parse_loop(kNonBol5);
  CHECK(bad.has_two_sided_inverse(Element(1)));
  CHECK(bad.inverse(Element(1)) == Element(1));
  CHECK_FALSE(bad.has_two_sided_inverse(Element(2)));
  try {
    bad.inverse(Element(2));
    FAIL("inverse of 2 accepted");
  } catch (const NoTwoSidedInverse& e) {
    CHECK(e.element() == 2);
    CHECK(e.right_inverse() == 3);  // 2*3 = 0
    CHECK(e.left_inverse() == 4);   // 4*2 = 0
  }
  const LoopTable s3 = symmetric_group_3();
  for (Element x : s3.elements()) CHECK(s3.mul(x, s3.inverse(x)) == s3.identity());
}

TEST_CASE("powers and element orders match the naive recursion") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& t : oracle::all_loops(n)) {
      const LoopTable L = from_oracle(t);
      for (int x = 0; x < n; ++x) {
        for (long long k = 0; k <= 2 * n; ++k)
          CHECK(L.power(Element(x), k).index() == static_cast<std::size_t>(naive_power(t, x, k)));
        if (L.has_two_sided_inverse(Element(x))) {
          for (long long k = 1; k <= n; ++k)
            CHECK(L.power(Element(x), -k).index() ==
                  static_cast<std::size_t>(naive_power(t, x, -k)));
        }
        int k = 1, acc = x;
        while (acc != 0) {
          acc = t[x][acc];
          ++k;
        }
        CHECK(L.element_order(Element(x)) == static_cast<std::size_t>(k));
      }
    }
  }
  const LoopTable z6 = cyclic_group(6);
  CHECK(z6.element_order(Element(0)) == 1);
  CHECK(z6.element_order(Element(2)) == 3);
  CHECK(z6.element_order(Element(5)) == 6);
  CHECK(z6.power(Element(5), -1) == Element(1));
}

TEST_CASE("relabel, transpose, normalize") {
  std::mt19937 rng(7);
  const LoopTable s3 = symmetric_group_3();
  for (int trial = 0; trial < 20; ++trial) {
    const auto perm = random_perm(6, rng);
    const LoopTable r = s3.relabeled(perm);
    for (std::size_t a = 0; a < 6; ++a)
      for (std::size_t b = 0; b < 6; ++b)
        CHECK(r.cell(perm[a], perm[b]) == perm[s3.cell(a, b)]);
  }
  const LoopTable tr = s3.transposed();
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) CHECK(tr.cell(a, b) == s3.cell(b, a));
  CHECK(tr.transposed() == s3);

  std::vector<std::size_t> swap{2, 1, 0};
  const LoopTable moved = cyclic_group(3).relabeled(swap);
  CHECK(moved.identity() == Element(2));
  CHECK(moved.normalized().identity() == Element(0));
  CHECK(are_isomorphic(moved.normalized(), cyclic_group(3)));
  CHECK_THROWS(cyclic_group(3).relabeled(std::vector<std::size_t>{0, 0, 1}));
}

TEST_CASE("element subsets") {
  const LoopTable z6 = cyclic_group(6);
  const ElementSubset a(z6, elems({4, 0, 2, 2}));
  CHECK(indices(a.members()) == std::vector<std::size_t>{0, 2, 4});
  CHECK(a.contains(Element(2)));
  CHECK_FALSE(a.contains(Element(3)));
  const ElementSubset b(z6, elems({0, 3, 4}));
  CHECK(indices(a.intersect(b).members()) == std::vector<std::size_t>{0, 4});
  CHECK(a.intersect(b).is_subset_of(a));
  CHECK_FALSE(a.is_subset_of(b));
  CHECK(ElementSubset(z6).empty());
}

TEST_CASE("digest is stable") {
  CHECK(table_digest(cyclic_group(3)) == "4d46b62066ed1d05");
  CHECK(table_digest(cyclic_group(4)) != table_digest(klein_four()));
}

TEST_CASE("canonical form of small loops") {
  const LoopTable z3 = cyclic_group(3);
  CHECK(canonical_form(z3) == z3);
  CHECK(canonical_form(z3.relabeled(std::vector<std::size_t>{0, 2, 1})) == z3);
  CHECK_FALSE(are_isomorphic(cyclic_group(4), klein_four()));
  CHECK(are_isomorphic(direct_product(cyclic_group(2), cyclic_group(3)), cyclic_group(6)));
}

TEST_CASE("canonical form agrees with brute force at n <= 5, all relabelings") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<std::size_t> perm(n);
    for (const auto& t : oracle::all_loops(n)) {
      const LoopTable L = from_oracle(t);
      const LoopTable canon = canonical_form(L);
      REQUIRE(to_oracle(canon) == oracle::canonical(t));
      CHECK(canonical_form(canon) == canon);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        CHECK(canonical_form(L.relabeled(perm)) == canon);
      } while (std::next_permutation(perm.begin() + 1, perm.end()));
    }
  }
}

TEST_CASE("canonical form under random relabelings at larger orders") {
  std::mt19937 rng(11);
  for (const LoopTable& L : enumerate(8, ClassConstraint::LeftBol)) {
    for (int trial = 0; trial < 10; ++trial) {
      CHECK(canonical_form(L.relabeled(random_perm(8, rng))) == L);
    }
  }
  const LoopTable g21 = semidirect_product(7, 3, 2);
  const LoopTable c21 = canonical_form(g21);
  for (int trial = 0; trial < 5; ++trial)
    CHECK(canonical_form(g21.relabeled(random_perm(21, rng))) == c21);
}

TEST_CASE("partial-table pruning never rejects a prefix of a canonical form") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& t : oracle::classes(n, [](const oracle::Table&) { return true; })) {
      std::vector<std::int8_t> cells(n * n, -1);
      for (int k = 0; k < n * n; ++k) {
        cells[k] = static_cast<std::int8_t>(t[k / n][k % n]);
        CHECK_FALSE(detail::has_smaller_relabeling(cells, n));
      }
    }
    // Complete non-canonical tables are rejected.
    for (const auto& t : oracle::all_loops(n)) {
      std::vector<std::int8_t> cells;
      for (const auto& row : t)
        for (int v : row) cells.push_back(static_cast<std::int8_t>(v));
      CHECK(detail::has_smaller_relabeling(cells, n) == (t != oracle::canonical(t)));
    }
  }
}
