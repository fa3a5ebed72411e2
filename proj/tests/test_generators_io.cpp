#include <doctest.h>

#include <sstream>

#include "omset/generators.hpp"
#include "omset/lattice_io.hpp"

using namespace omset;

TEST_CASE("boolean(k) is the 2^k power set algebra") {
  const Logic B2 = booleanAlgebra(2);
  CHECK(B2.size() == 4);
  CHECK(B2.isBoolean());
  const Logic B3 = booleanAlgebra(3);
  CHECK(B3.size() == 8);
  for (Elem p = 0; p < B3.size(); ++p)
    for (Elem q = 0; q < B3.size(); ++q) CHECK(B3.commutes(p, q));
}

TEST_CASE("mo(k) has 2k+2 elements and only trivial commutation") {
  const Logic mo2 = moLattice(2);
  CHECK(mo2.size() == 6);
  CHECK_FALSE(mo2.isBoolean());
  CHECK(mo2.name(2) == "a");
  CHECK(mo2.name(3) == "a'");
  const Logic mo3 = moLattice(3);
  CHECK(mo3.size() == 8);
  // distinct atoms never commute
  for (Elem p = 2; p < mo3.size(); ++p)
    for (Elem q = 2; q < mo3.size(); ++q)
      CHECK(mo3.commutes(p, q) == (p == q || p == mo3.ocompl(q)));
}

TEST_CASE("product and horizontal sum pass validation") {
  const Logic prod = product(booleanAlgebra(1), moLattice(2));
  CHECK(prod.size() == 12);
  CHECK_FALSE(prod.isBoolean());
  const Logic hs = horizontalSum(booleanAlgebra(2), booleanAlgebra(2));
  CHECK(hs.size() == 6);
  CHECK_FALSE(hs.isBoolean());
  // horizontal sum: proper elements across summands never commute
  const auto blocks = hs.maximalBooleanSublogics();
  CHECK(blocks.size() == 2);
}

TEST_CASE("generator spec strings") {
  CHECK(fromGenSpec("boolean:3").size() == 8);
  CHECK(fromGenSpec("mo:2").size() == 6);
  CHECK(fromGenSpec("prod:boolean:1,mo:2").size() == 12);
  CHECK(fromGenSpec("hsum:boolean:2,boolean:2").size() == 6);
  CHECK(fromGenSpec("prod:boolean:1,prod:boolean:1,boolean:1").size() == 8);
  CHECK_THROWS_AS(fromGenSpec("nope:3"), std::invalid_argument);
  CHECK_THROWS_AS(fromGenSpec("boolean:2,boolean:2"), std::invalid_argument);
  CHECK_THROWS_AS(fromGenSpec("mo:"), std::invalid_argument);
}

TEST_CASE("lattice JSON round trip") {
  const Logic mo2 = moLattice(2);
  const std::string text = writeLattice(mo2);
  std::istringstream in(text);
  const Logic back = Logic::fromRaw(readRawLattice(in));
  REQUIRE(back.size() == mo2.size());
  for (Elem a = 0; a < mo2.size(); ++a) {
    CHECK(back.name(a) == mo2.name(a));
    CHECK(back.ocompl(a) == mo2.ocompl(a));
    for (Elem b = 0; b < mo2.size(); ++b) {
      CHECK(back.le(a, b) == mo2.le(a, b));
      CHECK(back.meet(a, b) == mo2.meet(a, b));
      CHECK(back.join(a, b) == mo2.join(a, b));
    }
  }
}

TEST_CASE("reader normalizes omitted reflexive pairs") {
  std::istringstream in(R"({
    "n": 2, "names": ["0", "1"], "leq": [[0, 1]], "ortho": [1, 0]
  })");
  const Logic L = Logic::fromRaw(readRawLattice(in));
  CHECK(L.le(0, 0));
  CHECK(L.le(1, 1));
  CHECK(L.le(0, 1));
}

TEST_CASE("carrier cap is enforced") {
  CHECK_THROWS_AS(fromGenSpec("prod:boolean:4,boolean:4"),
                  std::invalid_argument);
  CHECK_NOTHROW(fromGenSpec("boolean:6"));
}
