#include "doctest.h"

#include "brw/canonical.hpp"
#include "brw/presentation.hpp"
#include "brw/rng.hpp"

using namespace brw;

TEST_CASE("free reduction") {
  auto pres = GroupPresentation::free_rank2();
  Canonicalizer canon(pres);
  // a a^-1 b -> b
  CHECK(canon.canonical(pres.parse_word("aAb")) == pres.parse_word("b"));
  CHECK(canon.canonical({}) == Word{});
  CHECK(canon.is_identity(pres.parse_word("abBA")));
}

TEST_CASE("surface relator collapses to identity") {
  auto pres = GroupPresentation::surface_genus2();
  Canonicalizer canon(pres);
  Word rel = pres.parse_word("abABcdCD");
  CHECK(canon.canonical(rel).empty());
  // relator conjugates and powers collapse too
  Word conj = concat(pres.parse_word("ba"), concat(rel, inverse_word(pres.parse_word("ba"))));
  CHECK(canon.canonical(conj).empty());
  Word sq = concat(rel, rel);
  CHECK(canon.canonical(sq).empty());
}

TEST_CASE("empty word is identity on every preset") {
  for (auto pres : {GroupPresentation::free_rank2(), GroupPresentation::surface_genus2()}) {
    Canonicalizer canon(pres);
    CHECK(canon.canonical({}).empty());
  }
}

TEST_CASE("canonicalization is idempotent on random words") {
  for (auto pres : {GroupPresentation::free_rank2(), GroupPresentation::surface_genus2()}) {
    Canonicalizer canon(pres);
    Rng rng(substream(20240601, "canonical-idempotent", pres.generator_count()));
    const int ngen = pres.generator_count();
    for (int trial = 0; trial < 10000; ++trial) {
      Word w;
      int len = static_cast<int>(rng.below(14));
      for (int i = 0; i < len; ++i) w.push_back(static_cast<Gen>(rng.below(ngen)));
      Word c = canon.canonical(w);
      CHECK(canon.canonical(c) == c);
    }
  }
}

TEST_CASE("canonical words are geodesic representatives of their class") {
  // multiplying by a generator changes canonical length by exactly 1 in the
  // free group, and by at most 1 on the surface preset
  auto pres = GroupPresentation::surface_genus2();
  Canonicalizer canon(pres);
  Rng rng(substream(20240601, "canonical-geodesic", 0));
  for (int trial = 0; trial < 2000; ++trial) {
    Word w;
    int len = static_cast<int>(rng.below(10));
    for (int i = 0; i < len; ++i) w.push_back(static_cast<Gen>(rng.below(8)));
    Word c = canon.canonical(w);
    Gen g = static_cast<Gen>(rng.below(8));
    Word cg = canon.multiply(c, g);
    CHECK(std::abs(static_cast<int>(cg.size()) - static_cast<int>(c.size())) <= 1);
  }
}

TEST_CASE("two random routes to the same element agree") {
  auto pres = GroupPresentation::surface_genus2();
  Canonicalizer canon(pres);
  Rng rng(substream(20240601, "canonical-routes", 0));
  const Word rel = pres.parse_word("abABcdCD");
  for (int trial = 0; trial < 500; ++trial) {
    Word w;
    int len = static_cast<int>(rng.below(8));
    for (int i = 0; i < len; ++i) w.push_back(static_cast<Gen>(rng.below(8)));
    // insert a relator conjugate in the middle: same element, different word
    std::size_t pos = rng.below(w.size() + 1);
    Word v(w.begin(), w.begin() + pos);
    v.insert(v.end(), rel.begin(), rel.end());
    v.insert(v.end(), w.begin() + pos, w.end());
    CHECK(canon.canonical(w) == canon.canonical(v));
  }
}

TEST_CASE("unknown generator symbol rejected") {
  auto pres = GroupPresentation::free_rank2();
  CHECK_THROWS(pres.parse_word("axb"));
}

TEST_CASE("custom presentation small-cancellation gate") {
  // genus-2 relator passes C'(1/6)
  CHECK_NOTHROW(GroupPresentation::custom({"a", "A", "b", "B", "c", "C", "d", "D"},
                                          {"abABcdCD"}, {}));
  // Z^2 = <a,b | abAB> has pieces of length 1 but relator length 4: 6*1 >= 4
  CHECK_THROWS(GroupPresentation::custom({"a", "A", "b", "B"}, {"abAB"}, {}));
}

TEST_CASE("word metric distance") {
  auto pres = GroupPresentation::free_rank2();
  Canonicalizer canon(pres);
  Word e{};
  CHECK(canon.distance(e, e) == 0);
  CHECK(canon.distance(e, pres.parse_word("ab")) == 2);
  Word x = pres.parse_word("aab"), y = pres.parse_word("aB");
  CHECK(canon.distance(x, y) == canon.distance(y, x));
}
