#include "doctest.h"

#include <stdexcept>

#include "brw/geometry.hpp"
#include "brw/rng.hpp"

using namespace brw;

TEST_CASE("geodesic segment basics") {
  auto pres = GroupPresentation::free_rank2();
  Canonicalizer canon(pres);
  Word x = pres.parse_word("ab");
  auto p = geodesic_segment(canon, x, x);
  CHECK(p.size() == 1);
  CHECK(p[0] == x);

  // unique tree geodesic o -> aab
  auto q = geodesic_segment(canon, {}, pres.parse_word("aab"));
  REQUIRE(q.size() == 4);
  CHECK(q[0] == Word{});
  CHECK(q[1] == pres.parse_word("a"));
  CHECK(q[2] == pres.parse_word("aa"));
  CHECK(q[3] == pres.parse_word("aab"));
}

TEST_CASE("geodesic segment length equals distance on random pairs") {
  auto pres = GroupPresentation::surface_genus2();
  Canonicalizer canon(pres);
  Rng rng(substream(20240601, "geodesic-length", 0));
  for (int trial = 0; trial < 100; ++trial) {
    Word x, y;
    for (int i = 0; i < 4; ++i) x.push_back(static_cast<Gen>(rng.below(8)));
    for (int i = 0; i < 5; ++i) y.push_back(static_cast<Gen>(rng.below(8)));
    auto p = geodesic_segment(canon, x, y);
    CHECK(static_cast<int>(p.size()) - 1 == canon.distance(x, y));
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      CHECK(canon.distance(p[i], p[i + 1]) == 1);
  }
}

TEST_CASE("free rays run along a, b, a^-1 and tails separate at 2n") {
  auto pres = GroupPresentation::free_rank2();
  Canonicalizer canon(pres);
  auto ball = CayleyBall::build(canon, 6);
  auto rays = geodesic_rays(ball, canon, 6);
  CHECK(pres.generator_names()[rays[0].direction] == "a");
  CHECK(pres.generator_names()[rays[1].direction] == "b");
  CHECK(pres.generator_names()[rays[2].direction] == "A");
  for (int n = 1; n <= 6; ++n)
    CHECK(canon.distance(rays[0].vertices[n], rays[1].vertices[n]) == 2 * n);
}

TEST_CASE("ray length beyond ball radius is rejected") {
  auto pres = GroupPresentation::free_rank2();
  Canonicalizer canon(pres);
  auto ball = CayleyBall::build(canon, 3);
  CHECK_THROWS_AS(geodesic_rays(ball, canon, 4), std::invalid_argument);
}

TEST_CASE("surface rays diverge and tail separation is nondecreasing") {
  auto pres = GroupPresentation::surface_genus2();
  Canonicalizer canon(pres);
  auto ball = CayleyBall::build(canon, 5);
  auto rays = geodesic_rays(ball, canon, 5);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      int prev = 0;
      for (int n = 1; n <= 5; ++n) {
        int sep = canon.distance(rays[i].vertices[n], rays[j].vertices[n]);
        CHECK(sep >= prev);
        prev = sep;
      }
      CHECK(prev >= 5 / 2);
    }
}

TEST_CASE("sector partition on the free ball") {
  auto pres = GroupPresentation::free_rank2();
  Canonicalizer canon(pres);
  auto ball = CayleyBall::build(canon, 5);
  auto rays = geodesic_rays(ball, canon, 5);
  auto part = sector_partition(ball, rays);

  // ray vertices carry the on-gamma label
  for (const auto& ray : rays)
    for (const auto& w : ray.vertices)
      CHECK(part.label[*ball.find(w)] == SectorLabel::on_gamma);

  // partition property: counts sum to ball size, gamma has 3*5+1 vertices
  CHECK(part.counts[0] == 16);
  CHECK(part.counts[0] + part.counts[1] + part.counts[2] + part.counts[3] == ball.size());

  // first vertex off gamma_1 toward gamma_2: a then b lands in S12
  CHECK(part.label[*ball.find(pres.parse_word("ab"))] == SectorLabel::s12);
  // the B-subtree is the sector between gamma_3 (A-ray) and gamma_1 (a-ray)
  CHECK(part.label[*ball.find(pres.parse_word("B"))] == SectorLabel::s31);
  CHECK(part.label[*ball.find(pres.parse_word("bA"))] == SectorLabel::s23);
  // every sector nonempty at this radius
  for (int s = 1; s <= 3; ++s) CHECK(part.counts[s] > 0);
}

TEST_CASE("sector partition on the surface ball") {
  auto pres = GroupPresentation::surface_genus2();
  Canonicalizer canon(pres);
  auto ball = CayleyBall::build(canon, 4);
  auto rays = geodesic_rays(ball, canon, 4);
  auto part = sector_partition(ball, rays);
  CHECK(part.counts[0] == 3 * 4 + 1);
  CHECK(part.counts[0] + part.counts[1] + part.counts[2] + part.counts[3] == ball.size());
  for (int s = 1; s <= 3; ++s) CHECK(part.counts[s] > 0);
}

TEST_CASE("sphere intersection counts") {
  auto pres = GroupPresentation::free_rank2();
  Canonicalizer canon(pres);
  // single ray as target
  std::vector<Word> ray;
  Word w;
  for (int p = 0; p <= 10; ++p) {
    ray.push_back(w);
    w = canon.multiply(w, pres.gen("a"));
  }
  Word x = pres.parse_word("aaaaa");  // on the ray, depth 5
  CHECK(sphere_intersection_count(canon, x, 0, ray) == 1);
  for (int n = 1; n <= 5; ++n) CHECK(sphere_intersection_count(canon, x, n, ray) == 2);
  Word off = pres.parse_word("b");
  CHECK(sphere_intersection_count(canon, off, 0, ray) == 0);
}
