#include "brw/geometry.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace brw {

std::vector<Word> geodesic_segment(const Canonicalizer& canon, const Word& x, const Word& y) {
  std::vector<Word> path;
  Word cur = canon.canonical(x);
  const Word target = canon.canonical(y);
  path.push_back(cur);
  int d = canon.distance(cur, target);
  const int ngen = canon.presentation().generator_count();
  while (d > 0) {
    bool stepped = false;
    for (int g = 0; g < ngen && !stepped; ++g) {
      Word next = canon.multiply(cur, static_cast<Gen>(g));
      if (canon.distance(next, target) == d - 1) {
        cur = std::move(next);
        path.push_back(cur);
        --d;
        stepped = true;
      }
    }
    if (!stepped) throw std::logic_error("geodesic step not found; metric inconsistency");
  }
  return path;
}

std::array<GeodesicRay, 3> geodesic_rays(const CayleyBall& ball, const Canonicalizer& canon,
                                         int length) {
  const GroupPresentation& pres = ball.presentation();
  if (length > ball.radius())
    throw std::invalid_argument("requested ray length exceeds the ball radius");
  if (length < 1) throw std::invalid_argument("ray length must be positive");
  if (!pres.has_planar_order())
    throw std::invalid_argument("preset has no planar order; rays need rotation data");

  const auto& order = pres.planar_order();
  const int k = static_cast<int>(order.size());
  std::array<Gen, 3> dirs{order[0], order[k / 3], order[(2 * k) / 3]};

  std::array<GeodesicRay, 3> rays;
  for (int i = 0; i < 3; ++i) {
    rays[i].direction = dirs[i];
    Word w;
    rays[i].vertices.push_back(w);
    for (int p = 1; p <= length; ++p) {
      w = canon.multiply(w, dirs[i]);
      if (static_cast<int>(w.size()) != p)
        throw std::logic_error("generator power is not geodesic; preset unsuitable for rays");
      rays[i].vertices.push_back(w);
    }
  }

  // divergence certificate: tail separation at least half the ray length
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      int sep = canon.distance(rays[i].vertices.back(), rays[j].vertices.back());
      if (sep < length / 2)
        throw std::runtime_error("ball too small to certify ray divergence");
    }
  return rays;
}

namespace {

// slot s strictly inside the cyclic forward arc (from, to)
bool slot_in_arc(int s, int from, int to) {
  if (from < to) return s > from && s < to;
  return s > from || s < to;
}

}  // namespace

SectorPartition sector_partition(const CayleyBall& ball, const std::array<GeodesicRay, 3>& rays) {
  const GroupPresentation& pres = ball.presentation();
  if (!pres.has_planar_order()) throw std::invalid_argument("presentation has no planar order");
  const int k = pres.generator_count();
  const int ngen = k;

  SectorPartition part;
  part.label.assign(ball.size(), SectorLabel::on_gamma);
  std::vector<std::uint8_t> on_ray(ball.size(), 0);  // bitmask of rays through a vertex

  for (int i = 0; i < 3; ++i) {
    for (std::size_t p = 0; p < rays[i].vertices.size(); ++p) {
      auto v = ball.find(rays[i].vertices[p]);
      if (!v) throw std::invalid_argument("ray vertex outside the ball");
      if (p > 0 && (on_ray[*v] & ~(1u << i)))
        throw std::invalid_argument("overlapping rays rejected");
      on_ray[*v] |= (1u << i);
    }
  }

  // forward side of ray i (counterclockwise from its outgoing slot) is the
  // sector between ray i and ray i+1; backward side is between ray i-1 and i
  const SectorLabel fwd[3] = {SectorLabel::s12, SectorLabel::s23, SectorLabel::s31};
  const SectorLabel bwd[3] = {SectorLabel::s31, SectorLabel::s12, SectorLabel::s23};

  std::array<int, 3> ray_slot{};
  for (int i = 0; i < 3; ++i) ray_slot[i] = pres.planar_slot(rays[i].direction);

  auto side_at_ray_vertex = [&](int ray, Gen toward) -> SectorLabel {
    int s = pres.planar_slot(toward);
    int out = pres.planar_slot(rays[ray].direction);
    int in = pres.planar_slot(inverse_gen(rays[ray].direction));
    return slot_in_arc(s, out, in) ? fwd[ray] : bwd[ray];
  };
  auto side_at_root = [&](Gen toward) -> SectorLabel {
    int s = pres.planar_slot(toward);
    if (slot_in_arc(s, ray_slot[0], ray_slot[1])) return SectorLabel::s12;
    if (slot_in_arc(s, ray_slot[1], ray_slot[2])) return SectorLabel::s23;
    return SectorLabel::s31;
  };

  // components of ball \ gamma, labelled by their attachment edges; every
  // attachment of a component must agree
  std::vector<std::uint8_t> assigned(ball.size(), 0);
  for (std::uint32_t seed = 0; seed < ball.size(); ++seed) {
    if (on_ray[seed] || assigned[seed]) continue;
    std::deque<std::uint32_t> q{seed};
    std::vector<std::uint32_t> comp;
    assigned[seed] = 1;
    bool have_label = false;
    SectorLabel label{};
    while (!q.empty()) {
      std::uint32_t v = q.front();
      q.pop_front();
      comp.push_back(v);
      for (int g = 0; g < ngen; ++g) {
        std::uint32_t u = ball.neighbor(v, static_cast<Gen>(g));
        if (u == k_no_vertex) continue;
        if (on_ray[u]) {
          // edge v -> u via g; at u the edge back toward v uses inverse(g)
          Gen toward_v = inverse_gen(static_cast<Gen>(g));
          SectorLabel l;
          if (u == ball.root()) {
            l = side_at_root(toward_v);
          } else {
            int ray = on_ray[u] & 1 ? 0 : (on_ray[u] & 2 ? 1 : 2);
            l = side_at_ray_vertex(ray, toward_v);
          }
          if (!have_label) {
            label = l;
            have_label = true;
          } else if (label != l) {
            throw std::logic_error("sector attachment disagreement; orientation data inconsistent");
          }
        } else if (!assigned[u]) {
          assigned[u] = 1;
          q.push_back(u);
        }
      }
    }
    if (!have_label) throw std::logic_error("component without gamma attachment");
    for (std::uint32_t v : comp) part.label[v] = label;
  }

  for (std::uint32_t v = 0; v < ball.size(); ++v)
    ++part.counts[static_cast<int>(part.label[v])];
  return part;
}

int sphere_intersection_count(const Canonicalizer& canon, const Word& x, int n,
                              std::span<const Word> target) {
  int count = 0;
  for (const Word& t : target)
    if (canon.distance(x, t) == n) ++count;
  return count;
}

}  // namespace brw
