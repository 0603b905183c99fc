#include "brw/folding.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace brw {

namespace {

struct Builder {
  const GroupPresentation& pres;
  int ngen;
  std::vector<Word> rotations;

  std::vector<std::uint32_t> adj;   // nv * ngen, k_no_vertex = absent
  std::vector<std::uint16_t> dist;
  std::vector<std::uint32_t> uf;
  std::deque<std::pair<std::uint32_t, std::uint32_t>> merges;
  std::uint64_t max_vertices;

  explicit Builder(const GroupPresentation& p, std::uint64_t cap)
      : pres(p), ngen(p.generator_count()), max_vertices(cap) {
    std::set<Word> seen;
    for (const Word& r : pres.relators())
      for (int invert = 0; invert < 2; ++invert) {
        Word base = invert ? inverse_word(r) : r;
        for (std::size_t i = 0; i < base.size(); ++i) {
          Word rot(base.begin() + i, base.end());
          rot.insert(rot.end(), base.begin(), base.begin() + i);
          if (seen.insert(rot).second) rotations.push_back(rot);
        }
      }
    new_vertex(0);
  }

  std::uint32_t nv() const { return static_cast<std::uint32_t>(dist.size()); }

  std::uint32_t new_vertex(int d) {
    adj.insert(adj.end(), ngen, k_no_vertex);
    dist.push_back(static_cast<std::uint16_t>(d));
    uf.push_back(nv() - 1);
    if (nv() > max_vertices) throw std::runtime_error("folding vertex cap exceeded");
    return nv() - 1;
  }

  std::uint32_t find(std::uint32_t x) {
    while (uf[x] != x) {
      uf[x] = uf[uf[x]];
      x = uf[x];
    }
    return x;
  }

  std::uint32_t& slot(std::uint32_t v, Gen g) { return adj[static_cast<std::size_t>(v) * ngen + g]; }

  void set_edge(std::uint32_t u, std::uint32_t v, Gen g) {
    u = find(u);
    v = find(v);
    std::uint32_t eu = slot(u, g);
    if (eu != k_no_vertex && find(eu) != v)
      merges.emplace_back(find(eu), v);
    else
      slot(u, g) = v;
    std::uint32_t ev = slot(v, inverse_gen(g));
    if (ev != k_no_vertex && find(ev) != u)
      merges.emplace_back(find(ev), u);
    else
      slot(v, inverse_gen(g)) = u;
  }

  void process_merges() {
    while (!merges.empty()) {
      auto [x, y] = merges.front();
      merges.pop_front();
      x = find(x);
      y = find(y);
      if (x == y) continue;
      if (dist[x] > dist[y]) std::swap(x, y);
      uf[y] = x;
      for (int g = 0; g < ngen; ++g) {
        std::uint32_t w = slot(y, static_cast<Gen>(g));
        if (w == k_no_vertex) continue;
        w = find(w);
        std::uint32_t& xs = slot(x, static_cast<Gen>(g));
        if (xs == k_no_vertex) {
          xs = w;
          std::uint32_t& back = slot(w, inverse_gen(static_cast<Gen>(g)));
          if (back == k_no_vertex || find(back) == y) back = x;
        } else {
          if (find(xs) != w) merges.emplace_back(find(xs), w);
          std::uint32_t& back = slot(w, inverse_gen(static_cast<Gen>(g)));
          if (back != k_no_vertex && find(back) == y) back = x;
        }
      }
    }
  }

  // Trace every relator rotation from every live vertex up to max_dist.
  // Full loop landing elsewhere -> merge; one missing edge with both
  // endpoints known -> deduce it. Repeats until nothing changes.
  bool deduction_pass(int max_dist) {
    bool changed = false;
    for (std::uint32_t v0 = 0; v0 < nv(); ++v0) {
      if (find(v0) != v0 || dist[v0] > max_dist) continue;
      for (const Word& rot : rotations) {
        std::uint32_t cur = find(v0);
        int miss = -1;
        std::uint32_t before_gap = k_no_vertex;
        bool abandon = false;
        for (std::size_t i = 0; i < rot.size(); ++i) {
          std::uint32_t nx = slot(cur, rot[i]);
          if (nx == k_no_vertex) {
            miss = static_cast<int>(i);
            before_gap = cur;
            break;
          }
          cur = find(nx);
        }
        if (abandon) continue;
        if (miss < 0) {
          if (cur != find(v0)) {
            merges.emplace_back(cur, find(v0));
            process_merges();
            changed = true;
          }
        } else {
          // walk backwards from v0 to the far side of the gap
          std::uint32_t back = find(v0);
          bool ok = true;
          for (int j = static_cast<int>(rot.size()) - 1; j > miss; --j) {
            std::uint32_t nx = slot(back, inverse_gen(rot[j]));
            if (nx == k_no_vertex) {
              ok = false;
              break;
            }
            back = find(nx);
          }
          if (ok) {
            std::uint32_t u = find(before_gap);
            std::uint32_t w = back;
            std::uint32_t existing = slot(u, rot[miss]);
            if (existing == k_no_vertex || find(existing) != w) {
              set_edge(u, w, rot[miss]);
              process_merges();
              changed = true;
            }
          }
        }
      }
    }
    return changed;
  }

  void recompute_distances() {
    std::uint32_t r = find(0);
    std::vector<std::uint16_t> nd(nv(), 0xffff);
    std::deque<std::uint32_t> q{r};
    nd[r] = 0;
    while (!q.empty()) {
      std::uint32_t u = q.front();
      q.pop_front();
      for (int g = 0; g < ngen; ++g) {
        std::uint32_t w = slot(u, static_cast<Gen>(g));
        if (w == k_no_vertex) continue;
        w = find(w);
        if (nd[w] == 0xffff) {
          nd[w] = nd[u] + 1;
          q.push_back(w);
        }
      }
    }
    for (std::uint32_t v = 0; v < nv(); ++v)
      if (find(v) == v && nd[v] != 0xffff) dist[v] = nd[v];
  }

  void run(int horizon) {
    for (int level = 0; level < horizon; ++level) {
      for (std::uint32_t v = 0; v < nv(); ++v) {
        if (find(v) != v || dist[v] != level) continue;
        for (int g = 0; g < ngen; ++g) {
          if (slot(v, static_cast<Gen>(g)) == k_no_vertex) {
            std::uint32_t u = new_vertex(level + 1);
            set_edge(v, u, static_cast<Gen>(g));
            process_merges();
          }
        }
      }
      while (deduction_pass(level + 2)) {
      }
      recompute_distances();
    }
  }

  std::vector<std::uint64_t> sphere_sizes(int radius) {
    std::vector<std::uint64_t> s(radius + 1, 0);
    for (std::uint32_t v = 0; v < nv(); ++v)
      if (find(v) == v && dist[v] <= radius) ++s[dist[v]];
    return s;
  }
};

}  // namespace

std::uint64_t FoldedBall::ball_size() const {
  std::uint64_t t = 0;
  for (auto s : spheres_) t += s;
  return t;
}

int FoldedBall::degree(std::uint32_t v) const {
  int d = 0;
  for (int g = 0; g < ngen_; ++g)
    if (neighbor(v, static_cast<Gen>(g)) != k_no_vertex) ++d;
  return d;
}

FoldedBall FoldedBall::build(const GroupPresentation& pres, int radius, int initial_margin,
                             std::uint64_t max_vertices) {
  if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
  std::vector<std::uint64_t> prev;
  for (int margin = initial_margin;; ++margin) {
    Builder b(pres, max_vertices);
    b.run(radius + margin);
    std::vector<std::uint64_t> spheres = b.sphere_sizes(radius);
    if (!prev.empty() && spheres == prev) {
      FoldedBall fb;
      fb.radius_ = radius;
      fb.horizon_ = radius + margin;
      fb.ngen_ = b.ngen;
      fb.spheres_ = spheres;
      // compacted copy of the live vertices
      std::vector<std::uint32_t> remap(b.nv(), k_no_vertex);
      std::uint32_t next = 0;
      for (std::uint32_t v = 0; v < b.nv(); ++v)
        if (b.find(v) == v) remap[v] = next++;
      fb.adj_.assign(static_cast<std::size_t>(next) * b.ngen, k_no_vertex);
      fb.dist_.resize(next);
      for (std::uint32_t v = 0; v < b.nv(); ++v) {
        if (b.find(v) != v) continue;
        std::uint32_t rv = remap[v];
        fb.dist_[rv] = b.dist[v];
        for (int g = 0; g < b.ngen; ++g) {
          std::uint32_t w = b.slot(v, static_cast<Gen>(g));
          if (w != k_no_vertex)
            fb.adj_[static_cast<std::size_t>(rv) * b.ngen + g] = remap[b.find(w)];
        }
      }
      return fb;
    }
    prev = std::move(spheres);
    if (margin > initial_margin + 6)
      throw std::runtime_error("folded ball failed to stabilize");
  }
}

}  // namespace brw
