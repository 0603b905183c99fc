#include "brw/ball.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <stdexcept>

namespace brw {

namespace {

std::uint64_t hash_word(std::span<const Gen> w) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (Gen g : w) {
    h ^= g;
    h *= 0x100000001b3ull;
  }
  // finalize; raw FNV clusters on short keys
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdull;
  h ^= h >> 33;
  return h;
}

}  // namespace

std::uint32_t CayleyBall::lookup_slot(std::span<const Gen> w) const {
  std::uint64_t h = hash_word(w) & table_mask_;
  for (;;) {
    std::uint32_t e = table_[h];
    if (e == 0) return static_cast<std::uint32_t>(h);
    std::uint32_t v = e - 1;
    auto stored = word(v);
    if (stored.size() == w.size() && std::equal(stored.begin(), stored.end(), w.begin()))
      return static_cast<std::uint32_t>(h);
    h = (h + 1) & table_mask_;
  }
}

std::optional<std::uint32_t> CayleyBall::find(std::span<const Gen> canonical_word) const {
  std::uint32_t slot = lookup_slot(canonical_word);
  if (table_[slot] == 0) return std::nullopt;
  return table_[slot] - 1;
}

int CayleyBall::degree(std::uint32_t v) const {
  int d = 0;
  for (int g = 0; g < ngen_; ++g)
    if (neighbor(v, static_cast<Gen>(g)) != k_no_vertex) ++d;
  return d;
}

CayleyBall CayleyBall::build(const Canonicalizer& canon, int radius,
                             std::uint64_t max_vertices) {
  if (radius < 0) throw std::invalid_argument("ball radius must be nonnegative");
  const GroupPresentation& pres = canon.presentation();

  CayleyBall ball;
  ball.pres_ = &pres;
  ball.radius_ = radius;
  ball.ngen_ = pres.generator_count();

  // generous initial table; rehash doubles as needed
  std::uint64_t cap = 1u << 16;
  ball.table_.assign(cap, 0);
  ball.table_mask_ = cap - 1;

  auto insert_prehashed = [&](std::span<const Gen> w) -> std::pair<std::uint32_t, bool> {
    // grow at 60% load
    std::uint32_t nv = ball.size();
    if ((static_cast<std::uint64_t>(nv) + 1) * 5 > ball.table_.size() * 3) {
      std::uint64_t ncap = ball.table_.size() * 2;
      std::vector<std::uint32_t> nt(ncap, 0);
      std::uint64_t nmask = ncap - 1;
      for (std::uint32_t v = 0; v < nv; ++v) {
        std::uint64_t h = hash_word(ball.word(v)) & nmask;
        while (nt[h] != 0) h = (h + 1) & nmask;
        nt[h] = v + 1;
      }
      ball.table_ = std::move(nt);
      ball.table_mask_ = nmask;
    }
    std::uint32_t slot = ball.lookup_slot(w);
    if (ball.table_[slot] != 0) return {ball.table_[slot] - 1, false};
    std::uint32_t v = ball.size();
    ball.letters_.insert(ball.letters_.end(), w.begin(), w.end());
    ball.word_begin_.push_back(static_cast<std::uint32_t>(ball.letters_.size()));
    ball.table_[slot] = v + 1;
    return {v, true};
  };

  ball.word_begin_ = {0, 0};  // identity = empty word
  ball.word_begin_.pop_back();
  ball.word_begin_.push_back(0);
  {
    std::uint32_t slot = ball.lookup_slot({});
    ball.table_[slot] = 1;
  }
  ball.dist_.push_back(0);
  ball.sphere_begin_ = {0, 1};

  const int ngen = ball.ngen_;
  std::vector<Word> cand;  // canonicalized candidates for a frontier chunk

  for (int level = 0; level < radius; ++level) {
    std::uint32_t lo = ball.sphere_begin_[level];
    std::uint32_t hi = ball.sphere_begin_[level + 1];
    const std::uint32_t chunk = 16384;
    for (std::uint32_t base = lo; base < hi; base += chunk) {
      std::uint32_t top = std::min(hi, base + chunk);
      std::size_t n = static_cast<std::size_t>(top - base) * ngen;
      cand.assign(n, Word{});
#pragma omp parallel for schedule(dynamic, 64)
      for (long long i = 0; i < static_cast<long long>(n); ++i) {
        std::uint32_t v = base + static_cast<std::uint32_t>(i / ngen);
        Gen g = static_cast<Gen>(i % ngen);
        cand[i] = canon.multiply(ball.word(v), g);
      }
      // deterministic serial interning in (vertex, generator) order
      for (std::size_t i = 0; i < n; ++i) {
        const Word& w = cand[i];
        if (static_cast<int>(w.size()) > level + 1) continue;  // outside this level
        if (static_cast<int>(w.size()) < level + 1) continue;  // already known (shorter)
        auto [u, fresh] = insert_prehashed(w);
        if (fresh) {
          ball.dist_.push_back(static_cast<std::uint16_t>(level + 1));
          if (ball.size() > max_vertices)
            throw std::runtime_error("ball size cap exceeded at radius " + std::to_string(level + 1));
        }
      }
    }
    ball.sphere_begin_.push_back(ball.size());
  }

  // adjacency: every in-ball vertex, every generator, including edges between
  // two outermost-sphere vertices
  const std::uint32_t nv = ball.size();
  ball.adj_.assign(static_cast<std::size_t>(nv) * ngen, k_no_vertex);
  const std::uint32_t chunk = 16384;
  for (std::uint32_t base = 0; base < nv; base += chunk) {
    std::uint32_t top = std::min(nv, base + chunk);
    std::size_t n = static_cast<std::size_t>(top - base) * ngen;
    cand.assign(n, Word{});
#pragma omp parallel for schedule(dynamic, 64)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      std::uint32_t v = base + static_cast<std::uint32_t>(i / ngen);
      Gen g = static_cast<Gen>(i % ngen);
      cand[i] = canon.multiply(ball.word(v), g);
    }
    for (std::size_t i = 0; i < n; ++i) {
      std::uint32_t v = base + static_cast<std::uint32_t>(i / ngen);
      if (auto u = ball.find(cand[i])) {
        ball.adj_[static_cast<std::size_t>(v) * ngen + (i % ngen)] = *u;
      } else if (static_cast<int>(cand[i].size()) <= radius) {
        // a canonical word of length <= radius must be a ball vertex;
        // a miss means two normal forms for one element
        throw std::logic_error("canonical form inconsistency detected during ball construction");
      }
    }
  }
  return ball;
}

void CayleyBall::write_adjacency_csv(std::ostream& os) const {
  os << "vertex_id,generator,neighbor_id\n";
  for (std::uint32_t v = 0; v < size(); ++v)
    for (int g = 0; g < ngen_; ++g) {
      std::uint32_t u = neighbor(v, static_cast<Gen>(g));
      if (u != k_no_vertex)
        os << v << ',' << pres_->generator_names()[g] << ',' << u << '\n';
    }
}

}  // namespace brw
