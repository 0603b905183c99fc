#include "brw/canonical.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace brw {

Canonicalizer::Canonicalizer(const GroupPresentation& pres) : pres_(&pres) {
  std::set<Word> seen;
  for (const Word& r : pres.relators()) {
    for (int invert = 0; invert < 2; ++invert) {
      Word base = invert ? inverse_word(r) : r;
      for (std::size_t i = 0; i < base.size(); ++i) {
        Word rot(base.begin() + i, base.end());
        rot.insert(rot.end(), base.begin(), base.begin() + i);
        if (seen.insert(rot).second)
          rotations_.push_back({rot, static_cast<int>(rot.size()) / 2});
      }
    }
  }
  rot_by_first_.resize(pres.generator_count());
  for (std::size_t k = 0; k < rotations_.size(); ++k)
    rot_by_first_[rotations_[k].word[0]].push_back(static_cast<int>(k));
}

bool Canonicalizer::dehn_step(Word& w) const {
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (int rid : rot_by_first_[w[i]]) {
      const Rotation& rot = rotations_[rid];
      const int len = static_cast<int>(rot.word.size());
      int k = 0;
      while (k < len && i + k < w.size() && w[i + k] == rot.word[k]) ++k;
      if (k > rot.half) {
        // w[i..i+k) equals the inverse of the rotation's tail
        Word tail(rot.word.begin() + k, rot.word.end());
        Word repl = inverse_word(tail);
        Word next(w.begin(), w.begin() + i);
        next.insert(next.end(), repl.begin(), repl.end());
        next.insert(next.end(), w.begin() + i + k, w.end());
        w = free_reduce(next);
        return true;
      }
    }
  }
  return false;
}

Word Canonicalizer::reduce(Word w) const {
  w = free_reduce(w);
  if (rotations_.empty()) return w;
  while (dehn_step(w)) {
  }
  return w;
}

void Canonicalizer::half_swaps(const Word& w, std::vector<Word>& out) const {
  out.clear();
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (int rid : rot_by_first_[w[i]]) {
      const Rotation& rot = rotations_[rid];
      if (rot.half * 2 != static_cast<int>(rot.word.size())) continue;  // odd relators have no equal halves
      if (i + rot.half > w.size()) continue;
      if (!std::equal(rot.word.begin(), rot.word.begin() + rot.half, w.begin() + i)) continue;
      Word tail(rot.word.begin() + rot.half, rot.word.end());
      Word repl = inverse_word(tail);
      Word next(w.begin(), w.begin() + i);
      next.insert(next.end(), repl.begin(), repl.end());
      next.insert(next.end(), w.begin() + i + rot.half, w.end());
      out.push_back(free_reduce(next));
    }
  }
}

Word Canonicalizer::canonical(Word w) const {
  w = reduce(std::move(w));
  if (rotations_.empty()) return w;

  // Closure of the geodesic class under half-relator swaps; shortlex minimum.
  // A swap that shortens the word means w was not geodesic after all: restart.
  std::set<Word> seen{w};
  std::deque<Word> queue{w};
  Word best = w;
  std::vector<Word> swaps;
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    half_swaps(cur, swaps);
    for (Word& v : swaps) {
      if (v.size() < cur.size()) return canonical(std::move(v));
      if (seen.insert(v).second) {
        if (shortlex_less(v, best)) best = v;
        queue.push_back(std::move(v));
        if (seen.size() > closure_cap_)
          throw std::runtime_error("canonicalization closure exceeded cap");
      }
    }
  }
  return best;
}

Word Canonicalizer::multiply(std::span<const Gen> a, std::span<const Gen> b) const {
  return canonical(concat(a, b));
}

Word Canonicalizer::multiply(std::span<const Gen> a, Gen g) const {
  Word w(a.begin(), a.end());
  w.push_back(g);
  return canonical(std::move(w));
}

int Canonicalizer::distance(std::span<const Gen> a, std::span<const Gen> b) const {
  Word d = multiply(inverse_word(a), b);
  return static_cast<int>(d.size());
}

}  // namespace brw
