#include "brw/presentation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace brw {

Word free_reduce(std::span<const Gen> w) {
  Word out;
  out.reserve(w.size());
  for (Gen g : w) {
    if (!out.empty() && out.back() == inverse_gen(g))
      out.pop_back();
    else
      out.push_back(g);
  }
  return out;
}

Word inverse_word(std::span<const Gen> w) {
  Word out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    out[i] = inverse_gen(w[w.size() - 1 - i]);
  return out;
}

Word concat(std::span<const Gen> a, std::span<const Gen> b) {
  Word out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace {

Word cyclic_reduce(Word w) {
  w = free_reduce(w);
  while (w.size() >= 2 && w.front() == inverse_gen(w.back())) {
    w.erase(w.begin());
    w.pop_back();
    w = free_reduce(w);
  }
  return w;
}

std::vector<Word> all_rotations(const std::vector<Word>& relators) {
  std::set<Word> seen;
  for (const Word& r : relators) {
    for (const Word* base : {&r, (const Word*)nullptr}) {
      Word b = base ? *base : inverse_word(r);
      for (std::size_t i = 0; i < b.size(); ++i) {
        Word rot(b.begin() + i, b.end());
        rot.insert(rot.end(), b.begin(), b.begin() + i);
        seen.insert(rot);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

std::string_view GroupPresentation::preset_name() const {
  switch (tag_) {
    case PresetTag::free_rank2: return "free_rank2";
    case PresetTag::surface_genus2: return "surface_genus2";
    default: return "custom";
  }
}

Gen GroupPresentation::gen(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<Gen>(i);
  throw std::invalid_argument("unknown generator symbol: " + std::string(name));
}

std::string GroupPresentation::word_string(std::span<const Gen> w) const {
  std::string s;
  for (Gen g : w) s += names_[g];
  return s;
}

Word GroupPresentation::parse_word(std::string_view s) const {
  Word w;
  for (char c : s) {
    if (c == ' ' || c == '*' || c == '.') continue;
    w.push_back(gen(std::string_view(&c, 1)));
  }
  return w;
}

int GroupPresentation::min_relator_length() const {
  int m = 0;
  for (const Word& r : relators_)
    m = (m == 0) ? static_cast<int>(r.size())
                 : std::min<int>(m, static_cast<int>(r.size()));
  return m;
}

int GroupPresentation::max_piece_length() const {
  if (relators_.empty()) return 0;
  std::vector<Word> rots = all_rotations(relators_);
  int best = 0;
  for (std::size_t i = 0; i < rots.size(); ++i) {
    for (std::size_t j = 0; j < rots.size(); ++j) {
      if (i == j) continue;
      int k = 0;
      int lim = static_cast<int>(std::min(rots[i].size(), rots[j].size()));
      while (k < lim && rots[i][k] == rots[j][k]) ++k;
      best = std::max(best, k);
    }
  }
  return best;
}

void GroupPresentation::finish_init() {
  if (names_.size() % 2 != 0 || names_.empty())
    throw std::invalid_argument("generator list must pair each symbol with its inverse");
  std::set<std::string> uniq(names_.begin(), names_.end());
  if (uniq.size() != names_.size())
    throw std::invalid_argument("duplicate generator symbol");
  for (Word& r : relators_) {
    r = cyclic_reduce(std::move(r));
    if (r.empty()) throw std::invalid_argument("relator reduces to the empty word");
  }
  if (!planar_order_.empty()) {
    if (planar_order_.size() != names_.size())
      throw std::invalid_argument("planar order must list every generator exactly once");
    std::set<Gen> slots(planar_order_.begin(), planar_order_.end());
    if (slots.size() != planar_order_.size())
      throw std::invalid_argument("planar order repeats a generator");
  }
  slot_of_.assign(names_.size(), -1);
  for (std::size_t i = 0; i < planar_order_.size(); ++i)
    slot_of_[planar_order_[i]] = static_cast<int>(i);
}

GroupPresentation GroupPresentation::free_rank2() {
  GroupPresentation p;
  p.tag_ = PresetTag::free_rank2;
  p.names_ = {"a", "A", "b", "B"};
  // A tree is planar; the constant rotation (a, b, a^-1, b^-1) gives the
  // sector machinery a consistent embedding on the calibration preset.
  p.planar_order_ = {0, 2, 1, 3};
  p.finish_init();
  return p;
}

GroupPresentation GroupPresentation::surface_genus2() {
  GroupPresentation p;
  p.tag_ = PresetTag::surface_genus2;
  p.names_ = {"a", "A", "b", "B", "c", "C", "d", "D"};
  // [a,b][c,d] = a b a^-1 b^-1 c d c^-1 d^-1; the {8,8} tessellation.
  p.relators_ = {Word{0, 2, 1, 3, 4, 6, 5, 7}};
  // Rotation system of the octagon tessellation, read off the vertex link:
  // consecutive relator letters (x, y) glue edge-ends x^-1 and y, and the
  // corners chain into the single cycle (a, B, A, b, c, D, C, d).
  p.planar_order_ = {0, 3, 1, 2, 4, 7, 5, 6};
  p.finish_init();
  return p;
}

GroupPresentation GroupPresentation::custom(std::vector<std::string> generator_names,
                                            std::vector<std::string> relator_words,
                                            std::vector<std::string> planar_order) {
  GroupPresentation p;
  p.tag_ = PresetTag::custom;
  p.names_ = std::move(generator_names);
  // inverse pairing sanity: name casing convention is not enforced, but the
  // list length must be even and index pairing (2k, 2k+1) is the contract
  p.slot_of_.assign(p.names_.size(), -1);
  for (const std::string& rw : relator_words) {
    Word w;
    for (char c : rw) {
      if (c == ' ') continue;
      bool found = false;
      for (std::size_t i = 0; i < p.names_.size(); ++i)
        if (p.names_[i].size() == 1 && p.names_[i][0] == c) {
          w.push_back(static_cast<Gen>(i));
          found = true;
          break;
        }
      if (!found) throw std::invalid_argument(std::string("unknown generator symbol: ") + c);
    }
    p.relators_.push_back(std::move(w));
  }
  for (const std::string& s : planar_order) {
    bool found = false;
    for (std::size_t i = 0; i < p.names_.size(); ++i)
      if (p.names_[i] == s) {
        p.planar_order_.push_back(static_cast<Gen>(i));
        found = true;
        break;
      }
    if (!found) throw std::invalid_argument("planar order names unknown generator: " + s);
  }
  p.finish_init();
  if (!p.relators_.empty()) {
    // C'(1/6): every piece strictly shorter than a sixth of its relator
    if (6 * p.max_piece_length() >= p.min_relator_length())
      throw std::invalid_argument("custom presentation fails the C'(1/6) small-cancellation check");
  }
  return p;
}

}  // namespace brw
