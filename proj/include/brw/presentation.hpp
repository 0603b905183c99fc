#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace brw {

// Generator index. Inverses are paired adjacently: inverse(g) == g ^ 1.
using Gen = std::uint8_t;
using Word = std::vector<Gen>;

constexpr std::uint32_t k_no_vertex = 0xffffffffu;

inline Gen inverse_gen(Gen g) { return static_cast<Gen>(g ^ 1u); }

Word free_reduce(std::span<const Gen> w);
Word inverse_word(std::span<const Gen> w);
Word concat(std::span<const Gen> a, std::span<const Gen> b);

/// Shortlex order: by length first, then lexicographically by generator index.
bool shortlex_less(const Word& a, const Word& b);

enum class PresetTag { free_rank2, surface_genus2, custom };

/// A finite presentation with symmetric generating set and optional planar
/// rotation data. Generator i and its formal inverse i^1 share a letter
/// (lower/upper case, e.g. "a"/"A"). Relators are stored freely and cyclically
/// reduced. Custom presentations must pass a metric small-cancellation C'(1/6)
/// piece check; the word problem layer relies on it.
class GroupPresentation {
 public:
  static GroupPresentation free_rank2();
  static GroupPresentation surface_genus2();
  static GroupPresentation custom(std::vector<std::string> generator_names,
                                  std::vector<std::string> relator_words,
                                  std::vector<std::string> planar_order);

  PresetTag tag() const { return tag_; }
  std::string_view preset_name() const;
  int generator_count() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& generator_names() const { return names_; }
  const std::vector<Word>& relators() const { return relators_; }

  bool has_planar_order() const { return !planar_order_.empty(); }
  // Cyclic order of the generator slots around every vertex, same at each
  // vertex; a constant rotation word orients the whole complex.
  const std::vector<Gen>& planar_order() const { return planar_order_; }
  int planar_slot(Gen g) const { return slot_of_[g]; }

  Gen gen(std::string_view name) const;
  std::string word_string(std::span<const Gen> w) const;
  Word parse_word(std::string_view s) const;

  /// Longest piece (common subword of two distinct cyclic rotations of
  /// relators or their inverses); 0 when there are no relators.
  int max_piece_length() const;
  int min_relator_length() const;

 private:
  GroupPresentation() = default;
  void finish_init();

  PresetTag tag_ = PresetTag::custom;
  std::vector<std::string> names_;
  std::vector<Word> relators_;
  std::vector<Gen> planar_order_;
  std::vector<int> slot_of_;
};

}  // namespace brw
