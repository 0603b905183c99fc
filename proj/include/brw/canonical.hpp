#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "brw/presentation.hpp"

namespace brw {

/// Canonical representative of a group element: the shortlex-least geodesic
/// word. Equality of GroupElement is equality in the group (for the shipped
/// presets; custom presentations rely on the C'(1/6) precondition).
struct GroupElement {
  Word normal_form;

  bool is_identity() const { return normal_form.empty(); }
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// Word-problem engine.
///
/// reduce() runs free reduction plus Dehn's algorithm: any subword matching
/// more than half of a cyclic rotation of a relator (or inverse) is replaced
/// by the inverse of the complement, which strictly shortens the word. For
/// the shipped presets a fully reduced word is geodesic.
///
/// canonical() additionally closes the geodesic representative set under
/// half-relator swaps (replace an exact relator half by the other half's
/// inverse, a length-preserving move) and returns the shortlex-least member.
/// If a swap ever produces a shorter word the whole reduction restarts, so
/// the result is geodesic and canonical simultaneously.
class Canonicalizer {
 public:
  explicit Canonicalizer(const GroupPresentation& pres);

  const GroupPresentation& presentation() const { return *pres_; }

  Word reduce(Word w) const;
  Word canonical(Word w) const;
  GroupElement element(const Word& w) const { return GroupElement{canonical(w)}; }

  bool is_identity(const Word& w) const { return reduce(w).empty(); }

  /// canonical(a * b)
  Word multiply(std::span<const Gen> a, std::span<const Gen> b) const;
  /// canonical(a * g)
  Word multiply(std::span<const Gen> a, Gen g) const;

  /// Word-metric distance d(a, b) = |canonical(a^-1 b)|. Exact for geodesic
  /// normal forms, i.e. for the shipped presets.
  int distance(std::span<const Gen> a, std::span<const Gen> b) const;

  std::size_t closure_cap() const { return closure_cap_; }

 private:
  struct Rotation {
    Word word;        // full cyclic rotation of a relator or its inverse
    int half;         // floor(len/2)
  };

  // Longest prefix of any rotation matching w at position i with length > half
  // triggers a Dehn replacement. Rotations indexed by first letter for speed.
  bool dehn_step(Word& w) const;
  void half_swaps(const Word& w, std::vector<Word>& out) const;

  const GroupPresentation* pres_;
  std::vector<Rotation> rotations_;
  std::vector<std::vector<int>> rot_by_first_;  // generator -> rotation ids
  std::size_t closure_cap_ = 4096;
};

}  // namespace brw
