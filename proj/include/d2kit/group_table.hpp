#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "d2kit/presentation.hpp"
#include "d2kit/word.hpp"

namespace d2kit {

using ElementIndex = std::uint32_t;

/// A finite group given by its full multiplication table.
///
/// Element 0 is the identity. `word(g)` is a representative word in the
/// source presentation's generators. Construction validates the group axioms
/// (associativity exhaustively up to order 64, on 1000 seeded random triples
/// above), that every relator evaluates to the identity, and that the
/// generator images generate everything; violations throw std::invalid_argument.
class FiniteGroupTable {
 public:
  FiniteGroupTable(GroupPresentation presentation, std::vector<std::vector<ElementIndex>> product,
                   std::vector<ElementIndex> generator_images, std::vector<GroupWord> element_words);

  std::size_t order() const noexcept { return product_.size(); }
  static constexpr ElementIndex identity() noexcept { return 0; }

  ElementIndex multiply(ElementIndex a, ElementIndex b) const { return product_[a][b]; }
  ElementIndex inverse(ElementIndex a) const { return inverse_[a]; }
  ElementIndex generator_image(std::size_t i) const { return generator_images_.at(i); }

  const GroupPresentation& presentation() const noexcept { return presentation_; }
  const std::vector<std::vector<ElementIndex>>& product_table() const noexcept { return product_; }
  const std::vector<ElementIndex>& generator_images() const noexcept { return generator_images_; }
  const GroupWord& word(ElementIndex g) const { return element_words_.at(g); }
  const std::vector<GroupWord>& element_words() const noexcept { return element_words_; }

  /// Multiplicative order of a single element.
  std::size_t element_order(ElementIndex g) const;

  /// Same multiplication table and generator images.
  bool same_group(const FiniteGroupTable& other) const;

 private:
  GroupPresentation presentation_;
  std::vector<std::vector<ElementIndex>> product_;
  std::vector<ElementIndex> inverse_;
  std::vector<ElementIndex> generator_images_;
  std::vector<GroupWord> element_words_;
};

using GroupHandle = std::shared_ptr<const FiniteGroupTable>;

inline constexpr std::size_t kDefaultMaxCosets = 4096;

/// HLT coset enumeration over the trivial subgroup. Live cosets are
/// renumbered in breadth-first order over the columns x0, x0^-1, x1, ...,
/// so the output depends only on the group and generator order.
/// Throws EnumerationExhausted when more than `max_cosets` cosets would be
/// allocated.
FiniteGroupTable todd_coxeter(const GroupPresentation& p, std::size_t max_cosets = kDefaultMaxCosets);

/// Product of generator images in order. Letters must be in range.
ElementIndex evaluate_word(const FiniteGroupTable& t, const GroupWord& w);

/// Searches for an isomorphism `from -> to` by trying generator images of
/// matching element order. Returns the element map, or nullopt.
std::optional<std::vector<ElementIndex>> find_isomorphism(const FiniteGroupTable& from,
                                                          const FiniteGroupTable& to,
                                                          std::size_t max_attempts = 1'000'000);

}  // namespace d2kit
