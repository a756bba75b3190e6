#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "zar/abelian.hpp"
#include "zar/finite_group.hpp"

namespace zar {

/// Finitely supported element of a direct sum: sorted (index, value) pairs,
/// identity values omitted. Values are factor elements.
struct DirectSumElement {
  using Value = std::variant<int, AbelianElement>;
  std::vector<std::pair<std::size_t, Value>> support;

  bool is_identity() const { return support.empty(); }
  std::vector<std::size_t> support_indices() const;

  auto operator<=>(const DirectSumElement&) const = default;
};

/// Direct sum over a finite index list, or over the index set N with one
/// uniform factor repeated everywhere.
class DirectSumGroup {
 public:
  using Factor = std::variant<FiniteGroup, FgAbelianGroup>;
  using Element = DirectSumElement;

  static DirectSumGroup bounded(std::vector<Factor> factors);
  static DirectSumGroup unbounded(Factor uniform);

  bool is_bounded() const { return uniform_ == nullptr; }
  std::size_t factor_count() const;  // bounded only
  const Factor& factor(std::size_t i) const;

  bool all_factors_abelian() const;
  bool is_finite() const;  // bounded with finite factors

  Element identity() const { return {}; }
  Element op(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const;
  bool is_element(const Element& a) const;

  std::vector<Element> enumerate_elements() const;  // finite only

  /// Single-index embedding i -> value.
  Element atom(std::size_t i, DirectSumElement::Value value) const;

  std::string format_element(const Element& a) const;

 private:
  std::vector<Factor> factors_;
  std::shared_ptr<Factor> uniform_;
};

/// Staged closure (fuel = stage budget); stabilized is definitive in finite
/// windows and best-effort otherwise.
struct DirectSumClosure {
  std::vector<DirectSumElement> elements;
  bool stabilized = false;
  int stages = 0;
};

DirectSumClosure subgroup_generated(const DirectSumGroup& g,
                                    const std::vector<DirectSumElement>& gens, int fuel);

/// H_J = <gens> n (direct sum over J): close the generators, then keep the
/// elements supported inside J. Partial when the closure did not stabilize.
DirectSumClosure summand_intersection(const DirectSumGroup& g,
                                      const std::vector<DirectSumElement>& gens,
                                      const std::set<std::size_t>& j_indices, int fuel);

/// Window presentation: the factors with index < width, all abelian, as one
/// FgAbelianGroup in invariant-factor form.
struct DirectSumWindow {
  std::size_t width;
  ChainPresentation chain;

  const FgAbelianGroup& group() const { return chain.group; }
  AbelianElement to_window(const DirectSumElement& x) const;
  DirectSumElement from_window(const AbelianElement& x) const;

  // Product-form bookkeeping: coordinate ranges per factor index.
  std::vector<int> factor_offset;  // product-form offset of each factor
  std::vector<int> factor_dim;
};

DirectSumWindow make_window(const DirectSumGroup& g, std::size_t width);

}  // namespace zar
