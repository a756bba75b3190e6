#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zar/intmat.hpp"

namespace zar {

/// Element of a finitely generated abelian group: integer coordinates, free
/// coordinates first, torsion coordinate i reduced modulo the i-th invariant.
using AbelianElement = std::vector<Int>;

/// Total "encoding" order used for deterministic witness selection and
/// enumeration: lexicographic with each coordinate ranked 0 < 1 < -1 < 2 < ...
/// On reduced torsion coordinates this coincides with the value order.
bool canonical_less(const AbelianElement& a, const AbelianElement& b);

struct CanonicalElementLess {
  bool operator()(const AbelianElement& a, const AbelianElement& b) const {
    return canonical_less(a, b);
  }
};

/// Z^rank + Z/m1 + ... + Z/ms with 2 <= m1 | m2 | ... | ms.
class FgAbelianGroup {
 public:
  using Element = AbelianElement;

  FgAbelianGroup(int rank, std::vector<Int> invariants);

  int rank() const { return rank_; }
  const std::vector<Int>& invariants() const { return invariants_; }
  int torsion_count() const { return static_cast<int>(invariants_.size()); }
  int dim() const { return rank_ + torsion_count(); }

  /// Per-coordinate modulus, 0 on the free coordinates.
  const std::vector<Int>& moduli() const { return moduli_; }

  bool is_finite() const { return rank_ == 0; }
  Int order() const;     // finite only
  Int exponent() const;  // torsion exponent; 1 when torsion-free

  Element zero() const { return Element(dim()); }
  Element identity() const { return zero(); }
  Element reduce(Element raw) const;
  Element op(const Element& a, const Element& b) const;  // a + b
  Element add(const Element& a, const Element& b) const { return op(a, b); }
  Element inverse(const Element& a) const;               // -a
  Element sub(const Element& a, const Element& b) const;
  Element scale(const Int& k, const Element& a) const;

  bool is_element(const Element& a) const;
  bool is_abelian() const { return true; }

  std::vector<Element> enumerate_elements() const;  // finite only

  /// "(a,b,...)"; bare integer when dim() == 1.
  std::string format_element(const Element& a) const;
  /// Accepts the format above, "e" for the identity, and unreduced
  /// coordinates (they are reduced modulo the invariants).
  std::optional<Element> parse_element(std::string_view token) const;

 private:
  int rank_;
  std::vector<Int> invariants_;
  std::vector<Int> moduli_;
};

/// Invariant-factor presentation of Z^rank + Z/n1 + ... + Z/nk for an
/// arbitrary modulus list (no divisibility requirement), with coordinate
/// maps between the product form and the chain form.
struct ChainPresentation {
  FgAbelianGroup group;
  int product_rank;
  std::vector<Int> product_moduli;
  IntMat to_mat;    // torsion block of the change of basis
  IntMat from_mat;  // its inverse

  AbelianElement to_chain(const AbelianElement& product_coords) const;
  AbelianElement from_chain(const AbelianElement& chain_coords) const;
};

ChainPresentation chain_presentation(int rank, std::vector<Int> moduli);

/// The subgroup generated by `gens` inside g, presented in invariant-factor
/// form. `embed` is an injective homomorphism from the presentation onto the
/// subgroup; `project` inverts it on its image and is empty elsewhere.
struct AbelianSubgroup {
  FgAbelianGroup ambient;
  FgAbelianGroup presentation;
  IntMat embed_mat;  // ambient.dim() x presentation.dim()

  AbelianElement embed(const AbelianElement& h) const;
  std::optional<AbelianElement> project(const AbelianElement& g) const;

  /// All subgroup elements in ambient coordinates (finite presentations).
  std::vector<AbelianElement> enumerate_in_ambient() const;
};

AbelianSubgroup subgroup_coordinates(const FgAbelianGroup& g,
                                     const std::vector<AbelianElement>& gens);

/// Staged closure of a generating set under +/- with a stage budget; in a
/// finite group this is the full subgroup, otherwise `stabilized` reports
/// whether a fixed point was reached within `fuel` stages.
struct AbelianClosure {
  std::vector<AbelianElement> elements;  // canonically sorted
  bool stabilized = false;
  int stages = 0;
};

AbelianClosure subgroup_generated(const FgAbelianGroup& g,
                                  const std::vector<AbelianElement>& gens, int fuel);

}  // namespace zar
