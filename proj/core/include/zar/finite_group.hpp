#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace zar {

/// A finite group given by a validated Cayley table. Construction checks
/// that the table really is a group law (rows/columns are permutations,
/// associativity over all triples, identity and inverses consistent), so
/// everything downstream may assume a genuine group.
class FiniteGroup {
 public:
  using Element = int;

  static FiniteGroup from_table(std::vector<std::vector<int>> table,
                                std::vector<std::string> labels = {});

  // Catalog builders.
  static FiniteGroup cyclic(int n);                   // Z/n, labels "0".."n-1"
  static FiniteGroup dihedral(int n);                 // order 2n, labels e,r,..,s,rs,..
  static FiniteGroup symmetric(int n);                // n <= 5, cycle-notation labels
  static FiniteGroup quaternion();                    // Q8
  static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b);
  /// N abelian, f an automorphism table of N with f(f(x)) == x. Elements are
  /// pairs (n, b) with law (n,b)(n',b') = (n f^b(n'), b xor b').
  static FiniteGroup semidirect_involution(const FiniteGroup& n, const std::vector<int>& f);

  int order() const { return order_; }
  int identity() const { return identity_; }
  int op(int g, int h) const;
  int inverse(int g) const;
  bool is_abelian() const;

  std::vector<int> elements() const;  // 0 .. order-1 in index order

  const std::string& label(int g) const;
  std::optional<int> element_by_label(std::string_view name) const;

  std::string format_element(int g) const { return label(g); }
  std::optional<int> parse_element(std::string_view token) const {
    return element_by_label(token);
  }

  bool is_element(int g) const { return g >= 0 && g < order_; }

  /// True when f is a group automorphism (used to validate involutions).
  bool is_automorphism(const std::vector<int>& f) const;

 private:
  FiniteGroup() = default;
  void validate() const;
  void fill_derived();  // identity_, inverse_ from table_

  int order_ = 0;
  int identity_ = 0;
  std::vector<int> table_;  // row-major order x order
  std::vector<int> inverse_;
  std::vector<std::string> labels_;
};

/// Composition of permutations in one-line notation, right factor applied
/// first: (p*q)(x) = p(q(x)). Shared with tests as the oracle convention.
std::vector<int> compose_permutations(const std::vector<int>& p, const std::vector<int>& q);

/// Canonical cycle notation, 1-based, "e" for the identity.
std::string cycle_notation(const std::vector<int>& perm);

}  // namespace zar
