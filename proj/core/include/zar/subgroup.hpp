#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "zar/finite_group.hpp"

namespace zar {

/// Subgroup of a finite ambient group: generators plus the fully enumerated
/// closure (sorted element indices). Closures in finite groups always
/// stabilize, so there is no partial state here.
struct SubgroupHandle {
  const FiniteGroup* ambient = nullptr;
  std::vector<int> generators;
  std::vector<int> elements;  // sorted, closed under op and inverse, contains e

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(int g) const;
};

SubgroupHandle subgroup_generated(const FiniteGroup& g, std::vector<int> gens);

/// c_G(H) = {x : xh = hx for all h in H}.
SubgroupHandle centralizer(const FiniteGroup& g, const SubgroupHandle& h);

bool is_normal(const FiniteGroup& g, const SubgroupHandle& h);

enum class SuperNormalMethod { definitional, centralizer_product };

struct SuperNormalReport {
  bool holds = false;
  /// When the check fails: an x in G whose conjugation on H is matched by no
  /// y in H (definitional), or an x outside c_G(H)H (centralizer_product).
  std::optional<int> failing_x;
  /// When the check holds via the definitional route: for each x in G some
  /// y in H with x^-1 h x == y^-1 h y for all h in H.
  std::vector<std::pair<int, int>> witness;
};

/// Requires H normal in G (throws ValidationError otherwise). The two
/// methods decide the same property.
SuperNormalReport is_super_normal(const FiniteGroup& g, const SubgroupHandle& h,
                                  SuperNormalMethod method);

int subgroup_index(const FiniteGroup& g, const SubgroupHandle& h);

SubgroupHandle center(const FiniteGroup& g);
SubgroupHandle derived_subgroup(const FiniteGroup& g);

/// All subgroups, found by closing generator extensions; sorted by order
/// then elements. Fine at catalog scale, exponential in general.
std::vector<SubgroupHandle> all_subgroups(const FiniteGroup& g);

/// The two-factor construction: from abelian N = N1 x N2 and an involutive
/// automorphism f of N, build G' = N x| <f>, G = G' x G', the subgroup
/// H = <(f,f), N x {1}>, and G* = H n (G' x {1}). The report checks
/// [H : G*] == 2 and that the first projection maps G* isomorphically onto N.
/// Groups live behind shared_ptr so the subgroup handles stay valid when the
/// report is moved around.
struct ProductLemmaReport {
  std::shared_ptr<FiniteGroup> gprime;   // N x| <f>
  std::shared_ptr<FiniteGroup> gsquare;  // G' x G'
  SubgroupHandle h;                      // inside *gsquare
  SubgroupHandle gstar;                  // H n (G' x {1})
  int index_h_gstar = 0;
  bool index_is_two = false;
  bool projection_injective = false;
  bool projection_image_is_n = false;
  bool passed = false;
};

ProductLemmaReport product_lemma_construct(const FiniteGroup& n1, const FiniteGroup& n2,
                                           const std::vector<int>& f);

}  // namespace zar
