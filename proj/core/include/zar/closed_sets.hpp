#pragma once

#include <optional>
#include <set>
#include <vector>

#include "zar/coset.hpp"
#include "zar/finite_group.hpp"
#include "zar/word.hpp"

namespace zar {

/// Finite union/intersection tree over one-equation atoms. Every tree
/// denotes a Zariski-closed set of its group.
template <class G>
struct ClosedSetExpr {
  enum class Node { union_node, intersection_node, atom_node, empty_node, full_node };

  Node node = Node::full_node;
  std::vector<ClosedSetExpr> children;           // union/intersection only
  std::optional<ElementaryEquation<G>> atom_eq;  // atom only

  static ClosedSetExpr empty() { return {Node::empty_node, {}, {}}; }
  static ClosedSetExpr full() { return {Node::full_node, {}, {}}; }
  static ClosedSetExpr atom(ElementaryEquation<G> eq) {
    return {Node::atom_node, {}, std::move(eq)};
  }
  static ClosedSetExpr make_union(std::vector<ClosedSetExpr> children) {
    if (children.empty()) throw ValidationError("union node needs at least one child");
    return {Node::union_node, std::move(children), {}};
  }
  static ClosedSetExpr make_intersection(std::vector<ClosedSetExpr> children) {
    if (children.empty()) throw ValidationError("intersection node needs at least one child");
    return {Node::intersection_node, std::move(children), {}};
  }
};

/// Membership straight off the tree (set semantics over evaluate).
template <class G>
bool member(const G& g, const ClosedSetExpr<G>& e, const typename G::Element& x) {
  switch (e.node) {
    case ClosedSetExpr<G>::Node::empty_node:
      return false;
    case ClosedSetExpr<G>::Node::full_node:
      return true;
    case ClosedSetExpr<G>::Node::atom_node:
      return evaluate(g, *e.atom_eq, x);
    case ClosedSetExpr<G>::Node::union_node:
      for (const auto& c : e.children)
        if (member(g, c, x)) return true;
      return false;
    case ClosedSetExpr<G>::Node::intersection_node:
      for (const auto& c : e.children)
        if (!member(g, c, x)) return false;
      return true;
  }
  return false;
}

/// Denoted set by enumeration; the oracle for the canonical form below and
/// the only decision procedure over non-abelian finite groups.
template <class G>
std::vector<typename G::Element> denote_by_enumeration(const G& g, const ClosedSetExpr<G>& e) {
  std::vector<typename G::Element> out;
  for (const auto& x : g.enumerate_elements())
    if (member(g, e, x)) out.push_back(x);
  return out;
}

/// Canonical form of a closed set over an f.g. abelian group: an antichain
/// of torsion-kernel cosets (no coset contained in another), sorted by
/// coset_less. The empty set is the empty antichain; the full group is the
/// single kernel-0 coset.
struct CanonicalClosed {
  std::vector<Coset> cosets;

  bool is_empty() const { return cosets.empty(); }
  bool is_full() const { return cosets.size() == 1 && cosets[0].kernel == 0; }

  bool operator==(const CanonicalClosed&) const = default;
};

CanonicalClosed canonical_empty();
CanonicalClosed canonical_full(const FgAbelianGroup& g);
/// Absorb contained cosets, dedupe, sort.
CanonicalClosed to_antichain(const FgAbelianGroup& g, std::vector<Coset> cosets);

CanonicalClosed normalize(const FgAbelianGroup& g, const ClosedSetExpr<FgAbelianGroup>& e);

bool member(const FgAbelianGroup& g, const CanonicalClosed& s, const AbelianElement& x);

/// Set containment B <= A decided exactly.
bool contains(const FgAbelianGroup& g, const CanonicalClosed& a, const CanonicalClosed& b);

/// Equal denotations (mutual containment).
bool same_set(const FgAbelianGroup& g, const CanonicalClosed& a, const CanonicalClosed& b);

/// The closure of a finite set: itself, as a union of singleton cosets.
CanonicalClosed closure_finite_set(const FgAbelianGroup& g,
                                   const std::vector<AbelianElement>& elems);

std::vector<AbelianElement> enumerate_canonical(const FgAbelianGroup& g,
                                                const CanonicalClosed& s);

/// First element of a \ b in encoding order, if any.
std::optional<AbelianElement> first_difference(const FgAbelianGroup& g, const CanonicalClosed& a,
                                               const CanonicalClosed& b);

/// H n s in the coordinates of the subgroup presentation. Each ambient coset
/// restricts to a coset of the same kernel label (or vanishes), because the
/// embedding is injective.
CanonicalClosed restrict_to_subgroup(const FgAbelianGroup& g, const CanonicalClosed& s,
                                     const AbelianSubgroup& h);

/// Both routes of the closure/restriction square: lhs computes the closure
/// inside H of H n A (atoms restricted first, then normalized over H), rhs
/// restricts the ambient canonical form. For a closed A the two must agree.
struct ReflectionReport {
  CanonicalClosed lhs, rhs;  // in subgroup-presentation coordinates
  bool equal = false;
  bool inconclusive = false;  // subgroup closure was not certified complete
  std::vector<AbelianElement> witnesses;  // symmetric difference samples
};

ReflectionReport reflection_check(const FgAbelianGroup& g, const AbelianSubgroup& h,
                                  const ClosedSetExpr<FgAbelianGroup>& a,
                                  bool subgroup_complete = true);

ReflectionReport reflection_check(const FgAbelianGroup& g,
                                  const std::vector<AbelianElement>& subgroup_gens,
                                  const ClosedSetExpr<FgAbelianGroup>& a,
                                  bool subgroup_complete = true);

}  // namespace zar
