#include "zar/closed_sets.hpp"

#include <algorithm>

namespace zar {

CanonicalClosed canonical_empty() { return {}; }

CanonicalClosed canonical_full(const FgAbelianGroup& g) {
  return {{make_coset(g, g.zero(), 0)}};
}

CanonicalClosed to_antichain(const FgAbelianGroup& g, std::vector<Coset> cosets) {
  std::sort(cosets.begin(), cosets.end(), coset_less);
  cosets.erase(std::unique(cosets.begin(), cosets.end()), cosets.end());
  // Distinct canonical cosets denote distinct sets, so containment between
  // survivors is strict and absorption cannot drop both sides.
  std::vector<Coset> kept;
  for (std::size_t i = 0; i < cosets.size(); ++i) {
    bool absorbed = false;
    for (std::size_t j = 0; j < cosets.size() && !absorbed; ++j)
      absorbed = i != j && coset_subset(g, cosets[i], cosets[j]);
    if (!absorbed) kept.push_back(cosets[i]);
  }
  return {std::move(kept)};
}

namespace {

std::vector<Coset> union_cosets(const FgAbelianGroup& g, const std::vector<Coset>& a,
                                const std::vector<Coset>& b) {
  std::vector<Coset> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return to_antichain(g, std::move(out)).cosets;
}

std::vector<Coset> intersect_cosets(const FgAbelianGroup& g, const std::vector<Coset>& a,
                                    const std::vector<Coset>& b) {
  std::vector<Coset> out;
  for (const Coset& x : a)
    for (const Coset& y : b)
      if (auto z = coset_intersect(g, x, y)) out.push_back(std::move(*z));
  return to_antichain(g, std::move(out)).cosets;
}

CanonicalClosed atom_canonical(const FgAbelianGroup& g,
                               const ElementaryEquation<FgAbelianGroup>& eq) {
  SolutionSet s = solve_linear(g, abelian_reduce(g, eq));
  switch (s.kind) {
    case SolutionSet::Kind::empty:
      return canonical_empty();
    case SolutionSet::Kind::all:
      return canonical_full(g);
    case SolutionSet::Kind::coset:
      return {{*s.coset}};
  }
  return canonical_empty();
}

}  // namespace

CanonicalClosed normalize(const FgAbelianGroup& g, const ClosedSetExpr<FgAbelianGroup>& e) {
  using Node = ClosedSetExpr<FgAbelianGroup>::Node;
  switch (e.node) {
    case Node::empty_node:
      return canonical_empty();
    case Node::full_node:
      return canonical_full(g);
    case Node::atom_node:
      return atom_canonical(g, *e.atom_eq);
    case Node::union_node: {
      std::vector<Coset> acc;
      for (const auto& c : e.children) acc = union_cosets(g, acc, normalize(g, c).cosets);
      return to_antichain(g, std::move(acc));
    }
    case Node::intersection_node: {
      std::vector<Coset> acc = canonical_full(g).cosets;
      for (const auto& c : e.children) acc = intersect_cosets(g, acc, normalize(g, c).cosets);
      return to_antichain(g, std::move(acc));
    }
  }
  return canonical_empty();
}

bool member(const FgAbelianGroup& g, const CanonicalClosed& s, const AbelianElement& x) {
  for (const Coset& c : s.cosets)
    if (coset_member(g, c, x)) return true;
  return false;
}

bool contains(const FgAbelianGroup& g, const CanonicalClosed& a, const CanonicalClosed& b) {
  for (const Coset& c : b.cosets)
    if (!coset_covered(g, c, a.cosets)) return false;
  return true;
}

bool same_set(const FgAbelianGroup& g, const CanonicalClosed& a, const CanonicalClosed& b) {
  return contains(g, a, b) && contains(g, b, a);
}

CanonicalClosed closure_finite_set(const FgAbelianGroup& g,
                                   const std::vector<AbelianElement>& elems) {
  std::vector<Coset> singletons;
  singletons.reserve(elems.size());
  for (const auto& x : elems) singletons.push_back(make_coset(g, x, 1));
  return to_antichain(g, std::move(singletons));
}

std::vector<AbelianElement> enumerate_canonical(const FgAbelianGroup& g,
                                                const CanonicalClosed& s) {
  std::set<AbelianElement, CanonicalElementLess> out;
  for (const Coset& c : s.cosets) {
    auto elems = coset_enumerate(g, c);
    out.insert(elems.begin(), elems.end());
  }
  return {out.begin(), out.end()};
}

std::optional<AbelianElement> first_difference(const FgAbelianGroup& g, const CanonicalClosed& a,
                                               const CanonicalClosed& b) {
  std::optional<AbelianElement> best;
  for (const Coset& c : a.cosets) {
    auto x = coset_first_excluding(g, c, b.cosets);
    if (x && (!best || canonical_less(*x, *best))) best = std::move(x);
  }
  return best;
}

CanonicalClosed restrict_to_subgroup(const FgAbelianGroup& g, const CanonicalClosed& s,
                                     const AbelianSubgroup& h) {
  const int n = g.dim();
  const int t = h.presentation.dim();
  std::vector<Coset> out;

  for (const Coset& c : s.cosets) {
    if (c.kernel == 0) {
      out.push_back(make_coset(h.presentation, h.presentation.zero(), 0));
      continue;
    }
    // Solve embed(y) in c: free rows demand equality, torsion rows equality
    // modulo the coset step (slack columns).
    std::vector<int> slack_rows;
    for (int i = g.rank(); i < n; ++i) slack_rows.push_back(i);
    IntMat a(n, t + static_cast<int>(slack_rows.size()));
    std::vector<Int> rhs(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < t; ++j) a(i, j) = h.embed_mat(i, j);
      rhs[i] = c.rep[i];
    }
    for (std::size_t si = 0; si < slack_rows.size(); ++si) {
      int i = slack_rows[si];
      const Int& m = g.moduli()[i];
      Int d = c.kernel == 0 ? m : gcd_int(c.kernel, m);
      a(i, t + static_cast<int>(si)) = m / d;  // step of the coset congruence
    }
    auto sol = solve_linear_system(a, rhs);
    if (!sol) continue;
    AbelianElement y(sol->begin(), sol->begin() + t);
    // Same kernel label: embed is injective, so embed(y) + G[k] pulls back
    // to y + H[k].
    out.push_back(make_coset(h.presentation, h.presentation.reduce(std::move(y)), c.kernel));
  }
  return to_antichain(h.presentation, std::move(out));
}

namespace {

// Normalize over the subgroup with the atoms restricted first.
CanonicalClosed normalize_restricted(const FgAbelianGroup& g, const AbelianSubgroup& h,
                                     const ClosedSetExpr<FgAbelianGroup>& e) {
  using Node = ClosedSetExpr<FgAbelianGroup>::Node;
  const FgAbelianGroup& hp = h.presentation;
  switch (e.node) {
    case Node::empty_node:
      return canonical_empty();
    case Node::full_node:
      return canonical_full(hp);
    case Node::atom_node: {
      SolutionSet s = solve_linear(g, abelian_reduce(g, *e.atom_eq));
      switch (s.kind) {
        case SolutionSet::Kind::empty:
          return canonical_empty();
        case SolutionSet::Kind::all:
          return canonical_full(hp);
        case SolutionSet::Kind::coset:
          return restrict_to_subgroup(g, CanonicalClosed{{*s.coset}}, h);
      }
      return canonical_empty();
    }
    case Node::union_node: {
      std::vector<Coset> acc;
      for (const auto& c : e.children) {
        auto part = normalize_restricted(g, h, c);
        acc.insert(acc.end(), part.cosets.begin(), part.cosets.end());
      }
      return to_antichain(hp, std::move(acc));
    }
    case Node::intersection_node: {
      std::vector<Coset> acc = canonical_full(hp).cosets;
      for (const auto& c : e.children) {
        auto part = normalize_restricted(g, h, c);
        std::vector<Coset> next;
        for (const Coset& x : acc)
          for (const Coset& y : part.cosets)
            if (auto z = coset_intersect(hp, x, y)) next.push_back(std::move(*z));
        acc = to_antichain(hp, std::move(next)).cosets;
      }
      return to_antichain(hp, std::move(acc));
    }
  }
  return canonical_empty();
}

}  // namespace

ReflectionReport reflection_check(const FgAbelianGroup& g, const AbelianSubgroup& h,
                                  const ClosedSetExpr<FgAbelianGroup>& a,
                                  bool subgroup_complete) {
  ReflectionReport report;
  report.inconclusive = !subgroup_complete;
  report.rhs = restrict_to_subgroup(g, normalize(g, a), h);
  report.lhs = normalize_restricted(g, h, a);
  report.equal = same_set(h.presentation, report.lhs, report.rhs);
  if (!report.equal) {
    if (auto w = first_difference(h.presentation, report.lhs, report.rhs))
      report.witnesses.push_back(std::move(*w));
    if (auto w = first_difference(h.presentation, report.rhs, report.lhs))
      report.witnesses.push_back(std::move(*w));
  }
  return report;
}

ReflectionReport reflection_check(const FgAbelianGroup& g,
                                  const std::vector<AbelianElement>& subgroup_gens,
                                  const ClosedSetExpr<FgAbelianGroup>& a,
                                  bool subgroup_complete) {
  return reflection_check(g, subgroup_coordinates(g, subgroup_gens), a, subgroup_complete);
}

}  // namespace zar
