#pragma once

#include <optional>
#include <vector>

#include "zar/finite_group.hpp"
#include "zar/word.hpp"

namespace zar {

/// Witness that the Zariski topology of a finite group is discrete: finitely
/// many elementary equations whose solution sets union to exactly G \ {e}.
struct CoverCertificate {
  std::vector<ElementaryEquation<FiniteGroup>> equations;
};

struct CoverCheck {
  bool valid = false;
  std::optional<int> uncovered;  // first non-identity element missed
  bool identity_covered = false;
};

CoverCheck verify_discreteness_cover(const FiniteGroup& g, const CoverCertificate& cert);

struct CoverSearchResult {
  std::optional<CoverCertificate> certificate;
  bool exact = false;        // branch-and-bound proved minimality
  bool budget_hit = false;   // enumeration or search ran out of budget
  long explored = 0;         // work units spent
};

/// Enumerate candidate equations with word length n <= max_n and
/// coefficients in G, discard any whose solution set contains the identity,
/// then solve minimum set cover of G \ {e}. Within budget the result is the
/// exact minimum (ties broken by enumeration order); once the budget is hit
/// the greedy cover is returned with exact = false.
CoverSearchResult search_min_cover(const FiniteGroup& g, int max_n, long budget);

}  // namespace zar
