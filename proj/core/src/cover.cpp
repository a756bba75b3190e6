#include "zar/cover.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>

namespace zar {

CoverCheck verify_discreteness_cover(const FiniteGroup& g, const CoverCertificate& cert) {
  std::vector<char> covered(g.order(), 0);
  for (const auto& eq : cert.equations)
    for (int x : g.elements())
      if (evaluate(g, eq, x)) covered[x] = 1;

  CoverCheck out;
  out.identity_covered = covered[g.identity()];
  for (int x : g.elements()) {
    if (x == g.identity()) continue;
    if (!covered[x]) {
      out.uncovered = x;
      break;
    }
  }
  out.valid = !out.identity_covered && !out.uncovered;
  return out;
}

namespace {

struct Candidate {
  ElementaryEquation<FiniteGroup> eq;
  std::vector<std::uint64_t> mask;  // solution set over G \ {e}, bit-packed
  int covered_count = 0;
};

int popcount_mask(const std::vector<std::uint64_t>& m) {
  int n = 0;
  for (auto w : m) n += std::popcount(w);
  return n;
}

struct Searcher {
  const std::vector<Candidate>& cands;
  int words;
  long budget;
  long explored = 0;
  bool budget_hit = false;
  std::vector<int> best;  // candidate indices of the best cover found
  bool have_best = false;

  // Candidates able to cover each element, in enumeration order.
  std::vector<std::vector<int>> coverers;

  bool full(const std::vector<std::uint64_t>& covered,
            const std::vector<std::uint64_t>& universe) const {
    for (int i = 0; i < words; ++i)
      if ((covered[i] & universe[i]) != universe[i]) return false;
    return true;
  }

  int first_uncovered(const std::vector<std::uint64_t>& covered,
                      const std::vector<std::uint64_t>& universe) const {
    for (int i = 0; i < words; ++i) {
      std::uint64_t missing = universe[i] & ~covered[i];
      if (missing) return i * 64 + std::countr_zero(missing);
    }
    return -1;
  }

  void dfs(std::vector<int>& chosen, std::vector<std::uint64_t>& covered,
           const std::vector<std::uint64_t>& universe, int max_set_size) {
    if (budget_hit) return;
    if (++explored > budget) {
      budget_hit = true;
      return;
    }
    if (have_best && static_cast<int>(chosen.size()) + 1 > static_cast<int>(best.size()))
      return;  // even one more set cannot beat the incumbent
    if (full(covered, universe)) {
      if (!have_best || chosen.size() < best.size()) {
        best = chosen;
        have_best = true;
      }
      return;
    }
    // Lower bound: remaining elements / largest set.
    int remaining = 0;
    for (int i = 0; i < words; ++i)
      remaining += std::popcount(universe[i] & ~covered[i]);
    int lb = (remaining + max_set_size - 1) / max_set_size;
    if (have_best && static_cast<int>(chosen.size()) + lb >= static_cast<int>(best.size()))
      return;

    int elem = first_uncovered(covered, universe);
    for (int ci : coverers[elem]) {
      chosen.push_back(ci);
      std::vector<std::uint64_t> saved = covered;
      for (int i = 0; i < words; ++i) covered[i] |= cands[ci].mask[i];
      dfs(chosen, covered, universe, max_set_size);
      covered = saved;
      chosen.pop_back();
      if (budget_hit) return;
    }
  }
};

}  // namespace

CoverSearchResult search_min_cover(const FiniteGroup& g, int max_n, long budget) {
  CoverSearchResult result;
  const int order = g.order();
  const int words = (order + 63) / 64;
  const int e = g.identity();

  std::vector<std::uint64_t> universe(words, 0);
  for (int x = 0; x < order; ++x)
    if (x != e) universe[x / 64] |= std::uint64_t(1) << (x % 64);

  // Candidate enumeration in deterministic order: by n, then coefficient
  // tuple, then sign pattern. Solution sets containing e are discarded at
  // generation time; duplicates keep their first equation.
  std::vector<Candidate> cands;
  std::map<std::vector<std::uint64_t>, int> seen;

  for (int n = 0; n <= max_n && !result.budget_hit; ++n) {
    std::vector<int> coeffs(n + 1, 0);
    for (;;) {
      for (std::uint32_t signs_bits = 0; signs_bits < (1u << (n + 1)); ++signs_bits) {
        if (++result.explored > budget) {
          result.budget_hit = true;
          break;
        }
        ElementaryEquation<FiniteGroup> eq;
        eq.coeffs = coeffs;
        for (int i = 0; i <= n; ++i) eq.signs.push_back(signs_bits >> i & 1 ? 1 : -1);
        if (evaluate(g, eq, e)) continue;  // the union must avoid the identity
        std::vector<std::uint64_t> mask(words, 0);
        bool any = false;
        for (int x = 0; x < order; ++x)
          if (evaluate(g, eq, x)) {
            mask[x / 64] |= std::uint64_t(1) << (x % 64);
            any = true;
          }
        if (!any) continue;
        if (seen.emplace(mask, static_cast<int>(cands.size())).second)
          cands.push_back({std::move(eq), std::move(mask), 0});
      }
      if (result.budget_hit) break;
      int i = n;
      while (i >= 0 && ++coeffs[i] == order) coeffs[i--] = 0;
      if (i < 0) break;
    }
  }

  for (auto& c : cands) c.covered_count = popcount_mask(c.mask);

  // Greedy cover: most new elements first, enumeration order breaks ties.
  std::vector<int> greedy;
  {
    std::vector<std::uint64_t> covered(words, 0);
    for (;;) {
      bool done = true;
      for (int i = 0; i < words; ++i)
        if ((covered[i] & universe[i]) != universe[i]) done = false;
      if (done) break;
      int best = -1, best_new = 0;
      for (std::size_t ci = 0; ci < cands.size(); ++ci) {
        int fresh = 0;
        for (int i = 0; i < words; ++i)
          fresh += std::popcount(cands[ci].mask[i] & universe[i] & ~covered[i]);
        if (fresh > best_new) {
          best_new = fresh;
          best = static_cast<int>(ci);
        }
      }
      if (best < 0) break;  // candidates cannot cover the rest
      greedy.push_back(best);
      for (int i = 0; i < words; ++i) covered[i] |= cands[best].mask[i];
    }
    std::vector<std::uint64_t> covered_check(words, 0);
    for (int ci : greedy)
      for (int i = 0; i < words; ++i) covered_check[i] |= cands[ci].mask[i];
    bool greedy_full = true;
    for (int i = 0; i < words; ++i)
      if ((covered_check[i] & universe[i]) != universe[i]) greedy_full = false;
    if (!greedy_full) greedy.clear();
  }

  if (greedy.empty() && order > 1) {
    // No cover exists under this word-length bound (or none was found).
    return result;
  }

  Searcher searcher{cands, words, budget};
  searcher.explored = result.explored;
  searcher.coverers.assign(order, {});
  int max_set_size = 1;
  for (std::size_t ci = 0; ci < cands.size(); ++ci) {
    max_set_size = std::max(max_set_size, cands[ci].covered_count);
    for (int x = 0; x < order; ++x)
      if (cands[ci].mask[x / 64] >> (x % 64) & 1)
        searcher.coverers[x].push_back(static_cast<int>(ci));
  }
  if (!greedy.empty()) {
    searcher.best = greedy;
    searcher.have_best = true;
  }

  if (!result.budget_hit && order > 1) {
    std::vector<int> chosen;
    std::vector<std::uint64_t> covered(words, 0);
    searcher.dfs(chosen, covered, universe, max_set_size);
    result.budget_hit = searcher.budget_hit;
    result.explored = searcher.explored;
  }

  CoverCertificate cert;
  if (order == 1) {
    // G = {e}: the empty union is already G \ {e}.
    result.certificate = std::move(cert);
    result.exact = !result.budget_hit;
    return result;
  }
  if (!searcher.have_best) return result;
  for (int ci : searcher.best) cert.equations.push_back(cands[ci].eq);
  result.certificate = std::move(cert);
  result.exact = !result.budget_hit;
  return result;
}

}  // namespace zar
