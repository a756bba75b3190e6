#include "zar/coset.hpp"

#include <algorithm>
#include <cassert>

#include "zar/errors.hpp"

namespace zar {

namespace {

// Per-coordinate order of the kernel subgroup: gcd(k, m_i), the whole
// coordinate for the full kernel.
Int coord_order(const FgAbelianGroup& g, const Int& kernel, int i) {
  const Int& m = g.moduli()[i];
  if (i < g.rank()) return 0;  // unused for free coordinates
  return kernel == 0 ? m : gcd_int(kernel, m);
}

// Step of the kernel in torsion coordinate i: m_i / gcd(k, m_i).
Int coord_step(const FgAbelianGroup& g, const Int& kernel, int i) {
  return g.moduli()[i] / coord_order(g, kernel, i);
}

Int mod_inverse(Int a, const Int& m) {
  // Extended Euclid; a and m coprime.
  Int old_r = a % m, r = m, old_s = 1, s = 0;
  if (old_r < 0) old_r += m;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  assert(old_r == 1);
  Int inv = old_s % m;
  if (inv < 0) inv += m;
  return inv;
}

Int zigzag(const Int& v) { return v >= 0 ? 2 * v : -2 * v - 1; }
Int unzigzag(const Int& r) { return r % 2 == 0 ? Int(r / 2) : Int(-(r + 1) / 2); }

}  // namespace

Int canonical_kernel(const FgAbelianGroup& g, const Int& k) {
  if (k == 0) return 0;
  Int a = gcd_int(abs(k), g.exponent());
  if (g.rank() == 0 && a == g.exponent()) return 0;  // whole group
  return a;
}

bool kernel_contains(const FgAbelianGroup& g, const Int& kernel, const AbelianElement& x) {
  if (kernel == 0) return true;
  for (int i = 0; i < g.rank(); ++i)
    if (x[i] != 0) return false;
  for (int i = g.rank(); i < g.dim(); ++i)
    if (x[i] % coord_step(g, kernel, i) != 0) return false;
  return true;
}

bool kernel_subset(const FgAbelianGroup& g, const Int& a, const Int& b) {
  (void)g;
  if (b == 0) return true;
  if (a == 0) return false;
  return b % a == 0;
}

Int kernel_meet(const FgAbelianGroup& g, const Int& a, const Int& b) {
  if (a == 0) return canonical_kernel(g, b);
  if (b == 0) return canonical_kernel(g, a);
  return canonical_kernel(g, gcd_int(a, b));
}

Int kernel_join(const FgAbelianGroup& g, const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return canonical_kernel(g, lcm_int(a, b));
}

Int kernel_order(const FgAbelianGroup& g, const Int& kernel) {
  if (kernel == 0) return g.order();  // throws when infinite
  Int n = 1;
  for (int i = g.rank(); i < g.dim(); ++i) n *= coord_order(g, kernel, i);
  return n;
}

Coset make_coset(const FgAbelianGroup& g, AbelianElement rep, const Int& kernel) {
  Coset c;
  c.kernel = canonical_kernel(g, kernel);
  c.rep = g.reduce(std::move(rep));
  if (c.kernel == 0) {
    std::fill(c.rep.begin(), c.rep.end(), Int(0));
    return c;
  }
  for (int i = g.rank(); i < g.dim(); ++i) c.rep[i] %= coord_step(g, c.kernel, i);
  return c;
}

bool coset_member(const FgAbelianGroup& g, const Coset& c, const AbelianElement& x) {
  if (!g.is_element(x)) throw ValidationError("element outside the ambient group");
  if (c.kernel == 0) return true;
  for (int i = 0; i < g.rank(); ++i)
    if (x[i] != c.rep[i]) return false;
  for (int i = g.rank(); i < g.dim(); ++i)
    if ((x[i] - c.rep[i]) % coord_step(g, c.kernel, i) != 0) return false;
  return true;
}

bool coset_subset(const FgAbelianGroup& g, const Coset& a, const Coset& b) {
  return kernel_subset(g, a.kernel, b.kernel) && coset_member(g, b, a.rep);
}

std::optional<Coset> coset_intersect(const FgAbelianGroup& g, const Coset& a, const Coset& b) {
  if (a.kernel == 0) return b;
  if (b.kernel == 0) return a;

  AbelianElement rep(g.dim());
  for (int i = 0; i < g.rank(); ++i) {
    if (a.rep[i] != b.rep[i]) return std::nullopt;
    rep[i] = a.rep[i];
  }
  for (int i = g.rank(); i < g.dim(); ++i) {
    Int sa = coord_step(g, a.kernel, i), sb = coord_step(g, b.kernel, i);
    Int g0 = gcd_int(sa, sb);
    Int diff = b.rep[i] - a.rep[i];
    if (diff % g0 != 0) return std::nullopt;
    // x = a.rep + sa * t with sa*t = diff (mod sb).
    Int sb_red = sb / g0;
    Int t = sb_red == 1 ? Int(0)
                        : ((diff / g0) % sb_red) * mod_inverse(sa / g0, sb_red) % sb_red;
    rep[i] = a.rep[i] + sa * t;
  }
  return make_coset(g, std::move(rep), kernel_meet(g, a.kernel, b.kernel));
}

Int coset_size(const FgAbelianGroup& g, const Coset& c) { return kernel_order(g, c.kernel); }

std::vector<AbelianElement> coset_enumerate(const FgAbelianGroup& g, const Coset& c) {
  if (c.kernel == 0) return g.enumerate_elements();
  std::vector<AbelianElement> out;
  AbelianElement cur = c.rep;
  std::vector<Int> counters(g.dim(), 0);
  for (;;) {
    out.push_back(cur);
    int i = g.dim() - 1;
    while (i >= g.rank()) {
      Int step = coord_step(g, c.kernel, i);
      counters[i] += 1;
      if (counters[i] < coord_order(g, c.kernel, i)) {
        cur[i] += step;
        break;
      }
      counters[i] = 0;
      cur[i] = c.rep[i];
      --i;
    }
    if (i < g.rank()) break;
  }
  return out;
}

bool coset_covered(const FgAbelianGroup& g, const Coset& c, const std::vector<Coset>& by) {
  for (const Coset& b : by)
    if (coset_subset(g, c, b)) return true;

  if (c.kernel == 0 && g.rank() > 0) return false;  // free directions escape

  // Split along some properly intersecting coset.
  for (const Coset& b : by) {
    Int sub = kernel_meet(g, c.kernel, b.kernel);
    if (sub == c.kernel) continue;  // b would contain c, handled above
    auto common = coset_intersect(g, c, b);
    if (!common) continue;

    // Partition c into cosets of G[sub] and recurse.
    std::vector<AbelianElement> reps;
    reps.push_back(c.rep);
    for (int i = g.rank(); i < g.dim(); ++i) {
      Int step_c = c.kernel == 0 ? Int(1) : coord_step(g, c.kernel, i);
      Int step_sub = coord_step(g, sub, i);
      Int branches = step_sub / step_c;
      if (branches == 1) continue;
      std::vector<AbelianElement> next;
      next.reserve(reps.size() * static_cast<std::size_t>(branches));
      for (const auto& r : reps)
        for (Int j = 0; j < branches; ++j) {
          AbelianElement r2 = r;
          r2[i] += j * step_c;
          next.push_back(std::move(r2));
        }
      reps = std::move(next);
    }
    for (auto& r : reps)
      if (!coset_covered(g, make_coset(g, std::move(r), sub), by)) return false;
    return true;
  }
  return false;  // nothing contains c and nothing splits it
}

namespace {

struct FirstSearch {
  const FgAbelianGroup& g;
  const Coset& c;
  const std::vector<Coset>& excl;
  AbelianElement current;

  // Does exclusion b match `current` at coordinate i?
  bool matches_at(const Coset& b, int i) const {
    if (i < g.rank()) return current[i] == b.rep[i];
    return (current[i] - b.rep[i]) % coord_step(g, b.kernel, i) == 0;
  }

  // Would every completion of coordinates >= i inside c also lie inside b?
  bool swallows_tail(const Coset& b, int i) const {
    for (int j = i; j < g.dim(); ++j) {
      if (j < g.rank()) {
        if (c.kernel == 0) return false;  // free coordinate of c unpinned
        if (c.rep[j] != b.rep[j]) return false;
      } else {
        Int step_c = c.kernel == 0 ? Int(1) : coord_step(g, c.kernel, j);
        Int step_b = coord_step(g, b.kernel, j);
        if (step_c % step_b != 0) return false;
        if ((c_base(j) - b.rep[j]) % step_b != 0) return false;
      }
    }
    return true;
  }

  Int c_base(int j) const { return c.kernel == 0 ? Int(0) : c.rep[j]; }

  // Values coordinate i may take inside c, ascending in encoding order.
  std::vector<Int> candidate_values(int i, const std::vector<int>& alive) const {
    std::vector<Int> vals;
    if (i < g.rank()) {
      if (c.kernel != 0) {
        vals.push_back(c.rep[i]);
        return vals;
      }
      // Unpinned free coordinate: only the exclusions' pins and the first
      // fresh value can matter.
      std::vector<Int> pins;
      for (int bi : alive) pins.push_back(excl[bi].rep[i]);
      std::sort(pins.begin(), pins.end());
      pins.erase(std::unique(pins.begin(), pins.end()), pins.end());
      Int fresh = 0;
      for (Int r = 0;; ++r) {
        Int v = unzigzag(r);
        if (!std::binary_search(pins.begin(), pins.end(), v)) {
          fresh = v;
          break;
        }
      }
      vals = std::move(pins);
      vals.push_back(fresh);
      std::sort(vals.begin(), vals.end(),
                [](const Int& a, const Int& b) { return zigzag(a) < zigzag(b); });
      return vals;
    }
    Int step = c.kernel == 0 ? Int(1) : coord_step(g, c.kernel, i);
    for (Int v = c_base(i); v < g.moduli()[i]; v += step) vals.push_back(v);
    std::sort(vals.begin(), vals.end());
    return vals;
  }

  std::optional<AbelianElement> run(int i, const std::vector<int>& alive) {
    // Prune branches fully swallowed by a live exclusion.
    for (int bi : alive)
      if (swallows_tail(excl[bi], i)) return std::nullopt;
    if (i == g.dim()) return current;  // survivors were pruned above

    for (const Int& v : candidate_values(i, alive)) {
      current.resize(i + 1);
      current[i] = v;
      std::vector<int> next_alive;
      for (int bi : alive)
        if (matches_at(excl[bi], i)) next_alive.push_back(bi);
      if (auto hit = run(i + 1, next_alive)) return hit;
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<AbelianElement> coset_first_excluding(const FgAbelianGroup& g, const Coset& c,
                                                    const std::vector<Coset>& excluded) {
  std::vector<int> alive;
  for (std::size_t i = 0; i < excluded.size(); ++i) {
    if (excluded[i].kernel == 0) return std::nullopt;  // everything excluded
    auto common = coset_intersect(g, c, excluded[i]);
    if (common) alive.push_back(static_cast<int>(i));
  }
  FirstSearch search{g, c, excluded, {}};
  auto hit = search.run(0, alive);
  if (!hit) return std::nullopt;
  hit->resize(g.dim());
  // Unassigned trailing coordinates were never reached; fill minimally.
  return g.reduce(*hit);
}

bool coset_less(const Coset& a, const Coset& b) {
  bool a_full = a.kernel == 0, b_full = b.kernel == 0;
  if (a_full != b_full) return !a_full;  // full group sorts last
  if (a.kernel != b.kernel) return a.kernel < b.kernel;
  return canonical_less(a.rep, b.rep);
}

}  // namespace zar
