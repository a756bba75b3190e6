#include "zar/word.hpp"

namespace zar {

LinearCongruence abelian_reduce(const FgAbelianGroup& g,
                                const ElementaryEquation<FgAbelianGroup>& eq) {
  Int k = 0;
  for (int s : eq.signs) k += s;
  AbelianElement b = eq.coeffs[eq.n()];
  for (int i = 0; i < eq.n(); ++i) b = g.sub(b, eq.coeffs[i]);
  return {k, std::move(b)};
}

SolutionSet solve_linear(const FgAbelianGroup& g, const LinearCongruence& c) {
  if (!g.is_element(c.b)) throw ValidationError("right-hand side outside the group");

  if (c.k == 0) {
    bool zero = std::all_of(c.b.begin(), c.b.end(), [](const Int& v) { return v == 0; });
    return zero ? SolutionSet{SolutionSet::Kind::all, std::nullopt}
                : SolutionSet{SolutionSet::Kind::empty, std::nullopt};
  }

  Int k = c.k < 0 ? Int(-c.k) : c.k;
  AbelianElement b = c.k < 0 ? g.inverse(c.b) : c.b;

  AbelianElement rep(g.dim());
  for (int i = 0; i < g.rank(); ++i) {
    if (b[i] % k != 0) return {SolutionSet::Kind::empty, std::nullopt};
    rep[i] = b[i] / k;
  }
  for (int i = g.rank(); i < g.dim(); ++i) {
    const Int& m = g.moduli()[i];
    Int d = gcd_int(k, m);
    if (b[i] % d != 0) return {SolutionSet::Kind::empty, std::nullopt};
    // k x = b (mod m)  <=>  x = (b/d) * inv(k/d) (mod m/d).
    Int m_red = m / d;
    Int k_red = (k / d) % m_red;
    Int x = b[i] / d;
    if (m_red > 1) {
      // Modular inverse by extended Euclid.
      Int old_r = k_red, r = m_red, old_s = 1, s = 0;
      while (r != 0) {
        Int q = old_r / r;
        Int t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
      }
      Int inv = old_s % m_red;
      if (inv < 0) inv += m_red;
      x = x % m_red * inv % m_red;
    } else {
      x = 0;
    }
    rep[i] = x;
  }

  Coset coset = make_coset(g, std::move(rep), k);
  if (coset.kernel == 0) return {SolutionSet::Kind::all, std::nullopt};
  return {SolutionSet::Kind::coset, std::move(coset)};
}

std::vector<AbelianElement> materialize(const FgAbelianGroup& g, const SolutionSet& s) {
  switch (s.kind) {
    case SolutionSet::Kind::empty:
      return {};
    case SolutionSet::Kind::all:
      return g.enumerate_elements();
    case SolutionSet::Kind::coset:
      return coset_enumerate(g, *s.coset);
  }
  return {};
}

}  // namespace zar
