#pragma once

#include <optional>
#include <vector>

#include "zar/abelian.hpp"

namespace zar {

// Torsion kernels G[k] = {x : k x = 0}. Kernel labels are canonical:
//   0                       the whole group,
//   a divisor a >= 1 of the torsion exponent otherwise,
// with the rank-0 full kernel folded into 0. Useful identities:
//   G[a] n G[b] = G[gcd(a,b)],  G[a] + G[b] = G[lcm(a,b)],
//   G[a] <= G[b]  iff  a | b  (on canonical labels, 0 = top).

Int canonical_kernel(const FgAbelianGroup& g, const Int& k);
bool kernel_contains(const FgAbelianGroup& g, const Int& kernel, const AbelianElement& x);
bool kernel_subset(const FgAbelianGroup& g, const Int& a, const Int& b);
Int kernel_meet(const FgAbelianGroup& g, const Int& a, const Int& b);
Int kernel_join(const FgAbelianGroup& g, const Int& a, const Int& b);
/// |G[kernel]|; requires kernel != 0 or a finite group.
Int kernel_order(const FgAbelianGroup& g, const Int& kernel);

/// Coset rep + G[kernel] with the kernel label canonical and the
/// representative reduced modulo the kernel (coordinatewise minimal).
struct Coset {
  AbelianElement rep;
  Int kernel = 0;

  bool operator==(const Coset&) const = default;
};

Coset make_coset(const FgAbelianGroup& g, AbelianElement rep, const Int& kernel);

bool coset_member(const FgAbelianGroup& g, const Coset& c, const AbelianElement& x);
bool coset_subset(const FgAbelianGroup& g, const Coset& a, const Coset& b);
std::optional<Coset> coset_intersect(const FgAbelianGroup& g, const Coset& a, const Coset& b);
Int coset_size(const FgAbelianGroup& g, const Coset& c);
std::vector<AbelianElement> coset_enumerate(const FgAbelianGroup& g, const Coset& c);

/// Exact decision of c <= union(by), by recursive splitting of the kernel
/// along the finitely many kernel sublattices involved.
bool coset_covered(const FgAbelianGroup& g, const Coset& c, const std::vector<Coset>& by);

/// First element of c \ union(excluded) in encoding order, if any.
std::optional<AbelianElement> coset_first_excluding(const FgAbelianGroup& g, const Coset& c,
                                                    const std::vector<Coset>& excluded);

/// Deterministic order on cosets: by kernel label, then representative.
bool coset_less(const Coset& a, const Coset& b);

}  // namespace zar
