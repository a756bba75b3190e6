#include "zar/abelian.hpp"

#include <algorithm>
#include <set>

#include "zar/errors.hpp"

namespace zar {

namespace {

Int zigzag(const Int& v) { return v >= 0 ? 2 * v : -2 * v - 1; }

}  // namespace

bool canonical_less(const AbelianElement& a, const AbelianElement& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    Int ra = zigzag(a[i]), rb = zigzag(b[i]);
    if (ra != rb) return ra < rb;
  }
  return a.size() < b.size();
}

FgAbelianGroup::FgAbelianGroup(int rank, std::vector<Int> invariants)
    : rank_(rank), invariants_(std::move(invariants)) {
  if (rank_ < 0) throw ValidationError("rank must be nonnegative");
  for (std::size_t i = 0; i < invariants_.size(); ++i) {
    if (invariants_[i] < 2) throw ValidationError("invariant factors must be at least 2");
    if (i > 0 && invariants_[i] % invariants_[i - 1] != 0)
      throw ValidationError("invariant factors must form a divisibility chain");
  }
  moduli_.assign(rank_, 0);
  moduli_.insert(moduli_.end(), invariants_.begin(), invariants_.end());
}

Int FgAbelianGroup::order() const {
  if (!is_finite()) throw ValidationError("group is infinite");
  Int n = 1;
  for (const Int& m : invariants_) n *= m;
  return n;
}

Int FgAbelianGroup::exponent() const {
  return invariants_.empty() ? Int(1) : invariants_.back();
}

AbelianElement FgAbelianGroup::reduce(AbelianElement raw) const {
  if (static_cast<int>(raw.size()) != dim())
    throw ValidationError("element has the wrong number of coordinates");
  for (int i = rank_; i < dim(); ++i) {
    raw[i] %= moduli_[i];
    if (raw[i] < 0) raw[i] += moduli_[i];
  }
  return raw;
}

AbelianElement FgAbelianGroup::op(const Element& a, const Element& b) const {
  if (static_cast<int>(a.size()) != dim() || static_cast<int>(b.size()) != dim())
    throw ValidationError("element has the wrong number of coordinates");
  Element out(dim());
  for (int i = 0; i < dim(); ++i) out[i] = a[i] + b[i];
  return reduce(std::move(out));
}

AbelianElement FgAbelianGroup::inverse(const Element& a) const {
  Element out(dim());
  for (int i = 0; i < dim(); ++i) out[i] = -a[i];
  return reduce(std::move(out));
}

AbelianElement FgAbelianGroup::sub(const Element& a, const Element& b) const {
  Element out(dim());
  for (int i = 0; i < dim(); ++i) out[i] = a[i] - b[i];
  return reduce(std::move(out));
}

AbelianElement FgAbelianGroup::scale(const Int& k, const Element& a) const {
  Element out(dim());
  for (int i = 0; i < dim(); ++i) out[i] = k * a[i];
  return reduce(std::move(out));
}

bool FgAbelianGroup::is_element(const Element& a) const {
  if (static_cast<int>(a.size()) != dim()) return false;
  for (int i = rank_; i < dim(); ++i)
    if (a[i] < 0 || a[i] >= moduli_[i]) return false;
  return true;
}

std::vector<AbelianElement> FgAbelianGroup::enumerate_elements() const {
  if (!is_finite()) throw ValidationError("cannot enumerate an infinite group");
  std::vector<Element> out;
  Element cur = zero();
  for (;;) {
    out.push_back(cur);
    int i = dim() - 1;
    while (i >= 0) {
      cur[i] += 1;
      if (cur[i] < moduli_[i]) break;
      cur[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

std::string FgAbelianGroup::format_element(const Element& a) const {
  if (dim() == 1) return a[0].str();
  std::string out = "(";
  for (int i = 0; i < dim(); ++i) {
    if (i) out += ",";
    out += a[i].str();
  }
  return out + ")";
}

std::optional<AbelianElement> FgAbelianGroup::parse_element(std::string_view token) const {
  if (token == "e") return zero();
  std::vector<Int> coords;
  std::string_view body = token;
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')') return std::nullopt;
    body = body.substr(1, body.size() - 2);
  }
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string_view piece =
        comma == std::string_view::npos ? body.substr(pos) : body.substr(pos, comma - pos);
    if (piece.empty()) return std::nullopt;
    bool neg = piece.front() == '-';
    std::string_view digits = neg ? piece.substr(1) : piece;
    if (digits.empty()) return std::nullopt;
    Int v = 0;
    for (char ch : digits) {
      if (ch < '0' || ch > '9') return std::nullopt;
      v = v * 10 + (ch - '0');
    }
    coords.push_back(neg ? -v : v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (static_cast<int>(coords.size()) != dim()) return std::nullopt;
  return reduce(std::move(coords));
}

ChainPresentation chain_presentation(int rank, std::vector<Int> moduli) {
  for (const Int& m : moduli)
    if (m < 1) throw ValidationError("moduli must be positive");
  const int s = static_cast<int>(moduli.size());

  IntMat diag(s, s);
  for (int i = 0; i < s; ++i) diag(i, i) = moduli[i];
  SmithForm snf = smith_normal_form(diag);

  std::vector<Int> invariants;
  for (int i = 0; i < s; ++i)
    if (snf.d(i, i) > 1) invariants.push_back(snf.d(i, i));

  return ChainPresentation{FgAbelianGroup(rank, invariants), rank, std::move(moduli), snf.left,
                           snf.left_inv};
}

AbelianElement ChainPresentation::to_chain(const AbelianElement& product_coords) const {
  const int s = static_cast<int>(product_moduli.size());
  if (static_cast<int>(product_coords.size()) != product_rank + s)
    throw ValidationError("element has the wrong number of coordinates");
  std::vector<Int> torsion(product_coords.begin() + product_rank, product_coords.end());
  std::vector<Int> y = to_mat.apply(torsion);
  AbelianElement out(product_coords.begin(), product_coords.begin() + product_rank);
  // The ascending divisibility chain puts the trivial factors (d == 1) first;
  // the kept coordinates are the trailing ones.
  const int dropped = s - group.torsion_count();
  for (int i = dropped; i < s; ++i) out.push_back(y[i]);
  return group.reduce(std::move(out));
}

AbelianElement ChainPresentation::from_chain(const AbelianElement& chain_coords) const {
  const int s = static_cast<int>(product_moduli.size());
  if (static_cast<int>(chain_coords.size()) != group.dim())
    throw ValidationError("element has the wrong number of coordinates");
  const int kept_count = group.torsion_count();
  const int dropped = s - kept_count;
  std::vector<Int> y(s);
  for (int i = 0; i < kept_count; ++i) y[dropped + i] = chain_coords[product_rank + i];
  std::vector<Int> x = from_mat.apply(y);
  AbelianElement out(chain_coords.begin(), chain_coords.begin() + product_rank);
  for (int i = 0; i < s; ++i) {
    Int v = x[i] % product_moduli[i];
    if (v < 0) v += product_moduli[i];
    out.push_back(v);
  }
  return out;
}

AbelianElement AbelianSubgroup::embed(const AbelianElement& h) const {
  if (static_cast<int>(h.size()) != presentation.dim())
    throw ValidationError("element has the wrong number of coordinates");
  return ambient.reduce(embed_mat.apply(h));
}

std::optional<AbelianElement> AbelianSubgroup::project(const AbelianElement& g) const {
  if (!ambient.is_element(g)) throw ValidationError("element outside the ambient group");
  // Solve embed_mat * h == g modulo the ambient moduli: slack columns carry
  // the torsion moduli.
  const int n = ambient.dim();
  const int t = presentation.dim();
  const int s = ambient.torsion_count();
  IntMat a(n, t + s);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < t; ++j) a(i, j) = embed_mat(i, j);
  for (int i = 0; i < s; ++i) a(ambient.rank() + i, t + i) = ambient.moduli()[ambient.rank() + i];
  auto sol = solve_linear_system(a, g);
  if (!sol) return std::nullopt;
  AbelianElement h(sol->begin(), sol->begin() + t);
  return presentation.reduce(std::move(h));
}

std::vector<AbelianElement> AbelianSubgroup::enumerate_in_ambient() const {
  std::vector<AbelianElement> out;
  for (const auto& h : presentation.enumerate_elements()) out.push_back(embed(h));
  std::sort(out.begin(), out.end(), CanonicalElementLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

AbelianSubgroup subgroup_coordinates(const FgAbelianGroup& g,
                                     const std::vector<AbelianElement>& gens) {
  for (const auto& x : gens)
    if (!g.is_element(x)) throw ValidationError("generator outside the ambient group");

  const int n = g.dim();
  const int t = static_cast<int>(gens.size());
  const int s = g.torsion_count();

  // Relation lattice {v : sum v_j gens_j == 0 in g}: project the integer
  // kernel of [A | moduli-slack] onto the v block.
  IntMat b(n, t + s);
  for (int j = 0; j < t; ++j)
    for (int i = 0; i < n; ++i) b(i, j) = gens[j][i];
  for (int i = 0; i < s; ++i) b(g.rank() + i, t + i) = g.moduli()[g.rank() + i];
  IntMat ker = kernel_basis(b);

  IntMat relations(t, ker.cols());
  for (int j = 0; j < ker.cols(); ++j)
    for (int i = 0; i < t; ++i) relations(i, j) = ker(i, j);

  SmithForm snf = smith_normal_form(relations);
  const int q = snf.rank();
  const int free_rank = t - q;

  std::vector<Int> invariants;
  std::vector<int> torsion_rows;  // rows of U v carrying a nontrivial cyclic factor
  for (int i = 0; i < q; ++i)
    if (snf.d(i, i) > 1) {
      invariants.push_back(snf.d(i, i));
      torsion_rows.push_back(i);
    }

  FgAbelianGroup pres(free_rank, invariants);

  // Placement: presentation coordinate -> coordinate of y = U v.
  std::vector<int> place(pres.dim());
  for (int j = 0; j < free_rank; ++j) place[j] = q + j;
  for (std::size_t j = 0; j < torsion_rows.size(); ++j)
    place[free_rank + j] = torsion_rows[j];

  // embed = A * U^-1 restricted to the placed coordinates.
  IntMat a(n, t);
  for (int j = 0; j < t; ++j)
    for (int i = 0; i < n; ++i) a(i, j) = gens[j][i];
  IntMat basis = a * snf.left_inv;  // n x t

  IntMat embed(n, pres.dim());
  for (int j = 0; j < pres.dim(); ++j)
    for (int i = 0; i < n; ++i) embed(i, j) = basis(i, place[j]);

  AbelianSubgroup sub{g, std::move(pres), std::move(embed)};

  // Canonical sign: per coordinate prefer the generator that is smaller in
  // encoding order (negation is an automorphism coordinatewise).
  for (int j = 0; j < sub.presentation.dim(); ++j) {
    AbelianElement gj(sub.presentation.dim());
    gj[j] = 1;
    AbelianElement img = sub.embed(gj);
    AbelianElement neg = sub.ambient.inverse(img);
    if (canonical_less(neg, img)) sub.embed_mat.negate_col(j);
  }

  // Reduce embed entries modulo the ambient moduli for stable output.
  for (int j = 0; j < sub.presentation.dim(); ++j)
    for (int i = sub.ambient.rank(); i < n; ++i) {
      Int m = sub.ambient.moduli()[i];
      sub.embed_mat(i, j) %= m;
      if (sub.embed_mat(i, j) < 0) sub.embed_mat(i, j) += m;
    }

  return sub;
}

AbelianClosure subgroup_generated(const FgAbelianGroup& g,
                                  const std::vector<AbelianElement>& gens, int fuel) {
  std::set<AbelianElement, CanonicalElementLess> cur;
  cur.insert(g.zero());
  for (const auto& x : gens) cur.insert(g.reduce(x));

  AbelianClosure out;
  for (int stage = 0; stage < fuel; ++stage) {
    std::set<AbelianElement, CanonicalElementLess> next = cur;
    for (const auto& x : cur) {
      next.insert(g.inverse(x));
      for (const auto& y : cur) next.insert(g.op(x, y));
    }
    out.stages = stage + 1;
    if (next.size() == cur.size()) {
      out.stabilized = true;
      break;
    }
    cur = std::move(next);
  }
  out.elements.assign(cur.begin(), cur.end());
  return out;
}

}  // namespace zar
