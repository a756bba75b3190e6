#include "zar/direct_sum.hpp"

#include <algorithm>

#include "zar/errors.hpp"

namespace zar {

namespace {

bool value_is_identity(const DirectSumGroup::Factor& f, const DirectSumElement::Value& v) {
  if (std::holds_alternative<FiniteGroup>(f))
    return std::get<int>(v) == std::get<FiniteGroup>(f).identity();
  const auto& g = std::get<FgAbelianGroup>(f);
  return std::get<AbelianElement>(v) == g.zero();
}

bool value_valid(const DirectSumGroup::Factor& f, const DirectSumElement::Value& v) {
  if (std::holds_alternative<FiniteGroup>(f))
    return std::holds_alternative<int>(v) && std::get<FiniteGroup>(f).is_element(std::get<int>(v));
  return std::holds_alternative<AbelianElement>(v) &&
         std::get<FgAbelianGroup>(f).is_element(std::get<AbelianElement>(v));
}

DirectSumElement::Value value_op(const DirectSumGroup::Factor& f, const DirectSumElement::Value& a,
                                 const DirectSumElement::Value& b) {
  if (std::holds_alternative<FiniteGroup>(f))
    return std::get<FiniteGroup>(f).op(std::get<int>(a), std::get<int>(b));
  return std::get<FgAbelianGroup>(f).op(std::get<AbelianElement>(a), std::get<AbelianElement>(b));
}

DirectSumElement::Value value_inverse(const DirectSumGroup::Factor& f,
                                      const DirectSumElement::Value& a) {
  if (std::holds_alternative<FiniteGroup>(f))
    return std::get<FiniteGroup>(f).inverse(std::get<int>(a));
  return std::get<FgAbelianGroup>(f).inverse(std::get<AbelianElement>(a));
}

}  // namespace

std::vector<std::size_t> DirectSumElement::support_indices() const {
  std::vector<std::size_t> out;
  out.reserve(support.size());
  for (const auto& [i, v] : support) out.push_back(i);
  return out;
}

DirectSumGroup DirectSumGroup::bounded(std::vector<Factor> factors) {
  if (factors.empty()) throw ValidationError("direct sum needs at least one factor");
  DirectSumGroup g;
  g.factors_ = std::move(factors);
  return g;
}

DirectSumGroup DirectSumGroup::unbounded(Factor uniform) {
  DirectSumGroup g;
  g.uniform_ = std::make_shared<Factor>(std::move(uniform));
  return g;
}

std::size_t DirectSumGroup::factor_count() const {
  if (!is_bounded()) throw ValidationError("unbounded direct sum has no factor count");
  return factors_.size();
}

const DirectSumGroup::Factor& DirectSumGroup::factor(std::size_t i) const {
  if (!is_bounded()) return *uniform_;
  if (i >= factors_.size()) throw ValidationError("factor index out of range");
  return factors_[i];
}

bool DirectSumGroup::all_factors_abelian() const {
  auto abelian = [](const Factor& f) {
    return std::holds_alternative<FgAbelianGroup>(f) || std::get<FiniteGroup>(f).is_abelian();
  };
  if (!is_bounded()) return abelian(*uniform_);
  return std::all_of(factors_.begin(), factors_.end(), abelian);
}

bool DirectSumGroup::is_finite() const {
  if (!is_bounded()) return false;
  for (const auto& f : factors_)
    if (std::holds_alternative<FgAbelianGroup>(f) && !std::get<FgAbelianGroup>(f).is_finite())
      return false;
  return true;
}

bool DirectSumGroup::is_element(const Element& a) const {
  std::size_t prev = {};
  bool first = true;
  for (const auto& [i, v] : a.support) {
    if (!first && i <= prev) return false;  // sorted, unique
    if (is_bounded() && i >= factors_.size()) return false;
    if (!value_valid(factor(i), v)) return false;
    if (value_is_identity(factor(i), v)) return false;  // identities are omitted
    prev = i;
    first = false;
  }
  return true;
}

DirectSumElement DirectSumGroup::op(const Element& a, const Element& b) const {
  DirectSumElement out;
  std::size_t ia = 0, ib = 0;
  while (ia < a.support.size() || ib < b.support.size()) {
    bool take_a = ib == b.support.size() ||
                  (ia < a.support.size() && a.support[ia].first < b.support[ib].first);
    bool take_b = ia == a.support.size() ||
                  (ib < b.support.size() && b.support[ib].first < a.support[ia].first);
    if (take_a) {
      out.support.push_back(a.support[ia++]);
    } else if (take_b) {
      out.support.push_back(b.support[ib++]);
    } else {
      std::size_t idx = a.support[ia].first;
      auto v = value_op(factor(idx), a.support[ia].second, b.support[ib].second);
      if (!value_is_identity(factor(idx), v)) out.support.emplace_back(idx, std::move(v));
      ++ia;
      ++ib;
    }
  }
  return out;
}

DirectSumElement DirectSumGroup::inverse(const Element& a) const {
  DirectSumElement out;
  out.support.reserve(a.support.size());
  for (const auto& [i, v] : a.support) out.support.emplace_back(i, value_inverse(factor(i), v));
  return out;
}

DirectSumElement DirectSumGroup::atom(std::size_t i, DirectSumElement::Value value) const {
  if (!value_valid(factor(i), value)) throw ValidationError("value outside the factor group");
  DirectSumElement out;
  if (!value_is_identity(factor(i), value)) out.support.emplace_back(i, std::move(value));
  return out;
}

std::vector<DirectSumElement> DirectSumGroup::enumerate_elements() const {
  if (!is_finite()) throw ValidationError("cannot enumerate an infinite direct sum");
  std::vector<DirectSumElement> out = {identity()};
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    std::vector<DirectSumElement::Value> values;
    if (std::holds_alternative<FiniteGroup>(factors_[i])) {
      for (int v : std::get<FiniteGroup>(factors_[i]).elements()) values.emplace_back(v);
    } else {
      for (auto& v : std::get<FgAbelianGroup>(factors_[i]).enumerate_elements())
        values.emplace_back(std::move(v));
    }
    std::vector<DirectSumElement> next;
    next.reserve(out.size() * values.size());
    for (const auto& base : out)
      for (const auto& v : values) {
        DirectSumElement e = base;
        if (!value_is_identity(factors_[i], v)) e.support.emplace_back(i, v);
        next.push_back(std::move(e));
      }
    out = std::move(next);
  }
  return out;
}

std::string DirectSumGroup::format_element(const Element& a) const {
  if (a.support.empty()) return "e";
  std::string out = "{";
  bool first = true;
  for (const auto& [i, v] : a.support) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(i) + ":";
    if (std::holds_alternative<int>(v))
      out += std::get<FiniteGroup>(factor(i)).label(std::get<int>(v));
    else
      out += std::get<FgAbelianGroup>(factor(i)).format_element(std::get<AbelianElement>(v));
  }
  return out + "}";
}

DirectSumClosure subgroup_generated(const DirectSumGroup& g,
                                    const std::vector<DirectSumElement>& gens, int fuel) {
  for (const auto& x : gens)
    if (!g.is_element(x)) throw ValidationError("generator outside the direct sum");

  std::set<DirectSumElement> cur;
  cur.insert(g.identity());
  for (const auto& x : gens) cur.insert(x);

  DirectSumClosure out;
  for (int stage = 0; stage < fuel; ++stage) {
    std::set<DirectSumElement> next = cur;
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

DirectSumClosure summand_intersection(const DirectSumGroup& g,
                                      const std::vector<DirectSumElement>& gens,
                                      const std::set<std::size_t>& j_indices, int fuel) {
  DirectSumClosure closure = subgroup_generated(g, gens, fuel);
  DirectSumClosure out;
  out.stabilized = closure.stabilized;
  out.stages = closure.stages;
  for (auto& x : closure.elements) {
    bool inside = true;
    for (const auto& [i, v] : x.support)
      if (!j_indices.contains(i)) {
        inside = false;
        break;
      }
    if (inside) out.elements.push_back(std::move(x));
  }
  return out;
}

AbelianElement DirectSumWindow::to_window(const DirectSumElement& x) const {
  AbelianElement product(chain.product_rank + chain.product_moduli.size());
  for (const auto& [i, v] : x.support) {
    if (i >= width) throw ValidationError("element support exceeds the window");
    const auto& coords = std::get<AbelianElement>(v);
    for (int j = 0; j < factor_dim[i]; ++j) product[factor_offset[i] + j] = coords[j];
  }
  return chain.to_chain(product);
}

DirectSumElement DirectSumWindow::from_window(const AbelianElement& x) const {
  AbelianElement product = chain.from_chain(x);
  DirectSumElement out;
  for (std::size_t i = 0; i < width; ++i) {
    AbelianElement coords(product.begin() + factor_offset[i],
                          product.begin() + factor_offset[i] + factor_dim[i]);
    bool zero = std::all_of(coords.begin(), coords.end(), [](const Int& v) { return v == 0; });
    if (!zero) out.support.emplace_back(i, std::move(coords));
  }
  return out;
}

DirectSumWindow make_window(const DirectSumGroup& g, std::size_t width) {
  if (g.is_bounded() && width > g.factor_count()) width = g.factor_count();
  int rank = 0;
  std::vector<Int> moduli;
  std::vector<int> offsets, dims;
  // Free coordinates must come first in the product form; windows therefore
  // require torsion-only factors when rank would interleave. Keep it simple:
  // abelian factors only, free parts rejected.
  for (std::size_t i = 0; i < width; ++i) {
    const auto& f = g.factor(i);
    if (!std::holds_alternative<FgAbelianGroup>(f))
      throw ValidationError("window presentation needs FgAbelianGroup factors");
    const auto& a = std::get<FgAbelianGroup>(f);
    if (a.rank() > 0)
      throw ValidationError("window presentation supports finite abelian factors only");
    offsets.push_back(static_cast<int>(moduli.size()));
    dims.push_back(a.dim());
    for (const Int& m : a.invariants()) moduli.push_back(m);
  }
  DirectSumWindow w{width, chain_presentation(rank, std::move(moduli))};
  w.factor_offset = std::move(offsets);
  w.factor_dim = std::move(dims);
  return w;
}

}  // namespace zar
