#include "zar/subgroup.hpp"

#include <algorithm>
#include <set>

#include "zar/errors.hpp"

namespace zar {

bool SubgroupHandle::contains(int g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

SubgroupHandle subgroup_generated(const FiniteGroup& g, std::vector<int> gens) {
  for (int x : gens)
    if (!g.is_element(x)) throw ValidationError("generator outside the ambient group");

  std::set<int> closure = {g.identity()};
  std::vector<int> frontier(closure.begin(), closure.end());
  for (int x : gens)
    if (closure.insert(x).second) frontier.push_back(x);

  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier) {
      int ix = g.inverse(x);
      if (closure.insert(ix).second) next.push_back(ix);
    }
    // Products with everything already present, both sides.
    std::vector<int> snapshot(closure.begin(), closure.end());
    for (int x : frontier)
      for (int y : snapshot) {
        int xy = g.op(x, y);
        if (closure.insert(xy).second) next.push_back(xy);
        int yx = g.op(y, x);
        if (closure.insert(yx).second) next.push_back(yx);
      }
    frontier = std::move(next);
  }

  SubgroupHandle h;
  h.ambient = &g;
  h.generators = std::move(gens);
  h.elements.assign(closure.begin(), closure.end());
  return h;
}

namespace {

void require_same_ambient(const FiniteGroup& g, const SubgroupHandle& h) {
  if (h.ambient != &g) throw ValidationError("subgroup handle belongs to a different group");
}

}  // namespace

SubgroupHandle centralizer(const FiniteGroup& g, const SubgroupHandle& h) {
  require_same_ambient(g, h);
  std::vector<int> elems;
  for (int x : g.elements()) {
    bool commutes = true;
    for (int y : h.elements)
      if (g.op(x, y) != g.op(y, x)) {
        commutes = false;
        break;
      }
    if (commutes) elems.push_back(x);
  }
  SubgroupHandle c;
  c.ambient = &g;
  c.generators = elems;
  c.elements = std::move(elems);
  return c;
}

bool is_normal(const FiniteGroup& g, const SubgroupHandle& h) {
  require_same_ambient(g, h);
  for (int x : g.elements()) {
    int xi = g.inverse(x);
    for (int y : h.elements)
      if (!h.contains(g.op(g.op(xi, y), x))) return false;
  }
  return true;
}

SuperNormalReport is_super_normal(const FiniteGroup& g, const SubgroupHandle& h,
                                  SuperNormalMethod method) {
  require_same_ambient(g, h);
  if (!is_normal(g, h)) throw ValidationError("super-normality requires a normal subgroup");

  SuperNormalReport report;
  if (method == SuperNormalMethod::definitional) {
    // For every x find y in H conjugating identically on H.
    for (int x : g.elements()) {
      int xi = g.inverse(x);
      std::optional<int> match;
      for (int y : h.elements) {
        int yi = g.inverse(y);
        bool same = true;
        for (int t : h.elements)
          if (g.op(g.op(xi, t), x) != g.op(g.op(yi, t), y)) {
            same = false;
            break;
          }
        if (same) {
          match = y;
          break;
        }
      }
      if (!match) {
        report.holds = false;
        report.failing_x = x;
        return report;
      }
      report.witness.emplace_back(x, *match);
    }
    report.holds = true;
    return report;
  }

  // centralizer_product: G == c_G(H) H.
  SubgroupHandle c = centralizer(g, h);
  std::vector<char> covered(g.order(), 0);
  for (int a : c.elements)
    for (int b : h.elements) covered[g.op(a, b)] = 1;
  for (int x : g.elements())
    if (!covered[x]) {
      report.holds = false;
      report.failing_x = x;
      return report;
    }
  report.holds = true;
  return report;
}

int subgroup_index(const FiniteGroup& g, const SubgroupHandle& h) {
  require_same_ambient(g, h);
  if (h.order() == 0 || g.order() % h.order() != 0)
    throw ValidationError("subgroup order does not divide the group order");
  return g.order() / h.order();
}

SubgroupHandle center(const FiniteGroup& g) {
  SubgroupHandle whole;
  whole.ambient = &g;
  whole.elements = g.elements();
  return centralizer(g, whole);
}

SubgroupHandle derived_subgroup(const FiniteGroup& g) {
  std::vector<int> comms;
  for (int a : g.elements())
    for (int b : g.elements())
      comms.push_back(g.op(g.op(g.inverse(a), g.inverse(b)), g.op(a, b)));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return subgroup_generated(g, comms);
}

std::vector<SubgroupHandle> all_subgroups(const FiniteGroup& g) {
  std::set<std::vector<int>> seen;
  std::vector<SubgroupHandle> out;
  std::vector<std::vector<int>> queue;

  auto add = [&](SubgroupHandle h) {
    if (seen.insert(h.elements).second) {
      queue.push_back(h.elements);
      out.push_back(std::move(h));
    }
  };

  add(subgroup_generated(g, {}));
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    std::vector<int> base = queue[qi];
    for (int x : g.elements()) {
      if (std::binary_search(base.begin(), base.end(), x)) continue;
      std::vector<int> gens = base;
      gens.push_back(x);
      add(subgroup_generated(g, std::move(gens)));
    }
  }

  std::sort(out.begin(), out.end(), [](const SubgroupHandle& a, const SubgroupHandle& b) {
    if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
    return a.elements < b.elements;
  });
  return out;
}

ProductLemmaReport product_lemma_construct(const FiniteGroup& n1, const FiniteGroup& n2,
                                           const std::vector<int>& f) {
  FiniteGroup n = FiniteGroup::product(n1, n2);
  if (!n.is_abelian()) throw ValidationError("product_lemma_construct needs abelian factors");

  ProductLemmaReport report;
  report.gprime = std::make_shared<FiniteGroup>(FiniteGroup::semidirect_involution(n, f));
  const FiniteGroup& gp = *report.gprime;
  report.gsquare = std::make_shared<FiniteGroup>(FiniteGroup::product(gp, gp));
  const FiniteGroup& gg = *report.gsquare;
  const int nn = n.order();

  // Index arithmetic: gp element (x, b) = x + b*nn; gg element (u, v) = u*|gp| + v.
  auto gp_idx = [nn](int x, int b) { return x + b * nn; };
  auto gg_idx = [&gp](int u, int v) { return u * gp.order() + v; };

  std::vector<int> gens;
  gens.push_back(gg_idx(gp_idx(n.identity(), 1), gp_idx(n.identity(), 1)));  // (f, f)
  for (int x : n.elements()) gens.push_back(gg_idx(gp_idx(x, 0), gp.identity()));
  report.h = subgroup_generated(gg, gens);

  // G* = H n (G' x {1}).
  std::vector<int> star;
  for (int e : report.h.elements)
    if (e % gp.order() == gp.identity()) star.push_back(e);
  SubgroupHandle gstar;
  gstar.ambient = report.gsquare.get();
  gstar.generators = star;
  gstar.elements = star;
  report.gstar = std::move(gstar);

  report.index_h_gstar = report.h.order() / std::max(1, report.gstar.order());
  report.index_is_two =
      report.gstar.order() * 2 == report.h.order() && report.h.order() % 2 == 0;

  // First projection restricted to G*: injective with image exactly N x {0}.
  std::set<int> image;
  for (int e : report.gstar.elements) image.insert(e / gp.order());
  report.projection_injective = image.size() == report.gstar.elements.size();
  std::set<int> n_in_gp;
  for (int x : n.elements()) n_in_gp.insert(gp_idx(x, 0));
  report.projection_image_is_n = image == n_in_gp;

  report.passed =
      report.index_is_two && report.projection_injective && report.projection_image_is_n;
  return report;
}

}  // namespace zar
