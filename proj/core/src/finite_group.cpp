#include "zar/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "zar/errors.hpp"

namespace zar {

int FiniteGroup::op(int g, int h) const {
  if (!is_element(g) || !is_element(h))
    throw ValidationError("element index out of range for this group");
  return table_[static_cast<std::size_t>(g) * order_ + h];
}

int FiniteGroup::inverse(int g) const {
  if (!is_element(g)) throw ValidationError("element index out of range for this group");
  return inverse_[g];
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (op(a, b) != op(b, a)) return false;
  return true;
}

std::vector<int> FiniteGroup::elements() const {
  std::vector<int> v(order_);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

const std::string& FiniteGroup::label(int g) const {
  if (!is_element(g)) throw ValidationError("element index out of range for this group");
  return labels_[g];
}

std::optional<int> FiniteGroup::element_by_label(std::string_view name) const {
  for (int i = 0; i < order_; ++i)
    if (labels_[i] == name) return i;
  return std::nullopt;
}

bool FiniteGroup::is_automorphism(const std::vector<int>& f) const {
  if (static_cast<int>(f.size()) != order_) return false;
  std::vector<char> seen(order_, 0);
  for (int x : f) {
    if (x < 0 || x >= order_ || seen[x]) return false;
    seen[x] = 1;
  }
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      if (f[op(a, b)] != op(f[a], f[b])) return false;
  return true;
}

void FiniteGroup::fill_derived() {
  // Identity: the unique e with e*x == x == x*e for all x.
  identity_ = -1;
  for (int e = 0; e < order_; ++e) {
    bool ok = true;
    for (int x = 0; x < order_ && ok; ++x)
      ok = table_[static_cast<std::size_t>(e) * order_ + x] == x &&
           table_[static_cast<std::size_t>(x) * order_ + e] == x;
    if (ok) {
      identity_ = e;
      break;
    }
  }
  if (identity_ < 0) throw ValidationError("Cayley table has no identity element");

  inverse_.assign(order_, -1);
  for (int g = 0; g < order_; ++g) {
    for (int h = 0; h < order_; ++h)
      if (table_[static_cast<std::size_t>(g) * order_ + h] == identity_ &&
          table_[static_cast<std::size_t>(h) * order_ + g] == identity_) {
        inverse_[g] = h;
        break;
      }
    if (inverse_[g] < 0) throw ValidationError("Cayley table element without two-sided inverse");
  }
}

void FiniteGroup::validate() const {
  const int n = order_;
  // Rows and columns are permutations.
  for (int i = 0; i < n; ++i) {
    std::vector<char> row(n, 0), col(n, 0);
    for (int j = 0; j < n; ++j) {
      int r = table_[static_cast<std::size_t>(i) * n + j];
      int c = table_[static_cast<std::size_t>(j) * n + i];
      if (r < 0 || r >= n || c < 0 || c >= n)
        throw ValidationError("Cayley table entry out of range");
      if (row[r]++ || col[c]++)
        throw ValidationError("Cayley table row or column is not a permutation");
    }
  }
  // Associativity, O(n^3).
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = table_[static_cast<std::size_t>(a) * n + b];
      for (int c = 0; c < n; ++c) {
        int bc = table_[static_cast<std::size_t>(b) * n + c];
        if (table_[static_cast<std::size_t>(ab) * n + c] !=
            table_[static_cast<std::size_t>(a) * n + bc])
          throw ValidationError("Cayley table is not associative");
      }
    }
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table,
                                    std::vector<std::string> labels) {
  FiniteGroup g;
  g.order_ = static_cast<int>(table.size());
  if (g.order_ == 0) throw ValidationError("empty Cayley table");
  g.table_.reserve(static_cast<std::size_t>(g.order_) * g.order_);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != g.order_)
      throw ValidationError("Cayley table is not square");
    g.table_.insert(g.table_.end(), row.begin(), row.end());
  }
  if (labels.empty()) {
    for (int i = 0; i < g.order_; ++i) labels.push_back("g" + std::to_string(i));
  }
  if (static_cast<int>(labels.size()) != g.order_)
    throw ValidationError("label list does not match group order");
  {
    auto sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ValidationError("duplicate element labels");
  }
  g.labels_ = std::move(labels);
  g.validate();
  g.fill_derived();
  return g;
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw ValidationError("cyclic group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = std::to_string(i);
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  }
  return from_table(std::move(t), std::move(labels));
}

FiniteGroup FiniteGroup::dihedral(int n) {
  if (n < 1) throw ValidationError("dihedral parameter must be positive");
  // Element (i, j): rotation r^i times reflection s^j, index i + j*n.
  // r^i s^j * r^k s^l = r^(i + k or i - k) s^(j xor l).
  const int order = 2 * n;
  auto idx = [n](int i, int j) { return ((i % n) + n) % n + j * n; };
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < 2; ++l)
          t[idx(i, j)][idx(k, l)] = idx(j == 0 ? i + k : i - k, j ^ l);
  std::vector<std::string> labels(order);
  for (int i = 0; i < n; ++i) {
    std::string r = i == 0 ? "" : (i == 1 ? "r" : "r" + std::to_string(i));
    labels[idx(i, 0)] = i == 0 ? "e" : r;
    labels[idx(i, 1)] = r + "s";
  }
  return from_table(std::move(t), std::move(labels));
}

std::vector<int> compose_permutations(const std::vector<int>& p, const std::vector<int>& q) {
  std::vector<int> out(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) out[x] = p[q[x]];
  return out;
}

std::string cycle_notation(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::string out;
  std::vector<char> seen(n, 0);
  for (int start = 0; start < n; ++start) {
    if (seen[start] || perm[start] == start) continue;
    out += '(';
    int x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = 1;
      if (!first) out += n > 9 ? "," : "";
      first = false;
      out += std::to_string(x + 1);
      x = perm[x];
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 5) throw ValidationError("symmetric group builder supports n in [1,5]");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  // Lexicographic enumeration puts the identity first.
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  const int order = static_cast<int>(perms.size());
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  std::vector<std::string> labels(order);
  for (int i = 0; i < order; ++i) {
    labels[i] = cycle_notation(perms[i]);
    for (int j = 0; j < order; ++j) t[i][j] = index[compose_permutations(perms[i], perms[j])];
  }
  return from_table(std::move(t), std::move(labels));
}

FiniteGroup FiniteGroup::quaternion() {
  // 0..7 = 1, -1, i, -i, j, -j, k, -k; pairs (axis, sign).
  auto axis = [](int g) { return g / 2; };  // 0=1, 1=i, 2=j, 3=k
  auto sign = [](int g) { return g % 2 == 0 ? 1 : -1; };
  auto enc = [](int ax, int sg) { return 2 * ax + (sg == 1 ? 0 : 1); };
  // Product of base units: mul[a][b] = (axis, sign).
  static const int mul_axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int mul_sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ax = mul_axis[axis(a)][axis(b)];
      int sg = mul_sign[axis(a)][axis(b)] * sign(a) * sign(b);
      t[a][b] = enc(ax, sg);
    }
  return from_table(std::move(t), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

FiniteGroup FiniteGroup::product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order();
  const int order = na * nb;
  auto idx = [nb](int x, int y) { return x * nb + y; };
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  std::vector<std::string> labels(order);
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y) {
      labels[idx(x, y)] = "(" + a.label(x) + "," + b.label(y) + ")";
      for (int u = 0; u < na; ++u)
        for (int v = 0; v < nb; ++v) t[idx(x, y)][idx(u, v)] = idx(a.op(x, u), b.op(y, v));
    }
  return from_table(std::move(t), std::move(labels));
}

FiniteGroup FiniteGroup::semidirect_involution(const FiniteGroup& n, const std::vector<int>& f) {
  if (!n.is_abelian()) throw ValidationError("semidirect_involution needs an abelian normal part");
  if (!n.is_automorphism(f)) throw ValidationError("involution table is not an automorphism");
  for (int x = 0; x < n.order(); ++x)
    if (f[f[x]] != x) throw ValidationError("automorphism is not an involution");

  const int nn = n.order();
  const int order = 2 * nn;
  auto idx = [nn](int x, int b) { return x + b * nn; };
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  std::vector<std::string> labels(order);
  for (int x = 0; x < nn; ++x)
    for (int b = 0; b < 2; ++b) {
      labels[idx(x, b)] = b == 0 ? n.label(x) : n.label(x) + "*f";
      for (int y = 0; y < nn; ++y)
        for (int c = 0; c < 2; ++c) {
          int yy = b == 0 ? y : f[y];
          t[idx(x, b)][idx(y, c)] = idx(n.op(x, yy), b ^ c);
        }
    }
  return from_table(std::move(t), std::move(labels));
}

}  // namespace zar
