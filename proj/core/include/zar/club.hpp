#pragma once

#include <functional>
#include <optional>
#include <set>
#include <vector>

namespace zar {

/// Staged finite approximation of a countable closing-off argument:
/// the element set together with the stage it was computed at.
template <class T, class Less = std::less<T>>
struct FinitarySet {
  std::set<T, Less> elements;
  int stage = 0;
};

template <class T, class Less = std::less<T>>
struct PhiClosureResult {
  FinitarySet<T, Less> result;
  bool stabilized = false;
};

namespace detail {

// All subsets of `elems` of size <= cap, in lexicographic position order
// (including the empty set).
template <class T, class Fn>
void for_each_small_subset(const std::vector<T>& elems, int cap, Fn&& fn) {
  std::vector<T> subset;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    fn(subset);
    if (static_cast<int>(subset.size()) == cap) return;
    for (std::size_t i = start; i < elems.size(); ++i) {
      subset.push_back(elems[i]);
      self(self, i + 1);
      subset.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace detail

/// Iterate Y_{n+1} = Y_n u union{ phi(Z) : Z subset of Y_n, |Z| <= arity_cap }
/// until a fixed point or the fuel runs out. On stabilization the result is
/// phi-invariant up to the arity cap.
template <class T, class Less = std::less<T>>
PhiClosureResult<T, Less> phi_closure(
    const FinitarySet<T, Less>& seed,
    const std::function<std::vector<T>(const std::vector<T>&)>& phi, int fuel,
    int arity_cap = 3) {
  PhiClosureResult<T, Less> out;
  out.result = seed;
  for (int stage = 0; stage < fuel; ++stage) {
    std::vector<T> snapshot(out.result.elements.begin(), out.result.elements.end());
    std::size_t before = out.result.elements.size();
    detail::for_each_small_subset(snapshot, arity_cap, [&](const std::vector<T>& z) {
      for (auto& y : phi(z)) out.result.elements.insert(y);
    });
    out.result.stage = stage + 1;
    if (out.result.elements.size() == before) {
      out.stabilized = true;
      break;
    }
  }
  return out;
}

/// phi(Z) subset of Y for every Z subset of Y with |Z| <= arity_cap; the
/// first failing Z is the counterexample.
template <class T, class Less = std::less<T>>
std::optional<std::vector<T>> phi_invariance_counterexample(
    const FinitarySet<T, Less>& y,
    const std::function<std::vector<T>(const std::vector<T>&)>& phi, int arity_cap = 3) {
  std::vector<T> snapshot(y.elements.begin(), y.elements.end());
  std::optional<std::vector<T>> bad;
  detail::for_each_small_subset(snapshot, arity_cap, [&](const std::vector<T>& z) {
    if (bad) return;
    for (auto& img : phi(z))
      if (!y.elements.contains(img)) {
        bad = z;
        return;
      }
  });
  return bad;
}

template <class T, class Less = std::less<T>>
struct DiagonalResult {
  FinitarySet<T, Less> result;
  bool stabilized = false;
  std::vector<bool> in_club;  // per witness: f_k(result) == result
};

/// Interleave unbounding witnesses along the usual pairing enumeration of
/// N x N: Y_{n+1} = Y_n u f_{k_n}(Y_n). Each witness maps a set to a superset
/// inside its club, so on stabilization the result lies in every club.
template <class T, class Less = std::less<T>>
DiagonalResult<T, Less> diagonal_intersection(
    const FinitarySet<T, Less>& seed,
    const std::vector<std::function<std::vector<T>(const std::vector<T>&)>>& witnesses,
    int fuel) {
  DiagonalResult<T, Less> out;
  out.result = seed;
  const int k_count = static_cast<int>(witnesses.size());
  if (k_count == 0) {
    out.stabilized = true;
    return out;
  }

  std::set<int> idle;  // witnesses applied without growth since the last change
  int step = 0;
  for (int diag = 0; !out.stabilized && step < fuel; ++diag) {
    for (int k = 0; k <= diag && step < fuel; ++k, ++step) {
      if (k >= k_count) continue;  // enumeration indices beyond the witness list
      std::vector<T> snapshot(out.result.elements.begin(), out.result.elements.end());
      std::size_t before = out.result.elements.size();
      for (auto& y : witnesses[k](snapshot)) out.result.elements.insert(y);
      out.result.stage = step + 1;
      if (out.result.elements.size() == before) {
        idle.insert(k);
        if (static_cast<int>(idle.size()) == k_count) {
          out.stabilized = true;
          break;
        }
      } else {
        idle.clear();
      }
    }
  }

  out.in_club.resize(k_count);
  for (int k = 0; k < k_count; ++k) {
    std::vector<T> snapshot(out.result.elements.begin(), out.result.elements.end());
    bool closed = true;
    for (auto& y : witnesses[k](snapshot))
      if (!out.result.elements.contains(y)) {
        closed = false;
        break;
      }
    out.in_club[k] = closed;
  }
  return out;
}

}  // namespace zar
