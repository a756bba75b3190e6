#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zar/abelian.hpp"
#include "zar/coset.hpp"
#include "zar/errors.hpp"

namespace zar {

/// One-variable equation x^e(0) a(0) x^e(1) a(1) ... a(n-1) x^e(n) = a(n):
/// n+1 coefficients (the last one is the right-hand side) and n+1 signs.
template <class G>
struct ElementaryEquation {
  using Elem = typename G::Element;

  std::vector<Elem> coeffs;
  std::vector<int> signs;

  int n() const { return static_cast<int>(coeffs.size()) - 1; }

  std::vector<Elem> support() const {
    std::vector<Elem> s = coeffs;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  }

  bool operator==(const ElementaryEquation&) const = default;
};

template <class G>
bool evaluate(const G& g, const ElementaryEquation<G>& eq, const typename G::Element& x) {
  auto xpow = [&](int s) { return s == 1 ? x : g.inverse(x); };
  auto acc = xpow(eq.signs[0]);
  for (int i = 1; i <= eq.n(); ++i) {
    acc = g.op(acc, eq.coeffs[i - 1]);
    acc = g.op(acc, xpow(eq.signs[i]));
  }
  return acc == eq.coeffs[eq.n()];
}

/// {x in G : eq holds}; the enumeration oracle for everything else.
template <class G>
std::vector<typename G::Element> solve_bruteforce(const G& g, const ElementaryEquation<G>& eq) {
  std::vector<typename G::Element> out;
  for (const auto& x : g.enumerate_elements())
    if (evaluate(g, eq, x)) out.push_back(x);
  return out;
}

// --- Equation grammar -------------------------------------------------------
//   equation := lhs "=" coeff
//   lhs      := xterm (coeff xterm)*
//   xterm    := "x" | "x^-1"
//   coeff    := group element token (label or integer tuple)
// Tokens are whitespace-separated.

namespace detail {

struct Token {
  std::string_view text;
  std::size_t pos;
};

inline std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    out.push_back({text.substr(i, j - i), i});
    i = j;
  }
  return out;
}

}  // namespace detail

template <class G>
ElementaryEquation<G> parse_equation(const G& g, std::string_view text) {
  auto tokens = detail::tokenize(text);
  if (tokens.empty()) throw ParseError("empty equation", 0);

  ElementaryEquation<G> eq;
  auto is_xterm = [](std::string_view t) { return t == "x" || t == "x^-1"; };

  std::size_t i = 0;
  bool expect_x = true;
  for (; i < tokens.size() && tokens[i].text != "="; ++i) {
    const auto& tok = tokens[i];
    if (expect_x) {
      if (!is_xterm(tok.text)) {
        if (i == 0) throw ParseError("equation must start with an x-term", tok.pos);
        throw ParseError("two coefficients in a row (expected x or x^-1)", tok.pos);
      }
      eq.signs.push_back(tok.text == "x" ? 1 : -1);
    } else {
      if (is_xterm(tok.text))
        throw ParseError("two x-terms in a row (expected a coefficient)", tok.pos);
      auto elem = g.parse_element(tok.text);
      if (!elem) throw ParseError("unknown coefficient '" + std::string(tok.text) + "'", tok.pos);
      eq.coeffs.push_back(*elem);
    }
    expect_x = !expect_x;
  }
  if (i == tokens.size())
    throw ParseError("missing '='", tokens.back().pos + tokens.back().text.size());
  if (expect_x)
    throw ParseError("left-hand side must end with an x-term", tokens[i].pos);
  if (i + 1 >= tokens.size())
    throw ParseError("missing right-hand side", tokens[i].pos + tokens[i].text.size());
  const auto& rhs = tokens[i + 1];
  if (is_xterm(rhs.text)) throw ParseError("right-hand side must be a coefficient", rhs.pos);
  auto elem = g.parse_element(rhs.text);
  if (!elem) throw ParseError("unknown coefficient '" + std::string(rhs.text) + "'", rhs.pos);
  eq.coeffs.push_back(*elem);
  if (i + 2 < tokens.size())
    throw ParseError("trailing tokens after the right-hand side", tokens[i + 2].pos);
  return eq;
}

template <class G>
std::string print_equation(const G& g, const ElementaryEquation<G>& eq) {
  std::string out;
  for (int i = 0; i <= eq.n(); ++i) {
    if (i > 0) out += " " + g.format_element(eq.coeffs[i - 1]) + " ";
    out += eq.signs[i] == 1 ? "x" : "x^-1";
  }
  out += " = " + g.format_element(eq.coeffs[eq.n()]);
  return out;
}

// --- Abelian specialization --------------------------------------------------

/// Collapse of an equation over an abelian group: k x = b with k the sign sum
/// and b the right-hand side minus the interleaved coefficients.
struct LinearCongruence {
  Int k;
  AbelianElement b;
};

LinearCongruence abelian_reduce(const FgAbelianGroup& g,
                                const ElementaryEquation<FgAbelianGroup>& eq);

/// Exact solution set of k x = b: empty, everything, or a torsion-kernel
/// coset. `explicit_set` only appears in materialized results.
struct SolutionSet {
  enum class Kind { empty, all, coset };
  Kind kind = Kind::empty;
  std::optional<Coset> coset;  // set iff kind == coset

  bool is_empty() const { return kind == Kind::empty; }
};

SolutionSet solve_linear(const FgAbelianGroup& g, const LinearCongruence& c);

/// Element list of a solution set (finite groups, or pinned cosets).
std::vector<AbelianElement> materialize(const FgAbelianGroup& g, const SolutionSet& s);

}  // namespace zar
