#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zar/closed_sets.hpp"
#include "zar/direct_sum.hpp"

namespace zar {

struct ReflectionOptions {
  int max_word_n = 2;  // word-length bound for witness equations
  int fuel = 32;       // stage budget
  int family_cap = 3;  // equations per witness family
};

/// One equation together with its solution coset, as used in witness
/// families.
struct EquationWitness {
  ElementaryEquation<FgAbelianGroup> eq;
  Coset solution;
};

/// Record of one avoidance witness x_F: the first element of A outside the
/// family's solution sets, or the identity when A is fully covered. Families
/// that exclude the same sets share their witness; only families arising as
/// covering chains are materialized (every other family of the same size
/// yields one of these witnesses).
struct XfRecord {
  std::vector<EquationWitness> family;
  AbelianElement x;
  bool intersection_empty = false;
};

/// Record of one separating family F_z for z outside the closure of A: the
/// defining equations of A's canonical cosets. The union of their solution
/// sets is exactly A, and z lies in none of them.
struct FzRecord {
  AbelianElement z;
  std::vector<EquationWitness> separating;
};

struct TraceStep {
  int stage = 0;
  std::string trigger;  // "group" | "psi" | "phi_k"
  int k = -1;           // phi_k only
  std::vector<AbelianElement> added;
};

struct ReflectionTrace {
  std::vector<AbelianElement> seed;
  std::vector<TraceStep> steps;
  std::vector<XfRecord> xf;
  std::vector<FzRecord> fz;
  bool stabilized = false;
  std::vector<AbelianElement> subgroup;    // final element set, encoding order
  std::vector<AbelianElement> generators;  // greedy minimal generating subset
  ReflectionReport equality;
};

/// Close the seed simultaneously under the group operations, the separating
/// supports (psi), and the avoidance witnesses (phi_k for k <= max_word_n,
/// families capped at family_cap equations). Deterministic: witnesses are
/// the first candidates in encoding order. A stabilized trace must report
/// equality; a partial trace still runs the check, flagged inconclusive.
ReflectionTrace reflection_construct(const FgAbelianGroup& g,
                                     const ClosedSetExpr<FgAbelianGroup>& a,
                                     const std::vector<AbelianElement>& seed,
                                     const ReflectionOptions& opt = {});

/// The same construction over a direct sum of finite abelian factors,
/// computed in a window presentation wide enough for every support involved.
struct DirectSumReflection {
  DirectSumWindow window;
  ReflectionTrace trace;  // window coordinates
};

DirectSumReflection reflection_construct(const DirectSumGroup& g,
                                         const ClosedSetExpr<DirectSumGroup>& a,
                                         const std::vector<DirectSumElement>& seed,
                                         const ReflectionOptions& opt = {});

ReflectionReport reflection_check(const DirectSumGroup& g,
                                  const std::vector<DirectSumElement>& subgroup_gens,
                                  const ClosedSetExpr<DirectSumGroup>& a,
                                  bool subgroup_complete = true);

/// Greedy minimal generating subset of a finite closed element set.
std::vector<AbelianElement> minimal_generators(const FgAbelianGroup& g,
                                               const std::vector<AbelianElement>& closed_set);

}  // namespace zar
