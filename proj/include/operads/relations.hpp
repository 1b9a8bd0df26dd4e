#pragma once

#include <string>
#include <vector>

#include "operads/rational.hpp"

namespace operads {

/// The four operad families handled by the library. Operations are numbered
/// 0..k-1 in a fixed order shared by every consumer:
///   MDend / KP:      0 = "<" (prec), 1 = ">" (succ), i = ".i" for 2 <= i <= k-1
///   MTetra / KGonal: 0 = "-|" (dashv), 1 = "|-" (vdash), i = "_i" for 2 <= i <= k-1
/// Under Koszul duality the identification is positional: code <-> code.
enum class Family { MDend, MTetra, KP, KGonal };

Family parse_family(const std::string& name);
std::string family_name(Family f);
std::string op_name(Family f, int op);

/// One summand of an axiom: coef * ((x op1 y) op2 z) when right_assoc is
/// false, coef * (x op1 (y op2 z)) when true. An axiom asserts that its
/// terms sum to zero on every triple.
struct AxiomTerm {
  Rational coef;
  bool right_assoc;
  int op1;
  int op2;
};

struct AxiomSchema {
  std::string name;
  std::vector<AxiomTerm> terms;
};

/// The defining quadratic relations of one family at k operations. The lists
/// are generated from a single table so the axiom checkers, the duality
/// computation and the chain-complex verifier cannot drift apart.
std::vector<AxiomSchema> family_axioms(Family f, int k);

/// Closed-form axiom count: k(k+1)/2, k(3k-1)/2, 3(k-1), 2k^2-3(k-1).
int family_axiom_count(Family f, int k);

int min_operation_count(Family f);

/// Evaluates the terms of one axiom on a concrete triple. Mul is
/// (int op_code, const Elem&, const Elem&) -> Elem; Elem needs +=, *=Rational
/// and a zero default state.
template <class Elem, class Mul>
Elem eval_axiom(const AxiomSchema& ax, const Elem& x, const Elem& y, const Elem& z, Mul&& mul) {
  Elem acc{};
  for (const AxiomTerm& t : ax.terms) {
    Elem v = t.right_assoc ? mul(t.op1, x, mul(t.op2, y, z)) : mul(t.op2, mul(t.op1, x, y), z);
    v *= t.coef;
    acc += v;
  }
  return acc;
}

struct AxiomCheckReport {
  bool passed = true;
  std::size_t axiom_count = 0;
  long long triples_checked = 0;
  std::string failure;  // first counterexample, empty on success
};

}  // namespace operads
