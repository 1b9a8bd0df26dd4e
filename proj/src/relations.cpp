#include "operads/relations.hpp"

#include <stdexcept>

namespace operads {

Family parse_family(const std::string& name) {
  if (name == "mdend" || name == "dend") return Family::MDend;
  if (name == "mtetra" || name == "tetra") return Family::MTetra;
  if (name == "kp") return Family::KP;
  if (name == "kgonal" || name == "gonal") return Family::KGonal;
  throw std::invalid_argument("unknown family: " + name);
}

std::string family_name(Family f) {
  switch (f) {
    case Family::MDend: return "mdend";
    case Family::MTetra: return "mtetra";
    case Family::KP: return "kp";
    case Family::KGonal: return "kgonal";
  }
  return "?";
}

std::string op_name(Family f, int op) {
  bool dend_side = (f == Family::MDend || f == Family::KP);
  if (op == 0) return dend_side ? "<" : "-|";
  if (op == 1) return dend_side ? ">" : "|-";
  return (dend_side ? "." : "_") + std::to_string(op);
}

int min_operation_count(Family f) {
  return (f == Family::MDend || f == Family::KP) ? 2 : 3;
}

namespace {

AxiomTerm L(int a, int b, int coef = 1) { return {Rational(coef), false, a, b}; }
AxiomTerm R(int a, int b, int coef = 1) { return {Rational(coef), true, a, b}; }

}  // namespace

std::vector<AxiomSchema> family_axioms(Family f, int k) {
  if (k < min_operation_count(f))
    throw std::invalid_argument("family_axioms: too few operations for " + family_name(f));
  std::vector<AxiomSchema> out;
  auto ax = [&out](std::string name, std::vector<AxiomTerm> terms) {
    out.push_back({std::move(name), std::move(terms)});
  };

  if (f == Family::MDend || f == Family::KP) {
    // The star product < + > is expanded into basis operations here.
    ax("1", {L(0, 0), R(0, 0, -1), R(0, 1, -1)});  // (x<y)<z = x<(y*z)
    ax("2", {L(1, 0), R(1, 0, -1)});               // (x>y)<z = x>(y<z)
    ax("3", {L(0, 1), L(1, 1), R(1, 1, -1)});      // (x*y)>z = x>(y>z)
    for (int i = 2; i <= k - 1; ++i) {
      std::string si = std::to_string(i);
      ax("4[" + si + "]", {L(0, i), R(i, 1, -1)});  // (x<y).i z = x.i (y>z)
      ax("5[" + si + "]", {L(1, i), R(1, i, -1)});  // (x>y).i z = x>(y.i z)
      ax("6[" + si + "]", {L(i, 0), R(i, 0, -1)});  // (x.i y)<z = x.i (y<z)
    }
    if (f == Family::MDend)
      for (int i = 2; i <= k - 1; ++i)
        for (int j = i + 1; j <= k - 1; ++j)
          ax("7[" + std::to_string(i) + "," + std::to_string(j) + "]",
             {L(i, j), R(i, j, -1)});  // (x.i y).j z = x.i (y.j z), i < j
    return out;
  }

  // MTetra / KGonal share the dialgebra core and the single-index families.
  ax("1", {L(0, 0), R(0, 0, -1)});  // (x-|y)-|z = x-|(y-|z)
  ax("2", {L(0, 0), R(0, 1, -1)});  // (x-|y)-|z = x-|(y|-z)
  ax("3", {L(1, 0), R(1, 0, -1)});  // (x|-y)-|z = x|-(y-|z)
  ax("4", {L(0, 1), R(1, 1, -1)});  // (x-|y)|-z = x|-(y|-z)
  ax("5", {L(1, 1), R(1, 1, -1)});  // (x|-y)|-z = x|-(y|-z)
  for (int i = 2; i <= k - 1; ++i) {
    std::string si = std::to_string(i);
    ax("6[" + si + "]", {L(0, i), R(i, 1, -1)});   // (x-|y)_i z = x _i (y|-z)
    ax("7[" + si + "]", {L(1, i), R(1, i, -1)});   // (x|-y)_i z = x|-(y _i z)
    ax("8[" + si + "]", {L(i, 0), R(i, 0, -1)});   // (x _i y)-|z = x _i (y-|z)
    ax("11[" + si + "]", {L(i, 1)});               // (x _i y)|-z = 0
    ax("12[" + si + "]", {R(0, i)});               // x-|(y _i z) = 0
  }
  if (f == Family::MTetra) {
    for (int i = 2; i <= k - 1; ++i) {
      std::string si = std::to_string(i);
      ax("9[" + si + "]", {L(i, i)});   // (x _i y)_i z = 0
      ax("10[" + si + "]", {R(i, i)});  // x _i (y _i z) = 0
    }
    for (int i = 2; i <= k - 1; ++i)
      for (int j = i + 1; j <= k - 1; ++j) {
        std::string sij = std::to_string(i) + "," + std::to_string(j);
        ax("13[" + sij + "]", {L(i, j), R(i, j, -1)});  // (x _i y)_j z = x _i (y _j z)
        ax("14[" + sij + "]", {L(j, i)});               // (x _j y)_i z = 0
        ax("15[" + sij + "]", {R(j, i)});               // x _j (y _i z) = 0
      }
  } else {
    // KGonal: every perp pair vanishes on both sides.
    for (int i = 2; i <= k - 1; ++i)
      for (int j = 2; j <= k - 1; ++j) {
        std::string sij = std::to_string(i) + "," + std::to_string(j);
        ax("9[" + sij + "]", {L(i, j)});
        ax("10[" + sij + "]", {R(i, j)});
      }
  }
  return out;
}

int family_axiom_count(Family f, int k) {
  switch (f) {
    case Family::MDend: return k * (k + 1) / 2;
    case Family::MTetra: return k * (3 * k - 1) / 2;
    case Family::KP: return 3 * (k - 1);
    case Family::KGonal: return 2 * k * k - 3 * (k - 1);
  }
  return 0;
}

}  // namespace operads
