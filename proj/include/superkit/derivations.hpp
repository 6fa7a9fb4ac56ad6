#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superkit/check.hpp"
#include "superkit/endspace.hpp"

namespace superkit {

/// Der(L): solved separately for even and odd D.
GradedEndSpace derivation_space(const LieSuperalgebra& L);
/// TDer(L): maps satisfying the triple-derivation identity on all basis
/// triples, per parity of D.
GradedEndSpace triple_derivation_space(const LieSuperalgebra& L);
/// ad(L) = span{ad e_i}.
GradedEndSpace inner_derivation_space(const LieSuperalgebra& L);

/// Order in which bracket pairs (i, j) are offered to the solver. The
/// reversed order picks a different expression and is used to confirm that
/// the δ maps do not depend on the expression chosen.
enum class PairOrder { Forward, Reversed };

struct BracketTerm {
  Scalar coefficient;
  std::size_t left, right;
};

/// target = Σ coefficient · [e_left, e_right].
struct BracketExpression {
  Vector target;
  std::vector<BracketTerm> terms;
};

/// Deterministic expression of a homogeneous x ∈ [L,L] as a sum of basis
/// brackets (free coefficients zeroed). Throws NotInDerived, MixedParity.
BracketExpression express_as_brackets(const LieSuperalgebra& L, std::span<const Scalar> x,
                                      PairOrder order = PairOrder::Forward);
Vector evaluate(const LieSuperalgebra& L, const BracketExpression& expr);

/// δ_D(x) = Σ c([D x1, x2] + (-1)^{|D||x1|}[x1, D x2]) over a bracket
/// expression x = Σ c [x1, x2]. Requires L perfect and centerless and D a
/// homogeneous triple derivation.
LinearMap delta_of_triple_derivation(const LieSuperalgebra& L, const LinearMap& D,
                                     PairOrder order = PairOrder::Forward);

/// [b_i, b_j] ∈ E for every pair of basis maps.
bool endspace_bracket_closure_check(const GradedEndSpace& E);
/// Structure constants of E under the supercommutator, in E's canonical
/// basis (even maps first). Throws NotClosed.
LieSuperalgebra endspace_as_superalgebra(const GradedEndSpace& E, std::string name = "End");

/// {D ∈ TDer(L) : [D, ad e_i] = 0 for all i}, in coordinates of
/// triple_derivation_space(L).basis().
Subspace tder_centralizer_of_inner(const LieSuperalgebra& L);

struct TheoremOneReport {
  bool has_half = false;
  bool perfect = false;
  bool centerless = false;

  GradedDims der_dims, tder_dims, inner_dims;
  /// TDer(L) = Der(L), evaluated even when the hypotheses fail.
  bool claim1_holds = false;
  CheckStatus claim1 = CheckStatus::NotApplicable;

  GradedDims der_of_der_tder_dims, der_of_der_inner_dims;
  CheckStatus claim2 = CheckStatus::NotApplicable;

  std::vector<Check> checks;
  std::vector<std::string> failed_hypotheses;

  bool hypotheses_hold() const { return has_half && perfect && centerless; }
};

/// Checks the hypotheses (1/2 in the field, perfect, centerless) and then
/// TDer(L) = Der(L) and TDer(Der(L)) = ad(Der(L)), together with the
/// intermediate facts the proof goes through.
TheoremOneReport verify_theorem_one(const LieSuperalgebra& L);

}  // namespace superkit
