#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "superkit/check.hpp"
#include "superkit/decompose.hpp"
#include "superkit/derivations.hpp"

namespace superkit {

enum class MapClass { Homomorphism, AntiHomomorphism, Both, Neither };
std::string to_string(MapClass c);

struct MapClassification {
  MapClass kind = MapClass::Neither;
  /// First basis pair breaking f[x,y] = [fx,fy].
  std::optional<std::array<std::size_t, 2>> hom_violation;
  /// First basis pair breaking f[x,y] = (-1)^{|x||y|}[fy,fx].
  std::optional<std::array<std::size_t, 2>> anti_violation;
};

/// f must be even with domain L and codomain target.
MapClassification classify_linear_map_detailed(const LinearMap& f, const LieSuperalgebra& L,
                                               const LieSuperalgebra& target);
MapClass classify_linear_map(const LinearMap& f, const LieSuperalgebra& L,
                             const LieSuperalgebra& target);

/// First basis triple breaking f[x,[y,z]] = [fx,[fy,fz]].
std::optional<std::array<std::size_t, 3>> triple_hom_violation(const LinearMap& f,
                                                               const LieSuperalgebra& L,
                                                               const LieSuperalgebra& target);
bool is_triple_hom(const LinearMap& f, const LieSuperalgebra& L, const LieSuperalgebra& target);

/// M, the subalgebra of the target generated by f(L).
struct EnvelopingImage {
  LieSuperalgebra algebra;
  /// M's canonical basis inside the target.
  Subspace subspace;
  /// M → target.
  LinearMap inclusion;
  /// f with codomain M.
  LinearMap map_into;
};

EnvelopingImage enveloping_of_image(const LinearMap& f, const LieSuperalgebra& L,
                                    const LieSuperalgebra& target);

/// δ_f(x) = Σ c [f x1, f x2] over a bracket expression x = Σ c [x1, x2].
/// `f` has codomain M. Requires L perfect, M centerless, f a triple
/// homomorphism.
LinearMap delta_f(const LinearMap& f, const LieSuperalgebra& L, const LieSuperalgebra& M,
                  PairOrder order = PairOrder::Forward);

struct PlusMinusSplit {
  Subspace plus;   ///< Im(f + δ_f)
  Subspace minus;  ///< Im(f - δ_f)
  std::vector<Check> checks;
};

/// Images of f ± δ_f in M, with the ideal, commuting, trivial-intersection
/// and spanning checks recorded. Throws LemmaViolation naming the first
/// failed check.
PlusMinusSplit split_m_plus_minus(const LinearMap& f, const LinearMap& delta,
                                  const LieSuperalgebra& M);

enum class TripleHomVerdict {
  NotTripleHom,
  Homomorphism,
  AntiHomomorphism,
  DirectSum,
  HypothesisViolated,
};
std::string to_string(TripleHomVerdict v);

struct TripleHomReport {
  TripleHomVerdict verdict = TripleHomVerdict::NotTripleHom;
  std::optional<std::array<std::size_t, 3>> triple_violation;
  MapClass classification = MapClass::Neither;

  std::optional<EnvelopingImage> envelope;
  std::optional<LinearMap> delta;  ///< L → M
  std::optional<Subspace> m_plus, m_minus;
  /// Into the target; set for DirectSum.
  std::optional<LinearMap> f1, f2;
  std::optional<Decomposition> decomposition;

  std::vector<Check> checks;
  std::vector<std::string> diagnostics;
};

/// Checks the triple-homomorphism identity and the hypotheses (1/2, L
/// perfect, M centerless, M decomposable), builds δ_f and M±, and returns
/// the homomorphism / anti-homomorphism / direct-sum verdict with f1 =
/// (f + δ_f)/2 and f2 = (f - δ_f)/2. The projections onto the
/// indecomposable ideals of M are used as an independent cross-check.
TripleHomReport decompose_triple_hom(const LinearMap& f, const LieSuperalgebra& L,
                                     const LieSuperalgebra& target);

}  // namespace superkit
