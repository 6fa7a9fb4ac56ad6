#include "superkit/derivations.hpp"

#include "superkit/constraints.hpp"

namespace superkit {

GradedEndSpace derivation_space(const LieSuperalgebra& L) {
  return solve_map_constraints(L, MapIdentity::Derivation);
}

GradedEndSpace triple_derivation_space(const LieSuperalgebra& L) {
  return solve_map_constraints(L, MapIdentity::TripleDerivation);
}

GradedEndSpace inner_derivation_space(const LieSuperalgebra& L) {
  std::vector<LinearMap> maps;
  for (std::size_t i = 0; i < L.dim(); ++i) maps.push_back(ad_basis(L, i));
  return GradedEndSpace::span(L.field(), L.dims(), maps);
}

BracketExpression express_as_brackets(const LieSuperalgebra& L, std::span<const Scalar> x,
                                      PairOrder order) {
  if (x.size() != L.dim()) throw Error(ErrorKind::AlgebraMismatch, "express_as_brackets");
  const auto ep = parity_of(L.dims(), x);
  if (ep == ElementParity::Mixed)
    throw Error(ErrorKind::MixedParity, "express_as_brackets needs a homogeneous element");
  const int target = ep == ElementParity::Odd ? 1 : 0;

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = 0; j < L.dim(); ++j)
      if ((L.parity_bit(i) ^ L.parity_bit(j)) == target) pairs.emplace_back(i, j);
  if (order == PairOrder::Reversed) std::reverse(pairs.begin(), pairs.end());

  std::vector<Vector> columns;
  for (auto [i, j] : pairs) columns.push_back(L.bracket_basis(i, j));
  BracketExpression expr{Vector(x.begin(), x.end()), {}};
  if (pairs.empty()) {
    if (!is_zero(x)) throw Error(ErrorKind::NotInDerived, "element is not a sum of brackets");
    return expr;
  }
  auto coeffs = solve(Matrix::from_columns(L.field(), L.dim(), columns), x);
  if (!coeffs) throw Error(ErrorKind::NotInDerived, "element is not a sum of brackets");
  for (std::size_t c = 0; c < pairs.size(); ++c)
    if (!(*coeffs)[c].is_zero())
      expr.terms.push_back({(*coeffs)[c], pairs[c].first, pairs[c].second});
  return expr;
}

Vector evaluate(const LieSuperalgebra& L, const BracketExpression& expr) {
  Vector out = L.zero();
  for (const auto& t : expr.terms) {
    const Vector b = L.bracket_basis(t.left, t.right);
    for (std::size_t k = 0; k < out.size(); ++k) out[k].add_product(t.coefficient, b[k]);
  }
  return out;
}

namespace {

// δ_D without re-checking the hypotheses.
LinearMap delta_unchecked(const LieSuperalgebra& L, const LinearMap& D, PairOrder order) {
  const int d = bit(D.parity());
  std::vector<Vector> images;
  for (std::size_t k = 0; k < L.dim(); ++k) {
    const auto expr = express_as_brackets(L, L.basis_vector(k), order);
    Vector out = L.zero();
    for (const auto& t : expr.terms) {
      const Vector Dx1 = D.matrix().column(t.left);
      const Vector Dx2 = D.matrix().column(t.right);
      Vector term = L.bracket(Dx1, L.basis_vector(t.right));
      const Vector second = L.bracket(L.basis_vector(t.left), Dx2);
      const bool negate = sign_of(d, L.parity_bit(t.left)) < 0;
      for (std::size_t c = 0; c < term.size(); ++c) {
        if (negate)
          term[c] -= second[c];
        else
          term[c] += second[c];
        out[c].add_product(t.coefficient, term[c]);
      }
    }
    images.push_back(std::move(out));
  }
  return LinearMap(L.dims(), L.dims(), D.parity(),
                   Matrix::from_columns(L.field(), L.dim(), images));
}

}  // namespace

LinearMap delta_of_triple_derivation(const LieSuperalgebra& L, const LinearMap& D,
                                     PairOrder order) {
  if (!(D.domain() == L.dims()) || !(D.codomain() == L.dims()))
    throw Error(ErrorKind::AlgebraMismatch, "D is not an endomorphism of " + L.name());
  if (!is_perfect(L))
    throw Error(ErrorKind::HypothesisViolated, "delta_D needs a perfect algebra");
  if (!center(L).is_zero())
    throw Error(ErrorKind::HypothesisViolated, "delta_D needs a centerless algebra");
  if (!triple_derivation_space(L).contains(D))
    throw Error(ErrorKind::NotTripleDerivation, "map is not a triple derivation");
  return delta_unchecked(L, D, order);
}

namespace {

std::optional<std::pair<std::size_t, std::size_t>> first_unclosed_pair(const GradedEndSpace& E) {
  const auto basis = E.basis();
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b)
      if (!E.contains(supercommutator(basis[a], basis[b]))) return std::make_pair(a, b);
  return std::nullopt;
}

std::string pair_witness(std::size_t a, std::size_t b) {
  return "basis pair (" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

bool endspace_bracket_closure_check(const GradedEndSpace& E) {
  return !first_unclosed_pair(E).has_value();
}

LieSuperalgebra endspace_as_superalgebra(const GradedEndSpace& E, std::string name) {
  const auto basis = E.basis();
  std::vector<std::string> even, odd;
  for (std::size_t a = 0; a < basis.size(); ++a)
    (a < E.even_dim() ? even : odd).push_back("d" + std::to_string(a));
  auto out = LieSuperalgebra::with_zero_table(std::move(name), E.field(), even, odd);
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b) {
      auto coords = E.coordinates(supercommutator(basis[a], basis[b]));
      if (!coords)
        throw Error(ErrorKind::NotClosed, "space is not closed under the supercommutator at " +
                                              pair_witness(a, b));
      for (std::size_t c = 0; c < basis.size(); ++c) out.set_constant(a, b, c, (*coords)[c]);
    }
  return out;
}

Subspace tder_centralizer_of_inner(const LieSuperalgebra& L) {
  const auto basis = triple_derivation_space(L).basis();
  const std::size_t n = L.dim();
  std::vector<Vector> columns;
  for (const auto& D : basis) {
    Vector col;
    col.reserve(n * n * n);
    for (std::size_t i = 0; i < n; ++i) {
      const LinearMap bracket = supercommutator(D, ad_basis(L, i));
      const auto& flat = bracket.matrix().data();
      col.insert(col.end(), flat.begin(), flat.end());
    }
    columns.push_back(std::move(col));
  }
  if (columns.empty()) return Subspace::zero(L.field(), 0);
  return kernel(Matrix::from_columns(L.field(), n * n * n, columns));
}

namespace {

std::string map_label(const char* space, std::size_t a) {
  return std::string(space) + "[" + std::to_string(a) + "]";
}

void check_commutator_with_ad(const LieSuperalgebra& L, const GradedEndSpace& der,
                     std::vector<Check>& checks) {
  const auto basis = der.basis();
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t x = 0; x < L.dim(); ++x) {
      const LinearMap lhs = supercommutator(basis[a], ad_basis(L, x));
      const LinearMap rhs = ad(L, basis[a].matrix().column(x));
      if (!(lhs.matrix() == rhs.matrix())) {
        checks.push_back(fail("derivation_commutator_with_ad",
                              map_label("Der", a) + ", x=" + L.basis_names()[x]));
        return;
      }
    }
  checks.push_back(pass("derivation_commutator_with_ad"));
}

void check_inner_is_ideal(const LieSuperalgebra& L, const GradedEndSpace& tder,
                     const GradedEndSpace& inner, std::vector<Check>& checks) {
  const auto basis = tder.basis();
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t x = 0; x < L.dim(); ++x)
      if (!inner.contains(supercommutator(basis[a], ad_basis(L, x)))) {
        checks.push_back(fail("inner_is_ideal_of_tder",
                              map_label("TDer", a) + ", x=" + L.basis_names()[x]));
        return;
      }
  checks.push_back(pass("inner_is_ideal_of_tder"));
}

void check_delta_properties(const LieSuperalgebra& L, const GradedEndSpace& tder,
                        const GradedEndSpace& der, std::vector<Check>& checks) {
  const auto basis = tder.basis();
  std::string well_defined, intertwines, in_der;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    const LinearMap delta = delta_unchecked(L, basis[a], PairOrder::Forward);
    const LinearMap delta_rev = delta_unchecked(L, basis[a], PairOrder::Reversed);
    if (well_defined.empty() && !(delta == delta_rev)) well_defined = map_label("TDer", a);
    for (std::size_t k = 0; k < L.dim() && intertwines.empty(); ++k)
      if (!(supercommutator(basis[a], ad_basis(L, k)).matrix() ==
            ad(L, delta.matrix().column(k)).matrix()))
        intertwines = map_label("TDer", a) + ", x=" + L.basis_names()[k];
    if (in_der.empty() && !der.contains(delta)) in_der = map_label("TDer", a);
  }
  checks.push_back(check_that("delta_well_defined", well_defined.empty(), well_defined));
  checks.push_back(check_that("commutator_is_ad_of_delta", intertwines.empty(), intertwines));
  checks.push_back(check_that("delta_is_derivation", in_der.empty(), in_der));
}

// Checks on A = Der(L) leading to TDer(A) = ad(A).
void check_derivation_algebra(const LieSuperalgebra& L, const GradedEndSpace& der,
                              TheoremOneReport& report) {
  const LieSuperalgebra A = endspace_as_superalgebra(der, "Der(" + L.name() + ")");
  const GradedEndSpace tderA = triple_derivation_space(A);
  const GradedEndSpace innerA = inner_derivation_space(A);
  report.der_of_der_tder_dims = {tderA.even_dim(), tderA.odd_dim()};
  report.der_of_der_inner_dims = {innerA.even_dim(), innerA.odd_dim()};

  const std::size_t n = L.dim();
  std::vector<Vector> ad_coords;
  std::vector<Vector> ad_columns;
  for (std::size_t i = 0; i < n; ++i) {
    const LinearMap adx = ad_basis(L, i);
    ad_coords.push_back(*der.coordinates(adx));
    ad_columns.push_back(adx.matrix().data());
  }
  const Subspace adL = Subspace::span(A.field(), A.dim(), ad_coords);
  const Matrix ad_system = Matrix::from_columns(L.field(), n * n, ad_columns);
  const auto der_basis = der.basis();
  const auto tder_basis = tderA.basis();

  std::string preserves, recovers;
  std::vector<Vector> restriction_columns;
  for (std::size_t a = 0; a < tder_basis.size(); ++a) {
    const LinearMap& D = tder_basis[a];
    Vector restricted;
    Matrix d(L.field(), n, n);
    bool d_ok = true;
    for (std::size_t k = 0; k < n; ++k) {
      const Vector image = D.apply(ad_coords[k]);
      restricted.insert(restricted.end(), image.begin(), image.end());
      if (!adL.contains(image)) {
        if (preserves.empty()) preserves = map_label("TDer(Der)", a) + ", x=" + L.basis_names()[k];
        d_ok = false;
        continue;
      }
      Matrix as_map(L.field(), n, n);
      for (std::size_t b = 0; b < image.size(); ++b)
        if (!image[b].is_zero()) as_map += der_basis[b].matrix() * image[b];
      const auto y = solve(ad_system, as_map.data());
      if (!y) {
        d_ok = false;
        continue;
      }
      for (std::size_t r = 0; r < n; ++r) d.at(r, k) = (*y)[r];
    }
    restriction_columns.push_back(std::move(restricted));
    if (!recovers.empty()) continue;
    if (!d_ok) {
      recovers = map_label("TDer(Der)", a);
      continue;
    }
    try {
      const LinearMap dmap(L.dims(), L.dims(), D.parity(), d);
      const auto coords = der.coordinates(dmap);
      if (!coords || !(ad(A, *coords).matrix() == D.matrix())) recovers = map_label("TDer(Der)", a);
    } catch (const Error&) {
      recovers = map_label("TDer(Der)", a);
    }
  }
  auto& checks = report.checks;
  checks.push_back(check_that("der_of_der_preserves_inner", preserves.empty(), preserves));
  bool injective = true;
  if (!restriction_columns.empty())
    injective = kernel(Matrix::from_columns(A.field(), n * A.dim(), restriction_columns)).is_zero();
  checks.push_back(check_that("der_of_der_zero_on_inner_is_zero", injective,
                              "a nonzero element of TDer(Der) vanishes on ad(L)"));
  checks.push_back(check_that("der_of_der_inner_by_derivation", recovers.empty(), recovers));

  const bool claim2 = tderA == innerA;
  report.claim2 = claim2 ? CheckStatus::Pass : CheckStatus::Fail;
  checks.push_back(check_that("tder_of_der_equals_inner", claim2,
                              "dim TDer(Der)=" + std::to_string(tderA.dim()) +
                                  " dim ad(Der)=" + std::to_string(innerA.dim())));
}

}  // namespace

TheoremOneReport verify_theorem_one(const LieSuperalgebra& L) {
  TheoremOneReport report;
  report.has_half = L.field().has_half();
  report.perfect = is_perfect(L);
  report.centerless = center(L).is_zero();
  if (!report.has_half) report.failed_hypotheses.push_back("has_half");
  if (!report.perfect) report.failed_hypotheses.push_back("perfect");
  if (!report.centerless) report.failed_hypotheses.push_back("centerless");
  std::string unmet;
  for (const auto& h : report.failed_hypotheses) unmet += (unmet.empty() ? "" : ",") + h;

  const GradedEndSpace der = derivation_space(L);
  const GradedEndSpace tder = triple_derivation_space(L);
  const GradedEndSpace inner = inner_derivation_space(L);
  report.der_dims = {der.even_dim(), der.odd_dim()};
  report.tder_dims = {tder.even_dim(), tder.odd_dim()};
  report.inner_dims = {inner.even_dim(), inner.odd_dim()};
  report.claim1_holds = der == tder;

  auto& checks = report.checks;
  checks.push_back(check_that("derivations_are_triple_derivations", tder.contains(der),
                              "Der is not contained in TDer"));
  if (auto p = first_unclosed_pair(tder))
    checks.push_back(fail("tder_closed_under_bracket", pair_witness(p->first, p->second)));
  else
    checks.push_back(pass("tder_closed_under_bracket"));

  if (report.perfect)
    check_inner_is_ideal(L, tder, inner, checks);
  else
    checks.push_back(not_applicable("inner_is_ideal_of_tder", "perfect"));

  if (report.perfect && report.centerless) {
    check_delta_properties(L, tder, der, checks);
  } else {
    const std::string why = report.perfect ? "centerless" : "perfect";
    checks.push_back(not_applicable("delta_well_defined", why));
    checks.push_back(not_applicable("commutator_is_ad_of_delta", why));
    checks.push_back(not_applicable("delta_is_derivation", why));
  }

  if (report.has_half && report.perfect)
    checks.push_back(check_that("centralizer_of_inner_is_zero",
                                tder_centralizer_of_inner(L).is_zero(),
                                "nonzero triple derivation commutes with ad(L)"));
  else
    checks.push_back(not_applicable("centralizer_of_inner_is_zero",
                                    report.has_half ? "perfect" : "has_half"));

  check_commutator_with_ad(L, der, checks);

  const std::string dims_witness = "dim TDer=" + std::to_string(tder.dim()) +
                                   " dim Der=" + std::to_string(der.dim());
  if (report.hypotheses_hold()) {
    report.claim1 = report.claim1_holds ? CheckStatus::Pass : CheckStatus::Fail;
    checks.push_back(check_that("tder_equals_der", report.claim1_holds, dims_witness));
    check_derivation_algebra(L, der, report);
  } else {
    checks.push_back(not_applicable("tder_equals_der",
                                    unmet + (report.claim1_holds ? "; diagnostic: TDer = Der"
                                                                 : "; diagnostic: TDer != Der (" +
                                                                       dims_witness + ")")));
    checks.push_back(not_applicable("tder_of_der_equals_inner", unmet));
  }
  return report;
}

}  // namespace superkit
