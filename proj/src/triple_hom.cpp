#include "superkit/triple_hom.hpp"

namespace superkit {

std::string to_string(MapClass c) {
  switch (c) {
    case MapClass::Homomorphism: return "Homomorphism";
    case MapClass::AntiHomomorphism: return "AntiHomomorphism";
    case MapClass::Both: return "Both";
    case MapClass::Neither: return "Neither";
  }
  return "Unknown";
}

std::string to_string(TripleHomVerdict v) {
  switch (v) {
    case TripleHomVerdict::NotTripleHom: return "NotTripleHom";
    case TripleHomVerdict::Homomorphism: return "Homomorphism";
    case TripleHomVerdict::AntiHomomorphism: return "AntiHomomorphism";
    case TripleHomVerdict::DirectSum: return "DirectSum";
    case TripleHomVerdict::HypothesisViolated: return "HypothesisViolated";
  }
  return "Unknown";
}

namespace {

void check_map(const LinearMap& f, const LieSuperalgebra& L, const LieSuperalgebra& target) {
  if (f.parity() != Parity::Even)
    throw Error(ErrorKind::OddMapUnsupported, "only parity-preserving maps are classified");
  if (!(f.domain() == L.dims()) || !(f.codomain() == target.dims()))
    throw Error(ErrorKind::AlgebraMismatch, "map shape does not match " + L.name() + " -> " +
                                                target.name());
  if (!(f.field() == L.field()) || !(L.field() == target.field()))
    throw Error(ErrorKind::FieldMismatch, "map and algebras over different fields");
}

std::vector<Vector> columns_of(const LinearMap& f) {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < f.domain().total(); ++j) cols.push_back(f.matrix().column(j));
  return cols;
}

Vector negated(Vector v) {
  for (auto& s : v) s = -s;
  return v;
}

}  // namespace

MapClassification classify_linear_map_detailed(const LinearMap& f, const LieSuperalgebra& L,
                                               const LieSuperalgebra& target) {
  check_map(f, L, target);
  const auto fe = columns_of(f);
  MapClassification out;
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = 0; j < L.dim(); ++j) {
      const Vector lhs = f.apply(L.bracket_basis(i, j));
      if (!out.hom_violation && !(lhs == target.bracket(fe[i], fe[j])))
        out.hom_violation = {i, j};
      if (!out.anti_violation) {
        Vector rhs = target.bracket(fe[j], fe[i]);
        if (sign_of(L.parity_bit(i), L.parity_bit(j)) < 0) rhs = negated(std::move(rhs));
        if (!(lhs == rhs)) out.anti_violation = {i, j};
      }
    }
  if (!out.hom_violation && !out.anti_violation)
    out.kind = MapClass::Both;
  else if (!out.hom_violation)
    out.kind = MapClass::Homomorphism;
  else if (!out.anti_violation)
    out.kind = MapClass::AntiHomomorphism;
  else
    out.kind = MapClass::Neither;
  return out;
}

MapClass classify_linear_map(const LinearMap& f, const LieSuperalgebra& L,
                             const LieSuperalgebra& target) {
  return classify_linear_map_detailed(f, L, target).kind;
}

std::optional<std::array<std::size_t, 3>> triple_hom_violation(const LinearMap& f,
                                                               const LieSuperalgebra& L,
                                                               const LieSuperalgebra& target) {
  check_map(f, L, target);
  const auto fe = columns_of(f);
  const std::size_t n = L.dim();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      const Vector yz = L.bracket_basis(j, k);
      const Vector fyz = target.bracket(fe[j], fe[k]);
      for (std::size_t i = 0; i < n; ++i) {
        const Vector lhs = f.apply(L.bracket(L.basis_vector(i), yz));
        if (!(lhs == target.bracket(fe[i], fyz))) return std::array<std::size_t, 3>{i, j, k};
      }
    }
  return std::nullopt;
}

bool is_triple_hom(const LinearMap& f, const LieSuperalgebra& L, const LieSuperalgebra& target) {
  return !triple_hom_violation(f, L, target).has_value();
}

EnvelopingImage enveloping_of_image(const LinearMap& f, const LieSuperalgebra& L,
                                    const LieSuperalgebra& target) {
  check_map(f, L, target);
  Subspace closure = enveloping_closure(target, map_image(f));
  LieSuperalgebra M = induced_subalgebra(target, closure, "M");
  Matrix incl = closure.basis().transpose();
  LinearMap inclusion(M.dims(), target.dims(), Parity::Even, std::move(incl));
  std::vector<Vector> cols;
  for (const auto& c : columns_of(f)) cols.push_back(*closure.coordinates(c));
  LinearMap into(L.dims(), M.dims(), Parity::Even, Matrix::from_columns(L.field(), M.dim(), cols));
  return {std::move(M), std::move(closure), std::move(inclusion), std::move(into)};
}

namespace {

LinearMap delta_f_unchecked(const LinearMap& f, const LieSuperalgebra& L,
                            const LieSuperalgebra& M, PairOrder order) {
  const auto fe = columns_of(f);
  std::vector<Vector> images;
  for (std::size_t k = 0; k < L.dim(); ++k) {
    const auto expr = express_as_brackets(L, L.basis_vector(k), order);
    Vector out = M.zero();
    for (const auto& t : expr.terms) {
      const Vector b = M.bracket(fe[t.left], fe[t.right]);
      for (std::size_t c = 0; c < out.size(); ++c) out[c].add_product(t.coefficient, b[c]);
    }
    images.push_back(std::move(out));
  }
  return LinearMap(L.dims(), M.dims(), Parity::Even,
                   Matrix::from_columns(L.field(), M.dim(), images));
}

std::string names_of(const LieSuperalgebra& L, std::initializer_list<std::size_t> idx) {
  std::string out = "(";
  for (auto i : idx) out += (out.size() > 1 ? "," : "") + L.basis_names()[i];
  return out + ")";
}

PlusMinusSplit compute_split(const LinearMap& f, const LinearMap& delta,
                             const LieSuperalgebra& M) {
  PlusMinusSplit out;
  out.plus = image(f.matrix() + delta.matrix());
  out.minus = image(f.matrix() - delta.matrix());
  out.checks.push_back(check_that("m_plus_is_ideal", is_ideal(M, out.plus),
                                  "Im(f+delta_f) is not an ideal of M"));
  out.checks.push_back(check_that("m_minus_is_ideal", is_ideal(M, out.minus),
                                  "Im(f-delta_f) is not an ideal of M"));
  out.checks.push_back(check_that("m_plus_minus_commute",
                                  bracket_of(M, out.plus, out.minus).is_zero(),
                                  "[M+, M-] != 0"));
  out.checks.push_back(check_that("m_plus_minus_trivial_intersection",
                                  out.plus.intersect(out.minus).is_zero(), "M+ and M- meet"));
  out.checks.push_back(check_that("m_plus_minus_sum_is_m", out.plus.sum(out.minus).is_full(),
                                  "M+ + M- != M"));
  return out;
}

}  // namespace

LinearMap delta_f(const LinearMap& f, const LieSuperalgebra& L, const LieSuperalgebra& M,
                  PairOrder order) {
  check_map(f, L, M);
  if (!is_perfect(L)) throw Error(ErrorKind::HypothesisViolated, "delta_f needs L perfect");
  if (!center(M).is_zero()) throw Error(ErrorKind::HypothesisViolated, "delta_f needs M centerless");
  if (auto v = triple_hom_violation(f, L, M))
    throw Error(ErrorKind::NotTripleHom, "violating triple " + names_of(L, {(*v)[0], (*v)[1], (*v)[2]}));
  return delta_f_unchecked(f, L, M, order);
}

PlusMinusSplit split_m_plus_minus(const LinearMap& f, const LinearMap& delta,
                                  const LieSuperalgebra& M) {
  if (!(f.codomain() == M.dims()) || !(delta.codomain() == M.dims()) ||
      !(f.domain() == delta.domain()))
    throw Error(ErrorKind::AlgebraMismatch, "split_m_plus_minus: maps must land in M");
  auto out = compute_split(f, delta, M);
  for (const auto& c : out.checks)
    if (!c.passed()) throw Error(ErrorKind::LemmaViolation, c.name + ": " + c.witness);
  return out;
}

TripleHomReport decompose_triple_hom(const LinearMap& f, const LieSuperalgebra& L,
                                     const LieSuperalgebra& target) {
  check_map(f, L, target);
  TripleHomReport report;
  auto& checks = report.checks;

  report.classification = classify_linear_map(f, L, target);
  report.triple_violation = triple_hom_violation(f, L, target);
  if (report.triple_violation) {
    const auto& v = *report.triple_violation;
    checks.push_back(fail("triple_hom_identity", names_of(L, {v[0], v[1], v[2]})));
    report.verdict = TripleHomVerdict::NotTripleHom;
    return report;
  }
  checks.push_back(pass("triple_hom_identity"));

  report.envelope = enveloping_of_image(f, L, target);
  const LieSuperalgebra& M = report.envelope->algebra;
  const LinearMap& fM = report.envelope->map_into;

  if (!L.field().has_half()) report.diagnostics.push_back("has_half");
  if (!is_perfect(L)) report.diagnostics.push_back("L_perfect");
  if (!center(M).is_zero()) report.diagnostics.push_back("M_centerless");
  if (!report.diagnostics.empty()) {
    report.verdict = TripleHomVerdict::HypothesisViolated;
    return report;
  }
  report.decomposition = decompose_indecomposable(M);
  if (!report.decomposition->decided()) report.diagnostics.push_back("M_decomposable");

  const LinearMap delta = delta_f_unchecked(fM, L, M, PairOrder::Forward);
  report.delta = delta;
  checks.push_back(check_that("delta_f_well_defined",
                              delta == delta_f_unchecked(fM, L, M, PairOrder::Reversed),
                              "reversed bracket ordering changes delta_f"));
  {
    std::string witness;
    for (std::size_t k = 0; k < L.dim() && witness.empty(); ++k) {
      const Matrix lhs = fM.matrix() * ad_basis(L, k).matrix();
      const Matrix rhs = ad(M, delta.matrix().column(k)).matrix() * fM.matrix();
      if (!(lhs == rhs)) witness = "x=" + L.basis_names()[k];
    }
    checks.push_back(check_that("f_ad_equals_ad_delta_f", witness.empty(), witness));
  }
  {
    const auto cls = classify_linear_map_detailed(delta, L, M);
    checks.push_back(check_that("delta_f_is_homomorphism", !cls.hom_violation,
                                cls.hom_violation ? names_of(L, {(*cls.hom_violation)[0],
                                                                 (*cls.hom_violation)[1]})
                                                  : ""));
  }

  auto split = compute_split(fM, delta, M);
  for (auto& c : split.checks) checks.push_back(c);
  report.m_plus = split.plus;
  report.m_minus = split.minus;

  const Scalar half = Scalar::one(L.field()) / Scalar(L.field(), 2L);
  const LinearMap f1M(L.dims(), M.dims(), Parity::Even, (fM.matrix() + delta.matrix()) * half);
  const LinearMap f2M(L.dims(), M.dims(), Parity::Even, (fM.matrix() - delta.matrix()) * half);

  if (split.minus.is_zero()) {
    report.verdict = TripleHomVerdict::Homomorphism;
    const auto k = report.classification;
    checks.push_back(check_that("verdict_matches_definition",
                                k == MapClass::Homomorphism || k == MapClass::Both,
                                "f fails the homomorphism identity"));
  } else if (split.plus.is_zero()) {
    report.verdict = TripleHomVerdict::AntiHomomorphism;
    const auto k = report.classification;
    checks.push_back(check_that("verdict_matches_definition",
                                k == MapClass::AntiHomomorphism || k == MapClass::Both,
                                "f fails the anti-homomorphism identity"));
  } else {
    report.verdict = TripleHomVerdict::DirectSum;
    const LinearMap& incl = report.envelope->inclusion;
    report.f1 = compose(incl, f1M);
    report.f2 = compose(incl, f2M);
    const auto c1 = classify_linear_map(*report.f1, L, target);
    const auto c2 = classify_linear_map(*report.f2, L, target);
    checks.push_back(check_that("f1_is_homomorphism",
                                c1 == MapClass::Homomorphism || c1 == MapClass::Both,
                                "f1 classified " + to_string(c1)));
    checks.push_back(check_that("f2_is_antihomomorphism",
                                c2 == MapClass::AntiHomomorphism || c2 == MapClass::Both,
                                "f2 classified " + to_string(c2)));
    checks.push_back(check_that("f_equals_f1_plus_f2",
                                report.f1->matrix() + report.f2->matrix() == f.matrix(),
                                "f1 + f2 != f"));
    checks.push_back(check_that("images_in_complementary_ideals",
                                split.plus.contains(map_image(f1M)) &&
                                    split.minus.contains(map_image(f2M)),
                                "f1(L) not in M+ or f2(L) not in M-"));
  }

  if (report.decomposition->decided()) {
    Matrix hom_part(L.field(), M.dim(), L.dim()), anti_part(L.field(), M.dim(), L.dim());
    std::string witness;
    for (std::size_t i = 0; i < report.decomposition->projections.size(); ++i) {
      const LinearMap g = compose(report.decomposition->projections[i], fM);
      const auto k = classify_linear_map(g, L, M);
      if (k == MapClass::Homomorphism || k == MapClass::Both)
        hom_part += g.matrix();
      else if (k == MapClass::AntiHomomorphism)
        anti_part += g.matrix();
      else if (witness.empty())
        witness = "p_" + std::to_string(i) + " f is neither";
    }
    if (witness.empty() && !(hom_part == f1M.matrix() && anti_part == f2M.matrix()))
      witness = "projection sums differ from (f +- delta_f)/2";
    checks.push_back(check_that("proof_route_projections_agree", witness.empty(), witness));
  } else {
    checks.push_back(not_applicable("proof_route_projections_agree", "M_decomposable"));
  }
  return report;
}

}  // namespace superkit
