#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "superkit/derivations.hpp"
#include "superkit/triple_hom.hpp"

namespace superkit {

inline constexpr std::string_view kAlgebraFormat = "superkit-algebra/1";
inline constexpr std::string_view kMapFormat = "superkit-map/1";

/// Raised by the loader when a well-formed document violates the axioms.
class AxiomError : public Error {
 public:
  AxiomError(const std::string& what, ValidationReport report)
      : Error(ErrorKind::AxiomViolation, what), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

nlohmann::json field_to_json(const FieldSpec& field);
FieldSpec field_from_json(const nlohmann::json& j);
/// "Q", "Fp:5" or "F5".
FieldSpec parse_field(std::string_view text);

nlohmann::json algebra_to_json(const LieSuperalgebra& L);
/// Completes skew pairs, rejects conflicting ones, then validates.
/// `field_override` reinterprets coefficients in another field and refuses
/// coercions that lose information (a denominator divisible by p, a nonzero
/// coefficient reducing to zero, or leaving F_p).
LieSuperalgebra algebra_from_json(const nlohmann::json& doc,
                                  std::optional<FieldSpec> field_override = std::nullopt);

/// Canonical text: sorted keys, all nonzero ordered pairs, two-space indent.
std::string save_algebra(const LieSuperalgebra& L);
LieSuperalgebra load_algebra(std::string_view text,
                             std::optional<FieldSpec> field_override = std::nullopt);

struct MapDocument {
  std::string domain;
  std::string codomain;
  LinearMap map;
};

nlohmann::json map_to_json(const LinearMap& f, const std::string& domain,
                           const std::string& codomain);
std::string save_map(const LinearMap& f, const std::string& domain, const std::string& codomain);
/// Shapes and names are checked against the given algebras.
MapDocument load_map(std::string_view text, const LieSuperalgebra& domain,
                     const LieSuperalgebra& codomain);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

nlohmann::json matrix_to_json(const Matrix& m);
nlohmann::json subspace_to_json(const Subspace& s);
/// List of {parity, matrix} records, even maps first.
nlohmann::json endspace_to_json(const GradedEndSpace& E);
nlohmann::json checks_to_json(const std::vector<Check>& checks);
nlohmann::json validation_to_json(const LieSuperalgebra& L, const ValidationReport& report);
nlohmann::json theorem_one_to_json(const TheoremOneReport& report);
nlohmann::json triple_hom_to_json(const LieSuperalgebra& L, const TripleHomReport& report);

}  // namespace superkit
