#include "superkit/io.hpp"

#include <fstream>
#include <sstream>

namespace superkit {

using nlohmann::json;

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const json& require(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) parse_error(std::string("missing key '") + key + "'");
  return obj.at(key);
}

std::string coefficient_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  parse_error("coefficient must be a string or an integer");
}

std::vector<std::string> name_list(const json& v, const char* key) {
  if (!v.is_array()) parse_error(std::string("'") + key + "' must be an array of names");
  std::vector<std::string> out;
  for (const auto& s : v) {
    if (!s.is_string()) parse_error(std::string("'") + key + "' must be an array of names");
    out.push_back(s.get<std::string>());
  }
  return out;
}

// Parses a coefficient written over `source` into `target`.
Scalar coerce(const std::string& text, const FieldSpec& source, const FieldSpec& target) {
  if (source == target) return Scalar::parse(target, text);
  if (!source.is_rationals())
    throw Error(ErrorKind::BadParams, "refusing to coerce " + source.to_string() + " into " +
                                          target.to_string());
  const Scalar q = Scalar::parse(source, text);
  Scalar out = Scalar::zero(target);
  try {
    out = Scalar(target, q.rational());
  } catch (const Error&) {
    throw Error(ErrorKind::BadParams, "coefficient " + text + " has no image in " +
                                          target.to_string());
  }
  if (out.is_zero() && !q.is_zero())
    throw Error(ErrorKind::BadParams, "coefficient " + text + " vanishes in " +
                                          target.to_string() + "; refusing lossy coercion");
  return out;
}

}  // namespace

json field_to_json(const FieldSpec& field) {
  if (field.is_rationals()) return json{{"kind", "Q"}};
  return json{{"kind", "Fp"}, {"p", field.p()}};
}

FieldSpec field_from_json(const json& j) {
  const auto& kind = require(j, "kind");
  if (kind == "Q") return FieldSpec::rationals();
  if (kind == "Fp") {
    const auto& p = require(j, "p");
    if (!p.is_number_unsigned() && !p.is_number_integer()) parse_error("field 'p' must be an integer");
    const long long value = p.get<long long>();
    if (value < 2) parse_error("field 'p' must be a prime");
    try {
      return FieldSpec::prime(static_cast<std::uint64_t>(value));
    } catch (const Error& e) {
      parse_error(e.what());
    }
  }
  parse_error("unknown field kind");
}

FieldSpec parse_field(std::string_view text) {
  if (text == "Q") return FieldSpec::rationals();
  std::string_view digits;
  if (text.rfind("Fp:", 0) == 0)
    digits = text.substr(3);
  else if (text.rfind("F", 0) == 0)
    digits = text.substr(1);
  else
    throw Error(ErrorKind::BadParams, "unknown field '" + std::string(text) + "'");
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos ||
      digits.size() > 10)
    throw Error(ErrorKind::BadParams, "unknown field '" + std::string(text) + "'");
  return FieldSpec::prime(std::stoull(std::string(digits)));
}

json algebra_to_json(const LieSuperalgebra& L) {
  json brackets = json::object();
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = 0; j < L.dim(); ++j) {
      json entry = json::object();
      for (std::size_t k = 0; k < L.dim(); ++k)
        if (!L.constant(i, j, k).is_zero())
          entry[L.basis_names()[k]] = L.constant(i, j, k).to_string();
      if (!entry.empty()) brackets[L.basis_names()[i] + "," + L.basis_names()[j]] = entry;
    }
  const auto& names = L.basis_names();
  return json{{"format", kAlgebraFormat},
              {"name", L.name()},
              {"field", field_to_json(L.field())},
              {"even", std::vector<std::string>(names.begin(), names.begin() + L.even_dim())},
              {"odd", std::vector<std::string>(names.begin() + L.even_dim(), names.end())},
              {"brackets", brackets}};
}

LieSuperalgebra algebra_from_json(const json& doc, std::optional<FieldSpec> field_override) {
  if (!doc.is_object()) parse_error("algebra document must be a JSON object");
  if (require(doc, "format") != kAlgebraFormat) parse_error("unsupported algebra format");
  const auto& name = require(doc, "name");
  if (!name.is_string()) parse_error("'name' must be a string");
  const FieldSpec source = field_from_json(require(doc, "field"));
  const FieldSpec field = field_override.value_or(source);

  LieSuperalgebra L;
  try {
    L = LieSuperalgebra::with_zero_table(name.get<std::string>(), field,
                                         name_list(require(doc, "even"), "even"),
                                         name_list(require(doc, "odd"), "odd"));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ShapeError) parse_error(e.what());
    throw;
  }
  const auto& brackets = require(doc, "brackets");
  if (!brackets.is_object()) parse_error("'brackets' must be an object");

  const std::size_t n = L.dim();
  std::vector<bool> given(n * n, false);
  for (const auto& [key, value] : brackets.items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos) parse_error("bracket key '" + key + "' is not 'a,b'");
    const auto a = L.index_of(key.substr(0, comma));
    const auto b = L.index_of(key.substr(comma + 1));
    if (!a || !b) parse_error("bracket key '" + key + "' names an unknown basis element");
    if (!value.is_object()) parse_error("bracket '" + key + "' must map names to coefficients");
    if (given[*a * n + *b]) parse_error("bracket '" + key + "' given twice");
    given[*a * n + *b] = true;
    for (const auto& [target, coeff] : value.items()) {
      const auto k = L.index_of(target);
      if (!k) parse_error("bracket '" + key + "' names unknown element '" + target + "'");
      L.set_constant(*a, *b, *k, coerce(coefficient_text(coeff), source, field));
    }
  }
  // Skew completion; pairs listed both ways must agree.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const bool flip = L.parity_bit(a) & L.parity_bit(b);
      if (given[a * n + b] && given[b * n + a]) {
        for (std::size_t k = 0; k < n; ++k) {
          const Scalar expected = flip ? L.constant(a, b, k) : -L.constant(a, b, k);
          if (!(L.constant(b, a, k) == expected))
            throw Error(ErrorKind::SkewConflict, "[" + L.basis_names()[a] + "," +
                                                     L.basis_names()[b] + "] and [" +
                                                     L.basis_names()[b] + "," +
                                                     L.basis_names()[a] + "] disagree");
        }
      } else if (given[a * n + b] || given[b * n + a]) {
        const std::size_t from = given[a * n + b] ? a : b, to = from == a ? b : a;
        for (std::size_t k = 0; k < n; ++k) {
          const Scalar& c = L.constant(from, to, k);
          L.set_constant(to, from, k, flip ? c : -c);
        }
      }
    }
  auto report = validate_structure(L);
  if (!report.valid())
    throw AxiomError(std::to_string(report.violations.size()) + " axiom violation(s) in " +
                         L.name(),
                     std::move(report));
  return L;
}

std::string save_algebra(const LieSuperalgebra& L) { return algebra_to_json(L).dump(2) + "\n"; }

LieSuperalgebra load_algebra(std::string_view text, std::optional<FieldSpec> field_override) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    parse_error(e.what());
  }
  try {
    return algebra_from_json(doc, field_override);
  } catch (const json::exception& e) {
    parse_error(e.what());
  }
}

json map_to_json(const LinearMap& f, const std::string& domain, const std::string& codomain) {
  return json{{"format", kMapFormat},
              {"domain", domain},
              {"codomain", codomain},
              {"parity", to_string(f.parity())},
              {"matrix", matrix_to_json(f.matrix())}};
}

std::string save_map(const LinearMap& f, const std::string& domain, const std::string& codomain) {
  return map_to_json(f, domain, codomain).dump(2) + "\n";
}

MapDocument load_map(std::string_view text, const LieSuperalgebra& domain,
                     const LieSuperalgebra& codomain) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    parse_error(e.what());
  }
  if (!doc.is_object() || require(doc, "format") != kMapFormat) parse_error("unsupported map format");
  MapDocument out;
  const auto& dom = require(doc, "domain");
  const auto& cod = require(doc, "codomain");
  if (!dom.is_string() || !cod.is_string()) parse_error("map 'domain'/'codomain' must be names");
  out.domain = dom.get<std::string>();
  out.codomain = cod.get<std::string>();
  if (out.domain != domain.name() || out.codomain != codomain.name())
    throw Error(ErrorKind::AlgebraMismatch, "map is " + out.domain + " -> " + out.codomain +
                                                ", algebras are " + domain.name() + " -> " +
                                                codomain.name());
  const auto& parity = require(doc, "parity");
  if (parity != "even" && parity != "odd") parse_error("map parity must be 'even' or 'odd'");
  const auto& rows = require(doc, "matrix");
  if (!rows.is_array() || rows.size() != codomain.dim())
    parse_error("map matrix must have one row per codomain basis element");
  if (!(domain.field() == codomain.field()))
    throw Error(ErrorKind::FieldMismatch, "domain and codomain fields differ");
  Matrix m(domain.field(), codomain.dim(), domain.dim());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].is_array() || rows[r].size() != domain.dim())
      parse_error("map matrix must have one column per domain basis element");
    for (std::size_t c = 0; c < domain.dim(); ++c)
      m.at(r, c) = Scalar::parse(domain.field(), coefficient_text(rows[r][c]));
  }
  try {
    out.map = LinearMap(domain.dims(), codomain.dims(),
                        parity == "odd" ? Parity::Odd : Parity::Even, std::move(m));
  } catch (const Error& e) {
    parse_error(e.what());
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path.string());
  out << text;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

json subspace_to_json(const Subspace& s) {
  return json{{"dim", s.dim()}, {"ambient_dim", s.ambient_dim()}, {"basis", matrix_to_json(s.basis())}};
}

json endspace_to_json(const GradedEndSpace& E) {
  json out = json::array();
  for (const auto& m : E.basis())
    out.push_back(json{{"parity", to_string(m.parity())}, {"matrix", matrix_to_json(m.matrix())}});
  return out;
}

json checks_to_json(const std::vector<Check>& checks) {
  json out = json::array();
  for (const auto& c : checks) {
    json rec{{"name", c.name}, {"status", to_string(c.status)}};
    if (!c.witness.empty()) rec["witness"] = c.witness;
    out.push_back(std::move(rec));
  }
  return out;
}

json validation_to_json(const LieSuperalgebra& L, const ValidationReport& report) {
  json out = json::array();
  for (const auto& v : report.violations)
    out.push_back(json{{"axiom", to_string(v.kind)},
                       {"triple", {L.basis_names()[v.i], L.basis_names()[v.j], L.basis_names()[v.k]}},
                       {"indices", {v.i, v.j, v.k}}});
  return out;
}

namespace {

json dims_json(const GradedDims& d) { return json{{"even", d.even}, {"odd", d.odd}}; }

}  // namespace

json theorem_one_to_json(const TheoremOneReport& r) {
  return json{{"hypotheses",
               {{"has_half", r.has_half}, {"perfect", r.perfect}, {"centerless", r.centerless}}},
              {"failed_hypotheses", r.failed_hypotheses},
              {"dims",
               {{"der", dims_json(r.der_dims)},
                {"tder", dims_json(r.tder_dims)},
                {"inner", dims_json(r.inner_dims)},
                {"tder_of_der", dims_json(r.der_of_der_tder_dims)},
                {"ad_of_der", dims_json(r.der_of_der_inner_dims)}}},
              {"claim1", to_string(r.claim1)},
              {"claim1_holds_diagnostic", r.claim1_holds},
              {"claim2", to_string(r.claim2)},
              {"checks", checks_to_json(r.checks)}};
}

json triple_hom_to_json(const LieSuperalgebra& L, const TripleHomReport& r) {
  json out{{"verdict", to_string(r.verdict)},
           {"classification", to_string(r.classification)},
           {"checks", checks_to_json(r.checks)},
           {"diagnostics", r.diagnostics}};
  if (r.triple_violation) {
    const auto& v = *r.triple_violation;
    out["violating_triple"] = {L.basis_names()[v[0]], L.basis_names()[v[1]], L.basis_names()[v[2]]};
  }
  if (r.envelope) {
    out["M"] = algebra_to_json(r.envelope->algebra);
    out["M_in_codomain"] = subspace_to_json(r.envelope->subspace);
  }
  if (r.delta) out["delta_f"] = matrix_to_json(r.delta->matrix());
  if (r.m_plus) out["M_plus"] = subspace_to_json(*r.m_plus);
  if (r.m_minus) out["M_minus"] = subspace_to_json(*r.m_minus);
  if (r.f1) out["f1"] = matrix_to_json(r.f1->matrix());
  if (r.f2) out["f2"] = matrix_to_json(r.f2->matrix());
  if (r.decomposition) {
    json ideals = json::array();
    for (const auto& s : r.decomposition->ideals) ideals.push_back(s.dim());
    out["M_decomposition"] = {{"status", r.decomposition->decided() ? "decomposed" : "undecided"},
                              {"ideal_dims", ideals}};
  }
  return out;
}

}  // namespace superkit
