// Algebra spec files: a single JSON document with exact string coefficients,
// consumed by the CLI and produced by the zoo constructors.
#pragma once

#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "trideco/bundle.hpp"

namespace trideco {

using Json = nlohmann::json;

// "Q", "Fp:<p>", "Cyclotomic:<n>"
inline std::variant<RationalField, PrimeField, CyclotomicField> parse_field_descriptor(
    const std::string& name) {
  if (name == "Q") return RationalField{};
  if (name.rfind("Fp:", 0) == 0) {
    try {
      return PrimeField(std::stoll(name.substr(3)));
    } catch (const std::invalid_argument&) {
      throw input_error("bad field descriptor: " + name);
    }
  }
  if (name.rfind("Cyclotomic:", 0) == 0) {
    try {
      return CyclotomicField(std::stoll(name.substr(11)));
    } catch (const std::invalid_argument&) {
      throw input_error("bad field descriptor: " + name);
    }
  }
  throw input_error("unknown field descriptor: " + name);
}

namespace spec_detail {

inline int to_index(const std::string& key, int n, const char* what) {
  int i;
  try {
    i = std::stoi(key);
  } catch (const std::exception&) {
    throw input_error(std::string("bad index in ") + what + ": " + key);
  }
  if (i < 0 || i >= n) throw input_error(std::string("index out of range in ") + what);
  return i;
}

template <class F>
Vec<F> parse_sparse_vec(const F& field, const Json& j, int n, const char* what) {
  Vec<F> v = zero_vec(field, n);
  if (!j.is_object()) throw input_error(std::string(what) + " must be a sparse object");
  for (auto it = j.begin(); it != j.end(); ++it)
    v[to_index(it.key(), n, what)] = field.parse(it.value().template get<std::string>());
  return v;
}

template <class F>
Json sparse_vec_to_json(const F& field, const Vec<F>& v) {
  Json j = Json::object();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) j[std::to_string(i)] = field.print(v[i]);
  return j;
}

template <class F>
DenseMatrix<F> parse_matrix(const F& field, const Json& j, const char* what) {
  if (!j.is_array() || j.empty()) throw input_error(std::string(what) + " must be a matrix");
  int rows = static_cast<int>(j.size());
  int cols = static_cast<int>(j[0].size());
  DenseMatrix<F> m(field, rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(j[r].size()) != cols)
      throw input_error(std::string(what) + " has ragged rows");
    for (int c = 0; c < cols; ++c) m.at(r, c) = field.parse(j[r][c].template get<std::string>());
  }
  return m;
}

template <class F>
Json matrix_to_json(const F& field, const DenseMatrix<F>& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(field.print(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

// a basis section: either a list of indices or a list of sparse vectors
template <class F>
std::vector<Vec<F>> parse_basis(const F& field, const Json& j, int n, const char* what) {
  std::vector<Vec<F>> out;
  if (!j.is_array()) throw input_error(std::string(what) + " must be an array");
  for (const auto& entry : j) {
    if (entry.is_number_integer()) {
      int i = entry.template get<int>();
      if (i < 0 || i >= n) throw input_error(std::string(what) + " index out of range");
      out.push_back(unit_vec(field, n, i));
    } else {
      out.push_back(parse_sparse_vec(field, entry, n, what));
    }
  }
  return out;
}

}  // namespace spec_detail

template <class F>
Bundle<F> bundle_from_json_typed(const F& field, const Json& j) {
  using namespace spec_detail;
  if (!j.contains("dim") || !j.contains("degrees") || !j.contains("unit") ||
      !j.contains("structure"))
    throw input_error("spec file needs dim, degrees, unit, structure");
  Bundle<F> z;
  z.name = j.value("name", std::string("algebra"));
  GradedAlgebra<F> A;
  A.field = field;
  A.n = j.at("dim").get<int>();
  if (A.n < 0) throw input_error("negative dimension");
  A.deg = j.at("degrees").get<std::vector<int>>();
  if (static_cast<int>(A.deg.size()) != A.n) throw input_error("degrees length != dim");
  A.unit = parse_sparse_vec(field, j.at("unit"), A.n, "unit");
  A.sc.assign(A.n, std::vector<SparseVec<F>>(A.n));
  for (const auto& triple : j.at("structure")) {
    if (!triple.is_array() || triple.size() != 3)
      throw input_error("structure entries must be [i, j, {k: coeff}]");
    int i = triple[0].get<int>(), jj = triple[1].get<int>();
    if (i < 0 || i >= A.n || jj < 0 || jj >= A.n) throw input_error("structure index out of range");
    Vec<F> v = parse_sparse_vec(field, triple[2], A.n, "structure");
    A.sc[i][jj] = dense_to_sparse<F>(v);
  }
  if (j.contains("basis_names")) A.basis_names = j.at("basis_names").get<std::vector<std::string>>();
  z.alg = std::make_shared<const GradedAlgebra<F>>(std::move(A));

  if (j.contains("triangular")) {
    const Json& t = j.at("triangular");
    auto am = parse_basis(field, t.at("aminus"), z.alg->n, "aminus");
    auto tt = parse_basis(field, t.at("t"), z.alg->n, "t");
    auto ap = parse_basis(field, t.at("aplus"), z.alg->n, "aplus");
    std::vector<TModule<F>> irr;
    std::vector<std::string> labels;
    if (j.contains("irr_T")) {
      for (const auto& rep : j.at("irr_T")) {
        TModule<F> m;
        m.dim = rep.at("dim").get<int>();
        m.deg.assign(m.dim, 0);
        for (const auto& act : rep.at("action"))
          m.act.push_back(parse_matrix(field, act, "irr_T action"));
        if (m.act.size() != tt.size()) throw input_error("irr_T action length != dim T");
        irr.push_back(std::move(m));
        if (rep.contains("label")) labels.push_back(rep.at("label").get<std::string>());
      }
    }
    if (!labels.empty() && labels.size() != irr.size())
      throw input_error("irr_T labels are incomplete");
    bool sst = j.value("semisimple_t", true);
    z.td = build_triangular(z.alg, am, tt, ap, irr, sst, labels);
    z.has_triangular = true;
  }
  if (j.contains("anti_involution"))
    z.tau = parse_matrix(field, j.at("anti_involution"), "anti_involution");
  if (j.contains("frobenius_hint")) {
    const Json& h = j.at("frobenius_hint");
    z.frobenius_hint = {h.at("degree").get<int>(),
                        parse_sparse_vec(field, h.at("functional"), z.alg->n, "frobenius_hint")};
  }
  if (j.contains("ci_plus")) {
    CIPresentation ci;
    ci.gen_degrees = j.at("ci_plus").at("generators").get<std::vector<int>>();
    ci.rel_degrees = j.at("ci_plus").at("relations").get<std::vector<int>>();
    z.ci_plus = ci;
  }
  return z;
}

template <class F>
Json bundle_to_json(const Bundle<F>& z) {
  using namespace spec_detail;
  const F& field = z.alg->field;
  Json j;
  j["name"] = z.name;
  j["field"] = field.name();
  j["dim"] = z.alg->n;
  j["degrees"] = z.alg->deg;
  j["unit"] = sparse_vec_to_json(field, z.alg->unit);
  Json structure = Json::array();
  for (int a = 0; a < z.alg->n; ++a)
    for (int b = 0; b < z.alg->n; ++b) {
      if (z.alg->sc[a][b].empty()) continue;
      Json cell = Json::object();
      for (const auto& [k, c] : z.alg->sc[a][b]) cell[std::to_string(k)] = field.print(c);
      structure.push_back(Json::array({a, b, cell}));
    }
  j["structure"] = std::move(structure);
  if (!z.alg->basis_names.empty()) j["basis_names"] = z.alg->basis_names;
  if (z.has_triangular) {
    Json t;
    auto basis_json = [&](const std::vector<Vec<F>>& basis) {
      Json arr = Json::array();
      for (const auto& v : basis) arr.push_back(sparse_vec_to_json(field, v));
      return arr;
    };
    t["aminus"] = basis_json(z.td.am);
    t["t"] = basis_json(z.td.tt);
    t["aplus"] = basis_json(z.td.ap);
    j["triangular"] = std::move(t);
    Json irr = Json::array();
    for (int s = 0; s < z.td.num_labels(); ++s) {
      Json rep;
      rep["dim"] = z.td.irr_t[s].dim;
      rep["label"] = z.td.label(s);
      Json acts = Json::array();
      for (const auto& m : z.td.irr_t[s].act) acts.push_back(matrix_to_json(field, m));
      rep["action"] = std::move(acts);
      irr.push_back(std::move(rep));
    }
    j["irr_T"] = std::move(irr);
    j["semisimple_t"] = z.td.semisimple_t;
  }
  if (z.tau) j["anti_involution"] = matrix_to_json(field, *z.tau);
  if (z.frobenius_hint) {
    j["frobenius_hint"] = {{"degree", z.frobenius_hint->first},
                           {"functional", sparse_vec_to_json(field, z.frobenius_hint->second)}};
  }
  if (z.ci_plus) {
    j["ci_plus"] = {{"generators", z.ci_plus->gen_degrees}, {"relations", z.ci_plus->rel_degrees}};
  }
  return j;
}

using AnyBundle = std::variant<Bundle<RationalField>, Bundle<PrimeField>, Bundle<CyclotomicField>>;

inline AnyBundle bundle_from_json(const Json& j) {
  if (!j.contains("field")) throw input_error("spec file is missing the field descriptor");
  auto fd = parse_field_descriptor(j.at("field").get<std::string>());
  return std::visit([&](auto field) -> AnyBundle { return bundle_from_json_typed(field, j); }, fd);
}

inline Json parse_spec_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw input_error("spec file is not valid JSON");
  return j;
}

// ---------------------------------------------------------------------------
// Module serialization (degrees + one sparse action matrix per basis index)
// ---------------------------------------------------------------------------

template <class F>
Json module_to_json(const GradedModule<F>& M) {
  const F& field = M.alg->field;
  Json j;
  j["degrees"] = M.deg;
  Json acts = Json::array();
  for (const auto& m : M.act) {
    Json triples = Json::array();
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c)
        if (!m.at(r, c).is_zero())
          triples.push_back(Json::array({r, c, field.print(m.at(r, c))}));
    acts.push_back(std::move(triples));
  }
  j["action"] = std::move(acts);
  return j;
}

template <class F>
GradedModule<F> module_from_json(std::shared_ptr<const GradedAlgebra<F>> alg, const Json& j) {
  const F& field = alg->field;
  GradedModule<F> M;
  M.alg = alg;
  M.deg = j.at("degrees").get<std::vector<int>>();
  M.dim = static_cast<int>(M.deg.size());
  const Json& acts = j.at("action");
  if (static_cast<int>(acts.size()) != alg->n)
    throw input_error("module action list length != algebra dimension");
  for (const auto& triples : acts) {
    DenseMatrix<F> m(field, M.dim, M.dim);
    for (const auto& t : triples)
      m.at(t[0].get<int>(), t[1].get<int>()) = field.parse(t[2].get<std::string>());
    M.act.push_back(std::move(m));
  }
  return M;
}

// Laurent polynomials as {"exp": coeff} with decimal integer keys.
inline Json laurent_to_json(const LaurentPoly& p) {
  Json j = Json::object();
  for (const auto& [e, c] : p.coeffs()) j[std::to_string(e)] = c;
  return j;
}

inline LaurentPoly laurent_from_json(const Json& j) {
  LaurentPoly p;
  for (auto it = j.begin(); it != j.end(); ++it)
    p.add_term(std::stoi(it.key()), it.value().get<std::int64_t>());
  return p;
}

}  // namespace trideco
