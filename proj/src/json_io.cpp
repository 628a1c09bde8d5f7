#include "rcg/json_io.hpp"

namespace rcg {

namespace {

long long to_int64(const Int& x) {
  if (!x.fits_slong_p())
    throw Error("integer too large for JSON output: " + x.get_str());
  return x.get_si();
}

Int int_from_json(const nlohmann::json& j, const char* where) {
  if (!j.is_number_integer())
    throw ParseError(std::string("expected an integer in ") + where);
  return Int(static_cast<long>(j.get<long long>()));
}

IntMatrix rows_from_json(const nlohmann::json& j, Index expect_cols,
                         const char* where) {
  if (!j.is_array())
    throw ParseError(std::string("expected an array of rows in ") + where);
  const Index rows = static_cast<Index>(j.size());
  Index cols = expect_cols;
  if (rows > 0) {
    if (!j[0].is_array())
      throw ParseError(std::string("expected row arrays in ") + where);
    cols = static_cast<Index>(j[0].size());
    if (expect_cols >= 0 && cols != expect_cols)
      throw ParseError(std::string("row of wrong length in ") + where);
  }
  if (cols < 0) cols = 0;
  IntMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<Index>(j[i].size()) != cols)
      throw ParseError(std::string("ragged rows in ") + where);
    for (Index k = 0; k < cols; ++k) m(i, k) = int_from_json(j[i][k], where);
  }
  return m;
}

}  // namespace

nlohmann::json to_json(const FiniteAbelianGroup& g) {
  nlohmann::json factors = nlohmann::json::array();
  for (const Int& f : g.invariant_factors) factors.push_back(to_int64(f));
  return {{"free_rank", g.free_rank}, {"invariant_factors", factors}};
}

nlohmann::json to_json(const IntMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(to_int64(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json columns_to_json(const IntMatrix& m) {
  nlohmann::json cols = nlohmann::json::array();
  for (Index j = 0; j < m.cols(); ++j) {
    nlohmann::json v = nlohmann::json::array();
    for (Index i = 0; i < m.rows(); ++i) v.push_back(to_int64(m(i, j)));
    cols.push_back(std::move(v));
  }
  return cols;
}

nlohmann::json document_to_json(const RootDatum& d, const RealFormSpec* f) {
  nlohmann::json j;
  j["rank"] = d.rank;
  j["coroots"] = columns_to_json(d.coroots);
  j["roots"] = columns_to_json(d.roots);
  nlohmann::json simples = nlohmann::json::array();
  for (Index i : d.simple_indices) simples.push_back(i);
  j["simple_indices"] = std::move(simples);
  if (f != nullptr) {
    j["gamma"] = to_json(f->theta);
    if (!f->name.empty()) j["name"] = f->name;
  }
  return j;
}

std::pair<RootDatum, std::optional<RealFormSpec>> document_from_json(
    const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("group document must be a JSON object");
  if (!j.contains("rank")) throw ParseError("group document needs a 'rank'");
  Int rank_int = int_from_json(j.at("rank"), "rank");
  if (sign(rank_int) < 0 || !rank_int.fits_slong_p())
    throw ParseError("'rank' out of range");
  const Index rank = static_cast<Index>(rank_int.get_si());

  RootDatum d;
  d.rank = rank;
  auto vectors_from = [&](const char* key) {
    if (!j.contains(key)) return IntMatrix(rank, 0);
    // stored row-per-vector; transpose into columns
    IntMatrix rows = rows_from_json(j.at(key), rank, key);
    return IntMatrix(rows.transpose());
  };
  d.coroots = vectors_from("coroots");
  d.roots = vectors_from("roots");
  if (j.contains("simple_indices")) {
    if (!j.at("simple_indices").is_array())
      throw ParseError("'simple_indices' must be an array");
    for (const auto& v : j.at("simple_indices")) {
      Int idx = int_from_json(v, "simple_indices");
      if (!idx.fits_slong_p()) throw ParseError("simple index out of range");
      d.simple_indices.push_back(static_cast<Index>(idx.get_si()));
    }
  }
  d = validate(std::move(d));

  std::optional<RealFormSpec> form;
  if (j.contains("gamma")) {
    RealFormSpec f;
    f.theta = rows_from_json(j.at("gamma"), rank, "gamma");
    if (f.theta.rows() != rank)
      throw ParseError("'gamma' must be a rank x rank matrix");
    if (j.contains("name")) {
      if (!j.at("name").is_string()) throw ParseError("'name' must be a string");
      f.name = j.at("name").get<std::string>();
    }
    validate_form(d, f);
    form = std::move(f);
  }
  return {std::move(d), std::move(form)};
}

nlohmann::json pi0_to_json(const RootDatum& d, const RealFormSpec& f,
                           const Pi0Result& r) {
  nlohmann::json j;
  j["group"] = to_json(r.group);
  j["witnesses"] = columns_to_json(r.witnesses);
  j["real_rank"] = real_rank(d, f);
  j["paths_agree"] = true;
  j["datum"] = document_to_json(d, &f);
  return j;
}

}  // namespace rcg
