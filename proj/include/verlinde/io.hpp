#pragma once

#include <string>

#include "json.hpp"
#include "verlinde/errors.hpp"
#include "verlinde/jumping.hpp"
#include "verlinde/pencil.hpp"
#include "verlinde/poly_io.hpp"
#include "verlinde/schubert.hpp"

namespace verlinde {

/// Integers that fit in 64 bits are written as JSON numbers, larger ones as decimal strings.
inline Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(to_string(z));
}

inline Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Rational r = parse_rational(j.get<std::string>());
    if (r.get_den() != 1) throw ParseError("expected an integer, got " + j.get<std::string>());
    return r.get_num();
  }
  throw ParseError("expected an integer, got " + j.dump());
}

// --- Pencil: {"w":..., "u":..., "A": [[frac strings]], "B": [[...]]} -------

namespace detail {
inline Json matrix_json(const ExactMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline ExactMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const char* name) {
  if (!j.is_array() || j.size() != rows)
    throw ParseError(std::string("pencil JSON: ") + name + " must have " + std::to_string(rows) + " rows");
  ExactMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw ParseError(std::string("pencil JSON: row ") + std::to_string(i) + " of " + name + " must have " +
                       std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) {
      const Json& e = j[i][c];
      if (e.is_string())
        m(i, c) = parse_rational(e.get<std::string>());
      else if (e.is_number_integer())
        m(i, c) = Rational(e.get<long>());
      else
        throw ParseError(std::string("pencil JSON: entry of ") + name + " must be a fraction string");
    }
  }
  return m;
}
}  // namespace detail

inline Json to_json(const Pencil& p) {
  return Json{{"w", p.w()}, {"u", p.u()}, {"A", detail::matrix_json(p.a())}, {"B", detail::matrix_json(p.b())}};
}

inline Pencil pencil_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("w") || !j.contains("u") || !j.contains("A") || !j.contains("B"))
    throw ParseError("pencil JSON needs keys w, u, A, B");
  const auto w = j["w"].get<std::size_t>();
  const auto u = j["u"].get<std::size_t>();
  return Pencil(detail::matrix_from_json(j["A"], w, u, "A"), detail::matrix_from_json(j["B"], w, u, "B"));
}

// --- SplittingType: {"entries": [...]} -------------------------------------

inline Json to_json(const SplittingType& t) { return Json{{"entries", t.entries()}}; }

inline SplittingType splitting_type_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array())
    throw ParseError("splitting type JSON needs an entries array");
  try {
    return SplittingType(j["entries"].get<std::vector<int>>());
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

// --- SchubertClass: {"N":..., "terms":[{"a":..,"b":..,"c":..}]} -----------

inline Json to_json(const SchubertClass& x) {
  Json terms = Json::array();
  for (const auto& [idx, c] : x.terms()) terms.push_back(Json{{"a", idx.first}, {"b", idx.second}, {"c", integer_json(c)}});
  return Json{{"N", x.context().N}, {"terms", terms}};
}

inline SchubertClass schubert_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("N") || !j.contains("terms") || !j["terms"].is_array())
    throw ParseError("Schubert class JSON needs keys N, terms");
  SchubertClass x{GrContext(j["N"].get<int>())};
  for (const auto& t : j["terms"]) {
    try {
      x.add(t.at("a").get<int>(), t.at("b").get<int>(), integer_from_json(t.at("c")));
    } catch (const PreconditionError& e) {
      throw ParseError(e.what());
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("Schubert term: ") + e.what());
    }
  }
  return x;
}

// --- JumpingClassReport -----------------------------------------------------

inline Json to_json(const RawTerm& t) { return Json{{"a", t.a}, {"b", t.b}, {"c", integer_json(t.c)}}; }

inline Json to_json(const EvaluatedClass& e) {
  Json j = to_json(e.cls);
  j["dim_z"] = e.dim_z;
  j["codim"] = e.codim;
  Json oor = Json::array();
  for (const auto& t : e.out_of_range) oor.push_back(to_json(t));
  j["out_of_range"] = oor;
  j["middle_term"] = e.middle_term ? to_json(*e.middle_term) : Json(nullptr);
  return j;
}

inline Json to_json(const JumpingClassReport& r) {
  Json pairings = Json::array();
  for (const auto& p : r.pushpull.pairings)
    pairings.push_back(Json{{"a", p.a},
                            {"b", p.b},
                            {"bidegree", integer_json(p.bidegree)},
                            {"closed_form", integer_json(p.closed_form)}});
  Json pushpull = to_json(r.pushpull.evaluated);
  pushpull["pairings"] = pairings;

  Json table = Json::array();
  for (const auto& row : r.table)
    table.push_back(Json{{"a", row.a},
                         {"b", row.b},
                         {"theorem", integer_json(row.theorem)},
                         {"pushpull", integer_json(row.pushpull)},
                         {"equal", row.equal},
                         {"middle", row.middle}});

  return Json{{"n", r.n},
              {"d", r.d},
              {"N", r.big_n},
              {"dim_z", Json{{"paper", r.dim_z_paper}, {"oracle", r.dim_z_oracle}, {"mismatch", r.dim_z_paper != r.dim_z_oracle}}},
              {"class_theorem",
               Json{{"paper", r.theorem_at_paper ? to_json(*r.theorem_at_paper) : Json(nullptr)},
                    {"oracle", to_json(r.theorem_at_oracle)}}},
              {"class_pushpull", pushpull},
              {"coefficient_table", table},
              {"dim_q_prime_identity", r.dim_q_prime_identity},
              {"flags", r.flags}};
}

}  // namespace verlinde
