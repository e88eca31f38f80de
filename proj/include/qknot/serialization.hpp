#pragma once

/**
 * @file serialization.hpp
 * @brief JSON and CSV forms of series, tables, cyclotomic integers, ADO
 *        polynomials, knot combinations and check reports. Integers are
 *        written as decimal strings so no precision is lost.
 */

#include <json.hpp>
#include <string>

#include "qknot/coefficients.hpp"
#include "qknot/cyclotomic.hpp"
#include "qknot/knots.hpp"
#include "qknot/laurent.hpp"
#include "qknot/oracles.hpp"
#include "qknot/series.hpp"
#include "qknot/table.hpp"
#include "qknot/vassiliev.hpp"

namespace qknot {

using Json = nlohmann::ordered_json;

/// {"D": int, "coeffs": [[n, m, "<decimal>"], ...]}
Json series_to_json(const BivariateSeries& s);
BivariateSeries series_from_json(const Json& j);

/// b and c tables use the series layout; d and CL add "kind", "r" and use "M".
Json table_to_json(const CoefficientTable& t);
CoefficientTable table_from_json(const Json& j);
/// Columns n,m,value (b, c, d) or j,i,m,value (CL).
std::string table_to_csv(const CoefficientTable& t);

/// {"conductor": int, "coords": ["<decimal>", ...]}
Json cyclotomic_to_json(const CyclotomicInt& c);
CyclotomicInt cyclotomic_from_json(const Json& j);

/// {"r": int, "terms": [[exp, {cyclotomic}], ...]}
Json ado_to_json(const AdoPolynomial& a);
AdoPolynomial ado_from_json(const Json& j);

/// {"variable": "q"|"t"|"q^alpha", "terms": [[exp, "<decimal>"], ...]}
Json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);
/// Columns exponent,value.
std::string laurent_to_csv(const LaurentPoly& p);

/// [{"braid": "1 1 1", "strands": 2, "coeff": "-2"}, ...]
Json combination_to_json(const KnotCombination& c);
KnotCombination combination_from_json(const Json& j);

Json report_to_json(const CheckReport& r);
Json report_to_json(const VassilievReport& r);

}  // namespace qknot
