#include "qknot/serialization.hpp"

#include <sstream>

#include "qknot/errors.hpp"

namespace qknot {

namespace {

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  } catch (const Error& e) {
    // out-of-range keys and bad decimals are malformed documents too
    if (e.code() == ErrorCode::InvalidArgument) throw Error(ErrorCode::ParseError, e.what());
    throw;
  }
}

Variable variable_from_name(const std::string& name) {
  if (name == "q") return Variable::q;
  if (name == "t") return Variable::t;
  if (name == variable_name(Variable::qa)) return Variable::qa;
  throw Error(ErrorCode::ParseError, "unknown variable '" + name + "'");
}

}  // namespace

Json series_to_json(const BivariateSeries& s) {
  Json coeffs = Json::array();
  for (const auto& t : s.terms()) coeffs.push_back(Json::array({t.n, t.m, to_decimal(t.value)}));
  return Json{{"D", s.order()}, {"coeffs", std::move(coeffs)}};
}

BivariateSeries series_from_json(const Json& j) {
  return guarded([&] {
    BivariateSeries s(j.at("D").get<int>());
    for (const auto& e : j.at("coeffs")) s.set(e.at(0).get<int>(), e.at(1).get<int>(), from_decimal(e.at(2).get<std::string>()));
    return s;
  });
}

Json table_to_json(const CoefficientTable& t) {
  Json coeffs = Json::array();
  for (const auto& [key, v] : t.entries) {
    Json row = Json::array();
    for (int k : key) row.push_back(k);
    row.push_back(to_decimal(v));
    coeffs.push_back(std::move(row));
  }
  if (t.kind == TableKind::b) return Json{{"D", t.order}, {"coeffs", std::move(coeffs)}};
  Json out{{"kind", to_string(t.kind)}, {"r", t.r}};
  out[t.kind == TableKind::c ? "D" : "M"] = t.order;
  if (t.kind == TableKind::CL) out["J"] = t.levels;
  out["coeffs"] = std::move(coeffs);
  return out;
}

CoefficientTable table_from_json(const Json& j) {
  return guarded([&] {
    CoefficientTable t;
    const std::string kind = j.value("kind", std::string("b"));
    if (kind == "b") {
      t.kind = TableKind::b;
    } else if (kind == "c") {
      t.kind = TableKind::c;
    } else if (kind == "d") {
      t.kind = TableKind::d;
    } else if (kind == "CL") {
      t.kind = TableKind::CL;
    } else {
      throw Error(ErrorCode::ParseError, "unknown table kind '" + kind + "'");
    }
    t.r = j.value("r", 0);
    t.order = j.contains("D") ? j.at("D").get<int>() : j.at("M").get<int>();
    t.levels = j.value("J", 0);
    const std::size_t arity = t.kind == TableKind::CL ? 3 : 2;
    for (const auto& e : j.at("coeffs")) {
      if (e.size() != arity + 1) throw Error(ErrorCode::ParseError, "table row has the wrong length");
      std::vector<int> key;
      for (std::size_t k = 0; k < arity; ++k) key.push_back(e.at(k).get<int>());
      t.set(std::move(key), from_decimal(e.at(arity).get<std::string>()));
    }
    return t;
  });
}

std::string table_to_csv(const CoefficientTable& t) {
  std::ostringstream os;
  os << (t.kind == TableKind::CL ? "j,i,m,value\n" : "n,m,value\n");
  for (const auto& [key, v] : t.entries) {
    for (int k : key) os << k << ",";
    os << v.get_str() << "\n";
  }
  return os.str();
}

Json cyclotomic_to_json(const CyclotomicInt& c) {
  Json coords = Json::array();
  for (const auto& x : c.coords()) coords.push_back(to_decimal(x));
  return Json{{"conductor", c.conductor()}, {"coords", std::move(coords)}};
}

CyclotomicInt cyclotomic_from_json(const Json& j) {
  return guarded([&] {
    std::vector<Int> coords;
    for (const auto& x : j.at("coords")) coords.push_back(from_decimal(x.get<std::string>()));
    const int conductor = j.at("conductor").get<int>();
    if (static_cast<long>(coords.size()) != euler_phi(conductor))
      throw Error(ErrorCode::ParseError, "coordinate count differs from phi(conductor)");
    return CyclotomicInt::from_coords(conductor, std::move(coords));
  });
}

Json ado_to_json(const AdoPolynomial& a) {
  Json terms = Json::array();
  for (const auto& [e, c] : a.terms) terms.push_back(Json::array({e, cyclotomic_to_json(c)}));
  return Json{{"r", a.r}, {"terms", std::move(terms)}};
}

AdoPolynomial ado_from_json(const Json& j) {
  return guarded([&] {
    AdoPolynomial a;
    a.r = j.at("r").get<int>();
    for (const auto& e : j.at("terms")) {
      CyclotomicInt c = cyclotomic_from_json(e.at(1));
      if (c.conductor() != a.r) throw Error(ErrorCode::ParseError, "ADO coefficient has the wrong conductor");
      if (!c.is_zero()) a.terms.emplace(e.at(0).get<int>(), std::move(c));
    }
    return a;
  });
}

Json laurent_to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json::array({e, to_decimal(c)}));
  return Json{{"variable", variable_name(p.variable())}, {"terms", std::move(terms)}};
}

LaurentPoly laurent_from_json(const Json& j) {
  return guarded([&] {
    LaurentPoly p(variable_from_name(j.at("variable").get<std::string>()));
    for (const auto& e : j.at("terms")) p.add_term(e.at(0).get<int>(), from_decimal(e.at(1).get<std::string>()));
    return p;
  });
}

std::string laurent_to_csv(const LaurentPoly& p) {
  std::ostringstream os;
  os << "exponent,value\n";
  for (const auto& [e, c] : p.terms()) os << e << "," << c.get_str() << "\n";
  return os.str();
}

Json combination_to_json(const KnotCombination& c) {
  Json out = Json::array();
  for (const auto& [b, coeff] : c.terms())
    out.push_back(Json{{"braid", b.to_string()}, {"strands", b.strands()}, {"coeff", to_decimal(coeff)}});
  return out;
}

KnotCombination combination_from_json(const Json& j) {
  return guarded([&] {
    KnotCombination c;
    for (const auto& e : j) {
      const int strands = e.value("strands", 0);
      c.add(BraidWord::parse(e.at("braid").get<std::string>(), strands), from_decimal(e.at("coeff").get<std::string>()));
    }
    return c;
  });
}

Json report_to_json(const CheckReport& r) {
  Json per_m = Json::array();
  for (const auto& e : r.per_m) {
    Json row{{"m", e.m}, {"precision", e.precision}};
    row["margin"] = e.margin ? Json(*e.margin) : Json(nullptr);
    row["status"] = e.pass ? "pass" : "fail";
    if (!e.detail.empty()) row["detail"] = e.detail;
    per_m.push_back(std::move(row));
  }
  return Json{{"check", r.check},
              {"knot", r.knot},
              {"r", r.r},
              {"status", r.pass ? "pass" : "fail"},
              {"per_m", std::move(per_m)}};
}

Json report_to_json(const VassilievReport& r) {
  Json samples = Json::array();
  for (const auto& s : r.samples) {
    samples.push_back(Json{{"braid", s.braid}, {"marks", s.marks}, {"terms", s.terms}, {"value", to_decimal(s.value)}});
  }
  return Json{{"check", r.check},     {"functional", r.functional}, {"degree", r.degree},
              {"marks", r.marks},     {"seed", r.seed},             {"status", r.pass ? "pass" : "fail"},
              {"samples", std::move(samples)}};
}

}  // namespace qknot
