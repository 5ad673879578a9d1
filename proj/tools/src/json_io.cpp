#include "json_io.hpp"

#include <string>

#include "wwgm/errors.hpp"

namespace wwgm::cli {

namespace {

void put_coefficient(Json& obj, const UnitPowers& up, const GaussRat& c) {
  obj["re"] = c.re().get_str();
  obj["im"] = c.im().get_str();
  obj["hbar_pow"] = up.get(Unit::hbar);
  if (up.get(Unit::s) != 0) obj["s_pow"] = up.get(Unit::s);
  if (up.get(Unit::r) != 0) obj["r_pow"] = up.get(Unit::r);
}

// Appends one entry per Scalar term, highest unit powers first.
void append_terms(Json& arr, const Json& index, const Scalar& c) {
  for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it) {
    Json obj = index;
    put_coefficient(obj, it->first, it->second);
    arr.push_back(std::move(obj));
  }
}

[[noreturn]] void malformed(const std::string& what) { throw DomainError("malformed JSON: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing \"") + key + "\"");
  return j.at(key);
}

int int_field(const Json& j, const char* key, bool optional = false) {
  if (optional && !j.contains(key)) return 0;
  const Json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long>() < 0) malformed(std::string("\"") + key + "\" must be a nonnegative integer");
  check_degree(v.get<long>(), key);
  return v.get<int>();
}

mpq_class rational_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) malformed(std::string("\"") + key + "\" must be a rational string");
  mpq_class q;
  if (q.set_str(v.get<std::string>(), 10) != 0 || q.get_den() == 0) {
    malformed("bad rational \"" + v.get<std::string>() + "\"");
  }
  q.canonicalize();
  return q;
}

Scalar coefficient_from(const Json& obj) {
  UnitPowers up;
  up.set(Unit::hbar, int_field(obj, "hbar_pow"));
  up.set(Unit::s, int_field(obj, "s_pow", true));
  up.set(Unit::r, int_field(obj, "r_pow", true));
  return Scalar::term(up, GaussRat(rational_field(obj, "re"), rational_field(obj, "im")));
}

const Json& terms_array(const Json& j) {
  const Json& t = field(j, "terms");
  if (!t.is_array()) malformed("\"terms\" must be an array");
  return t;
}

VarPair var_pair_from(const Json& j) {
  const Json& v = field(j, "var_pair");
  if (!v.is_string()) malformed("\"var_pair\" must be a string");
  auto vp = parse_var_pair(v.get<std::string>());
  if (!vp) malformed("unknown var_pair \"" + v.get<std::string>() + "\"");
  return *vp;
}

}  // namespace

Json to_json(const Scalar& c) {
  Json arr = Json::array();
  append_terms(arr, Json::object(), c);
  return arr;
}

Json to_json(const OpPoly& a) {
  Json out = Json::object();
  if (a.algebra().kind() != Algebra::Kind::qp) out["algebra"] = a.algebra().name();
  Json arr = Json::array();
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
    append_terms(arr, Json{{"n", it->first.first}, {"m", it->first.second}}, it->second);
  }
  out["terms"] = std::move(arr);
  return out;
}

Json to_json(const PhasePoly& f) {
  Json arr = Json::array();
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    append_terms(arr, Json{{"a", it->first.first}, {"b", it->first.second}}, it->second);
  }
  return Json{{"var_pair", var_pair_name(f.var_pair())}, {"terms", std::move(arr)}};
}

Json to_json(const DiffOp& d) {
  Json arr = Json::array();
  for (auto it = d.terms().rbegin(); it != d.terms().rend(); ++it) {
    const DiffKey& k = it->first;
    append_terms(arr, Json{{"a", k.a}, {"b", k.b}, {"c", k.c}, {"d", k.d}}, it->second);
  }
  return Json{{"var_pair", var_pair_name(d.var_pair())}, {"terms", std::move(arr)}};
}

Json to_json(const OrderExpansion& e) {
  Json terms = Json::array();
  for (const auto& [k, c] : e.terms) terms.push_back(Json{{"k", k}, {"coeff", to_json(c)}});
  return Json{{"n", e.n}, {"m", e.m}, {"s_from", to_json(e.s_from)}, {"s_to", to_json(e.s_to)},
              {"terms", std::move(terms)}};
}

Scalar scalar_from_json(const Json& j) {
  if (!j.is_array()) malformed("a scalar must be an array of terms");
  Scalar out;
  for (const Json& t : j) out += coefficient_from(t);
  return out;
}

OpPoly op_poly_from_json(const Json& j, const Algebra& fallback) {
  Algebra alg = fallback;
  if (j.is_object() && j.contains("algebra")) {
    const std::string name = j.at("algebra").is_string() ? j.at("algebra").get<std::string>() : "";
    if (name == Algebra::qp().name()) {
      alg = Algebra::qp();
    } else if (name == Algebra::aadag().name()) {
      alg = Algebra::aadag();
    } else {
      malformed("unknown algebra \"" + name + "\"");
    }
  }
  OpPoly out(alg);
  for (const Json& t : terms_array(j)) {
    out += OpPoly::monomial(alg, int_field(t, "n"), int_field(t, "m"), coefficient_from(t));
  }
  return out;
}

PhasePoly phase_poly_from_json(const Json& j) {
  const VarPair vp = var_pair_from(j);
  PhasePoly out(vp);
  for (const Json& t : terms_array(j)) {
    out += PhasePoly::monomial(vp, int_field(t, "a"), int_field(t, "b"), coefficient_from(t));
  }
  return out;
}

DiffOp diff_op_from_json(const Json& j) {
  const VarPair vp = var_pair_from(j);
  DiffOp out(vp);
  for (const Json& t : terms_array(j)) {
    out += DiffOp::term(vp, DiffKey{int_field(t, "a"), int_field(t, "b"), int_field(t, "c"), int_field(t, "d")},
                        coefficient_from(t));
  }
  return out;
}

}  // namespace wwgm::cli
