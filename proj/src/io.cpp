#include "pfc/io.hpp"

#include "pfc/diagram.hpp"

namespace pfc {

namespace {

// Integers that fit in 64 bits are numbers, larger ones are decimal strings.
Json integer_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

BigInt integer_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw ParseError("expected an integer");
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field: ") + name);
  return j.at(name);
}

std::size_t size_field(const Json& j, const char* name) {
  const auto& v = field(j, name);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    throw ParseError(std::string("field must be a nonnegative integer: ") + name);
  return v.get<std::size_t>();
}

}  // namespace

Json to_json(const LinearForm& f) {
  Json entries = Json::array();
  for (std::size_t k = 0; k <= f.degree_bound(); ++k) {
    const auto& cat = PkCatalog::get(k);
    for (std::size_t i = 0; i < cat.size(); ++i)
      if (f.level(k)[i] != 0) entries.push_back({{"partition", format_pk(cat.at(i))}, {"value", to_string(f.level(k)[i])}});
  }
  return {{"degree_bound", f.degree_bound()}, {"entries", entries}};
}

LinearForm linear_form_from_json(const Json& j) {
  LinearForm f(size_field(j, "degree_bound"));
  for (const auto& e : field(j, "entries")) {
    const auto& text = field(e, "partition").get<std::string>();
    Partition p;
    bool parsed = false;
    for (std::size_t k = 0; k <= f.degree_bound() && !parsed; ++k) {
      try {
        p = parse_pk(text, k);
        parsed = true;
      } catch (const ParseError&) {
      }
    }
    if (!parsed) throw ParseError("partition outside the degree bound: " + text);
    const auto& v = field(e, "value");
    f[p] = v.is_string() ? parse_rational(v.get<std::string>()) : Rational(v.get<std::int64_t>());
  }
  return f;
}

Json to_json(const LaurentScalar& x) {
  Json out = Json::array();
  for (const auto& [e, c] : x.terms())
    out.push_back({{"exp", e}, {"num", integer_json(numerator(c))}, {"den", integer_json(denominator(c))}});
  return out;
}

LaurentScalar laurent_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("laurent coefficients must be an array");
  LaurentScalar x;
  for (const auto& t : j) {
    BigInt den = integer_from_json(field(t, "den"));
    if (den == 0) throw ParseError("zero denominator");
    x += LaurentScalar::monomial(Rational(integer_from_json(field(t, "num")), den), field(t, "exp").get<int>());
  }
  return x;
}

Json to_json(const AlgebraElement& e) {
  Json terms = Json::array();
  for (const auto& [p, c] : e.terms()) terms.push_back({{"partition", format_pk(p)}, {"laurent", to_json(c)}});
  return {{"k", e.k()}, {"terms", terms}};
}

AlgebraElement algebra_element_from_json(const Json& j) {
  AlgebraElement e(size_field(j, "k"));
  for (const auto& t : field(j, "terms"))
    e.add(parse_pk(field(t, "partition").get<std::string>(), e.k()), laurent_from_json(field(t, "laurent")));
  return e;
}

Json to_json(const FluctElement& e) {
  Json terms = Json::array();
  for (const auto& [key, c] : e.terms())
    terms.push_back({{"partition", format_pk(key.first)}, {"i", key.second}, {"laurent", to_json(c)}});
  return {{"k", e.k()}, {"n", e.order()}, {"terms", terms}};
}

FluctElement fluct_element_from_json(const Json& j) {
  FluctElement e(size_field(j, "k"), size_field(j, "n"));
  for (const auto& t : field(j, "terms"))
    e.add(parse_pk(field(t, "partition").get<std::string>(), e.k()), size_field(t, "i"),
          laurent_from_json(field(t, "laurent")));
  return e;
}

}  // namespace pfc
