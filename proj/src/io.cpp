#include "qpp/io.hpp"

#include <cstdio>
#include <sstream>

#include "qpp/errors.hpp"

namespace qpp {
namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

void check_order(const Json& j, std::size_t expected) {
  if (j.is_object() && j.contains("order") &&
      j.at("order").get<std::size_t>() != expected) {
    throw ParseError("'order' does not match the number of entries");
  }
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("expected a rational string such as \"3/4\", got " +
                   j.dump());
}

Json to_json(const std::vector<Rational>& v) {
  Json arr = Json::array();
  for (const auto& r : v) arr.push_back(to_json(r));
  return arr;
}

std::vector<Rational> rationals_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array, got " + j.dump());
  std::vector<Rational> out;
  for (const auto& e : j) out.push_back(rational_from_json(e));
  return out;
}

Json to_json(const Series& s) {
  Json j;
  j["coeffs"] = to_json(s.coeffs());
  j["order"] = s.order();
  return j;
}

Series series_from_json(const Json& j) {
  auto c = rationals_from_json(field(j, "coeffs"));
  const unsigned order = field(j, "order").get<unsigned>();
  if (c.size() > order + 1) {
    throw ParseError("more coefficients than 'order' allows");
  }
  return Series(std::move(c), order);
}

Json to_json(const Signature& s) { return Json{{"parts", s.parts()}}; }

Signature signature_from_json(const Json& j) {
  const Json& parts = field(j, "parts");
  if (!parts.is_array()) throw ParseError("'parts' must be an array");
  std::vector<long> p;
  for (const auto& e : parts) {
    if (!e.is_number_integer()) throw ParseError("parts must be integers");
    p.push_back(e.get<long>());
  }
  return Signature(std::move(p));
}

Json to_json(const AtomicMeasure& m) {
  Json arr = Json::array();
  for (const auto& a : m.atoms) {
    arr.push_back(Json{{"pos", a.pos.str()}, {"w", a.w.str()}});
  }
  return arr;
}

Json to_json(const MomentSeq& m) {
  Json j;
  j["mu"] = to_json(m.mu());
  j["order"] = m.order();
  return j;
}

MomentSeq moments_from_json(const Json& j) {
  const Json& arr = j.is_array() ? j : field(j, "mu");
  auto mu = rationals_from_json(arr);
  check_order(j, mu.empty() ? 0 : mu.size() - 1);
  return MomentSeq(std::move(mu));
}

Json to_json(const CumulantSeq& c) {
  Json j;
  j["kappa"] = to_json(c.kappa());
  j["order"] = c.order();
  return j;
}

CumulantSeq cumulants_from_json(const Json& j) {
  const Json& arr = j.is_array() ? j : field(j, "kappa");
  auto k = rationals_from_json(arr);
  check_order(j, k.size());
  return CumulantSeq(std::move(k));
}

Json psi_to_json(const PsiSpec& p) { return Json{{"a", to_json(p.c)}}; }
Json phi_to_json(const PhiSpec& p) { return Json{{"b", to_json(p.c)}}; }

PsiSpec psi_from_json(const Json& j) {
  return PsiSpec{rationals_from_json(field(j, "a"))};
}

PhiSpec phi_from_json(const Json& j) {
  return PhiSpec{rationals_from_json(field(j, "b"))};
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string atoms_csv(const AtomicMeasure& m) {
  std::ostringstream os;
  os << "pos,w\n";
  for (const auto& a : m.atoms) {
    os << format_double(a.pos.to_double()) << ','
       << format_double(a.w.to_double()) << '\n';
  }
  return os.str();
}

}  // namespace qpp
