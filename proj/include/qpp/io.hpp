#ifndef QPP_IO_HPP_
#define QPP_IO_HPP_

#include <json.hpp>

#include <string>
#include <vector>

#include "qpp/freeprob.hpp"
#include "qpp/limits.hpp"
#include "qpp/rational.hpp"
#include "qpp/series.hpp"
#include "qpp/signatures.hpp"

namespace qpp {

using Json = nlohmann::ordered_json;

// Rationals travel as "p/q" strings. Integers are also accepted on input.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const std::vector<Rational>& v);
std::vector<Rational> rationals_from_json(const Json& j);

/// {"coeffs": [...], "order": K}
Json to_json(const Series& s);
Series series_from_json(const Json& j);

/// {"parts": [3, 1, 0]}
Json to_json(const Signature& s);
Signature signature_from_json(const Json& j);

/// [{"pos": "p/q", "w": "p/q"}, ...]
Json to_json(const AtomicMeasure& m);

/// {"mu": [...], "order": K}
Json to_json(const MomentSeq& m);
/// Accepts the object form or a bare array.
MomentSeq moments_from_json(const Json& j);

/// {"kappa": [...], "order": K}
Json to_json(const CumulantSeq& c);
CumulantSeq cumulants_from_json(const Json& j);

/// PsiSpec as {"a": [...]}, PhiSpec as {"b": [...]}.
Json psi_to_json(const PsiSpec& p);
Json phi_to_json(const PhiSpec& p);
PsiSpec psi_from_json(const Json& j);
PhiSpec phi_from_json(const Json& j);

/// Shortest round-trip-safe rendering with 17 significant digits.
std::string format_double(double v);

/// Rows "pos,w" in binary64, for plotting.
std::string atoms_csv(const AtomicMeasure& m);

}  // namespace qpp

#endif  // QPP_IO_HPP_
