#ifndef ETAQ_JSON_IO_HPP
#define ETAQ_JSON_IO_HPP

#include <json.hpp>

#include "etaq/families.hpp"
#include "etaq/symprod.hpp"

namespace etaq {

using Json = nlohmann::json;

// Canonical serialization: field names as strings ("Q", "Q(z5)", "Fp:101"),
// scalars as exact literal strings, coefficient rows listed with the x0 and
// y0 exponents descending to match the printed monomial order.
Json to_json(const BiForm& h);
BiForm biform_from_json(const Json& j);

Json to_json(const SingularWitness& w);
Json to_json(const SmoothnessReport& rep);
Json to_json(const GridReport& rep);
Json to_json(const TorsionReport& rep);
Json to_json(const GrilledReport& rep);
Json to_json(const FiniteGenerationVerdict& v);
Json to_json(const SymProdTable& t);
Json to_json(const SurveyHistogram& h);

} // namespace etaq

#endif
