#pragma once

#include <json.hpp>
#include <stdexcept>

#include "tmirror/corresp.hpp"
#include "tmirror/mirror.hpp"

namespace tmirror {

using Json = nlohmann::json;

// Input that does not match the expected schema.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const Rat& x);  // "p/q" or "p"
Json to_json(const Int& x);  // number when it fits in 64 bits
Json to_json(const RatMatrix& m);
Json to_json(const IntMatrix& m);
Json to_json(const Torus& A);
Json to_json(const WeakPair& p);
Json to_json(const IsotropicSplitting& s);
Json to_json(const WellBecomingWitness& w);
Json to_json(const MirrorCertificate& c);
Json to_json(const SpinVec& v);
Json to_json(const ProductClass& c);
Json to_json(const GaussRat& z);

Rat rat_from_json(const Json& j);
Int int_from_json(const Json& j);
RatMatrix rat_matrix_from_json(const Json& j);
IntMatrix int_matrix_from_json(const Json& j);
Torus torus_from_json(const Json& j);
WeakPair pair_from_json(const Json& j);
IsotropicSplitting splitting_from_json(const Json& j);
WellBecomingWitness witness_from_json(const Json& j);
MirrorCertificate certificate_from_json(const Json& j);
SpinVec spinvec_from_json(const Json& j);
GaussRat gauss_from_json(const Json& j);

const Json& field(const Json& j, const char* key);

}  // namespace tmirror
