#include "tmirror/json_io.hpp"

#include <limits>
#include <string>

namespace tmirror {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw SchemaError("expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string("missing field \"") + key + "\"");
  return *it;
}

Json to_json(const Int& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Json to_json(const Rat& x) {
  Rat c(x);
  c.canonicalize();
  return c.get_str();
}

Json to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(to_json(m(i, j)));
    rows.push_back(r);
  }
  return rows;
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(to_json(m(i, j)));
    rows.push_back(r);
  }
  return rows;
}

Json to_json(const Torus& A) { return {{"n", A.n}, {"J", to_json(A.J)}}; }

Json to_json(const WeakPair& p) {
  return {{"torus", to_json(p.torus)}, {"phi1", to_json(p.phi1)}, {"phi2", to_json(p.phi2)}};
}

Json to_json(const IsotropicSplitting& s) {
  return {{"basis1", to_json(s.basis1)}, {"basis2", to_json(s.basis2)}};
}

Json to_json(const WellBecomingWitness& w) {
  return {{"gamma1", to_json(w.gamma1)}, {"gamma2", to_json(w.gamma2)}};
}

Json to_json(const MirrorCertificate& c) {
  return {{"alpha", to_json(c.alpha)}, {"pairA", to_json(c.pairA)}, {"pairB", to_json(c.pairB)}};
}

namespace {

Json subset_json(unsigned mask, int gens) {
  Json s = Json::array();
  for (int i = 0; i < gens; ++i)
    if (mask & (1u << i)) s.push_back(i + 1);
  return s;
}

}  // namespace

Json to_json(const SpinVec& v) {
  Json terms = Json::array();
  for (const auto& [m, c] : v.coeffs) {
    if (sgn(c) == 0) continue;
    terms.push_back({{"subset", subset_json(m, 2 * v.n)}, {"coeff", to_json(c)}});
  }
  return {{"n", v.n}, {"terms", terms}};
}

Json to_json(const ProductClass& c) {
  Json terms = Json::array();
  for (const auto& [k, v] : c.coeffs)
    if (sgn(v) != 0)
      terms.push_back({{"a", subset_json(k.first, 2 * c.n)}, {"b", subset_json(k.second, 2 * c.m)}, {"coeff", to_json(v)}});
  return {{"n", c.n}, {"m", c.m}, {"terms", terms}};
}

Json to_json(const GaussRat& z) { return {{"re", to_json(z.re)}, {"im", to_json(z.im)}}; }

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(Int(std::to_string(j.get<long long>())));
  if (!j.is_string()) throw SchemaError("expected a rational as an integer or \"p/q\" string");
  Rat r;
  if (r.set_str(j.get<std::string>(), 10) != 0 || sgn(r.get_den()) == 0)
    throw SchemaError("malformed rational \"" + j.get<std::string>() + "\"");
  r.canonicalize();
  return r;
}

Int int_from_json(const Json& j) {
  Rat r = rat_from_json(j);
  if (r.get_den() != 1) throw SchemaError("expected an integer");
  return r.get_num();
}

namespace {

template <class T, class F>
Matrix<T> matrix_from_json(const Json& j, F&& entry) {
  if (!j.is_array()) throw SchemaError("expected a matrix as an array of rows");
  const std::size_t rows = j.size(), cols = rows ? j[0].size() : 0;
  Matrix<T> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw SchemaError("ragged matrix");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = entry(j[i][k]);
  }
  return m;
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw SchemaError(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

}  // namespace

RatMatrix rat_matrix_from_json(const Json& j) { return matrix_from_json<Rat>(j, rat_from_json); }
IntMatrix int_matrix_from_json(const Json& j) { return matrix_from_json<Int>(j, int_from_json); }

Torus torus_from_json(const Json& j) { return make_torus(int_field(j, "n"), rat_matrix_from_json(field(j, "J"))); }

WeakPair pair_from_json(const Json& j) {
  return make_weak_pair(torus_from_json(field(j, "torus")), rat_matrix_from_json(field(j, "phi1")),
                        rat_matrix_from_json(field(j, "phi2")));
}

IsotropicSplitting splitting_from_json(const Json& j) {
  return {int_matrix_from_json(field(j, "basis1")), int_matrix_from_json(field(j, "basis2"))};
}

WellBecomingWitness witness_from_json(const Json& j) {
  return {int_matrix_from_json(field(j, "gamma1")), int_matrix_from_json(field(j, "gamma2"))};
}

MirrorCertificate certificate_from_json(const Json& j) {
  return {int_matrix_from_json(field(j, "alpha")), pair_from_json(field(j, "pairA")),
          pair_from_json(field(j, "pairB"))};
}

SpinVec spinvec_from_json(const Json& j) {
  SpinVec v{int_field(j, "n"), {}};
  if (v.n < 1) throw SchemaError("n must be positive");
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw SchemaError("terms must be an array");
  for (const auto& t : terms) {
    const Json& subset = field(t, "subset");
    if (!subset.is_array()) throw SchemaError("subset must be an array");
    unsigned mask = 0;
    for (const auto& i : subset) {
      if (!i.is_number_integer() || i.get<int>() < 1 || i.get<int>() > 2 * v.n)
        throw SchemaError("subset index out of range");
      unsigned bit = 1u << (i.get<int>() - 1);
      if (mask & bit) throw SchemaError("repeated subset index");
      mask |= bit;
    }
    // The monomial is read in the listed order; reorder with its sign.
    int inv = 0;
    for (std::size_t a = 0; a < subset.size(); ++a)
      for (std::size_t b = a + 1; b < subset.size(); ++b)
        if (subset[a].get<int>() > subset[b].get<int>()) ++inv;
    Int c = int_from_json(field(t, "coeff"));
    v.coeffs[mask] += inv % 2 ? Int(-c) : c;
  }
  return v;
}

GaussRat gauss_from_json(const Json& j) { return {rat_from_json(field(j, "re")), rat_from_json(field(j, "im"))}; }

}  // namespace tmirror
