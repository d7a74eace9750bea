#pragma once

#include <json.hpp>

#include "esymm/codim2.hpp"
#include "esymm/lambda_map.hpp"
#include "esymm/poly.hpp"
#include "esymm/surface.hpp"
#include "esymm/symp_space.hpp"

namespace esymm {

using json = nlohmann::json;

/// Rationals serialize as "p/q" (or "p"); plain JSON integers are accepted
/// on input.
Rational rational_from_json(const json& j, const std::string& path);
json rational_to_json(const Rational& r);

/// Matrices are row-major nested arrays.
Mat mat_from_json(const json& j, const std::string& path);
json mat_to_json(const Mat& m);

Vec vec_from_json(const json& j, const std::string& path);
json vec_to_json(const Vec& v);

/// Polynomials: list of {"exps": [...], "nu": k, "coeff": "p/q"}; "nu"
/// optional and 0 by default.
MultiPoly poly_from_json(const json& j, std::size_t num_vars, const std::string& path);
json poly_to_json(const MultiPoly& p);

/// {"n": .., "p": .., "omega0"?: matrix, "omegaN0"?: matrix}; the standard
/// blocks apply when omitted.
SympSpace space_from_json(const json& j, const std::string& path);
json space_to_json(const SympSpace& s);

/// {"space": .., "C": [matrix..], "B_struct"?: 3-index array B[k][i][j],
///  "a_basis"?: [vector..]} -- a_basis columns may be given in normal-block
/// or ambient coordinates.
ShapeFamily family_from_json(const json& j);
json family_to_json(const ShapeFamily& f);

/// {"space": .., "generators": [{"A": matrix, "a": vector}..]}.
SurfaceSpec surface_from_json(const json& j);
json surface_to_json(const SurfaceSpec& s);

json orbit_point_to_json(const Vec& x_tilde, const Vec& u_tilde);

/// FNV-1a hash of the raw input text, for report digests.
std::string content_digest(const std::string& text);

} // namespace esymm
