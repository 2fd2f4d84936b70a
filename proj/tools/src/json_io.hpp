#pragma once

#include <string>

#include <json.hpp>

#include "qbt/cokernel.hpp"
#include "qbt/decompose.hpp"
#include "qbt/fiber_check.hpp"
#include "qbt/hm.hpp"
#include "qbt/monad.hpp"
#include "qbt/syzygy.hpp"

namespace qbt::cli {

using json = nlohmann::json;

/// Parses text; malformed input raises InputError naming the line and column.
json parse_json_text(const std::string& text, const std::string& source = "<input>");
json read_json_file(const std::string& path);

json to_json(const Scalar& s);
Scalar scalar_from_json(const json& j, const Field& field);

/// Row-major list of scalar strings.
json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, const Field& field, std::size_t rows, std::size_t cols);

json to_json(const Quiver& q);
/// Object {"vertices", "arrows"} or a spec string such as "kronecker:3".
Quiver quiver_from_json(const json& j);

json to_json(const Representation& r);
/// The "field" key overrides the fallback.
Representation representation_from_json(const json& j, const Field& fallback = Field::rationals());

json to_json(const PolyMatrix& m);
PolyMatrix polymatrix_from_json(const json& j, const Field& fallback = Field::rationals());

json to_json(const ChernPolynomial& c);
ChernPolynomial chern_from_json(const json& j, int n);

json to_json(const BundleTriple& t);
BundleTriple triple_from_json(const json& j);

json to_json(const CompositionTable& t);
CompositionTable table_from_json(const json& j, const Field& field, std::size_t m, std::size_t n, std::size_t r);

json to_json(const MonadData& d);
MonadData monad_from_json(const json& j, const Field& fallback = Field::rationals());

json to_json(const FiberReport& r);
json to_json(const DecompositionReport& r);
json to_json(const CriteriaReport& r);
json to_json(const ExtTable& t);
json to_json(const HMReport& r);

}  // namespace qbt::cli
