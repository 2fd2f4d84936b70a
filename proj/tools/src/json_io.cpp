#include "json_io.hpp"

#include <fstream>
#include <sstream>

namespace qbt::cli {

json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string what = e.what();
    if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    throw InputError(source + ": malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object()) throw InputError(std::string("expected a JSON object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing key '") + key + "'");
  return *it;
}

template <class T>
T get_as(const json& j, const char* key) {
  try {
    return require(j, key).get<T>();
  } catch (const json::exception& e) {
    throw InputError(std::string("bad value for '") + key + "': " + e.what());
  }
}

Field field_of(const json& j, const Field& fallback) {
  if (j.is_object() && j.contains("field")) return Field::parse(get_as<std::string>(j, "field"));
  return fallback;
}

json matrix_with_shape(const Matrix& m) { return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", to_json(m)}}; }

}  // namespace

json to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const json& j, const Field& field) {
  if (j.is_number_integer()) return field.from_int(j.get<long long>());
  if (j.is_string()) return field.parse_scalar(j.get<std::string>());
  throw InputError("scalars must be strings or integers, got " + j.dump());
}

json to_json(const Matrix& m) {
  json a = json::array();
  for (const auto& s : m.data()) a.push_back(to_json(s));
  return a;
}

Matrix matrix_from_json(const json& j, const Field& field, std::size_t rows, std::size_t cols) {
  if (!j.is_array()) throw InputError("matrix must be a row-major array");
  if (j.size() != rows * cols) {
    throw InputError("matrix needs " + std::to_string(rows * cols) + " entries (" + std::to_string(rows) + "x" + std::to_string(cols) +
                     "), got " + std::to_string(j.size()));
  }
  Matrix m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json(j[r * cols + c], field);
  return m;
}

json to_json(const Quiver& q) {
  json arrows = json::array();
  for (const auto& a : q.arrows()) arrows.push_back({a.tail, a.head});
  return {{"vertices", q.vertex_count()}, {"arrows", arrows}};
}

Quiver quiver_from_json(const json& j) {
  if (j.is_string()) return parse_quiver_spec(j.get<std::string>());
  const int v = get_as<int>(j, "vertices");
  std::vector<Arrow> arrows;
  for (const auto& a : require(j, "arrows")) {
    if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() || !a[1].is_number_integer()) {
      throw InputError("each arrow must be [tail, head], got " + a.dump());
    }
    arrows.push_back({a[0].get<int>(), a[1].get<int>()});
  }
  return Quiver(v, std::move(arrows));
}

json to_json(const Representation& r) {
  json maps = json::array();
  for (const auto& m : r.maps()) maps.push_back(to_json(m));
  return {{"quiver", to_json(r.quiver())}, {"dims", r.dims()}, {"maps", maps}, {"field", r.field().to_string()}};
}

Representation representation_from_json(const json& j, const Field& fallback) {
  const Field field = field_of(j, fallback);
  const Quiver q = quiver_from_json(require(j, "quiver"));
  const auto dims = get_as<DimensionVector>(j, "dims");
  if (dims.size() != static_cast<std::size_t>(q.vertex_count())) throw InputError("dims must have one entry per vertex");
  for (long long d : dims) {
    if (d < 0) throw InputError("dimensions must be non-negative");
  }
  const json& maps = require(j, "maps");
  if (!maps.is_array() || maps.size() != q.arrow_count()) throw InputError("maps must hold one matrix per arrow");
  std::vector<Matrix> ms;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arrow = q.arrows()[a];
    ms.push_back(matrix_from_json(maps[a], field, static_cast<std::size_t>(dims[static_cast<std::size_t>(arrow.head)]),
                                  static_cast<std::size_t>(dims[static_cast<std::size_t>(arrow.tail)])));
  }
  return Representation(q, dims, std::move(ms), field);
}

json to_json(const PolyMatrix& m) {
  json entries = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) entries.push_back(m(r, c).to_string());
  return {{"field", m.field().to_string()},
          {"n", m.n()},
          {"row_twists", m.row_twists()},
          {"col_twists", m.col_twists()},
          {"entries", entries}};
}

PolyMatrix polymatrix_from_json(const json& j, const Field& fallback) {
  const Field field = field_of(j, fallback);
  const int n = get_as<int>(j, "n");
  const auto rt = get_as<std::vector<int>>(j, "row_twists");
  const auto ct = get_as<std::vector<int>>(j, "col_twists");
  PolyMatrix m(field, n, rt, ct);
  const json& e = require(j, "entries");
  if (!e.is_array() || e.size() != rt.size() * ct.size()) throw InputError("entries must hold rows*cols polynomial strings");
  for (std::size_t r = 0; r < rt.size(); ++r) {
    for (std::size_t c = 0; c < ct.size(); ++c) {
      const json& x = e[r * ct.size() + c];
      if (!x.is_string()) throw InputError("polynomial entries must be strings");
      const auto text = x.get<std::string>();
      const int deg = m.entry_degree(r, c);
      if (text == "0") continue;
      if (deg < 0) throw InputError("entry (" + std::to_string(r) + "," + std::to_string(c) + ") must be 0: its twist degree is negative");
      m.set(r, c, HomogeneousPoly::parse(field, n, deg, text));
    }
  }
  return m;
}

json to_json(const ChernPolynomial& c) { return c.to_strings(); }

ChernPolynomial chern_from_json(const json& j, int n) {
  if (!j.is_array()) throw InputError("Chern polynomial must be a coefficient list");
  std::vector<mpz_class> coeffs;
  for (const auto& x : j) {
    try {
      coeffs.emplace_back(x.is_string() ? x.get<std::string>() : std::to_string(x.get<long long>()));
    } catch (const std::exception&) {
      throw InputError("bad Chern coefficient " + x.dump());
    }
  }
  if (coeffs.size() > static_cast<std::size_t>(n + 1)) throw InputError("Chern polynomial longer than n + 1 coefficients");
  coeffs.resize(static_cast<std::size_t>(n + 1), 0);
  return ChernPolynomial(n, coeffs);
}

namespace {

json descriptor_json(const BundleDescriptor& d) { return {{"rank", d.rank}, {"chern", to_json(d.chern)}}; }

BundleDescriptor descriptor_from_json(const json& j, int n) {
  return {get_as<long long>(j, "rank"), chern_from_json(require(j, "chern"), n)};
}

std::string table_tag(const BundleTriple& t) {
  if (t.realization == Realization::LineBundle) {
    return "linebundle:" + std::to_string(t.ambient) + "," + std::to_string(t.eA) + "," + std::to_string(t.eB) + "," + std::to_string(t.eC);
  }
  if (t.realization == Realization::HM) return "hm:" + std::to_string(t.p);
  return {};
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("bad integer '" + item + "' in '" + text + "'");
    }
  }
  return out;
}

}  // namespace

json to_json(const BundleTriple& t) {
  json j = {{"realization", to_string(t.realization)},
            {"ambient", t.A.chern.n()},
            {"A", descriptor_json(t.A)},
            {"B", descriptor_json(t.B)},
            {"C", descriptor_json(t.C)},
            {"m", t.m},
            {"n", t.n},
            {"r", t.r},
            {"block_mode", t.block_mode()}};
  if (t.realization == Realization::LineBundle) j["twists"] = {t.eA, t.eB, t.eC};
  if (t.realization == Realization::HM) j["p"] = t.p;
  return j;
}

BundleTriple triple_from_json(const json& j) {
  const std::string kind = j.contains("realization") ? get_as<std::string>(j, "realization") : "abstract";
  if (kind == "linebundle") {
    const auto tw = get_as<std::vector<int>>(j, "twists");
    if (tw.size() != 3) throw InputError("twists must be [eA, eB, eC]");
    return line_bundle_triple(get_as<int>(j, "ambient"), tw[0], tw[1], tw[2]);
  }
  if (kind == "hm") return hm_triple(get_as<int>(j, "p"));
  if (kind != "abstract") throw InputError("unknown realization '" + kind + "'");
  BundleTriple t;
  const int n = get_as<int>(j, "ambient");
  if (n < 1) throw InputError("ambient dimension must be >= 1");
  t.A = descriptor_from_json(require(j, "A"), n);
  t.B = descriptor_from_json(require(j, "B"), n);
  t.C = descriptor_from_json(require(j, "C"), n);
  t.m = get_as<long long>(j, "m");
  t.n = get_as<long long>(j, "n");
  t.r = get_as<long long>(j, "r");
  t.ambient = n;
  validate_triple(t);
  return t;
}

json to_json(const CompositionTable& t) {
  json out = json::array();
  for (std::size_t j = 0; j < t.n(); ++j) {
    json row = json::array();
    for (std::size_t i = 0; i < t.m(); ++i) {
      json cell = json::array();
      for (std::size_t k = 0; k < t.r(); ++k) cell.push_back(to_json(t.at(j, i, k)));
      row.push_back(std::move(cell));
    }
    out.push_back(std::move(row));
  }
  return out;
}

CompositionTable table_from_json(const json& j, const Field& field, std::size_t m, std::size_t n, std::size_t r) {
  if (!j.is_array() || j.size() != n) throw InputError("table must be an n x m x r nested array");
  CompositionTable t(field, m, n, r);
  for (std::size_t a = 0; a < n; ++a) {
    if (!j[a].is_array() || j[a].size() != m) throw InputError("table must be an n x m x r nested array");
    for (std::size_t b = 0; b < m; ++b) {
      if (!j[a][b].is_array() || j[a][b].size() != r) throw InputError("table must be an n x m x r nested array");
      for (std::size_t k = 0; k < r; ++k) t.at(a, b, k) = scalar_from_json(j[a][b][k], field);
    }
  }
  return t;
}

json to_json(const MonadData& d) {
  json A = json::array(), B = json::array();
  for (const auto& m : d.A) A.push_back(to_json(m));
  for (const auto& m : d.B) B.push_back(to_json(m));
  const std::string tag = table_tag(d.triple);
  return {{"field", d.field().to_string()},
          {"triple", to_json(d.triple)},
          {"table", tag.empty() ? to_json(d.table) : json(tag)},
          {"a", d.a},
          {"b", d.b},
          {"c", d.c},
          {"A", A},
          {"B", B}};
}

MonadData monad_from_json(const json& j, const Field& fallback) {
  const Field field = field_of(j, fallback);
  MonadData d;
  const json& table = require(j, "table");
  if (table.is_string()) {
    const auto text = table.get<std::string>();
    const auto colon = text.find(':');
    const std::string kind = text.substr(0, colon);
    const auto nums = colon == std::string::npos ? std::vector<int>{} : parse_ints(text.substr(colon + 1));
    if (kind == "linebundle" && nums.size() == 4) {
      d.triple = line_bundle_triple(nums[0], nums[1], nums[2], nums[3]);
      d.table = line_bundle_table(nums[0], nums[1], nums[2], nums[3], field);
    } else if (kind == "hm" && nums.size() == 1) {
      d.triple = hm_triple(nums[0]);
      d.table = hm_table(nums[0], field);
    } else {
      throw InputError("table must be 'linebundle:n,eA,eB,eC', 'hm:p' or an inline array, got '" + text + "'");
    }
  } else {
    d.triple = triple_from_json(require(j, "triple"));
    d.table = table_from_json(table, field, static_cast<std::size_t>(d.triple.m), static_cast<std::size_t>(d.triple.n),
                              static_cast<std::size_t>(d.triple.r));
  }
  d.a = get_as<long long>(j, "a");
  d.b = get_as<long long>(j, "b");
  d.c = get_as<long long>(j, "c");
  if (d.a < 0 || d.b < 0 || d.c < 0) throw InputError("a, b, c must be non-negative");
  const json& A = require(j, "A");
  const json& B = require(j, "B");
  if (!A.is_array() || A.size() != static_cast<std::size_t>(d.triple.m)) throw InputError("A must hold m matrices");
  if (!B.is_array() || B.size() != static_cast<std::size_t>(d.triple.n)) throw InputError("B must hold n matrices");
  const auto a = static_cast<std::size_t>(d.a), b = static_cast<std::size_t>(d.b), c = static_cast<std::size_t>(d.c);
  for (const auto& x : A) d.A.push_back(matrix_from_json(x, field, b, a));
  for (const auto& x : B) d.B.push_back(matrix_from_json(x, field, c, b));
  validate_monad(d);
  return d;
}

json to_json(const FiberReport& r) {
  json j = {{"mode", to_string(r.mode)},
            {"verdict", to_string(r.verdict)},
            {"samples", r.samples},
            {"prime", r.prime},
            {"certification", to_string(r.certification)},
            {"note", r.note},
            {"passed", r.passed()}};
  if (r.witness) {
    json w = json::array();
    for (const auto& s : *r.witness) w.push_back(s.is_rational() ? s.rational().get_str() : std::to_string(s.residue()));
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  j["witness_trial"] = r.witness_trial ? json(*r.witness_trial) : json(nullptr);
  return j;
}

json to_json(const DecompositionReport& r) {
  json summands = json::array();
  for (std::size_t i = 0; i < r.summands.size(); ++i) {
    summands.push_back({{"dims", r.summands[i].dims()},
                        {"certificate", to_string(r.summand_certificates[i])},
                        {"representation", to_json(r.summands[i])}});
  }
  json basis = json::array();
  for (const auto& m : r.change_of_basis) basis.push_back(matrix_with_shape(m));
  return {{"certificate", to_string(r.certificate)},
          {"summand_count", r.summands.size()},
          {"summands", summands},
          {"change_of_basis", basis},
          {"trials", r.trials}};
}

json to_json(const CriteriaReport& r) {
  return {{"q", r.q},
          {"simple_possible", r.simple_possible},
          {"forced_decomposable", r.forced_decomposable},
          {"exceptional_possible", r.exceptional_possible},
          {"exceptional_generic", r.exceptional_generic},
          {"notes", r.notes}};
}

json to_json(const ExtTable& t) {
  json ext = json::array();
  for (const auto& e : t.ext) {
    json x = {{"degree", e.degree}, {"lo", e.lo}, {"hi", e.hi}, {"exact", e.exact()}};
    if (e.exact()) x["value"] = e.lo;
    ext.push_back(std::move(x));
  }
  return {{"ext", ext}, {"hom_minus_ext1", t.hom_minus_ext1}, {"notes", t.notes}};
}

json to_json(const HMReport& r) {
  json beta = json::array();
  const std::size_t dim = static_cast<std::size_t>(2 * r.p + 1);
  for (std::size_t i = 0; i < dim && 2 * i + 1 < r.beta_entries.size(); ++i) beta.push_back({r.beta_entries[2 * i], r.beta_entries[2 * i + 1]});
  return {{"p", r.p},
          {"trials", r.trials},
          {"seed", r.seed},
          {"prime", r.prime},
          {"beta", beta},
          {"checks",
           {{"complex", r.complex_ok},
            {"relations", r.relations_ok},
            {"kernel_dim_expected", r.kernel_dim_expected},
            {"kernel_dim_ok", r.kernel_dim_ok},
            {"fiber_injective", r.injective_ok},
            {"fiber_surjective", r.surjective_ok},
            {"fiber_symbol_consistent", r.fiber_symbol_consistent},
            {"nonzero_phi", r.nonzero_phi},
            {"phi_elementary", r.phi_elementary},
            {"R_schur", r.r_schur},
            {"R_prime_schur", r.r_prime_schur}}},
          {"R", to_json(r.R)},
          {"R_prime", to_json(r.R_prime)},
          {"cohomology", {{"rank", r.cohomology.rank}, {"rank_expected", r.rank_expected}, {"chern", to_json(r.cohomology.chern)},
                          {"chern_consistent", r.cohomology.chern_consistent}}},
          {"verdict", to_string(r.verdict.verdict)},
          {"verdict_explanation", r.verdict.explanation},
          {"block_mode", r.verdict.block_mode},
          {"failures", r.failures},
          {"note", r.note},
          {"passed", r.passed()}};
}

}  // namespace qbt::cli
