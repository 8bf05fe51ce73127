#include <hypform/error.hpp>
#include <hypform/json_io.hpp>

namespace hypform {

namespace {

std::size_t checked_index(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw InvalidInput(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

void JsonWriter::absorb(const Scalar& x) {
  if (!x.is_rational()) ctx_ = TowerContext::join(ctx_, context_of(x));
}

Json JsonWriter::scalar(const Scalar& x) {
  if (x.is_rational()) return to_string(x.rational());
  absorb(x);
  return Json{{"a", scalar(x.a())}, {"b", scalar(x.b())}, {"level", x.level()}};
}

Json JsonWriter::vector(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(scalar(x));
  return out;
}

Json JsonWriter::matrix(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector(m.row(i)));
  return out;
}

Json JsonWriter::subspace(const Subspace& w) {
  return Json{{"ambient", w.ambient()}, {"basis", matrix(w.basis())}};
}

Json JsonWriter::tower() const {
  Json out = Json::array();
  JsonWriter inner;
  for (const auto& r : ctx_.radicands()) out.push_back(inner.scalar(r));
  return out;
}

JsonReader::JsonReader(const Json& tower) {
  if (tower.is_null()) return;
  if (!tower.is_array()) throw InvalidInput("tower must be an array of radicands");
  for (const auto& r : tower) {
    Scalar rho = scalar(r);
    if (ctx_.level() == 0 && rho == Scalar(2)) {
      ctx_ = TowerContext::sqrt2();
      continue;
    }
    auto [next, root] = ctx_.adjoin_sqrt(rho);
    if (next.level() == ctx_.level()) throw InvalidInput("tower radicand " + to_string(rho) + " is already a square");
    ctx_ = next;
  }
}

Scalar JsonReader::scalar(const Json& j) const {
  if (j.is_number_integer()) return Scalar(Rational(Integer(std::to_string(j.get<long long>()))));
  if (j.is_string()) {
    try {
      return Scalar(parse_rational(j.get<std::string>()));
    } catch (const InvalidInput&) {
      throw;
    } catch (const std::exception&) {
      throw InvalidInput("not a rational: '" + j.get<std::string>() + "'");
    }
  }
  if (j.is_object()) {
    std::size_t level = checked_index(field(j, "level"), "level");
    if (level == 0 || static_cast<int>(level) > ctx_.level()) throw InvalidInput("scalar level outside the tower");
    TowerNodePtr node = ctx_.node_at(static_cast<int>(level));
    Scalar a = scalar(field(j, "a")), b = scalar(field(j, "b"));
    if (a.level() >= static_cast<int>(level) || b.level() >= static_cast<int>(level))
      throw InvalidInput("scalar components must lie below their level");
    return Scalar::make(node, a, b);
  }
  throw InvalidInput("a scalar is an integer, a \"p/q\" string or {\"a\",\"b\",\"level\"}");
}

Vector JsonReader::vector(const Json& j, std::size_t dim) const {
  if (!j.is_array() || j.size() != dim) throw InvalidInput("expected a vector of length " + std::to_string(dim));
  Vector v;
  for (const auto& x : j) v.push_back(scalar(x));
  return v;
}

Matrix JsonReader::matrix(const Json& j) const {
  if (!j.is_array()) throw InvalidInput("a matrix is an array of rows");
  if (j.empty()) return Matrix();
  if (!j.front().is_array()) throw InvalidInput("a matrix is an array of rows");
  return matrix(j, j.size(), j.front().size());
}

Matrix JsonReader::matrix(const Json& j, std::size_t rows, std::size_t cols) const {
  if (!j.is_array() || j.size() != rows)
    throw InvalidInput("expected " + std::to_string(rows) + " rows of length " + std::to_string(cols));
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) m.set_row(i, vector(j[i], cols));
  return m;
}

Subspace JsonReader::subspace(const Json& j, std::size_t ambient) const {
  const Json& basis = j.is_array() ? j : field(j, "basis");
  if (j.is_object() && j.contains("ambient") && checked_index(j.at("ambient"), "ambient") != ambient)
    throw InvalidInput("subspace ambient dimension does not match the space");
  if (!basis.is_array()) throw InvalidInput("subspace basis must be an array of rows");
  std::vector<Vector> rows;
  for (const auto& r : basis) rows.push_back(vector(r, ambient));
  return Subspace::span(ambient, rows);
}

Json space_to_json(const FormSpace& space) {
  return Json{{"kind", to_string(space.kind())}, {"n", space.n()}, {"presentation", to_string(space.presentation())}};
}

FormSpace space_from_json(const Json& j) {
  if (!field(j, "kind").is_string()) throw InvalidInput("space kind must be a string");
  FormKind kind = parse_form_kind(j.at("kind").get<std::string>());
  std::size_t n = checked_index(field(j, "n"), "n");
  Presentation p = Presentation::diagonal;
  if (j.contains("presentation")) {
    if (!j.at("presentation").is_string()) throw InvalidInput("presentation must be a string");
    p = parse_presentation(j.at("presentation").get<std::string>());
  }
  return FormSpace(kind, n, p);
}

Json toral_to_json(const ToralMap& m) {
  Json g = Json::array();
  for (const auto& row : m.rows()) {
    Json r = Json::array();
    for (const auto& v : row) {
      if (v.fits_slong_p()) r.push_back(v.get_si());
      else r.push_back(v.get_str());
    }
    g.push_back(r);
  }
  return Json{{"d", m.d()}, {"g", g}};
}

ToralMap toral_from_json(const Json& j) {
  const Json& g = j.is_object() ? field(j, "g") : j;
  if (!g.is_array() || g.empty()) throw InvalidInput("toral map must be a non-empty array of rows");
  std::vector<std::vector<Integer>> rows;
  for (const auto& r : g) {
    if (!r.is_array()) throw InvalidInput("toral map rows must be arrays");
    rows.emplace_back();
    for (const auto& v : r) {
      if (v.is_number_integer()) {
        rows.back().emplace_back(Integer(std::to_string(v.get<long long>())));
      } else if (v.is_string()) {
        Integer z;
        if (z.set_str(v.get<std::string>(), 10) != 0) throw InvalidInput("toral entries must be integers");
        rows.back().push_back(z);
      } else {
        throw InvalidInput("toral entries must be integers");
      }
    }
  }
  if (j.is_object() && j.contains("d") && checked_index(j.at("d"), "d") != rows.size())
    throw InvalidInput("toral map d does not match its rows");
  return ToralMap(std::move(rows));
}

Json interval_to_json(const RationalInterval& x, unsigned digits) {
  Rational mid = x.midpoint();
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  // half-width plus the rounding of the printed value
  Rational err = x.hi - mid + Rational(1, 2) / Rational(scale);
  return Json{{"value", to_decimal(mid, digits)},
              {"error", to_decimal(err, digits + 2, Round::up)},
              {"lo", to_string(x.lo)},
              {"hi", to_string(x.hi)}};
}

RationalInterval interval_from_json(const Json& j) {
  if (!field(j, "lo").is_string() || !field(j, "hi").is_string()) throw InvalidInput("interval bounds must be strings");
  RationalInterval x{parse_rational(j.at("lo").get<std::string>()), parse_rational(j.at("hi").get<std::string>())};
  if (x.hi < x.lo) throw InvalidInput("interval with lo > hi");
  return x;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace hypform
