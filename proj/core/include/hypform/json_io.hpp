#pragma once

// JSON forms of the exact objects.
//
// A rational scalar is the string "p" or "p/q". A scalar at tower level j is
// {"a": .., "b": .., "level": j} meaning a + b*sqrt(tower[j-1]); the tower is
// the list of radicands, bottom first, carried by the enclosing document.

#include <hypform/forms.hpp>
#include <hypform/toral.hpp>

#include <nlohmann/json.hpp>

namespace hypform {

using Json = nlohmann::ordered_json;

/// Collects the tower of the values written with it.
class JsonWriter {
 public:
  Json scalar(const Scalar& x);
  Json vector(const Vector& v);
  Json matrix(const Matrix& m);
  Json subspace(const Subspace& w);
  /// Radicands of everything written so far, bottom first.
  Json tower() const;

 private:
  void absorb(const Scalar& x);
  TowerContext ctx_;
};

class JsonReader {
 public:
  JsonReader() = default;
  /// Rebuilds the tower; every radicand is checked to be positive and not a
  /// square in the field below it.
  explicit JsonReader(const Json& tower);

  Scalar scalar(const Json& j) const;
  Vector vector(const Json& j, std::size_t dim) const;
  Matrix matrix(const Json& j) const;
  Matrix matrix(const Json& j, std::size_t rows, std::size_t cols) const;
  Subspace subspace(const Json& j, std::size_t ambient) const;
  const TowerContext& context() const { return ctx_; }

 private:
  TowerContext ctx_;
};

Json space_to_json(const FormSpace& space);
FormSpace space_from_json(const Json& j);

Json toral_to_json(const ToralMap& m);
/// Accepts {"d": k, "g": [[..]]} or a bare array of rows.
ToralMap toral_from_json(const Json& j);

/// {"lo", "hi"} exact, plus "value" and "error" as decimal strings.
Json interval_to_json(const RationalInterval& x, unsigned digits = 20);
RationalInterval interval_from_json(const Json& j);

/// Parses text as JSON, throwing InvalidInput with the parser message.
Json parse_json(const std::string& text);

}  // namespace hypform
