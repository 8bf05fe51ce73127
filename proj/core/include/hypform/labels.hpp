#pragma once

// Human input: basis-label expressions like "f1+e2", "2*x1-y3" or
// "1/2*sqrt(2)*u1", and coefficient strings like "-3/4" or "sqrt(3)".

#include <hypform/json_io.hpp>

#include <string>

namespace hypform {

class InputParser {
 public:
  /// `tower` is an optional radicand list for {"a","b","level"} scalars.
  explicit InputParser(const FormSpace& space, const Json& tower = Json());

  Scalar coefficient(const std::string& text);
  /// Integer, coefficient string or tower scalar.
  Scalar coefficient(const Json& j);
  Vector label_vector(const std::string& expr);
  /// A row is a label expression or an array of coefficients.
  Vector row(const Json& j);
  std::vector<Vector> rows(const Json& j);
  std::vector<Vector> rows(const std::string& text);
  /// {"basis": [...]} / {"ambient", "basis"}, an array of rows, a single
  /// label string, or the bare form "[f1, e2+f2]" that is not valid JSON.
  Subspace subspace(const Json& j);
  Subspace subspace(const std::string& text);

  const FormSpace& space() const { return space_; }
  const TowerContext& context() const { return ctx_; }

 private:
  Scalar factor(const std::string& text);
  FormSpace space_;
  JsonReader reader_;
  TowerContext ctx_;
};

}  // namespace hypform
