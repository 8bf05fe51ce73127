#include <hypform/error.hpp>
#include <hypform/labels.hpp>

#include <algorithm>
#include <cctype>

namespace hypform {

namespace {

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

// Splits at depth-0 occurrences of sep.
std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out(1);
  int depth = 0;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.emplace_back();
      continue;
    }
    out.back() += c;
  }
  return out;
}

bool is_label(const std::string& s) {
  if (s.size() < 2 || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin() + 1, s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

InputParser::InputParser(const FormSpace& space, const Json& tower) : space_(space), reader_(tower), ctx_(reader_.context()) {}

Scalar InputParser::factor(const std::string& f) {
  if (f.rfind("sqrt(", 0) == 0 && f.back() == ')') {
    Rational r = parse_rational(f.substr(5, f.size() - 6));
    if (sgn(r) < 0) throw InvalidInput("square root of a negative number");
    if (sgn(r) == 0) return Scalar(0);
    if (auto q = exact_sqrt(r)) return Scalar(*q);
    if (ctx_.level() == 0 && r == 2) ctx_ = TowerContext::sqrt2();
    auto [next, root] = ctx_.adjoin_sqrt(Scalar(r));
    ctx_ = next;
    return root;
  }
  return Scalar(parse_rational(f));
}

Scalar InputParser::coefficient(const std::string& text) {
  std::string s = strip(text);
  if (s.empty()) throw InvalidInput("empty coefficient");
  Scalar sign = 1;
  if (s[0] == '-' && s.rfind("-sqrt", 0) == 0) {
    sign = -1;
    s = s.substr(1);
  }
  Scalar out = sign;
  for (const auto& f : split_top(s, '*')) {
    if (f.empty()) throw InvalidInput("malformed coefficient '" + text + "'");
    out *= factor(f);
  }
  return out;
}

Scalar InputParser::coefficient(const Json& j) {
  if (j.is_string()) return coefficient(j.get<std::string>());
  return reader_.scalar(j);
}

Vector InputParser::label_vector(const std::string& expr) {
  std::string s = strip(expr);
  if (s.empty()) throw InvalidInput("empty label expression");
  const std::size_t d = space_.dim();
  Vector v(d, Scalar(0));
  // split into signed terms at depth-0 '+'/'-' that do not follow '*', '/' or '('
  std::vector<std::string> terms;
  std::string cur;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    bool sign = (c == '+' || c == '-') && depth == 0 && i > 0 && s[i - 1] != '*' && s[i - 1] != '/' && s[i - 1] != '(';
    if (sign) {
      terms.push_back(cur);
      cur.clear();
    }
    cur += c;
  }
  terms.push_back(cur);
  for (std::string t : terms) {
    Scalar c = 1;
    if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
      if (t[0] == '-') c = -1;
      t = t.substr(1);
    }
    std::string label;
    for (const auto& f : split_top(t, '*')) {
      if (is_label(f) && f.rfind("sqrt", 0) != 0) {
        if (!label.empty()) throw InvalidInput("term '" + t + "' names two basis vectors");
        label = f;
      } else {
        if (f.empty()) throw InvalidInput("malformed term in '" + expr + "'");
        c *= factor(f);
      }
    }
    if (label.empty()) throw InvalidInput("term '" + t + "' names no basis vector");
    std::size_t idx = d;
    for (std::size_t i = 0; i < d; ++i)
      if (space_.label(i) == label) idx = i;
    if (idx == d) throw InvalidInput("unknown basis label '" + label + "' for this space");
    v[idx] += c;
  }
  return v;
}

Vector InputParser::row(const Json& j) {
  if (j.is_string()) return label_vector(j.get<std::string>());
  if (!j.is_array() || j.size() != space_.dim())
    throw InvalidInput("a row is a label expression or " + std::to_string(space_.dim()) + " coefficients");
  Vector v;
  for (const auto& x : j) v.push_back(coefficient(x));
  return v;
}

std::vector<Vector> InputParser::rows(const Json& j) {
  if (j.is_string()) return {label_vector(j.get<std::string>())};
  const Json* basis = &j;
  if (j.is_object()) {
    if (!j.contains("basis")) throw InvalidInput("subspace object needs a 'basis'");
    if (j.contains("ambient") &&
        (!j.at("ambient").is_number_integer() || j.at("ambient").get<long long>() != static_cast<long long>(space_.dim())))
      throw InvalidInput("subspace ambient dimension does not match the space");
    basis = &j.at("basis");
  }
  if (!basis->is_array()) throw InvalidInput("expected an array of rows");
  // [["f1", "e2"]] wraps a list of label rows once more
  auto labelish = [](const Json& x) {
    if (!x.is_string()) return false;
    const std::string& s = x.get_ref<const std::string&>();
    return s.find("sqrt") == std::string::npos &&
           std::any_of(s.begin(), s.end(), [](unsigned char c) { return std::isalpha(c); });
  };
  if (basis->size() == 1 && basis->front().is_array() && !basis->front().empty() &&
      std::all_of(basis->front().begin(), basis->front().end(), [](const Json& x) { return x.is_string(); }) &&
      std::any_of(basis->front().begin(), basis->front().end(), labelish))
    basis = &basis->front();
  std::vector<Vector> out;
  for (const auto& r : *basis) out.push_back(row(r));
  return out;
}

std::vector<Vector> InputParser::rows(const std::string& text) {
  std::string s = strip(text);
  if (s.empty()) throw InvalidInput("empty input");
  if (s.front() != '[' && s.front() != '{' && s.front() != '"') return {label_vector(s)};
  try {
    return rows(Json::parse(s));
  } catch (const Json::parse_error&) {
  }
  // bare form: [f1, e2+f2] or [[f1, e2, f2]]
  while (!s.empty() && s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
  std::vector<Vector> out;
  if (!s.empty())
    for (const auto& part : split_top(s, ',')) out.push_back(label_vector(part));
  return out;
}

Subspace InputParser::subspace(const Json& j) { return Subspace::span(space_.dim(), rows(j)); }

Subspace InputParser::subspace(const std::string& text) { return Subspace::span(space_.dim(), rows(text)); }

}  // namespace hypform
