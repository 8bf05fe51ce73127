#include <hypform/certificate.hpp>
#include <hypform/error.hpp>

#include <functional>
#include <map>

namespace hypform {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("certificate is missing '") + key + "'");
  return j.at(key);
}

bool boolean(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_boolean()) throw InvalidInput(std::string("'") + key + "' must be a boolean");
  return v.get<bool>();
}

std::string text(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw InvalidInput(std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

std::size_t count(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) throw InvalidInput(std::string("'") + key + "' must be a count");
  return v.get<std::size_t>();
}

Json finish(Json doc, const JsonWriter& w) {
  doc["tower"] = w.tower();
  return doc;
}

// key order is irrelevant when comparing claims
bool same(const Json& a, const Json& b) { return nlohmann::json::parse(a.dump()) == nlohmann::json::parse(b.dump()); }

VerifyOutcome outcome(const std::string& kind, bool ok, const std::string& failure) {
  return {ok, kind, ok ? "verified" : failure};
}

}  // namespace

Json invariants_json(const FormSpace& space, const Subspace& w) {
  Json out{{"dim", w.dim()}};
  if (space.kind() == FormKind::sp) {
    RankProfile r = symplectic_rank(space, w);
    out["p"] = r.p;
    out["two_r"] = r.two_r;
    out["radical_dim"] = r.radical_dim;
  } else if (space.kind() == FormKind::so) {
    SignatureTriple s = signature(space, w);
    out["l"] = s.l;
    out["p"] = s.p;
    out["q"] = s.q;
  }
  return out;
}

Json isometry_certificate(const IsometryCertificate& c) {
  JsonWriter w;
  Json doc{{"kind", "isometry"},
           {"space", space_to_json(c.space)},
           {"h", w.matrix(c.h)},
           {"w1", w.subspace(c.w1)},
           {"w2", w.subspace(c.w2)},
           {"claim", c.claim},
           {"verified", c.verified}};
  return finish(doc, w);
}

Json witness_certificate(const GeneralPositionWitness& g, const Json& first, const Json& second) {
  JsonWriter w;
  FormSpace space(g.kind, g.n);
  Json steps = Json::array();
  for (const auto& s : g.steps) steps.push_back(s);
  Json doc{{"kind", "general_position_witness"},
           {"space", space_to_json(space)},
           {"first", first},
           {"second", second},
           {"y1", w.subspace(g.y1)},
           {"y2", w.subspace(g.y2)},
           {"spanning1", Json::array()},
           {"spanning2", Json::array()},
           {"entry", g.entry},
           {"steps", steps},
           {"repaired", g.repaired},
           {"repair_reason", g.repair_reason}};
  for (const auto& v : g.spanning1) doc["spanning1"].push_back(w.vector(v));
  for (const auto& v : g.spanning2) doc["spanning2"].push_back(w.vector(v));
  return finish(doc, w);
}

Json invariants_certificate(const FormSpace& space, const Subspace& sub) {
  JsonWriter w;
  Json doc{{"kind", "invariants"}, {"space", space_to_json(space)}, {"w", w.subspace(sub)}, {"values", invariants_json(space, sub)}};
  return finish(doc, w);
}

Json perp_certificate(const FormSpace& space, const Subspace& sub) {
  JsonWriter w;
  Json doc{{"kind", "perp"},
           {"space", space_to_json(space)},
           {"w", w.subspace(sub)},
           {"perp", w.subspace(perp(space, sub))},
           {"radical", w.subspace(radical(space, sub))}};
  return finish(doc, w);
}

Json witt_artin_certificate(const FormSpace& space, const Subspace& sub) {
  JsonWriter w;
  WittArtinDecomposition d = witt_artin(space, sub);
  Json doc{{"kind", "witt_artin"},      {"space", space_to_json(space)}, {"w", w.subspace(sub)},
           {"h", w.subspace(d.h)},      {"jc", w.subspace(d.jc)},        {"rad", w.subspace(d.rad)},
           {"rest", w.subspace(d.rest)}};
  return finish(doc, w);
}

Json hyperbolic_completion_certificate(const FormSpace& space, const Subspace& sub) {
  JsonWriter w;
  HyperbolicCompletion hc = hyperbolic_complete(space, sub);
  Json pairs = Json::array();
  for (const auto& [a, b] : hc.pairs) pairs.push_back(Json{{"w", w.vector(a)}, {"z", w.vector(b)}});
  Json doc{{"kind", "hyperbolic_completion"}, {"space", space_to_json(space)}, {"w", w.subspace(sub)},
           {"u", w.subspace(hc.u)},           {"pairs", pairs}};
  return finish(doc, w);
}

Json stabilizer_certificate(const FormSpace& space, const std::vector<Subspace>& subs, const StabilizerReport& r) {
  JsonWriter w;
  Json ws = Json::array(), basis = Json::array();
  for (const auto& s : subs) ws.push_back(w.subspace(s));
  for (const auto& x : r.basis) basis.push_back(w.matrix(x));
  Json doc{{"kind", "stabilizer"}, {"space", space_to_json(space)}, {"subspaces", ws},
           {"basis", basis},       {"dim", r.dim()},                {"scalars_only", r.scalars_only}};
  return finish(doc, w);
}

Json bands_json(const SpectralBands& b) {
  return Json{{"lambda1", interval_to_json(b.lambda1)}, {"lambda2", interval_to_json(b.lambda2)},
              {"mu2", interval_to_json(b.mu2)},         {"mu1", interval_to_json(b.mu1)},
              {"s", b.s},                               {"u", b.u}};
}

Json gap_json(const DominationCertificate& c) {
  return Json{{"dim_e", c.dim_e},
              {"dim_f", c.dim_f},
              {"rho_e", interval_to_json(c.rho_e)},
              {"rho_f", interval_to_json(c.rho_f)},
              {"gap", interval_to_json(c.gap)},
              {"C", to_string(c.c)},
              {"lambda", interval_to_json(c.lambda)},
              {"diagonalizable", c.diagonalizable}};
}

Json spectral_certificate(const ToralMap& m) {
  Hyperbolicity h = hyperbolicity(m);
  Json doc{{"kind", "spectral"},
           {"matrix", toral_to_json(m)},
           {"char_poly", to_string(char_poly(m))},
           {"hyperbolicity", to_string(h)},
           {"codimension_one", codimension_one(m)}};
  doc["bands"] = h == Hyperbolicity::hyperbolic ? bands_json(spectral_bands(m)) : Json();
  return doc;
}

Json brin_manning_certificate(const ToralMap& m) {
  bool hyp = is_anosov_toral(m);
  Json doc{{"kind", "brin_manning"}, {"matrix", toral_to_json(m)}, {"hyperbolic", hyp}};
  if (hyp) {
    doc["brin_manning"] = brin_manning(m);
    doc["bands"] = bands_json(spectral_bands(m));
  } else {
    doc["brin_manning"] = Json();
  }
  return doc;
}

Json codimension_one_certificate(const ToralMap& m) {
  Poly p = char_poly(m);
  return Json{{"kind", "codimension_one"},
              {"matrix", toral_to_json(m)},
              {"char_poly", to_string(p)},
              {"hyperbolic", is_anosov_toral(m)},
              {"positive_roots", real_roots_above(p, 0)},
              {"roots_above_one", real_roots_above(p, 1)},
              {"codimension_one", codimension_one(m)}};
}

Json gaps_certificate(const ToralMap& m) {
  Json gaps = Json::array();
  for (const auto& c : dominated_gaps(m)) gaps.push_back(gap_json(c));
  return Json{{"kind", "dominated_gaps"}, {"matrix", toral_to_json(m)}, {"gaps", gaps}};
}

Json word_search_certificate(const std::vector<ToralMap>& generators, std::size_t max_len, WordPredicate predicate,
                             bool semigroup, const std::vector<WordHit>& hits) {
  Json gens = Json::array(), out = Json::array();
  for (const auto& g : generators) gens.push_back(toral_to_json(g));
  for (const auto& h : hits)
    out.push_back(Json{{"word", word_to_string(h.letters)}, {"letters", h.letters}, {"matrix", toral_to_json(h.matrix)}});
  return Json{{"kind", "word_search"}, {"generators", gens},     {"max_len", max_len},
              {"predicate", to_string(predicate)}, {"semigroup", semigroup}, {"hits", out}};
}

namespace {

// Claimed enclosure still holds when a fresh, finer enclosure sits inside it.
bool encloses(const RationalInterval& claimed, const std::function<RationalInterval(unsigned)>& fresh) {
  for (unsigned bits = 128; bits <= max_precision_bits(); bits *= 2) {
    RationalInterval f = fresh(bits);
    if (claimed.lo <= f.lo && f.hi <= claimed.hi) return true;
    if (f.hi < claimed.lo || claimed.hi < f.lo) return false;
  }
  return false;
}

bool bands_hold(const Json& claimed, const ToralMap& m) {
  auto at = [&](unsigned bits) { return spectral_bands(m, bits); };
  if (count(claimed, "s") != at(64).s || count(claimed, "u") != at(64).u) return false;
  return encloses(interval_from_json(field(claimed, "lambda1")), [&](unsigned b) { return at(b).lambda1; }) &&
         encloses(interval_from_json(field(claimed, "lambda2")), [&](unsigned b) { return at(b).lambda2; }) &&
         encloses(interval_from_json(field(claimed, "mu2")), [&](unsigned b) { return at(b).mu2; }) &&
         encloses(interval_from_json(field(claimed, "mu1")), [&](unsigned b) { return at(b).mu1; });
}

VerifyOutcome verify_isometry(const Json& doc) {
  FormSpace space = space_from_json(field(doc, "space"));
  JsonReader r(field(doc, "tower"));
  IsometryCertificate c;
  c.space = space;
  c.h = r.matrix(field(doc, "h"), space.dim(), space.dim());
  c.w1 = r.subspace(field(doc, "w1"), space.dim());
  c.w2 = r.subspace(field(doc, "w2"), space.dim());
  c.claim = text(doc, "claim");
  return outcome("isometry", verify_certificate(c), "h fails the exact isometry or subspace check");
}

VerifyOutcome verify_witness(const Json& doc) {
  FormSpace space = space_from_json(field(doc, "space"));
  JsonReader r(field(doc, "tower"));
  Subspace y1 = r.subspace(field(doc, "y1"), space.dim()), y2 = r.subspace(field(doc, "y2"), space.dim());
  const Json &a = field(doc, "first"), &b = field(doc, "second");
  auto matches = [&](const Subspace& y, const Json& want) {
    Json got = invariants_json(space, y);
    for (const auto& [k, v] : want.items())
      if (!got.contains(k) || !same(got.at(k), v)) return false;
    return true;
  };
  if (!matches(y1, a) || !matches(y2, b)) return outcome("general_position_witness", false, "invariants differ from the request");
  std::vector<Vector> s1, s2;
  for (const auto& v : field(doc, "spanning1")) s1.push_back(r.vector(v, space.dim()));
  for (const auto& v : field(doc, "spanning2")) s2.push_back(r.vector(v, space.dim()));
  if (Subspace::span(space.dim(), s1) != y1 || Subspace::span(space.dim(), s2) != y2)
    return outcome("general_position_witness", false, "spanning vectors do not span the subspaces");
  return outcome("general_position_witness", in_general_position(y1, y2), "subspaces are not in general position");
}

VerifyOutcome verify_invariants(const Json& doc) {
  FormSpace space = space_from_json(field(doc, "space"));
  JsonReader r(field(doc, "tower"));
  Subspace w = r.subspace(field(doc, "w"), space.dim());
  return outcome("invariants", same(invariants_json(space, w), field(doc, "values")), "recomputed invariants differ");
}

VerifyOutcome verify_perp(const Json& doc) {
  FormSpace space = space_from_json(field(doc, "space"));
  JsonReader r(field(doc, "tower"));
  Subspace w = r.subspace(field(doc, "w"), space.dim());
  Subspace p = r.subspace(field(doc, "perp"), space.dim()), rad = r.subspace(field(doc, "radical"), space.dim());
  bool ok = p.dim() + w.dim() == space.dim() && rad == intersect(w, p);
  for (const auto& a : w.vectors())
    for (const auto& b : p.vectors()) ok = ok && space.pair(a, b).is_zero();
  return outcome("perp", ok, "claimed perp or radical is wrong");
}

VerifyOutcome verify_witt_artin(const Json& doc) {
  FormSpace space = space_from_json(field(doc, "space"));
  JsonReader r(field(doc, "tower"));
  const std::size_t d = space.dim();
  Subspace w = r.subspace(field(doc, "w"), d);
  Subspace h = r.subspace(field(doc, "h"), d), jc = r.subspace(field(doc, "jc"), d);
  Subspace rad = r.subspace(field(doc, "rad"), d), rest = r.subspace(field(doc, "rest"), d);
  Subspace wp = perp(space, w);
  auto nondegenerate = [&](const Subspace& s) { return intersect(s, perp(space, s)).is_zero(); };
  auto trivial = [](const Subspace& a, const Subspace& b) { return intersect(a, b).is_zero(); };
  bool ok = rad == intersect(w, wp) && sum(h, rad) == w && trivial(h, rad) && sum(jc, rad) == wp && trivial(jc, rad) &&
            nondegenerate(h) && nondegenerate(jc) && rest == perp(space, sum(h, jc)) && perp(space, h).contains(jc) &&
            rest.contains(rad) && 2 * rad.dim() == rest.dim();
  return outcome("witt_artin", ok, "decomposition invariants fail");
}

VerifyOutcome verify_hyperbolic_completion(const Json& doc) {
  FormSpace space = space_from_json(field(doc, "space"));
  JsonReader r(field(doc, "tower"));
  const std::size_t d = space.dim();
  Subspace w = r.subspace(field(doc, "w"), d), u = r.subspace(field(doc, "u"), d);
  std::vector<Vector> ws, zs;
  for (const auto& p : field(doc, "pairs")) {
    ws.push_back(r.vector(field(p, "w"), d));
    zs.push_back(r.vector(field(p, "z"), d));
  }
  bool ok = Subspace::span(d, ws) == radical(space, w) && ws.size() == radical(space, w).dim() &&
            Subspace::span(d, zs) == u && u.dim() == zs.size();
  for (std::size_t i = 0; ok && i < ws.size(); ++i)
    for (std::size_t j = 0; ok && j < zs.size(); ++j) {
      ok = space.pair(ws[i], zs[j]) == Scalar(i == j ? 1 : 0) && space.pair(zs[i], zs[j]).is_zero();
    }
  if (ok) {
    Subspace total = sum(w, u);
    ok = total.dim() == w.dim() + u.dim() && radical(space, total).is_zero();
  }
  return outcome("hyperbolic_completion", ok, "completion fails its pairing checks");
}

VerifyOutcome verify_stabilizer(const Json& doc) {
  FormSpace space = space_from_json(field(doc, "space"));
  JsonReader r(field(doc, "tower"));
  const std::size_t d = space.dim();
  std::vector<Subspace> subs;
  for (const auto& s : field(doc, "subspaces")) subs.push_back(r.subspace(s, d));
  std::vector<Matrix> basis;
  for (const auto& x : field(doc, "basis")) basis.push_back(r.matrix(x, d, d));
  bool scalars = true;
  std::vector<Vector> flat;
  for (const auto& x : basis) {
    if (space.kind() == FormKind::sl) {
      Scalar tr = 0;
      for (std::size_t i = 0; i < d; ++i) tr += x(i, i);
      if (!tr.is_zero()) return outcome("stabilizer", false, "basis element is not traceless");
    } else if (!(x.transpose() * space.gram() + space.gram() * x).is_zero()) {
      return outcome("stabilizer", false, "basis element is not in the Lie algebra");
    }
    for (const auto& w : subs)
      for (const auto& v : w.vectors())
        if (!w.contains(x * v)) return outcome("stabilizer", false, "basis element does not preserve a subspace");
    if (x != x(0, 0) * Matrix::identity(d)) scalars = false;
    Vector f;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) f.push_back(x(i, j));
    flat.push_back(std::move(f));
  }
  if (!flat.empty() && rank(Matrix::from_rows(flat, d * d)) != flat.size())
    return outcome("stabilizer", false, "basis is dependent");
  StabilizerReport fresh = stabilizer_subalgebra(space, subs);
  bool ok = fresh.dim() == basis.size() && count(doc, "dim") == basis.size() && boolean(doc, "scalars_only") == scalars;
  return outcome("stabilizer", ok, "dimension or verdict differs from the recomputation");
}

VerifyOutcome verify_spectral(const Json& doc) {
  ToralMap m = toral_from_json(field(doc, "matrix"));
  Hyperbolicity h = hyperbolicity(m);
  bool ok = text(doc, "char_poly") == to_string(char_poly(m)) && text(doc, "hyperbolicity") == to_string(h) &&
            boolean(doc, "codimension_one") == codimension_one(m);
  if (ok && h == Hyperbolicity::hyperbolic) ok = bands_hold(field(doc, "bands"), m);
  return outcome("spectral", ok, "spectral claims differ from the recomputation");
}

VerifyOutcome verify_brin_manning(const Json& doc) {
  ToralMap m = toral_from_json(field(doc, "matrix"));
  bool hyp = is_anosov_toral(m);
  bool ok = boolean(doc, "hyperbolic") == hyp;
  if (ok && hyp) ok = boolean(doc, "brin_manning") == brin_manning(m) && bands_hold(field(doc, "bands"), m);
  if (ok && !hyp) ok = field(doc, "brin_manning").is_null();
  return outcome("brin_manning", ok, "Brin-Manning claims differ from the recomputation");
}

VerifyOutcome verify_codimension_one(const Json& doc) {
  ToralMap m = toral_from_json(field(doc, "matrix"));
  Json fresh = codimension_one_certificate(m);
  bool ok = true;
  for (const char* k : {"char_poly", "hyperbolic", "positive_roots", "roots_above_one", "codimension_one"})
    ok = ok && same(field(doc, k), fresh.at(k));
  return outcome("codimension_one", ok, "codimension-one claims differ from the recomputation");
}

VerifyOutcome verify_gaps(const Json& doc) {
  ToralMap m = toral_from_json(field(doc, "matrix"));
  const Json& gaps = field(doc, "gaps");
  std::vector<DominationCertificate> fresh = dominated_gaps(m, 64);
  if (!gaps.is_array() || gaps.size() != fresh.size()) return outcome("dominated_gaps", false, "number of gaps differs");
  for (std::size_t i = 0; i < fresh.size(); ++i) {
    const Json& g = gaps[i];
    if (count(g, "dim_e") != fresh[i].dim_e || count(g, "dim_f") != fresh[i].dim_f ||
        boolean(g, "diagonalizable") != fresh[i].diagonalizable || parse_rational(text(g, "C")) != fresh[i].c)
      return outcome("dominated_gaps", false, "gap structure differs");
    for (const char* k : {"rho_e", "rho_f", "gap", "lambda"}) {
      auto pick = [&, k](unsigned bits) {
        DominationCertificate c = dominated_gaps(m, bits)[i];
        std::string key = k;
        return key == "rho_e" ? c.rho_e : key == "rho_f" ? c.rho_f : key == "gap" ? c.gap : c.lambda;
      };
      if (!encloses(interval_from_json(field(g, k)), pick))
        return outcome("dominated_gaps", false, std::string("claimed ") + k + " does not enclose the recomputation");
    }
    if (sgn(interval_from_json(field(g, "lambda")).lo) <= 0) return outcome("dominated_gaps", false, "lambda is not positive");
  }
  return outcome("dominated_gaps", true, "");
}

VerifyOutcome verify_word_search(const Json& doc) {
  std::vector<ToralMap> gens;
  for (const auto& g : field(doc, "generators")) gens.push_back(toral_from_json(g));
  if (gens.empty()) throw InvalidInput("word search certificate without generators");
  std::size_t max_len = count(doc, "max_len");
  WordPredicate pred = parse_word_predicate(text(doc, "predicate"));
  bool semigroup = boolean(doc, "semigroup");
  std::vector<ToralMap> letters;
  for (const auto& g : gens) {
    letters.push_back(g);
    letters.push_back(inverse(g));
  }
  std::vector<std::size_t> prev;
  for (const auto& h : field(doc, "hits")) {
    const Json& lj = field(h, "letters");
    if (!lj.is_array() || lj.empty() || lj.size() > max_len) return outcome("word_search", false, "word length out of range");
    std::vector<std::size_t> word;
    ToralMap product = ToralMap::identity(gens.front().d());
    for (const auto& l : lj) {
      if (!l.is_number_unsigned() || l.get<std::size_t>() >= letters.size()) throw InvalidInput("bad letter in word");
      std::size_t x = l.get<std::size_t>();
      if (semigroup && x % 2 == 1) return outcome("word_search", false, "inverse letter in a semigroup search");
      if (!word.empty() && (word.back() ^ 1u) == x) return outcome("word_search", false, "word is not reduced");
      word.push_back(x);
      product = product * letters[x];
    }
    bool ordered = prev.empty() || prev.size() < word.size() || (prev.size() == word.size() && prev < word);
    if (!ordered) return outcome("word_search", false, "hits are not in canonical order");
    if (toral_from_json(field(h, "matrix")) != product) return outcome("word_search", false, "word product differs");
    bool holds = satisfies(product, pred);
    if (!holds) return outcome("word_search", false, "a hit fails the predicate");
    prev = word;
  }
  return outcome("word_search", true, "");
}

}  // namespace

VerifyOutcome verify_document(const Json& input) {
  const Json& doc = input.is_object() && input.contains("certificate") ? input.at("certificate") : input;
  static const std::map<std::string, std::function<VerifyOutcome(const Json&)>> table = {
      {"isometry", verify_isometry},
      {"general_position_witness", verify_witness},
      {"invariants", verify_invariants},
      {"perp", verify_perp},
      {"witt_artin", verify_witt_artin},
      {"hyperbolic_completion", verify_hyperbolic_completion},
      {"stabilizer", verify_stabilizer},
      {"spectral", verify_spectral},
      {"brin_manning", verify_brin_manning},
      {"codimension_one", verify_codimension_one},
      {"dominated_gaps", verify_gaps},
      {"word_search", verify_word_search},
  };
  std::string kind = text(doc, "kind");
  auto it = table.find(kind);
  if (it == table.end()) throw InvalidInput("unknown certificate kind '" + kind + "'");
  return it->second(doc);
}

}  // namespace hypform
