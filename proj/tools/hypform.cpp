#include <hypform/certificate.hpp>
#include <hypform/enumerate.hpp>
#include <hypform/error.hpp>
#include <hypform/labels.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

using namespace hypform;

namespace {

enum Exit { ok = 0, failed = 1, invalid = 2, infeasible = 3, indeterminate = 4 };

struct Options {
  std::string command;
  std::string space;
  std::string n;
  std::string presentation;
  std::string input;
  std::string output;
  std::size_t max_len = 4;
  std::string predicate = "hyperbolic";
  std::uint64_t seed = 0x5eed;
  unsigned threads = 1;
  bool semigroup = false;
  std::string subspace, w1, w2, phi, subspaces, matrix, generators, first, second;
};

struct Outcome {
  int code = Exit::ok;
  Json body = Json::object();
};

// Values given on the command line win over the input document.
class Request {
 public:
  Request(const Options& o, Json doc) : o_(o), doc_(std::move(doc)) {}

  bool has(const std::string& flag, const char* key) const { return !flag.empty() || doc_.contains(key); }

  FormSpace space() const {
    Json s = doc_.contains("space") && doc_.at("space").is_object() ? doc_.at("space") : Json::object();
    std::string kind = !o_.space.empty() ? o_.space : s.value("kind", doc_.value("kind", std::string()));
    if (kind.empty()) throw InvalidInput("--space is required");
    std::size_t n = 0;
    if (!o_.n.empty()) n = parse_count(o_.n, "--n");
    else if (s.contains("n")) n = count_of(s.at("n"), "n");
    else if (doc_.contains("n")) n = count_of(doc_.at("n"), "n");
    else throw InvalidInput("--n is required");
    std::string pres = !o_.presentation.empty() ? o_.presentation : s.value("presentation", doc_.value("presentation", std::string("diagonal")));
    if (n > 64) throw InvalidInput("--n is limited to 64");
    return FormSpace(parse_form_kind(kind), n, parse_presentation(pres));
  }

  Json tower() const { return doc_.contains("tower") ? doc_.at("tower") : Json(); }

  Subspace subspace(InputParser& p, const std::string& flag, const char* key) const {
    if (!flag.empty()) return p.subspace(flag);
    if (doc_.contains(key)) return p.subspace(doc_.at(key));
    throw InvalidInput(std::string("--") + key + " is required");
  }

  std::vector<Vector> rows(InputParser& p, const std::string& flag, const char* key) const {
    if (!flag.empty()) return p.rows(flag);
    if (doc_.contains(key)) return p.rows(doc_.at(key));
    throw InvalidInput(std::string("--") + key + " is required");
  }

  Json document(const std::string& flag, const char* key) const {
    if (!flag.empty()) return parse_json(flag);
    if (doc_.contains(key)) return doc_.at(key);
    throw InvalidInput(std::string("--") + key + " is required");
  }

  ToralMap matrix() const { return toral_from_json(document(o_.matrix, "matrix")); }

  static std::size_t parse_count(const std::string& s, const char* what) {
    std::size_t used = 0;
    long long v = -1;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
    }
    if (v < 0 || used != s.size()) throw InvalidInput(std::string(what) + " must be a non-negative integer");
    return static_cast<std::size_t>(v);
  }

  static std::size_t count_of(const Json& j, const char* what) {
    if (j.is_number_unsigned()) return j.get<std::size_t>();
    if (j.is_string()) return parse_count(j.get<std::string>(), what);
    throw InvalidInput(std::string(what) + " must be a non-negative integer");
  }

  const Options& options() const { return o_; }
  const Json& doc() const { return doc_; }

 private:
  const Options& o_;
  Json doc_;
};

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read input file '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

Json load_document(const std::string& input) {
  if (input.empty()) return Json::object();
  std::string text = input.front() == '{' ? input : read_input(input);
  Json doc = parse_json(text);
  if (!doc.is_object()) throw InvalidInput("input document must be a JSON object");
  return doc;
}

// "2..6", "2-6" or "5".
std::pair<std::size_t, std::size_t> n_range(const std::string& s) {
  for (const std::string sep : {"..", "-"}) {
    if (auto at = s.find(sep); at != std::string::npos && at > 0) {
      std::size_t lo = Request::parse_count(s.substr(0, at), "--n"), hi = Request::parse_count(s.substr(at + sep.size()), "--n");
      if (hi < lo) throw InvalidInput("empty --n range");
      return {lo, hi};
    }
  }
  std::size_t n = Request::parse_count(s, "--n");
  return {n, n};
}

// "3,2" or {"p": 3, "two_r": 2}; "0,1,2" or {"l": 0, "p": 1, "q": 2}.
Json invariant_arg(const Request& req, const std::string& flag, const char* key, FormKind kind) {
  Json j;
  if (!flag.empty() && flag.front() != '{') {
    std::vector<std::size_t> v;
    std::stringstream ss(flag);
    for (std::string part; std::getline(ss, part, ',');) v.push_back(Request::parse_count(part, key));
    if (kind == FormKind::sp && v.size() == 2) j = Json{{"p", v[0]}, {"two_r", v[1]}};
    else if (kind == FormKind::so && v.size() == 3) j = Json{{"l", v[0]}, {"p", v[1]}, {"q", v[2]}};
    else throw InvalidInput(std::string("--") + key + " expects " + (kind == FormKind::sp ? "p,2r" : "l,p,q"));
    return j;
  }
  j = req.document(flag, key);
  const std::vector<const char*> keys = kind == FormKind::sp ? std::vector<const char*>{"p", "two_r"}
                                                             : std::vector<const char*>{"l", "p", "q"};
  Json clean;
  for (const char* k : keys) {
    if (!j.is_object() || !j.contains(k)) throw InvalidInput(std::string("--") + key + " is missing '" + k + "'");
    clean[k] = Request::count_of(j.at(k), k);
  }
  return clean;
}

Outcome with_certificate(Json payload, Json cert) {
  VerifyOutcome v = verify_document(parse_json(cert.dump()));
  Outcome out;
  out.body = std::move(payload);
  out.body["certificate"] = std::move(cert);
  out.body["status"] = v.ok ? "verified" : "failed";
  if (!v.ok) {
    out.code = Exit::failed;
    out.body["message"] = v.message;
    std::cerr << "certificate failed re-verification: " << v.message << "\n";
  }
  return out;
}

Json copy_fields(const Json& cert, std::initializer_list<const char*> keys) {
  Json out = Json::object();
  for (const char* k : keys)
    if (cert.contains(k)) out[k] = cert.at(k);
  return out;
}

Outcome run_invariants(const Request& req) {
  FormSpace space = req.space();
  InputParser p(space, req.tower());
  Subspace w = req.subspace(p, req.options().subspace, "subspace");
  return with_certificate(invariants_json(space, w), invariants_certificate(space, w));
}

Outcome run_perp(const Request& req) {
  FormSpace space = req.space();
  if (!space.has_form()) throw InvalidInput("perp needs --space sp or so");
  InputParser p(space, req.tower());
  Subspace w = req.subspace(p, req.options().subspace, "subspace");
  Json cert = perp_certificate(space, w);
  return with_certificate(copy_fields(cert, {"perp", "radical"}), cert);
}

Outcome run_witt(const Request& req) {
  FormSpace space = req.space();
  InputParser p(space, req.tower());
  const Options& o = req.options();
  if (req.has(o.phi, "phi")) {
    if (space.kind() != FormKind::so) throw InvalidInput("Witt extension needs --space so");
    Subspace w1 = req.has(o.w1, "w1") ? req.subspace(p, o.w1, "w1") : req.subspace(p, o.subspace, "subspace");
    std::vector<Vector> images = req.rows(p, o.phi, "phi");
    if (images.size() != w1.dim()) throw InvalidInput("--phi needs one image per basis row of the subspace");
    Matrix phi = Matrix::from_rows(images, space.dim());
    IsometryCertificate c = witt_extend(space, w1, Subspace::span(space.dim(), images), phi);
    Json cert = isometry_certificate(c);
    return with_certificate(copy_fields(cert, {"h", "claim"}), cert);
  }
  Subspace w = req.subspace(p, o.subspace, "subspace");
  if (space.kind() == FormKind::sp) {
    Json cert = witt_artin_certificate(space, w);
    return with_certificate(copy_fields(cert, {"h", "jc", "rad", "rest"}), cert);
  }
  if (space.kind() == FormKind::so) {
    Json cert = hyperbolic_completion_certificate(space, w);
    return with_certificate(copy_fields(cert, {"u", "pairs"}), cert);
  }
  throw InvalidInput("witt needs --space sp or so");
}

Outcome run_transport(const Request& req) {
  FormSpace space = req.space();
  InputParser p(space, req.tower());
  Subspace w1 = req.subspace(p, req.options().w1, "w1"), w2 = req.subspace(p, req.options().w2, "w2");
  Json cert = isometry_certificate(transport(space, w1, w2));
  return with_certificate(copy_fields(cert, {"h", "claim"}), cert);
}

Outcome run_arrange(const Request& req) {
  FormSpace space = req.space();
  InputParser p(space, req.tower());
  Subspace w1 = req.subspace(p, req.options().w1, "w1"), w2 = req.subspace(p, req.options().w2, "w2");
  IsometryCertificate c = arrange(space, w1, w2, req.options().seed);
  Json cert = isometry_certificate(c);
  Json payload = copy_fields(cert, {"h", "claim"});
  std::size_t total = w1.dim() + w2.dim(), d = space.dim();
  payload["intersection_dim"] = intersect(image(c.h, w1), w2).dim();
  payload["expected_dim"] = total > d ? total - d : 0;
  return with_certificate(payload, cert);
}

Outcome run_genpos(const Request& req) {
  FormSpace space = req.space();
  const Options& o = req.options();
  Json first = invariant_arg(req, o.first, "first", space.kind());
  Json second = invariant_arg(req, o.second, "second", space.kind());
  GeneralPositionWitness w;
  if (space.kind() == FormKind::sp) {
    w = genpos_sp(space.n(), {first["p"].get<std::size_t>(), first["two_r"].get<std::size_t>(), 0},
                  {second["p"].get<std::size_t>(), second["two_r"].get<std::size_t>(), 0});
  } else if (space.kind() == FormKind::so) {
    w = genpos_so(space.n(), {first["l"].get<std::size_t>(), first["p"].get<std::size_t>(), first["q"].get<std::size_t>()},
                  {second["l"].get<std::size_t>(), second["p"].get<std::size_t>(), second["q"].get<std::size_t>()});
  } else {
    throw InvalidInput("genpos needs --space sp or so");
  }
  Json cert = witness_certificate(w, first, second);
  Json payload = copy_fields(cert, {"entry", "steps", "repaired", "repair_reason", "y1", "y2"});
  // spanning vectors as basis labels, the way the constructions write them
  auto labelled = [&](const std::vector<Vector>& vs) {
    Json out = Json::array();
    for (const auto& v : vs) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        std::string c = to_string(v[i]);
        bool plain = v[i].is_rational();
        if (!s.empty()) s += plain && sgn(v[i].rational()) < 0 ? "" : "+";
        if (v[i] == Scalar(1)) c = "";
        else if (v[i] == Scalar(-1)) c = "-";
        else c = (plain ? c : "(" + c + ")") + "*";
        s += c + space.label(i);
      }
      out.push_back(s.empty() ? "0" : s);
    }
    return out;
  };
  payload["span1"] = labelled(w.spanning1);
  payload["span2"] = labelled(w.spanning2);
  return with_certificate(payload, cert);
}

Outcome run_stabilizer(const Request& req) {
  FormSpace space = req.space();
  InputParser p(space, req.tower());
  const Options& o = req.options();
  std::vector<Subspace> subs;
  if (req.has(o.subspaces, "subspaces")) {
    Json list = req.document(o.subspaces, "subspaces");
    if (!list.is_array() || list.empty()) throw InvalidInput("--subspaces must be a non-empty JSON array");
    for (const auto& s : list) subs.push_back(p.subspace(s));
  } else {
    subs.push_back(req.subspace(p, o.subspace, "subspace"));
  }
  StabilizerReport r = stabilizer_subalgebra(space, subs);
  Json cert = stabilizer_certificate(space, subs, r);
  return with_certificate(copy_fields(cert, {"dim", "scalars_only", "basis"}), cert);
}

Outcome run_spec(const Request& req) {
  Json cert = spectral_certificate(req.matrix());
  return with_certificate(copy_fields(cert, {"char_poly", "hyperbolicity", "codimension_one", "bands"}), cert);
}

Outcome run_bm_check(const Request& req) {
  Json cert = brin_manning_certificate(req.matrix());
  return with_certificate(copy_fields(cert, {"hyperbolic", "brin_manning", "bands"}), cert);
}

Outcome run_codim1(const Request& req) {
  Json cert = codimension_one_certificate(req.matrix());
  return with_certificate(
      copy_fields(cert, {"char_poly", "hyperbolic", "positive_roots", "roots_above_one", "codimension_one"}), cert);
}

Outcome run_gaps(const Request& req) {
  Json cert = gaps_certificate(req.matrix());
  return with_certificate(copy_fields(cert, {"gaps"}), cert);
}

Outcome run_search(const Request& req) {
  const Options& o = req.options();
  std::vector<ToralMap> gens;
  Json g = req.has(o.generators, "generators") ? (o.generators == "sp4" ? Json("sp4") : req.document(o.generators, "generators"))
                                               : Json("sp4");
  if (g.is_string() && g.get<std::string>() == "sp4") {
    gens = sp4_generators();
  } else {
    if (!g.is_array() || g.empty()) throw InvalidInput("--generators must be \"sp4\" or a non-empty array of matrices");
    for (const auto& m : g) gens.push_back(toral_from_json(m));
  }
  std::size_t max_len = o.max_len;
  if (max_len == 0 || max_len > 12) throw InvalidInput("--max-len must be between 1 and 12");
  WordPredicate pred = parse_word_predicate(o.predicate);
  std::vector<WordHit> hits = search_words(gens, max_len, pred, o.semigroup, std::max(1u, o.threads));
  Json cert = word_search_certificate(gens, max_len, pred, o.semigroup, hits);
  Outcome out = with_certificate(Json{{"count", hits.size()}, {"hits", cert.at("hits")}}, cert);
  if (hits.empty() && out.code == Exit::ok) {
    out.code = Exit::infeasible;
    out.body["status"] = "infeasible";
    out.body["reason"] = "empty search";
    std::cerr << "no word up to length " << max_len << " satisfies " << to_string(pred) << "\n";
  }
  return out;
}

Outcome run_enumerate(const Request& req) {
  const Options& o = req.options();
  std::string kind = !o.space.empty() ? o.space : req.doc().value("kind", std::string());
  if (kind.empty()) throw InvalidInput("--space is required");
  std::string n = !o.n.empty() ? o.n : req.doc().contains("n") ? req.doc().at("n").dump() : "";
  if (n.empty()) throw InvalidInput("--n is required");
  if (n.front() == '"') n = n.substr(1, n.size() - 2);
  auto [lo, hi] = n_range(n);
  EnumerationReport rep = enumerate_validate(parse_form_kind(kind), lo, hi);
  Json repaired = Json::array(), failures = Json::array(), per_n = Json::object();
  for (const auto& c : rep.cases) {
    Json row{{"n", c.n}, {"first", c.first}, {"second", c.second}, {"entry", c.entry}, {"detail", c.detail}};
    if (c.repaired) repaired.push_back(row);
    if (!c.passed) failures.push_back(row);
    Json& slot = per_n[std::to_string(c.n)];
    if (slot.is_null()) slot = Json{{"cases", 0}, {"pass", 0}, {"fail", 0}, {"repaired", 0}};
    slot["cases"] = slot["cases"].get<int>() + 1;
    slot[c.passed ? "pass" : "fail"] = slot[c.passed ? "pass" : "fail"].get<int>() + 1;
    if (c.repaired) slot["repaired"] = slot["repaired"].get<int>() + 1;
  }
  Outcome out;
  out.body = Json{{"kind", to_string(rep.kind)},
                  {"n_min", lo},
                  {"n_max", hi},
                  {"cases", rep.cases.size()},
                  {"pass", rep.pass},
                  {"fail", rep.fail},
                  {"repaired", rep.repaired},
                  {"per_n", per_n},
                  {"repaired_entries", repaired},
                  {"failures", failures},
                  {"status", rep.ok() ? "verified" : "failed"}};
  std::cerr << to_string(rep.kind) << " n=" << lo << ".." << hi << ": " << rep.cases.size() << " cases, " << rep.pass
            << " pass, " << rep.fail << " fail, " << rep.repaired << " repaired\n";
  if (!rep.ok()) out.code = Exit::failed;
  return out;
}

Outcome run_verify(const Request& req) {
  if (req.doc().empty()) throw InvalidInput("verify needs a certificate via --input");
  VerifyOutcome v = verify_document(req.doc());
  Outcome out;
  out.body = Json{{"kind", v.kind}, {"verified", v.ok}, {"status", v.ok ? "verified" : "failed"}, {"message", v.message}};
  if (!v.ok) {
    out.code = Exit::failed;
    std::cerr << "verification failed: " << v.message << "\n";
  }
  return out;
}

Json tower_summary(const Json& body) {
  if (!body.contains("certificate") || !body.at("certificate").contains("tower")) return Json{{"levels", 0}, {"radicands", Json::array()}};
  const Json& t = body.at("certificate").at("tower");
  return Json{{"levels", t.size()}, {"radicands", t}};
}

Outcome error_outcome(int code, const std::string& status, const std::string& message, const std::string& reason = "") {
  Outcome out;
  out.code = code;
  out.body = Json{{"status", status}, {"message", message}};
  if (!reason.empty()) out.body["reason"] = reason;
  std::cerr << "error: " << message << "\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact form-space and toral-automorphism computations"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Options o;
  app.add_option("--space", o.space, "sl, sp or so");
  app.add_option("--n", o.n, "n (dim 2n for sp/so, n for sl); a range like 2..6 for enumerate-validate");
  app.add_option("--presentation", o.presentation, "diagonal or split (so only)");
  app.add_option("-i,--input", o.input, "input document: path, - for stdin, or inline JSON");
  app.add_option("-o,--output", o.output, "also write the JSON result here");
  app.add_option("--max-len", o.max_len, "longest word for search");
  app.add_option("--predicate", o.predicate, "hyperbolic, codim_one, brin_manning or anosov");
  app.add_option("--seed", o.seed, "seed for randomized searches");
  app.add_option("--threads", o.threads, "worker threads");
  app.add_flag("--semigroup", o.semigroup, "search positive words only");
  app.add_option("--subspace", o.subspace, "subspace: JSON rows or labels like [f1,e2+f2]");
  app.add_option("--w1", o.w1, "first subspace");
  app.add_option("--w2", o.w2, "second subspace");
  app.add_option("--phi", o.phi, "images of the subspace's canonical basis rows");
  app.add_option("--subspaces", o.subspaces, "JSON array of subspaces");
  app.add_option("--matrix", o.matrix, "integer matrix, e.g. [[2,1],[1,1]]");
  app.add_option("--generators", o.generators, "sp4 or a JSON array of integer matrices");
  app.add_option("--first", o.first, "invariants of Y1: p,2r or l,p,q");
  app.add_option("--second", o.second, "invariants of Y2");

  using Runner = Outcome (*)(const Request&);
  const std::vector<std::pair<std::string, Runner>> commands = {
      {"invariants", run_invariants}, {"perp", run_perp},       {"witt", run_witt},
      {"transport", run_transport},   {"genpos", run_genpos},   {"arrange", run_arrange},
      {"stabilizer", run_stabilizer}, {"spec", run_spec},       {"bm-check", run_bm_check},
      {"codim1", run_codim1},         {"gaps", run_gaps},       {"search", run_search},
      {"enumerate-validate", run_enumerate}, {"verify", run_verify},
  };
  for (const auto& [name, fn] : commands) app.add_subcommand(name, "");

  Outcome out;
  auto start = std::chrono::steady_clock::now();
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    out = error_outcome(Exit::invalid, "invalid_input", e.what());
    std::cout << out.body.dump(2) << "\n";
    return out.code;
  }
  for (const auto& [name, fn] : commands)
    if (app.got_subcommand(name)) o.command = name;

  try {
    Json doc = load_document(o.input);
    // document values for scalar flags that were not given
    auto given = [&](const char* flag) { return app.get_option(flag)->count() > 0; };
    if (!given("--max-len") && doc.contains("max_len")) o.max_len = Request::count_of(doc.at("max_len"), "max_len");
    if (!given("--seed") && doc.contains("seed")) o.seed = Request::count_of(doc.at("seed"), "seed");
    if (!given("--threads") && doc.contains("threads")) o.threads = static_cast<unsigned>(Request::count_of(doc.at("threads"), "threads"));
    if (!given("--predicate") && doc.contains("predicate") && doc.at("predicate").is_string()) o.predicate = doc.at("predicate").get<std::string>();
    if (!given("--semigroup") && doc.contains("semigroup") && doc.at("semigroup").is_boolean()) o.semigroup = doc.at("semigroup").get<bool>();
    Request req(o, std::move(doc));
    for (const auto& [name, fn] : commands)
      if (name == o.command) out = fn(req);
  } catch (const Infeasible& e) {
    out = error_outcome(Exit::infeasible, "infeasible", e.what(), e.reason());
  } catch (const Indeterminate& e) {
    out = error_outcome(Exit::indeterminate, "indeterminate", e.what());
  } catch (const VerificationFailure& e) {
    out = error_outcome(Exit::failed, "failed", e.what());
  } catch (const InvalidInput& e) {
    out = error_outcome(Exit::invalid, "invalid_input", e.what());
  } catch (const DivisionByZero& e) {
    out = error_outcome(Exit::invalid, "invalid_input", e.what());
  } catch (const IncompatibleTower& e) {
    out = error_outcome(Exit::invalid, "invalid_input", e.what());
  } catch (const Json::exception& e) {
    out = error_outcome(Exit::invalid, "invalid_input", std::string("malformed input: ") + e.what());
  } catch (const std::exception& e) {
    out = error_outcome(Exit::failed, "failed", e.what());
  }
  Json doc{{"command", o.command}, {"status", out.body.value("status", std::string("verified"))}};
  for (const auto& [k, v] : out.body.items())
    if (k != "status" && k != "certificate") doc[k] = v;
  if (out.body.contains("certificate")) doc["certificate"] = out.body.at("certificate");
  doc["tower_summary"] = tower_summary(out.body);
  doc["elapsed_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  out.body = std::move(doc);
  std::string text = out.body.dump(2);
  std::cout << text << "\n";
  if (!o.output.empty()) {
    std::ofstream f(o.output);
    if (!f) {
      std::cerr << "cannot write " << o.output << "\n";
      return Exit::invalid;
    }
    f << text << "\n";
  }
  return out.code;
}
