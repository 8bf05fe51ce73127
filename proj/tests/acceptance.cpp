// One PASS/FAIL line per acceptance criterion.

#include <hypform/certificate.hpp>
#include <hypform/enumerate.hpp>
#include <hypform/error.hpp>

#include "cli_runner.hpp"
#include "support.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace hypform;
namespace ht = hypform::testing;

namespace {

struct Verdict {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<Verdict()>& body) {
  auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& err) {
    v.ok = false;
    v.note = std::string("exception: ") + err.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0 && secs > limit_s) {
    std::ostringstream s;
    s << "over the " << limit_s << "s budget" << (v.note.empty() ? "" : "; " + v.note);
    v.ok = false;
    v.note = s.str();
  }
  if (!v.ok) ++failures;
  std::cout << (v.ok ? "PASS" : "FAIL") << " [" << id << "] " << title << " (" << std::fixed;
  std::cout.precision(2);
  std::cout << secs << "s)" << (v.note.empty() ? "" : " - " + v.note) << std::endl;
}

Vector e(std::size_t n, std::size_t i) { return unit_vector(2 * n, i - 1); }
Vector f(std::size_t n, std::size_t i) { return unit_vector(2 * n, n + i - 1); }

std::size_t expected_meet(const Subspace& a, const Subspace& b) {
  std::size_t s = a.dim() + b.dim();
  return s > a.ambient() ? s - a.ambient() : 0;
}

Subspace random_any(ht::Rng& rng, std::size_t d) {
  return ht::random_subspace(rng, d, static_cast<std::size_t>(ht::uniform(rng, 0, static_cast<long>(d))));
}

bool near(const RationalInterval& x, double v, double tol) { return x.lo.get_d() >= v - tol && x.hi.get_d() <= v + tol; }

Verdict base_cases() {
  Verdict v;
  struct Base {
    RankProfile a, b;
    std::vector<Vector> y1, y2;
    std::string entry;
  };
  const std::size_t n = 2;
  std::vector<Base> cases{
      {{1, 0}, {3, 2}, {e(n, 1)}, {f(n, 1), e(n, 2), f(n, 2)}, "base (1)"},
      {{2, 2}, {2, 2}, {e(n, 1), f(n, 1)}, {e(n, 2), f(n, 2)}, "base (2)"},
      {{2, 2}, {2, 0}, {e(n, 1), f(n, 1)}, {e(n, 2) - e(n, 1), f(n, 2) + f(n, 1)}, "base (3)"},
      {{2, 0}, {2, 0}, {e(n, 1), e(n, 2)}, {f(n, 1), f(n, 2)}, "base (4)"},
  };
  FormSpace sp = FormSpace::symplectic(n);
  for (const auto& c : cases) {
    GeneralPositionWitness w = genpos_sp(n, c.a, c.b);
    v.require(w.entry == c.entry, c.entry + " came from " + w.entry);
    v.require(w.spanning1 == c.y1 && w.spanning2 == c.y2, c.entry + " vectors differ");
    v.require(symplectic_rank(sp, w.y1) == c.a && symplectic_rank(sp, w.y2) == c.b, c.entry + " profiles differ");
    v.require(in_general_position(w.y1, w.y2), c.entry + " not in general position");
    Json cert = witness_certificate(w, Json{{"p", c.a.p}, {"two_r", c.a.two_r}}, Json{{"p", c.b.p}, {"two_r", c.b.two_r}});
    v.require(verify_document(cert).ok, c.entry + " certificate rejected");
  }
  return v;
}

Verdict exhaustive(FormKind kind, std::size_t lo, std::size_t hi, const std::string& listing) {
  Verdict v;
  EnumerationReport r = enumerate_validate(kind, lo, hi);
  std::ostringstream s;
  s << r.cases.size() << " cases, " << r.pass << " pass, " << r.fail << " fail, " << r.repaired << " repaired";
  if (!listing.empty()) {
    std::ofstream out(listing);
    for (const auto& c : r.cases)
      if (c.repaired) out << "n=" << c.n << " " << c.first << " | " << c.second << " : " << c.entry << " : " << c.detail << "\n";
    s << " (listed in " << listing << ")";
  }
  for (const auto& c : r.cases)
    if (!c.passed) v.require(false, "n=" + std::to_string(c.n) + " " + c.first + " | " + c.second + ": " + c.detail);
  v.require(r.ok(), "report not ok");
  v.require(!r.cases.empty(), "no cases");
  v.note = v.ok ? s.str() : v.note + "; " + s.str();
  return v;
}

Verdict transports() {
  Verdict v;
  ht::Rng rng(4);
  for (FormKind kind : {FormKind::sp, FormKind::so}) {
    for (int i = 0; i < 1000; ++i) {
      std::size_t n = 2 + static_cast<std::size_t>(i % 4);
      FormSpace space(kind, n);
      Subspace w1 = random_any(rng, 2 * n);
      Subspace w2 = image(ht::random_group_element(rng, space), w1);
      IsometryCertificate c = transport(space, w1, w2);
      bool exact = is_isometry(space, c.h) && image(c.h, w1) == w2 && unimodular_determinant(c.h) == 1;
      v.require(exact, to_string(kind) + " trial " + std::to_string(i) + " inexact");
      v.require(verify_document(parse_json(isometry_certificate(c).dump())).ok,
                to_string(kind) + " trial " + std::to_string(i) + " certificate rejected");
    }
  }
  if (v.ok) v.note = "2000 certificates";
  return v;
}

Verdict arrangements() {
  Verdict v;
  ht::Rng rng(5);
  std::size_t obstructed = 0;
  for (FormKind kind : {FormKind::sp, FormKind::so}) {
    for (int i = 0; i < 1000; ++i) {
      std::size_t n = 2 + static_cast<std::size_t>(i % 4);
      FormSpace space(kind, n);
      auto [w1, w2] = i % 2 ? ht::correlated_pair(rng, 2 * n) : std::pair{random_any(rng, 2 * n), random_any(rng, 2 * n)};
      std::string tag = to_string(kind) + " trial " + std::to_string(i);
      if (ht::lagrangian_obstruction(space, w1, w2)) {
        // no element of SO works here; the library must say so
        bool refused = false;
        try {
          arrange(space, w1, w2, static_cast<std::uint64_t>(i));
        } catch (const Obstruction&) {
          refused = true;
        }
        v.require(refused, tag + ": obstructed pair not refused");
        ++obstructed;
        continue;
      }
      IsometryCertificate c = arrange(space, w1, w2, static_cast<std::uint64_t>(i));
      v.require(is_isometry(space, c.h), tag + ": not an isometry");
      v.require(intersect(image(c.h, w1), w2).dim() == expected_meet(w1, w2), tag + ": wrong intersection");
    }
  }
  if (v.ok) v.note = "2000 pairs, " + std::to_string(obstructed) + " obstructed Lagrangian pairs correctly refused";
  return v;
}

Verdict classification() {
  Verdict v;
  ht::Rng rng(6);
  for (std::size_t n = 2; n <= 6; ++n) {
    FormSpace sp = FormSpace::symplectic(n), so = FormSpace::quadratic(n);
    for (int i = 0; i < 10000; ++i) {
      Subspace w = random_any(rng, 2 * n);
      RankProfile r = symplectic_rank(sp, w);
      v.require(r.two_r % 2 == 0, "odd rank");
      v.require(r.two_r <= r.p && r.p <= r.two_r / 2 + n, "2r <= p <= r+n violated");
      SignatureTriple t = signature(so, w);
      v.require(t.dim() == w.dim() && t.l + t.p <= n && t.l + t.q <= n, "signature bound violated");
    }
    for (std::size_t p = 0; p <= 2 * n; ++p)
      for (std::size_t two_r = 0; two_r <= p; two_r += 2)
        if (admissible_rank(p, two_r, n)) {
          RankProfile r = symplectic_rank(sp, witness_rank(p, two_r, n));
          v.require(r.p == p && r.two_r == two_r, "witness_rank round trip");
        }
    for (Presentation pres : {Presentation::diagonal, Presentation::split}) {
      FormSpace q = FormSpace::quadratic(n, pres);
      for (std::size_t l = 0; l <= n; ++l)
        for (std::size_t p = 0; l + p <= n; ++p)
          for (std::size_t qq = 0; l + qq <= n; ++qq)
            v.require(signature(q, witness_signature(l, p, qq, n, pres)) == SignatureTriple{l, p, qq}, "witness_signature round trip");
    }
  }
  return v;
}

Verdict spectral() {
  Verdict v;
  ToralMap cat = ToralMap::from_longs({{2, 1}, {1, 1}});
  v.require(hyperbolicity(cat) == Hyperbolicity::hyperbolic, "cat map not hyperbolic");
  v.require(codimension_one(cat), "cat map not codimension one");
  SpectralBands b = spectral_bands(cat);
  const double lo = (3 - std::sqrt(5.0)) / 2, hi = (3 + std::sqrt(5.0)) / 2;
  v.require(near(b.lambda1, lo, 1e-12) && near(b.lambda2, lo, 1e-12), "stable band");
  v.require(near(b.mu1, hi, 1e-12) && near(b.mu2, hi, 1e-12), "unstable band");
  v.require(brin_manning(cat), "Brin-Manning");
  v.require(hyperbolicity(ToralMap::from_longs({{0, -1}, {1, 0}})) == Hyperbolicity::not_hyperbolic, "rotation");
  v.require(!is_anosov_toral(ToralMap::from_longs({{1, 1}, {0, 1}})), "shear");
  return v;
}

Verdict reciprocity() {
  Verdict v;
  ht::Rng rng(8);
  auto gens = sp4_generators();
  for (int i = 0; i < 500; ++i) {
    auto w = ht::random_word(rng, 2 * gens.size(), static_cast<std::size_t>(ht::uniform(rng, 1, 6)));
    Poly p = char_poly(ht::word_product(gens, w));
    v.require(p.reversed(4) == p, "not self-reciprocal: " + word_to_string(w));
  }
  for (int i = 0; i < 500; ++i) {
    ToralMap m = ht::random_unimodular(rng, static_cast<std::size_t>(ht::uniform(rng, 2, 5)));
    ToralMap c = contragredient(m);
    v.require(contragredient(c) == m, "contragredient is not an involution");
    v.require(transpose(c) * m == ToralMap::identity(m.d()), "contragredient is not the inverse transpose");
    Poly p = char_poly(m);
    v.require(char_poly(c) == p.reversed(m.d()).monic(), "contragredient spectrum");
  }
  return v;
}

Verdict stabilizers() {
  Verdict v;
  FormSpace sl = FormSpace::special_linear(2);
  Vector a = unit_vector(2, 0), b = unit_vector(2, 1);
  StabilizerReport r = stabilizer_subalgebra(sl, {Subspace::span(2, {a}), Subspace::span(2, {b}), Subspace::span(2, {a + b})});
  v.require(r.dim() == 0 && r.scalars_only, "three lines");
  r = stabilizer_subalgebra(sl, {Subspace::span(2, {a})});
  v.require(r.dim() == 2, "one line");
  ht::Rng rng(9);
  for (int i = 0; i < 100; ++i) {
    std::size_t d = static_cast<std::size_t>(ht::uniform(rng, 2, 4));
    FormSpace space = FormSpace::special_linear(d);
    std::vector<Subspace> chain;
    std::size_t last = d * d - 1;
    for (int k = 0; k < 4; ++k) {
      chain.push_back(ht::random_subspace(rng, d, static_cast<std::size_t>(ht::uniform(rng, 1, static_cast<long>(d) - 1))));
      StabilizerReport s = stabilizer_subalgebra(space, chain);
      v.require(s.dim() <= last, "stabilizer grew along a chain");
      for (const Matrix& x : s.basis)
        for (const Subspace& w : chain)
          for (const Vector& u : w.vectors()) v.require(w.contains(x * u), "basis element does not stabilize");
      last = s.dim();
    }
  }
  return v;
}

Verdict fresh_verification() {
  Verdict v;
  auto dir = std::filesystem::temp_directory_path() / "hypform_acceptance";
  std::filesystem::create_directories(dir);
  std::vector<std::vector<std::string>> commands{
      {"invariants", "--space", "sp", "--n", "2", "--subspace", "[f1,e2,f2]"},
      {"invariants", "--space", "so", "--n", "3", "--subspace", "[x1+y1,x2,y3]"},
      {"perp", "--space", "so", "--n", "2", "--presentation", "split", "--subspace", "[u1,u2+v1]"},
      {"witt", "--space", "sp", "--n", "2", "--subspace", "[f1,e2,f2]"},
      {"witt", "--space", "so", "--n", "2", "--subspace", "[x1+y1]"},
      {"witt", "--space", "so", "--n", "2", "--subspace", "[x1]", "--phi", "[2/3*sqrt(3)*x1+1/3*sqrt(3)*y1]"},
      {"transport", "--space", "sp", "--n", "2", "--w1", "[e1]", "--w2", "[f1]"},
      {"transport", "--space", "so", "--n", "2", "--w1", "[x1+y1]", "--w2", "[x2+y2]"},
      {"transport", "--space", "sl", "--n", "3", "--w1", "[e1]", "--w2", "[e2+e3]"},
      {"genpos", "--space", "sp", "--n", "2", "--first", "1,0", "--second", "3,2"},
      {"genpos", "--space", "sp", "--n", "4", "--first", "3,2", "--second", "5,2"},
      {"genpos", "--space", "so", "--n", "5", "--first", "0,3,2", "--second", "0,2,3"},
      {"arrange", "--space", "sp", "--n", "3", "--w1", "[e1,e2,e3]", "--w2", "[e1,e2,e3]"},
      {"arrange", "--space", "so", "--n", "2", "--w1", "[x1+y1,x2+y2]", "--w2", "[x1+y1,x2+y2]"},
      {"arrange", "--space", "sl", "--n", "3", "--w1", "[e1]", "--w2", "[e1,e2]"},
      {"stabilizer", "--space", "sl", "--n", "2", "--subspaces", R"([["e1"],["e2"],["e1+e2"]])"},
      {"stabilizer", "--space", "sl", "--n", "2", "--subspace", "[e1]"},
      {"spec", "--matrix", "[[2,1],[1,1]]"},
      {"spec", "--matrix", "[[0,-1],[1,0]]"},
      {"bm-check", "--matrix", "[[2,1],[1,1]]"},
      {"codim1", "--matrix", "[[2,1],[1,1]]"},
      {"gaps", "--matrix", "[[0,0,-1],[1,0,1],[0,1,3]]"},
      {"search", "--max-len", "4", "--predicate", "hyperbolic"},
      {"search", "--generators", "[[[1,1],[0,1]],[[1,0],[1,1]]]", "--max-len", "3", "--predicate", "codim_one"},
      {"enumerate-validate", "--space", "sp", "--n", "2..3"},
  };
  std::size_t verified = 0, with_certificate = 0;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    auto args = commands[i];
    std::string label = args[0] + " #" + std::to_string(i);
    auto path = dir / ("out" + std::to_string(i) + ".json");
    args.push_back("-o");
    args.push_back(path.string());
    auto r = ht::run_cli(args);
    v.require(r.exit_code == 0, label + " exited " + std::to_string(r.exit_code));
    if (r.exit_code != 0) continue;
    Json doc = parse_json(r.out);
    if (!doc.contains("certificate")) continue;
    ++with_certificate;
    auto check = ht::run_cli({"verify", "-i", path.string()});
    v.require(check.exit_code == 0, label + " failed fresh verification");
    if (check.exit_code == 0) ++verified;
  }
  v.require(with_certificate >= 20, "too few certificates emitted");
  if (v.ok) v.note = std::to_string(verified) + "/" + std::to_string(with_certificate) + " certificates re-verified";
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  std::string listing = argc > 1 ? argv[1] : (std::filesystem::temp_directory_path() / "hypform_so_repaired.txt").string();
  criterion(1, "n=2 symplectic base cases emitted verbatim and verified", 1, base_cases);
  criterion(2, "exhaustive genpos_sp for n=2..6", 60, [] { return exhaustive(FormKind::sp, 2, 6, ""); });
  criterion(3, "exhaustive genpos_so for n=5,6", 300, [&] { return exhaustive(FormKind::so, 5, 6, listing); });
  criterion(4, "1000 random matched pairs per form: exact transport certificates", 120, transports);
  criterion(5, "1000 random pairs per form: arrange meets the general position dimension", 120, arrangements);
  criterion(6, "classification laws and witness round trips", 0, classification);
  criterion(7, "spectral layer", 1, spectral);
  criterion(8, "self-reciprocal Sp(4,Z) spectra and the contragredient involution", 0, reciprocity);
  criterion(9, "sl(2) stabilizers and monotonicity along chains", 0, stabilizers);
  criterion(10, "every emitted certificate re-verifies in a fresh process", 0, fresh_verification);
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
