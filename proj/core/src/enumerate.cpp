#include <hypform/enumerate.hpp>
#include <hypform/error.hpp>

namespace hypform {

namespace {

std::string rank_label(std::size_t p, std::size_t two_r) {
  return "p=" + std::to_string(p) + ",2r=" + std::to_string(two_r);
}

void record(EnumerationReport& rep, EnumeratedCase c) {
  if (c.passed) ++rep.pass;
  else ++rep.fail;
  if (c.repaired) ++rep.repaired;
  rep.cases.push_back(std::move(c));
}

void sp_cases(EnumerationReport& rep, std::size_t n) {
  FormSpace space = FormSpace::symplectic(n);
  for (std::size_t p = 0; p <= 2 * n; ++p)
    for (std::size_t r = 0; r <= p; r += 2) {
      if (!admissible_rank(p, r, n)) continue;
      std::size_t q = 2 * n - p;
      for (std::size_t s = 0; s <= q; s += 2) {
        if (!admissible_rank(q, s, n)) continue;
        EnumeratedCase c{n, rank_label(p, r), rank_label(q, s), "", false, false, ""};
        try {
          GeneralPositionWitness w = genpos_sp(n, {p, r, 0}, {q, s, 0});
          c.entry = w.entry;
          RankProfile a = symplectic_rank(space, w.y1), b = symplectic_rank(space, w.y2);
          c.passed = a.p == p && a.two_r == r && b.p == q && b.two_r == s && in_general_position(w.y1, w.y2);
          if (!c.passed) c.detail = "independent check failed";
        } catch (const std::exception& e) {
          c.detail = e.what();
        }
        record(rep, std::move(c));
      }
    }
}

void so_cases(EnumerationReport& rep, std::size_t n) {
  FormSpace space = FormSpace::quadratic(n);
  std::vector<SignatureTriple> sigs;
  for (std::size_t l = 0; l <= n; ++l)
    for (std::size_t p = 0; p <= n; ++p)
      for (std::size_t q = 0; q <= n; ++q)
        if (admissible_signature(l, p, q, n)) sigs.push_back({l, p, q});
  for (const auto& a : sigs)
    for (const auto& b : sigs) {
      if (a.dim() + b.dim() != 2 * n) continue;
      EnumeratedCase c{n, to_string(a), to_string(b), "", false, false, ""};
      try {
        GeneralPositionWitness w = genpos_so(n, a, b);
        c.entry = w.entry;
        c.repaired = w.repaired;
        c.detail = w.repair_reason;
        c.passed = signature(space, w.y1) == a && signature(space, w.y2) == b && in_general_position(w.y1, w.y2);
        if (!c.passed) c.detail = "independent check failed";
      } catch (const std::exception& e) {
        c.detail = e.what();
      }
      record(rep, std::move(c));
    }
}

}  // namespace

EnumerationReport enumerate_validate(FormKind kind, std::size_t n_min, std::size_t n_max) {
  if (kind == FormKind::sl) throw InvalidInput("enumeration covers sp and so only");
  if (n_max > 12) throw InvalidInput("enumeration is limited to n <= 12");
  EnumerationReport rep;
  rep.kind = kind;
  rep.n_min = n_min;
  rep.n_max = n_max;
  for (std::size_t n = std::max<std::size_t>(n_min, 1); n <= n_max; ++n) {
    if (kind == FormKind::sp) sp_cases(rep, n);
    else so_cases(rep, n);
  }
  return rep;
}

}  // namespace hypform
