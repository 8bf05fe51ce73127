#pragma once

#include <hypform/witt.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace hypform {

bool in_general_position(const Subspace& w1, const Subspace& w2);

struct GeneralPositionWitness {
  FormKind kind = FormKind::sp;
  std::size_t n = 0;
  Subspace y1;
  Subspace y2;
  /// The vectors the construction wrote down, before reduction to RREF.
  std::vector<Vector> spanning1;
  std::vector<Vector> spanning2;
  /// Which construction produced the pair, e.g. "base (1)", "I-2", "II-1(1)".
  std::string entry;
  /// Reduction steps taken before reaching `entry` (symplectic induction only).
  std::vector<std::string> steps;
  /// True when the transcribed table entry failed and the fallback built the pair.
  bool repaired = false;
  std::string repair_reason;
};

/// Symplectic pair with the requested profiles (p + q = 2n), following the
/// induction on n: n = 2 base cases, then the reductions in order.
GeneralPositionWitness genpos_sp(std::size_t n, const RankProfile& profile1, const RankProfile& profile2);

/// Quadratic pair with the requested signatures (total dimension 2n), over
/// Q(sqrt 2). Table entries are tried first; failures are repaired by the
/// plane allocation construction and reported.
GeneralPositionWitness genpos_so(std::size_t n, const SignatureTriple& sig1, const SignatureTriple& sig2);

/// h in the group of `space` with h W1 and W2 in general position.
/// The seed drives the orthogonal search; results are deterministic per seed.
IsometryCertificate arrange(const FormSpace& space, const Subspace& w1, const Subspace& w2, std::uint64_t seed = 0x5eed);
IsometryCertificate arrange_sp(const FormSpace& space, const Subspace& w1, const Subspace& w2);
IsometryCertificate arrange_so(const FormSpace& space, const Subspace& w1, const Subspace& w2,
                                std::uint64_t seed = 0x5eed);
IsometryCertificate arrange_sl(const FormSpace& space, const Subspace& w1, const Subspace& w2);

struct StabilizerReport {
  FormKind kind = FormKind::sl;
  std::size_t ambient = 0;
  std::vector<Matrix> basis;
  bool scalars_only = false;
  std::size_t dim() const { return basis.size(); }
};

/// {X in the Lie algebra of `space` : X W_j <= W_j for every j}.
StabilizerReport stabilizer_subalgebra(const FormSpace& space, const std::vector<Subspace>& subspaces);

}  // namespace hypform
