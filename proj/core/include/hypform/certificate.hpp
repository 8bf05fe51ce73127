#pragma once

// Self-contained JSON certificates. Each carries "kind", the inputs it is
// about, the claimed result and the tower its scalars live in; verification
// re-derives everything from the document alone.

#include <hypform/general_position.hpp>
#include <hypform/json_io.hpp>
#include <hypform/toral.hpp>
#include <hypform/witt.hpp>

#include <string>
#include <vector>

namespace hypform {

Json isometry_certificate(const IsometryCertificate& cert);
/// `first` / `second` are the requested invariants, {"p","two_r"} or {"l","p","q"}.
Json witness_certificate(const GeneralPositionWitness& w, const Json& first, const Json& second);
Json invariants_certificate(const FormSpace& space, const Subspace& w);
Json perp_certificate(const FormSpace& space, const Subspace& w);
Json witt_artin_certificate(const FormSpace& space, const Subspace& w);
Json hyperbolic_completion_certificate(const FormSpace& space, const Subspace& w);
Json stabilizer_certificate(const FormSpace& space, const std::vector<Subspace>& subspaces, const StabilizerReport& r);

Json spectral_certificate(const ToralMap& m);
Json brin_manning_certificate(const ToralMap& m);
Json codimension_one_certificate(const ToralMap& m);
Json gaps_certificate(const ToralMap& m);
Json word_search_certificate(const std::vector<ToralMap>& generators, std::size_t max_len, WordPredicate predicate,
                             bool semigroup, const std::vector<WordHit>& hits);

/// Invariant values as reported by the invariants command.
Json invariants_json(const FormSpace& space, const Subspace& w);
Json bands_json(const SpectralBands& b);
Json gap_json(const DominationCertificate& c);

struct VerifyOutcome {
  bool ok = false;
  std::string kind;
  std::string message;
};

/// Accepts a bare certificate or a command output holding one under
/// "certificate". Malformed documents throw InvalidInput.
VerifyOutcome verify_document(const Json& doc);

}  // namespace hypform
