#pragma once

#include <hypform/forms.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hypform {

struct WittArtinDecomposition {
  Subspace h;     // symplectic part of W
  Subspace jc;    // symplectic part of W^perp
  Subspace rad;   // W cap W^perp
  Subspace rest;  // (h + jc)^perp, contains rad as a Lagrangian
};

WittArtinDecomposition witt_artin(const FormSpace& space, const Subspace& w);

/// A symplectic basis: omega(e_i, f_j) = delta_ij, the rest zero.
struct SymplecticBasis {
  std::vector<Vector> e;
  std::vector<Vector> f;
  /// Columns e_1..e_n, f_1..f_n; lies in Sp.
  Matrix matrix() const;
};

/// Extends an isotropic independent list es (and partners for its first
/// fs.size() members) to a symplectic basis with e_i = es[i], f_i = fs[i].
SymplecticBasis symplectic_complete(const FormSpace& space, const std::vector<Vector>& es,
                                    const std::vector<Vector>& fs = {});

struct HyperbolicCompletion {
  Subspace u;
  std::vector<std::pair<Vector, Vector>> pairs;  // (w_i, z_i), B(w_i, z_j) = delta_ij, Q(z_i) = 0
};

HyperbolicCompletion hyperbolic_complete(const FormSpace& space, const Subspace& w);

struct IsometryCertificate {
  FormSpace space;
  Matrix h;
  Subspace w1;
  Subspace w2;
  /// "maps" (h W1 = W2) or "general_position" (h W1 and W2 in general position).
  std::string claim = "maps";
  bool verified = false;
};

/// Re-checks a certificate from scratch; exact.
bool verify_certificate(const IsometryCertificate& cert);
/// Throws VerificationFailure unless verify_certificate passes; sets verified.
void seal(IsometryCertificate& cert);

IsometryCertificate transport_sp(const FormSpace& space, const Subspace& w1, const Subspace& w2);
IsometryCertificate transport_so(const FormSpace& space, const Subspace& w1, const Subspace& w2);
/// An element of O(V, Q), possibly of determinant -1, with h W1 = W2. When
/// ctx is given, roots are adjoined on top of it and it is updated, so that
/// several transports share one tower.
Matrix orthogonal_transport(const FormSpace& space, const Subspace& w1, const Subspace& w2,
                            TowerContext* ctx = nullptr);
/// Some anisotropic vector of W, else of W^perp; nullopt exactly when W is
/// a Lagrangian (W = W^perp).
std::optional<Vector> anisotropic_vector(const FormSpace& space, const Subspace& w);
/// Dispatches on the space kind (sl included: any invertible matrix of det 1).
IsometryCertificate transport(const FormSpace& space, const Subspace& w1, const Subspace& w2);

/// Extends the partial isometry sources[i] -> images[i] to h in SO(V, Q).
IsometryCertificate witt_extend(const FormSpace& space, const std::vector<Vector>& sources,
                                const std::vector<Vector>& images);
/// phi holds, row by row, the images of the canonical basis rows of w1.
IsometryCertificate witt_extend(const FormSpace& space, const Subspace& w1, const Subspace& w2, const Matrix& phi);

/// Reflection s_v(x) = x - B(x,v)/Q(v) v for anisotropic v.
Matrix reflection(const FormSpace& space, const Vector& v);

}  // namespace hypform
