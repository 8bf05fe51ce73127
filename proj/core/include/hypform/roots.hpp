#pragma once

// Certified complex root isolation.
//
// Approximations come from Aberth iterations in GMP floating point; they are
// then certified exactly. With W_i = p(z_i) / (lc * prod_{j != i} (z_i - z_j))
// the disks D(z_i, d |W_i|) cover all roots and every connected component of
// their union holds as many roots as disks, so pairwise disjoint disks each
// hold exactly one root.

#include <hypform/polynomial.hpp>

#include <vector>

namespace hypform {

/// Default 4096; overridden by HYPFORM_MAX_PRECISION_BITS.
unsigned max_precision_bits();

struct RootDisk {
  Rational re;
  Rational im;
  Rational radius;  // upper bound
  int multiplicity = 1;
  bool real = false;     // certified real root
  bool nonreal = false;  // certified non-real root
  /// Index of the disk holding the complex conjugate (itself when real).
  std::size_t conjugate = 0;

  /// Certified bounds on |root|.
  RationalInterval modulus() const;
};

/// Isolating disks for every root of p, with multiplicities, of radius at
/// most 2^-bits. Throws Indeterminate when certification fails at the
/// precision ceiling.
std::vector<RootDisk> isolate_roots(const Poly& p, unsigned bits);

}  // namespace hypform
