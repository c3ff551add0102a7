#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hopfsuper/hopf.hpp"

namespace hopfsuper {

struct SuperCertificates {
  bool ord_g_2 = false;
  bool ord_alpha_2 = false;
  bool alpha_of_g = false;            // alpha(g) = -1
  bool conjugation_identity = false;  // alpha -> a <- alpha = g a g on every basis element
  bool g_noncentral = false;
  std::string conjugation_failure;    // label of the first basis element breaking the identity
};

// Pair (g, alpha) of a grouplike and a character of a purely even Hopf algebra.
struct SuperDatum {
  Vec g;
  Vec alpha;
  std::string g_label;
  std::string alpha_label;  // "alpha<k>", k = index in the character group (counit = 0)
  SuperCertificates cert;

  bool admissible() const { return cert.ord_g_2 && cert.ord_alpha_2 && cert.alpha_of_g; }
  bool is_super() const { return admissible() && cert.conjugation_identity && cert.g_noncentral; }
};

SuperDatum make_datum(const HopfSuperData& a, const Vec& g, const Vec& alpha, std::string alpha_label = "alpha");
// All admissible data, g in grouplike order, alpha in character order.
// Requires a purely even; throws BadParams otherwise and IncompleteCharacters
// when either enumeration misses field extensions.
std::vector<SuperDatum> admissible_data(const HopfSuperData& a);
std::vector<SuperDatum> super_data(const HopfSuperData& a);
std::vector<SuperDatum> super_data(const std::vector<SuperDatum>& admissible);

// Hopf maps pi : A -> kZ2 (2 x dim A) and iota : kZ2 -> A (dim A x 2), kZ2 basis {e, sigma}.
struct HopfTriple {
  Matrix pi;
  Matrix iota;
};

HopfTriple split_epi(const HopfSuperData& a, const SuperDatum& d);
// E(a) = a_(0) iota(S(a_(1))) for the coaction (id (x) pi) Delta.
Matrix coinvariant_projector(const HopfSuperData& a, const SuperDatum& d);
// Basis of {b : alpha -> b = b}.
std::vector<Vec> coinvariants(const HopfSuperData& a, const SuperDatum& d);

struct Coinvariant {
  HopfSuperData h;
  Matrix inclusion;  // dim A x dim H, columns are the basis vectors of H inside A
};

// Requires a super datum (throws SuperCriteriaFailure otherwise).
Coinvariant coinvariant_superalgebra(const HopfSuperData& a, const SuperDatum& d);

struct Bosonization {
  HopfSuperData a;  // basis: all h#e, then all h#sigma
  HopfTriple triple;
};

Bosonization bosonize(const HopfSuperData& h);
// g = 1#sigma, alpha(h#sigma^i) = eps(h)(-1)^i.
SuperDatum canonical_datum(const Bosonization& b);

// Super data: H := coinvariant superalgebra, checks b#sigma^i -> b g^i is a
// Hopf isomorphism bosonize(H) -> A transporting pi and iota.  Admissible
// data only: the same check against the Radford biproduct of the braided
// Hopf algebra of coinvariants.
Report verify_bosonization_roundtrip(const HopfSuperData& a, const SuperDatum& d);

// Grading by c-conjugation, Delta twisted by c, S(h) = c^{|h|} S(h).
// Throws NotInvolutiveGrouplike.
// Homogeneous basis used by aeg_superize, as columns in the old coordinates.
Matrix aeg_basis(const HopfSuperData& h, const Vec& c);
HopfSuperData aeg_superize(const HopfSuperData& h, const Vec& c);

bool verify_automorphism(const HopfSuperData& a, const Matrix& m);
// Orbits of data under the group generated by autos: phi.(g, alpha) = (phi(g), alpha o phi^-1).
// Throws NotAutomorphism.
std::vector<std::vector<std::size_t>> orbit_classes(const HopfSuperData& a, const std::vector<SuperDatum>& data,
                                                    const std::vector<Matrix>& autos);

}  // namespace hopfsuper
