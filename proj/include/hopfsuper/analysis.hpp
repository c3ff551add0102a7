#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfsuper/hopf.hpp"
#include "hopfsuper/presentation.hpp"

namespace hopfsuper {

// Computed on the bosonization: nondegenerate regular trace form.
bool is_semisimple(const HopfSuperData& h);
// Dual algebra of the bosonization has a split commutative semisimple quotient.
bool is_pointed(const HopfSuperData& h);
// Delta(c) = (-1)^{|c1||c2|} c2 (x) c1
bool is_supercocommutative(const HopfSuperData& h);

struct AntipodeSpectrum {
  std::vector<std::pair<CycloScalar, int>> eigenvalues;  // canonical order, with multiplicity
  int unsplit_degree = 0;  // characteristic polynomial factor without roots in the field
  unsigned order = 0;      // least k with S^k = id
};
AntipodeSpectrum antipode_spectrum(const HopfSuperData& h);

// P(i, j) = <k_i, h_j>; unsigned convention <k1 (x) k2, h1 (x) h2> = <k1,h1><k2,h2>.
Report verify_pairing(const HopfSuperData& k, const HopfSuperData& h, const Matrix& p);

// Pairing between bosonize(dual(H)) and bosonize(H): (f#s^i, h#s^j) -> (-1)^{ij} f(h).
Matrix bosonized_dual_pairing(const HopfSuperData& h);

struct Fingerprint {
  std::size_t dim = 0;
  std::size_t dim_odd = 0;
  std::size_t grouplikes = 0;
  bool group_abelian = true;
  std::vector<unsigned> group_invariants;
  std::size_t characters = 0;
  AntipodeSpectrum antipode;
  // (even, odd) dimensions of the g-skew-primitive spaces, sorted over g in G(H)
  std::vector<std::pair<std::size_t, std::size_t>> skew_primitives;
  bool semisimple = false;
  bool pointed = false;
  bool supercommutative = false;
  bool supercocommutative = false;
  std::size_t center_dim = 0;
};
Fingerprint fingerprint(const HopfSuperData& h);

// Name of the first differing field in a fixed order, or nullopt if all agree.
std::optional<std::string> distinguish(const Fingerprint& a, const Fingerprint& b);
std::optional<std::string> distinguish(const HopfSuperData& a, const HopfSuperData& b);

enum class IsoOutcome { Isomorphic, Distinct, Undecided };
const char* outcome_name(IsoOutcome o);

struct IsoSearchOptions {
  std::uint64_t fuel = 100000;  // candidate generator assignments tried
  // Optional linear conditions on generator images: for generator i, each
  // (covector f, value c) demands f(image_i) = c.
  std::vector<std::vector<std::pair<Vec, CycloScalar>>> constraints;
  bool check_fingerprints = true;
  int conductor = 8;  // roots of pair scalars are sought in Q(zeta_lcm(conductor, source, target))
};

struct IsoSearchResult {
  IsoOutcome outcome = IsoOutcome::Undecided;
  std::optional<Matrix> witness;  // dim target x dim source
  std::vector<Vec> images;        // generator images of the witness
  std::string detail;             // differing field, or why the search stopped
  std::uint64_t tried = 0;
};

// Generator images are drawn from grouplikes (grouplike generators),
// unrestricted grouplikes split by parity (pairs x, z with
// Delta x = x(x)x + c z(x)z, Delta z = x(x)z + z(x)x) and skew-primitive
// spaces (Delta t = a(x)t + t(x)1 with a a word in grouplike generators).
// A failed search is reported as Distinct when the enumeration was
// exhaustive: every skew space searched is at most a line and the relations
// are homogeneous in its generator, or the constraints pin the image.
IsoSearchResult find_isomorphism(const CompiledPresentation& src, const HopfSuperData& target,
                                 const IsoSearchOptions& opts = {});

// Generator images -> matrix; throws ExtensionFailure if the images violate a relation.
Matrix morphism_from_images(const CompiledPresentation& src, const HopfSuperData& target,
                            const std::vector<Vec>& images);

// Nondegenerate pairing K x H with prescribed values on generator pairs,
// found as an isomorphism K -> H*. table[a][b] = <gen_a(K), gen_b(H)>.
struct PairingSearch {
  IsoSearchResult search;
  std::optional<Matrix> pairing;
};
PairingSearch pairing_from_generators(const CompiledPresentation& k, const CompiledPresentation& h,
                                      const std::vector<std::vector<CycloScalar>>& table,
                                      std::uint64_t fuel = 100000);

}  // namespace hopfsuper
