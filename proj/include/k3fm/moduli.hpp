#pragma once

#include "k3fm/transforms.hpp"

namespace k3fm {

// Nonemptiness criterion for the moduli space of sheaves with vector v:
// v primitive and isotropic.
bool moduli_nonempty(const MukaiLattice& l, const MukaiVector& v);

struct FineModuli {
  bool fine = false;
  std::optional<MukaiVector> witness;  // pairs to exactly 1 with v
};

// Fineness: some w has <v,w> = 1, equivalently the pairings against the
// standard basis have gcd 1; the witness comes from the extended gcd.
FineModuli fine_moduli(const MukaiLattice& l, const MukaiVector& v);

struct RankFix {
  Transform word;
  MukaiVector vector;
};

// Rank-fixing: twists by multiples of ample_l, the outer swap and shifts
// turn v into (r', l', s') with r' > 0 prime to p. Requires p odd and a
// vector pairing to 1 with v.
RankFix change_rank(const MukaiLattice& l, const MukaiVector& v, const Int& p,
                    const Vec& ample_l);

// Chamber membership used as the operational ampleness test: positive
// square, nonnegative against every root, positive against the reference.
bool in_ample_chamber(const Lattice& ns, const Vec& x, const RootSet& roots,
                      const Vec& href);

struct Improvement {
  Transform word;
  MukaiVector vector;
};

// Twists v by an integer combination of the candidate classes until the
// middle component is in the ample chamber and outside p*N + Gamma.
// radius = 0 selects the default box radius 2p.
Improvement improve_vector(const MukaiLattice& l, const MukaiVector& v,
                           const Sublattice& gamma, const Int& p,
                           const std::vector<Vec>& candidates,
                           const RootSet& roots,
                           const std::optional<Vec>& href = std::nullopt,
                           long radius = 0);

struct SaturationOutcome {
  Sublattice e;             // saturation of F + Z*ell, rank 3
  DiscriminantGroup disc;   // trivial or Z/p
};

// The rank-3 saturation pipeline: E = sat(F + Z*ell) with |E^vee/E| in
// {1, p} and squarefree discriminant. Preconditions: F rank 2 primitive,
// Gram(F) invertible mod p, ell outside p*N + F, and N^vee/N annihilated
// by p.
SaturationOutcome saturation_pipeline(const Lattice& n, const Sublattice& f,
                                 const Vec& ell, const Int& p);

// The squarefree-discriminant test is the imported characteristic-zero
// uniqueness criterion; the other two are native to this calculus.
struct PartnerVerdict {
  bool unique = false;
  std::vector<std::string> criteria;  // which uniqueness criteria fire
  std::string classification;         // "unique partner" / "finitely many partners"
  std::optional<unsigned long> sigma0;
};

PartnerVerdict partner_uniqueness(const Lattice& n, const Int& p);

// Hypotheses for lifting the Picard sublattice E to characteristic zero:
// E saturated, rank at most 9, containing the supplied ample witness.
bool char0_lift_hypotheses(const Lattice& n, const Sublattice& e,
                           const Vec& ample_witness);

}  // namespace k3fm
