#pragma once

#include <vector>

#include "exobasis/admissibility.hpp"
#include "exobasis/multitile.hpp"

namespace exobasis {

/// Residues in [0, n) that dual_pairing(v, ·) mod n can reach over the
/// whole lattice: the subgroup of ℤ_n generated by gcd(gcd(|w_i|), n).
struct ResidueClassIndex {
    int n;
    std::vector<long> achievable; // sorted, starts at 0
};

ResidueClassIndex residue_class_index(const AdmissibilityCertificate& c);

/// The set [R] of residues realized by a fiber class. Size equals #R
/// exactly when the certificate is collision-free on the class.
std::vector<long> residue_of_class(const std::vector<LatticePoint>& R,
                                   const AdmissibilityCertificate& c);

/// Canonical solution z of ⟨v,z⟩ ≡ r (mod n) outside `forbidden`:
/// smallest max-norm first, lexicographic order within a norm shell.
/// Throws Unachievable when r is outside the pairing image.
LatticePoint representative(long r, const AdmissibilityCertificate& c, const Lattice& L,
                            const std::vector<LatticePoint>& forbidden);

/// Extends an admissible subtile to an admissible exact k-tile Δ ⊇ Ω by
/// translating each deficient class region to representatives of its
/// missing residues (ascending, the uncovered region counts as an empty
/// class). Throws CertificateInvalid when c fails on P, ClassTooLarge when
/// a class already exceeds k, NotEnoughResidues when fewer than k residues
/// are achievable (enlarging n fixes that).
MultiTileSet complete_to_tile(const FiberPartition& P, const AdmissibilityCertificate& c, int k);

} // namespace exobasis
