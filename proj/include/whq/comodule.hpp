#pragma once

// Right H-comodule magmas and the Galois machinery: coinvariants, the
// idempotent nabla_A and its image A`box`H, the quotient A (x)_{A^coH} A, the
// canonical morphism gamma_A, and normal-basis verification.
//
// Every factorization re-verifies its defining equation after construction;
// the uniqueness statements behind those factorizations turn into determinism
// guarantees (the echelon bases are reproducible bit for bit).

#include <whq/structures.hpp>

namespace whq {

struct ComoduleMagma {
    Whq hopf;
    UnitalMagma algebra;
    LinMap coaction; // rho: A -> A (x) H

    bool is_self() const {
        return algebra.space == hopf.space && coaction == hopf.coproduct;
    }
};

// (H, delta_H) over itself
ComoduleMagma self_comodule(const Whq& h);

// Comodule laws, multiplicativity of the coaction, and each of (b1)-(b6).
Report check_comodule_magma(const ComoduleMagma& cm);

struct CoinvariantData {
    EqualizerData eq; // of rho and (A (x) target) o rho
    SpaceSig space;   // A^coH
    LinMap inj;       // i_A
    LinMap unit;      // i_A o unit = eta_A
    LinMap product;   // i_A o product = mu_A o (i_A (x) i_A)

    UnitalMagma magma() const { return UnitalMagma{space, unit, product}; }
};

CoinvariantData coinvariants(const ComoduleMagma& cm);

Report check_murho(const ComoduleMagma& cm, const CoinvariantData& coinv);

struct NablaData {
    LinMap nabla;   // A (x) H -> A (x) H
    SplitPair split; // section = i_{AxH}, retraction = p_{AxH}; image = A box H
    std::uint64_t box_dim = 0;
    Report checks;
};

NablaData nabla(const ComoduleMagma& cm);

bool check_asubh2(const ComoduleMagma& cm, const CoinvariantData& coinv);
bool check_asubh3(const ComoduleMagma& cm, const CoinvariantData& coinv);

struct TensorOverCoinv {
    CoequalizerData coeq; // n_A
    SpaceSig space;       // A (x)_{A^coH} A
    LinMap rho1, rho2;    // factorized coactions on the quotient
    LinMap phi;           // factorized action: phi o (A (x) n_A) = n_A o (mu_A (x) A)
};

TensorOverCoinv tensor_over_coinvariants(const ComoduleMagma& cm, const CoinvariantData& coinv);

// gamma_A with its comodule-morphism and almost-lineality consequences
// re-verified; entries appended to *checks when given.
LinMap canonical_gamma(const ComoduleMagma& cm, const NablaData& nab, const TensorOverCoinv& toc,
                       Report* checks = nullptr);

struct GaloisWitness {
    LinMap gamma;     // A (x)_{A^coH} A -> A box H
    LinMap gamma_inv; // exact two-sided inverse
};

// Exact inversion of the canonical morphism; NotInvertibleError with a rank
// certificate when the extension is not Galois.
GaloisWitness is_galois(const ComoduleMagma& cm, const NablaData& nab,
                        const TensorOverCoinv& toc, Report* checks = nullptr);

bool check_gamma_inv_almost_lineal(const ComoduleMagma& cm, const GaloisWitness& w,
                                   const TensorOverCoinv& toc, const NablaData& nab);

struct NormalBasisWitness {
    LinMap omega;    // A^coH (x) H -> A^coH (x) H, idempotent
    SplitPair split; // image = A^coH x H
    LinMap b;        // A -> A^coH x H
    LinMap b_inv;
};

Report check_normal_basis(const ComoduleMagma& cm, const CoinvariantData& coinv,
                          const NormalBasisWitness& w);

// The witness attached to the self-extension (H, delta_H):
// Omega = (p_L (x) H) o delta o mu o (i_L (x) H), b = r o (p_L (x) H) o delta,
// phrased in the coinvariant basis.
NormalBasisWitness self_normal_basis(const ComoduleMagma& cm, const CoinvariantData& coinv);

// The unique m_A with m_A o n_A = mu_A o (A (x) ((i_A (x) eps) o s o b));
// verifies its comodule and module identities.
LinMap build_mA(const ComoduleMagma& cm, const CoinvariantData& coinv, const TensorOverCoinv& toc,
                const NablaData& nab, const GaloisWitness& gw, const NormalBasisWitness& nbw,
                Report* checks = nullptr);

Report check_galois_lemma(const ComoduleMagma& cm, const GaloisWitness& gw,
                          const TensorOverCoinv& toc, const NablaData& nab);

} // namespace whq
