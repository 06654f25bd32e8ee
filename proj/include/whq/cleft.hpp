#pragma once

// Cleft-extension verification and both constructive directions of the
// cleft <-> Galois-with-normal-basis equivalence, plus the Hopf-quasigroup
// corollary. The two directions share no hidden state: the cleft->Galois
// direction derives p_A by equalizer factorization from the cleaving data,
// the Galois->cleft direction goes through the normal-basis path and m_A.

#include <whq/comodule.hpp>

namespace whq {

struct CleftWitness {
    LinMap h;     // H -> A, right H-comodule morphism
    LinMap h_inv; // H -> A
};

// h = id, h^-1 = antipode on the self-extension
CleftWitness self_cleft_witness(const Whq& h);

// Comodule-morphism condition plus (c1)-(c4).
Report check_cleft(const ComoduleMagma& cm, const CleftWitness& w);

struct CleftProperties {
    Report checks;
    LinMap q;   // mu_A o (A (x) h^-1) o rho_A
    LinMap p;   // factorization of q through the coinvariants: q = i_A o p
    LinMap p_hh; // factorization of h * h^-1
};

// Propositions (i)-(vi); throws DoesNotEqualizeError when the factorizations
// of h*h^-1 or q through i_A fail (an invalid witness).
CleftProperties cleft_properties(const ComoduleMagma& cm, const CoinvariantData& coinv,
                                 const CleftWitness& w);

// (c2) versus the antipode reformulation of the coaction of h^-1; the pair
// must agree on inputs satisfying the stated gates.
std::pair<bool, bool> check_c2_equivalence(const ComoduleMagma& cm, const CleftWitness& w);

// (c4) versus mu_A o (mu_A (x) h^-1) o (A (x) rho_A) = mu_A o (A (x) q_A).
std::pair<bool, bool> check_c4_equivalence(const ComoduleMagma& cm, const CoinvariantData& coinv,
                                           const CleftWitness& w);

struct GaloisConstruction {
    GaloisWitness galois;
    NormalBasisWitness normal_basis;
    Report checks;
};

// Builds gamma^-1 by its closed formula, verifies both composites against the
// canonical morphism, then assembles and verifies the normal-basis witness.
GaloisConstruction galois_from_cleft(const ComoduleMagma& cm, const CoinvariantData& coinv,
                                     const TensorOverCoinv& toc, const NablaData& nab,
                                     const CleftWitness& w);

// Builds h and h^-1 from the Galois and normal-basis data; requires gamma^-1
// to be almost lineal (AlmostLinealityRequiredError otherwise).
CleftWitness cleft_from_galois(const ComoduleMagma& cm, const CoinvariantData& coinv,
                               const TensorOverCoinv& toc, const NablaData& nab,
                               const GaloisWitness& gw, const NormalBasisWitness& nbw,
                               Report* checks = nullptr);

// The Hopf-quasigroup specialization: nabla = id, Omega = id,
// b o eta_A = eta_coinv (x) eta_H, h*h^-1 = h^-1*h = eta_A (x) eps_H, h total.
Report corollary_hq(const ComoduleMagma& cm, const CleftWitness& w);

struct RoundtripResult {
    Report report;
    bool ok = false;
};

RoundtripResult roundtrip_from_cleft(const ComoduleMagma& cm, const CleftWitness& w);
RoundtripResult roundtrip_from_galois(const ComoduleMagma& cm,
                                      const std::optional<NormalBasisWitness>& nbw = std::nullopt);

} // namespace whq
