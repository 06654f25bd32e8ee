#pragma once

// Weak Hopf quasigroup data, the axiom checker, the four canonical
// projections, convolution, the derived-identity suite, and the monoid
// carried by the image of the target projection.

#include <whq/factorization.hpp>
#include <whq/kernels.hpp>
#include <whq/report.hpp>

#include <array>
#include <optional>

namespace whq {

struct UnitalMagma {
    SpaceSig space;
    LinMap unit;    // K -> A
    LinMap product; // A (x) A -> A
};

struct Comonoid {
    SpaceSig space;
    LinMap counit;    // D -> K
    LinMap coproduct; // D -> D (x) D
};

struct Whq {
    FieldSpec field;
    SpaceSig space;
    LinMap unit, product, counit, coproduct, antipode;
    mutable std::optional<bool> validated; // set by check_axioms

    std::uint64_t dim() const { return space.dim(); }
    UnitalMagma magma() const { return UnitalMagma{space, unit, product}; }
    Comonoid comonoid() const { return Comonoid{space, counit, coproduct}; }
};

struct Projections {
    LinMap target;     // id * antipode
    LinMap source;     // antipode * id
    LinMap target_bar;
    LinMap source_bar;
};

// f * g = mu_A o (f (x) g) o delta_D for f, g : D -> A.
LinMap convolution(const LinMap& f, const LinMap& g, const Comonoid& d, const UnitalMagma& a);

Projections projections(const Whq& h);
// Also checks the closed forms of the target/source morphisms against their
// convolution definitions and idempotency of all four maps.
std::pair<Projections, Report> projections_checked(const Whq& h);

// One entry per axiom; evaluates both sides exactly on the full tensor-power
// domain. Sets h.validated.
Report check_axioms(const Whq& h);

enum class StructureClass {
    HopfAlgebra,
    WeakHopfAlgebra,
    HopfQuasigroup,
    WeakHopfQuasigroupProper,
};

std::string to_string(StructureClass c);

// Requires the axioms to hold (throws NotAWhqError otherwise).
StructureClass classify(const Whq& h);

// First basis triple where the product fails to associate, if any.
std::optional<std::array<std::uint32_t, 3>> associator_witness(const Whq& h);

// The derived identities. Runs regardless of validity so mutations can be
// pinpointed; failing entries carry the first failing basis multi-index.
Report check_identity_suite(const Whq& h);

struct HlMonoid {
    SplitPair split;     // of the target projection; section = i_L, retraction = p_L
    UnitalMagma monoid;  // unit/product on the image
    LinMap counit;       // eps_HL
    LinMap coproduct;    // delta_HL
    Report checks;
};

// Splits the target projection and builds the induced monoid structure;
// verifies the equalizer/coequalizer characterizations and associativity.
HlMonoid hl_monoid(const Whq& h);

} // namespace whq
