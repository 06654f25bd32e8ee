#pragma once

// Idempotent splitting, equalizers, coequalizers, factorization through them,
// and exact inversion. All rank decisions are exact; pivoting is by first
// nonzero entry, so every basis here is reproducible bit for bit.
//
// Image and kernel bases come out in reduced echelon form. Downstream checks
// must therefore be phrased base-independently (compare composites like i o p,
// never the raw matrices of i or p).

#include <whq/linmap.hpp>

#include <string>

namespace whq {

struct SplitPair {
    SpaceSig image;      // Z
    std::uint64_t image_dim = 0;
    LinMap section;      // i: Z -> Y
    LinMap retraction;   // p: Y -> Z, with p o i = id_Z and i o p = e
};

// e must satisfy e o e = e (checked exactly) and dom(e) == cod(e).
SplitPair split_idempotent(const LinMap& e, const std::string& image_name);

struct EqualizerData {
    SpaceSig object;
    LinMap arrow; // injection object -> dom(f), full column rank
    LinMap f, g;  // the defining pair
    // coordinate to read off for each basis vector (basis vector k is the only
    // one with a nonzero entry there, and that entry is 1)
    std::vector<std::uint32_t> reader_coords;
};

struct CoequalizerData {
    SpaceSig object;
    LinMap arrow;   // surjection cod(f) -> object, full row rank
    LinMap section; // a right inverse: arrow o section = id
    LinMap f, g;    // the defining pair
};

EqualizerData equalizer(const LinMap& f, const LinMap& g, const std::string& object_name);
CoequalizerData coequalizer(const LinMap& f, const LinMap& g, const std::string& object_name);

// Unique u with arrow o u = t; requires f o t = g o t (checked exactly).
LinMap factor_through_equalizer(const EqualizerData& eq, const LinMap& t);

// Unique u with u o arrow = t; requires t o f = t o g (checked exactly).
// Computed via a right inverse of the arrow; uniqueness makes the result
// independent of which right inverse is used.
LinMap factor_through_coequalizer(const CoequalizerData& cq, const LinMap& t);

// Exact inverse; requires dim(dom) == dim(cod) after flattening.
LinMap invert(const LinMap& f);

std::uint64_t rank(const LinMap& f);

} // namespace whq
