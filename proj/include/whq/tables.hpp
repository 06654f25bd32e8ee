#pragma once

// Cayley tables for loops, the inverse-property check, the Chein double, and
// finite groupoid presentations. These feed the structure generators.

#include <whq/errors.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace whq {

struct CayleyTable {
    std::uint32_t order = 0;
    std::vector<std::uint32_t> cells; // row-major: cells[i*order + j] = i * j
    std::uint32_t identity = 0;

    std::uint32_t at(std::uint32_t i, std::uint32_t j) const { return cells[i * order + j]; }
    void set(std::uint32_t i, std::uint32_t j, std::uint32_t v) { cells[i * order + j] = v; }
};

struct IpCheckResult {
    bool ok = false;
    std::vector<std::uint32_t> inverse; // two-sided inverses, valid when ok
    std::optional<std::pair<std::uint32_t, std::uint32_t>> witness; // failing pair when !ok
};

// Requires a quasigroup table with identity (NotALoopError otherwise); then
// finds two-sided inverses and checks x^-1(xy) = y = (yx)x^-1 for all pairs.
IpCheckResult ip_check(const CayleyTable& t);

bool is_associative(const CayleyTable& t);
bool is_abelian(const CayleyTable& t);
std::optional<std::array<std::uint32_t, 3>> associator_triple(const CayleyTable& t);

// Order-2|G| loop on G u Gu: g.h = gh, g.(hu) = (hg)u, (gu).h = (gh^-1)u,
// (gu).(hu) = h^-1 g. Input must be a group; output is verified to be an
// I.P. loop and is nonassociative exactly when G is nonabelian.
CayleyTable chein_double(const CayleyTable& group);

CayleyTable cyclic_table(std::uint32_t n);
CayleyTable symmetric3_table();

std::string print_table(const CayleyTable& t);
CayleyTable parse_table(const std::string& text);

struct GroupoidPresentation {
    std::uint32_t n_objects = 0;
    struct Morphism {
        std::uint32_t src = 0, tgt = 0;
    };
    std::vector<Morphism> morphisms;
    // composition[g*n + f] = g o f when tgt(f) == src(g), else kNone
    std::vector<std::uint32_t> composition;
    std::vector<std::uint32_t> identity_of; // object -> identity morphism
    std::vector<std::uint32_t> inverse_of;  // morphism -> inverse

    static constexpr std::uint32_t kNone = UINT32_MAX;
    std::uint32_t size() const { return static_cast<std::uint32_t>(morphisms.size()); }
    std::uint32_t compose_at(std::uint32_t g, std::uint32_t f) const {
        return composition[static_cast<std::size_t>(g) * size() + f];
    }
    void validate() const; // InvalidGroupoidError on any broken axiom
};

GroupoidPresentation pair_groupoid(std::uint32_t n_objects);
GroupoidPresentation one_object_groupoid(const CayleyTable& group);
GroupoidPresentation disjoint_union(const GroupoidPresentation& a, const GroupoidPresentation& b);

} // namespace whq
