#pragma once

// Deterministic structure generators: loop algebras (group-like basis over an
// I.P. loop), groupoid algebras (composition-or-zero product), and loopoid
// algebras on X x L x X. Every generator certifies its output against the
// axiom checker.

#include <whq/structures.hpp>
#include <whq/tables.hpp>

namespace whq {

Whq loop_algebra(const CayleyTable& t, const FieldSpec& field = FieldSpec::rationals(),
                 const std::string& space_name = "H");

// Same construction, plus an associativity requirement on the table.
Whq group_algebra(const CayleyTable& t, const FieldSpec& field = FieldSpec::rationals(),
                  const std::string& space_name = "H");

Whq groupoid_algebra(const GroupoidPresentation& p,
                     const FieldSpec& field = FieldSpec::rationals(),
                     const std::string& space_name = "H");

// Basis X x L x X with (x,a,y)(y',b,z) = [y==y'] (x,ab,z), group-like
// coproduct, antipode (x,a,y) -> (y,a^-1,x), unit sum_x (x,e,x).
Whq loopoid_algebra(std::uint32_t n_objects, const CayleyTable& loop,
                    const FieldSpec& field = FieldSpec::rationals(),
                    const std::string& space_name = "H");

} // namespace whq
