#pragma once

// Contraction kernels. Every kernel has a serial reference implementation and
// an OpenMP variant that parallelizes over output columns; both produce
// byte-identical results (per-column work is fully deterministic).

#include <whq/linmap.hpp>

#include <vector>

namespace whq::kernels {

enum class Exec { serial, parallel };

Exec default_exec();
void set_default_exec(Exec e);

LinMap compose(const LinMap& f, const LinMap& g, Exec exec);
LinMap tensor(const LinMap& a, const LinMap& b, Exec exec);

// One stage of a morphism pipeline: the tensor product of its factors,
// applied without ever materializing that product.
struct Stage {
    std::vector<LinMap> factors;
    Stage() = default;
    Stage(std::initializer_list<LinMap> fs) : factors(fs) {}
    explicit Stage(std::vector<LinMap> fs) : factors(std::move(fs)) {}
    SpaceSig dom() const;
    SpaceSig cod() const;
};

// Evaluates stage_n o ... o stage_1 (stages listed in application order)
// column by column over the domain of the first stage.
LinMap eval_pipeline(const std::vector<Stage>& stages, Exec exec);

} // namespace whq::kernels

namespace whq {

// Composite in classical order: chain({S1, S2, ..., Sn}) = S1 o S2 o ... o Sn,
// each stage a tensor factor list. Mirrors how long composites are written.
LinMap chain(std::vector<kernels::Stage> stages_classical);

} // namespace whq
