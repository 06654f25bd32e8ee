#include <whq/structures.hpp>

namespace whq {

namespace {

// Everything the formula transcriptions need, precomputed once.
struct Ctx {
    const Whq& h;
    LinMap id, c;
    const LinMap &mu, &eta, &eps, &delta, &lam;
    LinMap em; // eps o mu
    LinMap de; // delta o eta
    LinMap piL, piR, piLbar, piRbar;

    explicit Ctx(const Whq& hh)
        : h(hh),
          id(LinMap::identity(hh.field, hh.space)),
          c(swap_map(hh.field, hh.space, hh.space)),
          mu(hh.product),
          eta(hh.unit),
          eps(hh.counit),
          delta(hh.coproduct),
          lam(hh.antipode),
          em(compose(hh.counit, hh.product)),
          de(compose(hh.coproduct, hh.unit)) {
        piL = chain({{mu}, {id, lam}, {delta}});
        piR = chain({{mu}, {lam, id}, {delta}});
        piLbar = chain({{id, em}, {de, id}});
        piRbar = chain({{em, id}, {id, de}});
    }
};

} // namespace

LinMap convolution(const LinMap& f, const LinMap& g, const Comonoid& d, const UnitalMagma& a) {
    if (f.dom() != d.space || g.dom() != d.space)
        throw SignatureMismatchError("convolution", d.space.str(),
                                     f.dom() != d.space ? f.dom().str() : g.dom().str());
    if (f.cod() != a.space || g.cod() != a.space)
        throw SignatureMismatchError("convolution", a.space.str(),
                                     f.cod() != a.space ? f.cod().str() : g.cod().str());
    return chain({{a.product}, {f, g}, {d.coproduct}});
}

Projections projections(const Whq& h) {
    Ctx x(h);
    return Projections{x.piL, x.piR, x.piLbar, x.piRbar};
}

std::pair<Projections, Report> projections_checked(const Whq& h) {
    Ctx x(h);
    Report rep("projections");
    LinMap piL_closed = chain({{x.em, x.id}, {x.id, x.c}, {x.de, x.id}});
    LinMap piR_closed = chain({{x.id, x.em}, {x.c, x.id}, {x.id, x.de}});
    rep.add(compare_maps("target-closed-form", x.piL, piL_closed));
    rep.add(compare_maps("source-closed-form", x.piR, piR_closed));
    rep.add(compare_maps("idem-pi-l", compose(x.piL, x.piL), x.piL));
    rep.add(compare_maps("idem-pi-r", compose(x.piR, x.piR), x.piR));
    rep.add(compare_maps("idem-pi-l-bar", compose(x.piLbar, x.piLbar), x.piLbar));
    rep.add(compare_maps("idem-pi-r-bar", compose(x.piRbar, x.piRbar), x.piRbar));
    return {Projections{x.piL, x.piR, x.piLbar, x.piRbar}, rep};
}

Report check_axioms(const Whq& h) {
    Ctx x(h);
    const LinMap &mu = x.mu, &eta = x.eta, &eps = x.eps, &delta = x.delta, &lam = x.lam;
    const LinMap &id = x.id, &c = x.c, &em = x.em, &de = x.de;
    Report rep("axioms");

    rep.add(compare_maps("magma-unit-left", chain({{mu}, {eta, id}}), id));
    rep.add(compare_maps("magma-unit-right", chain({{mu}, {id, eta}}), id));
    rep.add(compare_maps("counit-left", chain({{eps, id}, {delta}}), id));
    rep.add(compare_maps("counit-right", chain({{id, eps}, {delta}}), id));
    rep.add(compare_maps("coassoc", chain({{delta, id}, {delta}}), chain({{id, delta}, {delta}})));

    rep.add(compare_maps("a1", chain({{delta}, {mu}}),
                         chain({{mu, mu}, {id, c, id}, {delta, delta}})));

    LinMap a2l = chain({{eps}, {mu}, {mu, id}});
    rep.add(compare_maps("a2-1", a2l, chain({{eps}, {mu}, {id, mu}})));
    rep.add(compare_maps("a2-2", a2l, chain({{em, em}, {id, delta, id}})));
    rep.add(compare_maps("a2-3", a2l, chain({{em, em}, {id, compose(c, delta), id}})));

    LinMap a3l = chain({{delta, id}, {delta}, {eta}});
    rep.add(compare_maps("a3-1", a3l, chain({{id, mu, id}, {de, de}})));
    rep.add(compare_maps("a3-2", a3l, chain({{id, compose(mu, c), id}, {de, de}})));

    rep.add(compare_maps("a4-1", x.piL, chain({{em, id}, {id, c}, {de, id}})));
    rep.add(compare_maps("a4-2", x.piR, chain({{id, em}, {c, id}, {id, de}})));
    rep.add(compare_maps("a4-3a", chain({{mu}, {lam, x.piL}, {delta}}), lam));
    rep.add(compare_maps("a4-3b", chain({{mu}, {x.piR, lam}, {delta}}), lam));
    rep.add(compare_maps("a4-4", chain({{mu}, {lam, mu}, {delta, id}}),
                         chain({{mu}, {x.piR, id}})));
    rep.add(compare_maps("a4-5", chain({{mu}, {id, mu}, {id, lam, id}, {delta, id}}),
                         chain({{mu}, {x.piL, id}})));
    rep.add(compare_maps("a4-6", chain({{mu}, {mu, lam}, {id, delta}}),
                         chain({{mu}, {id, x.piL}})));
    rep.add(compare_maps("a4-7", chain({{mu}, {mu, id}, {id, lam, id}, {id, delta}}),
                         chain({{mu}, {id, x.piR}})));

    h.validated = rep.all_pass();
    return rep;
}

std::string to_string(StructureClass c) {
    switch (c) {
    case StructureClass::HopfAlgebra: return "HopfAlgebra";
    case StructureClass::WeakHopfAlgebra: return "WeakHopfAlgebra";
    case StructureClass::HopfQuasigroup: return "HopfQuasigroup";
    case StructureClass::WeakHopfQuasigroupProper: return "WeakHopfQuasigroupProper";
    }
    return "?";
}

StructureClass classify(const Whq& h) {
    if (!h.validated.has_value()) check_axioms(h);
    if (!*h.validated) {
        Report rep = check_axioms(h);
        throw NotAWhqError(rep.first_failure()->name);
    }
    Ctx x(h);
    const bool associative =
        chain({{x.mu}, {x.mu, x.id}}) == chain({{x.mu}, {x.id, x.mu}});
    LinMap eta_eps = compose(x.eta, x.eps);
    const bool trivial_projections = x.piL == eta_eps && x.piR == eta_eps;
    if (associative)
        return trivial_projections ? StructureClass::HopfAlgebra : StructureClass::WeakHopfAlgebra;
    return trivial_projections ? StructureClass::HopfQuasigroup
                               : StructureClass::WeakHopfQuasigroupProper;
}

std::optional<std::array<std::uint32_t, 3>> associator_witness(const Whq& h) {
    Ctx x(h);
    LinMap lhs = chain({{x.mu}, {x.mu, x.id}});
    LinMap rhs = chain({{x.mu}, {x.id, x.mu}});
    auto d = first_difference(lhs, rhs);
    if (!d) return std::nullopt;
    auto multi = lhs.dom().unflatten(d->col);
    return std::array<std::uint32_t, 3>{multi[0], multi[1], multi[2]};
}

Report check_identity_suite(const Whq& h) {
    if (!h.validated.has_value()) check_axioms(h);
    Ctx x(h);
    const LinMap &mu = x.mu, &eta = x.eta, &eps = x.eps, &delta = x.delta, &lam = x.lam;
    const LinMap &id = x.id, &c = x.c, &em = x.em, &de = x.de;
    const LinMap &piL = x.piL, &piR = x.piR, &piLbar = x.piLbar, &piRbar = x.piRbar;
    const Comonoid co = h.comonoid();
    const UnitalMagma mg = h.magma();
    Report rep("identity-suite");

    rep.add(compare_maps("pi-l-1", convolution(piL, id, co, mg), id));
    rep.add(compare_maps("pi-l-2", convolution(id, piR, co, mg), id));
    rep.add(compare_maps("pi-eta-1", compose(piL, eta), eta));
    rep.add(compare_maps("pi-eta-2", compose(piR, eta), eta));
    rep.add(compare_maps("pi-varep-1", compose(eps, piL), eps));
    rep.add(compare_maps("pi-varep-2", compose(eps, piR), eps));
    rep.add(compare_maps("antipode-eta", compose(lam, eta), eta));
    rep.add(compare_maps("varep-antipode", compose(eps, lam), eps));

    rep.add(compare_maps("idem-pi-l", compose(piL, piL), piL));
    rep.add(compare_maps("idem-pi-r", compose(piR, piR), piR));
    rep.add(compare_maps("idem-pi-l-bar", compose(piLbar, piLbar), piLbar));
    rep.add(compare_maps("idem-pi-r-bar", compose(piRbar, piRbar), piRbar));

    rep.add(compare_maps("mu-pi-l", chain({{mu}, {id, piL}}),
                         chain({{em, id}, {id, c}, {delta, id}})));
    rep.add(compare_maps("mu-pi-r", chain({{mu}, {piR, id}}),
                         chain({{id, em}, {c, id}, {id, delta}})));
    rep.add(compare_maps("mu-pi-l-var", chain({{mu}, {id, piLbar}}),
                         chain({{id, em}, {delta, id}})));
    rep.add(compare_maps("mu-pi-r-var", chain({{mu}, {piRbar, id}}),
                         chain({{em, id}, {id, delta}})));
    rep.add(compare_maps("delta-pi-l", chain({{id, piL}, {delta}}),
                         chain({{mu, id}, {id, c}, {de, id}})));
    rep.add(compare_maps("delta-pi-r", chain({{piR, id}, {delta}}),
                         chain({{id, mu}, {c, id}, {id, de}})));
    rep.add(compare_maps("delta-pi-l-var", chain({{piLbar, id}, {delta}}),
                         chain({{id, mu}, {de, id}})));
    rep.add(compare_maps("delta-pi-r-var", chain({{id, piRbar}, {delta}}),
                         chain({{mu, id}, {id, de}})));

    rep.add(compare_maps("pi-delta-mu-pi-1", chain({{piL}, {mu}, {id, piL}}),
                         compose(piL, mu)));
    rep.add(compare_maps("pi-delta-mu-pi-2", chain({{piR}, {mu}, {piR, id}}),
                         compose(piR, mu)));
    rep.add(compare_maps("pi-delta-mu-pi-3", chain({{id, piL}, {delta}, {piL}}),
                         compose(delta, piL)));
    rep.add(compare_maps("pi-delta-mu-pi-4", chain({{piR, id}, {delta}, {piR}}),
                         compose(delta, piR)));

    rep.add(compare_maps("pi-composition-1a", compose(piL, piLbar), piL));
    rep.add(compare_maps("pi-composition-1b", compose(piL, piRbar), piRbar));
    rep.add(compare_maps("pi-composition-2a", compose(piLbar, piL), piLbar));
    rep.add(compare_maps("pi-composition-2b", compose(piRbar, piL), piL));
    rep.add(compare_maps("pi-composition-3a", compose(piR, piLbar), piLbar));
    rep.add(compare_maps("pi-composition-3b", compose(piR, piRbar), piR));
    rep.add(compare_maps("pi-composition-4a", compose(piLbar, piR), piR));
    rep.add(compare_maps("pi-composition-4b", compose(piRbar, piR), piRbar));

    rep.add(compare_maps("pi-antipode-composition-1a", compose(piL, lam), compose(piL, piR)));
    rep.add(compare_maps("pi-antipode-composition-1b", compose(piL, piR), compose(lam, piR)));
    rep.add(compare_maps("pi-antipode-composition-2a", compose(piR, lam), compose(piR, piL)));
    rep.add(compare_maps("pi-antipode-composition-2b", compose(piR, piL), compose(lam, piL)));
    rep.add(compare_maps("pi-antipode-composition-3a", piL, compose(piRbar, lam)));
    rep.add(compare_maps("pi-antipode-composition-3b", piL, compose(lam, piLbar)));
    rep.add(compare_maps("pi-antipode-composition-4a", piR, compose(piLbar, lam)));
    rep.add(compare_maps("pi-antipode-composition-4b", piR, compose(lam, piRbar)));

    LinMap piL_delta = chain({{piL, id}, {delta}});      // (PiL (x) H) o delta
    LinMap mu_piR_left = chain({{mu}, {piR, id}});       // mu o (PiR (x) H)
    LinMap mu_lam_left = chain({{mu}, {lam, id}});       // mu o (lam (x) H)
    LinMap mu_lam_right = chain({{mu}, {id, lam}});      // mu o (H (x) lam)
    LinMap mu_piL_right = chain({{mu}, {id, piL}});      // mu o (H (x) PiL)
    LinMap mu_piL_left = chain({{mu}, {piL, id}});       // mu o (PiL (x) H)
    rep.add(compare_maps("mu-assoc-1a", chain({{mu}, {mu, id}, {id, piL_delta}}), mu));
    rep.add(compare_maps("mu-assoc-1b", chain({{mu}, {mu, piR}, {id, delta}}), mu));
    rep.add(compare_maps("mu-assoc-2a", chain({{mu}, {piL, mu}, {delta, id}}), mu));
    rep.add(compare_maps("mu-assoc-2b", chain({{mu}, {id, mu_piR_left}, {delta, id}}), mu));
    rep.add(compare_maps("mu-assoc-3a", chain({{mu}, {lam, mu_piL_left}, {delta, id}}),
                         mu_lam_left));
    rep.add(compare_maps("mu-assoc-3b", chain({{mu}, {piR, mu_lam_left}, {delta, id}}),
                         mu_lam_left));
    rep.add(compare_maps("mu-assoc-4a",
                         chain({{mu}, {mu, id}, {id, chain({{lam, piL}, {delta}})}}),
                         mu_lam_right));
    rep.add(compare_maps("mu-assoc-4b",
                         chain({{mu}, {mu, id}, {id, chain({{piR, lam}, {delta}})}}),
                         mu_lam_right));

    rep.add(compare_maps("2-mu-delta-pi-l",
                         chain({{mu, mu_piL_right}, {id, c, id}, {delta, delta}}),
                         chain({{mu, id}, {id, c}, {delta, id}})));
    rep.add(compare_maps("2-mu-delta-pi-r",
                         chain({{mu_piR_left, mu}, {id, c, id}, {delta, delta}}),
                         chain({{id, mu}, {c, id}, {id, delta}})));

    rep.add(compare_maps("anti-antipode-1", compose(lam, mu),
                         chain({{mu}, {c}, {lam, lam}})));
    rep.add(compare_maps("anti-antipode-2", compose(delta, lam),
                         chain({{lam, lam}, {c}, {delta}})));

    rep.add(compare_maps("pi-mu-pi-pi", chain({{piL}, {mu}, {piL, piL}}),
                         chain({{mu}, {piL, piL}})));

    // identities through the split of the target projection
    try {
        SplitPair split = split_idempotent(piL, "H_L");
        const LinMap& iL = split.section;
        rep.add(compare_maps("monoid-hl-1", chain({{mu}, {chain({{mu}, {iL, id}}), id}}),
                             chain({{mu}, {iL, mu}})));
        rep.add(compare_maps("monoid-hl-2", chain({{mu}, {id, chain({{mu}, {iL, id}})}}),
                             chain({{mu}, {chain({{mu}, {id, iL}}), id}})));
        rep.add(compare_maps("monoid-hl-3", chain({{mu}, {id, chain({{mu}, {id, iL}})}}),
                             chain({{mu}, {mu, iL}})));
        rep.add(compare_maps("aux-1-monoid-hl", chain({{delta}, {mu}, {iL, id}}),
                             chain({{mu, id}, {iL, delta}})));
        rep.add(compare_maps("aux-2-monoid-hl", chain({{delta}, {mu}, {id, iL}}),
                             chain({{mu, id}, {id, c}, {delta, iL}})));
    } catch (const NotIdempotentError&) {
        rep.add_flag("monoid-hl", false, "target projection is not idempotent; split unavailable");
    }
    return rep;
}

HlMonoid hl_monoid(const Whq& h) {
    if (!h.validated.has_value()) check_axioms(h);
    if (!*h.validated) {
        Report rep = check_axioms(h);
        throw NotAWhqError(rep.first_failure()->name);
    }
    Ctx x(h);
    const LinMap &mu = x.mu, &eta = x.eta, &eps = x.eps, &delta = x.delta;
    const LinMap &id = x.id, &piL = x.piL;
    SplitPair split = split_idempotent(piL, "H_L");
    const LinMap& iL = split.section;
    const LinMap& pL = split.retraction;

    UnitalMagma hl;
    hl.space = split.image;
    hl.unit = compose(pL, eta);
    hl.product = chain({{pL}, {mu}, {iL, iL}});
    LinMap eps_hl = compose(eps, iL);
    LinMap delta_hl = chain({{pL, pL}, {delta}, {iL}});

    Report rep("hl-monoid");
    LinMap idL = LinMap::identity(h.field, split.image);

    // equalizer characterization: i_L equalizes delta and (H (x) PiL) o delta,
    // and the equalizer object has the same dimension as the split image
    LinMap delta_piL = chain({{id, piL}, {delta}});
    rep.add(compare_maps("hl-equalizes", compose(delta, iL), compose(delta_piL, iL)));
    EqualizerData eq = equalizer(delta, delta_piL, "HL_eq");
    rep.add_flag("hl-equalizer-dim", eq.object.dim() == split.image_dim,
                 "dim " + std::to_string(eq.object.dim()) + " vs " + std::to_string(split.image_dim));

    // coequalizer characterization
    LinMap mu_piL = chain({{mu}, {id, piL}});
    rep.add(compare_maps("hl-coequalizes", compose(pL, mu), compose(pL, mu_piL)));
    CoequalizerData cq = coequalizer(mu, mu_piL, "HL_coeq");
    rep.add_flag("hl-coequalizer-dim", cq.object.dim() == split.image_dim,
                 "dim " + std::to_string(cq.object.dim()) + " vs " + std::to_string(split.image_dim));

    rep.add(compare_maps("hl-unit-left", chain({{hl.product}, {hl.unit, idL}}), idL));
    rep.add(compare_maps("hl-unit-right", chain({{hl.product}, {idL, hl.unit}}), idL));
    rep.add(compare_maps("hl-counit-left", chain({{eps_hl, idL}, {delta_hl}}), idL));
    rep.add(compare_maps("hl-counit-right", chain({{idL, eps_hl}, {delta_hl}}), idL));
    rep.add(compare_maps("hl-coassoc", chain({{delta_hl, idL}, {delta_hl}}),
                         chain({{idL, delta_hl}, {delta_hl}})));

    LinMap assoc_l = chain({{hl.product}, {hl.product, idL}});
    LinMap assoc_r = chain({{hl.product}, {idL, hl.product}});
    auto d = first_difference(assoc_l, assoc_r);
    rep.add_flag("hl-associative", !d.has_value());
    if (d) {
        auto multi = assoc_l.dom().unflatten(d->col);
        throw AssociativityFailureError(multi[0], multi[1], multi[2]);
    }
    return HlMonoid{std::move(split), std::move(hl), std::move(eps_hl), std::move(delta_hl),
                    std::move(rep)};
}

} // namespace whq
