#include <whq/cleft.hpp>

namespace whq {

namespace {

struct ClCtx {
    const ComoduleMagma& cm;
    const LinMap &muA, &etaA, &rho;
    const LinMap &muH, &etaH, &epsH, &deltaH, &lamH;
    LinMap idA, idH, cHA, cHH;
    LinMap piLbar, piRbar, piL;
    LinMap em, rho_eta;

    explicit ClCtx(const ComoduleMagma& c)
        : cm(c),
          muA(c.algebra.product),
          etaA(c.algebra.unit),
          rho(c.coaction),
          muH(c.hopf.product),
          etaH(c.hopf.unit),
          epsH(c.hopf.counit),
          deltaH(c.hopf.coproduct),
          lamH(c.hopf.antipode),
          idA(LinMap::identity(c.hopf.field, c.algebra.space)),
          idH(LinMap::identity(c.hopf.field, c.hopf.space)),
          cHA(swap_map(c.hopf.field, c.hopf.space, c.algebra.space)),
          cHH(swap_map(c.hopf.field, c.hopf.space, c.hopf.space)) {
        Projections p = projections(c.hopf);
        piL = std::move(p.target);
        piLbar = std::move(p.target_bar);
        piRbar = std::move(p.source_bar);
        em = compose(epsH, muH);
        rho_eta = compose(rho, etaA);
    }

    LinMap conv(const LinMap& f, const LinMap& g) const {
        return chain({{muA}, {f, g}, {deltaH}});
    }
    LinMap q_of(const CleftWitness& w) const {
        return chain({{muA}, {idA, w.h_inv}, {rho}});
    }
    // right-hand side of (c1)
    LinMap c1_rhs() const {
        return chain({{idA, em}, {cHA, idH}, {idH, rho_eta}});
    }
};

} // namespace

CleftWitness self_cleft_witness(const Whq& h) {
    return CleftWitness{LinMap::identity(h.field, h.space), h.antipode};
}

Report check_cleft(const ComoduleMagma& cm, const CleftWitness& w) {
    ClCtx x(cm);
    Report rep("cleft");
    rep.add(compare_maps("h-comodule-morphism", compose(x.rho, w.h),
                         chain({{w.h, x.idH}, {x.deltaH}})));
    LinMap hinv_h = x.conv(w.h_inv, w.h);
    LinMap h_hinv = x.conv(w.h, w.h_inv);
    rep.add(compare_maps("c1", hinv_h, x.c1_rhs()));
    rep.add(compare_maps("c2",
                         chain({{x.idA, x.muH},
                                {x.cHA, x.idH},
                                {x.idH, compose(x.rho, w.h_inv)},
                                {x.deltaH}}),
                         chain({{x.idA, x.piRbar}, {x.rho}, {w.h_inv}})));
    rep.add(compare_maps("c3",
                         chain({{x.muA}, {x.muA, x.idA}, {x.idA, w.h_inv, w.h}, {x.idA, x.deltaH}}),
                         chain({{x.muA}, {x.idA, hinv_h}})));
    rep.add(compare_maps("c4",
                         chain({{x.muA}, {x.muA, x.idA}, {x.idA, w.h, w.h_inv}, {x.idA, x.deltaH}}),
                         chain({{x.muA}, {x.idA, h_hinv}})));
    return rep;
}

CleftProperties cleft_properties(const ComoduleMagma& cm, const CoinvariantData& coinv,
                                 const CleftWitness& w) {
    ClCtx x(cm);
    Report rep("cleft-properties");
    LinMap hinv_h = x.conv(w.h_inv, w.h);
    LinMap h_hinv = x.conv(w.h, w.h_inv);
    LinMap q = x.q_of(w);

    LinMap p_hh = factor_through_equalizer(coinv.eq, h_hinv);
    rep.add_flag("i-factor-h-hinv", true);
    LinMap p = factor_through_equalizer(coinv.eq, q);
    rep.add_flag("i-factor-q", true);

    rep.add(compare_maps("ii", chain({{x.muA}, {hinv_h, x.idA}}),
                         chain({{x.idA, x.em}, {x.cHA, x.idH}, {x.idH, x.rho}})));
    rep.add(compare_maps("iii-a", x.conv(hinv_h, w.h_inv), w.h_inv));
    rep.add(compare_maps("iii-b", x.conv(w.h_inv, h_hinv), w.h_inv));
    rep.add(compare_maps("iv-a", x.conv(w.h, hinv_h), w.h));
    rep.add(compare_maps("iv-b", x.conv(h_hinv, w.h), w.h));
    rep.add(compare_maps("v", chain({{x.muA}, {x.idA, hinv_h}, {x.rho}}), x.idA));
    rep.add(compare_maps("vi",
                         chain({{x.muA}, {x.muA, x.idA}, {x.idA, q, w.h}, {x.idA, x.rho}}),
                         x.muA));
    return CleftProperties{std::move(rep), std::move(q), std::move(p), std::move(p_hh)};
}

std::pair<bool, bool> check_c2_equivalence(const ComoduleMagma& cm, const CleftWitness& w) {
    ClCtx x(cm);
    bool c2 = chain({{x.idA, x.muH},
                     {x.cHA, x.idH},
                     {x.idH, compose(x.rho, w.h_inv)},
                     {x.deltaH}}) ==
              chain({{x.idA, x.piRbar}, {x.rho}, {w.h_inv}});
    bool reform = compose(x.rho, w.h_inv) ==
                  chain({{w.h_inv, x.lamH}, {x.cHH}, {x.deltaH}});
    return {c2, reform};
}

std::pair<bool, bool> check_c4_equivalence(const ComoduleMagma& cm, const CoinvariantData& coinv,
                                           const CleftWitness& w) {
    (void)coinv;
    ClCtx x(cm);
    LinMap h_hinv = x.conv(w.h, w.h_inv);
    bool c4 = chain({{x.muA}, {x.muA, x.idA}, {x.idA, w.h, w.h_inv}, {x.idA, x.deltaH}}) ==
              chain({{x.muA}, {x.idA, h_hinv}});
    bool reform = chain({{x.muA}, {x.muA, w.h_inv}, {x.idA, x.rho}}) ==
                  chain({{x.muA}, {x.idA, x.q_of(w)}});
    return {c4, reform};
}

GaloisConstruction galois_from_cleft(const ComoduleMagma& cm, const CoinvariantData& coinv,
                                     const TensorOverCoinv& toc, const NablaData& nab,
                                     const CleftWitness& w) {
    ClCtx x(cm);
    Report rep("galois-from-cleft");
    const LinMap& n = toc.coeq.arrow;
    const LinMap& i_box = nab.split.section;
    const LinMap& p_box = nab.split.retraction;
    const LinMap& iA = coinv.inj;
    const LinMap idL = LinMap::identity(cm.hopf.field, coinv.space);

    LinMap gamma = canonical_gamma(cm, nab, toc, &rep);
    LinMap hinv_h_delta = chain({{w.h_inv, w.h}, {x.deltaH}}); // H -> A (x) A
    LinMap gamma_inv = chain({{n}, {x.muA, x.idA}, {x.idA, hinv_h_delta}, {i_box}});

    rep.add(compare_maps("gamma-gamma-inv",
                         compose(gamma, gamma_inv),
                         LinMap::identity(cm.hopf.field, nab.split.image)));
    rep.add(compare_maps("gamma-inv-gamma",
                         compose(gamma_inv, gamma),
                         LinMap::identity(cm.hopf.field, toc.space)));
    GaloisWitness gw{gamma, gamma_inv};
    rep.add_flag("gamma-inv-almost-lineal", check_gamma_inv_almost_lineal(cm, gw, toc, nab));

    LinMap q = x.q_of(w);
    LinMap p = factor_through_equalizer(coinv.eq, q);
    LinMap omega = chain({{x.muA}, {iA, w.h}});       // A^coH (x) H -> A
    LinMap omega_prime = chain({{p, x.idH}, {x.rho}}); // A -> A^coH (x) H
    rep.add(compare_maps("omega-retraction", compose(omega, omega_prime), x.idA));

    LinMap Omega = compose(omega_prime, omega);
    SplitPair split = split_idempotent(Omega, "AcoHxH");
    LinMap b = compose(split.retraction, omega_prime);
    LinMap b_inv = compose(omega, split.section);

    LinMap h_hinv = x.conv(w.h, w.h_inv);
    rep.add(compare_maps("omega-ia",
                         chain({{iA, x.idH}, {Omega}}),
                         chain({{x.muA, x.idH},
                                {iA, chain({{h_hinv, x.idH}, {x.deltaH}})}})));
    rep.add(compare_maps("old-equa", chain({{p}, {x.muA}, {iA, x.idA}}),
                         chain({{coinv.product}, {idL, p}})));
    rep.add(compare_maps("omega-fin", Omega,
                         chain({{chain({{coinv.product}, {idL, p}}), x.idH},
                                {idL, compose(x.rho, w.h)}})));
    LinMap hinv_h = x.conv(w.h_inv, w.h);
    LinMap absorb = chain({{x.muA}, {x.idA, hinv_h}}); // A (x) H -> A
    rep.add(compare_maps("aux-fin-1", absorb, chain({{x.idA, x.epsH}, {nab.nabla}})));
    rep.add(compare_maps("aux-fin-2", chain({{absorb, x.idH}, {x.idA, x.deltaH}}), nab.nabla));

    NormalBasisWitness nbw{std::move(Omega), std::move(split), std::move(b), std::move(b_inv)};
    rep.merge(check_normal_basis(cm, coinv, nbw));
    return GaloisConstruction{std::move(gw), std::move(nbw), std::move(rep)};
}

CleftWitness cleft_from_galois(const ComoduleMagma& cm, const CoinvariantData& coinv,
                               const TensorOverCoinv& toc, const NablaData& nab,
                               const GaloisWitness& gw, const NormalBasisWitness& nbw,
                               Report* checks) {
    ClCtx x(cm);
    if (!check_gamma_inv_almost_lineal(cm, gw, toc, nab))
        throw AlmostLinealityRequiredError("gamma^-1 is not almost lineal");

    Report local("cleft-from-galois");
    LinMap m = build_mA(cm, coinv, toc, nab, gw, nbw, &local);
    LinMap h = chain({{nbw.b_inv}, {nbw.split.retraction}, {coinv.unit, x.idH}});
    LinMap h_inv = chain({{m}, {gw.gamma_inv}, {nab.split.retraction}, {x.etaA, x.idH}});

    // factorization of mu_A through the quotient, and its two descriptions
    LinMap mu_bar = factor_through_coequalizer(toc.coeq, x.muA);
    local.add(compare_maps("igualdadmsubAomega", mu_bar,
                           chain({{x.muA}, {m, h}, {toc.rho2}})));
    local.add(compare_maps("igualdadmsubAomega-2", mu_bar,
                           chain({{x.idA, x.epsH}, {nab.split.section}, {gw.gamma}})));
    if (checks) checks->merge(local);
    return CleftWitness{std::move(h), std::move(h_inv)};
}

Report corollary_hq(const ComoduleMagma& cm, const CleftWitness& w) {
    ClCtx x(cm);
    StructureClass cls = classify(cm.hopf);
    if (cls != StructureClass::HopfQuasigroup && cls != StructureClass::HopfAlgebra)
        throw NotAHopfQuasigroupError("structure classifies as " + to_string(cls));

    Report rep("corollary-hq");
    NablaData nab = nabla(cm);
    rep.add(compare_maps("nabla-identity", nab.nabla,
                         LinMap::identity(cm.hopf.field, nab.nabla.dom())));

    CoinvariantData coinv = coinvariants(cm);
    const LinMap idL = LinMap::identity(cm.hopf.field, coinv.space);
    rep.merge(check_cleft(cm, w));
    CleftProperties props = cleft_properties(cm, coinv, w);
    rep.merge(props.checks);

    // the corollary's witness: Omega = id, b = (p_A (x) H) o rho, b^-1 = mu o (i_A (x) h)
    LinMap lh = tensor(idL, x.idH);
    LinMap omega_id = LinMap::identity(cm.hopf.field, lh.dom());
    SplitPair split = split_idempotent(omega_id, "AcoHxH");
    LinMap b = compose(split.retraction, chain({{props.p, x.idH}, {x.rho}}));
    LinMap b_inv = chain({{x.muA}, {coinv.inj, w.h}, {split.section}});
    NormalBasisWitness nbw{omega_id, split, b, b_inv};
    rep.merge(check_normal_basis(cm, coinv, nbw));

    rep.add(compare_maps("fin-fin", chain({{coinv.product}, {idL, compose(props.p, w.h)}}),
                         tensor(idL, x.epsH)));
    rep.add(compare_maps("b-eta", compose(b, x.etaA),
                         compose(split.retraction, tensor(coinv.unit, x.etaH))));
    LinMap eta_eps = compose(x.etaA, x.epsH); // H -> A
    rep.add(compare_maps("h-hinv-trivial", x.conv(w.h, w.h_inv), eta_eps));
    rep.add(compare_maps("hinv-h-trivial", x.conv(w.h_inv, w.h), eta_eps));
    rep.add(compare_maps("h-total", compose(w.h, x.etaH), x.etaA));
    return rep;
}

namespace {

void add_gates(Report& rep, const ComoduleMagma& cm, const CoinvariantData& coinv) {
    rep.add_flag("AsubH-2", check_asubh2(cm, coinv));
    rep.add_flag("AsubH-3", check_asubh3(cm, coinv));
}

} // namespace

RoundtripResult roundtrip_from_cleft(const ComoduleMagma& cm, const CleftWitness& w) {
    Report rep("roundtrip-from-cleft");
    rep.merge(check_comodule_magma(cm));
    CoinvariantData coinv = coinvariants(cm);
    add_gates(rep, cm, coinv);
    NablaData nab = nabla(cm);
    rep.merge(nab.checks);
    TensorOverCoinv toc = tensor_over_coinvariants(cm, coinv);
    rep.merge(check_cleft(cm, w));
    rep.merge(cleft_properties(cm, coinv, w).checks);

    GaloisConstruction gc = galois_from_cleft(cm, coinv, toc, nab, w);
    rep.merge(gc.checks);
    // the constructed inverse must coincide with exact inversion
    rep.add(compare_maps("gamma-inv-vs-invert", gc.galois.gamma_inv, invert(gc.galois.gamma)));

    Report back("reconstructed-witness");
    CleftWitness w2 = cleft_from_galois(cm, coinv, toc, nab, gc.galois, gc.normal_basis, &back);
    back.merge(check_cleft(cm, w2));
    back.merge(cleft_properties(cm, coinv, w2).checks);
    rep.merge(back);
    return RoundtripResult{rep, rep.all_pass()};
}

RoundtripResult roundtrip_from_galois(const ComoduleMagma& cm,
                                      const std::optional<NormalBasisWitness>& nbw_opt) {
    Report rep("roundtrip-from-galois");
    rep.merge(check_comodule_magma(cm));
    CoinvariantData coinv = coinvariants(cm);
    add_gates(rep, cm, coinv);
    NablaData nab = nabla(cm);
    rep.merge(nab.checks);
    TensorOverCoinv toc = tensor_over_coinvariants(cm, coinv);

    GaloisWitness gw = is_galois(cm, nab, toc, &rep);
    rep.add_flag("gamma-invertible", true);
    rep.add_flag("gamma-inv-almost-lineal", check_gamma_inv_almost_lineal(cm, gw, toc, nab));
    rep.merge(check_galois_lemma(cm, gw, toc, nab));

    NormalBasisWitness nbw =
        nbw_opt.has_value() ? *nbw_opt : self_normal_basis(cm, coinv);
    rep.merge(check_normal_basis(cm, coinv, nbw));

    Report fwd("constructed-witness");
    CleftWitness w = cleft_from_galois(cm, coinv, toc, nab, gw, nbw, &fwd);
    fwd.merge(check_cleft(cm, w));
    fwd.merge(cleft_properties(cm, coinv, w).checks);
    rep.merge(fwd);

    GaloisConstruction gc = galois_from_cleft(cm, coinv, toc, nab, w);
    rep.merge(gc.checks);
    rep.add(compare_maps("gamma-inv-vs-invert", gc.galois.gamma_inv, invert(gc.galois.gamma)));
    return RoundtripResult{rep, rep.all_pass()};
}

} // namespace whq
