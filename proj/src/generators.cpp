#include <whq/generators.hpp>

namespace whq {

namespace {

using Triples = std::vector<std::pair<std::pair<std::uint32_t, std::uint32_t>, Scalar>>;

Whq certify(Whq h) {
    Report rep = check_axioms(h);
    if (!rep.all_pass())
        throw AxiomVerificationError("generated structure fails axiom check at: " +
                                     rep.first_failure()->name);
    return h;
}

Whq grouplike_whq(const FieldSpec& field, const SpaceSig& space,
                  const std::function<std::uint32_t(std::uint32_t, std::uint32_t)>& prod,
                  const std::function<bool(std::uint32_t, std::uint32_t)>& defined,
                  const std::vector<std::uint32_t>& units,
                  const std::function<std::uint32_t(std::uint32_t)>& inv) {
    const std::uint64_t n = space.dim();
    const Scalar one = Scalar::one(field);
    Whq h;
    h.field = field;
    h.space = space;

    Triples mu;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            if (defined(i, j))
                mu.push_back({{prod(i, j), static_cast<std::uint32_t>(i * n + j)}, one});
    h.product = LinMap::from_triples(field, space.tensor(space), space, std::move(mu));

    Triples eta;
    for (std::uint32_t u : units) eta.push_back({{u, 0}, one});
    h.unit = LinMap::from_triples(field, SpaceSig::unit(), space, std::move(eta));

    Triples eps;
    for (std::uint32_t i = 0; i < n; ++i) eps.push_back({{0, i}, one});
    h.counit = LinMap::from_triples(field, space, SpaceSig::unit(), std::move(eps));

    Triples delta;
    for (std::uint32_t i = 0; i < n; ++i)
        delta.push_back({{static_cast<std::uint32_t>(i * n + i), i}, one});
    h.coproduct = LinMap::from_triples(field, space, space.tensor(space), std::move(delta));

    Triples lam;
    for (std::uint32_t i = 0; i < n; ++i) lam.push_back({{inv(i), i}, one});
    h.antipode = LinMap::from_triples(field, space, space, std::move(lam));
    return h;
}

} // namespace

Whq loop_algebra(const CayleyTable& t, const FieldSpec& field, const std::string& space_name) {
    IpCheckResult ip = ip_check(t);
    if (!ip.ok)
        throw NotALoopError("table is not an I.P. loop (witness pair " +
                            std::to_string(ip.witness->first) + "," +
                            std::to_string(ip.witness->second) + ")");
    SpaceSig space(space_name, t.order);
    return certify(grouplike_whq(
        field, space, [&](std::uint32_t i, std::uint32_t j) { return t.at(i, j); },
        [](std::uint32_t, std::uint32_t) { return true; }, {t.identity},
        [&](std::uint32_t i) { return ip.inverse[i]; }));
}

Whq group_algebra(const CayleyTable& t, const FieldSpec& field, const std::string& space_name) {
    if (!is_associative(t)) throw NotALoopError("group_algebra requires an associative table");
    return loop_algebra(t, field, space_name);
}

Whq groupoid_algebra(const GroupoidPresentation& p, const FieldSpec& field,
                     const std::string& space_name) {
    p.validate();
    SpaceSig space(space_name, p.size());
    return certify(grouplike_whq(
        field, space, [&](std::uint32_t g, std::uint32_t f) { return p.compose_at(g, f); },
        [&](std::uint32_t g, std::uint32_t f) {
            return p.compose_at(g, f) != GroupoidPresentation::kNone;
        },
        p.identity_of, [&](std::uint32_t f) { return p.inverse_of[f]; }));
}

Whq loopoid_algebra(std::uint32_t n_objects, const CayleyTable& loop, const FieldSpec& field,
                    const std::string& space_name) {
    if (n_objects == 0) throw Error("loopoid_algebra requires at least one object");
    IpCheckResult ip = ip_check(loop);
    if (!ip.ok)
        throw NotALoopError("table is not an I.P. loop (witness pair " +
                            std::to_string(ip.witness->first) + "," +
                            std::to_string(ip.witness->second) + ")");
    const std::uint32_t m = loop.order;
    const std::uint32_t n = n_objects * m * n_objects;
    SpaceSig space(space_name, n);
    // basis (x, a, y) flattened as (x*m + a)*n_objects + y
    auto idx = [&](std::uint32_t x, std::uint32_t a, std::uint32_t y) {
        return (x * m + a) * n_objects + y;
    };
    auto x_of = [&](std::uint32_t i) { return i / (m * n_objects); };
    auto a_of = [&](std::uint32_t i) { return (i / n_objects) % m; };
    auto y_of = [&](std::uint32_t i) { return i % n_objects; };

    std::vector<std::uint32_t> units;
    for (std::uint32_t x = 0; x < n_objects; ++x) units.push_back(idx(x, loop.identity, x));
    Whq h = grouplike_whq(
        field, space,
        [&](std::uint32_t i, std::uint32_t j) {
            return idx(x_of(i), loop.at(a_of(i), a_of(j)), y_of(j));
        },
        [&](std::uint32_t i, std::uint32_t j) { return y_of(i) == x_of(j); }, units,
        [&](std::uint32_t i) { return idx(y_of(i), ip.inverse[a_of(i)], x_of(i)); });
    return certify(std::move(h));
}

} // namespace whq
