#include <whq/tables.hpp>

#include <array>
#include <sstream>

namespace whq {

namespace {

void require_latin_with_identity(const CayleyTable& t) {
    const std::uint32_t n = t.order;
    if (n == 0 || t.cells.size() != static_cast<std::size_t>(n) * n)
        throw NotALoopError("malformed table");
    if (t.identity >= n) throw NotALoopError("identity index out of range");
    for (std::uint32_t i = 0; i < n; ++i) {
        std::vector<bool> row(n, false), col(n, false);
        for (std::uint32_t j = 0; j < n; ++j) {
            std::uint32_t r = t.at(i, j), c = t.at(j, i);
            if (r >= n || c >= n) throw NotALoopError("table value out of range");
            if (row[r])
                throw NotALoopError("row " + std::to_string(i) + " is not a permutation");
            if (col[c])
                throw NotALoopError("column " + std::to_string(i) + " is not a permutation");
            row[r] = col[c] = true;
        }
    }
    for (std::uint32_t i = 0; i < n; ++i) {
        if (t.at(t.identity, i) != i || t.at(i, t.identity) != i)
            throw NotALoopError("element " + std::to_string(t.identity) +
                                " does not act as an identity");
    }
}

} // namespace

IpCheckResult ip_check(const CayleyTable& t) {
    require_latin_with_identity(t);
    const std::uint32_t n = t.order;
    IpCheckResult res;
    res.inverse.assign(n, 0);
    for (std::uint32_t x = 0; x < n; ++x) {
        std::uint32_t inv = UINT32_MAX;
        for (std::uint32_t y = 0; y < n; ++y)
            if (t.at(x, y) == t.identity) {
                inv = y;
                break;
            }
        if (inv == UINT32_MAX || t.at(inv, x) != t.identity) {
            res.ok = false;
            res.witness = {x, x};
            return res;
        }
        res.inverse[x] = inv;
    }
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y) {
            if (t.at(res.inverse[x], t.at(x, y)) != y || t.at(t.at(y, x), res.inverse[x]) != y) {
                res.ok = false;
                res.witness = {x, y};
                return res;
            }
        }
    res.ok = true;
    return res;
}

bool is_associative(const CayleyTable& t) { return !associator_triple(t).has_value(); }

std::optional<std::array<std::uint32_t, 3>> associator_triple(const CayleyTable& t) {
    const std::uint32_t n = t.order;
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y)
            for (std::uint32_t z = 0; z < n; ++z)
                if (t.at(t.at(x, y), z) != t.at(x, t.at(y, z)))
                    return std::array<std::uint32_t, 3>{x, y, z};
    return std::nullopt;
}

bool is_abelian(const CayleyTable& t) {
    for (std::uint32_t x = 0; x < t.order; ++x)
        for (std::uint32_t y = 0; y < t.order; ++y)
            if (t.at(x, y) != t.at(y, x)) return false;
    return true;
}

CayleyTable chein_double(const CayleyTable& group) {
    IpCheckResult ip = ip_check(group);
    if (!ip.ok || !is_associative(group))
        throw IpVerificationError("chein_double requires a group table");
    const std::uint32_t n = group.order;
    CayleyTable t;
    t.order = 2 * n;
    t.identity = group.identity;
    t.cells.assign(static_cast<std::size_t>(t.order) * t.order, 0);
    const auto& inv = ip.inverse;
    for (std::uint32_t g = 0; g < n; ++g)
        for (std::uint32_t h = 0; h < n; ++h) {
            t.set(g, h, group.at(g, h));              // g.h = gh
            t.set(g, n + h, n + group.at(h, g));      // g.(hu) = (hg)u
            t.set(n + g, h, n + group.at(g, inv[h])); // (gu).h = (g h^-1)u
            t.set(n + g, n + h, group.at(inv[h], g)); // (gu).(hu) = h^-1 g
        }
    IpCheckResult check = ip_check(t);
    if (!check.ok) throw IpVerificationError("chein double failed the inverse-property check");
    if (is_associative(t) != is_abelian(group))
        throw IpVerificationError("chein double associativity does not match input abelianness");
    return t;
}

CayleyTable cyclic_table(std::uint32_t n) {
    if (n == 0) throw NotALoopError("cyclic table of order 0");
    CayleyTable t;
    t.order = n;
    t.identity = 0;
    t.cells.resize(static_cast<std::size_t>(n) * n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) t.set(i, j, (i + j) % n);
    return t;
}

CayleyTable symmetric3_table() {
    // permutations of {0,1,2} in lexicographic one-line order;
    // product (p*q)(x) = p(q(x))
    const std::array<std::array<std::uint32_t, 3>, 6> perms = {{
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
    }};
    auto index_of = [&](const std::array<std::uint32_t, 3>& p) -> std::uint32_t {
        for (std::uint32_t k = 0; k < 6; ++k)
            if (perms[k] == p) return k;
        throw Error("not a permutation of {0,1,2}");
    };
    CayleyTable t;
    t.order = 6;
    t.identity = 0;
    t.cells.resize(36);
    for (std::uint32_t i = 0; i < 6; ++i)
        for (std::uint32_t j = 0; j < 6; ++j) {
            std::array<std::uint32_t, 3> prod;
            for (std::uint32_t x = 0; x < 3; ++x) prod[x] = perms[i][perms[j][x]];
            t.set(i, j, index_of(prod));
        }
    return t;
}

std::string print_table(const CayleyTable& t) {
    std::ostringstream os;
    os << "cayley v1\n";
    os << "order " << t.order << "\n";
    os << "identity " << t.identity << "\n";
    for (std::uint32_t i = 0; i < t.order; ++i) {
        for (std::uint32_t j = 0; j < t.order; ++j) {
            if (j) os << " ";
            os << t.at(i, j);
        }
        os << "\n";
    }
    return os.str();
}

CayleyTable parse_table(const std::string& text) {
    std::istringstream is(text);
    std::string tok;
    CayleyTable t;
    if (!(is >> tok) || tok != "cayley") throw Error("table file must start with 'cayley'");
    is >> tok; // version
    if (!(is >> tok) || tok != "order" || !(is >> t.order))
        throw Error("table file is missing 'order'");
    if (!(is >> tok) || tok != "identity" || !(is >> t.identity))
        throw Error("table file is missing 'identity'");
    t.cells.resize(static_cast<std::size_t>(t.order) * t.order);
    for (auto& v : t.cells)
        if (!(is >> v)) throw Error("table file has too few cells");
    return t;
}

void GroupoidPresentation::validate() const {
    const std::uint32_t n = size();
    if (identity_of.size() != n_objects || inverse_of.size() != n ||
        composition.size() != static_cast<std::size_t>(n) * n)
        throw InvalidGroupoidError("malformed presentation");
    for (std::uint32_t x = 0; x < n_objects; ++x) {
        std::uint32_t e = identity_of[x];
        if (e >= n || morphisms[e].src != x || morphisms[e].tgt != x)
            throw InvalidGroupoidError("identity of object " + std::to_string(x) + " is invalid");
    }
    for (std::uint32_t f = 0; f < n; ++f) {
        if (morphisms[f].src >= n_objects || morphisms[f].tgt >= n_objects)
            throw InvalidGroupoidError("morphism endpoints out of range");
        for (std::uint32_t g = 0; g < n; ++g) {
            std::uint32_t gf = compose_at(g, f);
            const bool composable = morphisms[g].src == morphisms[f].tgt;
            if (composable != (gf != kNone))
                throw InvalidGroupoidError("composability mismatch");
            if (gf != kNone &&
                (morphisms[gf].src != morphisms[f].src || morphisms[gf].tgt != morphisms[g].tgt))
                throw InvalidGroupoidError("composite endpoints are wrong");
        }
        if (compose_at(f, identity_of[morphisms[f].src]) != f ||
            compose_at(identity_of[morphisms[f].tgt], f) != f)
            throw InvalidGroupoidError("identities do not act trivially");
        std::uint32_t finv = inverse_of[f];
        if (finv >= n || compose_at(finv, f) != identity_of[morphisms[f].src] ||
            compose_at(f, finv) != identity_of[morphisms[f].tgt])
            throw InvalidGroupoidError("inverse of morphism " + std::to_string(f) + " is invalid");
    }
    for (std::uint32_t f = 0; f < n; ++f)
        for (std::uint32_t g = 0; g < n; ++g)
            for (std::uint32_t h = 0; h < n; ++h) {
                // (h o g) o f = h o (g o f) whenever both sides are defined
                std::uint32_t hg = compose_at(h, g), gf = compose_at(g, f);
                if (hg != kNone && gf != kNone && compose_at(hg, f) != compose_at(h, gf))
                    throw InvalidGroupoidError("composition is not associative");
            }
}

GroupoidPresentation pair_groupoid(std::uint32_t n_objects) {
    // morphism (x,y): y -> x, composition (x,y) o (y,z) = (x,z)
    GroupoidPresentation p;
    p.n_objects = n_objects;
    const std::uint32_t n = n_objects * n_objects;
    p.morphisms.resize(n);
    auto idx = [&](std::uint32_t x, std::uint32_t y) { return x * n_objects + y; };
    for (std::uint32_t x = 0; x < n_objects; ++x)
        for (std::uint32_t y = 0; y < n_objects; ++y)
            p.morphisms[idx(x, y)] = {y, x};
    p.composition.assign(static_cast<std::size_t>(n) * n, GroupoidPresentation::kNone);
    for (std::uint32_t x = 0; x < n_objects; ++x)
        for (std::uint32_t y = 0; y < n_objects; ++y)
            for (std::uint32_t z = 0; z < n_objects; ++z)
                p.composition[static_cast<std::size_t>(idx(x, y)) * n + idx(y, z)] = idx(x, z);
    p.identity_of.resize(n_objects);
    for (std::uint32_t x = 0; x < n_objects; ++x) p.identity_of[x] = idx(x, x);
    p.inverse_of.resize(n);
    for (std::uint32_t x = 0; x < n_objects; ++x)
        for (std::uint32_t y = 0; y < n_objects; ++y) p.inverse_of[idx(x, y)] = idx(y, x);
    p.validate();
    return p;
}

GroupoidPresentation one_object_groupoid(const CayleyTable& group) {
    IpCheckResult ip = ip_check(group);
    if (!ip.ok || !is_associative(group))
        throw InvalidGroupoidError("one_object_groupoid requires a group table");
    GroupoidPresentation p;
    p.n_objects = 1;
    const std::uint32_t n = group.order;
    p.morphisms.assign(n, {0, 0});
    p.composition.resize(static_cast<std::size_t>(n) * n);
    for (std::uint32_t g = 0; g < n; ++g)
        for (std::uint32_t f = 0; f < n; ++f)
            p.composition[static_cast<std::size_t>(g) * n + f] = group.at(g, f);
    p.identity_of = {group.identity};
    p.inverse_of = ip.inverse;
    p.validate();
    return p;
}

GroupoidPresentation disjoint_union(const GroupoidPresentation& a, const GroupoidPresentation& b) {
    GroupoidPresentation p;
    p.n_objects = a.n_objects + b.n_objects;
    const std::uint32_t na = a.size(), nb = b.size(), n = na + nb;
    p.morphisms.resize(n);
    for (std::uint32_t f = 0; f < na; ++f) p.morphisms[f] = a.morphisms[f];
    for (std::uint32_t f = 0; f < nb; ++f)
        p.morphisms[na + f] = {b.morphisms[f].src + a.n_objects, b.morphisms[f].tgt + a.n_objects};
    p.composition.assign(static_cast<std::size_t>(n) * n, GroupoidPresentation::kNone);
    for (std::uint32_t g = 0; g < na; ++g)
        for (std::uint32_t f = 0; f < na; ++f)
            p.composition[static_cast<std::size_t>(g) * n + f] = a.compose_at(g, f);
    for (std::uint32_t g = 0; g < nb; ++g)
        for (std::uint32_t f = 0; f < nb; ++f) {
            std::uint32_t gf = b.compose_at(g, f);
            p.composition[static_cast<std::size_t>(na + g) * n + (na + f)] =
                gf == GroupoidPresentation::kNone ? GroupoidPresentation::kNone : na + gf;
        }
    p.identity_of.resize(p.n_objects);
    for (std::uint32_t x = 0; x < a.n_objects; ++x) p.identity_of[x] = a.identity_of[x];
    for (std::uint32_t x = 0; x < b.n_objects; ++x)
        p.identity_of[a.n_objects + x] = na + b.identity_of[x];
    p.inverse_of.resize(n);
    for (std::uint32_t f = 0; f < na; ++f) p.inverse_of[f] = a.inverse_of[f];
    for (std::uint32_t f = 0; f < nb; ++f) p.inverse_of[na + f] = na + b.inverse_of[f];
    p.validate();
    return p;
}

} // namespace whq
