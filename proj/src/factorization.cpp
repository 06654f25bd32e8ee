#include <whq/factorization.hpp>

#include <algorithm>
#include <map>

namespace whq {

namespace {

using SparseVec = std::vector<std::pair<std::uint32_t, Scalar>>; // sorted by index

SparseVec axpy(const SparseVec& x, const Scalar& c, const SparseVec& y) {
    // x + c*y
    SparseVec out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j >= y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.push_back(x[i++]);
        } else if (i >= x.size() || y[j].first < x[i].first) {
            Scalar v = c * y[j].second;
            if (!v.is_zero()) out.push_back({y[j].first, std::move(v)});
            ++j;
        } else {
            Scalar v = x[i].second + c * y[j].second;
            if (!v.is_zero()) out.push_back({x[i].first, std::move(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

// Reduced echelon basis of a span, built incrementally. Rows are normalized
// to leading coefficient 1 and fully back-substituted, so the final basis is
// the unique RREF of the span regardless of insertion order.
class Echelon {
public:
    // reduce v against the current basis
    SparseVec reduce(SparseVec v) const {
        for (const auto& [pivot, row_idx] : pivots_) {
            auto it = std::lower_bound(v.begin(), v.end(), pivot,
                                       [](const auto& p, std::uint32_t c) { return p.first < c; });
            if (it != v.end() && it->first == pivot) v = axpy(v, -it->second, rows_[row_idx]);
        }
        return v;
    }

    // returns true when v added a new basis row
    bool insert(SparseVec v) {
        v = reduce(std::move(v));
        if (v.empty()) return false;
        const std::uint32_t pivot = v.front().first;
        Scalar lead = v.front().second;
        if (!lead.is_one()) {
            Scalar inv = lead.inverse();
            for (auto& [c, val] : v) val = val * inv;
        }
        // back-substitute into existing rows
        for (auto& row : rows_) {
            auto it = std::lower_bound(row.begin(), row.end(), pivot,
                                       [](const auto& p, std::uint32_t c) { return p.first < c; });
            if (it != row.end() && it->first == pivot) row = axpy(row, -it->second, v);
        }
        rows_.push_back(std::move(v));
        pivots_[pivot] = rows_.size() - 1;
        return true;
    }

    std::size_t rank() const { return rows_.size(); }

    // (pivot column, row) sorted by pivot
    std::vector<std::pair<std::uint32_t, const SparseVec*>> sorted_rows() const {
        std::vector<std::pair<std::uint32_t, const SparseVec*>> out;
        out.reserve(rows_.size());
        for (const auto& [pivot, idx] : pivots_) out.push_back({pivot, &rows_[idx]});
        return out;
    }

    bool has_pivot(std::uint32_t col) const { return pivots_.count(col) != 0; }

private:
    std::vector<SparseVec> rows_;
    std::map<std::uint32_t, std::size_t> pivots_;
};

SparseVec column_vec(const LinMap& m, std::uint32_t col) {
    SparseVec v;
    if (const SparseCol* c = m.column(col))
        for (const Entry& e : *c) v.push_back({e.row, e.val});
    return v;
}

// rows of m as sparse vectors indexed by dom
std::vector<SparseVec> row_vectors(const LinMap& m) {
    std::vector<SparseVec> rows(m.cod().dim());
    m.for_each([&](std::uint32_t row, std::uint32_t col, const Scalar& v) {
        rows[row].push_back({col, v});
    });
    return rows; // column-major traversal yields sorted rows
}

// RREF of the column span of m (basis of the image, pivot coordinates in cod)
Echelon image_echelon(const LinMap& m) {
    Echelon ech;
    for (const auto& [c, entries] : m.columns()) {
        SparseVec v;
        v.reserve(entries.size());
        for (const Entry& e : entries) v.push_back({e.row, e.val});
        ech.insert(std::move(v));
    }
    return ech;
}

} // namespace

std::uint64_t rank(const LinMap& f) { return image_echelon(f).rank(); }

SplitPair split_idempotent(const LinMap& e, const std::string& image_name) {
    if (e.dom() != e.cod())
        throw SignatureMismatchError("split_idempotent", e.cod().str(), e.dom().str());
    LinMap ee = compose(e, e);
    if (auto d = first_difference(ee, e))
        throw NotIdempotentError(d->col, "e*e=" + d->lhs.str() + ", e=" + d->rhs.str());

    Echelon ech = image_echelon(e);
    auto basis = ech.sorted_rows();
    const std::uint64_t r = basis.size();
    SpaceSig image(image_name, static_cast<std::uint32_t>(r));

    LinMap section(e.field(), image, e.dom());
    {
        std::vector<std::pair<std::pair<std::uint32_t, std::uint32_t>, Scalar>> triples;
        for (std::uint32_t k = 0; k < r; ++k)
            for (const auto& [row, val] : *basis[k].second) triples.push_back({{row, k}, val});
        section = LinMap::from_triples(e.field(), image, e.dom(), std::move(triples));
    }
    // Coordinates in the reduced echelon basis are read off the pivot rows,
    // so p = (pivot reader) o e.
    LinMap retraction(e.field(), e.dom(), image);
    {
        std::vector<std::uint32_t> pivot_pos(e.cod().dim(), UINT32_MAX);
        for (std::uint32_t k = 0; k < r; ++k) pivot_pos[basis[k].first] = k;
        std::vector<std::pair<std::pair<std::uint32_t, std::uint32_t>, Scalar>> triples;
        e.for_each([&](std::uint32_t row, std::uint32_t col, const Scalar& v) {
            if (pivot_pos[row] != UINT32_MAX) triples.push_back({{pivot_pos[row], col}, v});
        });
        retraction = LinMap::from_triples(e.field(), e.dom(), image, std::move(triples));
    }

    if (!(compose(retraction, section) == LinMap::identity(e.field(), image)))
        throw FactorizationFailureError("split: p o i is not the identity");
    if (!(compose(section, retraction) == e))
        throw FactorizationFailureError("split: i o p does not reproduce the idempotent");
    return SplitPair{image, r, std::move(section), std::move(retraction)};
}

EqualizerData equalizer(const LinMap& f, const LinMap& g, const std::string& object_name) {
    if (f.dom() != g.dom() || f.cod() != g.cod())
        throw SignatureMismatchError("equalizer", f.dom().str() + " -> " + f.cod().str(),
                                     g.dom().str() + " -> " + g.cod().str());
    LinMap d = sub(f, g);
    // kernel of d via RREF of its rows
    Echelon ech;
    for (auto& row : row_vectors(d)) ech.insert(std::move(row));
    auto rows = ech.sorted_rows();
    const std::uint64_t n = d.dom().dim();
    std::vector<std::uint32_t> free_cols;
    for (std::uint64_t c = 0; c < n; ++c)
        if (!ech.has_pivot(static_cast<std::uint32_t>(c)))
            free_cols.push_back(static_cast<std::uint32_t>(c));
    SpaceSig object(object_name, static_cast<std::uint32_t>(free_cols.size()));
    std::vector<std::pair<std::pair<std::uint32_t, std::uint32_t>, Scalar>> triples;
    const Scalar one = Scalar::one(f.field());
    for (std::uint32_t k = 0; k < free_cols.size(); ++k) {
        const std::uint32_t fc = free_cols[k];
        triples.push_back({{fc, k}, one});
        for (const auto& [pivot, row] : rows) {
            auto it = std::lower_bound(row->begin(), row->end(), fc,
                                       [](const auto& p, std::uint32_t c) { return p.first < c; });
            if (it != row->end() && it->first == fc) triples.push_back({{pivot, k}, -it->second});
        }
    }
    LinMap arrow = LinMap::from_triples(f.field(), object, f.dom(), std::move(triples));
    return EqualizerData{object, std::move(arrow), f, g, free_cols};
}

CoequalizerData coequalizer(const LinMap& f, const LinMap& g, const std::string& object_name) {
    if (f.dom() != g.dom() || f.cod() != g.cod())
        throw SignatureMismatchError("coequalizer", f.dom().str() + " -> " + f.cod().str(),
                                     g.dom().str() + " -> " + g.cod().str());
    LinMap d = sub(f, g);
    Echelon ech = image_echelon(d);
    auto basis = ech.sorted_rows();
    const std::uint64_t m = d.cod().dim();
    std::vector<std::uint32_t> complement; // non-pivot coordinates of cod
    for (std::uint64_t y = 0; y < m; ++y)
        if (!ech.has_pivot(static_cast<std::uint32_t>(y)))
            complement.push_back(static_cast<std::uint32_t>(y));
    SpaceSig object(object_name, static_cast<std::uint32_t>(complement.size()));
    std::vector<std::uint32_t> comp_pos(m, UINT32_MAX);
    for (std::uint32_t k = 0; k < complement.size(); ++k) comp_pos[complement[k]] = k;

    std::vector<std::pair<std::pair<std::uint32_t, std::uint32_t>, Scalar>> qtriples;
    const Scalar one = Scalar::one(f.field());
    for (std::uint32_t k = 0; k < complement.size(); ++k) qtriples.push_back({{k, complement[k]}, one});
    for (const auto& [pivot, row] : basis)
        for (const auto& [idx, val] : *row)
            if (idx != pivot) qtriples.push_back({{comp_pos[idx], pivot}, -val});
    LinMap arrow = LinMap::from_triples(f.field(), f.cod(), object, std::move(qtriples));

    std::vector<std::pair<std::pair<std::uint32_t, std::uint32_t>, Scalar>> striples;
    for (std::uint32_t k = 0; k < complement.size(); ++k) striples.push_back({{complement[k], k}, one});
    LinMap section = LinMap::from_triples(f.field(), object, f.cod(), std::move(striples));

    if (!(compose(arrow, f) == compose(arrow, g)))
        throw FactorizationFailureError("coequalizer arrow fails its defining property");
    return CoequalizerData{object, std::move(arrow), std::move(section), f, g};
}

LinMap factor_through_equalizer(const EqualizerData& eq, const LinMap& t) {
    if (t.cod() != eq.f.dom())
        throw SignatureMismatchError("factor_through_equalizer", eq.f.dom().str(), t.cod().str());
    LinMap ft = compose(eq.f, t);
    LinMap gt = compose(eq.g, t);
    if (auto d = first_difference(ft, gt)) throw DoesNotEqualizeError(d->col);
    // coordinates in the kernel basis are read off the free coordinates
    std::vector<std::pair<std::pair<std::uint32_t, std::uint32_t>, Scalar>> triples;
    const std::uint64_t r = eq.object.dim();
    if (eq.reader_coords.size() != r)
        throw FactorizationFailureError("equalizer data lacks reader coordinates");
    std::vector<std::uint32_t> reader_pos(eq.f.dom().dim(), UINT32_MAX);
    for (std::uint32_t k = 0; k < r; ++k) reader_pos[eq.reader_coords[k]] = k;
    t.for_each([&](std::uint32_t row, std::uint32_t col, const Scalar& v) {
        if (reader_pos[row] != UINT32_MAX) triples.push_back({{reader_pos[row], col}, v});
    });
    LinMap u = LinMap::from_triples(t.field(), t.dom(), eq.object, std::move(triples));
    if (!(compose(eq.arrow, u) == t))
        throw FactorizationFailureError("equalizer factorization does not re-substitute");
    return u;
}

LinMap factor_through_coequalizer(const CoequalizerData& cq, const LinMap& t) {
    if (t.dom() != cq.f.cod())
        throw SignatureMismatchError("factor_through_coequalizer", cq.f.cod().str(), t.dom().str());
    LinMap tf = compose(t, cq.f);
    LinMap tg = compose(t, cq.g);
    if (auto d = first_difference(tf, tg)) throw DoesNotCoequalizeError(d->col);
    LinMap u = compose(t, cq.section);
    if (!(compose(u, cq.arrow) == t))
        throw FactorizationFailureError("coequalizer factorization does not re-substitute");
    return u;
}

LinMap invert(const LinMap& f) {
    const std::uint64_t n = f.dom().dim();
    if (f.cod().dim() != n)
        throw SignatureMismatchError("invert", f.dom().str() + " (square)", f.cod().str());
    // Gauss-Jordan on rows of [f | id]
    std::vector<SparseVec> left = row_vectors(f);
    std::vector<SparseVec> right(n);
    const Scalar one = Scalar::one(f.field());
    for (std::uint64_t i = 0; i < n; ++i) right[i] = {{static_cast<std::uint32_t>(i), one}};
    std::vector<bool> used(n, false);
    std::vector<std::uint32_t> pivot_row_of_col(n, UINT32_MAX);
    std::uint64_t found = 0;
    for (std::uint64_t c = 0; c < n; ++c) {
        std::uint32_t pr = UINT32_MAX;
        for (std::uint64_t r = 0; r < n; ++r) {
            if (used[r]) continue;
            const auto& row = left[r];
            auto it = std::lower_bound(row.begin(), row.end(), static_cast<std::uint32_t>(c),
                                       [](const auto& p, std::uint32_t cc) { return p.first < cc; });
            if (it != row.end() && it->first == c) {
                pr = static_cast<std::uint32_t>(r);
                break;
            }
        }
        if (pr == UINT32_MAX) continue;
        used[pr] = true;
        pivot_row_of_col[c] = pr;
        ++found;
        auto it = std::lower_bound(left[pr].begin(), left[pr].end(), static_cast<std::uint32_t>(c),
                                   [](const auto& p, std::uint32_t cc) { return p.first < cc; });
        Scalar inv = it->second.inverse();
        if (!it->second.is_one()) {
            for (auto& [idx, v] : left[pr]) v = v * inv;
            for (auto& [idx, v] : right[pr]) v = v * inv;
        }
        for (std::uint64_t r = 0; r < n; ++r) {
            if (r == pr) continue;
            auto rit = std::lower_bound(left[r].begin(), left[r].end(), static_cast<std::uint32_t>(c),
                                        [](const auto& p, std::uint32_t cc) { return p.first < cc; });
            if (rit == left[r].end() || rit->first != c) continue;
            Scalar coef = -rit->second;
            left[r] = axpy(left[r], coef, left[pr]);
            right[r] = axpy(right[r], coef, right[pr]);
        }
    }
    if (found != n) throw NotInvertibleError(found, n);
    std::vector<std::pair<std::pair<std::uint32_t, std::uint32_t>, Scalar>> triples;
    for (std::uint64_t c = 0; c < n; ++c)
        for (const auto& [idx, v] : right[pivot_row_of_col[c]])
            triples.push_back({{static_cast<std::uint32_t>(c), idx}, v});
    return LinMap::from_triples(f.field(), f.cod(), f.dom(), std::move(triples));
}

} // namespace whq
