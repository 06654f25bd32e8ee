#include <whq/kernels.hpp>
#include <whq/linmap.hpp>

#include <algorithm>

namespace whq {

LinMap LinMap::identity(const FieldSpec& f, const SpaceSig& s) {
    LinMap m(f, s, s);
    const std::uint64_t n = s.dim();
    m.cols_.reserve(n);
    const Scalar one = Scalar::one(f);
    for (std::uint64_t i = 0; i < n; ++i)
        m.cols_.push_back({static_cast<std::uint32_t>(i), {Entry{static_cast<std::uint32_t>(i), one}}});
    return m;
}

LinMap LinMap::scalar(const Scalar& v) {
    LinMap m(v.field(), SpaceSig::unit(), SpaceSig::unit());
    if (!v.is_zero()) m.cols_.push_back({0u, {Entry{0u, v}}});
    return m;
}

std::uint64_t LinMap::nnz() const {
    std::uint64_t n = 0;
    for (const auto& [c, entries] : cols_) n += entries.size();
    return n;
}

const SparseCol* LinMap::column(std::uint32_t col) const {
    auto it = std::lower_bound(cols_.begin(), cols_.end(), col,
                               [](const auto& p, std::uint32_t c) { return p.first < c; });
    if (it == cols_.end() || it->first != col) return nullptr;
    return &it->second;
}

Scalar LinMap::entry(std::uint32_t row, std::uint32_t col) const {
    const SparseCol* c = column(col);
    if (!c) return Scalar::zero(field_);
    auto it = std::lower_bound(c->begin(), c->end(), row,
                               [](const Entry& e, std::uint32_t r) { return e.row < r; });
    if (it == c->end() || it->row != row) return Scalar::zero(field_);
    return it->val;
}

void LinMap::set_entry(std::uint32_t row, std::uint32_t col, Scalar v) {
    if (col >= dom_.dim() || row >= cod_.dim()) throw Error("entry index out of range");
    auto it = std::lower_bound(cols_.begin(), cols_.end(), col,
                               [](const auto& p, std::uint32_t c) { return p.first < c; });
    if (it == cols_.end() || it->first != col) {
        if (v.is_zero()) return;
        it = cols_.insert(it, {col, SparseCol{}});
    }
    auto& entries = it->second;
    auto eit = std::lower_bound(entries.begin(), entries.end(), row,
                                [](const Entry& e, std::uint32_t r) { return e.row < r; });
    if (eit != entries.end() && eit->row == row) {
        if (v.is_zero())
            entries.erase(eit);
        else
            eit->val = std::move(v);
    } else if (!v.is_zero()) {
        entries.insert(eit, Entry{row, std::move(v)});
    }
    if (entries.empty()) cols_.erase(it);
}

LinMap LinMap::from_triples(
    const FieldSpec& f, const SpaceSig& dom, const SpaceSig& cod,
    std::vector<std::pair<std::pair<std::uint32_t, std::uint32_t>, Scalar>> triples) {
    // triples keyed (row, col)
    std::sort(triples.begin(), triples.end(), [](const auto& a, const auto& b) {
        return a.first.second != b.first.second ? a.first.second < b.first.second
                                                : a.first.first < b.first.first;
    });
    LinMap m(f, dom, cod);
    for (auto& [rc, v] : triples) {
        auto [row, col] = rc;
        if (col >= dom.dim() || row >= cod.dim()) throw Error("entry index out of range");
        if (!m.cols_.empty() && m.cols_.back().first == col && !m.cols_.back().second.empty() &&
            m.cols_.back().second.back().row == row) {
            m.cols_.back().second.back().val += v;
        } else {
            if (m.cols_.empty() || m.cols_.back().first != col) m.cols_.push_back({col, {}});
            m.cols_.back().second.push_back(Entry{row, std::move(v)});
        }
    }
    // drop zeros created by cancellation
    for (auto& [c, entries] : m.cols_) {
        entries.erase(std::remove_if(entries.begin(), entries.end(),
                                     [](const Entry& e) { return e.val.is_zero(); }),
                      entries.end());
    }
    m.cols_.erase(std::remove_if(m.cols_.begin(), m.cols_.end(),
                                 [](const auto& p) { return p.second.empty(); }),
                  m.cols_.end());
    return m;
}

bool LinMap::operator==(const LinMap& o) const {
    if (field_ != o.field_ || dom_ != o.dom_ || cod_ != o.cod_) return false;
    if (cols_.size() != o.cols_.size()) return false;
    for (std::size_t k = 0; k < cols_.size(); ++k) {
        if (cols_[k].first != o.cols_[k].first) return false;
        const auto& a = cols_[k].second;
        const auto& b = o.cols_[k].second;
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i].row != b[i].row || a[i].val != b[i].val) return false;
    }
    return true;
}

LinMap compose(const LinMap& f, const LinMap& g) {
    return kernels::compose(f, g, kernels::default_exec());
}

LinMap tensor(const LinMap& a, const LinMap& b) {
    return kernels::tensor(a, b, kernels::default_exec());
}

LinMap swap_map(const FieldSpec& f, const SpaceSig& m, const SpaceSig& n) {
    LinMap s(f, m.tensor(n), n.tensor(m));
    const std::uint64_t dm = m.dim(), dn = n.dim();
    const Scalar one = Scalar::one(f);
    auto& cols = s.mutable_columns();
    cols.reserve(dm * dn);
    for (std::uint64_t i = 0; i < dm; ++i)
        for (std::uint64_t j = 0; j < dn; ++j)
            cols.push_back({static_cast<std::uint32_t>(i * dn + j),
                            {Entry{static_cast<std::uint32_t>(j * dm + i), one}}});
    return s;
}

LinMap lincomb(const std::vector<std::pair<Scalar, LinMap>>& terms) {
    if (terms.empty()) throw Error("lincomb requires at least one term");
    const LinMap& first = terms.front().second;
    for (const auto& [c, m] : terms) {
        if (m.dom() != first.dom() || m.cod() != first.cod())
            throw SignatureMismatchError("lincomb", first.dom().str() + " -> " + first.cod().str(),
                                         m.dom().str() + " -> " + m.cod().str());
        if (m.field() != first.field() || c.field() != first.field())
            throw FieldMismatchError(first.field().str(), m.field().str());
    }
    std::vector<std::pair<std::pair<std::uint32_t, std::uint32_t>, Scalar>> triples;
    for (const auto& [c, m] : terms) {
        if (c.is_zero()) continue;
        m.for_each([&](std::uint32_t row, std::uint32_t col, const Scalar& v) {
            triples.push_back({{row, col}, c * v});
        });
    }
    return LinMap::from_triples(first.field(), first.dom(), first.cod(), std::move(triples));
}

LinMap add(const LinMap& a, const LinMap& b) {
    return lincomb({{Scalar::one(a.field()), a}, {Scalar::one(a.field()), b}});
}

LinMap sub(const LinMap& a, const LinMap& b) {
    return lincomb({{Scalar::one(a.field()), a}, {-Scalar::one(a.field()), b}});
}

LinMap scale(const Scalar& c, const LinMap& m) { return lincomb({{c, m}}); }

bool equals(const LinMap& a, const LinMap& b) {
    if (a.dom() != b.dom() || a.cod() != b.cod())
        throw SignatureMismatchError("equals", a.dom().str() + " -> " + a.cod().str(),
                                     b.dom().str() + " -> " + b.cod().str());
    return a == b;
}

LinMap with_signature(const LinMap& m, const SpaceSig& dom, const SpaceSig& cod) {
    if (m.dom().dim() != dom.dim() || m.cod().dim() != cod.dim())
        throw SignatureMismatchError("with_signature", dom.str() + " -> " + cod.str(),
                                     m.dom().str() + " -> " + m.cod().str());
    LinMap out(m.field(), dom, cod);
    out.mutable_columns() = m.columns();
    return out;
}

std::optional<EntryDiff> first_difference(const LinMap& a, const LinMap& b) {
    if (a.dom() != b.dom() || a.cod() != b.cod())
        throw SignatureMismatchError("first_difference", a.dom().str() + " -> " + a.cod().str(),
                                     b.dom().str() + " -> " + b.cod().str());
    const Scalar zero = Scalar::zero(a.field());
    const auto& ca = a.columns();
    const auto& cb = b.columns();
    std::size_t ia = 0, ib = 0;
    auto diff_in_col = [&](const SparseCol* ea, const SparseCol* eb,
                           std::uint32_t col) -> std::optional<EntryDiff> {
        static const SparseCol empty;
        const SparseCol& va = ea ? *ea : empty;
        const SparseCol& vb = eb ? *eb : empty;
        std::size_t i = 0, j = 0;
        while (i < va.size() || j < vb.size()) {
            if (j >= vb.size() || (i < va.size() && va[i].row < vb[j].row))
                return EntryDiff{va[i].row, col, va[i].val, zero};
            if (i >= va.size() || vb[j].row < va[i].row)
                return EntryDiff{vb[j].row, col, zero, vb[j].val};
            if (!(va[i].val == vb[j].val)) return EntryDiff{va[i].row, col, va[i].val, vb[j].val};
            ++i;
            ++j;
        }
        return std::nullopt;
    };
    while (ia < ca.size() || ib < cb.size()) {
        std::uint32_t col;
        const SparseCol* ea = nullptr;
        const SparseCol* eb = nullptr;
        if (ib >= cb.size() || (ia < ca.size() && ca[ia].first < cb[ib].first)) {
            col = ca[ia].first;
            ea = &ca[ia].second;
            ++ia;
        } else if (ia >= ca.size() || cb[ib].first < ca[ia].first) {
            col = cb[ib].first;
            eb = &cb[ib].second;
            ++ib;
        } else {
            col = ca[ia].first;
            ea = &ca[ia].second;
            eb = &cb[ib].second;
            ++ia;
            ++ib;
        }
        if (auto d = diff_in_col(ea, eb, col)) return d;
    }
    return std::nullopt;
}

} // namespace whq
