#pragma once

// Sparse linear maps between tensor products of named spaces.
// Storage is column-compressed: only nonempty columns are kept, each as a
// row-sorted entry list with no explicit zeros. All operations are exact.

#include <whq/scalar.hpp>
#include <whq/space.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace whq {

struct Entry {
    std::uint32_t row = 0;
    Scalar val;
};

using SparseCol = std::vector<Entry>; // sorted by row, no zeros

class LinMap {
public:
    LinMap() = default;
    LinMap(FieldSpec field, SpaceSig dom, SpaceSig cod)
        : field_(std::move(field)), dom_(std::move(dom)), cod_(std::move(cod)) {}

    static LinMap zero(const FieldSpec& f, const SpaceSig& dom, const SpaceSig& cod) {
        return LinMap(f, dom, cod);
    }
    static LinMap identity(const FieldSpec& f, const SpaceSig& s);
    static LinMap scalar(const Scalar& v); // K -> K

    const FieldSpec& field() const { return field_; }
    const SpaceSig& dom() const { return dom_; }
    const SpaceSig& cod() const { return cod_; }

    std::uint64_t nnz() const;
    bool is_zero() const { return cols_.empty(); }

    // nullptr when the column is empty
    const SparseCol* column(std::uint32_t col) const;
    Scalar entry(std::uint32_t row, std::uint32_t col) const;

    void set_entry(std::uint32_t row, std::uint32_t col, Scalar v);
    // entries must be grouped however; they get sorted and combined
    static LinMap from_triples(const FieldSpec& f, const SpaceSig& dom, const SpaceSig& cod,
                               std::vector<std::pair<std::pair<std::uint32_t, std::uint32_t>, Scalar>> triples);

    const std::vector<std::pair<std::uint32_t, SparseCol>>& columns() const { return cols_; }
    std::vector<std::pair<std::uint32_t, SparseCol>>& mutable_columns() { return cols_; }

    void for_each(const std::function<void(std::uint32_t row, std::uint32_t col, const Scalar&)>& fn) const {
        for (const auto& [c, entries] : cols_)
            for (const auto& e : entries) fn(e.row, c, e.val);
    }

    bool operator==(const LinMap& o) const;

private:
    FieldSpec field_ = FieldSpec::rationals();
    SpaceSig dom_, cod_;
    std::vector<std::pair<std::uint32_t, SparseCol>> cols_; // sorted by column index
};

// f o g (apply g first). Throws SignatureMismatchError unless dom(f) == cod(g).
LinMap compose(const LinMap& f, const LinMap& g);

template <typename... Rest>
LinMap compose(const LinMap& f, const LinMap& g, const Rest&... rest) {
    return compose(compose(f, g), rest...);
}

// Kronecker product with the row-major index convention; dom = dom(a) ++ dom(b).
LinMap tensor(const LinMap& a, const LinMap& b);

template <typename... Rest>
LinMap tensor(const LinMap& a, const LinMap& b, const Rest&... rest) {
    return tensor(tensor(a, b), rest...);
}

// Symmetry c_{M,N}: M (x) N -> N (x) M, e_i (x) e_j -> e_j (x) e_i.
LinMap swap_map(const FieldSpec& f, const SpaceSig& m, const SpaceSig& n);

LinMap add(const LinMap& a, const LinMap& b);
LinMap sub(const LinMap& a, const LinMap& b);
LinMap scale(const Scalar& c, const LinMap& m);
LinMap lincomb(const std::vector<std::pair<Scalar, LinMap>>& terms);

bool equals(const LinMap& a, const LinMap& b);

struct EntryDiff {
    std::uint32_t row = 0, col = 0;
    Scalar lhs, rhs;
};

// First differing entry in (column, row) lexicographic order; signatures must match.
std::optional<EntryDiff> first_difference(const LinMap& a, const LinMap& b);

// Same entries under new signatures; total dimensions must agree.
LinMap with_signature(const LinMap& m, const SpaceSig& dom, const SpaceSig& cod);

} // namespace whq
