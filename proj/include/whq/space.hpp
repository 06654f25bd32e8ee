#pragma once

// Typed tensor signatures. A signature is an ordered list of named factors;
// the empty list is the monoidal unit K. Strictness is realized by always
// flattening factor lists — there is no bracketing anywhere.

#include <whq/errors.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace whq {

struct SpaceFactor {
    std::string name;
    std::uint32_t dim = 0;
    bool operator==(const SpaceFactor&) const = default;
};

class SpaceSig {
public:
    SpaceSig() = default; // K
    SpaceSig(std::string name, std::uint32_t dim) { factors_.push_back({std::move(name), dim}); }
    explicit SpaceSig(std::vector<SpaceFactor> factors) : factors_(std::move(factors)) {}

    static SpaceSig unit() { return SpaceSig(); }

    bool is_unit() const { return factors_.empty(); }
    std::size_t arity() const { return factors_.size(); }
    const std::vector<SpaceFactor>& factors() const { return factors_; }

    std::uint64_t dim() const {
        std::uint64_t d = 1;
        for (const auto& f : factors_) d *= f.dim;
        return d;
    }

    SpaceSig tensor(const SpaceSig& o) const {
        SpaceSig s = *this;
        s.factors_.insert(s.factors_.end(), o.factors_.begin(), o.factors_.end());
        return s;
    }

    // Composite indices enumerate tensor basis vectors in row-major order
    // over the factor sequence: the first factor is most significant.
    std::vector<std::uint32_t> unflatten(std::uint64_t idx) const {
        std::vector<std::uint32_t> out(factors_.size());
        for (std::size_t k = factors_.size(); k-- > 0;) {
            out[k] = static_cast<std::uint32_t>(idx % factors_[k].dim);
            idx /= factors_[k].dim;
        }
        return out;
    }

    std::uint64_t flatten(std::span<const std::uint32_t> multi) const {
        if (multi.size() != factors_.size()) throw Error("multi-index arity mismatch");
        std::uint64_t idx = 0;
        for (std::size_t k = 0; k < factors_.size(); ++k) {
            if (multi[k] >= factors_[k].dim) throw Error("multi-index out of range");
            idx = idx * factors_[k].dim + multi[k];
        }
        return idx;
    }

    std::string str() const {
        if (factors_.empty()) return "K";
        std::string s;
        for (std::size_t k = 0; k < factors_.size(); ++k) {
            if (k) s += "(x)";
            s += factors_[k].name;
        }
        return s;
    }

    bool operator==(const SpaceSig&) const = default;

private:
    std::vector<SpaceFactor> factors_;
};

inline SpaceSig tensor(const SpaceSig& a, const SpaceSig& b) { return a.tensor(b); }

} // namespace whq
