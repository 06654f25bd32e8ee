#include <whq/kernels.hpp>

#include <algorithm>
#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace whq::kernels {

namespace {

std::atomic<Exec> g_exec{Exec::serial};

void sort_combine(SparseCol& col) {
    std::sort(col.begin(), col.end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < col.size();) {
        std::uint32_t row = col[i].row;
        Scalar acc = std::move(col[i].val);
        for (++i; i < col.size() && col[i].row == row; ++i) acc += col[i].val;
        if (!acc.is_zero()) col[out++] = Entry{row, std::move(acc)};
    }
    col.resize(out);
}

SparseCol compose_column(const LinMap& f, const SparseCol& gcol) {
    SparseCol out;
    for (const Entry& e : gcol) {
        const SparseCol* fcol = f.column(e.row);
        if (!fcol) continue;
        for (const Entry& fe : *fcol) out.push_back(Entry{fe.row, e.val * fe.val});
    }
    sort_combine(out);
    return out;
}

} // namespace

Exec default_exec() { return g_exec.load(); }
void set_default_exec(Exec e) { g_exec.store(e); }

LinMap compose(const LinMap& f, const LinMap& g, Exec exec) {
    if (f.field() != g.field()) throw FieldMismatchError(f.field().str(), g.field().str());
    if (f.dom() != g.cod())
        throw SignatureMismatchError("compose", f.dom().str(), g.cod().str());
    LinMap result(f.field(), g.dom(), f.cod());
    const auto& gcols = g.columns();
    std::vector<SparseCol> out(gcols.size());
#ifdef _OPENMP
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 64)
        for (std::int64_t k = 0; k < static_cast<std::int64_t>(gcols.size()); ++k)
            out[k] = compose_column(f, gcols[k].second);
    } else
#endif
    {
        (void)exec;
        for (std::size_t k = 0; k < gcols.size(); ++k) out[k] = compose_column(f, gcols[k].second);
    }
    auto& rcols = result.mutable_columns();
    for (std::size_t k = 0; k < gcols.size(); ++k)
        if (!out[k].empty()) rcols.push_back({gcols[k].first, std::move(out[k])});
    return result;
}

LinMap tensor(const LinMap& a, const LinMap& b, Exec exec) {
    if (a.field() != b.field()) throw FieldMismatchError(a.field().str(), b.field().str());
    LinMap result(a.field(), a.dom().tensor(b.dom()), a.cod().tensor(b.cod()));
    const std::uint64_t bdom = b.dom().dim();
    const std::uint64_t bcod = b.cod().dim();
    const auto& acols = a.columns();
    const auto& bcols = b.columns();
    using ColRun = std::vector<std::pair<std::uint32_t, SparseCol>>;
    std::vector<ColRun> runs(acols.size());
    auto fill_run = [&](std::size_t k) {
        const auto& [ja, acol] = acols[k];
        ColRun run;
        run.reserve(bcols.size());
        for (const auto& [jb, bcol] : bcols) {
            SparseCol entries;
            entries.reserve(acol.size() * bcol.size());
            for (const Entry& ea : acol)
                for (const Entry& eb : bcol)
                    entries.push_back(
                        Entry{static_cast<std::uint32_t>(ea.row * bcod + eb.row), ea.val * eb.val});
            if (!entries.empty())
                run.push_back({static_cast<std::uint32_t>(ja * bdom + jb), std::move(entries)});
        }
        runs[k] = std::move(run);
    };
#ifdef _OPENMP
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
        for (std::int64_t k = 0; k < static_cast<std::int64_t>(acols.size()); ++k) fill_run(k);
    } else
#endif
    {
        (void)exec;
        for (std::size_t k = 0; k < acols.size(); ++k) fill_run(k);
    }
    auto& rcols = result.mutable_columns();
    for (auto& run : runs)
        for (auto& col : run) rcols.push_back(std::move(col));
    return result;
}

SpaceSig Stage::dom() const {
    SpaceSig s;
    for (const auto& f : factors) s = s.tensor(f.dom());
    return s;
}

SpaceSig Stage::cod() const {
    SpaceSig s;
    for (const auto& f : factors) s = s.tensor(f.cod());
    return s;
}

namespace {

// Applies the tensor product of the stage factors to a sparse vector without
// materializing the product map.
SparseCol apply_stage(const Stage& stage, const SparseCol& vec) {
    const std::size_t n = stage.factors.size();
    std::vector<std::uint64_t> domdim(n), coddim(n);
    for (std::size_t k = 0; k < n; ++k) {
        domdim[k] = stage.factors[k].dom().dim();
        coddim[k] = stage.factors[k].cod().dim();
    }
    SparseCol out;
    std::vector<const SparseCol*> cols(n);
    std::vector<std::uint32_t> sub(n);
    for (const Entry& e : vec) {
        std::uint64_t idx = e.row;
        for (std::size_t k = n; k-- > 0;) {
            sub[k] = static_cast<std::uint32_t>(idx % domdim[k]);
            idx /= domdim[k];
        }
        bool dead = false;
        for (std::size_t k = 0; k < n; ++k) {
            cols[k] = stage.factors[k].column(sub[k]);
            if (!cols[k]) {
                dead = true;
                break;
            }
        }
        if (dead) continue;
        // odometer over the factor entry lists
        auto emit = [&](auto&& self, std::size_t k, std::uint64_t row_acc, const Scalar& val_acc) -> void {
            if (k == n) {
                out.push_back(Entry{static_cast<std::uint32_t>(row_acc), val_acc});
                return;
            }
            for (const Entry& fe : *cols[k]) self(self, k + 1, row_acc * coddim[k] + fe.row, val_acc * fe.val);
        };
        emit(emit, 0, 0, e.val);
    }
    sort_combine(out);
    return out;
}

} // namespace

LinMap eval_pipeline(const std::vector<Stage>& stages, Exec exec) {
    if (stages.empty()) throw Error("empty pipeline");
    FieldSpec field = FieldSpec::rationals();
    bool have_field = false;
    for (const auto& st : stages)
        for (const auto& f : st.factors) {
            if (have_field && f.field() != field) throw FieldMismatchError(field.str(), f.field().str());
            field = f.field();
            have_field = true;
        }
    const SpaceSig dom = stages.front().dom();
    SpaceSig cur = dom;
    for (std::size_t k = 0; k < stages.size(); ++k) {
        if (stages[k].dom() != cur)
            throw SignatureMismatchError("pipeline stage " + std::to_string(k), cur.str(),
                                         stages[k].dom().str());
        cur = stages[k].cod();
    }
    LinMap result(field, dom, cur);
    const std::uint64_t ncols = dom.dim();
    const Scalar one = Scalar::one(field);
    auto& rcols = result.mutable_columns();
    constexpr std::uint64_t kBlock = 4096;
    std::vector<SparseCol> block(std::min<std::uint64_t>(kBlock, ncols));
    for (std::uint64_t base = 0; base < ncols; base += kBlock) {
        const std::uint64_t count = std::min(kBlock, ncols - base);
        auto eval_col = [&](std::uint64_t off) {
            SparseCol v{Entry{static_cast<std::uint32_t>(base + off), one}};
            for (const auto& st : stages) v = apply_stage(st, v);
            block[off] = std::move(v);
        };
#ifdef _OPENMP
        if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 64)
            for (std::int64_t off = 0; off < static_cast<std::int64_t>(count); ++off)
                eval_col(static_cast<std::uint64_t>(off));
        } else
#endif
        {
            (void)exec;
            for (std::uint64_t off = 0; off < count; ++off) eval_col(off);
        }
        for (std::uint64_t off = 0; off < count; ++off)
            if (!block[off].empty())
                rcols.push_back({static_cast<std::uint32_t>(base + off), std::move(block[off])});
    }
    return result;
}

} // namespace whq::kernels

namespace whq {

LinMap chain(std::vector<kernels::Stage> stages_classical) {
    std::reverse(stages_classical.begin(), stages_classical.end());
    return kernels::eval_pipeline(stages_classical, kernels::default_exec());
}

} // namespace whq
