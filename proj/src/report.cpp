#include <whq/report.hpp>

namespace whq {

namespace {

std::string index_str(const std::vector<std::uint32_t>& idx) {
    if (idx.empty()) return "()";
    std::string s = "(";
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(idx[k]);
    }
    return s + ")";
}

} // namespace

void Report::print(std::ostream& os) const {
    if (!title_.empty()) os << "== " << title_ << " ==\n";
    for (const auto& c : checks_) {
        os << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (!c.note.empty()) os << "  [" << c.note << "]";
        if (c.witness) {
            os << "  at dom" << index_str(c.witness->dom_index) << " cod"
               << index_str(c.witness->cod_index) << ": lhs=" << c.witness->lhs
               << ", rhs=" << c.witness->rhs;
        }
        os << "\n";
    }
}

nlohmann::ordered_json Report::to_json() const {
    nlohmann::ordered_json j;
    j["title"] = title_;
    j["all_pass"] = all_pass();
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : checks_) {
        nlohmann::ordered_json e;
        e["name"] = c.name;
        e["status"] = c.pass ? "pass" : "fail";
        if (!c.note.empty()) e["note"] = c.note;
        if (c.witness) {
            e["witness"] = {{"dom_index", c.witness->dom_index},
                            {"cod_index", c.witness->cod_index},
                            {"lhs", c.witness->lhs},
                            {"rhs", c.witness->rhs}};
        }
        arr.push_back(std::move(e));
    }
    j["checks"] = std::move(arr);
    return j;
}

CheckResult compare_maps(const std::string& name, const LinMap& lhs, const LinMap& rhs) {
    CheckResult r;
    r.name = name;
    auto d = first_difference(lhs, rhs);
    r.pass = !d.has_value();
    if (d) {
        Counterexample w;
        w.dom_index = lhs.dom().unflatten(d->col);
        w.cod_index = lhs.cod().unflatten(d->row);
        w.lhs = d->lhs.str();
        w.rhs = d->rhs.str();
        r.witness = std::move(w);
    }
    return r;
}

} // namespace whq
