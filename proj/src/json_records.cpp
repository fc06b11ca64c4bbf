#include "indel/json_records.hpp"

namespace indel {

namespace {

Json params_record(const CodeParams& p, const std::optional<ListParams>& lp) {
    Json out{{"q", p.q}, {"n", p.n}, {"d", p.d}};
    if (lp) {
        out["s"] = lp->s;
        out["t"] = lp->t;
    }
    return out;
}

void put_rational(Json& out, const BigRat& value) {
    const BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    out["value_num"] = num.str();
    out["value_den"] = den.str();
    out["value"] = num.str() + "/" + den.str();
    out["value_decimal"] = static_cast<double>(value);
}

} // namespace

Json bound_record(const BoundValue& bv, const CodeParams& p,
                  std::optional<ListParams> lp) {
    Json out;
    out["bound"] = bv.source;
    out["applicable"] = bv.applicable;
    if (bv.applicable) {
        put_rational(out, *bv.value);
        out["exactness"] = to_string(bv.exactness);
    }
    out["params"] = params_record(p, lp);
    return out;
}

Json cw_answer_record(const CWAnswer& a) {
    Json out;
    out["query"] = Json{{"n", a.query.n}, {"d", a.query.d}, {"w", a.query.w}};
    out["value"] = a.value.str();
    out["exactness"] = to_string(a.exactness);
    out["method"] = to_string(a.method);
    if (a.witness) out["witness"] = family_to_text(*a.witness);
    return out;
}

Json oracle_record(const OracleResult& r, const CodeParams& p,
                   std::optional<std::uint64_t> seed) {
    Json out;
    out["bound"] = "oracle_exact";
    out["applicable"] = true;
    out["value_num"] = r.value.str();
    out["value_den"] = "1";
    out["value"] = r.value.str() + "/1";
    out["value_decimal"] = static_cast<double>(r.value);
    out["exactness"] = "exact";
    out["params"] = params_record(p, std::nullopt);
    out["search_space"] = r.search_space.str();
    out["nodes"] = r.nodes;
    out["elapsed_seconds"] = r.elapsed_seconds;
    if (seed) out["seed"] = *seed;
    out["witness"] = code_to_text(r.witness);
    return out;
}

Json tightness_record(const TightnessInstance& inst) {
    Json out;
    out["params"] = params_record(inst.params, inst.list_params);
    out["center"] = to_line(inst.center);
    out["code"] = code_to_text(inst.code);
    out["witness_family"] = family_to_text(inst.witness_family);
    Json markers = Json::array();
    const auto lists = inst.witness_family.index_lists();
    for (std::size_t k = 0; k < inst.marker_symbols.size(); ++k) {
        Json entry;
        std::string support;
        for (std::size_t i = 0; i < lists[k].size(); ++i) {
            if (i) support += ' ';
            support += std::to_string(lists[k][i]);
        }
        entry["support"] = support;
        entry["marker"] = inst.marker_symbols[k];
        markers.push_back(std::move(entry));
    }
    out["markers"] = std::move(markers);
    return out;
}

Json report_record(const VerificationReport& report) {
    Json checks = Json::array();
    for (const CheckResult& c : report.checks)
        checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return Json{{"checks", std::move(checks)}, {"all_passed", report.all_passed()}};
}

} // namespace indel
