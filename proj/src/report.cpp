#include "subord/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace subord {

json series_to_json(const Series& s) {
    json arr = json::array();
    for (const cplx& c : s.coefficients()) arr.push_back({c.real(), c.imag()});
    return arr;
}

Series series_from_json(const json& j) {
    std::vector<cplx> coeffs;
    coeffs.reserve(j.size());
    for (const auto& pair : j) coeffs.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
    return Series(std::move(coeffs));
}

json map_to_json(const CanonicalMap& q) {
    json j;
    switch (q.kind()) {
        case MapKind::Disk:
            j["kind"] = "disk";
            j["M"] = q.M();
            j["a"] = {q.a().real(), q.a().imag()};
            break;
        case MapKind::HalfPlane:
            j["kind"] = "halfplane";
            j["alpha"] = q.alpha();
            j["a"] = {q.a().real(), q.a().imag()};
            break;
        case MapKind::Affine:
            j["kind"] = "affine";
            j["a0"] = {q.a().real(), q.a().imag()};
            j["a1"] = {q.a1().real(), q.a1().imag()};
            break;
    }
    if (q.rho() < 1.0) j["rho"] = q.rho();
    return j;
}

CanonicalMap map_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    CanonicalMap q = CanonicalMap::affine(cplx(0.0), cplx(1.0));
    auto get_c = [&](const char* key) {
        return cplx(j.at(key).at(0).get<double>(), j.at(key).at(1).get<double>());
    };
    if (kind == "disk")
        q = CanonicalMap::disk(j.at("M").get<double>(), get_c("a"));
    else if (kind == "halfplane")
        q = CanonicalMap::halfplane(j.at("alpha").get<double>(), get_c("a"));
    else if (kind == "affine")
        q = CanonicalMap::affine(get_c("a0"), get_c("a1"));
    else
        throw std::invalid_argument("map_from_json: unknown kind " + kind);
    if (j.contains("rho")) q = q.dilate(j.at("rho").get<double>());
    return q;
}

namespace {
json cplx_json(cplx v) { return {v.real(), v.imag()}; }
}  // namespace

json verdict_to_json(const AdmissibilityVerdict& v) {
    json j;
    switch (v.status) {
        case AdmissibleStatus::AdmissibleExact: j["status"] = "AdmissibleExact"; break;
        case AdmissibleStatus::AdmissibleNumeric: j["status"] = "AdmissibleNumeric"; break;
        case AdmissibleStatus::Violation: j["status"] = "Violation"; break;
        case AdmissibleStatus::Inconclusive: j["status"] = "Inconclusive"; break;
    }
    j["margin"] = v.margin;
    j["exact_reduction"] = v.exact_reduction;
    j["worst"] = {{"theta", v.worst.theta},
                  {"m", v.worst.m},
                  {"r0", cplx_json(v.worst.r0)},
                  {"s0", cplx_json(v.worst.s0)},
                  {"t0", cplx_json(v.worst.t0)}};
    j["psi_value"] = cplx_json(v.psi_value);
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

json contact_to_json(const ContactReport& r) {
    json j;
    j["z0"] = cplx_json(r.z0);
    j["zeta0"] = cplx_json(r.zeta0);
    j["m"] = r.m;
    j["im_m"] = r.im_m;
    j["m_lower"] = r.m_lower;
    j["curvature_lhs"] = r.curvature_lhs;
    j["curvature_rhs"] = r.curvature_rhs;
    j["pass"] = r.pass;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

json falsification_to_json(const FalsificationReport& r) {
    json j;
    j["samples_run"] = r.samples_run;
    j["hypothesis_holds_count"] = r.hypothesis_holds_count;
    j["domain_discards"] = r.domain_discards;
    j["vacuous"] = r.vacuous();
    j["admissibility_checked"] = r.admissibility_checked;
    j["exploratory"] = r.exploratory;
    j["seed"] = r.seed;
    j["grid"] = {{"radii", r.grid.radii}, {"angles", r.grid.angles}};
    json cexs = json::array();
    for (const Counterexample& c : r.counterexamples) {
        cexs.push_back({{"sample_index", c.sample_index},
                        {"witness_z", cplx_json(c.witness_z)},
                        {"hypothesis_margin", c.hypothesis_margin},
                        {"conclusion_margin", c.conclusion_margin},
                        {"series", series_to_json(c.p)}});
    }
    j["counterexamples"] = cexs;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

json order_to_json(const OrderResult& r) {
    return {{"a2_mag", r.a2_mag},
            {"alpha", r.alpha},
            {"bracket", {r.bracket_lo, r.bracket_hi}},
            {"iterations", r.iterations},
            {"residual", r.residual}};
}

json order_verification_to_json(const OrderVerification& r) {
    return {{"pass", r.pass},
            {"alpha", r.alpha},
            {"functional_inf", r.functional_inf},
            {"worst_z", cplx_json(r.worst_z)},
            {"a2_mag", r.a2_mag},
            {"note", r.note}};
}

ReportDoc::ReportDoc(const std::string& command, json config_echo) {
    doc_["tool"] = "subord";
    doc_["command"] = command;
    doc_["config"] = std::move(config_echo);
    doc_["rows"] = json::array();
}

void ReportDoc::add_row(json row) {
    if (row.contains("pass") && row["pass"].is_boolean() && !row["pass"].get<bool>())
        ++fail_count_;
    doc_["rows"].push_back(std::move(row));
}

void ReportDoc::add_check(const std::string& name, double computed, double expected, double tol) {
    const double diff = std::abs(computed - expected);
    add_row({{"name", name},
             {"computed", computed},
             {"expected", expected},
             {"abs_diff", diff},
             {"tol", tol},
             {"pass", diff <= tol}});
}

void ReportDoc::add_check(const std::string& name, bool pass, json detail) {
    json row = {{"name", name}, {"pass", pass}};
    if (!detail.is_null() && !detail.empty()) row["detail"] = std::move(detail);
    add_row(std::move(row));
}

json ReportDoc::document() const {
    json out = doc_;
    out["summary"] = {{"rows", doc_["rows"].size()},
                      {"failed", fail_count_},
                      {"all_pass", fail_count_ == 0}};
    return out;
}

std::string ReportDoc::render_table() const {
    std::ostringstream os;
    char buf[64];
    for (const auto& row : doc_["rows"]) {
        const std::string name = row.contains("name") ? row["name"].get<std::string>() : "-";
        os << (row.contains("pass") ? (row["pass"].get<bool>() ? "[PASS] " : "[FAIL] ") : "[INFO] ");
        os << name;
        if (row.contains("computed") && row["computed"].is_number()) {
            std::snprintf(buf, sizeof buf, "%.12g", row["computed"].get<double>());
            os << "  computed=" << buf;
        }
        if (row.contains("expected") && row["expected"].is_number()) {
            std::snprintf(buf, sizeof buf, "%.12g", row["expected"].get<double>());
            os << "  expected=" << buf;
        }
        if (row.contains("abs_diff") && row["abs_diff"].is_number()) {
            std::snprintf(buf, sizeof buf, "%.3g", row["abs_diff"].get<double>());
            os << "  |diff|=" << buf;
        }
        os << "\n";
    }
    os << (fail_count_ == 0 ? "all rows pass" : "FAILURES: " + std::to_string(fail_count_)) << "\n";
    return os.str();
}

void ReportDoc::write(const std::string& path) const {
    if (path.empty()) return;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("report: cannot write " + path);
    out << document().dump(2) << "\n";
}

}  // namespace subord
