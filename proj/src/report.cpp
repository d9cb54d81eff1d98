#include "cosetlab/report.hpp"

#include "cosetlab/typea.hpp"

#include <sstream>

namespace cosetlab {

std::string orbit_label_string(const BurnsideRing& ring, int orbit) {
    const Group& g = ring.group();
    ReflMask m = ring.lattice().orbit_label(orbit);
    if (g.symbol().family == Family::A) return partition_str(type_a_shape(g, m));
    char buf[32];
    std::snprintf(buf, sizeof(buf), "0x%06llx", static_cast<unsigned long long>(m));
    return buf;
}

nlohmann::json burnside_json(const BurnsideRing& ring, const BurnsideElement& b) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [o, c] : b.coeffs()) j[orbit_label_string(ring, o)] = c.get_str();
    return j;
}

nlohmann::json symfunc_json(const SymFunc& f) {
    nlohmann::json j = nlohmann::json::object();
    const char* basis = "H";
    switch (f.basis()) {
        case SymFunc::Basis::H: basis = "H"; break;
        case SymFunc::Basis::E: basis = "E"; break;
        case SymFunc::Basis::P: basis = "P"; break;
        case SymFunc::Basis::S: basis = "S"; break;
    }
    j["basis"] = basis;
    j["degree"] = f.degree();
    nlohmann::json terms = nlohmann::json::object();
    for (const auto& [p, v] : f.coeffs()) terms[partition_str(p)] = v.get_str();
    j["terms"] = terms;
    return j;
}

ReportDocument::ReportDocument(nlohmann::json config) {
    doc_["version"] = "1";
    doc_["config"] = std::move(config);
    doc_["results"] = nlohmann::json::array();
}

void ReportDocument::add(const std::string& name, const std::string& kind,
                         nlohmann::json payload) {
    nlohmann::json r;
    r["name"] = name;
    r["kind"] = kind;
    r["payload"] = std::move(payload);
    doc_["results"].push_back(std::move(r));
}

void ReportDocument::add_check(const std::string& name, bool pass, const std::string& detail) {
    nlohmann::json payload;
    payload["pass"] = pass;
    if (!detail.empty()) payload["detail"] = detail;
    add(name, "check", payload);
    if (!pass) ++failures_;
}

std::string ReportDocument::to_json() const { return doc_.dump(2) + "\n"; }

namespace {

void csv_payload(std::ostream& os, const std::string& name, const std::string& prefix,
                 const nlohmann::json& v) {
    if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it)
            csv_payload(os, name, prefix.empty() ? it.key() : prefix + "." + it.key(), it.value());
    } else if (v.is_array()) {
        for (std::size_t i = 0; i < v.size(); ++i)
            csv_payload(os, name, prefix + "[" + std::to_string(i) + "]", v[i]);
    } else {
        os << name << "," << prefix << ","
           << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
}

}  // namespace

std::string ReportDocument::to_csv() const {
    std::ostringstream os;
    os << "result,key,value\n";
    for (const auto& r : doc_["results"])
        csv_payload(os, r["name"].get<std::string>(), "", r["payload"]);
    return os.str();
}

std::string ReportDocument::to_text() const {
    std::ostringstream os;
    for (const auto& r : doc_["results"]) {
        os << r["name"].get<std::string>();
        if (r["kind"] == "check") {
            os << ": " << (r["payload"]["pass"].get<bool>() ? "PASS" : "FAIL");
            if (r["payload"].contains("detail"))
                os << "  (" << r["payload"]["detail"].get<std::string>() << ")";
            os << "\n";
        } else {
            os << ": " << r["payload"].dump() << "\n";
        }
    }
    return os.str();
}

}  // namespace cosetlab
