#pragma once

#include "cosetlab/burnside.hpp"
#include "cosetlab/symfunc.hpp"

#include <json.hpp>

#include <string>

namespace cosetlab {

// Human/machine readable label for an orbit: a partition shape in type A,
// the canonical reflection bitset in hex otherwise.
std::string orbit_label_string(const BurnsideRing& ring, int orbit);

nlohmann::json burnside_json(const BurnsideRing& ring, const BurnsideElement& b);
nlohmann::json symfunc_json(const SymFunc& f);

// Deterministic result document: {version, config, results:[{name,kind,payload}]}.
class ReportDocument {
public:
    explicit ReportDocument(nlohmann::json config);

    void add(const std::string& name, const std::string& kind, nlohmann::json payload);
    void add_check(const std::string& name, bool pass, const std::string& detail = "");
    bool all_checks_passed() const { return failures_ == 0; }
    int failures() const { return failures_; }

    std::string to_json() const;
    std::string to_csv() const;
    std::string to_text() const;

private:
    nlohmann::json doc_;
    int failures_ = 0;
};

}  // namespace cosetlab
