#pragma once

#include <string>

#include <json.hpp>

#include "subord/admissibility.hpp"
#include "subord/contact.hpp"
#include "subord/gft.hpp"
#include "subord/subordination.hpp"

namespace subord {

using json = nlohmann::ordered_json;

json series_to_json(const Series& s);         // list of [re, im] pairs
Series series_from_json(const json& j);

json map_to_json(const CanonicalMap& q);
CanonicalMap map_from_json(const json& j);

json verdict_to_json(const AdmissibilityVerdict& v);
json contact_to_json(const ContactReport& r);
json falsification_to_json(const FalsificationReport& r);
json order_to_json(const OrderResult& r);
json order_verification_to_json(const OrderVerification& r);

/// One report document per run: command echo, config echo, rows, summary.
/// Serialization is deterministic for identical inputs.
class ReportDoc {
public:
    ReportDoc(const std::string& command, json config_echo);

    void add_row(json row);
    /// Convenience: a named check row with computed/expected/tolerance.
    void add_check(const std::string& name, double computed, double expected, double tol);
    void add_check(const std::string& name, bool pass, json detail = {});

    bool all_pass() const { return fail_count_ == 0; }
    int fail_count() const { return fail_count_; }

    json document() const;
    std::string render_table() const;         // plain-text table for stdout
    void write(const std::string& path) const;

private:
    json doc_;
    int fail_count_ = 0;
};

}  // namespace subord
