#pragma once

#include <json.hpp>

#include <string>

namespace bicross {

/// Task result envelope.  The structured form is deterministic: insertion
/// order is preserved and timing stays out of it, so identical input and
/// flags give byte-identical documents.
struct Report {
    std::string task;
    nlohmann::ordered_json payload = nlohmann::ordered_json::object();
    bool ok = true;
    long elapsed_ms = 0;

    std::string human() const;
    std::string structured() const;
};

/// Structured error document for nonzero exits.
std::string structured_error(const std::string& code, const std::string& message);

} // namespace bicross
