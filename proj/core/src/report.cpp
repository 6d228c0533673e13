#include "bicross/report.hpp"

#include <sstream>

namespace bicross {

namespace {

void render(const nlohmann::ordered_json& j, std::ostringstream& os, int indent) {
    std::string pad(static_cast<size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.value().is_object() || (it.value().is_array() && !it.value().empty() &&
                                           (it.value()[0].is_object() || it.value()[0].is_array()))) {
                os << pad << it.key() << ":\n";
                render(it.value(), os, indent + 1);
            } else if (it.value().is_array()) {
                os << pad << it.key() << ": ";
                bool first = true;
                for (const auto& v : it.value()) {
                    os << (first ? "" : " ") << (v.is_string() ? v.get<std::string>() : v.dump());
                    first = false;
                }
                os << "\n";
            } else if (it.value().is_string()) {
                os << pad << it.key() << ": " << it.value().get<std::string>() << "\n";
            } else {
                os << pad << it.key() << ": " << it.value().dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        int k = 0;
        for (const auto& v : j) {
            if (v.is_object() || v.is_array()) {
                os << pad << "- [" << k << "]\n";
                render(v, os, indent + 1);
            } else {
                os << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
            ++k;
        }
    }
}

} // namespace

std::string Report::human() const {
    std::ostringstream os;
    os << "task: " << task << "\n";
    render(payload, os, 0);
    os << "status: " << (ok ? "ok" : "FAILED") << "\n";
    os << "elapsed: " << elapsed_ms << " ms\n";
    return os.str();
}

std::string Report::structured() const {
    nlohmann::ordered_json out;
    out["task"] = task;
    out["ok"] = ok;
    out["result"] = payload;
    return out.dump(2) + "\n";
}

std::string structured_error(const std::string& code, const std::string& message) {
    nlohmann::ordered_json out;
    out["error"] = code;
    out["message"] = message;
    return out.dump(2) + "\n";
}

} // namespace bicross
