#include "isoder/report.hpp"

#include <sstream>

namespace isoder {

nlohmann::json make_report(const std::string& command) {
    nlohmann::json r;
    r["command"] = command;
    r["inputs"] = nlohmann::json::object();
    r["verdict"] = "";
    r["witness"] = nullptr;
    r["flags"] = nlohmann::json::array();
    r["version"] = kReportVersion;
    return r;
}

namespace {

void render_value(std::ostringstream& os, const nlohmann::json& v, int indent) {
    const std::string pad(static_cast<size_t>(indent), ' ');
    if (v.is_object()) {
        for (const auto& [key, val] : v.items()) {
            if (val.is_object() || val.is_array()) {
                os << pad << key << ":\n";
                render_value(os, val, indent + 2);
            } else {
                os << pad << key << ": " << (val.is_string() ? val.get<std::string>() : val.dump())
                   << "\n";
            }
        }
    } else if (v.is_array()) {
        for (const auto& item : v) {
            if (item.is_object() || item.is_array()) {
                os << pad << "-\n";
                render_value(os, item, indent + 2);
            } else {
                os << pad << "- "
                   << (item.is_string() ? item.get<std::string>() : item.dump()) << "\n";
            }
        }
    } else {
        os << pad << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
}

} // namespace

std::string render_text(const nlohmann::json& report) {
    std::ostringstream os;
    os << report.at("command").get<std::string>() << ": "
       << report.at("verdict").get<std::string>() << "\n";
    if (report.contains("inputs") && !report.at("inputs").empty()) {
        os << "inputs:\n";
        render_value(os, report.at("inputs"), 2);
    }
    if (report.contains("witness") && !report.at("witness").is_null()) {
        os << "witness:\n";
        render_value(os, report.at("witness"), 2);
    }
    if (report.contains("flags") && !report.at("flags").empty()) {
        os << "flags:\n";
        render_value(os, report.at("flags"), 2);
    }
    return os.str();
}

} // namespace isoder
