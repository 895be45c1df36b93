// Copyright 2026 The qpcc developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qpcc/report.hpp"

#include <sstream>

namespace qpcc {

using nlohmann::json;

namespace {

// Arrays-of-arrays get one element per line; everything else stays inline.
void print_value(std::ostringstream &out, const json &value,
                 const std::string &indent) {
    if (value.is_array() && !value.empty() && value.front().is_array()) {
        out << "\n";
        for (const auto &item : value) {
            out << indent << "  " << item.dump() << "\n";
        }
    } else {
        out << " " << value.dump() << "\n";
    }
}

} // namespace

std::string render_report(const Report &report, ReportFormat format) {
    if (format == ReportFormat::Structured) {
        return report.document.dump(2) + "\n";
    }
    const json &doc = report.document;
    std::ostringstream out;
    out << "qpcc report";
    if (doc.contains("name") && !doc["name"].get<std::string>().empty()) {
        out << ": " << doc["name"].get<std::string>();
    }
    out << "\n";
    out << "seed: " << doc["seed"].dump()
        << "  tolerance: abs=" << doc["tolerance"]["abs"].dump()
        << " rel=" << doc["tolerance"]["rel"].dump() << "\n";
    for (std::size_t i = 0; i < doc["queries"].size(); ++i) {
        const json &entry = doc["queries"][i];
        out << "[" << i << "] " << entry["kind"].get<std::string>();
        if (entry.contains("label")) {
            out << "  label=" << entry["label"].dump();
        }
        out << "  " << (entry["ok"].get<bool>() ? "ok" : "FAILED") << "\n";
        const json &result = entry["result"];
        if (result.is_object()) {
            for (const auto &item : result.items()) {
                out << "    " << item.key() << ":";
                print_value(out, item.value(), "    ");
            }
        } else {
            out << "    " << result.dump() << "\n";
        }
    }
    out << "summary: " << doc["summary"]["ok"].dump() << "/"
        << doc["summary"]["total"].dump() << " ok\n";
    return out.str();
}

} // namespace qpcc
