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

#include "qpcc/cli.hpp"

#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "qpcc/scenario.hpp"
#include "qpcc/scenario_library.hpp"

namespace qpcc::cli {

namespace {

using nlohmann::json;

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ValidationError("cannot open file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string &text, const std::string &out_path,
          std::ostream &out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        throw ValidationError("cannot write file '" + out_path + "'");
    }
    f << text;
}

// Minimal glob: '*' any run, '?' one character.
bool glob_match(const std::string &pattern, const std::string &text,
                std::size_t p = 0, std::size_t t = 0) {
    while (p < pattern.size()) {
        if (pattern[p] == '*') {
            for (std::size_t skip = t; skip <= text.size(); ++skip) {
                if (glob_match(pattern, text, p + 1, skip)) {
                    return true;
                }
            }
            return false;
        }
        if (t >= text.size() ||
            (pattern[p] != '?' && pattern[p] != text[t])) {
            return false;
        }
        ++p;
        ++t;
    }
    return t == text.size();
}

int cmd_validate(const std::string &path, std::ostream &out,
                 std::ostream &err) {
    Scenario s;
    try {
        s = parse_scenario(read_file(path));
        for (const auto &[name, o] : s.observables) {
            o.validate(s.tol);
        }
    } catch (const Error &e) {
        err << "validate: " << e.what() << "\n";
        return 2;
    }
    out << "scenario: " << (s.name.empty() ? "(unnamed)" : s.name) << "\n";
    out << "dimension: " << s.dimension;
    if (!s.factors.empty()) {
        out << " (factors:";
        for (const auto f : s.factors) {
            out << " " << f;
        }
        out << ")";
    }
    out << "\n";
    out << "observables:\n";
    for (const auto &[name, o] : s.observables) {
        out << "  " << name << ": dim " << o.dim() << ", outcomes";
        for (const auto &oc : o.outcomes()) {
            out << " " << oc.value << " (rank " << oc.eigenbasis.count()
                << ")";
        }
        out << ", spectral family ok\n";
    }
    out << "states: " << s.states.size() << "\n";
    out << "queries: " << s.queries.size() << "\n";
    return 0;
}

int cmd_run(const std::string &path, std::optional<double> tol_abs,
            std::optional<std::uint64_t> seed, const std::string &format,
            const std::string &out_path, std::ostream &out,
            std::ostream &err) {
    Scenario s;
    try {
        s = parse_scenario(read_file(path));
        if (tol_abs) {
            if (*tol_abs <= 0.0) {
                throw ValidationError("--tol must be positive");
            }
            s.tol.abs = *tol_abs;
        }
        if (seed) {
            s.seed = *seed;
        }
    } catch (const Error &e) {
        err << "run: " << e.what() << "\n";
        return 2;
    }
    const Report report = execute(s);
    const ReportFormat rf =
        format == "json" ? ReportFormat::Structured : ReportFormat::Text;
    emit(render_report(report, rf), out_path, out);
    return report.all_ok() ? 0 : 1;
}

int cmd_paper_suite(const std::string &filter, const std::string &format,
                    const std::string &out_path, std::ostream &out,
                    std::ostream &err) {
    (void)err;
    struct Row {
        std::string scenario;
        std::string label;
        std::string kind;
        bool ok;
    };
    std::vector<Row> rows;
    int scenarios_run = 0;
    for (const Scenario &s : builtin_scenarios()) {
        if (!glob_match(filter, s.name)) {
            continue;
        }
        ++scenarios_run;
        const Report report = execute(s);
        for (const auto &entry : report.document["queries"]) {
            if (!entry.contains("expect")) {
                continue;
            }
            Row row;
            row.scenario = s.name;
            row.label = entry.contains("label")
                            ? entry["label"].get<std::string>()
                            : "-";
            row.kind = entry["kind"].get<std::string>();
            row.ok = entry["ok"].get<bool>();
            rows.push_back(row);
        }
    }
    int ok_count = 0;
    for (const auto &r : rows) {
        ok_count += r.ok ? 1 : 0;
    }

    std::string text;
    if (format == "json") {
        json doc;
        doc["scenarios"] = scenarios_run;
        doc["total"] = rows.size();
        doc["ok"] = ok_count;
        json results = json::array();
        for (const auto &r : rows) {
            results.push_back({{"scenario", r.scenario},
                               {"label", r.label},
                               {"kind", r.kind},
                               {"ok", r.ok}});
        }
        doc["results"] = results;
        text = doc.dump(2) + "\n";
    } else {
        std::size_t name_w = 8;
        std::size_t label_w = 5;
        for (const auto &r : rows) {
            name_w = std::max(name_w, r.scenario.size());
            label_w = std::max(label_w, r.label.size());
        }
        std::ostringstream t;
        for (const auto &r : rows) {
            t << (r.ok ? "ok    " : "FAIL  ");
            t << r.scenario << std::string(name_w + 2 - r.scenario.size(), ' ')
              << r.label << std::string(label_w + 2 - r.label.size(), ' ')
              << r.kind << "\n";
        }
        t << "suite: " << ok_count << "/" << rows.size()
          << " expectations met across " << scenarios_run << " scenarios\n";
        text = t.str();
    }
    emit(text, out_path, out);
    return ok_count == static_cast<int>(rows.size()) ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
    CLI::App app{"perfect conditional correlation analysis"};
    app.name("qpcc");

    std::string validate_path;
    CLI::App *validate =
        app.add_subcommand("validate", "parse and invariant-check a scenario");
    validate->add_option("file", validate_path, "scenario file")->required();

    std::string run_path;
    std::string run_format = "text";
    std::string run_out;
    std::optional<double> run_tol;
    std::optional<std::uint64_t> run_seed;
    CLI::App *runc =
        app.add_subcommand("run", "execute a scenario and report results");
    runc->add_option("file", run_path, "scenario file")->required();
    runc->add_option("--tol", run_tol, "absolute tolerance override");
    runc->add_option("--seed", run_seed, "seed override");
    runc->add_option("--format", run_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    runc->add_option("--out", run_out, "write the report to a file");

    std::string suite_filter = "*";
    std::string suite_format = "text";
    std::string suite_out;
    CLI::App *suite = app.add_subcommand(
        "paper-suite", "run the bundled reference scenarios");
    suite->add_option("--filter", suite_filter, "scenario name glob");
    suite->add_option("--format", suite_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    suite->add_option("--out", suite_out, "write the matrix to a file");

    app.require_subcommand(1);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (validate->parsed()) {
            return cmd_validate(validate_path, out, err);
        }
        if (runc->parsed()) {
            return cmd_run(run_path, run_tol, run_seed, run_format, run_out,
                           out, err);
        }
        return cmd_paper_suite(suite_filter, suite_format, suite_out, out,
                               err);
    } catch (const Error &e) {
        err << e.what() << "\n";
        return 2;
    }
}

} // namespace qpcc::cli
