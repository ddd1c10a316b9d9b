#include "config_file.hpp"

#include "simpqe/util/error.hpp"
#include "simpqe/util/text_io.hpp"

namespace simpqe::cli {

std::vector<ConfigEntry> read_config_file(const std::filesystem::path& path) {
    std::vector<ConfigEntry> entries;
    std::string section = "common";
    for_each_line(read_file(path), [&](std::size_t line_no, std::string_view line) {
        if (const auto c = line.find_first_of("#;"); c != std::string_view::npos) {
            line = line.substr(0, c);
        }
        line = trim(line);
        if (line.empty()) {
            return;
        }
        if (line.front() == '[') {
            if (line.back() != ']') {
                throw ParseError(path.string(), line_no, "malformed section header");
            }
            section = std::string(trim(line.substr(1, line.size() - 2)));
            return;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError(path.string(), line_no, "expected key = value");
        }
        entries.push_back({section, std::string(trim(line.substr(0, eq))), std::string(trim(line.substr(eq + 1))),
                           line_no});
    });
    return entries;
}

void apply_config(CLI::App& command, const std::vector<ConfigEntry>& entries, const std::string& source) {
    const std::string name = command.get_name();
    for (const auto& e : entries) {
        const bool own = e.section == name;
        if (!own && e.section != "common") {
            continue;
        }
        CLI::Option* opt = command.get_option_no_throw("--" + e.key);
        if (opt == nullptr || e.key == "config") {
            if (own) {
                throw ParseError(source, e.line, "unknown option '" + e.key + "' for command '" + name + "'");
            }
            continue;
        }
        if (opt->count() > 0) {
            continue;
        }
        opt->clear();
        if (opt->get_type_size() == 0) {
            // flag
            opt->add_result(e.value.empty() ? "true" : e.value);
        } else if (opt->get_items_expected_max() > 1) {
            for (auto part : split(e.value, ',')) {
                opt->add_result(std::string(trim(part)));
            }
        } else {
            opt->add_result(e.value);
        }
        try {
            opt->run_callback();
        } catch (const CLI::Error& err) {
            throw ParseError(source, e.line, "bad value for '" + e.key + "': " + err.what());
        }
    }
}

}  // namespace simpqe::cli
