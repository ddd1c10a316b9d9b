#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

namespace simpqe::cli {

struct ConfigEntry {
    std::string section;
    std::string key;
    std::string value;
    std::size_t line = 0;
};

/// `key = value` lines grouped under `[section]` headers; `#` and `;` start comments.
std::vector<ConfigEntry> read_config_file(const std::filesystem::path& path);

/// Applies entries from the `[common]` section and from the section named after `command`
/// to options the user did not set on the command line. Keys in the command's own section
/// must name one of its options; `[common]` keys that the command lacks are skipped.
void apply_config(CLI::App& command, const std::vector<ConfigEntry>& entries, const std::string& source);

}  // namespace simpqe::cli
