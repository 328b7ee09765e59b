#pragma once

#include <string>
#include <utility>
#include <vector>

namespace infoscale::cli {

/// Flat key=value file. Blank lines and lines starting with '#' are skipped;
/// keys and values are trimmed. Throws ConfigError on an unreadable file or
/// a line without '='.
std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path);

/// args with the entries of any --config file spliced in right after the
/// subcommand as --key=value, so flags given on the command line (which come
/// later and take the last value) win.
std::vector<std::string> expand_config(const std::vector<std::string>& args);

}  // namespace infoscale::cli
