#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "sepbox/digraph.hpp"

namespace sepbox::io {

/// ".dg" text format:
///   # comment
///   n <order>
///   d <tail> <head>      (one line per dart, 0-indexed)
Digraph parse_dg(std::string_view text);
std::string format_dg(const Digraph& g, std::string_view comment = {});

/// JSON alternative: {"n": <order>, "darts": [[u, v], ...]}
Digraph parse_json(std::string_view text);
std::string format_json(const Digraph& g);

/// Reads either format; JSON is recognised by a leading '{'.
Digraph load(const std::filesystem::path& path);
/// Writes JSON when the extension is ".json", ".dg" text otherwise.
void save(const Digraph& g, const std::filesystem::path& path, std::string_view comment = {});

}  // namespace sepbox::io
