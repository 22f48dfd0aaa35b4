#include "sepbox/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sepbox/error.hpp"

namespace sepbox::io {

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& msg) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": " + msg);
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::uint64_t parse_uint(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) parse_fail(line_no, "expected a non-negative integer, got '" + std::string(token) + "'");
  return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

}  // namespace

Digraph parse_dg(std::string_view text) {
  std::optional<std::size_t> order;
  std::vector<Dart> darts;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    ++line_no;
    const auto line = trim(text.substr(start, stop - start));
    start = stop + 1;
    if (line.empty() || line.front() == '#') continue;
    const auto tokens = split_ws(line);
    if (!order) {
      if (tokens.size() != 2 || tokens[0] != "n") parse_fail(line_no, "expected 'n <count>'");
      order = parse_uint(tokens[1], line_no);
      continue;
    }
    if (tokens.size() != 3 || tokens[0] != "d") parse_fail(line_no, "expected 'd <u> <v>'");
    const auto u = parse_uint(tokens[1], line_no);
    const auto v = parse_uint(tokens[2], line_no);
    if (u >= *order || v >= *order) parse_fail(line_no, "vertex out of range");
    darts.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (!order) throw Error(ErrorKind::Parse, "missing 'n <count>' line");
  try {
    return Digraph(*order, std::move(darts));
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

std::string format_dg(const Digraph& g, std::string_view comment) {
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << '\n';
  out << "n " << g.order() << '\n';
  for (const auto& d : g.darts()) out << "d " << d.tail << ' ' << d.head << '\n';
  return out.str();
}

Digraph parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("darts"))
    throw Error(ErrorKind::Parse, "JSON digraph needs keys 'n' and 'darts'");
  if (!doc["n"].is_number_unsigned()) throw Error(ErrorKind::Parse, "'n' must be a non-negative integer");
  const auto order = doc["n"].get<std::size_t>();
  std::vector<Dart> darts;
  for (const auto& pair : doc["darts"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() || !pair[1].is_number_unsigned())
      throw Error(ErrorKind::Parse, "each dart must be a pair [u, v] of non-negative integers");
    const auto u = pair[0].get<std::uint64_t>();
    const auto v = pair[1].get<std::uint64_t>();
    if (u >= order || v >= order) throw Error(ErrorKind::Parse, "vertex out of range");
    darts.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  try {
    return Digraph(order, std::move(darts));
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

std::string format_json(const Digraph& g) {
  nlohmann::json doc;
  doc["n"] = g.order();
  auto darts = nlohmann::json::array();
  for (const auto& d : g.darts()) darts.push_back({d.tail, d.head});
  doc["darts"] = std::move(darts);
  return doc.dump() + "\n";
}

Digraph load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_json(text);
  return parse_dg(text);
}

void save(const Digraph& g, const std::filesystem::path& path, std::string_view comment) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + path.string());
  out << (path.extension() == ".json" ? format_json(g) : format_dg(g, comment));
}

}  // namespace sepbox::io
