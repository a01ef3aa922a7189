#include "sperner/poset_io.hpp"

#include <fstream>
#include <sstream>

#include "sperner/errors.hpp"

namespace sperner {
namespace {

std::string line_error(std::size_t line, const std::string& msg) {
  return "line " + std::to_string(line) + ": " + msg;
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\';
    out += c;
  }
  return out + "\"";
}

// Reads a double-quoted DOT identifier starting at pos; advances pos.
std::optional<std::string> read_quoted(std::string_view s, std::size_t& pos) {
  while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t'))
    ++pos;
  if (pos >= s.size() || s[pos] != '"')
    return std::nullopt;
  std::string out;
  for (++pos; pos < s.size(); ++pos) {
    if (s[pos] == '\\' && pos + 1 < s.size()) {
      out += s[++pos];
    } else if (s[pos] == '"') {
      ++pos;
      return out;
    } else {
      out += s[pos];
    }
  }
  throw ParseError("unterminated quoted identifier", pos);
}

} // namespace

FinitePoset parse_poset_text(std::string_view text) {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream fields(line);
    std::string keyword;
    if (!(fields >> keyword))
      continue;
    std::string a, b, extra;
    if (keyword == "elem") {
      if (!(fields >> a) || (fields >> extra))
        throw InputError(line_error(lineno, "expected 'elem <name>'"));
      elements.push_back(a);
    } else if (keyword == "cover") {
      if (!(fields >> a >> b) || (fields >> extra))
        throw InputError(line_error(lineno, "expected 'cover <a> <b>'"));
      covers.emplace_back(a, b);
    } else {
      throw InputError(line_error(lineno, "unknown keyword '" + keyword + "'"));
    }
  }
  return from_cover_relations(std::move(elements), covers);
}

FinitePoset read_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_poset_text(buf.str());
}

std::string write_poset_text(const FinitePoset& p) {
  std::string out;
  for (const auto& n : p.names())
    out += "elem " + n + "\n";
  for (auto [a, b] : transitive_reduction(p))
    out += "cover " + p.name(a) + " " + p.name(b) + "\n";
  return out;
}

std::string write_dot(const FinitePoset& p, const std::optional<SplitPartition>& split) {
  std::vector<const char*> color(p.size(), nullptr);
  if (split) {
    for (auto i : normalized(p, split->down))
      color[i] = "lightblue";
    for (auto i : normalized(p, split->up))
      color[i] = "orange";
  }
  std::string out = "digraph poset {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < p.size(); ++i) {
    out += "  " + dot_quote(p.name(i));
    if (color[i])
      out += std::string(" [style=filled, fillcolor=") + color[i] + "]";
    out += ";\n";
  }
  for (auto [a, b] : transitive_reduction(p))
    out += "  " + dot_quote(p.name(a)) + " -> " + dot_quote(p.name(b)) + ";\n";
  return out + "}\n";
}

FinitePoset parse_dot(std::string_view text) {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  std::size_t line_start = 0;
  while (line_start < text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos)
      line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    std::size_t pos = 0;
    if (auto first = read_quoted(line, pos)) {
      while (pos < line.size() && line[pos] == ' ')
        ++pos;
      if (line.substr(pos, 2) == "->") {
        pos += 2;
        auto second = read_quoted(line, pos);
        if (!second)
          throw ParseError("expected quoted edge target", line_start + pos);
        covers.emplace_back(*first, *second);
      } else {
        elements.push_back(*first);
      }
    }
    line_start = line_end + 1;
  }
  return from_cover_relations(std::move(elements), covers);
}

} // namespace sperner
