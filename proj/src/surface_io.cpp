#include <charconv>
#include <set>
#include <sstream>

#include "nurikabe/surface.hpp"

namespace nurikabe {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<int> parse_int(std::string_view s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) return std::nullopt;
  return v;
}

SideRef parse_slot(std::string_view tok, int line, int n) {
  auto dot = tok.find('.');
  if (dot == std::string_view::npos || dot + 2 != tok.size())
    throw ParseError(line, "expected <square>.<N|E|S|W>, got '" + std::string(tok) + "'");
  auto sq = parse_int(tok.substr(0, dot));
  auto side = side_from_char(tok[dot + 1]);
  if (!sq || !side) throw ParseError(line, "malformed side reference '" + std::string(tok) + "'");
  if (*sq < 1 || *sq > n) throw ParseError(line, "square index " + std::to_string(*sq) + " out of range 1.." + std::to_string(n));
  return {*sq, *side};
}

}  // namespace

SquareTiledSurface parse_surface(std::string_view text) {
  std::optional<int> n;
  std::string name;
  std::vector<Gluing> gluings;
  std::set<SideRef> used;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      // A leading "# name" line labels the surface.
      if (line_no == 1 && hash == 0 && name.empty()) {
        auto toks = split_ws(line.substr(1));
        if (!toks.empty()) {
          auto first = line.find(toks.front());
          auto last = line.find_last_not_of(" \t\r");
          name = std::string(line.substr(first, last + 1 - first));
        }
      }
      line = line.substr(0, hash);
    }
    auto toks = split_ws(line);
    if (toks.empty()) {
      if (end == text.size()) break;
      continue;
    }

    if (toks[0] == "squares") {
      if (n) throw ParseError(line_no, "duplicate 'squares' directive");
      if (toks.size() != 2) throw ParseError(line_no, "expected 'squares <n>'");
      auto v = parse_int(toks[1]);
      if (!v || *v < 1) throw ParseError(line_no, "square count must be a positive integer");
      n = *v;
    } else if (toks[0] == "glue") {
      if (!n) throw ParseError(line_no, "'glue' before 'squares'");
      if (toks.size() != 3 && toks.size() != 4) throw ParseError(line_no, "expected 'glue <i>.<SIDE> <j>.<SIDE> [rev]'");
      bool rev = false;
      if (toks.size() == 4) {
        if (toks[3] != "rev") throw ParseError(line_no, "unexpected token '" + std::string(toks[3]) + "'");
        rev = true;
      }
      SideRef a = parse_slot(toks[1], line_no, *n);
      SideRef b = parse_slot(toks[2], line_no, *n);
      if (a == b) throw ParseError(line_no, "side " + to_string(a) + " glued to itself");
      for (const SideRef& s : {a, b})
        if (!used.insert(s).second) throw ParseError(line_no, "side " + to_string(s) + " already glued");
      gluings.push_back({a, b, rev});
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(toks[0]) + "'");
    }
    if (end == text.size()) break;
  }
  if (!n) throw ParseError(line_no, "missing 'squares' directive");
  return SquareTiledSurface(*n, std::move(gluings), name.empty() ? "custom" : name);
}

std::string serialize_surface(const SquareTiledSurface& surface) {
  std::ostringstream out;
  if (!surface.name().empty()) out << "# " << surface.name() << '\n';
  out << "squares " << surface.size() << '\n';
  for (const Gluing& g : surface.gluings()) {
    out << "glue " << to_string(g.a) << ' ' << to_string(g.b);
    if (g.reversed) out << " rev";
    out << '\n';
  }
  return out.str();
}

}  // namespace nurikabe
