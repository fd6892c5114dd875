#pragma once

#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rectsearch/domains/blocks.hpp"
#include "rectsearch/domains/grid.hpp"
#include "rectsearch/domains/pancake.hpp"
#include "rectsearch/domains/tiles.hpp"
#include "rectsearch/domains/vacuum.hpp"

namespace rectsearch {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<std::string> lines_of(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back(line);
  }
  return out;
}

inline bool blank(const std::string& s) {
  return s.find_first_not_of(" \t") == std::string::npos;
}

inline std::vector<long long> integers(const std::string& text, const char* what) {
  std::istringstream ss(text);
  std::vector<long long> out;
  std::string tok;
  while (ss >> tok) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw ParseError(std::string(what) + ": not an integer: '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

inline std::string slurp(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace detail

// "w h", then the permutation row-major on one line (0 = blank). Any
// whitespace is accepted between numbers.
inline TilesInstance parse_tiles(std::istream& in) {
  const auto v = detail::integers(detail::slurp(in), "tiles");
  if (v.size() < 2) throw ParseError("tiles: missing 'width height' header");
  TilesInstance t;
  t.width = static_cast<int>(v[0]);
  t.height = static_cast<int>(v[1]);
  if (t.width < 2 || t.height < 2 || t.width * t.height > TilesDomain::kMaxCells)
    throw ParseError("tiles: board must be at least 2x2 and at most 25 cells");
  for (std::size_t i = 2; i < v.size(); ++i) t.cells.push_back(static_cast<int>(v[i]));
  try {
    TilesDomain::validate_permutation(t.cells, t.width * t.height);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("tiles: ") + e.what());
  }
  return t;
}

inline void write_tiles(std::ostream& out, const TilesInstance& t) {
  out << t.width << ' ' << t.height << '\n';
  for (std::size_t i = 0; i < t.cells.size(); ++i) out << (i ? " " : "") << t.cells[i];
  out << '\n';
}

// One line: pancake ids from top to bottom.
inline PancakeInstance parse_pancake(std::istream& in) {
  const auto v = detail::integers(detail::slurp(in), "pancake");
  PancakeInstance p;
  for (auto x : v) p.stack.push_back(static_cast<int>(x));
  const int n = static_cast<int>(p.stack.size());
  std::vector<bool> seen(n + 1, false);
  if (n < 2) throw ParseError("pancake: need at least two pancakes");
  for (int x : p.stack) {
    if (x < 1 || x > n || seen[x]) throw ParseError("pancake: not a permutation of 1..N");
    seen[x] = true;
  }
  return p;
}

inline void write_pancake(std::ostream& out, const PancakeInstance& p) {
  for (std::size_t i = 0; i < p.stack.size(); ++i) out << (i ? " " : "") << p.stack[i];
  out << '\n';
}

// "X on Y" / "X on table" lines for the initial configuration, a blank
// line, then the goal configuration. Blocks are numbered 0..N-1.
inline BlocksInstance parse_blocks(std::istream& in) {
  const auto lines = detail::lines_of(in);
  std::vector<std::vector<std::pair<int, int>>> sections(1);
  for (const auto& line : lines) {
    if (detail::blank(line)) {
      if (!sections.back().empty()) sections.emplace_back();
      continue;
    }
    std::istringstream ss(line);
    std::string a, on, b, extra;
    if (!(ss >> a >> on >> b) || on != "on" || (ss >> extra))
      throw ParseError("blocks: expected 'X on Y' or 'X on table', got '" + line + "'");
    const auto x = detail::integers(a, "blocks");
    const int below = b == "table" ? -1 : static_cast<int>(detail::integers(b, "blocks").at(0));
    sections.back().emplace_back(static_cast<int>(x.at(0)), below);
  }
  if (sections.back().empty()) sections.pop_back();
  if (sections.size() != 2) throw ParseError("blocks: expected initial and goal sections");
  BlocksInstance inst;
  auto fill = [&](const auto& sec, std::vector<int>& on) {
    const int n = static_cast<int>(sections[0].size());
    if (static_cast<int>(sec.size()) != n) throw ParseError("blocks: sections differ in size");
    on.assign(n, -2);
    for (auto [x, y] : sec) {
      if (x < 0 || x >= n || on[x] != -2) throw ParseError("blocks: bad or repeated block id");
      on[x] = y;
    }
    try {
      BlocksDomain::validate(on);
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("blocks: ") + e.what());
    }
  };
  fill(sections[0], inst.initial_on);
  fill(sections[1], inst.goal_on);
  return inst;
}

inline void write_blocks(std::ostream& out, const BlocksInstance& b) {
  auto section = [&](const std::vector<int>& on) {
    for (std::size_t x = 0; x < on.size(); ++x) {
      out << x << " on ";
      if (on[x] < 0)
        out << "table";
      else
        out << on[x];
      out << '\n';
    }
  };
  section(b.initial_on);
  out << '\n';
  section(b.goal_on);
}

// "w h" then h rows: '#' blocked, '.' free, '@' agent, '*' dirt.
inline VacuumInstance parse_vacuum(std::istream& in) {
  auto lines = detail::lines_of(in);
  std::erase_if(lines, detail::blank);
  if (lines.empty()) throw ParseError("vacuum: missing 'width height' header");
  const auto hdr = detail::integers(lines[0], "vacuum");
  if (hdr.size() != 2 || hdr[0] < 1 || hdr[1] < 1) throw ParseError("vacuum: bad header");
  VacuumInstance v;
  v.width = static_cast<int>(hdr[0]);
  v.height = static_cast<int>(hdr[1]);
  if (static_cast<int>(lines.size()) != v.height + 1) throw ParseError("vacuum: wrong number of rows");
  v.blocked.assign(v.width * v.height, false);
  int agents = 0;
  for (int y = 0; y < v.height; ++y) {
    const auto& row = lines[y + 1];
    if (static_cast<int>(row.size()) != v.width) throw ParseError("vacuum: wrong row width");
    for (int x = 0; x < v.width; ++x) {
      const int c = y * v.width + x;
      switch (row[x]) {
        case '#': v.blocked[c] = true; break;
        case '.': break;
        case '@': v.agent = c; ++agents; break;
        case '*': v.dirt.push_back(c); break;
        default: throw ParseError(std::string("vacuum: unexpected character '") + row[x] + "'");
      }
    }
  }
  if (agents != 1) throw ParseError("vacuum: exactly one agent required");
  if (v.dirt.size() > VacuumDomain::kMaxDirt) throw ParseError("vacuum: too many dirt piles");
  return v;
}

inline void write_vacuum(std::ostream& out, const VacuumInstance& v) {
  out << v.width << ' ' << v.height << '\n';
  std::vector<char> row(v.width * v.height, '.');
  for (int c = 0; c < v.width * v.height; ++c)
    if (v.blocked[c]) row[c] = '#';
  for (int c : v.dirt) row[c] = '*';
  row[v.agent] = '@';
  for (int y = 0; y < v.height; ++y) {
    out.write(row.data() + y * v.width, v.width);
    out << '\n';
  }
}

// movingai map: "type octile", "height H", "width W", "map", then rows.
// '.', 'G' and 'S' are passable; '@', 'O', 'T' and 'W' are blocked.
inline GridMap parse_movingai_map(std::istream& in) {
  const auto lines = detail::lines_of(in);
  std::size_t i = 0;
  GridMap m;
  bool typed = false;
  for (; i < lines.size(); ++i) {
    std::istringstream ss(lines[i]);
    std::string k;
    if (!(ss >> k)) continue;
    if (k == "map") {
      ++i;
      break;
    }
    std::string val;
    if (!(ss >> val)) throw ParseError("map: header line without value: '" + lines[i] + "'");
    if (k == "type") {
      typed = true;
    } else if (k == "height" || k == "width") {
      const auto v = detail::integers(val, "map");
      (k == "height" ? m.height : m.width) = static_cast<int>(v.at(0));
    } else {
      throw ParseError("map: unknown header '" + k + "'");
    }
  }
  if (!typed || m.width < 1 || m.height < 1) throw ParseError("map: incomplete header");
  if (lines.size() < i + m.height) throw ParseError("map: fewer rows than height");
  m.blocked.assign(m.width * m.height, false);
  for (int y = 0; y < m.height; ++y) {
    const auto& row = lines[i + y];
    if (static_cast<int>(row.size()) < m.width) throw ParseError("map: row shorter than width");
    for (int x = 0; x < m.width; ++x) {
      switch (row[x]) {
        case '.': case 'G': case 'S': break;
        case '@': case 'O': case 'T': case 'W': m.blocked[y * m.width + x] = true; break;
        default: throw ParseError(std::string("map: unexpected character '") + row[x] + "'");
      }
    }
  }
  return m;
}

inline void write_movingai_map(std::ostream& out, const GridMap& m) {
  out << "type octile\nheight " << m.height << "\nwidth " << m.width << "\nmap\n";
  for (int y = 0; y < m.height; ++y) {
    for (int x = 0; x < m.width; ++x) out << (m.blocked[y * m.width + x] ? '@' : '.');
    out << '\n';
  }
}

// A single line "sx sy gx gy".
inline GridScenario parse_scenario(std::istream& in) {
  const auto v = detail::integers(detail::slurp(in), "scenario");
  if (v.size() != 4) throw ParseError("scenario: expected 'sx sy gx gy'");
  return {static_cast<int>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2]),
          static_cast<int>(v[3])};
}

inline void write_scenario(std::ostream& out, const GridScenario& s) {
  out << s.sx << ' ' << s.sy << ' ' << s.gx << ' ' << s.gy << '\n';
}

template <class F>
auto parse_file(const std::filesystem::path& p, F&& parse) {
  std::ifstream in(p);
  if (!in) throw ParseError("cannot open " + p.string());
  return parse(in);
}

}  // namespace rectsearch
