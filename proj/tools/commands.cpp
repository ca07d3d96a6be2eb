#include "commands.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "nurikabe/bijections.hpp"
#include "nurikabe/render.hpp"
#include "nurikabe/sequences.hpp"
#include "nurikabe/solver.hpp"

namespace nurikabe::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

int to_int(std::string_view s, std::string_view what) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size())
    throw UsageError("bad " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    auto piece = s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start);
    if (!piece.empty()) out.emplace_back(piece);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<int> parse_int_list(std::string_view s) {
  std::vector<int> out;
  for (const auto& tok : split(s, ',')) out.push_back(to_int(tok, "square index"));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string set_text(const std::vector<int>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "}";
}

// Options shared by every subcommand that works on one surface.
struct SurfaceArgs {
  std::string surface;
  std::string spec;

  void attach(CLI::App* app) {
    app->add_option("--surface", surface, "Named surface, e.g. mobius:7 or rectangle:2x3");
    app->add_option("--spec", spec, "Surface-spec file");
  }

  SquareTiledSurface load() const {
    if (!spec.empty() && !surface.empty()) throw UsageError("give either --surface or --spec, not both");
    if (!spec.empty()) return parse_surface(read_file(spec));
    if (surface.empty()) throw UsageError("a surface is required (--surface or --spec)");
    return parse_surface_ref(surface);
  }
};

struct RunArgs {
  unsigned workers = 0;
  bool cap_override = false;
  int size_cap = 26;
  std::uint64_t listing_cap = std::uint64_t{1} << 20;

  void attach(CLI::App* app) {
    app->add_option("--workers", workers, "Worker threads (0 = hardware concurrency)");
    app->add_flag("--cap-override", cap_override, "Allow surfaces above the size cap");
    app->add_option("--size-cap", size_cap, "Largest surface enumerated without --cap-override");
    app->add_option("--listing-cap", listing_cap, "Most colorings listed by enumerate");
  }

  EnumerationOptions options() const {
    EnumerationOptions o;
    o.workers = workers == 0 ? std::max(1U, std::thread::hardware_concurrency()) : workers;
    o.cap_override = cap_override;
    o.size_cap = size_cap;
    o.listing_cap = listing_cap;
    return o;
  }
};

void check_format(const std::string& format, std::initializer_list<std::string_view> allowed) {
  for (auto a : allowed)
    if (format == a) return;
  throw UsageError("unsupported --format '" + format + "' for this command");
}

// --- describe ---------------------------------------------------------------

void describe(const SquareTiledSurface& s, const std::string& format, std::ostream& out) {
  if (format == "spec") {
    out << serialize_surface(s);
    return;
  }
  if (format == "json-lines") {
    out << Json{{"record", "surface"}, {"name", s.name()}, {"squares", s.size()},
                {"euler_characteristic", s.euler_characteristic()}}
               .dump()
        << '\n';
    for (const Gluing& g : s.gluings())
      out << Json{{"record", "gluing"}, {"a", to_string(g.a)}, {"b", to_string(g.b)}, {"reversed", g.reversed}}.dump()
          << '\n';
    for (const VertexOrbit& o : s.orbits()) {
      Json corners = Json::array();
      for (const CornerRef& c : o.corners) corners.push_back(std::to_string(c.square) + "." + std::string(corner_name(c.corner)));
      out << Json{{"record", "vertex"},          {"interior", o.interior},
                  {"square_degree", o.square_degree()}, {"incident_squares", o.incident_squares},
                  {"corners", corners}}
                 .dump()
          << '\n';
    }
    for (auto [u, v] : s.adjacency().edges) out << Json{{"record", "edge"}, {"u", u}, {"v", v}}.dump() << '\n';
    return;
  }
  out << "surface " << s.name() << '\n';
  out << "squares " << s.size() << '\n';
  out << "euler_characteristic " << s.euler_characteristic() << '\n';
  out << "gluings " << s.gluings().size() << '\n';
  for (const Gluing& g : s.gluings())
    out << "  " << to_string(g.a) << ' ' << to_string(g.b) << (g.reversed ? " rev" : "") << '\n';
  out << "vertices " << s.orbits().size() << " (interior " << s.interior_orbits().size() << ")\n";
  for (const VertexOrbit& o : s.orbits()) {
    out << "  " << (o.interior ? "interior" : "boundary") << " degree " << o.square_degree() << " squares "
        << set_text(o.incident_squares) << " corners";
    for (const CornerRef& c : o.corners) out << ' ' << c.square << '.' << corner_name(c.corner);
    out << '\n';
  }
  out << "adjacency";
  for (auto [u, v] : s.adjacency().edges) out << ' ' << u << '-' << v;
  out << '\n';
}

// --- solve ------------------------------------------------------------------

void print_solutions(const SquareTiledSurface& s, const std::vector<Clue>& clues, const std::vector<std::uint64_t>& sols,
                     const std::string& format, std::ostream& out) {
  if (format == "json-lines") {
    for (std::uint64_t m : sols) out << Json{{"mask", m}, {"water", mask_to_squares(m)}}.dump() << '\n';
    return;
  }
  out << "solutions " << sols.size() << '\n';
  for (std::uint64_t m : sols) {
    out << "\nwater=" << set_text(mask_to_squares(m)) << '\n';
    RenderOptions ro;
    ro.coloring = Coloring::from_mask(s.size(), m);
    ro.clues = clues;
    std::string text = render_text(s, ro);
    out << text.substr(0, text.find("gluings:"));
  }
}

}  // namespace

SquareTiledSurface parse_surface_ref(std::string_view ref) {
  auto colon = ref.find(':');
  if (colon == std::string_view::npos) throw UsageError("surface reference needs <name>:<size>, got '" + std::string(ref) + "'");
  std::string_view name = ref.substr(0, colon);
  std::string_view size = ref.substr(colon + 1);
  auto x = size.find('x');
  auto two_dims = [&](std::string_view what) -> std::pair<int, int> {
    if (x == std::string_view::npos) throw UsageError(std::string(what) + " needs <rows>x<cols>");
    return {to_int(size.substr(0, x), "rows"), to_int(size.substr(x + 1), "cols")};
  };
  auto one_dim = [&]() {
    if (x != std::string_view::npos) throw UsageError(std::string(name) + " takes a single size");
    return to_int(size, "size");
  };
  if (name == "rectangle") {
    auto [r, c] = two_dims("rectangle");
    return build_rectangle(r, c);
  }
  if (name == "torus") {
    auto [r, c] = two_dims("torus");
    return build_torus(r, c);
  }
  if (name == "annulus") return build_annulus(one_dim());
  if (name == "mobius") return build_mobius(one_dim());
  if (name == "klein") return build_klein(one_dim());
  if (name == "projective") return build_projective(one_dim());
  if (name == "staircase") return build_staircase(one_dim());
  throw UsageError("unknown surface '" + std::string(name) + "'");
}

Constraint parse_constraint(const std::vector<std::string>& tokens) {
  Constraint c;
  for (const auto& joined : tokens) {
    for (const auto& tok : split(joined, ' ')) {
      auto eq = tok.find('=');
      if (eq == std::string::npos) throw UsageError("constraint token must be water=... or land=..., got '" + tok + "'");
      auto key = tok.substr(0, eq);
      auto squares = parse_int_list(tok.substr(eq + 1));
      auto& dest = key == "water" ? c.forced_water : key == "land" ? c.forced_land : throw UsageError("unknown constraint '" + key + "'");
      dest.insert(dest.end(), squares.begin(), squares.end());
    }
  }
  return c;
}

Clue parse_clue(std::string_view token) {
  auto colon = token.find(':');
  if (colon == std::string_view::npos) throw UsageError("clue must be <square>:<size>, got '" + std::string(token) + "'");
  return {to_int(token.substr(0, colon), "clue square"), to_int(token.substr(colon + 1), "clue size")};
}

PuzzleSpec parse_puzzle(std::string_view text) {
  PuzzleSpec p;
  bool has_rule = false;
  int line_no = 0;
  for (const auto& raw : split(text, '\n')) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    std::istringstream in(line);
    std::string key;
    if (!(in >> key)) continue;
    auto fail = [&](const std::string& what) { throw UsageError("puzzle line " + std::to_string(line_no) + ": " + what); };
    if (key == "surface") {
      if (!(in >> p.surface_ref)) fail("expected 'surface <name>:<size>'");
    } else if (key == "spec") {
      if (!(in >> p.spec_path)) fail("expected 'spec <path>'");
    } else if (key == "rule") {
      std::string r;
      if (!(in >> r)) fail("expected 'rule <square|loop>'");
      p.rule = parse_rule(r);
      has_rule = true;
    } else if (key == "clue") {
      Clue c;
      if (!(in >> c.square >> c.size)) fail("expected 'clue <square> <size>'");
      p.clues.push_back(c);
    } else {
      fail("unknown directive '" + key + "'");
    }
  }
  if (p.surface_ref.empty() == p.spec_path.empty()) throw UsageError("puzzle needs exactly one of 'surface' or 'spec'");
  if (!has_rule) throw UsageError("puzzle must state its rule");
  return p;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Nurikabe enumeration on square-tiled surfaces", "nurikabe"};
  app.require_subcommand(1);

  SurfaceArgs surface_args;
  RunArgs run_args;
  std::string format = "text";
  std::string rule_name = "loop";
  std::vector<std::string> constraint_tokens;
  std::vector<std::string> clue_tokens;
  std::string water_list;
  bool orbits = false;
  bool density = false;
  std::string family_name;
  std::string formula_name;
  std::string map_name = "all";
  std::string op_name;
  std::string puzzle_path;
  std::string central = "land";
  int min_n = 1, max_n = 10, k_value = 0, length = 0;

  auto* describe_cmd = app.add_subcommand("describe", "Print squares, gluings, vertex orbits and adjacency");
  surface_args.attach(describe_cmd);
  describe_cmd->add_option("--format", format, "text | json-lines | spec");

  auto add_counting = [&](CLI::App* cmd) {
    surface_args.attach(cmd);
    run_args.attach(cmd);
    cmd->add_option("--rule", rule_name, "square | loop");
    cmd->add_option("--constraint", constraint_tokens, "water=1,7 land=4");
    cmd->add_option("--format", format, "text | json-lines");
  };
  auto* count_cmd = app.add_subcommand("count", "Count valid colorings");
  add_counting(count_cmd);
  count_cmd->add_flag("--density", density, "Also print count / 2^squares");
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List valid colorings in ascending mask order");
  add_counting(enumerate_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Compare enumeration against closed forms");
  verify_cmd->add_option("--family", family_name, "rectangle | annulus | mobius | klein | projective | last-one | last-two | bicolumn")
      ->required();
  verify_cmd->add_option("--rule", rule_name, "square | loop");
  verify_cmd->add_option("--min-n", min_n);
  verify_cmd->add_option("--max-n", max_n);
  verify_cmd->add_option("--format", format, "text | json-lines | bfile");
  run_args.attach(verify_cmd);

  auto* refined_cmd = app.add_subcommand("refined", "Column-refined 2 x k rectangle counts");
  refined_cmd->add_option("--min-k", min_n);
  refined_cmd->add_option("--max-k", max_n);
  run_args.attach(refined_cmd);

  auto* bfile_cmd = app.add_subcommand("bfile", "Write an OEIS b-file from a formula or from enumeration");
  bfile_cmd->add_option("--formula", formula_name, "Formula id, e.g. J_closed");
  bfile_cmd->add_option("--family", family_name, "Enumerated family");
  bfile_cmd->add_option("--rule", rule_name, "square | loop");
  bfile_cmd->add_option("--min-n", min_n);
  bfile_cmd->add_option("--max-n", max_n);
  run_args.attach(bfile_cmd);

  auto* bijection_cmd = app.add_subcommand("bijection", "Check or apply cutting maps");
  bijection_cmd->require_subcommand(1);
  auto* check_cmd = bijection_cmd->add_subcommand("check", "Exhaustively check an induced bijection");
  check_cmd->add_option("--map", map_name, "Map name or 'all'");
  check_cmd->add_option("--min-k", min_n);
  check_cmd->add_option("--max-k", max_n);
  run_args.attach(check_cmd);
  auto* apply_cmd = bijection_cmd->add_subcommand("apply", "Apply red, red-inverse, contr or contr-inverse");
  apply_cmd->add_option("--op", op_name, "red | red-inverse | contr | contr-inverse")->required();
  apply_cmd->add_option("--length", length, "Strip length (2k for rectangles)")->required();
  apply_cmd->add_option("--water", water_list, "Water squares, e.g. 3,4");
  apply_cmd->add_option("--central", central, "water | land (contr-inverse)");

  auto* solve_cmd = app.add_subcommand("solve", "Solve a clue puzzle");
  surface_args.attach(solve_cmd);
  run_args.attach(solve_cmd);
  solve_cmd->add_option("--rule", rule_name, "square | loop");
  solve_cmd->add_option("--clue", clue_tokens, "square:size");
  solve_cmd->add_option("--puzzle", puzzle_path, "Puzzle file");
  solve_cmd->add_option("--format", format, "text | json-lines");

  auto* render_cmd = app.add_subcommand("render", "Draw a fundamental domain");
  surface_args.attach(render_cmd);
  render_cmd->add_option("--water", water_list, "Water squares, e.g. 2,3");
  render_cmd->add_option("--clue", clue_tokens, "square:size");
  render_cmd->add_flag("--orbits", orbits, "Mark vertex orbits");
  render_cmd->add_option("--format", format, "text | svg");

  std::vector<std::string> argv_storage{"nurikabe"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kError;
  }

  try {
    if (*describe_cmd) {
      check_format(format, {"text", "json-lines", "spec"});
      describe(surface_args.load(), format, out);
      return kOk;
    }

    if (*count_cmd || *enumerate_cmd) {
      check_format(format, {"text", "json-lines"});
      const auto surface = surface_args.load();
      const Rule rule = parse_rule(rule_name);
      const Constraint constraint = parse_constraint(constraint_tokens);
      const auto opts = run_args.options();
      if (*count_cmd) {
        auto r = count_valid(surface, rule, constraint, opts);
        if (format == "json-lines") {
          Json j{{"surface", r.surface}, {"rule", to_string(rule)}, {"forced_water", constraint.forced_water},
                 {"forced_land", constraint.forced_land}, {"count", r.count}};
          if (density) j["density"] = std::to_string(r.count) + "/" + std::to_string(std::uint64_t{1} << surface.size());
          out << j.dump() << '\n';
        } else {
          out << r.count << '\n';
          if (density) {
            auto d = validity_density(surface, rule, opts);
            out << "density " << r.count << '/' << (std::uint64_t{1} << surface.size()) << " = " << d.numerator()
                << '/' << d.denominator() << '\n';
          }
        }
      } else {
        auto r = enumerate_valid(surface, rule, constraint, opts);
        for (std::uint64_t m : *r.colorings) {
          if (format == "json-lines")
            out << Json{{"mask", m}, {"water", mask_to_squares(m)}}.dump() << '\n';
          else
            out << set_text(mask_to_squares(m)) << '\n';
        }
      }
      return kOk;
    }

    if (*verify_cmd) {
      check_format(format, {"text", "json-lines", "bfile"});
      auto report = verify(parse_family(family_name), parse_rule(rule_name), min_n, max_n, run_args.options());
      if (format == "bfile")
        for (const auto& row : report.rows) out << row.n << ' ' << row.oracle << '\n';
      else
        out << (format == "json-lines" ? format_report_json_lines(report) : format_report(report));
      return report.all_agree() ? kOk : kDisagreement;
    }

    if (*refined_cmd) {
      out << "k total last0 last1 last2 first2_last1 first2_last2\n";
      for (int k = min_n; k <= max_n; ++k) {
        auto r = refined_rectangle_counts(k, run_args.options());
        out << k << ' ' << r.total << ' ' << r.last0 << ' ' << r.last1 << ' ' << r.last2 << ' '
            << (r.first2_last1 ? std::to_string(*r.first2_last1) : "-") << ' '
            << (r.first2_last2 ? std::to_string(*r.first2_last2) : "-") << '\n';
      }
      return kOk;
    }

    if (*bfile_cmd) {
      if (formula_name.empty() == family_name.empty()) throw UsageError("give exactly one of --formula or --family");
      if (!formula_name.empty())
        out << bfile(parse_formula(formula_name), min_n, max_n, run_args.options());
      else
        out << bfile(parse_family(family_name), parse_rule(rule_name), min_n, max_n, run_args.options());
      return kOk;
    }

    if (*check_cmd) {
      std::vector<BijectionMap> maps =
          map_name == "all" ? all_bijection_maps() : std::vector<BijectionMap>{parse_bijection_map(map_name)};
      bool all_pass = true;
      for (BijectionMap m : maps) {
        for (int k = std::max(1, min_n); k <= max_n; ++k) {
          auto r = check_bijection(m, k, run_args.options());
          out << format_bijection_report(r);
          all_pass = all_pass && r.passed();
        }
      }
      return all_pass ? kOk : kDisagreement;
    }

    if (*apply_cmd) {
      const auto water = parse_int_list(water_list);
      if (op_name == "red") {
        Coloring rect = red(Coloring::from_squares(length, water));
        out << "water=" << set_text(rect.water_squares()) << '\n';
        RenderOptions ro;
        ro.coloring = rect;
        out << render_text(build_rectangle(2, length / 2), ro);
      } else if (op_name == "red-inverse") {
        Coloring strip = red_inverse(Coloring::from_squares(length, water));
        out << "water=" << set_text(strip.water_squares()) << '\n';
      } else if (op_name == "contr") {
        auto c = contr(Coloring::from_squares(length, water));
        out << "water=" << set_text(c.strip.water_squares()) << " central=" << (c.central_water ? "water" : "land")
            << '\n';
      } else if (op_name == "contr-inverse") {
        if (central != "water" && central != "land") throw UsageError("--central must be water or land");
        Coloring strip = contr_inverse(Coloring::from_squares(length, water), central == "water");
        out << "water=" << set_text(strip.water_squares()) << '\n';
      } else {
        throw UsageError("unknown --op '" + op_name + "'");
      }
      return kOk;
    }

    if (*solve_cmd) {
      check_format(format, {"text", "json-lines"});
      std::vector<Clue> clues;
      Rule rule = parse_rule(rule_name);
      SquareTiledSurface surface = [&] {
        if (puzzle_path.empty()) return surface_args.load();
        if (!surface_args.surface.empty() || !surface_args.spec.empty())
          throw UsageError("--puzzle already names its surface");
        PuzzleSpec p = parse_puzzle(read_file(puzzle_path));
        clues = p.clues;
        rule = p.rule;
        if (p.spec_path.empty()) return parse_surface_ref(p.surface_ref);
        // Relative spec paths are taken from the puzzle file's directory.
        std::filesystem::path spec = p.spec_path;
        if (spec.is_relative()) spec = std::filesystem::path(puzzle_path).parent_path() / spec;
        return parse_surface(read_file(spec.string()));
      }();
      for (const auto& t : clue_tokens) clues.push_back(parse_clue(t));
      auto sols = solve(surface, rule, clues, run_args.options());
      print_solutions(surface, clues, sols, format, out);
      return kOk;
    }

    if (*render_cmd) {
      check_format(format, {"text", "svg"});
      const auto surface = surface_args.load();
      RenderOptions ro;
      if (!water_list.empty()) ro.coloring = Coloring::from_squares(surface.size(), parse_int_list(water_list));
      for (const auto& t : clue_tokens) ro.clues.push_back(parse_clue(t));
      ro.orbit_markers = orbits;
      out << (format == "svg" ? render_svg(surface, ro) : render_text(surface, ro));
      return kOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace nurikabe::cli
