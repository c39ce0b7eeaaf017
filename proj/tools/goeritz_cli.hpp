#pragma once

// Command-line front end. Output is JSON by default (every number as a
// decimal string) or plain text with --plain.
//
// Exit codes: 0 success, 2 parse/validation error, 3 non-planar rotation
// data, 4 enumeration cap exceeded, 1 anything else.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "goeritz/goeritz.hpp"
#include "goeritz/json_io.hpp"

namespace goeritz::cli {

using nlohmann::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitNonPlanar = 3;
inline constexpr int kExitCap = 4;

namespace detail {

inline std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path);
  if (!file) throw ParseError("cannot open " + path);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

inline std::string trimmed(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

// Diagram text, or a JSON object carrying a "diagram" string (realize output).
inline Diagram load_diagram(const std::string& text) {
  const std::string t = trimmed(text);
  if (!t.empty() && t.front() == '{') {
    const json j = parse_json(t);
    if (!j.contains("diagram") || !j["diagram"].is_string()) throw ParseError("JSON input has no \"diagram\" string");
    return parse_diagram(j["diagram"].get<std::string>());
  }
  return parse_diagram(text);
}

inline std::string plain_list(const std::vector<Integer>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : " ") + x.get_str();
  return s;
}

inline void print_plain_matrix(std::ostream& out, const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j).get_str();
    out << '\n';
  }
}

inline std::vector<Integer> parse_factor_list(const std::string& text) {
  std::vector<Integer> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trimmed(item);
    if (item.empty() && out.empty() && ss.eof()) break;
    Integer v;
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || v.set_str(item, 10) != 0) {
      throw ParseError("invalid factor \"" + item + "\" in list \"" + text + "\"");
    }
    out.push_back(v);
  }
  return out;
}

inline CountMethod parse_method(const std::string& name) {
  if (name == "enumerate") return CountMethod::enumerate;
  if (name == "automatic") return CountMethod::automatic;
  if (name == "linear") return CountMethod::linear;
  throw ParseError("unknown count method \"" + name + "\"");
}

inline Integer parse_modulus(const std::string& text) {
  Integer m;
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos || m.set_str(text, 10) != 0 || m < 2) {
    throw ParseError("modulus must be an integer >= 2, got \"" + text + "\"");
  }
  return m;
}

}  // namespace detail

struct Options {
  std::string input = "-";
  std::string second_input;
  std::string factors;
  std::string modulus;
  std::string method = "enumerate";
  std::size_t cap = 8;
  int shading = 0;
  bool adjusted = false;
  bool bruteforce = false;
  bool plain = false;
};

inline void cmd_regions(const Options& o, std::istream& in, std::ostream& out) {
  const Diagram d = detail::load_diagram(detail::read_input(o.input, in));
  const RegionMap rm = trace_regions(d);
  const auto comps = underlying_components(d);
  if (o.plain) {
    out << "regions " << rm.region_count << "\nunbounded " << rm.unbounded_region << "\ncomponents "
        << comps.crossings.size() << "\n";
    for (std::size_t c = 0; c < rm.quadrant_region.size(); ++c) {
      const auto& q = rm.quadrant_region[c];
      out << "crossing " << c << ": " << q[0] << ' ' << q[1] << ' ' << q[2] << ' ' << q[3] << '\n';
    }
    for (const auto& [inside, enclosing] : rm.circle_regions) out << "circle: " << inside << " in " << enclosing << '\n';
    return;
  }
  json j;
  j["region_count"] = std::to_string(rm.region_count);
  j["unbounded_region"] = std::to_string(rm.unbounded_region);
  j["components"] = std::to_string(comps.crossings.size());
  j["quadrants"] = json::array();
  for (const auto& q : rm.quadrant_region) {
    j["quadrants"].push_back({std::to_string(q[0]), std::to_string(q[1]), std::to_string(q[2]), std::to_string(q[3])});
  }
  j["circles"] = json::array();
  for (const auto& [inside, enclosing] : rm.circle_regions) {
    j["circles"].push_back({std::to_string(inside), std::to_string(enclosing)});
  }
  out << j.dump() << '\n';
}

inline void cmd_shade(const Options& o, std::istream& in, std::ostream& out) {
  const Diagram d = detail::load_diagram(detail::read_input(o.input, in));
  const RegionMap rm = trace_regions(d);
  const Shading s = shading_for(rm, o.shading);
  const auto [gs, gu] = checkerboard_graphs(d, rm, s);
  auto ids = [](const std::vector<RegionId>& v) {
    json a = json::array();
    for (RegionId r : v) a.push_back(std::to_string(r));
    return a;
  };
  if (o.plain) {
    auto line = [&](const char* name, const std::vector<RegionId>& v) {
      out << name;
      for (RegionId r : v) out << ' ' << r;
      out << '\n';
    };
    out << "shading " << s.index << '\n';
    line("shaded", gs.vertices);
    line("unshaded", gu.vertices);
    out << "beta_s " << gs.component_count << "\nbeta_u " << gu.component_count << '\n';
    return;
  }
  json j;
  j["shading"] = std::to_string(s.index);
  j["shaded_regions"] = ids(gs.vertices);
  j["unshaded_regions"] = ids(gu.vertices);
  j["beta_s"] = std::to_string(gs.component_count);
  j["beta_u"] = std::to_string(gu.component_count);
  out << j.dump() << '\n';
}

inline void cmd_matrix(const Options& o, std::istream& in, std::ostream& out) {
  const Diagram d = detail::load_diagram(detail::read_input(o.input, in));
  const GoeritzData g = goeritz_for(d, o.shading);
  const IntMatrix& m = o.adjusted ? g.adjusted : g.matrix;
  if (o.plain) {
    detail::print_plain_matrix(out, m);
  } else {
    out << matrix_to_json(m).dump() << '\n';
  }
}

// Matrix JSON, realize output (uses its "adjusted" matrix), or a diagram.
inline IntMatrix load_matrix(const Options& o, std::istream& in) {
  const std::string text = detail::read_input(o.input, in);
  const std::string t = detail::trimmed(text);
  if (!t.empty() && t.front() == '[') return matrix_from_json(detail::parse_json(t));
  if (!t.empty() && t.front() == '{') {
    const json j = detail::parse_json(t);
    if (j.contains("adjusted")) return matrix_from_json(j["adjusted"]);
    if (j.contains("matrix")) return matrix_from_json(j["matrix"]);
  }
  return goeritz_for(detail::load_diagram(text), o.shading).adjusted;
}

inline void cmd_snf(const Options& o, std::istream& in, std::ostream& out) {
  const IntMatrix m = load_matrix(o, in);
  const SNFResult r = smith_normal_form(m);
  if (o.plain) {
    out << "phi " << detail::plain_list(r.phi) << "\nrank " << r.rank << "\nU1\n";
    detail::print_plain_matrix(out, r.U1);
    out << "U2\n";
    detail::print_plain_matrix(out, r.U2);
    return;
  }
  json j;
  j["phi"] = integers_to_json(r.phi);
  j["rank"] = std::to_string(r.rank);
  j["cokernel"] = cokernel_descriptor(m).integral_form();
  j["U1"] = matrix_to_json(r.U1);
  j["U2"] = matrix_to_json(r.U2);
  out << j.dump() << '\n';
}

inline CountOptions count_options(const Options& o) {
  CountOptions opt;
  opt.enumeration_cap = o.cap;
  opt.method = detail::parse_method(o.method);
  return opt;
}

inline void cmd_colorings(const Options& o, std::istream& in, std::ostream& out) {
  const Diagram d = detail::load_diagram(detail::read_input(o.input, in));
  const ColoringReport report = dehn_structure(d, o.shading);
  std::optional<Integer> m;
  if (!o.modulus.empty()) m = detail::parse_modulus(o.modulus);
  if (o.bruteforce && !m) throw ParseError("--bruteforce needs a modulus (-m)");
  std::optional<Integer> brute;
  if (o.bruteforce) brute = dehn_count_bruteforce(d, *m, count_options(o));

  if (o.plain) {
    out << "phi " << detail::plain_list(report.phi) << "\ndehn " << report.dehn.product_form() << "\nfox "
        << report.fox.product_form() << '\n';
    if (m) {
      out << "dehn_order_mod_m " << structure_count(report, *m, ColoringKind::dehn).get_str() << "\nfox_order_mod_m "
          << structure_count(report, *m, ColoringKind::fox).get_str() << '\n';
    }
    if (brute) out << "bruteforce " << brute->get_str() << '\n';
    return;
  }
  json j;
  j["phi"] = integers_to_json(report.phi);
  j["dehn"] = report.dehn.product_form();
  j["fox"] = report.fox.product_form();
  if (m) {
    j["modulus"] = m->get_str();
    j["dehn_order_mod_m"] = structure_count(report, *m, ColoringKind::dehn).get_str();
    j["fox_order_mod_m"] = structure_count(report, *m, ColoringKind::fox).get_str();
  }
  if (brute) j["bruteforce"] = brute->get_str();
  out << j.dump() << '\n';
}

inline void cmd_fox(const Options& o, std::istream& in, std::ostream& out) {
  const Diagram d = detail::load_diagram(detail::read_input(o.input, in));
  const Integer m = detail::parse_modulus(o.modulus);
  const ColoringReport report = dehn_structure(d, o.shading);
  const Integer expected = structure_count(report, m, ColoringKind::fox);
  const Integer brute = fox_count_bruteforce(d, m, count_options(o));
  if (o.plain) {
    out << "phi " << detail::plain_list(report.phi) << "\narcs " << arc_structure(d).arc_count << "\nfox_order_mod_m "
        << expected.get_str() << "\nbruteforce " << brute.get_str() << '\n';
    return;
  }
  json j;
  j["phi"] = integers_to_json(report.phi);
  j["arcs"] = std::to_string(arc_structure(d).arc_count);
  j["modulus"] = m.get_str();
  j["fox_order_mod_m"] = expected.get_str();
  j["bruteforce"] = brute.get_str();
  out << j.dump() << '\n';
}

inline void cmd_realize(const Options& o, std::ostream& out) {
  const RealizationSpec spec{detail::parse_factor_list(o.factors)};
  const Realization r = realize(spec);
  if (o.plain) {
    // Comment lines keep the output readable as a diagram file.
    out << "# shading " << r.shading_index << '\n';
    for (std::size_t i = 0; i < r.goeritz.adjusted.rows(); ++i) {
      out << "#";
      for (std::size_t j = 0; j < r.goeritz.adjusted.cols(); ++j) out << ' ' << r.goeritz.adjusted(i, j).get_str();
      out << '\n';
    }
    out << serialize(r.diagram) << '\n';
    return;
  }
  json j;
  j["diagram"] = serialize(r.diagram);
  j["shading"] = std::to_string(r.shading_index);
  j["adjusted"] = matrix_to_json(r.goeritz.adjusted);
  out << j.dump() << '\n';
}

inline void cmd_compare(const Options& o, std::istream& in, std::ostream& out) {
  const std::string first = detail::read_input(o.input, in);
  const std::string second = detail::read_input(o.second_input, in);
  const Diagram a = detail::load_diagram(first);
  const Diagram b = detail::load_diagram(second);
  json j;
  bool all = true;
  for (int s = 0; s < 2; ++s) {
    const GoeritzData ga = goeritz_for(a, s);
    const GoeritzData gb = goeritz_for(b, s);
    const bool eq = coloring_equivalent(ga, gb);
    all = all && eq;
    if (o.plain) {
      out << "shading " << s << ": " << (eq ? "equivalent" : "not equivalent") << " (phi " << detail::plain_list(invariant_factors(ga.adjusted))
          << " | " << detail::plain_list(invariant_factors(gb.adjusted)) << ")\n";
    }
    json entry;
    entry["equivalent"] = eq;
    entry["phi_a"] = integers_to_json(invariant_factors(ga.adjusted));
    entry["phi_b"] = integers_to_json(invariant_factors(gb.adjusted));
    j["shading" + std::to_string(s)] = std::move(entry);
  }
  j["equivalent"] = j["shading0"]["equivalent"];
  j["consistent"] = j["shading0"]["equivalent"] == j["shading1"]["equivalent"];
  if (!o.plain) out << j.dump() << '\n';
}

/// Runs one invocation; args excludes the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Goeritz matrices, invariant factors and coloring groups of link diagrams", "goeritz"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool shading) {
    sub->add_flag("--plain", o.plain, "Plain-text output instead of JSON");
    if (shading) sub->add_option("--shading", o.shading, "Shading index (0: unbounded region unshaded)")->check(CLI::IsMember({0, 1}));
  };
  auto add_counting = [&](CLI::App* sub) {
    sub->add_option("--cap", o.cap, "Largest number of regions/arcs to enumerate")->capture_default_str();
    sub->add_option("--count-method", o.method, "enumerate | automatic | linear")->capture_default_str();
  };

  auto* regions = app.add_subcommand("regions", "Complementary regions by face tracing");
  regions->add_option("input", o.input, "Diagram file, or - for stdin")->required();
  add_common(regions, false);

  auto* shade = app.add_subcommand("shade", "Checkerboard shading and checkerboard graphs");
  shade->add_option("input", o.input, "Diagram file, or - for stdin")->required();
  add_common(shade, true);

  auto* matrix = app.add_subcommand("matrix", "Goeritz matrix");
  matrix->add_option("input", o.input, "Diagram file, or - for stdin")->required();
  matrix->add_flag("--adjusted", o.adjusted, "Emit the adjusted Goeritz matrix");
  add_common(matrix, true);

  auto* snf = app.add_subcommand("snf", "Smith normal form of a matrix JSON or of a diagram's adjusted Goeritz matrix");
  snf->add_option("input", o.input, "Matrix JSON, realize output, or diagram; - for stdin")->required();
  add_common(snf, true);

  auto* colorings = app.add_subcommand("colorings", "Dehn and Fox coloring group structure");
  colorings->add_option("input", o.input, "Diagram file, or - for stdin")->required();
  colorings->add_option("-m,--modulus", o.modulus, "Count colorings with values in Z/m");
  colorings->add_flag("--bruteforce", o.bruteforce, "Also count Dehn colorings by enumeration");
  add_common(colorings, true);
  add_counting(colorings);

  auto* fox = app.add_subcommand("fox", "Fox coloring count by enumeration against the structure formula");
  fox->add_option("input", o.input, "Diagram file, or - for stdin")->required();
  fox->add_option("-m,--modulus", o.modulus, "Values in Z/m")->required();
  add_common(fox, true);
  add_counting(fox);

  auto* realize_cmd = app.add_subcommand("realize", "Torus-link connected sum with prescribed invariant factors");
  realize_cmd->add_option("factors", o.factors, "Comma-separated factors phi_1,...,phi_{n-1}");
  add_common(realize_cmd, false);

  auto* compare = app.add_subcommand("compare", "Decide whether two diagrams have isomorphic Dehn coloring groups");
  compare->add_option("first", o.input, "Diagram file, or - for stdin")->required();
  compare->add_option("second", o.second_input, "Diagram file, or - for stdin")->required();
  add_common(compare, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "goeritz: " << e.what() << '\n';
    return kExitInvalid;
  }

  try {
    if (*regions) cmd_regions(o, in, out);
    else if (*shade) cmd_shade(o, in, out);
    else if (*matrix) cmd_matrix(o, in, out);
    else if (*snf) cmd_snf(o, in, out);
    else if (*colorings) cmd_colorings(o, in, out);
    else if (*fox) cmd_fox(o, in, out);
    else if (*realize_cmd) cmd_realize(o, out);
    else if (*compare) cmd_compare(o, in, out);
  } catch (const ParseError& e) {
    err << "goeritz: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const NonPlanarError& e) {
    err << "goeritz: " << e.what() << '\n';
    return kExitNonPlanar;
  } catch (const CapExceededError& e) {
    err << "goeritz: " << e.what() << '\n';
    return kExitCap;
  } catch (const std::invalid_argument& e) {
    err << "goeritz: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "goeritz: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace goeritz::cli
