#pragma once

// Text format for link diagrams:
//
//   components <n>
//   freeloops <k>
//   X <a> <b> <c> <d>
//   arc <id> <component>
//
// One directive per line; `#` starts a comment; blank lines are ignored.
// `components` is required, `freeloops` defaults to 0, and each header may
// appear at most once. Unknown directives are rejected.

#include <sstream>
#include <string>

#include "bandlink/diagram.hpp"
#include "bandlink/errors.hpp"

namespace bandlink {

inline LinkDiagram parse_pd(const std::string& text) {
  LinkDiagram d;
  bool saw_components = false, saw_freeloops = false;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto bad = [&](const std::string& what) {
    fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    auto read_int = [&](const char* what) {
      long long v;
      if (!(ls >> v)) bad(std::string("expected ") + what);
      if (v < -1000000000 || v > 1000000000) bad(std::string(what) + " out of range");
      return (int)v;
    };
    auto end_of_line = [&] {
      std::string extra;
      if (ls >> extra) bad("trailing tokens");
    };
    if (tok == "components") {
      if (saw_components) bad("duplicate components header");
      saw_components = true;
      d.n_components = read_int("component count");
      end_of_line();
    } else if (tok == "freeloops") {
      if (saw_freeloops) bad("duplicate freeloops header");
      saw_freeloops = true;
      d.free_loops = read_int("free loop count");
      end_of_line();
    } else if (tok == "X") {
      Crossing x;
      for (int s = 0; s < 4; ++s) x.arcs[s] = read_int("arc id");
      end_of_line();
      d.crossings.push_back(x);
    } else if (tok == "arc") {
      int id = read_int("arc id");
      int comp = read_int("component label");
      end_of_line();
      if (d.arc_component.count(id)) bad("duplicate arc line for arc " + std::to_string(id));
      d.arc_component[id] = comp;
    } else {
      bad("unknown directive '" + tok + "'");
    }
  }
  if (!saw_components) fail(ErrorCode::ParseError, "missing components header");
  return d;
}

inline std::string serialize_pd(const LinkDiagram& d) {
  std::ostringstream out;
  out << "components " << d.n_components << "\n";
  out << "freeloops " << d.free_loops << "\n";
  for (const Crossing& x : d.crossings)
    out << "X " << x.a() << " " << x.b() << " " << x.c() << " " << x.d() << "\n";
  for (const auto& [arc, comp] : d.arc_component) out << "arc " << arc << " " << comp << "\n";
  return out.str();
}

}  // namespace bandlink
