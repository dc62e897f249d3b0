#include "hscheck/dot.hpp"

#include <sstream>

namespace hscheck {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string update_text(const Update& u) {
  std::ostringstream out;
  bool first = true;
  auto sep = [&] {
    if (!first) out << ", ";
    first = false;
  };
  auto assign_text = [](const Assignment& a) {
    std::string s = a.target;
    if (a.index) s += "[" + to_string(a.index) + "]";
    return s + " := " + to_string(a.value);
  };
  for (const auto& item : u.items) {
    if (const auto* a = std::get_if<Assignment>(&item)) {
      sep();
      out << assign_text(*a);
    } else if (const auto* r = std::get_if<ClockReset>(&item)) {
      sep();
      out << r->clock << " := 0";
    } else if (const auto* f = std::get_if<FirstMatch>(&item)) {
      sep();
      out << "first " << f->binder << " in [" << f->lo << ".." << f->hi << "] with "
          << to_string(f->pred) << ": ";
      for (size_t i = 0; i < f->assigns.size(); ++i)
        out << (i ? ", " : "") << assign_text(f->assigns[i]);
    }
  }
  return out.str();
}

}  // namespace

std::string template_to_dot(const ProcessTemplate& t) {
  std::ostringstream out;
  out << "digraph " << t.name << " {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=circle];\n";
  out << "  __init [shape=point, label=\"\"];\n";
  std::string initial;
  auto join_lines = [](const std::vector<std::string>& lines) {
    std::string text;
    for (size_t i = 0; i < lines.size(); ++i) {
      if (i) text += "\\n";
      text += escape(lines[i]);
    }
    return text;
  };
  for (const auto& loc : t.locations) {
    std::vector<std::string> lines{loc.name};
    if (loc.invariant) lines.push_back(to_string(loc.invariant));
    out << "  " << loc.name << " [label=\"" << join_lines(lines) << "\"";
    if (loc.kind == LocationKind::Committed) out << ", peripheries=2, style=bold";
    out << "];\n";
    if (loc.initial) initial = loc.name;
  }
  if (!initial.empty()) out << "  __init -> " << initial << ";\n";
  for (const auto& e : t.edges) {
    std::vector<std::string> lines;
    if (!e.name.empty()) lines.push_back(e.name);
    if (e.guard) lines.push_back("guard: " + to_string(e.guard));
    if (e.sync.kind == SyncKind::Send) lines.push_back(e.sync.channel + "!");
    if (e.sync.kind == SyncKind::Receive) lines.push_back(e.sync.channel + "?");
    if (const std::string upd = update_text(e.update); !upd.empty()) lines.push_back(upd);
    out << "  " << e.source << " -> " << e.target << " [label=\"" << join_lines(lines)
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::vector<std::string> system_to_dot(const SystemDef& sys) {
  std::vector<std::string> graphs;
  graphs.reserve(sys.templates.size());
  for (const auto& t : sys.templates) graphs.push_back(template_to_dot(t));
  return graphs;
}

}  // namespace hscheck
