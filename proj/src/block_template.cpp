#include "crosscap/block_template.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "crosscap/errors.hpp"

namespace crosscap {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw ParseError("template line " + std::to_string(line) + ": " + what);
}

int to_int(int line, const std::string& tok) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) fail(line, "bad integer '" + tok + "'");
    return v;
  } catch (const std::logic_error&) {
    fail(line, "bad integer '" + tok + "'");
  }
}

int to_sign(int line, const std::string& tok) {
  if (tok == "+") return 1;
  if (tok == "-") return -1;
  fail(line, "expected + or -, got '" + tok + "'");
}

char sign_char(int s) { return s > 0 ? '+' : '-'; }

// "v" or "v@di,dj"
TemplateEntry parse_entry(int line, const std::string& tok) {
  TemplateEntry e;
  auto at = tok.find('@');
  e.vertex = to_int(line, tok.substr(0, at));
  if (at != std::string::npos) {
    auto rest = tok.substr(at + 1);
    auto comma = rest.find(',');
    if (comma == std::string::npos) fail(line, "offset must be @di,dj in '" + tok + "'");
    e.di = to_int(line, rest.substr(0, comma));
    e.dj = to_int(line, rest.substr(comma + 1));
  }
  return e;
}

std::pair<int, int> generator_offset(const std::string& g) {
  if (g == "rho1") return {1, 0};
  if (g == "rho2") return {0, 1};
  throw ValidationError("unknown generator '" + g + "'");
}

}  // namespace

int BlockTemplate::curve_index(const std::string& id) const {
  for (std::size_t i = 0; i < curves.size(); ++i)
    if (curves[i].id == id) return static_cast<int>(i);
  return -1;
}

bool BlockTemplate::is_alpha(const std::string& id) const {
  return id == phi_red || std::find(red.begin(), red.end(), id) != red.end();
}

bool BlockTemplate::is_beta(const std::string& id) const {
  return id == phi_blue || std::find(blue.begin(), blue.end(), id) != blue.end();
}

BlockTemplate parse_block_template(const std::string& text) {
  BlockTemplate t;
  std::istringstream is(text);
  std::string raw;
  int number = 0;
  bool header = false, ended = false;
  std::map<std::string, std::vector<TemplateEntry>> paths;
  while (std::getline(is, raw)) {
    ++number;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tk;
    std::string tok;
    while (ls >> tok) tk.push_back(tok);
    if (tk.empty()) continue;
    if (ended) fail(number, "content after 'end'");
    const auto& key = tk[0];
    if (!header) {
      if (key != "crosscap-template" || tk.size() != 2) fail(number, "missing 'crosscap-template' header");
      if (to_int(number, tk[1]) != 1) fail(number, "unsupported template version " + tk[1]);
      header = true;
      continue;
    }
    if (key == "generator") {
      if (tk.size() != 4) fail(number, "generator needs a name and an offset");
      auto want = generator_offset(tk[1]);
      if (to_int(number, tk[2]) != want.first || to_int(number, tk[3]) != want.second)
        fail(number, "generator " + tk[1] + " has a fixed offset");
    } else if (key == "family") {
      if (tk.size() < 3) fail(number, "family needs a name and curves");
      std::vector<std::string> ids(tk.begin() + 2, tk.end());
      if (tk[1] == "R") {
        t.red = ids;
      } else if (tk[1] == "B") {
        t.blue = ids;
      } else if (tk[1] == "phi-a" || tk[1] == "phi-b") {
        if (ids.size() != 1) fail(number, tk[1] + " names exactly one curve");
        (tk[1] == "phi-a" ? t.phi_red : t.phi_blue) = ids[0];
      } else {
        fail(number, "unknown family '" + tk[1] + "'");
      }
    } else if (key == "within-family") {
      if (tk.size() != 3) fail(number, "within-family needs two curves");
      t.within_family.emplace_back(tk[1], tk[2]);
    } else if (key == "crosscut") {
      if (tk.size() != 4) fail(number, "crosscut needs a generator and two curves");
      t.crosscuts.push_back({tk[1], tk[2], tk[3]});
    } else if (key == "auxiliary") {
      if (tk.size() < 3 || tk[2] != "meets") fail(number, "expected 'auxiliary <name> meets <curves>'");
      t.auxiliary_meets.assign(tk.begin() + 3, tk.end());
    } else if (key == "block-vertex") {
      if (tk.size() != 4) fail(number, "block-vertex needs an id and two curves");
      if (to_int(number, tk[1]) != static_cast<int>(t.vertices.size()))
        fail(number, "block vertices must be numbered consecutively from 0");
      t.vertices.emplace_back(tk[2], tk[3]);
    } else if (key == "curve") {
      if (tk.size() != 5) fail(number, "curve needs id, sidedness, marking and twist sign");
      if (tk[2] != "two-sided") fail(number, "block template curves must be two-sided");
      t.curves.push_back({tk[1], to_sign(number, tk[3]), to_sign(number, tk[4]), {}});
    } else if (key == "path") {
      if (tk.size() < 4 || tk.size() % 2 != 0) fail(number, "path needs a curve and vertex/sign pairs");
      auto& p = paths[tk[1]];
      if (!p.empty()) fail(number, "duplicate path for " + tk[1]);
      for (std::size_t i = 2; i < tk.size(); i += 2) {
        auto e = parse_entry(number, tk[i]);
        e.sign = to_sign(number, tk[i + 1]);
        p.push_back(e);
      }
    } else if (key == "mark") {
      if (tk.size() != 5) fail(number, "mark needs name, vertex, slot, side");
      t.marks.push_back({tk[1], to_int(number, tk[2]), to_int(number, tk[3]), to_sign(number, tk[4])});
    } else if (key == "end") {
      ended = true;
    } else {
      fail(number, "unknown keyword '" + key + "'");
    }
  }
  if (!header) throw ParseError("empty template");
  if (!ended) throw ParseError("template missing 'end'");
  for (auto& [id, p] : paths) {
    int c = t.curve_index(id);
    if (c < 0) throw ParseError("path for undeclared curve " + id);
    t.curves[c].path = std::move(p);
  }
  return t;
}

std::string serialize_block_template(const BlockTemplate& t) {
  std::ostringstream os;
  os << "crosscap-template 1\n";
  os << "generator rho1 1 0\ngenerator rho2 0 1\n";
  auto family = [&](const char* name, const std::vector<std::string>& ids) {
    os << "family " << name;
    for (const auto& id : ids) os << ' ' << id;
    os << '\n';
  };
  family("R", t.red);
  family("B", t.blue);
  family("phi-a", {t.phi_red});
  family("phi-b", {t.phi_blue});
  for (const auto& [a, b] : t.within_family) os << "within-family " << a << ' ' << b << '\n';
  for (const auto& c : t.crosscuts) os << "crosscut " << c.generator << ' ' << c.own << ' ' << c.other << '\n';
  if (!t.auxiliary_meets.empty()) {
    os << "auxiliary gamma meets";
    for (const auto& id : t.auxiliary_meets) os << ' ' << id;
    os << '\n';
  }
  for (std::size_t v = 0; v < t.vertices.size(); ++v)
    os << "block-vertex " << v << ' ' << t.vertices[v].first << ' ' << t.vertices[v].second << '\n';
  for (const auto& c : t.curves)
    os << "curve " << c.id << " two-sided " << sign_char(c.marking) << ' ' << sign_char(c.twist_sign) << '\n';
  for (const auto& c : t.curves) {
    os << "path " << c.id;
    for (const auto& e : c.path) {
      os << ' ' << e.vertex;
      if (e.di != 0 || e.dj != 0) os << '@' << e.di << ',' << e.dj;
      os << ' ' << sign_char(e.sign);
    }
    os << '\n';
  }
  for (const auto& m : t.marks)
    os << "mark " << m.name << ' ' << m.vertex << ' ' << m.slot << ' ' << sign_char(m.side) << '\n';
  os << "end\n";
  return os.str();
}

void validate_block_template(const BlockTemplate& t) {
  auto bad = [](const std::string& what) { throw ValidationError("block template: " + what); };
  std::set<std::string> ids;
  for (const auto& c : t.curves) {
    if (!ids.insert(c.id).second) bad("duplicate curve " + c.id);
    if (c.path.empty()) bad("curve " + c.id + " has no path");
  }
  std::set<std::string> assigned;
  auto assign = [&](const std::string& id) {
    if (!ids.count(id)) bad("family member " + id + " is not a declared curve");
    if (!assigned.insert(id).second) bad("curve " + id + " belongs to two families");
  };
  for (const auto& id : t.red) assign(id);
  for (const auto& id : t.blue) assign(id);
  if (t.phi_red.empty() || t.phi_blue.empty()) bad("both single-curve families must be declared");
  assign(t.phi_red);
  assign(t.phi_blue);
  if (assigned.size() != ids.size()) bad("every curve must belong to a family");

  // Each block vertex is visited exactly once by each of its two curves.
  std::vector<std::map<std::string, int>> seen(t.vertices.size());
  std::vector<std::map<std::string, std::pair<int, int>>> offsets(t.vertices.size());
  for (const auto& c : t.curves) {
    for (const auto& e : c.path) {
      if (e.vertex < 0 || e.vertex >= static_cast<int>(t.vertices.size()))
        bad("curve " + c.id + " visits unknown vertex " + std::to_string(e.vertex));
      const auto& [f, s] = t.vertices[e.vertex];
      if (c.id != f && c.id != s) bad("curve " + c.id + " visits vertex " + std::to_string(e.vertex) + " of " + f + "/" + s);
      if (++seen[e.vertex][c.id] > 1) bad("curve " + c.id + " visits vertex " + std::to_string(e.vertex) + " twice");
      offsets[e.vertex][c.id] = {e.di, e.dj};
    }
  }
  std::map<std::tuple<std::string, std::string, std::string>, int> cut_count;
  for (std::size_t v = 0; v < t.vertices.size(); ++v) {
    const auto& [f, s] = t.vertices[v];
    std::string where = "vertex " + std::to_string(v);
    if (f == s) bad(where + " lists the same curve twice");
    if (!seen[v].count(f) || !seen[v].count(s)) bad(where + " is not visited by both of its curves");
    bool mixed = (t.is_alpha(f) && t.is_beta(s)) || (t.is_beta(f) && t.is_alpha(s));
    bool declared = std::any_of(t.within_family.begin(), t.within_family.end(), [&](const auto& p) {
      return (p.first == f && p.second == s) || (p.first == s && p.second == f);
    });
    if (!mixed && !declared) bad(where + " is an undeclared crossing inside one family");
    auto of = offsets[v][f], os = offsets[v][s];
    if (of == os) continue;
    // Relative offset of the second curve's block, seen from the first.
    bool matched = false;
    for (const auto& c : t.crosscuts) {
      auto g = generator_offset(c.generator);
      for (int flip = 0; flip < 2 && !matched; ++flip) {
        const auto& own = flip ? s : f;
        const auto& other = flip ? f : s;
        auto oo = flip ? os : of;
        auto ot = flip ? of : os;
        if (own == c.own && other == c.other && ot.first - oo.first == -g.first && ot.second - oo.second == -g.second) {
          matched = true;
          ++cut_count[{c.generator, c.own, c.other}];
        }
      }
    }
    if (!matched) bad(where + " is a cross-block crossing that was not declared");
  }
  for (const auto& c : t.crosscuts) {
    generator_offset(c.generator);
    if (cut_count[{c.generator, c.own, c.other}] != 1)
      bad("crosscut " + c.own + "/" + c.other + " must occur exactly once");
  }
  for (const auto& id : t.auxiliary_meets) {
    if (!ids.count(id)) bad("auxiliary curve meets unknown curve " + id);
    if (std::find(t.red.begin(), t.red.end(), id) != t.red.end() ||
        std::find(t.blue.begin(), t.blue.end(), id) != t.blue.end())
      bad("auxiliary curve must be disjoint from the twisted families");
  }
  std::set<std::string> mark_names;
  for (const auto& m : t.marks) {
    if (!mark_names.insert(m.name).second) bad("duplicate mark " + m.name);
    if (m.vertex < 0 || m.vertex >= static_cast<int>(t.vertices.size()) || m.slot < 0 || m.slot > 3)
      bad("mark " + m.name + " anchored outside the block");
  }
}

const BlockTemplate& default_template() {
  static const BlockTemplate t = [] {
    auto parsed = parse_block_template(default_template_text());
    validate_block_template(parsed);
    return parsed;
  }();
  return t;
}

BlockTemplate load_template(const std::string& path) {
  std::string file = path;
  if (file.empty()) {
    if (const char* env = std::getenv("CROSSCAP_TEMPLATE"); env && *env) file = env;
  }
  if (file.empty()) return default_template();
  std::ifstream in(file);
  if (!in) throw ParseError("cannot read template " + file);
  std::stringstream ss;
  ss << in.rdbuf();
  auto t = parse_block_template(ss.str());
  validate_block_template(t);
  return t;
}

}  // namespace crosscap
