#include "crosscap/text_format.hpp"

#include <sstream>
#include <vector>

#include "crosscap/errors.hpp"

namespace crosscap {

namespace {

char sign_char(int s) { return s > 0 ? '+' : '-'; }

struct Line {
  int number;
  std::vector<std::string> tokens;
};

[[noreturn]] void fail(const Line& l, const std::string& what) {
  throw ParseError("line " + std::to_string(l.number) + ": " + what);
}

int to_int(const Line& l, const std::string& tok) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) fail(l, "bad integer '" + tok + "'");
    return v;
  } catch (const std::logic_error&) {
    fail(l, "bad integer '" + tok + "'");
  }
}

int to_sign(const Line& l, const std::string& tok) {
  if (tok == "+") return 1;
  if (tok == "-") return -1;
  fail(l, "expected + or -, got '" + tok + "'");
}

void want(const Line& l, std::size_t count) {
  if (l.tokens.size() != count) fail(l, "expected " + std::to_string(count - 1) + " fields after '" + l.tokens[0] + "'");
}

}  // namespace

std::string serialize_graph_body(const SignedRibbonGraph& g) {
  std::ostringstream os;
  for (int v = 0; v < g.vertex_count(); ++v) {
    os << "vertex " << v;
    for (int h : g.rotation(v)) os << ' ' << h;
    os << '\n';
  }
  for (const auto& e : g.edges()) os << "edge " << e.a << ' ' << e.b << ' ' << sign_char(e.sign) << '\n';
  for (const auto& m : g.marks())
    os << "mark " << m.anchor.half_edge << ' ' << sign_char(m.anchor.side) << ' ' << m.count << ' '
       << (m.open ? "open" : "closed") << '\n';
  for (const auto& b : g.boundary()) os << "boundary " << b.half_edge << ' ' << sign_char(b.side) << '\n';
  return os.str();
}

std::string serialize(const CurveSystem& s, const std::optional<PennerWord>& word) {
  std::ostringstream os;
  os << "crosscap-curves " << kFormatVersion << '\n';
  os << serialize_graph_body(s.realization());
  for (int c = 0; c < s.size(); ++c) {
    const auto& cv = s.curves()[c];
    os << "curve " << cv.id << ' ' << (cv.two_sided ? "two-sided" : "one-sided") << ' ' << sign_char(cv.marking) << ' '
       << sign_char(cv.twist_sign) << ' ' << s.starts()[c] << '\n';
  }
  for (const auto& [name, sym] : s.symmetries()) {
    os << "symmetry " << name;
    for (int h : sym.half_edges) os << ' ' << h;
    os << '\n';
  }
  if (word) {
    os << "word\n";
    os << "basis";
    for (const auto& b : word->basis) os << ' ' << b;
    os << '\n';
    for (const auto& mv : word->moves) {
      if (const auto* t = std::get_if<Twist>(&mv)) {
        os << "twist " << t->curve << ' ' << t->power << '\n';
      } else {
        const auto& r = std::get<Rotate>(mv);
        os << "rotate " << r.symmetry << ' ' << r.exponent << '\n';
      }
    }
  }
  os << "end\n";
  return os.str();
}

namespace {

std::vector<Line> tokenize(const std::string& text) {
  std::istringstream is(text);
  std::vector<Line> lines;
  std::string raw;
  int number = 0;
  while (std::getline(is, raw)) {
    ++number;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line l{number, {}};
    std::string tok;
    while (ls >> tok) l.tokens.push_back(tok);
    if (!l.tokens.empty()) lines.push_back(std::move(l));
  }
  return lines;
}

// Returns false when the line is not a graph line.
bool graph_line(const Line& l, std::vector<std::vector<int>>& rotations, std::vector<EdgeRecord>& edges,
                std::vector<FaceMark>& marks, std::vector<Dart>& boundary) {
  const auto& t = l.tokens;
  const auto& key = t[0];
  if (key == "vertex") {
    if (t.size() < 3) fail(l, "vertex needs an id and half-edges");
    if (to_int(l, t[1]) != static_cast<int>(rotations.size())) fail(l, "vertices must be numbered consecutively from 0");
    std::vector<int> rot;
    for (std::size_t j = 2; j < t.size(); ++j) rot.push_back(to_int(l, t[j]));
    rotations.push_back(std::move(rot));
  } else if (key == "edge") {
    want(l, 4);
    edges.push_back({to_int(l, t[1]), to_int(l, t[2]), to_sign(l, t[3])});
  } else if (key == "mark") {
    want(l, 5);
    if (t[4] != "closed" && t[4] != "open") fail(l, "mark kind must be closed or open");
    marks.push_back({{to_int(l, t[1]), to_sign(l, t[2])}, to_int(l, t[3]), t[4] == "open"});
  } else if (key == "boundary") {
    want(l, 3);
    boundary.push_back({to_int(l, t[1]), to_sign(l, t[2])});
  } else {
    return false;
  }
  return true;
}

}  // namespace

SignedRibbonGraph parse_graph_body(const std::string& text) {
  std::vector<std::vector<int>> rotations;
  std::vector<EdgeRecord> edges;
  std::vector<FaceMark> marks;
  std::vector<Dart> boundary;
  for (const auto& l : tokenize(text))
    if (!graph_line(l, rotations, edges, marks, boundary)) fail(l, "unknown keyword '" + l.tokens[0] + "'");
  return SignedRibbonGraph(std::move(rotations), std::move(edges), std::move(marks), std::move(boundary));
}

CurveDocument parse_curve_document(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty() || lines[0].tokens[0] != "crosscap-curves") throw ParseError("missing 'crosscap-curves' header");
  want(lines[0], 2);
  if (to_int(lines[0], lines[0].tokens[1]) != kFormatVersion)
    fail(lines[0], "unsupported format version " + lines[0].tokens[1]);

  std::vector<std::vector<int>> rotations;
  std::vector<EdgeRecord> edges;
  std::vector<MarkedCurve> curves;
  std::vector<int> starts;
  std::vector<FaceMark> marks;
  std::vector<Dart> boundary;
  std::map<std::string, std::vector<int>> symmetries;
  std::optional<PennerWord> word;
  bool ended = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    const auto& t = l.tokens;
    const auto& key = t[0];
    if (ended) fail(l, "content after 'end'");
    if (word && key != "basis" && key != "twist" && key != "rotate" && key != "end")
      fail(l, "'" + key + "' not allowed inside the word section");
    if (graph_line(l, rotations, edges, marks, boundary)) {
      continue;
    } else if (key == "curve") {
      want(l, 6);
      if (t[2] != "two-sided" && t[2] != "one-sided") fail(l, "sidedness must be two-sided or one-sided");
      curves.push_back({t[1], t[2] == "two-sided", to_sign(l, t[3]), to_sign(l, t[4])});
      starts.push_back(to_int(l, t[5]));
    } else if (key == "symmetry") {
      if (t.size() < 2) fail(l, "symmetry needs a name");
      std::vector<int> map;
      for (std::size_t j = 2; j < t.size(); ++j) map.push_back(to_int(l, t[j]));
      if (!symmetries.emplace(t[1], std::move(map)).second) fail(l, "duplicate symmetry " + t[1]);
    } else if (key == "word") {
      want(l, 1);
      word.emplace();
    } else if (key == "basis") {
      if (!word) fail(l, "'basis' outside the word section");
      word->basis.assign(t.begin() + 1, t.end());
    } else if (key == "twist") {
      want(l, 3);
      if (!word) fail(l, "'twist' outside the word section");
      word->moves.push_back(Twist{t[1], to_int(l, t[2])});
    } else if (key == "rotate") {
      want(l, 3);
      if (!word) fail(l, "'rotate' outside the word section");
      word->moves.push_back(Rotate{t[1], to_int(l, t[2])});
    } else if (key == "end") {
      want(l, 1);
      ended = true;
    } else {
      fail(l, "unknown keyword '" + key + "'");
    }
  }
  if (!ended) throw ParseError("missing 'end'");
  SignedRibbonGraph g(std::move(rotations), std::move(edges), std::move(marks), std::move(boundary));
  return {CurveSystem(std::move(g), std::move(curves), std::move(starts), std::move(symmetries)), std::move(word)};
}

}  // namespace crosscap
