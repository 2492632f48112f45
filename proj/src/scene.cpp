#include "diskdraw/scene.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

namespace diskdraw {

namespace {

struct Token {
  std::string text;
  int column = 1;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = line.find('#') == std::string::npos ? line.size() : line.find('#');
  while (i < n) {
    const char c = line[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
    } else if (c == ';') {
      out.push_back({";", static_cast<int>(i) + 1});
      ++i;
    } else {
      const std::size_t start = i;
      while (i < n && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != ';') ++i;
      out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
  }
  return out;
}

class LineReader {
 public:
  LineReader(int line_no, std::vector<Token> tokens, int end_column)
      : line_(line_no), tokens_(std::move(tokens)), end_column_(end_column) {}

  bool done() const { return pos_ >= tokens_.size(); }
  const Token* peek() const { return done() ? nullptr : &tokens_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) const {
    const int col = done() ? end_column_ : tokens_[pos_].column;
    throw ParseError(line_, col, msg);
  }
  [[noreturn]] void fail_at(const Token& t, const std::string& msg) const {
    throw ParseError(line_, t.column, msg);
  }

  const Token& word(const char* what) {
    if (done()) fail(std::string("expected ") + what);
    return tokens_[pos_++];
  }

  double number(const char* what) {
    if (done()) fail(std::string("expected ") + what);
    const Token& t = tokens_[pos_];
    double v = 0.0;
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    if (*first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || !std::isfinite(v))
      fail(std::string("expected ") + what + ", got '" + t.text + "'");
    ++pos_;
    return v;
  }

  void expect_end() {
    if (!done()) fail("unexpected token '" + tokens_[pos_].text + "'");
  }

  int line() const { return line_; }

 private:
  int line_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int end_column_;
};

Primitive read_primitive(LineReader& in, DiskModel model) {
  const Token& kind = in.word("primitive");
  Primitive prim;
  if (kind.text == "point") {
    const double x = in.number("X");
    prim = SinglePoint{{x, in.number("Y")}};
  } else if (kind.text == "segment") {
    const double x1 = in.number("X1"), y1 = in.number("Y1");
    const double x2 = in.number("X2"), y2 = in.number("Y2");
    prim = Segment{{x1, y1}, {x2, y2}};
  } else if (kind.text == "arc") {
    const double cx = in.number("CX"), cy = in.number("CY");
    const double r = in.number("R");
    const double a0 = in.number("A0"), a1 = in.number("A1");
    bool ccw = true;
    if (const Token* t = in.peek(); t && (t->text == "cw" || t->text == "ccw")) {
      ccw = t->text == "ccw";
      in.word("orientation");
    }
    prim = Arc{{cx, cy}, r, a0, a1, ccw};
  } else if (kind.text == "halfplane") {
    const double nx = in.number("NX"), ny = in.number("NY");
    prim = OffsetHalfPlane{{nx, ny}, in.number("OFFSET"), 1.0, model == DiskModel::Closed};
  } else if (kind.text == "plane") {
    prim = WholePlane{};
  } else {
    in.fail_at(kind, "unknown primitive '" + kind.text + "'");
  }
  try {
    validate(prim);
  } catch (const Error& e) {
    in.fail_at(kind, e.what());
  }
  return prim;
}

PathPiece read_piece(LineReader& in) {
  const Token& kind = in.word("piece kind");
  if (kind.text == "segment") {
    const double x1 = in.number("X1"), y1 = in.number("Y1");
    const double x2 = in.number("X2"), y2 = in.number("Y2");
    return Segment{{x1, y1}, {x2, y2}};
  }
  if (kind.text == "arc") {
    const double cx = in.number("CX"), cy = in.number("CY");
    const double r = in.number("R");
    const double a0 = in.number("A0"), a1 = in.number("A1");
    const Token& o = in.word("ccw or cw");
    if (o.text != "ccw" && o.text != "cw") in.fail_at(o, "expected ccw or cw");
    if (!(r > 0.0)) in.fail_at(kind, "arc radius must be positive");
    return Arc{{cx, cy}, r, a0, a1, o.text == "ccw"};
  }
  in.fail_at(kind, "unknown piece '" + kind.text + "'");
}

}  // namespace

DrawingScript Scene::script() const { return DrawingScript::relaxed(model, strokes); }

Scene parse_scene(const std::string& text) {
  Scene scene;
  bool have_model = false;
  std::optional<std::vector<PathPiece>> region;
  int region_line = 0;

  std::istringstream lines(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(lines, raw)) {
    ++line_no;
    auto tokens = tokenize(raw);
    if (tokens.empty()) continue;
    LineReader in(line_no, std::move(tokens), static_cast<int>(raw.size()) + 1);
    const Token& head = in.word("directive");

    if (!have_model && head.text != "model") in.fail_at(head, "expected 'model open|closed' first");

    if (region) {
      if (head.text == "piece") {
        region->push_back(read_piece(in));
        in.expect_end();
      } else if (head.text == "end") {
        in.expect_end();
        try {
          scene.regions.emplace_back(std::move(*region));
        } catch (const Error& e) {
          throw ParseError(region_line, 1, std::string("invalid region: ") + e.what());
        }
        region.reset();
      } else {
        in.fail_at(head, "expected 'piece' or 'end' inside region");
      }
      continue;
    }

    if (head.text == "model") {
      if (have_model) in.fail_at(head, "model declared twice");
      const Token& m = in.word("open or closed");
      if (m.text == "open") scene.model = DiskModel::Open;
      else if (m.text == "closed") scene.model = DiskModel::Closed;
      else in.fail_at(m, "expected open or closed, got '" + m.text + "'");
      in.expect_end();
      have_model = true;
    } else if (head.text == "stroke") {
      const Token& tool = in.word("pencil or eraser");
      Tool t;
      if (tool.text == "pencil") t = Tool::Pencil;
      else if (tool.text == "eraser") t = Tool::Eraser;
      else in.fail_at(tool, "expected pencil or eraser, got '" + tool.text + "'");
      std::vector<Primitive> prims;
      prims.push_back(read_primitive(in, scene.model));
      while (!in.done()) {
        const Token& sep = in.word("';'");
        if (sep.text != ";") in.fail_at(sep, "unexpected token '" + sep.text + "'");
        prims.push_back(read_primitive(in, scene.model));
      }
      scene.strokes.push_back({t, CenterSet(std::move(prims))});
    } else if (head.text == "construction") {
      if (scene.construction) in.fail_at(head, "only one construction per scene");
      const Token& name = in.word("construction name");
      if (name.text != "chessboard" && name.text != "rounded" && name.text != "snake" &&
          name.text != "sharp")
        in.fail_at(name, "unknown construction '" + name.text + "'");
      scene.construction = ConstructionRef{name.text, in.number("parameter")};
      in.expect_end();
    } else if (head.text == "region") {
      in.expect_end();
      region.emplace();
      region_line = line_no;
    } else {
      in.fail_at(head, "unknown directive '" + head.text + "'");
    }
  }
  if (!have_model) throw ParseError(1, 1, "expected 'model open|closed' first");
  if (region) throw ParseError(region_line, 1, "region is not closed with 'end'");
  return scene;
}

DrawingScript parse_script(const std::string& text) { return parse_scene(text).script(); }

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string primitive_text(const Primitive& prim) {
  return std::visit(
      [](const auto& p) -> std::string {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, SinglePoint>) {
          return "point " + num(p.p.x) + " " + num(p.p.y);
        } else if constexpr (std::is_same_v<T, Segment>) {
          return "segment " + num(p.a.x) + " " + num(p.a.y) + " " + num(p.b.x) + " " + num(p.b.y);
        } else if constexpr (std::is_same_v<T, Arc>) {
          return "arc " + num(p.center.x) + " " + num(p.center.y) + " " + num(p.radius) + " " +
                 num(p.start) + " " + num(p.end) + (p.ccw ? "" : " cw");
        } else if constexpr (std::is_same_v<T, OffsetHalfPlane>) {
          // Only offset + margin matters for the neighbourhood.
          return "halfplane " + num(p.normal.x) + " " + num(p.normal.y) + " " +
                 num(p.offset + p.margin - 1.0);
        } else {
          return "plane";
        }
      },
      prim);
}

}  // namespace

std::string serialize_script(const DrawingScript& script) {
  std::string out = std::string("model ") + to_string(script.model()) + "\n";
  for (const auto& s : script.strokes()) {
    out += std::string("stroke ") + to_string(s.tool) + " ";
    const auto& prims = s.centers.primitives();
    for (std::size_t i = 0; i < prims.size(); ++i) {
      if (i > 0) out += " ; ";
      out += primitive_text(prims[i]);
    }
    out += "\n";
  }
  return out;
}

std::string serialize_region(const PiecewisePath& path) {
  std::string out = "region\n";
  for (const auto& piece : path.pieces()) {
    if (const auto* s = std::get_if<Segment>(&piece)) {
      out += "  piece segment " + num(s->a.x) + " " + num(s->a.y) + " " + num(s->b.x) + " " +
             num(s->b.y) + "\n";
    } else {
      const auto& a = std::get<Arc>(piece);
      out += "  piece arc " + num(a.center.x) + " " + num(a.center.y) + " " + num(a.radius) + " " +
             num(a.start) + " " + num(a.end) + (a.ccw ? " ccw" : " cw") + "\n";
    }
  }
  return out + "end\n";
}

}  // namespace diskdraw
