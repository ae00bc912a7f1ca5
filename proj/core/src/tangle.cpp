#include "tanglecospan/tangle.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "tanglecospan/error.hpp"

namespace tanglecospan {

SignSeq::SignSeq(std::vector<int> s, std::vector<int> c) : signs(std::move(s)), colors(std::move(c)) {
  if (colors.size() != signs.size()) throw ShapeMismatch("one color per boundary point expected");
}

int SignSeq::sign_sum() const { return std::accumulate(signs.begin(), signs.end(), 0); }

bool SignSeq::colored() const {
  for (int c : colors)
    if (c != 1) return true;
  return false;
}

std::string SignSeq::to_string() const {
  std::string s = "@[";
  const bool show = colored();
  for (std::size_t i = 0; i < signs.size(); ++i) {
    s += signs[i] > 0 ? '+' : '-';
    if (show) s += std::to_string(colors[i]);
  }
  return s + "]";
}

std::string Layer::to_string() const {
  switch (gen) {
    case Gen::x: return "x" + std::to_string(pos);
    case Gen::y: return "y" + std::to_string(pos);
    case Gen::cup: return "cup" + std::to_string(pos) + (chirality > 0 ? "+-" : "-+");
    case Gen::cap: return "cap" + std::to_string(pos);
    case Gen::id: return "id";
  }
  return "id";
}

std::string TangleWord::to_string() const {
  std::string s = source.to_string();
  for (std::size_t k = 0; k < layers.size(); ++k) s += (k == 0 ? " " : ";") + layers[k].to_string();
  return s;
}

namespace {

class WordScanner {
 public:
  WordScanner(std::string_view text, std::size_t first_line) : text_(text), line_(first_line) {}

  void skip() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void expect(char c, const char* what) {
    if (peek() != c) fail(std::string("expected ") + what);
    advance();
  }
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, line_, col_); }

  std::size_t line() const { return line_; }
  std::size_t column() const { return col_; }

  bool at_digit() const { return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }
  /// Digits immediately at the cursor (no skipping).
  std::size_t number() {
    if (!at_digit()) fail("expected a position");
    std::size_t v = 0;
    while (at_digit()) {
      v = v * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (v > 1000000) fail("number too large");
      advance();
    }
    return v;
  }
  std::string identifier() {
    std::string id;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      id += text_[pos_];
      advance();
    }
    return id;
  }
  bool raw_is(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t col_ = 1;
};

Layer parse_layer(WordScanner& s) {
  s.skip();
  Layer layer;
  layer.line = s.line();
  layer.column = s.column();
  const std::string id = s.identifier();
  if (id.empty()) s.fail("expected a generator");
  if (id == "id") {
    layer.gen = Gen::id;
    return layer;
  }
  if (id == "x" || id == "y" || id == "cap" || id == "cup") {
    layer.gen = id == "x" ? Gen::x : id == "y" ? Gen::y : id == "cap" ? Gen::cap : Gen::cup;
    layer.pos = s.number();
    if (layer.pos == 0) s.fail("positions are 1-based");
    if (layer.gen == Gen::cup) {
      if (s.raw_is('+')) {
        s.advance();
        if (!s.raw_is('-')) s.fail("expected cup chirality '+-' or '-+'");
        s.advance();
        layer.chirality = 1;
      } else if (s.raw_is('-')) {
        s.advance();
        if (!s.raw_is('+')) s.fail("expected cup chirality '+-' or '-+'");
        s.advance();
        layer.chirality = -1;
      } else {
        s.fail("expected cup chirality '+-' or '-+'");
      }
    }
    return layer;
  }
  throw UnknownGenerator("unknown generator '" + id + "'", layer.line, layer.column);
}

}  // namespace

TangleWord parse_word(std::string_view text, std::size_t first_line) {
  WordScanner s(text, first_line);
  TangleWord w;
  s.expect('@', "'@[' header");
  s.expect('[', "'['");
  while (s.peek() != ']') {
    const char c = s.peek();
    if (c != '+' && c != '-') s.fail("expected a sign or ']'");
    s.advance();
    int color = 1;
    if (s.at_digit()) {
      color = static_cast<int>(s.number());
      if (color == 0) s.fail("colors are 1-based");
    }
    w.source.signs.push_back(c == '+' ? 1 : -1);
    w.source.colors.push_back(color);
  }
  s.advance();
  if (s.peek() == '\0') return w;
  w.layers.push_back(parse_layer(s));
  while (s.peek() == ';') {
    s.advance();
    w.layers.push_back(parse_layer(s));
  }
  if (s.peek() != '\0') s.fail("expected ';' or end of word");
  return w;
}

std::vector<std::pair<std::string, TangleWord>> parse_word_file(std::string_view text) {
  std::vector<std::pair<std::string, TangleWord>> out;
  std::string name, body;
  std::size_t body_line = 0, line_no = 0;
  auto flush = [&] {
    if (name.empty()) return;
    out.emplace_back(name, parse_word(body, body_line));
    name.clear();
    body.clear();
  };
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    std::string line(text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    ++line_no;
    const auto hash = line.find('#');
    const std::string code = hash == std::string::npos ? line : line.substr(0, hash);
    const auto eq = code.find('=');
    if (eq != std::string::npos) {
      flush();
      name = code.substr(0, eq);
      name.erase(0, name.find_first_not_of(" \t"));
      name.erase(name.find_last_not_of(" \t\r") + 1);
      if (name.empty()) throw SyntaxError("missing word name", line_no, 1);
      body = code.substr(eq + 1);
      body_line = line_no;
    } else if (code.find_first_not_of(" \t\r") != std::string::npos) {
      if (name.empty()) throw SyntaxError("expected 'name = word'", line_no, 1);
      body += "\n" + code;
    } else if (!name.empty()) {
      body += "\n";
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  flush();
  return out;
}

SignSeq apply_layer(const SignSeq& below, const Layer& layer, std::size_t index) {
  const std::size_t n = below.size();
  SignSeq above = below;
  const std::string where = "layer " + std::to_string(index + 1) + " (" + layer.to_string() + ")";
  switch (layer.gen) {
    case Gen::id:
      return above;
    case Gen::x:
    case Gen::y:
      if (layer.pos + 1 > n)
        throw BoundaryMismatch(where + " needs strands " + std::to_string(layer.pos) + "," + std::to_string(layer.pos + 1) +
                                   " but the boundary has " + std::to_string(n),
                               index);
      std::swap(above.signs[layer.pos - 1], above.signs[layer.pos]);
      std::swap(above.colors[layer.pos - 1], above.colors[layer.pos]);
      return above;
    case Gen::cup:
      if (layer.pos > n + 1)
        throw BoundaryMismatch(where + " inserts at position " + std::to_string(layer.pos) + " of a boundary with " +
                                   std::to_string(n) + " points",
                               index);
      above.signs.insert(above.signs.begin() + static_cast<std::ptrdiff_t>(layer.pos - 1), {layer.chirality, -layer.chirality});
      above.colors.insert(above.colors.begin() + static_cast<std::ptrdiff_t>(layer.pos - 1), {1, 1});
      return above;
    case Gen::cap:
      if (layer.pos + 1 > n)
        throw BoundaryMismatch(where + " closes strands beyond the boundary of " + std::to_string(n) + " points", index);
      if (below.signs[layer.pos - 1] == below.signs[layer.pos])
        throw CapOrientation(where + " joins two strands of equal sign", index);
      above.signs.erase(above.signs.begin() + static_cast<std::ptrdiff_t>(layer.pos - 1),
                        above.signs.begin() + static_cast<std::ptrdiff_t>(layer.pos + 1));
      above.colors.erase(above.colors.begin() + static_cast<std::ptrdiff_t>(layer.pos - 1),
                         above.colors.begin() + static_cast<std::ptrdiff_t>(layer.pos + 1));
      return above;
  }
  return above;
}

Typing typecheck(const TangleWord& w) {
  Typing ty;
  ty.source = w.source;
  ty.levels.push_back(w.source);
  for (std::size_t k = 0; k < w.layers.size(); ++k) {
    ty.levels.push_back(apply_layer(ty.levels.back(), w.layers[k], k));
    if (ty.levels.back().sign_sum() != w.source.sign_sum()) throw BoundaryMismatch("sign sum changed", k);
  }
  ty.target = ty.levels.back();
  return ty;
}

int crossing_sign(const Layer& layer, const SignSeq& below) {
  if (!layer.is_crossing()) throw Error("not a crossing layer");
  // direction of the strand from bottom p to top q is (q - p, 1), reversed for downward strands
  const int a = below.signs[layer.pos - 1];      // strand starting at the left
  const int b = below.signs[layer.pos];          // strand starting at the right
  const int ax = a * 1, ay = a, bx = -b, by = b;  // a goes right, b goes left
  const bool a_over = layer.gen == Gen::x;
  const int ox = a_over ? ax : bx, oy = a_over ? ay : by;
  const int ux = a_over ? bx : ax, uy = a_over ? by : ay;
  return ox * uy - oy * ux > 0 ? 1 : -1;
}

TangleWord closure(const TangleWord& w) {
  const Typing ty = typecheck(w);
  if (!ty.target.same_signs(ty.source)) throw NotEndomorphism("closure needs equal source and target");
  const std::size_t n = w.source.size();
  TangleWord out;
  for (std::size_t j = 1; j <= n; ++j) {
    Layer cup;
    cup.gen = Gen::cup;
    cup.pos = j;
    cup.chirality = w.source.signs[j - 1];
    out.layers.push_back(cup);
  }
  out.layers.insert(out.layers.end(), w.layers.begin(), w.layers.end());
  for (std::size_t j = n; j >= 1; --j) {
    Layer cap;
    cap.gen = Gen::cap;
    cap.pos = j;
    out.layers.push_back(cap);
  }
  return out;
}

TangleWord tensor(const TangleWord& a, const TangleWord& b) {
  const Typing ta = typecheck(a);
  TangleWord out;
  out.source.signs = a.source.signs;
  out.source.colors = a.source.colors;
  out.source.signs.insert(out.source.signs.end(), b.source.signs.begin(), b.source.signs.end());
  out.source.colors.insert(out.source.colors.end(), b.source.colors.begin(), b.source.colors.end());
  out.layers = a.layers;
  const std::size_t offset = ta.target.size();
  for (Layer layer : b.layers) {
    if (layer.gen != Gen::id) layer.pos += offset;
    out.layers.push_back(layer);
  }
  return out;
}

TangleWord then(const TangleWord& a, const TangleWord& b) {
  const Typing ta = typecheck(a);
  if (!ta.target.same_signs(b.source)) throw BoundaryMismatch("target of the first word differs from the source of the second", a.layers.size());
  TangleWord out = a;
  out.layers.insert(out.layers.end(), b.layers.begin(), b.layers.end());
  return out;
}

TangleWord slice(const TangleWord& w, std::size_t from, std::size_t to) {
  const Typing ty = typecheck(w);
  if (from > to || to > w.layers.size()) throw ShapeMismatch("slice out of range");
  TangleWord out;
  out.source = ty.levels[from];
  out.layers.assign(w.layers.begin() + static_cast<std::ptrdiff_t>(from), w.layers.begin() + static_cast<std::ptrdiff_t>(to));
  return out;
}

bool is_braid_word(const TangleWord& w) {
  for (const auto& layer : w.layers)
    if (layer.gen == Gen::cup || layer.gen == Gen::cap) return false;
  return true;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  std::size_t make() {
    parent.push_back(parent.size());
    return parent.size() - 1;
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

Diagram make_diagram(const TangleWord& w) {
  const Typing ty = typecheck(w);
  struct Point {
    std::size_t arc;
    std::size_t component;
    int color;
  };
  UnionFind arcs, comps;
  // Colors live on components; cups start uncolored (0) until joined.
  std::vector<int> raw_color;
  std::vector<std::size_t> arc_comp;
  std::vector<Point> state;
  for (std::size_t j = 0; j < w.source.size(); ++j) {
    state.push_back({arcs.make(), comps.make(), w.source.colors[j]});
    raw_color.push_back(w.source.colors[j]);
    arc_comp.push_back(state.back().component);
  }
  std::vector<Diagram::Crossing> raw;
  for (std::size_t k = 0; k < w.layers.size(); ++k) {
    const Layer& layer = w.layers[k];
    const SignSeq& below = ty.levels[k];
    const std::size_t p = layer.pos - 1;
    switch (layer.gen) {
      case Gen::id:
        break;
      case Gen::x:
      case Gen::y: {
        const bool left_over = layer.gen == Gen::x;
        const std::size_t over_at = left_over ? p : p + 1, under_at = left_over ? p + 1 : p;
        const std::size_t fresh = arcs.make();
        raw_color.push_back(state[under_at].color);
        arc_comp.push_back(state[under_at].component);
        Diagram::Crossing c;
        c.over = state[over_at].arc;
        if (below.signs[under_at] > 0) {
          c.in = state[under_at].arc;
          c.out = fresh;
        } else {
          c.in = fresh;
          c.out = state[under_at].arc;
        }
        c.sign = crossing_sign(layer, below);
        c.layer = k;
        raw.push_back(c);
        state[under_at].arc = fresh;
        std::swap(state[p], state[p + 1]);
        break;
      }
      case Gen::cup: {
        const std::size_t a = arcs.make();
        raw_color.push_back(0);
        const std::size_t comp = comps.make();
        arc_comp.push_back(comp);
        state.insert(state.begin() + static_cast<std::ptrdiff_t>(p), {Point{a, comp, 0}, Point{a, comp, 0}});
        break;
      }
      case Gen::cap: {
        arcs.unite(state[p].arc, state[p + 1].arc);
        comps.unite(state[p].component, state[p + 1].component);
        state.erase(state.begin() + static_cast<std::ptrdiff_t>(p), state.begin() + static_cast<std::ptrdiff_t>(p + 2));
        break;
      }
    }
  }

  std::vector<int> comp_color(comps.parent.size(), 0);
  for (std::size_t r = 0; r < raw_color.size(); ++r) {
    int& c = comp_color[comps.find(arc_comp[r])];
    c = std::max(c, raw_color[r]);
  }

  // Renumber merged arcs in order of first appearance.
  Diagram d;
  d.source = ty.source;
  d.target = ty.target;
  std::vector<std::size_t> label(arcs.parent.size(), SIZE_MAX);
  auto id = [&](std::size_t raw_arc) {
    const std::size_t root = arcs.find(raw_arc);
    if (label[root] == SIZE_MAX) {
      label[root] = d.arcs++;
      const int c = comp_color[comps.find(arc_comp[root])];
      d.arc_color.push_back(c == 0 ? 1 : c);
    }
    return label[root];
  };
  for (std::size_t j = 0; j < w.source.size(); ++j) d.bottom.push_back(id(j));
  for (auto c : raw) {
    c.over = id(c.over);
    c.in = id(c.in);
    c.out = id(c.out);
    d.crossings.push_back(c);
  }
  for (const auto& pt : state) d.top.push_back(id(pt.arc));
  for (std::size_t r = 0; r < arcs.parent.size(); ++r) id(r);
  std::vector<std::size_t> comp_label(comps.parent.size(), SIZE_MAX);
  for (std::size_t c = 0; c < comps.parent.size(); ++c) {
    const std::size_t root = comps.find(c);
    if (comp_label[root] == SIZE_MAX) comp_label[root] = d.components++;
  }
  for (std::size_t j = 0; j < w.source.size(); ++j) d.bottom_component.push_back(comp_label[comps.find(j)]);
  for (const auto& pt : state) d.top_component.push_back(comp_label[comps.find(pt.component)]);
  return d;
}

}  // namespace tanglecospan
