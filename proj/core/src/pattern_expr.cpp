#include "rgl/pattern_expr.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include "rgl/constructors.hpp"
#include "rgl/error.hpp"
#include "rgl/graph_io.hpp"

namespace rgl {

namespace {

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t base = 0) : text_(text), base_(base) {}

  bool done() const { return pos_ == text_.size(); }
  std::size_t pos() const { return base_ + pos_; }
  std::string_view rest() const { return text_.substr(pos_); }

  bool eat(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void expect(std::string_view token) {
    if (!eat(token)) fail("expected '" + std::string(token) + "'");
  }

  int integer() {
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(*begin))) fail("expected a number");
    int value = 0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc()) fail("number out of range");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  void finish() {
    if (!done()) fail("unexpected trailing text");
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos()), pos());
  }

 private:
  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

bool is_graph6_char(char c) { return c >= 63 && c <= 126; }

// Named graphs: K<p>, P<n>, C<n>, E<n>.
bool try_named(std::string_view text, std::size_t base, Graph& out) {
  if (text.size() < 2 || std::string_view("KPCE").find(text[0]) == std::string_view::npos) return false;
  for (std::size_t i = 1; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  Cursor c(text.substr(1), base + 1);
  const int n = c.integer();
  c.finish();
  try {
    switch (text[0]) {
      case 'K':
        if (n < 1) break;
        out = complete_graph(n);
        return true;
      case 'P':
        if (n < 1) break;
        out = path_graph(n);
        return true;
      case 'C':
        out = cycle_graph(n);
        return true;
      case 'E':
        out = edgeless_graph(n);
        return true;
    }
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string(e.what()) + " at position " + std::to_string(base), base);
  }
  throw ParseError("graph order must be positive at position " + std::to_string(base), base);
}

Graph parse_graph_at(std::string_view text, std::size_t base) {
  if (text.substr(0, 3) == "g6:") {
    text.remove_prefix(3);
    base += 3;
  }
  if (text.empty()) throw ParseError("expected a graph at position " + std::to_string(base), base);
  if (text[0] == '@') {
    try {
      return read_graph_file(std::string(text.substr(1)));
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()) + " (in file named at position " + std::to_string(base) + ")", base);
    }
  }
  Graph g;
  if (try_named(text, base, g)) return g;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!is_graph6_char(text[i])) {
      throw ParseError("expected a graph name or graph6 string at position " + std::to_string(base + i), base + i);
    }
  }
  try {
    return from_graph6(text);
  } catch (const ParseError& e) {
    throw ParseError(std::string(e.what()), base + e.position());
  }
}

std::vector<int> int_list(Cursor& c) {
  std::vector<int> out;
  c.expect("(");
  out.push_back(c.integer());
  while (c.eat(",")) out.push_back(c.integer());
  c.expect(")");
  return out;
}

template <class Build>
Pattern guarded(const Cursor& c, Build&& build) {
  try {
    return build();
  } catch (const InvalidArgument& e) {
    c.fail(e.what());
  }
}

}  // namespace

Graph parse_graph_expr(std::string_view text) { return parse_graph_at(text, 0); }

std::string format_graph_expr(const Graph& g) {
  const int n = g.order();
  if (n >= 1 && g == complete_graph(n)) return "K" + std::to_string(n);
  if (n >= 2 && g == path_graph(n)) return "P" + std::to_string(n);
  if (n >= 3 && g == cycle_graph(n)) return "C" + std::to_string(n);
  if (n >= 1 && g == edgeless_graph(n)) return "E" + std::to_string(n);
  return to_graph6(g);
}

Pattern parse_pattern(std::string_view text) {
  Cursor c(text);
  if (text.empty()) c.fail("empty pattern");

  if (c.eat("@")) return Pattern::explicit_graph(parse_graph_at(text, 0));
  if (c.eat("g6:")) return Pattern::explicit_graph(parse_graph_at(c.rest(), c.pos()));

  if (c.eat("K1+")) {
    int n = 1;
    if (!c.rest().empty() && std::isdigit(static_cast<unsigned char>(c.rest()[0]))) {
      const std::size_t at = c.pos();
      n = c.integer();
      if (!c.eat("*")) {
        // e.g. "K1+3K2": a copy count must be followed by "*".
        throw ParseError("expected '*' after copy count at position " + std::to_string(at), at);
      }
    }
    const std::size_t at = c.pos();
    Graph h = parse_graph_at(c.rest(), at);
    return guarded(c, [&] { return Pattern::join_one(std::move(h), n); });
  }

  if (std::isdigit(static_cast<unsigned char>(text[0]))) {
    const int n = c.integer();
    c.expect("*");
    const std::size_t at = c.pos();
    Graph h = parse_graph_at(c.rest(), at);
    return guarded(c, [&] { return Pattern::union_of(std::move(h), n); });
  }

  if (c.eat("K")) {
    if (c.rest().substr(0, 1) == "(") {
      auto parts = int_list(c);
      c.finish();
      return guarded(c, [&] { return Pattern::complete_multipartite(std::move(parts)); });
    }
    const int p = c.integer();
    c.finish();
    return guarded(c, [&] { return Pattern::clique(p); });
  }
  if (c.eat("F")) {
    auto args = int_list(c);
    c.finish();
    if (args.size() != 1) c.fail("F takes one argument");
    return guarded(c, [&] { return Pattern::fan(args[0]); });
  }
  if (c.eat("B")) {
    auto args = int_list(c);
    c.finish();
    if (args.size() != 2) c.fail("B takes two arguments");
    return guarded(c, [&] { return Pattern::book(args[0], args[1]); });
  }
  if (c.eat("S")) {
    auto args = int_list(c);
    c.finish();
    if (args.size() != 1) c.fail("S takes one argument");
    return guarded(c, [&] { return Pattern::star(args[0]); });
  }
  c.fail("unknown pattern");
}

std::string format_pattern(const Pattern& pattern) {
  if (const auto* k = pattern.get_if<Pattern::Clique>()) return "K" + std::to_string(k->p);
  if (const auto* m = pattern.get_if<Pattern::CompleteMultipartite>()) {
    std::string out = "K(";
    for (std::size_t i = 0; i < m->parts.size(); ++i) out += (i ? "," : "") + std::to_string(m->parts[i]);
    return out + ")";
  }
  if (const auto* j = pattern.get_if<Pattern::JoinOne>()) {
    if (j->h == complete_graph(2)) return "F(" + std::to_string(j->n) + ")";
    return "K1+" + std::to_string(j->n) + "*" + format_graph_expr(j->h);
  }
  if (const auto* b = pattern.get_if<Pattern::Book>()) {
    return "B(" + std::to_string(b->k) + "," + std::to_string(b->t) + ")";
  }
  if (const auto* s = pattern.get_if<Pattern::Star>()) return "S(" + std::to_string(s->m) + ")";
  if (const auto* u = pattern.get_if<Pattern::Union>()) {
    return std::to_string(u->n) + "*" + format_graph_expr(u->h);
  }
  return "g6:" + to_graph6(pattern.get_if<Pattern::Explicit>()->g);
}

}  // namespace rgl
