#include "rgl/pattern.hpp"

#include <algorithm>
#include <sstream>

#include "rgl/constructors.hpp"
#include "rgl/error.hpp"

namespace rgl {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw InvalidArgument(what);
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

Pattern Pattern::clique(int p) {
  require(p >= 1, "clique size must be positive");
  return Pattern(Clique{p});
}

Pattern Pattern::complete_multipartite(std::vector<int> parts) {
  require(!parts.empty(), "complete multipartite pattern needs at least one part");
  for (int a : parts) require(a >= 1, "multipartite part sizes must be positive");
  std::sort(parts.begin(), parts.end());
  return Pattern(CompleteMultipartite{std::move(parts)});
}

Pattern Pattern::join_one(Graph h, int n) {
  require(n >= 1, "K1+nH needs n >= 1");
  require(h.order() >= 1, "K1+nH needs |H| >= 1");
  return Pattern(JoinOne{std::move(h), n});
}

Pattern Pattern::fan(int n) { return join_one(complete_graph(2), n); }

Pattern Pattern::book(int k, int t) {
  require(k >= 1, "book spine size k must be positive");
  require(t >= k + 1, "book B(k,t) needs t >= k+1");
  return Pattern(Book{k, t});
}

Pattern Pattern::star(int m) {
  require(m >= 1, "star K_{1,m} needs m >= 1");
  return Pattern(Star{m});
}

Pattern Pattern::union_of(Graph h, int n) {
  require(n >= 1, "union nH needs n >= 1");
  require(h.order() >= 1, "union nH needs |H| >= 1");
  return Pattern(Union{std::move(h), n});
}

Pattern Pattern::explicit_graph(Graph g) { return Pattern(Explicit{std::move(g)}); }

int Pattern::order() const {
  int total = 0;
  for (int r : pattern_roles(*this)) total += r;
  return total;
}

std::vector<int> pattern_roles(const Pattern& pattern) {
  return std::visit(
      Overloaded{
          [](const Pattern::Clique& c) { return std::vector<int>{c.p}; },
          [](const Pattern::CompleteMultipartite& m) { return m.parts; },
          [](const Pattern::JoinOne& j) {
            std::vector<int> r{1};
            r.insert(r.end(), static_cast<std::size_t>(j.n), j.h.order());
            return r;
          },
          [](const Pattern::Book& b) { return std::vector<int>{b.k, b.t - b.k}; },
          [](const Pattern::Star& s) { return std::vector<int>{1, s.m}; },
          [](const Pattern::Union& u) {
            return std::vector<int>(static_cast<std::size_t>(u.n), u.h.order());
          },
          [](const Pattern::Explicit& e) { return std::vector<int>{e.g.order()}; },
      },
      pattern.variant());
}

Graph build_pattern(const Pattern& pattern) {
  return std::visit(
      Overloaded{
          [](const Pattern::Clique& c) { return complete_graph(c.p); },
          [](const Pattern::CompleteMultipartite& m) {
            return rgl::complete_multipartite(m.parts);
          },
          [](const Pattern::JoinOne& j) {
            return join(complete_graph(1), union_copies(j.h, j.n));
          },
          [](const Pattern::Book& b) { return join(complete_graph(b.k), edgeless_graph(b.t - b.k)); },
          [](const Pattern::Star& s) { return star_graph(s.m); },
          [](const Pattern::Union& u) { return union_copies(u.h, u.n); },
          [](const Pattern::Explicit& e) { return e.g; },
      },
      pattern.variant());
}

std::string describe(const Pattern& pattern) {
  std::ostringstream os;
  std::visit(Overloaded{
                 [&](const Pattern::Clique& c) { os << "K_" << c.p; },
                 [&](const Pattern::CompleteMultipartite& m) {
                   os << "K_" << m.parts.size() << "(";
                   for (std::size_t i = 0; i < m.parts.size(); ++i)
                     os << (i ? "," : "") << m.parts[i];
                   os << ")";
                 },
                 [&](const Pattern::JoinOne& j) {
                   os << "K_1+" << j.n << "H(|H|=" << j.h.order() << ",e=" << j.h.edge_count()
                      << ")";
                 },
                 [&](const Pattern::Book& b) { os << "B_{" << b.k << "," << b.t << "}"; },
                 [&](const Pattern::Star& s) { os << "K_{1," << s.m << "}"; },
                 [&](const Pattern::Union& u) {
                   os << u.n << "H(|H|=" << u.h.order() << ",e=" << u.h.edge_count() << ")";
                 },
                 [&](const Pattern::Explicit& e) {
                   os << "G(n=" << e.g.order() << ",e=" << e.g.edge_count() << ")";
                 },
             },
             pattern.variant());
  return os.str();
}

}  // namespace rgl
