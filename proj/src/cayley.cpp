#include "cyclospec/cayley.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <sstream>

namespace cyclospec {

GroupSpec::GroupSpec(std::vector<long> orders) : orders_(std::move(orders)) {
  if (orders_.empty()) throw std::invalid_argument("group needs at least one cyclic factor");
  for (long o : orders_) {
    if (o < 1) throw std::invalid_argument("cyclic factor order must be >= 1, got " + std::to_string(o));
    order_ *= o;
  }
}

std::vector<Element> GroupSpec::elements() const {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(order_));
  Element e(orders_.size(), 0);
  for (long i = 0; i < order_; ++i) {
    out.push_back(e);
    for (std::size_t f = orders_.size(); f-- > 0;) {
      if (++e[f] < orders_[f]) break;
      e[f] = 0;
    }
  }
  return out;
}

long GroupSpec::index_of(const Element& e) const {
  long idx = 0;
  for (std::size_t f = 0; f < orders_.size(); ++f) idx = idx * orders_[f] + e[f];
  return idx;
}

Element GroupSpec::reduce(Element e) const {
  if (e.size() != orders_.size())
    throw std::invalid_argument("element has " + std::to_string(e.size()) + " residues, group has " +
                                std::to_string(orders_.size()) + " factors");
  for (std::size_t f = 0; f < e.size(); ++f) e[f] = ((e[f] % orders_[f]) + orders_[f]) % orders_[f];
  return e;
}

Element GroupSpec::add(const Element& x, const Element& y) const {
  Element out(orders_.size());
  for (std::size_t f = 0; f < orders_.size(); ++f) out[f] = (x[f] + y[f]) % orders_[f];
  return out;
}

Element GroupSpec::inverse(const Element& x) const {
  Element out(orders_.size());
  for (std::size_t f = 0; f < orders_.size(); ++f) out[f] = (orders_[f] - x[f]) % orders_[f];
  return out;
}

bool GroupSpec::is_identity(const Element& x) const {
  return std::all_of(x.begin(), x.end(), [](long r) { return r == 0; });
}

std::string GroupSpec::name() const {
  std::string s;
  for (std::size_t f = 0; f < orders_.size(); ++f) {
    if (f) s += "x";
    s += "Z" + std::to_string(orders_[f]);
  }
  return s;
}

GeneratorSet::GeneratorSet(const GroupSpec& group, std::vector<Element> generators) {
  for (auto& g : generators) {
    Element r = group.reduce(std::move(g));
    if (group.is_identity(r)) throw IdentityGeneratorError("the identity element cannot be a generator");
    gens_.push_back(std::move(r));
  }
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
}

GeneratorSet GeneratorSet::standard(const GroupSpec& group) {
  std::vector<Element> gens;
  for (std::size_t f = 0; f < group.orders().size(); ++f) {
    if (group.orders()[f] == 1) continue;
    Element e(group.orders().size(), 0);
    e[f] = 1;
    gens.push_back(std::move(e));
  }
  return GeneratorSet(group, std::move(gens));
}

Graph::Graph(long vertex_count) : n_(vertex_count) {
  if (vertex_count < 1) throw std::invalid_argument("graph needs at least one vertex");
}

void Graph::add_edge(long u, long v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  edges_.emplace(std::min(u, v), std::max(u, v));
}

bool Graph::has_edge(long u, long v) const { return edges_.count({std::min(u, v), std::max(u, v)}) != 0; }

long Graph::degree(long v) const {
  return std::count_if(edges_.begin(), edges_.end(), [v](const auto& e) { return e.first == v || e.second == v; });
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw DimensionError("matrix is not square");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

bool IntMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

Graph cayley_graph(const GroupSpec& group, const GeneratorSet& gens) {
  if (gens.generators().empty() && group.order() > 1)
    throw std::invalid_argument("a nontrivial group needs at least one generator");
  Graph g(group.order());
  for (const auto& x : group.elements()) {
    const long u = group.index_of(x);
    for (const auto& s : gens.generators()) {
      g.add_edge(u, group.index_of(group.add(x, s)));
      g.add_edge(u, group.index_of(group.add(x, group.inverse(s))));
    }
  }
  return g;
}

IntMatrix laplacian_of(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  IntMatrix m(n);
  for (const auto& [u, v] : g.edges()) {
    const auto su = static_cast<std::size_t>(u);
    const auto sv = static_cast<std::size_t>(v);
    m(su, sv) = -1;
    m(sv, su) = -1;
    ++m(su, su);
    ++m(sv, sv);
  }
  return m;
}

Graph complement(const Graph& g) {
  Graph out(g.vertex_count());
  for (long u = 0; u < g.vertex_count(); ++u)
    for (long v = u + 1; v < g.vertex_count(); ++v)
      if (!g.has_edge(u, v)) out.add_edge(u, v);
  return out;
}

Graph path_graph(long n) {
  Graph g(n);
  for (long v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph complete_graph(long n) { return complement(Graph(n)); }

bool isomorphic_small(const Graph& g1, const Graph& g2) {
  constexpr long kLimit = 10;
  if (g1.vertex_count() > kLimit || g2.vertex_count() > kLimit)
    throw SizeLimitError("isomorphism search is limited to 10 vertices");
  const long n = g1.vertex_count();
  if (n != g2.vertex_count() || g1.edges().size() != g2.edges().size()) return false;

  std::vector<long> deg1(n), deg2(n);
  for (long v = 0; v < n; ++v) {
    deg1[v] = g1.degree(v);
    deg2[v] = g2.degree(v);
  }
  auto s1 = deg1, s2 = deg2;
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  if (s1 != s2) return false;

  std::vector<long> image(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(long)> extend = [&](long v) {
    if (v == n) return true;
    for (long w = 0; w < n; ++w) {
      if (used[w] || deg1[v] != deg2[w]) continue;
      bool ok = true;
      for (long u = 0; u < v && ok; ++u) ok = g1.has_edge(u, v) == g2.has_edge(image[u], w);
      if (!ok) continue;
      image[v] = w;
      used[w] = true;
      if (extend(v + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  return extend(0);
}

bool CayleySpec::is_standard_cycle() const {
  if (!group.is_cyclic()) return false;
  const long n = group.order();
  if (n == 1) return gens.generators().empty();
  const auto& gs = gens.generators();
  // {1} and {n-1} generate the same graph.
  return gs.size() == 1 && (gs[0][0] == 1 || gs[0][0] == n - 1);
}

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  CayleySpec parse() {
    std::vector<long> orders;
    do {
      expect('Z');
      orders.push_back(number());
    } while (accept('x'));
    GroupSpec group(orders);
    if (!accept('[')) {
      expect_end();
      return {group, GeneratorSet::standard(group), std::string(text_)};
    }
    std::vector<Element> gens;
    if (group.orders().size() == 1 && peek() != '(') {
      do gens.push_back({signed_number()});
      while (accept(','));
    } else {
      do gens.push_back(tuple());
      while (accept(';'));
    }
    expect(']');
    expect_end();
    if (gens.empty()) fail("empty generator list");
    for (const auto& g : gens)
      if (g.size() != group.orders().size()) fail("generator arity does not match the group");
    return {group, GeneratorSet(group, std::move(gens)), std::string(text_)};
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse group spec '" + std::string(text_) + "': " + why);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  void expect_end() {
    if (peek() != '\0') fail("trailing characters");
  }
  long signed_number() {
    const bool neg = accept('-');
    const long v = number();
    return neg ? -v : v;
  }
  long number() {
    skip_ws();
    long v = 0;
    const char* first = text_.data() + pos_;
    auto [ptr, ec] = std::from_chars(first, text_.data() + text_.size(), v);
    if (ec != std::errc() || ptr == first) fail("expected a number");
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }
  Element tuple() {
    expect('(');
    Element e;
    do e.push_back(signed_number());
    while (accept(','));
    expect(')');
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

CayleySpec parse_group_spec(std::string_view text) {
  try {
    return SpecParser(text).parse();
  } catch (const IdentityGeneratorError&) {
    throw;
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("cannot parse group spec '") + std::string(text) + "': " + e.what());
  }
}

}  // namespace cyclospec
