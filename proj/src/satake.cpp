#include "commvar/satake.hpp"

#include "commvar/error.hpp"
#include "catalog_data.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>

namespace commvar::satake {

namespace {

/// Edge code as seen from `from`: 1 for simple edges, 10*mult+1 from the long
/// end, 10*mult+2 from the short end.
int edge_code(const Edge& e, std::size_t from) {
  if (e.multiplicity == 1) return 1;
  return 10 * e.multiplicity + (e.a == from ? 1 : 2);
}

std::vector<std::vector<std::size_t>> components(std::size_t n, const std::vector<Edge>& edges,
                                                 const std::vector<std::optional<std::size_t>>* arrows) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : edges) parent[find(e.a)] = find(e.b);
  if (arrows)
    for (std::size_t i = 0; i < n; ++i)
      if ((*arrows)[i]) parent[find(i)] = find(*(*arrows)[i]);
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

/// Finite-type name of one connected Dynkin graph; empty string if invalid.
std::string classify_component(const std::vector<std::size_t>& nodes, const std::vector<Edge>& all_edges) {
  const std::set<std::size_t> in(nodes.begin(), nodes.end());
  std::vector<Edge> edges;
  for (const auto& e : all_edges)
    if (in.count(e.a)) edges.push_back(e);
  const std::size_t k = nodes.size();
  if (edges.size() + 1 != k) return {};  // connected, so this means "not a tree"
  std::map<std::size_t, int> degree;
  int doubles = 0, triples = 0;
  const Edge* special = nullptr;
  for (const auto& e : edges) {
    ++degree[e.a];
    ++degree[e.b];
    if (e.multiplicity == 2) ++doubles, special = &e;
    if (e.multiplicity == 3) ++triples, special = &e;
  }
  int max_deg = 0, branch_nodes = 0;
  std::size_t branch = 0;
  for (auto [v, d] : degree) {
    max_deg = std::max(max_deg, d);
    if (d >= 3) ++branch_nodes, branch = v;
  }
  const std::string kk = std::to_string(k);
  if (k == 1) return "A1";
  if (triples) return (triples == 1 && doubles == 0 && k == 2) ? "G2" : "";
  if (doubles > 1 || max_deg > 3 || branch_nodes > 1) return {};
  if (doubles == 1) {
    if (max_deg > 2) return {};
    if (k == 2) return "B2";
    const bool a_end = degree[special->a] == 1, b_end = degree[special->b] == 1;
    if (b_end) return "B" + kk;  // short root at the end of the chain
    if (a_end) return "C" + kk;
    return k == 4 ? "F4" : "";
  }
  if (max_deg <= 2) return "A" + kk;
  // One trivalent node: measure its three arms.
  std::map<std::size_t, std::vector<std::size_t>> adj;
  for (const auto& e : edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  std::vector<std::size_t> arms;
  for (std::size_t start : adj[branch]) {
    std::size_t prev = branch, cur = start, len = 1;
    while (adj[cur].size() == 2) {
      const std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return "D" + kk;
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return "E" + kk;
  return {};
}

}  // namespace

SatakeDiagram::SatakeDiagram(std::vector<Color> colors, std::vector<Edge> edges,
                             std::vector<std::pair<std::size_t, std::size_t>> arrows)
    : colors_(std::move(colors)), edges_(std::move(edges)), partner_(colors_.size()) {
  const std::size_t n = colors_.size();
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto& e : edges_) {
    if (e.a >= n || e.b >= n || e.a == e.b) throw ParameterError("Satake diagram: bad edge endpoints");
    if (e.multiplicity < 1 || e.multiplicity > 3) throw ParameterError("Satake diagram: bad edge multiplicity");
    if (e.multiplicity == 1 && e.a > e.b) std::swap(e.a, e.b);
    if (!seen.insert({std::min(e.a, e.b), std::max(e.a, e.b)}).second)
      throw ParameterError("Satake diagram: repeated edge");
  }
  for (auto [i, j] : arrows) {
    if (i >= n || j >= n || i == j) throw ParameterError("Satake diagram: arrow must join two distinct nodes");
    if (colors_[i] != Color::White || colors_[j] != Color::White)
      throw ParameterError("Satake diagram: arrows join white nodes only");
    if (partner_[i] || partner_[j]) throw ParameterError("Satake diagram: node carries two arrows");
    partner_[i] = j;
    partner_[j] = i;
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& x, const Edge& y) {
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  });
  for (const auto& comp : components(n, edges_, nullptr))
    if (classify_component(comp, edges_).empty())
      throw ParameterError("Satake diagram: a component is not a finite-type Dynkin diagram");
}

std::vector<std::pair<std::size_t, std::size_t>> SatakeDiagram::arrows() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < partner_.size(); ++i)
    if (partner_[i] && *partner_[i] > i) out.emplace_back(i, *partner_[i]);
  return out;
}

Dim SatakeDiagram::white_count() const {
  return static_cast<Dim>(std::count(colors_.begin(), colors_.end(), Color::White));
}

Dim SatakeDiagram::arrow_count() const { return arrows().size(); }

SatakeDiagram SatakeDiagram::remove(const std::vector<std::size_t>& nodes) const {
  const std::set<std::size_t> drop(nodes.begin(), nodes.end());
  std::vector<std::size_t> index(size(), SIZE_MAX);
  std::vector<Color> colors;
  for (std::size_t i = 0; i < size(); ++i)
    if (!drop.count(i)) {
      index[i] = colors.size();
      colors.push_back(colors_[i]);
    }
  std::vector<Edge> edges;
  for (const auto& e : edges_)
    if (index[e.a] != SIZE_MAX && index[e.b] != SIZE_MAX) edges.push_back({index[e.a], index[e.b], e.multiplicity});
  std::vector<std::pair<std::size_t, std::size_t>> arrows_kept;
  for (auto [i, j] : arrows())
    if (index[i] != SIZE_MAX && index[j] != SIZE_MAX) arrows_kept.emplace_back(index[i], index[j]);
  return SatakeDiagram(std::move(colors), std::move(edges), std::move(arrows_kept));
}

bool SatakeDiagram::is_connected() const {
  return !empty() && components(size(), edges_, &partner_).size() == 1;
}

std::string SatakeDiagram::dynkin_type() const {
  if (empty()) return "0";
  std::vector<std::string> parts;
  for (const auto& comp : components(size(), edges_, nullptr)) parts.push_back(classify_component(comp, edges_));
  std::sort(parts.begin(), parts.end(), [](const std::string& x, const std::string& y) {
    return x.size() != y.size() ? x.size() > y.size() : x > y;
  });
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "+") + p;
  return out;
}

std::string SatakeDiagram::canonical_form() const {
  const std::size_t n = size();
  if (n == 0) return "0";
  std::vector<std::vector<std::pair<std::size_t, int>>> adj(n);
  for (const auto& e : edges_) {
    adj[e.a].push_back({e.b, edge_code(e, e.a)});
    adj[e.b].push_back({e.a, edge_code(e, e.b)});
  }

  // Colour refinement to split nodes into cells of candidates for each position.
  std::vector<long> label(n);
  for (std::size_t i = 0; i < n; ++i) label[i] = colors_[i] == Color::White ? 0 : 1;
  std::size_t classes = 0;
  for (std::size_t round = 0; round <= n; ++round) {
    std::vector<std::vector<long>> sig(n);
    for (std::size_t i = 0; i < n; ++i) {
      sig[i].push_back(label[i]);
      sig[i].push_back(partner_[i] ? label[*partner_[i]] : -1);
      std::vector<long> nb;
      for (auto [j, c] : adj[i]) nb.push_back(100 * label[j] + c);
      std::sort(nb.begin(), nb.end());
      sig[i].insert(sig[i].end(), nb.begin(), nb.end());
    }
    std::vector<std::vector<long>> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t i = 0; i < n; ++i)
      label[i] = std::lower_bound(sorted.begin(), sorted.end(), sig[i]) - sorted.begin();
    if (sorted.size() == classes) break;
    classes = sorted.size();
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return label[x] != label[y] ? label[x] < label[y] : x < y;
  });
  std::vector<std::pair<std::size_t, std::size_t>> cells;  // [begin, end) into order
  for (std::size_t b = 0; b < n;) {
    std::size_t e = b;
    while (e < n && label[order[e]] == label[order[b]]) ++e;
    cells.emplace_back(b, e);
    b = e;
  }

  std::vector<std::vector<int>> code_of(n, std::vector<int>(n, 0));
  for (const auto& e : edges_) {
    code_of[e.a][e.b] = edge_code(e, e.a);
    code_of[e.b][e.a] = edge_code(e, e.b);
  }
  auto encode = [&](const std::vector<std::size_t>& perm) {
    std::vector<std::size_t> pos(n);
    for (std::size_t p = 0; p < n; ++p) pos[perm[p]] = p;
    std::vector<int> code;
    code.reserve(n * n);
    for (std::size_t p = 0; p < n; ++p) {
      code.push_back(colors_[perm[p]] == Color::White ? 0 : 1);
      code.push_back(partner_[perm[p]] ? static_cast<int>(pos[*partner_[perm[p]]]) : -1);
    }
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) code.push_back(code_of[perm[p]][perm[q]]);
    return code;
  };

  // Enumerate permutations inside each cell (odometer over cells).
  for (auto [b, e] : cells) std::sort(order.begin() + b, order.begin() + e);
  std::vector<int> best = encode(order);
  while (true) {
    std::size_t c = cells.size();
    while (c-- > 0) {
      auto [b, e] = cells[c];
      if (std::next_permutation(order.begin() + b, order.begin() + e)) break;
      // next_permutation wrapped this cell back to sorted order; carry left.
    }
    if (c == SIZE_MAX) break;
    best = std::min(best, encode(order));
  }

  std::ostringstream os;
  os << n << ':';
  for (int v : best) os << v << ',';
  return os.str();
}

std::string SatakeDiagram::to_record() const {
  std::ostringstream os;
  os << "nodes=" << size() << " colors=";
  if (empty()) os << '-';
  for (auto c : colors_) os << (c == Color::White ? 'W' : 'B');
  os << " edges=";
  if (edges_.empty()) os << '-';
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (i) os << ',';
    os << e.a << (e.multiplicity == 1 ? "-" : e.multiplicity == 2 ? "=>" : "#>") << e.b;
  }
  os << " arrows=";
  const auto arr = arrows();
  if (arr.empty()) os << '-';
  for (std::size_t i = 0; i < arr.size(); ++i) os << (i ? "," : "") << arr[i].first << '-' << arr[i].second;
  return os.str();
}

SatakeDiagram SatakeDiagram::from_record(const std::string& record) {
  std::map<std::string, std::string> fields;
  std::istringstream is(record);
  std::string tok;
  while (is >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw ParameterError("Satake record: malformed field '" + tok + "'");
    fields[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  for (const char* key : {"nodes", "colors", "edges", "arrows"})
    if (!fields.count(key)) throw ParameterError(std::string("Satake record: missing field ") + key);
  const std::size_t n = std::stoul(fields["nodes"]);
  std::vector<Color> colors;
  if (fields["colors"] != "-")
    for (char c : fields["colors"]) {
      if (c != 'W' && c != 'B') throw ParameterError("Satake record: colors must be W or B");
      colors.push_back(c == 'W' ? Color::White : Color::Black);
    }
  if (colors.size() != n) throw ParameterError("Satake record: color count differs from node count");

  auto split = [](const std::string& s) {
    std::vector<std::string> out;
    if (s == "-") return out;
    std::istringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
  };
  static const std::regex edge_re(R"((\d+)(-|=>|#>)(\d+))");
  std::vector<Edge> edges;
  for (const auto& item : split(fields["edges"])) {
    std::smatch mt;
    if (!std::regex_match(item, mt, edge_re)) throw ParameterError("Satake record: bad edge '" + item + "'");
    const int mult = mt[2] == "-" ? 1 : mt[2] == "=>" ? 2 : 3;
    edges.push_back({std::stoul(mt[1]), std::stoul(mt[3]), mult});
  }
  static const std::regex arrow_re(R"((\d+)-(\d+))");
  std::vector<std::pair<std::size_t, std::size_t>> arrows;
  for (const auto& item : split(fields["arrows"])) {
    std::smatch mt;
    if (!std::regex_match(item, mt, arrow_re)) throw ParameterError("Satake record: bad arrow '" + item + "'");
    arrows.emplace_back(std::stoul(mt[1]), std::stoul(mt[2]));
  }
  return SatakeDiagram(std::move(colors), std::move(edges), std::move(arrows));
}

// --- combinatorics ----------------------------------------------------------

Dim rank(const SatakeDiagram& d) { return d.white_count() - d.arrow_count(); }

std::vector<SatakeDiagram> subdiagram_step(const SatakeDiagram& d) {
  std::vector<SatakeDiagram> out;
  std::set<std::string> seen;
  auto add = [&](SatakeDiagram s) {
    if (seen.insert(s.canonical_form()).second) out.push_back(std::move(s));
  };
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d.colors()[i] == Color::White && !d.arrow_partner(i)) add(d.remove({i}));
  for (auto [i, j] : d.arrows()) add(d.remove({i, j}));
  return out;
}

std::vector<SatakeDiagram> all_subdiagrams(const SatakeDiagram& d) {
  std::vector<SatakeDiagram> out{d};
  std::set<std::string> seen{d.canonical_form()};
  for (std::size_t next = 0; next < out.size(); ++next) {
    for (auto& s : subdiagram_step(out[next]))
      if (seen.insert(s.canonical_form()).second) out.push_back(std::move(s));
  }
  if (seen.insert(SatakeDiagram().canonical_form()).second) out.emplace_back();
  return out;
}

std::vector<SatakeDiagram> connected_proper_subdiagrams(const SatakeDiagram& d) {
  std::vector<SatakeDiagram> out;
  const std::string self = d.canonical_form();
  for (auto& s : all_subdiagrams(d))
    if (!s.empty() && s.is_connected() && s.canonical_form() != self) out.push_back(std::move(s));
  return out;
}

// --- families ---------------------------------------------------------------

namespace {

std::vector<Edge> chain(std::size_t k) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < k; ++i) e.push_back({i, i + 1, 1});
  return e;
}

std::vector<Edge> type_B(std::size_t k) {
  auto e = chain(k);
  if (k >= 2) e.back() = {k - 2, k - 1, 2};
  return e;
}

std::vector<Edge> type_C(std::size_t k) {
  auto e = chain(k);
  if (k >= 2) e.back() = {k - 1, k - 2, 2};
  return e;
}

/// D_k: chain 0..k-3, nodes k-2 and k-1 both attached to k-3.
std::vector<Edge> type_D(std::size_t k) {
  std::vector<Edge> e;
  if (k < 3) return e;
  e = chain(k - 1);
  e.push_back({k - 3, k - 1, 1});
  return e;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

}  // namespace

SatakeDiagram family_AI(int n) {
  require(n >= 2, "AI(n) needs n >= 2");
  const auto k = static_cast<std::size_t>(n - 1);
  return SatakeDiagram(std::vector<Color>(k, Color::White), chain(k), {});
}

SatakeDiagram family_AII(int n) {
  require(n >= 1, "AII(n) needs n >= 1");
  const auto k = static_cast<std::size_t>(2 * n - 1);
  std::vector<Color> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i % 2 == 0 ? Color::Black : Color::White;
  return SatakeDiagram(std::move(c), chain(k), {});
}

SatakeDiagram family_AIII(int p, int q) {
  require(p >= 1 && q >= 1, "AIII(p,q) needs p, q >= 1");
  if (p > q) std::swap(p, q);
  const auto k = static_cast<std::size_t>(p + q - 1);
  const auto pp = static_cast<std::size_t>(p);
  std::vector<Color> c(k, Color::Black);
  std::vector<std::pair<std::size_t, std::size_t>> arrows;
  for (std::size_t i = 0; i < pp; ++i) {
    c[i] = c[k - 1 - i] = Color::White;
    if (i < k - 1 - i) arrows.emplace_back(i, k - 1 - i);
  }
  return SatakeDiagram(std::move(c), chain(k), std::move(arrows));
}

SatakeDiagram family_BDI(int p, int q) {
  require(p >= 1 && q >= 1 && p + q >= 3, "BDI(p,q) needs p, q >= 1 and p + q >= 3");
  if (p < q) std::swap(p, q);
  const auto qq = static_cast<std::size_t>(q);
  if ((p + q) % 2 == 1) {
    const auto k = static_cast<std::size_t>((p + q - 1) / 2);
    std::vector<Color> c(k, Color::Black);
    for (std::size_t i = 0; i < qq; ++i) c[i] = Color::White;
    return SatakeDiagram(std::move(c), type_B(k), {});
  }
  const auto k = static_cast<std::size_t>((p + q) / 2);
  std::vector<Color> c(k, Color::Black);
  std::vector<std::pair<std::size_t, std::size_t>> arrows;
  if (qq + 1 >= k) {
    std::fill(c.begin(), c.end(), Color::White);
    if (qq + 1 == k) arrows.emplace_back(k - 2, k - 1);
  } else {
    for (std::size_t i = 0; i < qq; ++i) c[i] = Color::White;
  }
  return SatakeDiagram(std::move(c), type_D(k), std::move(arrows));
}

SatakeDiagram family_CI(int n) {
  require(n >= 1, "CI(n) needs n >= 1");
  const auto k = static_cast<std::size_t>(n);
  return SatakeDiagram(std::vector<Color>(k, Color::White), type_C(k), {});
}

SatakeDiagram family_CII(int p, int q) {
  require(p >= 1 && q >= 1, "CII(p,q) needs p, q >= 1");
  if (p < q) std::swap(p, q);
  const auto k = static_cast<std::size_t>(p + q);
  std::vector<Color> c(k, Color::Black);
  for (std::size_t i = 1; i < 2 * static_cast<std::size_t>(q); i += 2) c[i] = Color::White;
  return SatakeDiagram(std::move(c), type_C(k), {});
}

SatakeDiagram family_DIII(int n) {
  require(n >= 2, "DIII(n) needs n >= 2");
  const auto k = static_cast<std::size_t>(n);
  std::vector<Color> c(k, Color::Black);
  for (std::size_t i = 1; i + 2 < k; i += 2) c[i] = Color::White;
  std::vector<std::pair<std::size_t, std::size_t>> arrows;
  if (k % 2 == 0) {
    c[k - 1] = Color::White;
  } else {
    c[k - 2] = c[k - 1] = Color::White;
    arrows.emplace_back(k - 2, k - 1);
  }
  return SatakeDiagram(std::move(c), type_D(k), std::move(arrows));
}

SatakeDiagram family_diagonal_A(int k) {
  require(k >= 1, "diagA(k) needs k >= 1");
  const auto kk = static_cast<std::size_t>(k);
  auto edges = chain(kk);
  for (const auto& e : chain(kk)) edges.push_back({e.a + kk, e.b + kk, 1});
  std::vector<std::pair<std::size_t, std::size_t>> arrows;
  for (std::size_t i = 0; i < kk; ++i) arrows.emplace_back(i, kk + i);
  return SatakeDiagram(std::vector<Color>(2 * kk, Color::White), std::move(edges), std::move(arrows));
}

// --- catalog ----------------------------------------------------------------

std::string normalize_label(const std::string& label) {
  std::string out;
  for (char c : label) {
    if (c == ' ' || c == '(' || c == ')' || c == '\t') continue;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

Catalog Catalog::parse(const std::string& text) {
  Catalog cat;
  std::istringstream is(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line.substr(first));
    std::string kw;
    ls >> kw;
    if (kw == "version") {
      ls >> cat.version_;
    } else if (kw == "diagram") {
      const auto bar = line.find('|');
      if (bar == std::string::npos)
        throw ParameterError("catalog line " + std::to_string(lineno) + ": missing '|'");
      std::string label = line.substr(first + 7, bar - first - 7);
      label.erase(0, label.find_first_not_of(" \t"));
      label.erase(label.find_last_not_of(" \t") + 1);
      std::istringstream rs(line.substr(bar + 1));
      std::string record, tok;
      std::optional<Dim> declared;
      while (rs >> tok) {
        if (tok.rfind("rank=", 0) == 0) declared = std::stoul(tok.substr(5));
        else record += tok + " ";
      }
      cat.entries_.push_back({label, SatakeDiagram::from_record(record), declared});
    } else {
      throw ParameterError("catalog line " + std::to_string(lineno) + ": unknown keyword '" + kw + "'");
    }
  }
  if (cat.version_ != 1) throw ParameterError("catalog: unsupported or missing version");
  return cat;
}

Catalog Catalog::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("catalog: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

const Catalog& Catalog::builtin() {
  static const Catalog cat = parse(detail::kBuiltinCatalog);
  return cat;
}

SatakeDiagram Catalog::get(const std::string& label) const {
  const std::string key = normalize_label(label);
  for (const auto& e : entries_)
    if (normalize_label(e.label) == key) return e.diagram;

  std::string compact;
  for (char c : label)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  static const std::regex param_re(R"((AI|AII|AIII|BDI|CI|CII|DIII|diagA)\((\d+)(?:,(\d+))?\))",
                                   std::regex::icase);
  static const std::regex so_gl_re(R"(so\((\d+)\)/gl\((\d+)\))", std::regex::icase);
  std::smatch mt;
  if (std::regex_match(compact, mt, param_re)) {
    std::string fam = mt[1];
    for (auto& c : fam) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    const int a = std::stoi(mt[2]);
    const bool two = mt[3].matched;
    const int b = two ? std::stoi(mt[3]) : 0;
    if (fam == "AI" && !two) return family_AI(a);
    if (fam == "AII" && !two) return family_AII(a);
    if (fam == "AIII" && two) return family_AIII(a, b);
    if (fam == "BDI" && two) return family_BDI(a, b);
    if (fam == "CI" && !two) return family_CI(a);
    if (fam == "CII" && two) return family_CII(a, b);
    if (fam == "DIII" && !two) return family_DIII(a);
    if (fam == "DIAGA" && !two) return family_diagonal_A(a);
  } else if (std::regex_match(compact, mt, so_gl_re)) {
    const int k = std::stoi(mt[1]), j = std::stoi(mt[2]);
    if (k == 2 * j) return family_DIII(j);
  }
  throw ParameterError("unknown Satake catalog label '" + label + "'");
}

std::optional<Dim> Catalog::expected_rank(const std::string& label) const {
  const std::string key = normalize_label(label);
  for (const auto& e : entries_)
    if (normalize_label(e.label) == key) return e.declared_rank;
  std::string compact;
  for (char c : label)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  static const std::regex param_re(R"((AI|AII|AIII|BDI|CI|CII|DIII|diagA)\((\d+)(?:,(\d+))?\))",
                                   std::regex::icase);
  std::smatch mt;
  if (!std::regex_match(compact, mt, param_re)) return std::nullopt;
  std::string fam = mt[1];
  for (auto& c : fam) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  const Dim a = std::stoul(mt[2]);
  const Dim b = mt[3].matched ? std::stoul(mt[3]) : 0;
  if (fam == "AI" || fam == "AII") return a - 1;
  if (fam == "CI" || fam == "DIAGA") return a;
  if (fam == "DIII") return a / 2;
  if (fam == "AIII" || fam == "BDI" || fam == "CII") return std::min(a, b);
  return std::nullopt;
}

std::optional<std::string> Catalog::identify(const SatakeDiagram& d) const {
  const std::string key = d.canonical_form();
  for (const auto& e : entries_)
    if (e.diagram.canonical_form() == key) return e.label;

  const int k = static_cast<int>(d.size());
  if (k == 0) return std::nullopt;
  std::vector<std::pair<std::string, SatakeDiagram>> candidates;
  auto two = [](const char* f, int a, int b) {
    return std::string(f) + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  };
  auto one = [](const char* f, int a) { return std::string(f) + "(" + std::to_string(a) + ")"; };
  candidates.emplace_back(one("AI", k + 1), family_AI(k + 1));
  if (k % 2 == 1) candidates.emplace_back(one("AII", (k + 1) / 2), family_AII((k + 1) / 2));
  for (int p = 1; 2 * p <= k + 1; ++p) candidates.emplace_back(two("AIII", p, k + 1 - p), family_AIII(p, k + 1 - p));
  for (int q = 1; 2 * q <= 2 * k + 1; ++q) {
    const int p = 2 * k + 1 - q;
    if (p >= q) candidates.emplace_back(two("BDI", p, q), family_BDI(p, q));
  }
  if (k >= 2)
    for (int q = 1; 2 * q <= 2 * k; ++q) candidates.emplace_back(two("BDI", 2 * k - q, q), family_BDI(2 * k - q, q));
  if (k >= 2) candidates.emplace_back(one("CI", k), family_CI(k));
  for (int q = 1; 2 * q <= k; ++q) candidates.emplace_back(two("CII", k - q, q), family_CII(k - q, q));
  if (k >= 2) candidates.emplace_back(one("DIII", k), family_DIII(k));
  if (k % 2 == 0) candidates.emplace_back(one("diagA", k / 2), family_diagonal_A(k / 2));
  for (const auto& [label, diagram] : candidates)
    if (diagram.canonical_form() == key) return label;
  return std::nullopt;
}

}  // namespace commvar::satake
