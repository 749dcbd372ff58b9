#ifndef COMMVAR_SATAKE_HPP
#define COMMVAR_SATAKE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace commvar::satake {

using Dim = std::size_t;

enum class Color { White, Black };

/// Dynkin edge. For multiplicity > 1, `a` is the long root and `b` the short one.
struct Edge {
  std::size_t a = 0;
  std::size_t b = 0;
  int multiplicity = 1;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Dynkin diagram with black/white nodes and an arrow involution on white nodes.
/// Roots are never materialized; only the colored graph is.
class SatakeDiagram {
public:
  SatakeDiagram() = default;
  /// Validates: arrows pair distinct white nodes, every node is in at most one
  /// arrow, and each edge-connected component is a finite-type Dynkin diagram.
  SatakeDiagram(std::vector<Color> colors, std::vector<Edge> edges,
                std::vector<std::pair<std::size_t, std::size_t>> arrows);

  std::size_t size() const { return colors_.size(); }
  bool empty() const { return colors_.empty(); }
  const std::vector<Color>& colors() const { return colors_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::vector<std::pair<std::size_t, std::size_t>> arrows() const;
  std::optional<std::size_t> arrow_partner(std::size_t node) const { return partner_[node]; }

  Dim white_count() const;
  Dim arrow_count() const;

  /// Subdiagram on the complement of `nodes`; incident edges and arrows go too.
  SatakeDiagram remove(const std::vector<std::size_t>& nodes) const;
  /// Connectivity through Dynkin edges and arrows together.
  bool is_connected() const;
  /// Cartan type of the underlying Dynkin diagram, e.g. "A2+A1"; "0" when empty.
  std::string dynkin_type() const;
  /// Isomorphism invariant: equal iff the colored graphs with arrows are isomorphic.
  std::string canonical_form() const;

  /// One-line record: `nodes=6 colors=WWWWWW edges=0-1,1-2 arrows=0-4`.
  std::string to_record() const;
  static SatakeDiagram from_record(const std::string& record);

  friend bool operator==(const SatakeDiagram& x, const SatakeDiagram& y) {
    return x.canonical_form() == y.canonical_form();
  }

private:
  std::vector<Color> colors_;
  std::vector<Edge> edges_;
  std::vector<std::optional<std::size_t>> partner_;
};

/// (#white nodes) - (#arrows).
Dim rank(const SatakeDiagram& d);

/// Removal of one arrow-free white node or of one arrow pair; results are
/// deduplicated up to isomorphism.
std::vector<SatakeDiagram> subdiagram_step(const SatakeDiagram& d);

/// Closure of subdiagram_step, one representative per isomorphism class,
/// including d itself and the empty diagram.
std::vector<SatakeDiagram> all_subdiagrams(const SatakeDiagram& d);

/// Members of all_subdiagrams that are connected, nonempty, and not isomorphic to d.
std::vector<SatakeDiagram> connected_proper_subdiagrams(const SatakeDiagram& d);

// Parametric families, following the standard Satake tables.
SatakeDiagram family_AI(int n);           // sl_n / so_n
SatakeDiagram family_AII(int n);          // sl_2n / sp_2n
SatakeDiagram family_AIII(int p, int q);  // sl_{p+q} / s(gl_p + gl_q)
SatakeDiagram family_BDI(int p, int q);   // so_{p+q} / so_p + so_q, p + q >= 3
SatakeDiagram family_CI(int n);           // sp_2n / gl_n
SatakeDiagram family_CII(int p, int q);   // sp_{2p+2q} / sp_2p + sp_2q
SatakeDiagram family_DIII(int n);         // so_2n / gl_n
SatakeDiagram family_diagonal_A(int k);   // (sl_{k+1} + sl_{k+1}, sl_{k+1})

/// Label normalization used for lookups: lowercase, no spaces or parentheses.
std::string normalize_label(const std::string& label);

class Catalog {
public:
  struct Entry {
    std::string label;
    SatakeDiagram diagram;
    std::optional<Dim> declared_rank;  // rank of the pair, when the record states it
  };

  /// Parses the versioned text format (see data/satake_catalog.txt).
  static Catalog parse(const std::string& text);
  static Catalog load(const std::string& path);
  /// The catalog compiled into the library.
  static const Catalog& builtin();

  int version() const { return version_; }
  const std::vector<Entry>& entries() const { return entries_; }

  /// Literal labels from the data file, or parametric labels such as
  /// "BDI(5,3)", "AIII(2,4)", "DIII(4)", "CII(3,2)", "AI(3)", "diagA(2)".
  /// Throws ParameterError for unknown labels.
  SatakeDiagram get(const std::string& label) const;

  /// Rank of the pair named by a label: the declared rank of a literal entry,
  /// or the family's rank for a parametric label.
  std::optional<Dim> expected_rank(const std::string& label) const;

  /// Label of the first literal entry isomorphic to d, then of the first
  /// parametric family member with the same node count.
  std::optional<std::string> identify(const SatakeDiagram& d) const;

private:
  int version_ = 0;
  std::vector<Entry> entries_;
};

}  // namespace commvar::satake

#endif  // COMMVAR_SATAKE_HPP
