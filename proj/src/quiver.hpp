#ifndef GKLOVERIFY_QUIVER_HPP
#define GKLOVERIFY_QUIVER_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rational.hpp"

namespace gklo {

struct Edge {
  int source;
  int target;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Simply-laced quiver with a fixed-point-free vertex involution.  The edge
// involution, the positive/negative splits and the Cartan data are derived
// once the axioms have been checked.
class Quiver {
public:
  Quiver(std::vector<int> vertices, std::vector<Edge> edges, std::map<int, int> tau);

  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_vertex(int i) const { return tau_.count(i) != 0; }
  int tau(int i) const;
  // Index of the involuted edge; meaningful only on a valid quiver.
  int tau_edge(int h) const { return edge_tau_.at(h); }
  bool edge_is_tau_fixed(int h) const;

  // Lowest vertex id of each tau orbit.
  bool in_q0_plus(int i) const;
  std::vector<int> q0_plus() const;
  // Edge split of the non-fixed edges: an edge is positive when its
  // (source,target) pair is lexicographically smaller than its involute's.
  bool in_q1_plus(int h) const;

  // Raw axiom checks; each violation names the axiom and the offender.
  struct Violation {
    std::string axiom;
    std::string detail;
  };
  std::vector<Violation> structural_violations() const;

private:
  std::vector<int> vertices_;
  std::vector<Edge> edges_;
  std::map<int, int> tau_;
  std::vector<int> edge_tau_;  // -1 where no involuted edge exists
  void derive_edge_tau();
};

struct DimensionData {
  std::map<int, int> v;
  std::map<int, int> w;
  int v_at(int i) const;
  int w_at(int i) const;
};

std::vector<Quiver::Violation> validate(const Quiver& q, const DimensionData& d);

// Cartan matrix of the underlying graph, the shift coweight pairings
// <alpha_i, mu> and the boundary parameters zeta_i (stored as hbar * zeta_i,
// a rational of magnitude 2^{-c_{i,tau i}}).
class CartanData {
public:
  CartanData(const Quiver& q, const DimensionData& d);

  int c(int i, int j) const;
  int mu_pairing(int i) const;
  const Rational& zeta_hbar(int i) const;
  int delta_arrow(int i) const;  // 1 iff some edge runs i -> tau(i)

private:
  std::map<std::pair<int, int>, int> offdiag_;
  std::map<int, int> mu_;
  std::map<int, Rational> zeta_;
  std::map<int, int> delta_;
  std::set<int> known_;
};

}  // namespace gklo

#endif
