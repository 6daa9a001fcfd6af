#include "quiver.hpp"

#include <algorithm>

namespace gklo {

Quiver::Quiver(std::vector<int> vertices, std::vector<Edge> edges, std::map<int, int> tau)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), tau_(std::move(tau)) {
  derive_edge_tau();
}

int Quiver::tau(int i) const {
  auto it = tau_.find(i);
  if (it == tau_.end()) throw IndexError("unknown vertex " + std::to_string(i));
  return it->second;
}

void Quiver::derive_edge_tau() {
  edge_tau_.assign(edges_.size(), -1);
  for (size_t h = 0; h < edges_.size(); ++h) {
    auto s = tau_.find(edges_[h].target);
    auto t = tau_.find(edges_[h].source);
    if (s == tau_.end() || t == tau_.end()) continue;
    for (size_t g = 0; g < edges_.size(); ++g) {
      if (edges_[g].source == s->second && edges_[g].target == t->second) {
        edge_tau_[h] = static_cast<int>(g);
        break;
      }
    }
  }
}

bool Quiver::edge_is_tau_fixed(int h) const { return edge_tau_.at(h) == h; }

bool Quiver::in_q0_plus(int i) const { return i < tau(i); }

std::vector<int> Quiver::q0_plus() const {
  std::vector<int> out;
  for (int i : vertices_)
    if (in_q0_plus(i)) out.push_back(i);
  return out;
}

bool Quiver::in_q1_plus(int h) const {
  if (edge_is_tau_fixed(h)) return false;
  int g = edge_tau_.at(h);
  const Edge& a = edges_.at(h);
  const Edge& b = edges_.at(g);
  return std::pair(a.source, a.target) < std::pair(b.source, b.target);
}

std::vector<Quiver::Violation> Quiver::structural_violations() const {
  std::vector<Violation> out;
  std::set<int> vset(vertices_.begin(), vertices_.end());
  if (vset.size() != vertices_.size())
    out.push_back({"distinct-vertices", "duplicate vertex id in vertex list"});

  // tau is a fixed-point-free involution covering every vertex
  for (int i : vertices_) {
    auto it = tau_.find(i);
    if (it == tau_.end()) {
      out.push_back({"tau-total", "vertex " + std::to_string(i) + " has no tau image"});
      continue;
    }
    if (it->second == i)
      out.push_back({"fixed-point-free", "tau fixes vertex " + std::to_string(i)});
    if (!vset.count(it->second))
      out.push_back({"tau-range", "tau maps " + std::to_string(i) + " outside the vertex set"});
    else if (tau_.count(it->second) && tau_.at(it->second) != i)
      out.push_back({"involution", "tau^2 does not fix vertex " + std::to_string(i)});
  }
  for (const auto& [a, b] : tau_) {
    if (!vset.count(a))
      out.push_back({"tau-domain", "tau defined on unknown vertex " + std::to_string(a)});
  }

  // no self loops, at most one edge per unordered pair
  std::map<std::pair<int, int>, int> pair_count;
  for (size_t h = 0; h < edges_.size(); ++h) {
    const Edge& e = edges_[h];
    if (!vset.count(e.source) || !vset.count(e.target)) {
      out.push_back({"edge-endpoints", "edge " + std::to_string(h) + " touches an unknown vertex"});
      continue;
    }
    if (e.source == e.target)
      out.push_back({"no-self-loop", "edge at vertex " + std::to_string(e.source)});
    pair_count[std::minmax(e.source, e.target)]++;
  }
  for (const auto& [pr, n] : pair_count)
    if (n > 1)
      out.push_back({"edge-multiplicity", "more than one edge between " +
                                              std::to_string(pr.first) + " and " +
                                              std::to_string(pr.second)});

  // edge involution exists, is unique and compatible with the vertex involution
  if (out.empty()) {
    for (size_t h = 0; h < edges_.size(); ++h) {
      if (edge_tau_[h] < 0) {
        out.push_back({"edge-involution",
                       "no involuted partner for edge " + std::to_string(edges_[h].source) +
                           ">" + std::to_string(edges_[h].target)});
        continue;
      }
      int g = edge_tau_[h];
      if (edge_tau_[g] != static_cast<int>(h))
        out.push_back({"edge-involution", "edge involution is not involutive at edge " +
                                              std::to_string(h)});
      // tau(s(h)) = t(h) iff tau(h) = h
      bool fixed = (g == static_cast<int>(h));
      bool reversing = tau_.at(edges_[h].source) == edges_[h].target;
      if (fixed != reversing)
        out.push_back({"tau-fixed-edge", "edge " + std::to_string(edges_[h].source) + ">" +
                                             std::to_string(edges_[h].target) +
                                             " violates the fixed-edge characterization"});
    }
  }
  return out;
}

int DimensionData::v_at(int i) const {
  auto it = v.find(i);
  return it == v.end() ? 0 : it->second;
}

int DimensionData::w_at(int i) const {
  auto it = w.find(i);
  return it == w.end() ? 0 : it->second;
}

std::vector<Quiver::Violation> validate(const Quiver& q, const DimensionData& d) {
  std::vector<Quiver::Violation> out = q.structural_violations();
  for (int i : q.vertices()) {
    if (d.v_at(i) < 0 || d.w_at(i) < 0)
      out.push_back({"dims-nonnegative", "negative dimension at vertex " + std::to_string(i)});
  }
  if (out.empty()) {
    for (int i : q.vertices()) {
      if (d.v_at(i) != d.v_at(q.tau(i)))
        out.push_back({"v-tau-invariant",
                       "v is not tau-invariant at vertex " + std::to_string(i)});
    }
  }
  return out;
}

CartanData::CartanData(const Quiver& q, const DimensionData& d) {
  for (int i : q.vertices()) known_.insert(i);
  for (const Edge& e : q.edges()) {
    offdiag_[std::minmax(e.source, e.target)]--;
  }
  for (int i : q.vertices()) {
    int ti = q.tau(i);
    int delta = 0;
    for (const Edge& e : q.edges())
      if (e.source == i && e.target == ti) delta = 1;
    delta_[i] = delta;

    int sum_out_i = 0, sum_out_ti = 0;
    for (const Edge& e : q.edges()) {
      if (e.source == i) sum_out_i += d.v_at(e.target);
      if (e.source == ti) sum_out_ti += d.v_at(e.target);
    }
    int c_itaui = 0;
    auto it = offdiag_.find(std::minmax(i, ti));
    if (it != offdiag_.end()) c_itaui = it->second;

    mu_[i] = -c_itaui + d.w_at(i) + d.w_at(ti) - 2 * d.v_at(i) + sum_out_i + sum_out_ti;

    int exponent = d.v_at(i) - 1 + delta + d.w_at(i) + sum_out_i;
    Rational z = pow_rational(Rational(2), -c_itaui);
    if (exponent % 2 != 0) z = -z;
    zeta_[i] = z;
  }
}

int CartanData::c(int i, int j) const {
  if (!known_.count(i) || !known_.count(j))
    throw IndexError("cartan: unknown vertex");
  if (i == j) return 2;
  auto it = offdiag_.find(std::minmax(i, j));
  return it == offdiag_.end() ? 0 : it->second;
}

int CartanData::mu_pairing(int i) const {
  auto it = mu_.find(i);
  if (it == mu_.end()) throw IndexError("mu_pairing: unknown vertex " + std::to_string(i));
  return it->second;
}

const Rational& CartanData::zeta_hbar(int i) const {
  auto it = zeta_.find(i);
  if (it == zeta_.end()) throw IndexError("zeta: unknown vertex " + std::to_string(i));
  return it->second;
}

int CartanData::delta_arrow(int i) const {
  auto it = delta_.find(i);
  if (it == delta_.end()) throw IndexError("delta_arrow: unknown vertex " + std::to_string(i));
  return it->second;
}

}  // namespace gklo
