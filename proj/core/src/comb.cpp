#include "gitcomb/comb.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gitcomb {

int DegreeTree::total_degree() const {
  return std::accumulate(degrees.begin(), degrees.end(), 0);
}

std::vector<std::vector<int>> DegreeTree::adjacency() const {
  std::vector<std::vector<int>> adj(node_count());
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

void DegreeTree::validate() const {
  const int m = node_count();
  if (m == 0) throw std::invalid_argument("DegreeTree: empty tree");
  for (int deg : degrees)
    if (deg < 0) throw std::invalid_argument("DegreeTree: negative degree label");
  for (auto [a, b] : edges)
    if (a < 0 || a >= m || b < 0 || b >= m || a == b)
      throw std::invalid_argument("DegreeTree: edge endpoint out of range");
  if (static_cast<int>(edges.size()) != m - 1)
    throw std::invalid_argument("DegreeTree: edge count of a tree must be node count - 1");
  // Connectivity; acyclicity follows from the edge count.
  auto adj = adjacency();
  std::vector<char> seen(m, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : adj[v])
      if (!seen[u]) {
        seen[u] = 1;
        stack.push_back(u);
      }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw std::invalid_argument("DegreeTree: not connected");
  for (const Mark& mk : marks)
    if (mk.node < 0 || mk.node >= m)
      throw std::invalid_argument("DegreeTree: mark on missing node");
}

Comb::Comb(std::vector<BinaryForm> handle_forms, std::map<int, ProjPoint> handle_marks,
           std::vector<Tooth> teeth, int n, int d)
    : handle_forms_(std::move(handle_forms)),
      handle_marks_(std::move(handle_marks)),
      teeth_(std::move(teeth)),
      n_(n),
      d_(d) {
  if (handle_forms_.empty()) throw std::invalid_argument("Comb: handle forms required");
  for (const auto& f : handle_forms_)
    if (f.degree() != handle_forms_.front().degree())
      throw std::invalid_argument("Comb: handle forms must share one degree");
  if (gcd_forms(handle_forms_).degree() != 0)
    throw std::invalid_argument("Comb: handle forms must have no common root");

  int teeth_degree = 0;
  std::set<ProjPoint> attach_points;
  std::set<int> seen_marks;
  for (const auto& [id, loc] : handle_marks_) {
    if (id < 1 || id > n_) throw std::invalid_argument("Comb: handle mark index out of range");
    seen_marks.insert(id);
  }
  for (const Tooth& t : teeth_) {
    if (t.degree < 0) throw std::invalid_argument("Comb: negative tooth degree");
    teeth_degree += t.degree;
    if (!attach_points.insert(t.attach).second)
      throw std::invalid_argument("Comb: attach points must be pairwise distinct");
    for (const auto& [id, loc] : handle_marks_)
      if (loc == t.attach)
        throw std::invalid_argument("Comb: attach point collides with a handle mark");
    for (int id : t.marks) {
      if (id < 1 || id > n_) throw std::invalid_argument("Comb: tooth mark index out of range");
      if (!seen_marks.insert(id).second)
        throw std::invalid_argument("Comb: mark appears twice");
    }
    if (t.subtree) {
      t.subtree->validate();
      if (t.subtree->total_degree() != t.degree)
        throw std::invalid_argument("Comb: subtree degrees must sum to the tooth degree");
      auto adj = t.subtree->adjacency();
      for (int v = 0; v < t.subtree->node_count(); ++v) {
        if (t.subtree->degrees[v] > 0) continue;
        int special = static_cast<int>(adj[v].size());
        if (v == 0) special += 1 + static_cast<int>(t.marks.size());
        if (special < 3)
          throw std::invalid_argument("Comb: degree-0 subtree component needs 3 special points");
      }
    } else if (t.degree == 0 && static_cast<int>(t.marks.size()) < 2) {
      throw std::invalid_argument("Comb: degree-0 tooth needs at least two marks");
    }
  }
  if (static_cast<int>(seen_marks.size()) != n_)
    throw std::invalid_argument("Comb: every mark index in 1..n must appear exactly once");
  if (handle_degree() + teeth_degree != d_)
    throw std::invalid_argument("Comb: handle degree plus teeth degrees must equal d");
}

Configuration contract(const Comb& c) {
  BinaryForm h = BinaryForm::constant(1);
  for (const Tooth& t : c.teeth()) h = h * BinaryForm::linear_at(t.attach).pow(t.degree);

  std::vector<BinaryForm> forms;
  forms.reserve(c.handle_forms().size());
  for (const auto& f : c.handle_forms()) forms.push_back(f * h);

  std::vector<ProjPoint> points;
  points.reserve(c.n());
  for (int id = 1; id <= c.n(); ++id) {
    if (auto it = c.handle_marks().find(id); it != c.handle_marks().end()) {
      points.push_back(it->second);
      continue;
    }
    for (const Tooth& t : c.teeth())
      if (std::find(t.marks.begin(), t.marks.end(), id) != t.marks.end()) {
        points.push_back(t.attach);
        break;
      }
  }
  return Configuration(std::move(points), std::move(forms));
}

Comb act_on_comb(const MobiusTransform& g, const Comb& c) {
  MobiusTransform ginv = g.inverse();
  std::vector<BinaryForm> forms;
  for (const auto& f : c.handle_forms()) forms.push_back(form_compose(f, ginv));
  std::map<int, ProjPoint> marks;
  for (const auto& [id, loc] : c.handle_marks()) marks.emplace(id, mobius_apply(g, loc));
  std::vector<Tooth> teeth = c.teeth();
  for (Tooth& t : teeth) t.attach = mobius_apply(g, t.attach);
  return Comb(std::move(forms), std::move(marks), std::move(teeth), c.n(), c.d());
}

DegreeTree forgetful_stabilize(const Comb& c) {
  DegreeTree t;
  int next_location = 0;
  t.degrees.push_back(c.handle_degree());
  for (const auto& [id, loc] : c.handle_marks()) t.marks.push_back({id, 0, next_location++});
  for (const Tooth& tooth : c.teeth()) {
    int base = t.node_count();
    if (tooth.subtree) {
      for (int deg : tooth.subtree->degrees) t.degrees.push_back(deg);
      for (auto [a, b] : tooth.subtree->edges) t.edges.emplace_back(base + a, base + b);
    } else {
      t.degrees.push_back(tooth.degree);
    }
    t.edges.emplace_back(0, base);
    for (int id : tooth.marks) t.marks.push_back({id, base, next_location++});
  }

  // Collapse unstable degree-0 components: fewer than three special points.
  bool changed = true;
  while (changed && t.node_count() > 1) {
    changed = false;
    auto adj = t.adjacency();
    for (int v = 0; v < t.node_count() && !changed; ++v) {
      int mark_count = 0;
      for (const auto& mk : t.marks) mark_count += (mk.node == v);
      if (t.degrees[v] > 0 || static_cast<int>(adj[v].size()) + mark_count >= 3) continue;

      std::vector<int> nbrs = adj[v];
      std::vector<std::pair<int, int>> edges;
      for (auto [a, b] : t.edges)
        if (a != v && b != v) edges.emplace_back(a, b);
      if (nbrs.size() == 2) edges.emplace_back(nbrs[0], nbrs[1]);
      for (auto& mk : t.marks)
        if (mk.node == v && !nbrs.empty()) {
          mk.node = nbrs[0];
          mk.location = next_location;  // lands at the former attachment point
        }
      if (nbrs.empty()) continue;  // single unstable component, nothing to merge into
      ++next_location;

      // Renumber to drop v.
      auto remap = [v](int u) { return u > v ? u - 1 : u; };
      t.degrees.erase(t.degrees.begin() + v);
      t.edges.clear();
      for (auto [a, b] : edges) t.edges.emplace_back(remap(a), remap(b));
      for (auto& mk : t.marks) mk.node = remap(mk.node);
      changed = true;
    }
  }
  return t;
}

int unique_handle(const DegreeTree& t) {
  t.validate();
  const int d = t.total_degree();
  if (d % 2 == 0) throw std::invalid_argument("unique_handle: total degree must be odd");
  auto adj = t.adjacency();
  const int m = t.node_count();

  // Degree sum of the branch hanging off `v` through neighbour `u`.
  auto branch_sum = [&](int v, int u) {
    int sum = 0;
    std::vector<int> stack{u};
    std::vector<char> seen(m, 0);
    seen[v] = seen[u] = 1;
    while (!stack.empty()) {
      int w = stack.back();
      stack.pop_back();
      sum += t.degrees[w];
      for (int nb : adj[w])
        if (!seen[nb]) {
          seen[nb] = 1;
          stack.push_back(nb);
        }
    }
    return sum;
  };

  int found = -1;
  for (int v = 0; v < m; ++v) {
    bool ok = true;
    for (int u : adj[v])
      if (2 * branch_sum(v, u) >= d) {
        ok = false;
        break;
      }
    if (ok) {
      if (found >= 0) throw std::logic_error("unique_handle: handle is not unique");
      found = v;
    }
  }
  if (found < 0) throw std::logic_error("unique_handle: no handle found");
  return found;
}

bool n_stable_check(const DegreeTree& t, int parametrized_node, int N, int n) {
  t.validate();
  if (parametrized_node < 0 || parametrized_node >= t.node_count())
    throw std::invalid_argument("n_stable_check: parametrized node out of range");
  if (static_cast<int>(t.marks.size()) != N)
    throw std::invalid_argument("n_stable_check: tree carries a different number of marks");
  if (n < 1 || n > N - 1) throw std::invalid_argument("n_stable_check: need 1 <= n <= N-1");

  auto adj = t.adjacency();

  // (1) not more than N-n marks coincide
  std::map<std::pair<int, int>, int> groups;
  for (const auto& mk : t.marks) ++groups[{mk.node, mk.location}];
  for (const auto& [key, count] : groups)
    if (count > N - n) return false;

  for (int v = 0; v < t.node_count(); ++v) {
    if (v == parametrized_node) continue;
    int mark_count = 0;
    std::set<int> locations;
    for (const auto& mk : t.marks)
      if (mk.node == v) {
        ++mark_count;
        locations.insert(mk.location);
      }
    // (2) an ending curve off the parametrized component holds > N-n marks
    if (adj[v].size() <= 1 && mark_count <= N - n) return false;
    // (3) three distinct special points on every non-parametrized component
    if (static_cast<int>(locations.size() + adj[v].size()) < 3) return false;
  }
  return true;
}

int intermediate_threshold(int k, int r) {
  if (k < 1 || r < 0) throw std::invalid_argument("intermediate_threshold: need k >= 1, r >= 0");
  return (r + 1) * (k - 1) + 1;
}

StabilityStatus comb_git_status(const Comb& c, const Linearization& k) {
  return stability_status(contract(c), k);
}

}  // namespace gitcomb
