#pragma once

#include "gitcomb/binary_form.hpp"
#include "gitcomb/linearization.hpp"
#include "gitcomb/projective.hpp"
#include "gitcomb/stability.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace gitcomb {

/// A degree-labeled tree: the dual graph of a genus-0 nodal curve, with marks
/// attached to nodes. Marks sharing a location id sit at the same point of
/// their component.
struct DegreeTree {
  std::vector<int> degrees;
  std::vector<std::pair<int, int>> edges;

  struct Mark {
    int id;
    int node;
    int location;
  };
  std::vector<Mark> marks;

  int node_count() const { return static_cast<int>(degrees.size()); }
  int total_degree() const;
  void validate() const;  // connected, acyclic, labels in range
  std::vector<std::vector<int>> adjacency() const;
};

struct Tooth {
  ProjPoint attach;
  int degree = 0;
  std::vector<int> marks;
  std::optional<DegreeTree> subtree;  // nested structure; contraction only uses attach + degree
};

/// A graph-space domain curve: a parametrized handle carrying basepoint-free
/// forms of degree d' plus teeth glued at distinct points.
class Comb {
 public:
  Comb(std::vector<BinaryForm> handle_forms, std::map<int, ProjPoint> handle_marks,
       std::vector<Tooth> teeth, int n, int d);

  const std::vector<BinaryForm>& handle_forms() const { return handle_forms_; }
  const std::map<int, ProjPoint>& handle_marks() const { return handle_marks_; }
  const std::vector<Tooth>& teeth() const { return teeth_; }
  int n() const { return n_; }
  int d() const { return d_; }
  int handle_degree() const { return handle_forms_.front().degree(); }

 private:
  std::vector<BinaryForm> handle_forms_;
  std::map<int, ProjPoint> handle_marks_;  // mark index (1-based) -> location
  std::vector<Tooth> teeth_;
  int n_, d_;
};

/// The contraction to the linear sigma model: forms f_j * h with
/// h = prod over teeth of the linear form at the attach point to the tooth's
/// degree; tooth marks evaluate to their attach point.
Configuration contract(const Comb& c);

/// Attach points and handle mark locations mapped by g, handle forms composed
/// with g^{-1}; tooth structure unchanged.
Comb act_on_comb(const MobiusTransform& g, const Comb& c);

/// The dual tree after dropping the handle's parametrization, with the handle
/// contracted when it becomes unstable (degree 0, fewer than 3 special points).
DegreeTree forgetful_stabilize(const Comb& c);

/// For odd total degree: the unique node such that every complementary branch
/// has degree sum < d/2. Throws on even total degree.
int unique_handle(const DegreeTree& t);

/// The three conditions for an n-stable degree-1 morphism, on a tree with N
/// marks and a distinguished parametrized node.
bool n_stable_check(const DegreeTree& t, int parametrized_node, int N, int n);

/// (r+1)(k-1) + 1
int intermediate_threshold(int k, int r);

/// stability_status of the contracted configuration.
StabilityStatus comb_git_status(const Comb& c, const Linearization& k);

}  // namespace gitcomb
