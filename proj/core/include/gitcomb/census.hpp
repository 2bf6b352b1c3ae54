#pragma once

#include "gitcomb/linearization.hpp"
#include "gitcomb/stability.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gitcomb {

/// The boundary divisor D(N_1, N_2, d_1, d_2): N_2 holds the marks on the
/// contracted side, d_2 its degree; N_1 = N_2^c and d_1 = d - d_2 implicitly.
struct DivisorLabel {
  std::uint32_t n2_mask;
  int d2;
  int n, d;

  int n2_size() const;
  /// A degree-0 contracted side needs at least two marks.
  bool valid() const { return d2 > 0 || n2_size() >= 2; }
  bool operator==(const DivisorLabel& o) const = default;
};

std::string label_string(const DivisorLabel& lbl);

struct CensusReport {
  long long total = 0;
  long long stable = 0;
  long long unstable = 0;
  long long strictly_semistable = 0;
  long long phi_exceptional_stable = 0;
  // Withheld when the linearization lies on a wall.
  std::optional<long long> e_U, rho_Q, rho_Qprime;
};

/// All valid labels; cardinality 2^n (d+1) - n - 1.
std::vector<DivisorLabel> divisor_enumerate(int n, int d);

/// Generic-point stability of phi(D): all N_2 marks at one point where the
/// forms share a root of multiplicity d_2.
Stability divisor_git_status(const DivisorLabel& lbl, const Linearization& k);

/// |N_2| + (r+1) d_2 - 1, the codimension of phi(D) in the ambient space.
int codim_image(const DivisorLabel& lbl, int r);

/// True iff the image has codimension >= 2.
bool is_phi_exceptional(const DivisorLabel& lbl, int r);

CensusReport census(int n, int d, int r, const Linearization& k);

/// The parity-class weight vector: all ones for d+n odd; (1,...,1,2) for d+n
/// even with n odd; (1,2,...,2,1) for d+n even with n even.
Linearization case_linearization(int n, int d);

/// 2^{n-1}(d+1) - C(n,2), less one for r = 1 with d >= 1 and for r = 0
/// (which requires d = 0). Throws when the value is not an integer or the
/// moduli space is empty.
long long picard_expected(int n, int d, int r);

enum class CrossingKind { SmallModification, ContractionPair, ContractionCommonRoot };

struct WallCrossingReport {
  Wall wall;
  DivisorLabel met_below;   // the label whose divisor meets the below chamber
  DivisorLabel met_above;
  CrossingKind kind;
  bool contracts_going_up;    // crossing below -> above contracts met_below's image
  bool contracts_going_down;
  CensusReport census_below, census_above;
  bool rho_qprime_equal;
};

/// Classifies the crossing of wall w between the two adjacent chambers holding
/// k_below and k_above. Throws if the chambers are not adjacent across w.
WallCrossingReport wall_crossing_diff(int n, int d, int r, const Wall& w,
                                      const Linearization& k_below,
                                      const Linearization& k_above);

/// True iff the generic configuration (distinct points, basepoint-free forms)
/// is stable, i.e. every point weight is below half.
bool generic_locus_nonempty(const Linearization& k);

/// One interior representative per chamber signature found on an integer grid
/// of weight vectors with entries in 1..grid_max.
std::map<std::vector<WallSide>, Linearization> chamber_representatives(int n, int d, int grid_max);

/// Deterministically constructs a pair of off-wall points separated only by w.
/// Returns nullopt if the search fails (e.g. w is not interior to the simplex).
std::optional<std::pair<Linearization, Linearization>> adjacent_pair_across(int n, int d,
                                                                            const Wall& w,
                                                                            std::uint64_t seed);

}  // namespace gitcomb
