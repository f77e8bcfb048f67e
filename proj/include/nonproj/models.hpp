#pragma once

#include "nonproj/blowup.hpp"
#include "nonproj/kummer.hpp"
#include "nonproj/torus.hpp"

namespace nonproj {

// Metadata for one blow-up center group: the degree-2 exceptional classes in
// the final algebra and the kernel of the center restriction on degree 1.
struct CenterInfo {
    std::string name;
    std::vector<int> h2_classes;
    Subspace h1_kernel;
};

// Blow-up model of the torus-side manifold: T x T (times an elliptic factor
// F when with_f), with point centers and the four subtorus centers
// T x 0, 0 x T, diagonal, graph.  Level 1 skips the separating point
// blow-ups (they do not affect degree 1 or 3); level 2 inserts them first
// and equips the proper-transform centers with the twisted normal data.
// With the elliptic factor, level 1 keeps the single point-type center
// x1 x F whose exceptional class cuts out the sublattice L.
struct TorusSideModel {
    std::shared_ptr<const GradedAlgebra> algebra;
    std::shared_ptr<const ExteriorAlgebra> ambient;
    int n = 0;
    int level = 1;
    bool with_f = false;
    std::vector<CenterInfo> subtorus_centers;  // order: Tx0, 0xT, diag, graph
    std::vector<int> point_classes;            // degree-2 exceptional indices
    std::vector<Subspace> point_kernels;       // degree-1 restriction kernels
    Int num_x_points, num_y_points;            // N and M (0 at level 1 without F)
};

TorusSideModel build_X_model(const TorusDatum& t, int level);
// X_1: level-1 X with (multiplicity[g] - 1) additional centers inside the
// g-th exceptional divisor; component dimensions become the multiplicities.
TorusSideModel build_X1_model(const TorusDatum& t, const std::vector<int>& multiplicities);
TorusSideModel build_XF_model(const TorusDatum& t, int level);

// Normal-bundle data for the two Kummer-side centers, as coefficients of
// sum_x e_x^i in c_i.  Only the exceptional support of these classes affects
// any verdict; the default coefficients come from the branched double cover
// T~ -> K.  The tamper flag replaces c_1 by an invariant class (a negative
// control that must break the vanishing table).
struct X2ChernConfig {
    std::vector<Rat> kappa;
    bool tamper_invariant_c1 = false;
};

std::vector<Rat> default_kummer_chern_kappa(int n);

struct X2Model {
    std::shared_ptr<const GradedAlgebra> algebra;
    std::shared_ptr<const KummerAlgebra> kummer;
    std::shared_ptr<const TensorAlgebra> kk;
    AlgebraMorphism psi;          // self-map pullback on H*(K)
    int h_diag = -1, h_graph = -1;  // final indices of the two new divisors
    std::vector<int> ex_left, ex_right;  // tau-images of e_x (x) 1 and 1 (x) e_x
    std::vector<int> a2_left, a2_right;  // tau-images of the wedge blocks in degree 2
    AlgebraMorphism diag_restriction;    // K (x) K -> K (multiplication)
    AlgebraMorphism graph_restriction;   // from the once-blown algebra
};

X2Model build_X2_model(const TorusDatum& t, const X2ChernConfig& chern);

}  // namespace nonproj
