#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nonproj/galois.hpp"
#include "nonproj/lattice.hpp"
#include "nonproj/roots.hpp"
#include "nonproj/similarity.hpp"

namespace nonproj {

// Weight-one Hodge datum of the torus Gamma_C / (Gamma' + Gamma): the rank-2n
// lattice with the companion endomorphism and a conjugate-pair root selection
// spanning Gamma'.
struct TorusDatum {
    int n = 0;
    ZPoly f;
    ZMat phi;  // companion matrix of f, rank 2n
    RootSystem roots;
};

TorusDatum build_torus(const ZPoly& f, const IsolateOptions& root_opts = {});

// Permutation group model acting on the 2n root labels 0..n-1 (the lambda_i)
// and n..2n-1 (their conjugates).
struct GroupModel {
    bool full_symmetric = false;
    std::vector<std::vector<int>> generators;  // used when !full_symmetric

    static GroupModel symmetric() { return {true, {}}; }
    static GroupModel generated(std::vector<std::vector<int>> gens) {
        return {false, std::move(gens)};
    }
};

// Unordered pair of distinct root labels; the (1,1) eigenvalue labels are the
// mixed pairs {i, j+n}.
using LabelPair = std::pair<int, int>;

struct NSOrbitReport {
    int n = 0;
    std::vector<std::vector<LabelPair>> orbits;  // orbits meeting the mixed set
    std::vector<LabelPair> stable_set;           // maximal Galois-stable subset S
    int ns_rank_bound = 0;                       // |S|
    std::optional<double> product_separation;    // advisory numeric check
};

// Orbit analysis behind the Neron-Severi vanishing: NS_Q(T) x C must be the
// eigenspace sum over a Galois-stable set S of mixed labels; the report
// returns the maximal such S.  Purely combinatorial on labels.
NSOrbitReport ns_orbit_analysis(const TorusDatum& t, const GroupModel& group);

// H^1(T x T) = Z^{4n} with block projections pr1, pr2; the cohomology action
// of phi is the transpose, applied blockwise.
struct ProductH1 {
    int n = 0;
    ZMat phi;

    int rank() const { return 4 * n; }
};

struct KernelSublattices {
    IntegerLattice l1;  // Ker pr1
    IntegerLattice l2;  // Ker pr2
    IntegerLattice l3;  // Ker (pr1 + pr2)
    IntegerLattice l4;  // Ker (pr1 + phi^* pr2)
};

KernelSublattices kernel_sublattices(const ProductH1& p);

struct DecompositionReport {
    bool direct_sum = false;        // L1 + L2 = ambient as lattices
    bool l3_graph = false;          // both projections of L3 are isomorphisms
    bool l4_second_projection = false;  // second projection of L4 is an isomorphism
    bool ok() const { return direct_sum && l3_graph && l4_second_projection; }
    std::string diagnosis;
};

DecompositionReport verify_torus_decomposition(const IntegerLattice& l1, const IntegerLattice& l2,
                                               const IntegerLattice& l3, const IntegerLattice& l4);

// Reads the endomorphism off the positions of the four sublattices: L1, L2
// fix coordinates, L3 identifies the factors, L4 is the transposed graph.
// For lattices from kernel_sublattices(phi) this returns exactly phi^T.
ZMat recover_endomorphism(const IntegerLattice& l1, const IntegerLattice& l2,
                          const IntegerLattice& l3, const IntegerLattice& l4);

enum class HodgeCompat { ExactStable, NumericOk, NumericFail, Inconclusive };

struct HodgeCompatReport {
    HodgeCompat status = HodgeCompat::Inconclusive;
    double margin = 0.0;  // smallest pivot ratio in the numeric rank count
    std::string detail;
};

// L_C = L^{1,0} + L^{0,1}?  Exact path: stability under the ambient action
// (blockwise phi^T) suffices, since simple eigenvalues make the action
// semisimple.  Numeric fallback: dimension count of L_C meet H^{1,0} within
// tolerance.
HodgeCompatReport hodge_compatibility(const IntegerLattice& l, const TorusDatum& t,
                                      int blocks = 2, double tolerance = 1e-10);

}  // namespace nonproj
