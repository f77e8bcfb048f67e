#pragma once

#include <optional>

#include "nonproj/morphism.hpp"

namespace nonproj {

// Kernel of cup multiplication by a degree-2 class from source_degree to
// source_degree + 2, as a subspace in the source-degree basis coordinates.
Subspace cup_kernel(const GradedAlgebra& a, const Elem& alpha, int source_degree = 1);

// Kernel of cup multiplication restricted to a subspace V of a fixed degree.
Subspace cup_kernel_on(const GradedAlgebra& a, const Elem& alpha, const Subspace& v, int degree);

struct ExteriorMapResult {
    AlgebraMorphism map;          // Wedge^*(H^1) -> A
    bool top_degree_isomorphism;  // degree-1 criterion for the Albanese map
};

// The cup-product map from the free exterior algebra on H^1(A).
ExteriorMapResult exterior_subring_map(const std::shared_ptr<const GradedAlgebra>& a);

// Poincare-duality adjoint of a degree-preserving morphism between manifold
// models (the Gysin map of the geometric morphism inducing it).
class GysinAdjoint {
public:
    explicit GysinAdjoint(const AlgebraMorphism& pullback);
    // apply to a dst-side element of homogeneous degree
    Elem apply(const Elem& e) const;
    QMat degree_matrix(int deg) const;

private:
    const AlgebraMorphism* pullback_;
    std::shared_ptr<const GradedAlgebra> src_, dst_;
};

// Degree-d part of the subalgebra generated by the given homogeneous
// elements, as a list of spanning Elems in reduced form.
std::vector<Elem> subalgebra_degree_span(const GradedAlgebra& a, const std::vector<Elem>& gens,
                                         int degree);

struct ObstructionSubspaces {
    Subspace p;   // in degree-2 coordinates
    Subspace p0;  // subspace of p annihilating H^1 under cup
};

// P = annihilator in degree 2 of the image of Wedge^{b1-2} H^1 (equivalently
// its Poincare orthocomplement when the top degree is 1-dimensional);
// P0 = classes in P whose cup action H^1 -> H^3 vanishes.
ObstructionSubspaces obstruction_subspaces(const GradedAlgebra& a);
// Same, with the annihilator taken against an arbitrary generated subalgebra
// (used for the Kummer pipeline, where A* is generated by the two pullback
// blocks rather than by H^1).
Subspace annihilator_of_span(const GradedAlgebra& a, const std::vector<Elem>& span, int deg = 2);

struct LocusClass {
    int basis_index;  // degree-2 basis index of the class
    std::string name;
    Subspace kernel;  // kernel of its cup action on the analyzed space
};

struct LocusComponent {
    std::vector<int> support;  // indices into the input class list
    int dim = 0;
    Subspace common_kernel;
};

// Maximal coordinate subspaces of the non-injective locus: classes sharing a
// kernel form one component; kernels of distinct groups must intersect
// trivially (checked; Error otherwise).
std::vector<LocusComponent> noninjective_locus_components(const std::vector<LocusClass>& classes);

struct DecomposableSpanResult {
    Subspace span;
    bool exact = false;
    std::string note;
};

// Span of the square-zero elements of a subspace V of the degree-2 part,
// computed exactly on the structured blocks the pipelines use (wedge blocks,
// exceptional coordinate blocks); reported as inexact otherwise.
DecomposableSpanResult decomposable_span(const GradedAlgebra& a, const Subspace& v);

// Symmetric bilinear form q_c(x, y) = integral of c^{(top-4)/2} x y on the
// degree-2 part.
QMat q_form_matrix(const GradedAlgebra& a, const Elem& c);
Rat q_form_value(const GradedAlgebra& a, const Elem& c, const Elem& x, const Elem& y);

struct IsotropyReport {
    int dim = 0;
    int rank = 0;
    int positive = 0;
    int negative = 0;
    std::optional<std::vector<Rat>> isotropic_witness;  // coordinates in the V basis
    bool totally_isotropic_plane = false;  // certified 2-dim totally isotropic subspace
    std::string note;
};

// Exact rank and signature of a rational symmetric form restricted to V,
// with rational isotropic witnesses where the structured searches find them.
IsotropyReport isotropy_report(const QMat& form, const Subspace& v);

struct QcTable {
    int num_forms = 0;
    int block_dim = 0;
    bool all_zero = false;
    long nonzero_entries = 0;
    std::string first_nonzero;  // "c=<label> i=<i> j=<j> value"
};

// The vanishing table of Lemma-style checks: q_c on span V for every c in
// cs.  Entries are independent, so the kernel is data-parallel; the serial
// path is the reference implementation and the results are identical.
QcTable qc_vanishing_table(const GradedAlgebra& a, const std::vector<Elem>& cs,
                           const std::vector<Elem>& v_basis, bool parallel);
QcTable qc_vanishing_table_serial(const GradedAlgebra& a, const std::vector<Elem>& cs,
                                  const std::vector<Elem>& v_basis);

}  // namespace nonproj
