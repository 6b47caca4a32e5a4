#ifndef SGDIM_KOSZUL_HPP
#define SGDIM_KOSZUL_HPP

// The executable homological side: finite complexes of k-spaces, Koszul
// complexes of sequences acting on finitely presented modules, homology with
// explicit cycle representatives, iterated canonical truncations with
// verified exact triangles, and the stable-factorization test showing an
// element acts as zero through a free cover.

#include <cstdint>
#include <string>
#include <vector>

#include "sgdim/invariants.hpp"
#include "sgdim/linalg.hpp"
#include "sgdim/trunc.hpp"

namespace sgdim {

struct LinMap {
    std::size_t rows = 0, cols = 0;
    Mat m; // rows x cols; kept empty when rows == 0

    QVec apply(const CoefficientField& f, const QVec& v) const;
    static LinMap zero(const CoefficientField& f, std::size_t rows, std::size_t cols);
};

struct FiniteComplex {
    CoefficientField field = CoefficientField::rationals();
    int lo = 0;                    // degree of the leftmost term
    std::vector<std::size_t> dims; // term dimensions, degrees lo, lo+1, ...
    std::vector<LinMap> diff;      // diff[i] maps degree lo+i to lo+i+1;
                                   // same length as dims, the last one has rows 0

    int hi() const { return lo + int(dims.size()) - 1; }
    std::size_t dim_at(int degree) const;
    // shape consistency and d(d(v)) = 0 on every basis vector
    void check() const;
};

// A module over a truncated algebra, as a k-space with variable actions,
// remembering the free cover it is a quotient of: F = T^cover_rank, with
// cover_kernel the relations inside F and cover the projection F -> M.
struct ModulePresentation {
    AlgebraPtr parent;
    std::size_t dim = 0;
    std::vector<Mat> action; // one dim x dim matrix per variable

    std::size_t cover_rank = 0;
    RowSpace cover_kernel;          // subspace of k^{cover_rank * dim T}
    Mat cover;                      // dim x (cover_rank * dim T) projection
    std::vector<std::size_t> sections; // ambient indices splitting the cover

    static ModulePresentation free_module(const AlgebraPtr& T, std::size_t rank = 1);
    static ModulePresentation cyclic_quotient(const AlgebraPtr& T,
                                              const std::vector<Polynomial>& gens);
    // cokernel of the map T^q -> T^p given by a p x q polynomial matrix
    static ModulePresentation cokernel(const AlgebraPtr& T,
                                       const std::vector<std::vector<Polynomial>>& pres);

    Mat act(const Polynomial& g) const;
    // commuting actions and relations acting as zero
    void validate() const;
};

// Koszul complex K(seq, M) in degrees -|seq| .. 0.
FiniteComplex koszul_complex(const std::vector<Polynomial>& seq,
                             const ModulePresentation& M);

struct Homology {
    int lo = 0;
    std::vector<std::size_t> h_dims;
    std::vector<std::vector<QVec>> reps; // cycle representatives per degree
    std::vector<RowSpace> boundaries;    // image of the incoming differential

    std::size_t h_at(int degree) const;
    std::size_t total() const;
    long euler_char() const; // against term dims it must agree; see tests
};

Homology homology(const FiniteComplex& C);

// Does g send every homology class of C to a boundary? The action on each
// term is the block-diagonal extension of its action on M.
bool annihilates_homology(const FiniteComplex& C, const Homology& H,
                          const ModulePresentation& M, const Polynomial& g);

// depth via the Koszul complex on all variables: number of variables plus
// the lowest degree with nonzero homology.
int depth_via_koszul(const ModulePresentation& M);

struct TruncationStep {
    int degree = 0;        // degree peeled off by this triangle
    std::size_t h_dim = 0; // homology surfacing at that degree
    bool ses_exact = false;
    bool chain_maps_ok = false;
    bool homology_match = false;

    bool verified() const { return ses_exact && chain_maps_ok && homology_match; }
};

struct TruncationTower {
    std::vector<TruncationStep> steps;
    bool final_acyclic = false;

    bool all_verified() const;
};

// Peel canonical truncations off the top until the rest is acyclic: each
// step realizes the short exact sequence of complexes
//   0 -> (.. -> X^{n-2} -> ker d^{n-1} -> 0) -> X -> (X^{n-1}/ker -> X^n) -> 0
// whose quotient carries exactly H^n(X).
TruncationTower truncate_complex(const FiniteComplex& C);

struct StablyZero {
    bool zero = false;
    Mat witness;      // (cover_rank * dim T) x dim M map into the cover when zero
    std::string note; // how the verdict was reached
};

// Does multiplication by r on M factor through the free cover of M? When it
// does, the witness h satisfies cover . h = action of r, checked exactly.
StablyZero stably_zero(const Polynomial& r, const ModulePresentation& M);

struct StableAnnihilationReport {
    bool ok = false;
    int modules = 0;
    int checks = 0;
    int N = 0; // truncation order of the artinian model used
    std::vector<std::string> failures;
};

// For an artinian presentation: every maximal minor of the Jacobian acts
// stably-zero on a battery of deterministic and seeded random modules.
StableAnnihilationReport jacobian_stable_annihilation(const RingPresentation& P,
                                                      std::uint64_t seed,
                                                      const Schedule& schedule,
                                                      int module_target = 20);

} // namespace sgdim

#endif
