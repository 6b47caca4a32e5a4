#ifndef SGDIM_LINALG_HPP
#define SGDIM_LINALG_HPP

// Exact dense linear algebra over QQ and F_p.
//
// RowSpace is the workhorse: an incrementally maintained reduced row space.
// Over QQ the stored rows are primitive integer vectors and every elimination
// is a fraction-free cross-multiply followed by a content strip, so
// coefficients stay determinant-bounded; rational output appears only in the
// final normalization. Over F_p it is plain Gauss-Jordan. Pivots are the
// leftmost nonzero coordinates, which with grevlex-ascending coordinate
// order gives the local-order reduction the truncated algebras rely on.

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "sgdim/field.hpp"

namespace sgdim {

using QVec = std::vector<Coeff>;
using Mat = std::vector<QVec>; // row-major

QVec qvec_zero(const CoefficientField& f, std::size_t n);
Mat mat_zero(const CoefficientField& f, std::size_t rows, std::size_t cols);
Mat mat_identity(const CoefficientField& f, std::size_t n);
Mat mat_mul(const Mat& a, const Mat& b);
QVec mat_apply(const Mat& a, const QVec& v);
Mat mat_add(const Mat& a, const Mat& b);
Mat mat_sub(const Mat& a, const Mat& b);
Mat mat_scale(const Mat& a, const Coeff& c);
bool mat_is_zero(const Mat& a);
QVec mat_column(const Mat& a, std::size_t j);
std::size_t mat_rank(const Mat& a, const CoefficientField& f);

class RowSpace {
public:
    RowSpace() : RowSpace(CoefficientField::rationals(), 0) {}
    RowSpace(const CoefficientField& f, std::size_t cols);

    const CoefficientField& field() const { return field_; }
    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return pivots_.size(); }
    const std::vector<std::size_t>& pivot_cols() const { return pivots_; }

    // Returns true when the row enlarged the space.
    bool insert(const QVec& v);

    bool contains(const QVec& v) const;

    // Exact residual of v modulo the space; its pivot coordinates are zero.
    QVec reduce(const QVec& v) const;

    // Canonical reduced-row-echelon basis (pivot entries 1, zeros above and
    // below). Deterministic in the span alone.
    std::vector<QVec> normalized_rows() const;

    // Coordinates of v with respect to normalized_rows(), or nullopt when v
    // lies outside the space.
    std::optional<QVec> coords(const QVec& v) const;

    // Column indices not used as pivots: coordinates of the quotient.
    std::vector<std::size_t> free_cols() const;

private:
    struct zrow {
        std::size_t pivot;
        std::vector<mpz_class> a; // primitive, positive leading entry
    };
    struct prow {
        std::size_t pivot;
        std::vector<std::uint64_t> a; // pivot normalized to 1
    };

    void eliminate_q(std::vector<mpz_class>& v, mpz_class& denom) const;
    void eliminate_p(std::vector<std::uint64_t>& v) const;

    CoefficientField field_;
    std::size_t cols_;
    std::vector<zrow> zrows_; // sorted by pivot
    std::vector<prow> prows_; // sorted by pivot
    std::vector<std::size_t> pivots_;
};

// Kernel of the linear map K^cols -> K^rows given by the matrix (rows act on
// column vectors). Basis vectors come out in ascending free-column order and
// are canonical.
std::vector<QVec> kernel_basis(const Mat& a, std::size_t cols, const CoefficientField& f);

// Row space spanned by the columns of a (the image of the map above).
RowSpace column_space(const Mat& a, std::size_t rows, const CoefficientField& f);

// One solution of A x = b (equations = rows), or nullopt if inconsistent.
std::optional<QVec> solve_linear(const Mat& a, const QVec& b, std::size_t cols,
                                 const CoefficientField& f);

} // namespace sgdim

#endif
