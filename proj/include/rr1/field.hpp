#pragma once

#include "rr1/types.hpp"

#include <string>
#include <utility>
#include <vector>

namespace rr1 {

/// Rectangular sampling window in the z-plane with inclusive endpoints.
struct GridSpec {
    double re_min = 0, re_max = 0, im_min = 0, im_max = 0;
    int nx = 0, ny = 0;

    void validate() const; // throws InputError on a malformed grid

    double re_at(int j) const { return re_min + (re_max - re_min) * j / (nx - 1); }
    double im_at(int i) const { return im_min + (im_max - im_min) * i / (ny - 1); }
    Complex node(int i, int j) const { return {re_at(j), im_at(i)}; }
};

enum class FieldKind { ratio, inv_norm, inner };

FieldKind field_kind_from_string(const std::string& name);
std::string to_string(FieldKind which);

/// Scalar functional of A - zI sampled on a grid. Row index follows the
/// imaginary axis, column index the real axis; values[i][j] is the functional
/// at grid.node(i, j). `degenerate` lists (i, j) nodes where the functional
/// hit a degeneracy (double zero singular value for ratio, vanishing
/// sigma_{n-1} gap for inner); those nodes still carry a value.
struct ScalarField {
    GridSpec grid;
    FieldKind which = FieldKind::ratio;
    std::vector<std::vector<double>> values;
    std::vector<std::pair<int, int>> degenerate;
};

/// sigma_n(A - zI) / sigma_{n-1}(A - zI): the relative distance of the
/// resolvent at z from the nearest rank-one matrix. Returns exactly 0 when
/// sigma_n <= 1e-14 * max(sigma_1, 1) (z numerically an eigenvalue). If
/// sigma_{n-1} is below the same floor the ratio is also 0 and *degenerate
/// (when given) is set.
double rank1_ratio(const ComplexMatrix& A, Complex z, bool* degenerate = nullptr);

/// sigma_n(A - zI) = 1 / ||(A - zI)^{-1}||. z is in the eps-pseudospectrum
/// iff the returned value is below eps.
double inv_resolvent_norm(const ComplexMatrix& A, Complex z);

/// |u_n^H v_n| for A - zI, which equals |u_1(z)^H v_1(z)| of the resolvent.
/// Throws DegeneracyError when sigma_n is not separated from sigma_{n-1} by
/// a relative gap of at least 1e-12.
double singvec_inner(const ComplexMatrix& A, Complex z);

/// Evaluates the chosen functional on every grid node. Per-node degeneracies
/// are recorded in the result instead of aborting the sweep. Node values are
/// independent of the thread count.
ScalarField evaluate_field(const ComplexMatrix& A, const GridSpec& grid, FieldKind which);

} // namespace rr1
