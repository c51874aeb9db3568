#include "rr1/field.hpp"

#include "rr1/errors.hpp"
#include "rr1/linalg.hpp"
#include "rr1/util.hpp"

#include <algorithm>
#include <cmath>

namespace rr1 {

void GridSpec::validate() const {
    if (!(re_min < re_max) || !(im_min < im_max))
        throw InputError("grid: need re_min < re_max and im_min < im_max");
    if (nx < 2 || ny < 2) throw InputError("grid: need nx >= 2 and ny >= 2");
}

FieldKind field_kind_from_string(const std::string& name) {
    if (name == "ratio") return FieldKind::ratio;
    if (name == "inv_norm") return FieldKind::inv_norm;
    if (name == "inner") return FieldKind::inner;
    throw InputError("unknown field kind '" + name + "' (ratio|inv_norm|inner)");
}

std::string to_string(FieldKind which) {
    switch (which) {
    case FieldKind::ratio: return "ratio";
    case FieldKind::inv_norm: return "inv_norm";
    case FieldKind::inner: return "inner";
    }
    return "?";
}

namespace {

void require_spectral(const ComplexMatrix& A, const char* who) {
    if (A.rows() != A.cols()) throw InputError(std::string(who) + ": matrix must be square");
    if (A.rows() < 2) throw InputError(std::string(who) + ": size must be at least 2");
    if (!A.allFinite()) throw InputError(std::string(who) + ": non-finite entries");
}

ComplexMatrix shifted(const ComplexMatrix& A, Complex z) {
    ComplexMatrix M = A;
    M.diagonal().array() -= z;
    return M;
}

double ratio_from_sigma(const RealVector& sigma, bool* degenerate) {
    const int n = static_cast<int>(sigma.size());
    double floor = 1e-14 * std::max(sigma(0), 1.0);
    double sn = sigma(n - 1);
    double sn1 = sigma(n - 2);
    if (degenerate) *degenerate = false;
    if (sn <= floor) {
        // z is (numerically) an eigenvalue; the ratio is defined as zero even
        // when sigma_{n-1} vanishes too, but the latter case is flagged.
        if (sn1 <= floor && degenerate) *degenerate = true;
        return 0.0;
    }
    return sn / sn1;
}

double inner_from_svd(const SvdResult& dec, bool* degenerate) {
    const int n = static_cast<int>(dec.sigma.size());
    double sn = dec.sigma(n - 1);
    double sn1 = dec.sigma(n - 2);
    if (degenerate) *degenerate = !(sn1 - sn > 1e-12 * sn1);
    double v = std::abs(dec.U.col(n - 1).dot(dec.V.col(n - 1)));
    return std::min(v, 1.0);
}

} // namespace

double rank1_ratio(const ComplexMatrix& A, Complex z, bool* degenerate) {
    require_spectral(A, "rank1_ratio");
    SvdResult dec = svd(shifted(A, z));
    return ratio_from_sigma(dec.sigma, degenerate);
}

double inv_resolvent_norm(const ComplexMatrix& A, Complex z) {
    require_spectral(A, "inv_resolvent_norm");
    SvdResult dec = svd(shifted(A, z));
    return dec.sigma_min();
}

double singvec_inner(const ComplexMatrix& A, Complex z) {
    require_spectral(A, "singvec_inner");
    SvdResult dec = svd(shifted(A, z));
    bool degenerate = false;
    double v = inner_from_svd(dec, &degenerate);
    if (degenerate)
        throw DegeneracyError("singvec_inner: smallest singular value not simple at z = " +
                              format_complex(z));
    return v;
}

ScalarField evaluate_field(const ComplexMatrix& A, const GridSpec& grid, FieldKind which) {
    require_spectral(A, "evaluate_field");
    grid.validate();

    ScalarField field;
    field.grid = grid;
    field.which = which;
    field.values.assign(static_cast<size_t>(grid.ny),
                        std::vector<double>(static_cast<size_t>(grid.nx), 0.0));
    std::vector<unsigned char> degen(static_cast<size_t>(grid.nx) * grid.ny, 0);

    parallel_for(grid.nx * grid.ny, [&](int idx) {
        int i = idx / grid.nx;
        int j = idx % grid.nx;
        SvdResult dec = svd(shifted(A, grid.node(i, j)));
        bool d = false;
        double v = 0.0;
        switch (which) {
        case FieldKind::ratio: v = ratio_from_sigma(dec.sigma, &d); break;
        case FieldKind::inv_norm: v = dec.sigma_min(); break;
        case FieldKind::inner: v = inner_from_svd(dec, &d); break;
        }
        field.values[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
        degen[static_cast<size_t>(idx)] = d ? 1 : 0;
    });

    for (int idx = 0; idx < grid.nx * grid.ny; ++idx)
        if (degen[static_cast<size_t>(idx)])
            field.degenerate.emplace_back(idx / grid.nx, idx % grid.nx);
    return field;
}

} // namespace rr1
