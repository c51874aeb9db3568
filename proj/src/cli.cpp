#include "rr1/cli.hpp"

#include "rr1/bounds.hpp"
#include "rr1/contour.hpp"
#include "rr1/errors.hpp"
#include "rr1/field.hpp"
#include "rr1/gallery.hpp"
#include "rr1/linalg.hpp"
#include "rr1/serialize.hpp"
#include "rr1/svd_calculus.hpp"
#include "rr1/svg.hpp"
#include "rr1/toeplitz.hpp"
#include "rr1/util.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <iostream>
#include <random>

namespace rr1 {

namespace {

using nlohmann::json;

struct UsageError : Error {
    explicit UsageError(const std::string& message) : Error("usage", message) {}
};

Complex parse_complex_pair(const std::string& s) {
    size_t comma = s.find(',');
    try {
        if (comma == std::string::npos) return Complex(std::stod(s), 0.0);
        return Complex(std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1)));
    } catch (const std::exception&) {
        throw UsageError("cannot parse complex value '" + s + "' (expected re,im)");
    }
}

GridSpec parse_grid(const std::string& box, const std::string& res) {
    GridSpec g;
    double vals[4];
    size_t start = 0;
    for (int i = 0; i < 4; ++i) {
        size_t comma = box.find(',', start);
        if ((comma == std::string::npos) != (i == 3))
            throw UsageError("--box needs re_min,re_max,im_min,im_max");
        try {
            vals[i] = std::stod(box.substr(start, comma - start));
        } catch (const std::exception&) {
            throw UsageError("cannot parse --box component in '" + box + "'");
        }
        start = comma + 1;
    }
    g.re_min = vals[0];
    g.re_max = vals[1];
    g.im_min = vals[2];
    g.im_max = vals[3];
    size_t x = res.find('x');
    if (x == std::string::npos) throw UsageError("--res needs NXxNY, e.g. 200x200");
    try {
        g.nx = std::stoi(res.substr(0, x));
        g.ny = std::stoi(res.substr(x + 1));
    } catch (const std::exception&) {
        throw UsageError("cannot parse --res '" + res + "'");
    }
    try {
        g.validate();
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    return g;
}

std::vector<double> parse_levels(const std::string& s) {
    std::vector<double> levels;
    size_t start = 0;
    while (start <= s.size()) {
        size_t comma = s.find(',', start);
        std::string tok = s.substr(start, comma == std::string::npos ? std::string::npos
                                                                     : comma - start);
        try {
            levels.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw UsageError("cannot parse level '" + tok + "'");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    for (size_t i = 0; i < levels.size(); ++i) {
        if (levels[i] <= 0.0) throw UsageError("levels must be strictly positive");
        if (i && levels[i] <= levels[i - 1])
            throw UsageError("levels must be strictly increasing");
    }
    if (levels.empty()) throw UsageError("empty level list");
    return levels;
}

// Matrix specs: grcar:N, jordan:N[:re,im], sampling:N, toeplitz:N (needs
// --symbol), normal:INNER, file:PATH, or a bare path. Malformed spec syntax
// is a usage problem; failures while building keep their module error kind.
ComplexMatrix matrix_from_args(const std::string& spec, const std::string& symbol_arg) {
    MatrixSpec parsed;
    try {
        parsed = parse_matrix_spec(spec, symbol_arg);
    } catch (const InputError& e) {
        throw UsageError(e.what());
    }
    return build_matrix(parsed);
}

void require_square(const ComplexMatrix& M) {
    if (M.rows() != M.cols())
        throw InputError("spectral commands require a square matrix (got " +
                         std::to_string(M.rows()) + "x" + std::to_string(M.cols()) + ")");
}

// "-" or empty: stdout.
void emit(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    write_text_file(path, content);
}

const char* palette(size_t i) {
    static const char* colors[] = {"black", "blue", "green", "darkorange", "purple", "teal"};
    return colors[i % 6];
}

std::vector<Complex> eigenvalue_markers(const ComplexMatrix& A) {
    std::vector<Complex> out;
    for (const auto& e : eigen_with_conditions(A)) out.push_back(e.lambda);
    return out;
}

Complex select_eigenvalue(const ComplexMatrix& A, const std::string& lambda_arg, bool max_cond) {
    if (!lambda_arg.empty()) return parse_complex_pair(lambda_arg);
    if (!max_cond)
        throw UsageError("select an eigenvalue with --lambda re,im or --max-cond");
    auto eigs = eigen_with_conditions(A);
    size_t best = 0;
    for (size_t i = 1; i < eigs.size(); ++i)
        if (eigs[i].cond > eigs[best].cond) best = i;
    return eigs[best].lambda;
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

// Random test matrices for derivcheck: Ginibre-style, optionally with a
// planted zero singular value and well-separated spectrum.
ComplexMatrix random_matrix(int n, unsigned seed, bool planted_zero) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    ComplexMatrix G(n, n), H(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            G(i, j) = Complex(gauss(rng), gauss(rng)) / std::sqrt(2.0 * n);
            H(i, j) = Complex(gauss(rng), gauss(rng));
        }
    if (!planted_zero) return G;
    Eigen::HouseholderQR<ComplexMatrix> qg(G), qh(H);
    ComplexMatrix Qu = qg.householderQ();
    ComplexMatrix Qv = qh.householderQ();
    RealVector s(n);
    for (int i = 0; i < n; ++i) s(i) = 2.5 - 2.0 * i / std::max(1, n - 1);
    s(n - 1) = 0.0;
    return Qu * s.asDiagonal() * Qv.adjoint();
}

// ---- subcommand payloads -------------------------------------------------

struct FieldArgs {
    std::string matrix, symbol, box, res = "200x200", which = "ratio", out, format = "json";
};

void run_field(const FieldArgs& a) {
    ComplexMatrix A = matrix_from_args(a.matrix, a.symbol);
    require_square(A);
    GridSpec grid = parse_grid(a.box, a.res);
    FieldKind kind;
    try {
        kind = field_kind_from_string(a.which);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    ScalarField field = evaluate_field(A, grid, kind);
    if (a.format == "csv")
        emit(a.out, field_to_csv(field));
    else if (a.format == "json")
        emit(a.out, field_to_json(field));
    else
        throw UsageError("--format must be json or csv");
}

struct ContourArgs {
    std::string in, levels = "1e-5,1e-3,1e-1", out, svg, matrix, symbol;
};

void run_contour(const ContourArgs& a) {
    std::vector<double> levels = parse_levels(a.levels);
    ScalarField field = field_from_json(read_text_file(a.in));
    std::vector<ContourSet> sets;
    sets.reserve(levels.size());
    for (double level : levels) sets.push_back(extract_contours(field, level));
    if (!a.out.empty() || a.svg.empty()) emit(a.out, contour_list_to_json(sets));
    if (!a.svg.empty()) {
        std::vector<SvgContourLayer> layers;
        for (size_t i = 0; i < sets.size(); ++i)
            layers.push_back({sets[i], palette(i), 1.2});
        std::vector<Complex> markers;
        if (!a.matrix.empty()) markers = eigenvalue_markers(matrix_from_args(a.matrix, a.symbol));
        write_text_file(a.svg, render_svg(layers, markers, {}));
    }
}

struct PseudoArgs {
    std::string matrix, symbol, box, res = "200x200", levels = "1e-5,1e-3,1e-1";
    std::string out, svg, field_out;
};

void run_pseudospectrum(const PseudoArgs& a) {
    ComplexMatrix A = matrix_from_args(a.matrix, a.symbol);
    require_square(A);
    GridSpec grid = parse_grid(a.box, a.res);
    std::vector<double> levels = parse_levels(a.levels);
    ScalarField field = evaluate_field(A, grid, FieldKind::inv_norm);
    if (!a.field_out.empty()) write_text_file(a.field_out, field_to_json(field));
    std::vector<ContourSet> sets;
    for (double level : levels) sets.push_back(extract_contours(field, level));
    if (!a.out.empty() || a.svg.empty()) emit(a.out, contour_list_to_json(sets));
    if (!a.svg.empty()) {
        std::vector<SvgContourLayer> layers;
        for (size_t i = 0; i < sets.size(); ++i)
            layers.push_back({sets[i], palette(i), 1.2});
        write_text_file(a.svg, render_svg(layers, eigenvalue_markers(A), {}));
    }
}

struct BoundsArgs {
    std::string matrix, symbol, lambda, z, out;
    bool max_cond = false;
    int k = 1, kmax = 100;
    double eps = 1e-3;
    // region mode
    bool regions = false;
    std::string box, res = "200x200", svg, s_field;
};

void run_bounds_point(const BoundsArgs& a, const ComplexMatrix& A) {
    Complex lambda = select_eigenvalue(A, a.lambda, a.max_cond);
    Complex z = parse_complex_pair(a.z);
    EigenvalueBoundsContext ctx(A, lambda, a.kmax);
    Thm4Bounds b = ctx.bounds(z - lambda, a.k);
    RegionFlags f = ctx.flags(a.eps, z);
    json doc;
    doc["lambda"] = complex_json(lambda);
    doc["z"] = complex_json(z);
    doc["k"] = a.k;
    doc["eps"] = a.eps;
    doc["sigma_second"] = ctx.sigma_second();
    doc["vec_bound"] = b.vec_bound;
    doc["scalar_bound"] = b.scalar_bound;
    doc["inf_bound"] = b.inf_bound ? json(*b.inf_bound) : json(nullptr);
    doc["sigma_n_direct"] = inv_resolvent_norm(A, z);
    doc["flags"] = {{"ineq1", f.ineq1}, {"ineq2", f.ineq2}, {"pseudo_ineq", f.pseudo_ineq}};
    emit(a.out, doc.dump() + "\n");
}

void run_bounds_regions(const BoundsArgs& a, const ComplexMatrix& A) {
    if (a.box.empty()) throw UsageError("--regions needs --box");
    GridSpec grid = parse_grid(a.box, a.res);
    auto eigs = eigen_with_conditions(A);

    std::vector<EigenvalueBoundsContext> contexts;
    contexts.reserve(eigs.size());
    for (const auto& e : eigs) contexts.emplace_back(A, e.lambda, a.kmax);

    // ineq1 depends only on |z - lambda|: each region is a disk whose radius
    // is found by bisection on the monotone membership predicate.
    json report = json::array();
    std::vector<SvgDiskLayer> disk_layers;
    for (const auto& ctx : contexts) {
        double lo = 0.0, hi = ctx.sigma_second();
        for (int it = 0; it < 60; ++it) {
            double mid = 0.5 * (lo + hi);
            bool in = ctx.flags(a.eps, ctx.lambda() + Complex(mid, 0.0)).ineq1;
            (in ? lo : hi) = mid;
        }
        json entry;
        entry["lambda"] = complex_json(ctx.lambda());
        entry["sigma_second"] = ctx.sigma_second();
        entry["ineq1_radius"] = lo;
        report.push_back(std::move(entry));
        if (lo > 0.0) disk_layers.push_back({DiskRegion{ctx.lambda(), lo}, "blue", 1.2});
    }

    // ineq2 / pseudo masks over the grid (union across eigenvalues), then
    // traced at level 0.5.
    ScalarField mask2{grid, FieldKind::ratio, {}, {}};
    ScalarField maskp = mask2;
    mask2.values.assign(static_cast<size_t>(grid.ny),
                        std::vector<double>(static_cast<size_t>(grid.nx), 0.0));
    maskp.values = mask2.values;
    parallel_for(grid.nx * grid.ny, [&](int idx) {
        int i = idx / grid.nx, j = idx % grid.nx;
        Complex z = grid.node(i, j);
        double m2 = 0.0, mp = 0.0;
        for (const auto& ctx : contexts) {
            if (std::abs(z - ctx.lambda()) >= ctx.sigma_second()) continue;
            RegionFlags f = ctx.flags(a.eps, z);
            if (f.ineq2) m2 = 1.0;
            if (f.pseudo_ineq) mp = 1.0;
            if (m2 == 1.0 && mp == 1.0) break;
        }
        mask2.values[static_cast<size_t>(i)][static_cast<size_t>(j)] = m2;
        maskp.values[static_cast<size_t>(i)][static_cast<size_t>(j)] = mp;
    });
    ContourSet ineq2_curves = extract_contours(mask2, 0.5);
    ContourSet pseudo_curves = extract_contours(maskp, 0.5);

    json doc;
    doc["eps"] = a.eps;
    doc["eigenvalues"] = std::move(report);
    doc["ineq2_contours"] = json::parse(contours_to_json(ineq2_curves));
    doc["pseudo_contours"] = json::parse(contours_to_json(pseudo_curves));
    emit(a.out, doc.dump() + "\n");

    if (!a.svg.empty()) {
        std::vector<SvgContourLayer> layers;
        if (!a.s_field.empty()) {
            ScalarField s = field_from_json(read_text_file(a.s_field));
            layers.push_back({extract_contours(s, a.eps), "black", 1.4});
        }
        layers.push_back({ineq2_curves, "green", 1.2});
        std::vector<Complex> markers;
        for (const auto& e : eigs) markers.push_back(e.lambda);
        write_text_file(a.svg, render_svg(layers, markers, disk_layers));
    }
}

struct ProfileArgs {
    std::string matrix, symbol, lambda, out;
    bool max_cond = true;
    int jmax = 5;
};

void run_profile(const ProfileArgs& a) {
    ComplexMatrix A = matrix_from_args(a.matrix, a.symbol);
    require_square(A);
    Complex lambda = select_eigenvalue(A, a.lambda, a.max_cond);
    emit(a.out, profile_to_json(orthogonality_profile(A, lambda, a.jmax)));
}

struct RelationArgs {
    std::string matrix, symbol, out;
    double r = 2.0;
};

struct ToeplitzArgs {
    std::string symbol, z = "0,0", out;
    int nmin = 5, nmax = 50;
};

struct WindingArgs {
    std::string symbol, z = "0,0";
    bool signed_output = false;
};

struct DerivArgs {
    std::string matrix, symbol, out;
    int random_n = 0;
    unsigned seed = 1;
    bool planted_zero = false;
    double theta = 0.0, r = 0.3, h = 0.0;
};

void run_derivcheck(const DerivArgs& a) {
    ComplexMatrix A0;
    if (a.random_n > 0)
        A0 = random_matrix(a.random_n, a.seed, a.planted_zero);
    else if (!a.matrix.empty())
        A0 = matrix_from_args(a.matrix, a.symbol);
    else
        throw UsageError("derivcheck needs --matrix or --random N");
    require_square(A0);

    double h = a.h > 0.0 ? a.h : fd::default_step(A0);
    json doc;
    doc["theta"] = a.theta;
    doc["h"] = h;

    // Derivatives at r > 0: analytic vs central differences.
    {
        SvdPathDerivative d = svd_path_derivative(A0, a.theta, a.r);
        RealVector fd_sigma = fd::sigma_derivative(A0, a.theta, a.r, h);
        fd::VectorDerivatives fd_vec = fd::vector_derivatives(A0, a.theta, a.r, h);
        const int n = static_cast<int>(d.sigma_prime.size());
        // The aligned finite differences live in the diag(Z) = diag(W) = 0
        // gauge; compare against the analytic derivative transported there.
        ComplexMatrix Zoff = d.point.Z;
        ComplexMatrix Woff = d.point.W;
        Zoff.diagonal().setZero();
        Woff.diagonal().setZero();
        ComplexMatrix U_fd_pred = d.point.svd.U * Zoff;
        ComplexMatrix V_fd_pred = d.point.svd.V * Woff;

        json at_r;
        at_r["r"] = a.r;
        at_r["sigma_prime"] = std::vector<double>(d.sigma_prime.data(),
                                                  d.sigma_prime.data() + n);
        at_r["sigma_max_dev"] = (d.sigma_prime - fd_sigma).cwiseAbs().maxCoeff();
        at_r["u_max_dev"] = (U_fd_pred - fd_vec.dU).cwiseAbs().maxCoeff();
        at_r["v_max_dev"] = (V_fd_pred - fd_vec.dV).cwiseAbs().maxCoeff();
        at_r["skew_z"] = (d.point.Z + d.point.Z.adjoint()).norm();
        at_r["skew_w"] = (d.point.W + d.point.W.adjoint()).norm();
        ComplexMatrix recon =
            d.U_prime * d.point.svd.sigma.asDiagonal() * d.point.svd.V.adjoint() +
            d.point.svd.U * d.sigma_prime.asDiagonal() * d.point.svd.V.adjoint() +
            d.point.svd.U * d.point.svd.sigma.asDiagonal() * d.V_prime.adjoint();
        ComplexMatrix target = -std::polar(1.0, a.theta) *
                               ComplexMatrix::Identity(A0.rows(), A0.cols());
        at_r["reconstruction_dev"] = (recon - target).norm();
        doc["path"] = std::move(at_r);
    }

    // Inner-product derivative at r = 0 when A0 carries a zero singular value.
    RealVector sig = svd(A0).sigma;
    if (sig(sig.size() - 1) <= 1e-8 * std::max(sig(0), 1.0)) {
        InnerProductDerivative ip = inner_product_derivative_at_zero(A0, a.theta);
        Complex fd_val = fd::inner_product_derivative(A0, a.theta, h);
        json inner;
        inner["analytic"] = complex_json(ip.total);
        inner["fd"] = complex_json(fd_val);
        inner["dev"] = std::abs(ip.total - fd_val);
        doc["inner_product_at_zero"] = std::move(inner);
    }
    emit(a.out, doc.dump() + "\n");
}

struct GalleryArgs {
    std::string matrix, symbol, out;
    bool print_eigenvalues = false;
};

void run_gallery(const GalleryArgs& a) {
    ComplexMatrix A = matrix_from_args(a.matrix, a.symbol);
    if (!a.out.empty()) save_matrix(a.out, A);
    if (a.print_eigenvalues) {
        json doc = json::array();
        for (const auto& e : eigen_with_conditions(A)) {
            doc.push_back(json{{"lambda", complex_json(e.lambda)}, {"cond", e.cond}});
        }
        std::cout << doc.dump() << "\n";
    }
}

int dispatch(int argc, const char* const* argv) {
    CLI::App app{"rr1: maps where the resolvent of a matrix acts like a rank-one matrix"};
    app.require_subcommand(1);

    FieldArgs fa;
    auto* field_cmd = app.add_subcommand(
        "field", "Sample a scalar functional of A - zI over a grid");
    field_cmd->add_option("--matrix", fa.matrix, "grcar:N | jordan:N[:re,im] | sampling:N | "
                                                 "toeplitz:N | normal:SPEC | file:PATH")
        ->required();
    field_cmd->add_option("--symbol", fa.symbol, "Laurent symbol (for toeplitz kinds)");
    field_cmd->add_option("--box", fa.box, "re_min,re_max,im_min,im_max")->required();
    field_cmd->add_option("--res", fa.res, "grid resolution NXxNY (default 200x200)");
    field_cmd->add_option("--which", fa.which, "ratio | inv_norm | inner");
    field_cmd->add_option("--out", fa.out, "output path ('-' for stdout)");
    field_cmd->add_option("--format", fa.format, "json | csv");

    ContourArgs ca;
    auto* contour_cmd = app.add_subcommand("contour", "Extract iso-contours from a field file");
    contour_cmd->add_option("--in", ca.in, "ScalarField JSON path")->required();
    contour_cmd->add_option("--levels", ca.levels, "increasing positive levels");
    contour_cmd->add_option("--out", ca.out, "contour JSON output ('-' for stdout)");
    contour_cmd->add_option("--svg", ca.svg, "SVG output path");
    contour_cmd->add_option("--matrix", ca.matrix, "matrix spec for eigenvalue markers");
    contour_cmd->add_option("--symbol", ca.symbol, "Laurent symbol (for toeplitz kinds)");

    PseudoArgs pa;
    auto* pseudo_cmd = app.add_subcommand(
        "pseudospectrum", "Contours of 1/||(A - zI)^{-1}|| at the given levels");
    pseudo_cmd->add_option("--matrix", pa.matrix)->required();
    pseudo_cmd->add_option("--symbol", pa.symbol);
    pseudo_cmd->add_option("--box", pa.box)->required();
    pseudo_cmd->add_option("--res", pa.res);
    pseudo_cmd->add_option("--levels", pa.levels);
    pseudo_cmd->add_option("--out", pa.out, "contour JSON output");
    pseudo_cmd->add_option("--svg", pa.svg, "SVG output path");
    pseudo_cmd->add_option("--field-out", pa.field_out, "also write the sampled field");

    BoundsArgs ba;
    auto* bounds_cmd = app.add_subcommand(
        "bounds", "Pseudoinverse-based upper bounds and region certificates");
    bounds_cmd->add_option("--matrix", ba.matrix)->required();
    bounds_cmd->add_option("--symbol", ba.symbol);
    bounds_cmd->add_option("--lambda", ba.lambda, "eigenvalue re,im");
    bounds_cmd->add_flag("--max-cond", ba.max_cond, "use the worst-conditioned eigenvalue");
    bounds_cmd->add_option("--z", ba.z, "query point re,im (point mode)");
    bounds_cmd->add_option("--k", ba.k, "truncation order for the reported bounds");
    bounds_cmd->add_option("--kmax", ba.kmax, "search depth for the ineq1 certificate");
    bounds_cmd->add_option("--eps", ba.eps, "tolerance for the region certificates");
    bounds_cmd->add_flag("--regions", ba.regions, "sweep mode: certified regions per eigenvalue");
    bounds_cmd->add_option("--box", ba.box, "sweep box (regions mode)");
    bounds_cmd->add_option("--res", ba.res, "sweep resolution (regions mode)");
    bounds_cmd->add_option("--svg", ba.svg, "SVG overlay output (regions mode)");
    bounds_cmd->add_option("--s-field", ba.s_field,
                           "ratio field JSON whose eps-contour is drawn in black");
    bounds_cmd->add_option("--out", ba.out, "JSON output ('-' for stdout)");

    ProfileArgs pra;
    auto* profile_cmd = app.add_subcommand(
        "profile", "Orthogonality profile of u_n against pseudoinverse powers");
    profile_cmd->add_option("--matrix", pra.matrix)->required();
    profile_cmd->add_option("--symbol", pra.symbol);
    profile_cmd->add_option("--lambda", pra.lambda, "eigenvalue re,im (default: worst-conditioned)");
    profile_cmd->add_option("--jmax", pra.jmax, "highest pseudoinverse power (default 5)");
    profile_cmd->add_option("--out", pra.out);

    RelationArgs ra;
    auto* relation_cmd = app.add_subcommand(
        "relation", "Per-eigenvalue disks linking the rank-one region to pseudospectra");
    relation_cmd->add_option("--matrix", ra.matrix)->required();
    relation_cmd->add_option("--symbol", ra.symbol);
    relation_cmd->add_option("--r", ra.r, "disk shrink factor r > 1 (default 2)");
    relation_cmd->add_option("--out", ra.out);

    ToeplitzArgs ta;
    auto* toeplitz_cmd = app.add_subcommand(
        "toeplitz", "Splitting experiment: smallest singular values of T_n(b) - zI over n");
    toeplitz_cmd->add_option("--symbol", ta.symbol)->required();
    toeplitz_cmd->add_option("--z", ta.z, "shift re,im");
    toeplitz_cmd->add_option("--nmin", ta.nmin);
    toeplitz_cmd->add_option("--nmax", ta.nmax);
    toeplitz_cmd->add_option("--out", ta.out);

    WindingArgs wa;
    auto* winding_cmd = app.add_subcommand(
        "winding", "Winding number of the symbol curve about a point");
    winding_cmd->add_option("--symbol", wa.symbol)->required();
    winding_cmd->add_option("--z", wa.z, "point re,im");
    winding_cmd->add_flag("--signed", wa.signed_output, "print the signed winding number");

    DerivArgs da;
    auto* deriv_cmd = app.add_subcommand(
        "derivcheck", "Analytic SVD-path derivatives against finite differences");
    deriv_cmd->add_option("--matrix", da.matrix, "explicit A0");
    deriv_cmd->add_option("--symbol", da.symbol);
    deriv_cmd->add_option("--random", da.random_n, "random A0 of this size");
    deriv_cmd->add_option("--seed", da.seed);
    deriv_cmd->add_flag("--planted-zero", da.planted_zero,
                        "plant an exact zero singular value in the random A0");
    deriv_cmd->add_option("--theta", da.theta, "path direction angle");
    deriv_cmd->add_option("--r", da.r, "path parameter for the interior check");
    deriv_cmd->add_option("--step", da.h, "finite-difference step (default 1e-5 max(1,||A0||))");
    deriv_cmd->add_option("--out", da.out);

    GalleryArgs ga;
    auto* gallery_cmd = app.add_subcommand("gallery", "Construct and save a test matrix");
    gallery_cmd->add_option("--matrix", ga.matrix)->required();
    gallery_cmd->add_option("--symbol", ga.symbol);
    gallery_cmd->add_option("--out", ga.out, "matrix file (.json or .csv)");
    gallery_cmd->add_flag("--print-eigenvalues", ga.print_eigenvalues,
                          "print eigenvalues and condition numbers as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            std::cout << app.help();
            return 0;
        }
        throw UsageError(e.what());
    }

    if (field_cmd->parsed()) run_field(fa);
    if (contour_cmd->parsed()) run_contour(ca);
    if (pseudo_cmd->parsed()) run_pseudospectrum(pa);
    if (bounds_cmd->parsed()) {
        ComplexMatrix A = matrix_from_args(ba.matrix, ba.symbol);
        require_square(A);
        if (ba.regions)
            run_bounds_regions(ba, A);
        else if (!ba.z.empty())
            run_bounds_point(ba, A);
        else
            throw UsageError("bounds needs --z (point mode) or --regions");
    }
    if (profile_cmd->parsed()) run_profile(pra);
    if (relation_cmd->parsed()) {
        ComplexMatrix A = matrix_from_args(ra.matrix, ra.symbol);
        require_square(A);
        emit(ra.out, relation_to_json(relation_disks(A, ra.r)));
    }
    if (toeplitz_cmd->parsed()) {
        SplittingReport rep = splitting_experiment(parse_symbol(ta.symbol),
                                                   parse_complex_pair(ta.z), ta.nmin, ta.nmax);
        emit(ta.out, splitting_to_json(rep));
    }
    if (winding_cmd->parsed()) {
        int w = winding_number(parse_symbol(wa.symbol), parse_complex_pair(wa.z));
        std::cout << (wa.signed_output ? w : std::abs(w)) << "\n";
    }
    if (deriv_cmd->parsed()) run_derivcheck(da);
    if (gallery_cmd->parsed()) run_gallery(ga);
    return 0;
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    try {
        return dispatch(argc, argv);
    } catch (const UsageError& e) {
        json err{{"error", "usage"}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 2;
    } catch (const ParseError& e) {
        json err{{"error", e.kind()}, {"message", e.what()},
                 {"line", e.line()}, {"column", e.column()}};
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const OnCurveError& e) {
        json err{{"error", e.kind()}, {"message", e.what()}, {"theta", e.theta()}};
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const Error& e) {
        json err{{"error", e.kind()}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        json err{{"error", "internal"}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 1;
    }
}

} // namespace rr1
