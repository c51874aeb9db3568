#pragma once

#include "rr1/toeplitz.hpp"
#include "rr1/types.hpp"

#include <string>
#include <vector>

namespace rr1 {

/// Recipe for one of the constructible matrices. Parsed from the CLI
/// "kind:params" syntax; `build_matrix` turns it into entries.
struct MatrixSpec {
    enum class Kind { grcar, jordan, sampling, toeplitz, normal, file };
    Kind kind = Kind::grcar;
    int n = 0;                          // grcar / jordan / sampling / toeplitz
    Complex lambda = 0.0;               // jordan shift
    LaurentSymbol symbol;               // toeplitz
    std::vector<Complex> eigenvalues;   // normal
    std::string path;                   // file
};

/// Parses "grcar:N", "jordan:N[:re,im]", "sampling:N", "toeplitz:N" (the
/// symbol comes from `symbol_text`), "normal:INNERSPEC" (eigenvalues of the
/// inner matrix, resolved eagerly), "file:PATH", or a bare path. Malformed
/// syntax raises InputError; building may raise further module errors.
MatrixSpec parse_matrix_spec(const std::string& text, const std::string& symbol_text = "");

ComplexMatrix build_matrix(const MatrixSpec& spec);

/// Grcar matrix: -1 on the subdiagonal, 1 on the main diagonal and the first
/// three superdiagonals. Strongly non-normal. n >= 2.
ComplexMatrix grcar(int n);

/// Jordan block: lambda on the diagonal, 1 on the first superdiagonal. n >= 2.
ComplexMatrix jordan(int n, Complex lambda = 0.0);

/// Sampling matrix with nodes x_i = i: entry (i,j) = x_i/(x_i - x_j) off the
/// diagonal, and each diagonal entry (j,j) is the sum of the off-diagonal
/// entries of column j. Its eigenvalues are the integers 0..n-1, with
/// ill-conditioned interior ones. n >= 2.
ComplexMatrix sampling(int n);

/// Diagonal matrix with the given entries.
ComplexMatrix normal_from_eigenvalues(const std::vector<Complex>& lams);

/// Loads a matrix from JSON ({"n":..,"entries":[[[re,im],...],...]}) or CSV
/// (one row per line of comma-separated "re+imj" tokens). The format is
/// chosen by extension (.json / .csv) or, failing that, by sniffing for '{'.
/// CSV may be rectangular; spectral commands reject non-square input.
ComplexMatrix load_matrix(const std::string& path);

/// Writes a matrix in the format matching the path's extension (.csv for
/// CSV, JSON otherwise) with 17 significant digits per component.
void save_matrix(const std::string& path, const ComplexMatrix& M);

} // namespace rr1
