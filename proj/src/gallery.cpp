#include "rr1/gallery.hpp"

#include "rr1/errors.hpp"
#include "rr1/linalg.hpp"
#include "rr1/util.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace rr1 {

namespace {

void require_size(int n, const char* who) {
    if (n < 2) throw InputError(std::string(who) + ": size must be at least 2");
}

} // namespace

ComplexMatrix grcar(int n) {
    require_size(n, "grcar");
    ComplexMatrix A = ComplexMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        if (i + 1 < n) A(i + 1, i) = -1.0;
        for (int j = i; j <= std::min(i + 3, n - 1); ++j) A(i, j) = 1.0;
    }
    return A;
}

ComplexMatrix jordan(int n, Complex lambda) {
    require_size(n, "jordan");
    ComplexMatrix A = ComplexMatrix::Zero(n, n);
    A.diagonal().setConstant(lambda);
    for (int i = 0; i + 1 < n; ++i) A(i, i + 1) = 1.0;
    return A;
}

ComplexMatrix sampling(int n) {
    require_size(n, "sampling");
    ComplexMatrix A = ComplexMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        double xi = static_cast<double>(i + 1);
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            double xj = static_cast<double>(j + 1);
            A(i, j) = xi / (xi - xj);
        }
    }
    // Diagonal entries close each column sum; this is the rule that yields
    // the integer spectrum 0..n-1.
    for (int j = 0; j < n; ++j) {
        Complex s = 0.0;
        for (int i = 0; i < n; ++i)
            if (i != j) s += A(i, j);
        A(j, j) = s;
    }
    return A;
}

ComplexMatrix normal_from_eigenvalues(const std::vector<Complex>& lams) {
    if (lams.empty()) throw InputError("normal_from_eigenvalues: empty eigenvalue list");
    ComplexMatrix A = ComplexMatrix::Zero(static_cast<int>(lams.size()),
                                          static_cast<int>(lams.size()));
    for (size_t i = 0; i < lams.size(); ++i)
        A(static_cast<int>(i), static_cast<int>(i)) = lams[i];
    return A;
}

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

ComplexMatrix load_matrix_json(const std::string& path, const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // nlohmann reports a byte offset; recover line/column from it.
        int line = 1, col = 1;
        for (size_t i = 0; i < std::min(text.size(), static_cast<size_t>(e.byte)); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(path + ": " + e.what(), line, col);
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("entries"))
        throw ParseError(path + ": matrix JSON needs fields 'n' and 'entries'", 1, 1);
    int n = doc["n"].get<int>();
    const auto& rows = doc["entries"];
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw ParseError(path + ": 'entries' must hold " + std::to_string(n) + " rows", 1, 1);
    ComplexMatrix M(n, n);
    for (int i = 0; i < n; ++i) {
        const auto& row = rows[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw ParseError(path + ": row " + std::to_string(i + 1) + " must hold " +
                                 std::to_string(n) + " entries",
                             1, 1);
        for (int j = 0; j < n; ++j) {
            const auto& e = row[static_cast<size_t>(j)];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
                throw ParseError(path + ": entry (" + std::to_string(i + 1) + "," +
                                     std::to_string(j + 1) + ") must be [re,im]",
                                 1, 1);
            M(i, j) = Complex(e[0].get<double>(), e[1].get<double>());
        }
    }
    return M;
}

ComplexMatrix load_matrix_csv(const std::string& path, const std::string& text) {
    std::vector<std::vector<Complex>> rows;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        // skip blank lines
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        std::vector<Complex> row;
        size_t start = 0;
        while (start <= line.size()) {
            size_t comma = line.find(',', start);
            std::string token =
                line.substr(start, comma == std::string::npos ? std::string::npos
                                                              : comma - start);
            try {
                row.push_back(parse_complex(token));
            } catch (const ParseError& e) {
                throw ParseError(path + ": " + e.what(), lineno,
                                 static_cast<int>(start) + 1);
            }
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw ParseError(path + ": inconsistent row length", lineno, 1);
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError(path + ": no data rows", 1, 1);
    ComplexMatrix M(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j)
            M(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    return M;
}

} // namespace

MatrixSpec parse_matrix_spec(const std::string& text, const std::string& symbol_text) {
    auto size_after = [&](size_t pos, const char* who) {
        try {
            size_t used = 0;
            std::string rest = text.substr(pos);
            int n = std::stoi(rest, &used);
            if (used != rest.size()) throw std::invalid_argument("trailing");
            return n;
        } catch (const std::exception&) {
            throw InputError(std::string(who) + ": bad size in matrix spec '" + text + "'");
        }
    };
    MatrixSpec spec;
    if (text.rfind("grcar:", 0) == 0) {
        spec.kind = MatrixSpec::Kind::grcar;
        spec.n = size_after(6, "grcar");
    } else if (text.rfind("sampling:", 0) == 0) {
        spec.kind = MatrixSpec::Kind::sampling;
        spec.n = size_after(9, "sampling");
    } else if (text.rfind("jordan:", 0) == 0) {
        spec.kind = MatrixSpec::Kind::jordan;
        std::string rest = text.substr(7);
        size_t colon = rest.find(':');
        if (colon != std::string::npos) {
            std::string lam = rest.substr(colon + 1);
            size_t comma = lam.find(',');
            try {
                if (comma == std::string::npos) {
                    spec.lambda = Complex(std::stod(lam), 0.0);
                } else {
                    spec.lambda = Complex(std::stod(lam.substr(0, comma)),
                                          std::stod(lam.substr(comma + 1)));
                }
            } catch (const std::exception&) {
                throw InputError("jordan: bad shift in matrix spec '" + text + "'");
            }
            rest = rest.substr(0, colon);
        }
        try {
            spec.n = std::stoi(rest);
        } catch (const std::exception&) {
            throw InputError("jordan: bad size in matrix spec '" + text + "'");
        }
    } else if (text.rfind("toeplitz:", 0) == 0) {
        if (symbol_text.empty())
            throw InputError("matrix kind 'toeplitz' requires a symbol");
        spec.kind = MatrixSpec::Kind::toeplitz;
        spec.n = size_after(9, "toeplitz");
        spec.symbol = parse_symbol(symbol_text);
    } else if (text.rfind("normal:", 0) == 0) {
        spec.kind = MatrixSpec::Kind::normal;
        ComplexMatrix inner = build_matrix(parse_matrix_spec(text.substr(7), symbol_text));
        for (const auto& e : eigen_with_conditions(inner))
            spec.eigenvalues.push_back(e.lambda);
    } else if (text.rfind("file:", 0) == 0) {
        spec.kind = MatrixSpec::Kind::file;
        spec.path = text.substr(5);
    } else {
        spec.kind = MatrixSpec::Kind::file;
        spec.path = text;
    }
    return spec;
}

ComplexMatrix build_matrix(const MatrixSpec& spec) {
    switch (spec.kind) {
    case MatrixSpec::Kind::grcar: return grcar(spec.n);
    case MatrixSpec::Kind::jordan: return jordan(spec.n, spec.lambda);
    case MatrixSpec::Kind::sampling: return sampling(spec.n);
    case MatrixSpec::Kind::toeplitz: return toeplitz_matrix(spec.symbol, spec.n);
    case MatrixSpec::Kind::normal: return normal_from_eigenvalues(spec.eigenvalues);
    case MatrixSpec::Kind::file: return load_matrix(spec.path);
    }
    throw InputError("unknown matrix kind");
}

ComplexMatrix load_matrix(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();

    bool json;
    if (ends_with(path, ".json")) {
        json = true;
    } else if (ends_with(path, ".csv")) {
        json = false;
    } else {
        size_t first = text.find_first_not_of(" \t\r\n");
        json = first != std::string::npos && text[first] == '{';
    }
    ComplexMatrix M = json ? load_matrix_json(path, text) : load_matrix_csv(path, text);
    if (!M.allFinite()) throw InputError(path + ": matrix has non-finite entries");
    return M;
}

void save_matrix(const std::string& path, const ComplexMatrix& M) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + path + "'");
    if (ends_with(path, ".csv")) {
        for (Eigen::Index i = 0; i < M.rows(); ++i) {
            for (Eigen::Index j = 0; j < M.cols(); ++j) {
                if (j) out << ",";
                out << format_complex(M(i, j));
            }
            out << "\n";
        }
        return;
    }
    if (M.rows() != M.cols())
        throw InputError("save_matrix: JSON format stores square matrices only");
    // Hand-rolled emitter so every component carries 17 significant digits.
    out << "{\"n\":" << M.rows() << ",\"entries\":[";
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
        if (i) out << ",";
        out << "[";
        for (Eigen::Index j = 0; j < M.cols(); ++j) {
            if (j) out << ",";
            out << "[" << format_full(M(i, j).real()) << ","
                << format_full(M(i, j).imag()) << "]";
        }
        out << "]";
    }
    out << "]}\n";
}

} // namespace rr1
