#pragma once

#include "hhop/hermitian_matrix.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace hhop {

// Raised on malformed matrix text; carries 1-based line and column.
class MatrixParseError : public std::runtime_error {
public:
    MatrixParseError(const std::string& what, int line, int column)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

namespace detail {

// Complex literal: `a`, `a+bi`, or `a-bi` with finite decimal reals.
inline Complex parse_complex_token(const std::string& tok, int line, int column) {
    const char* s = tok.c_str();
    char* end = nullptr;
    const double re = std::strtod(s, &end);
    if (end == s || !std::isfinite(re))
        throw MatrixParseError("expected a finite number, got '" + tok + "'", line,
                               column);
    if (*end == '\0') return Complex(re, 0.0);
    if (*end != '+' && *end != '-')
        throw MatrixParseError("malformed entry '" + tok + "'", line, column);
    const char* s2 = end;
    char* end2 = nullptr;
    const double im = std::strtod(s2, &end2);
    if (end2 == s2 || !std::isfinite(im) || *end2 != 'i' || *(end2 + 1) != '\0')
        throw MatrixParseError("malformed imaginary part in '" + tok + "'", line,
                               column);
    return Complex(re, im);
}

} // namespace detail

// Text format:
//   dim n
//   n rows of n whitespace-separated entries (`a`, `a+bi`, `a-bi`)
// The raw matrix must be Hermitian within 1e-12 entrywise; the worst
// offending pair is named on rejection.
inline HermitianMatrix parse_matrix_text(std::istream& in) {
    std::string header;
    if (!std::getline(in, header))
        throw MatrixParseError("empty input, expected 'dim n'", 1, 1);
    std::istringstream hs(header);
    std::string kw;
    long long n = 0;
    if (!(hs >> kw >> n) || kw != "dim" || n < 1)
        throw MatrixParseError("expected header 'dim n' with n >= 1", 1, 1);
    std::string trailing;
    if (hs >> trailing)
        throw MatrixParseError("unexpected trailing token '" + trailing + "'", 1, 1);

    Matrix m(n, n);
    for (long long i = 0; i < n; ++i) {
        std::string row;
        if (!std::getline(in, row))
            throw MatrixParseError("expected " + std::to_string(n) + " rows, got " +
                                       std::to_string(i),
                                   static_cast<int>(i + 2), 1);
        std::size_t pos = 0;
        for (long long j = 0; j < n; ++j) {
            while (pos < row.size() && std::isspace(static_cast<unsigned char>(row[pos])))
                ++pos;
            const std::size_t start = pos;
            while (pos < row.size() && !std::isspace(static_cast<unsigned char>(row[pos])))
                ++pos;
            if (start == pos)
                throw MatrixParseError("row has " + std::to_string(j) +
                                           " entries, expected " + std::to_string(n),
                                       static_cast<int>(i + 2),
                                       static_cast<int>(start + 1));
            m(i, j) = detail::parse_complex_token(row.substr(start, pos - start),
                                                  static_cast<int>(i + 2),
                                                  static_cast<int>(start + 1));
        }
        while (pos < row.size() && std::isspace(static_cast<unsigned char>(row[pos])))
            ++pos;
        if (pos != row.size())
            throw MatrixParseError("unexpected trailing content", static_cast<int>(i + 2),
                                   static_cast<int>(pos + 1));
    }

    double worst = 0.0;
    Eigen::Index wi = 0, wj = 0;
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            const double drift = std::abs(m(i, j) - std::conj(m(j, i)));
            if (drift > worst) {
                worst = drift;
                wi = i;
                wj = j;
            }
        }
    if (worst > HermitianMatrix::kHermitianTol)
        throw std::invalid_argument(
            "matrix is not Hermitian: entries (" + std::to_string(wi + 1) + "," +
            std::to_string(wj + 1) + ") and (" + std::to_string(wj + 1) + "," +
            std::to_string(wi + 1) + ") differ from conjugates by " +
            std::to_string(worst));
    return HermitianMatrix(m);
}

inline HermitianMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    return parse_matrix_text(in);
}

inline std::string format_real17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline void write_matrix_text(std::ostream& out, const HermitianMatrix& a) {
    out << "dim " << a.dim() << "\n";
    for (Eigen::Index i = 0; i < a.dim(); ++i) {
        for (Eigen::Index j = 0; j < a.dim(); ++j) {
            if (j) out << " ";
            const Complex v = a(i, j);
            out << format_real17(v.real());
            if (v.imag() != 0.0) {
                out << (v.imag() < 0.0 ? "-" : "+") << format_real17(std::abs(v.imag()))
                    << "i";
            }
        }
        out << "\n";
    }
}

inline void save_matrix(const std::string& path, const HermitianMatrix& a) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_matrix_text(out, a);
}

} // namespace hhop
