#pragma once

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "lcdct/dyadic.hpp"
#include "lcdct/matrix.hpp"

namespace lcdct {

// Matrix text format: first line "rows cols", then one line per row.
// Dyadic entries print as plain integers or "m/2^k" (mantissa over a power of
// two); real entries print with 17 significant digits.

inline void write_matrix(std::ostream& os, const DyadicMatrix& m) {
    os << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            const Dyadic& d = m(i, j);
            if (d.exponent() >= 0) {
                if (d.exponent() > 62)
                    throw std::runtime_error("write_matrix: dyadic entry too large to print");
                os << (d.mantissa() << d.exponent());
            } else {
                os << d.mantissa() << "/2^" << -d.exponent();
            }
        }
        os << '\n';
    }
}

inline void write_matrix(std::ostream& os, const RealMatrix& m) {
    os << m.rows() << ' ' << m.cols() << '\n';
    os << std::setprecision(17);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << m(i, j);
        }
        os << '\n';
    }
}

template <class Matrix>
void save_matrix(const std::string& path, const Matrix& m) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("save_matrix: cannot open " + path);
    write_matrix(f, m);
}

namespace detail {

inline Dyadic parse_dyadic_token(const std::string& tok) {
    const auto slash = tok.find('/');
    if (slash == std::string::npos) return Dyadic(std::stoll(tok));
    if (tok.compare(slash, 3, "/2^") != 0)
        throw std::runtime_error("matrix parse: bad dyadic token '" + tok + "'");
    const std::int64_t m = std::stoll(tok.substr(0, slash));
    const int k = std::stoi(tok.substr(slash + 3));
    return Dyadic(m, -k);
}

inline bool token_is_real(const std::string& tok) {
    return tok.find('.') != std::string::npos || tok.find('e') != std::string::npos ||
           tok.find('E') != std::string::npos || tok.find("inf") != std::string::npos ||
           tok.find("nan") != std::string::npos;
}

template <class Matrix, class EntryParser>
Matrix read_matrix_impl(std::istream& is, EntryParser parse) {
    std::size_t rows = 0, cols = 0;
    if (!(is >> rows >> cols)) throw std::runtime_error("matrix parse: missing header");
    Matrix m(rows, cols);
    std::string tok;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            if (!(is >> tok))
                throw std::runtime_error("matrix parse: truncated at entry (" +
                                         std::to_string(i) + "," + std::to_string(j) + ")");
            m(i, j) = parse(tok);
        }
    return m;
}

}  // namespace detail

/// Read a dyadic matrix; rejects real-formatted entries.
inline DyadicMatrix read_dyadic_matrix(std::istream& is) {
    return detail::read_matrix_impl<DyadicMatrix>(is, [](const std::string& tok) {
        if (detail::token_is_real(tok))
            throw std::runtime_error("matrix parse: real entry '" + tok +
                                     "' in a dyadic matrix");
        return detail::parse_dyadic_token(tok);
    });
}

/// Read any matrix as doubles (dyadic tokens convert exactly).
inline RealMatrix read_real_matrix(std::istream& is) {
    return detail::read_matrix_impl<RealMatrix>(is, [](const std::string& tok) {
        if (detail::token_is_real(tok)) return std::stod(tok);
        return detail::parse_dyadic_token(tok).to_double();
    });
}

inline DyadicMatrix load_dyadic_matrix(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("load_dyadic_matrix: cannot open " + path);
    return read_dyadic_matrix(f);
}

inline RealMatrix load_real_matrix(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("load_real_matrix: cannot open " + path);
    return read_real_matrix(f);
}

/// True when every entry in the file parses as a dyadic rational, i.e. the
/// file holds a low-complexity kernel rather than a normalized transform.
inline bool file_is_dyadic_matrix(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("file_is_dyadic_matrix: cannot open " + path);
    std::string header;
    std::getline(f, header);
    std::string tok;
    while (f >> tok)
        if (detail::token_is_real(tok)) return false;
    return true;
}

}  // namespace lcdct
