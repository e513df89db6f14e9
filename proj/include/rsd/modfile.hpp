#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rsd/rsdmod.hpp"
#include "rsd/scalar_io.hpp"

namespace rsd {

/// Module description file:
///
///   ambient = <n>
///   regular:
///   a_span = [<vector>; <vector>; ...]
///   gens   = [<vector>; ...]
///   singular:
///   a_span = [...]
///   gens   = [...]
///
/// Vectors use the matrix entry grammar (entries comma-separated scalars,
/// vectors ';'-separated); '#' starts a comment. Sections may be omitted
/// when empty. The regular gens are O-span generators, the singular gens a
/// k[t^-1]-basis of the free part.
template <Field K>
struct ModuleFile {
    std::size_t ambient = 0;
    std::vector<Vec<K>> regular_a_span, regular_gens;
    std::vector<Vec<K>> singular_a_span, singular_gens;
};

namespace detail {

inline std::string strip_comments(std::string_view text) {
    std::string out;
    bool skipping = false;
    for (char c : text) {
        if (c == '#') skipping = true;
        if (c == '\n') skipping = false;
        if (!skipping) out += c;
    }
    return out;
}

class ModuleFileScanner {
public:
    explicit ModuleFileScanner(std::string text) : text_(std::move(text)) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }
    std::string ident() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (start == pos_) throw ParseError(pos_, "expected an identifier");
        return text_.substr(start, pos_ - start);
    }
    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw ParseError(pos_, std::string("expected '") + c + "'");
        ++pos_;
    }
    std::size_t integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError(pos_, "expected an integer");
        return static_cast<std::size_t>(std::stoull(text_.substr(start, pos_ - start)));
    }
    /// Raw content of a [...] list.
    std::string bracket_body() {
        expect('[');
        std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != ']') ++pos_;
        if (pos_ >= text_.size()) throw ParseError(start, "unterminated '['");
        std::string body = text_.substr(start, pos_ - start);
        ++pos_;
        return body;
    }
    std::size_t pos() const { return pos_; }

private:
    std::string text_;
    std::size_t pos_ = 0;
};

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            parts.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return parts;
}

inline bool blank(const std::string& s) {
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace detail

template <Field K>
Vec<K> parse_vector_text(std::string_view text) {
    std::vector<Laurent<K>> entries;
    for (const auto& part : detail::split(std::string(text), ','))
        entries.push_back(parse_scalar<K>(part));
    return Vec<K>(std::move(entries));
}

/// Rows separated by ';', entries by ','.
template <Field K>
Mat<K> parse_matrix_text(std::string_view text) {
    std::vector<std::vector<Laurent<K>>> rows;
    for (const auto& row : detail::split(std::string(text), ';')) {
        rows.push_back({});
        for (const auto& part : detail::split(row, ','))
            rows.back().push_back(parse_scalar<K>(part));
    }
    Mat<K> m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols())
            throw ParseError(0, "ragged matrix rows");
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

/// `[v; v; ...]` body -> vectors; empty body -> none.
template <Field K>
std::vector<Vec<K>> parse_vector_list(const std::string& body, std::size_t n) {
    std::vector<Vec<K>> out;
    if (detail::blank(body)) return out;
    for (const auto& piece : detail::split(body, ';')) {
        Vec<K> v = parse_vector_text<K>(piece);
        if (v.size() != n) throw ParseError(0, "vector of length " + std::to_string(v.size()) +
                                                   " in ambient dimension " + std::to_string(n));
        out.push_back(std::move(v));
    }
    return out;
}

template <Field K>
ModuleFile<K> parse_module_file(std::string_view text) {
    detail::ModuleFileScanner sc(detail::strip_comments(text));
    ModuleFile<K> mf;
    if (sc.ident() != "ambient") throw ParseError(0, "module file must start with 'ambient'");
    sc.expect('=');
    mf.ambient = sc.integer();
    while (!sc.at_end()) {
        std::string section = sc.ident();
        sc.expect(':');
        bool regular = section == "regular";
        if (!regular && section != "singular")
            throw ParseError(sc.pos(), "unknown section '" + section + "'");
        while (!sc.at_end()) {
            auto save = sc;
            std::string key = sc.ident();
            if (key == "regular" || key == "singular") {
                sc = save;
                break;
            }
            sc.expect('=');
            auto vecs = parse_vector_list<K>(sc.bracket_body(), mf.ambient);
            if (key == "a_span")
                (regular ? mf.regular_a_span : mf.singular_a_span) = std::move(vecs);
            else if (key == "gens")
                (regular ? mf.regular_gens : mf.singular_gens) = std::move(vecs);
            else
                throw ParseError(sc.pos(), "unknown key '" + key + "'");
        }
    }
    return mf;
}

/// Validate the file contents into a decomposition.
template <Field K>
RSDecomposition<K> rsd_from_file(const ModuleFile<K>& mf) {
    auto m = GeneralSubmodule<K>::build(mf.ambient, mf.regular_a_span, mf.regular_gens);
    auto n = SingularModule<K>::build(mf.ambient, mf.singular_a_span, mf.singular_gens);
    return build_rsd(m, n);
}

namespace detail {

template <Field K>
std::string vector_list(const Mat<K>& cols) {
    std::string out = "[";
    for (std::size_t j = 0; j < cols.cols(); ++j) {
        if (j) out += "; ";
        out += cols.col(j).str();
    }
    return out + "]";
}

} // namespace detail

/// Canonical dump; reparsing gives a decomposition with equal components.
template <Field K>
std::string render_module_file(const RSDecomposition<K>& rsd) {
    std::string out;
    out += "ambient = " + std::to_string(rsd.ambient()) + "\n";
    out += "regular:\n";
    out += "a_span = " + detail::vector_list(rsd.regular().divisible_basis()) + "\n";
    out += "gens = " + detail::vector_list(rsd.regular().free_part().basis()) + "\n";
    out += "singular:\n";
    out += "a_span = " + detail::vector_list(rsd.singular().divisible_basis()) + "\n";
    out += "gens = " + detail::vector_list(rsd.singular().free_basis()) + "\n";
    return out;
}

/// Lattice literal `lattice n=<n> gens=[<vector>;...]`; inverse of
/// Lattice::str().
template <Field K>
Lattice<K> parse_lattice_literal(std::string_view text) {
    detail::ModuleFileScanner sc(detail::strip_comments(text));
    if (sc.ident() != "lattice") throw ParseError(0, "expected 'lattice'");
    if (sc.ident() != "n") throw ParseError(0, "expected 'n='");
    sc.expect('=');
    std::size_t n = sc.integer();
    if (sc.ident() != "gens") throw ParseError(0, "expected 'gens='");
    sc.expect('=');
    auto gens = parse_vector_list<K>(sc.bracket_body(), n);
    return Lattice<K>::from_generators(n, gens);
}

} // namespace rsd
