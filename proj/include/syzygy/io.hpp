#pragma once
/**
 * @file io.hpp
 * @brief Polynomial text grammar (parse + print) and the ideal file format.
 *
 * Grammar, whitespace-insensitive between tokens:
 *   poly   := ['-'] term (('+'|'-') term)*
 *   term   := coef ['*' factors] | factors
 *   factors:= factor ('*' factor)*
 *   factor := 'x' nat ['^' nat]
 *   coef   := nat | nat '/' nat
 *
 * Ideal files:
 *   ring <n> vars over F<q>      (or: over QQ)
 *   ideal:
 *   <one polynomial per line>
 * Blank lines and '#' comments are ignored.
 */

#include <cctype>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "syzygy/poly.hpp"

namespace syzygy {

namespace detail {

class Scanner {
public:
    Scanner(const std::string& s) : s_(s) {}

    void skip_ws() { while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_; }
    bool eof() { skip_ws(); return pos_ >= s_.size(); }
    char peek() { skip_ws(); return pos_ < s_.size() ? s_[pos_] : '\0'; }
    std::size_t pos() const { return pos_; }
    void advance() { ++pos_; }

    std::int64_t nat() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw parse_error("expected a number", pos_);
        std::int64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            if (v > (std::int64_t(1) << 56)) throw parse_error("number too large", pos_);
            v = v * 10 + (s_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace detail

/**
 * Parse one polynomial.  Rejects unknown variables (index >= nvars) and
 * malformed syntax with a position-carrying parse_error.
 */
template <class K>
Poly<K> parse_polynomial(const RingContext<K>& ctx, const std::string& text) {
    detail::Scanner sc(text);
    std::vector<Term<K>> acc;

    bool first = true;
    while (true) {
        if (sc.eof()) {
            if (first) throw parse_error("empty polynomial", sc.pos());
            break;
        }
        bool negate = false;
        char c = sc.peek();
        if (first) {
            if (c == '-') { negate = true; sc.advance(); }
        } else {
            if (c == '+') { sc.advance(); }
            else if (c == '-') { negate = true; sc.advance(); }
            else throw parse_error(std::string("expected '+' or '-', got '") + c + "'", sc.pos());
        }
        first = false;

        // term
        typename K::Elem coef = ctx.field.one();
        bool saw_coef = false;
        c = sc.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::int64_t num = sc.nat();
            std::int64_t den = 1;
            if (sc.peek() == '/') { sc.advance(); den = sc.nat(); }
            coef = ctx.field.from_fraction(num, den);
            saw_coef = true;
        }
        Monomial m = monomial_one(ctx.nvars);
        bool expect_factor = !saw_coef;
        while (true) {
            if (expect_factor || sc.peek() == '*') {
                if (!expect_factor) sc.advance(); // consume '*'
                char v = sc.peek();
                if (v != 'x') {
                    if (expect_factor) throw parse_error("expected a term", sc.pos());
                    throw parse_error("expected a variable after '*'", sc.pos());
                }
                sc.advance();
                std::int64_t idx = sc.nat();
                if (idx >= ctx.nvars)
                    throw parse_error("unknown variable x" + std::to_string(idx) + " in a " +
                                      std::to_string(ctx.nvars) + "-variable ring", sc.pos());
                std::int64_t pw = 1;
                if (sc.peek() == '^') { sc.advance(); pw = sc.nat(); }
                if (pw >= (std::int64_t(1) << 16)) throw parse_error("exponent too large", sc.pos());
                m.e[std::size_t(idx)] += std::int32_t(pw);
                m.deg += std::int32_t(pw);
                expect_factor = false;
            } else {
                break;
            }
        }
        if (negate) coef = ctx.field.neg(coef);
        acc.push_back(Term<K>{std::move(m), coef});
    }
    return poly_normalize(ctx, std::move(acc));
}

inline std::string monomial_str(const Monomial& m) {
    std::string s;
    for (std::size_t i = 0; i < m.e.size(); ++i) {
        if (m.e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i);
        if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
    }
    return s.empty() ? "1" : s;
}

/**
 * Canonical text form; parse(print(f)) == f.  Over QQ a leading negative
 * coefficient prints with a '-' sign; over F_q coefficients are canonical
 * residues and print as-is.
 */
template <class K>
std::string poly_str(const RingContext<K>& ctx, const Poly<K>& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < f.terms.size(); ++i) {
        const auto& t = f.terms[i];
        std::string cs = ctx.field.str(t.c);
        bool neg_coef = !cs.empty() && cs[0] == '-';
        if (neg_coef) cs = cs.substr(1);
        if (i == 0) {
            if (neg_coef) s += "-";
        } else {
            s += neg_coef ? " - " : " + ";
        }
        std::string ms = monomial_str(t.m);
        if (ms == "1") s += cs;
        else if (cs == "1") s += ms;
        else s += cs + "*" + ms;
    }
    return s;
}

struct FieldSpec {
    bool rational = false;
    std::int64_t q = 32003;

    std::string name() const { return rational ? "QQ" : "F" + std::to_string(q); }
};

struct IdealText {
    int nvars = 0;
    FieldSpec field;
    std::vector<std::string> polys;
};

/// Parse the header + body of an ideal file into raw text lines.
inline IdealText read_ideal_text(std::istream& in, const std::string& what = "ideal file") {
    IdealText out;
    std::string line;
    bool have_ring = false, have_ideal = false;
    while (std::getline(in, line)) {
        std::size_t h = line.find('#');
        if (h != std::string::npos) line = line.substr(0, h);
        std::string trimmed;
        {
            std::size_t b = line.find_first_not_of(" \t\r");
            if (b != std::string::npos) {
                std::size_t e = line.find_last_not_of(" \t\r");
                trimmed = line.substr(b, e - b + 1);
            }
        }
        if (trimmed.empty()) continue;
        if (!have_ring) {
            std::istringstream is(trimmed);
            std::string kw_ring, kw_vars, kw_over, fld;
            long long n = 0;
            is >> kw_ring >> n >> kw_vars >> kw_over >> fld;
            if (is.fail() || kw_ring != "ring" || kw_vars != "vars" || kw_over != "over" || n < 1 || n > 64)
                throw parse_error(what + ": bad ring header '" + trimmed + "'");
            out.nvars = int(n);
            if (fld == "QQ") {
                out.field.rational = true;
            } else if (fld.size() > 1 && fld[0] == 'F') {
                out.field.rational = false;
                try {
                    out.field.q = std::stoll(fld.substr(1));
                } catch (...) {
                    throw parse_error(what + ": bad field '" + fld + "'");
                }
            } else {
                throw parse_error(what + ": bad field '" + fld + "'");
            }
            have_ring = true;
        } else if (!have_ideal) {
            if (trimmed != "ideal:")
                throw parse_error(what + ": expected 'ideal:' after ring header");
            have_ideal = true;
        } else {
            out.polys.push_back(trimmed);
        }
    }
    if (!have_ring) throw parse_error(what + ": missing ring header");
    if (!have_ideal) throw parse_error(what + ": missing 'ideal:' section");
    return out;
}

inline IdealText read_ideal_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    return read_ideal_text(in, path);
}

template <class K>
std::vector<Poly<K>> parse_ideal_body(const RingContext<K>& ctx, const IdealText& txt) {
    std::vector<Poly<K>> gens;
    gens.reserve(txt.polys.size());
    for (const auto& s : txt.polys) gens.push_back(parse_polynomial(ctx, s));
    return gens;
}

} // namespace syzygy
