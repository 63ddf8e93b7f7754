#include "mono/monomial.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

namespace mono {

int degree(Monomial f) { return std::popcount(f.mask); }

std::vector<int> indices(Monomial f) {
    std::vector<int> out;
    std::uint64_t m = f.mask;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

Monomial make_monomial(const std::vector<int>& idx) {
    std::uint64_t mask = 0;
    for (int i : idx) {
        if (i < 0 || i >= kMaxVars) throw std::invalid_argument("monomial index out of range: " + std::to_string(i));
        std::uint64_t bit = std::uint64_t{1} << i;
        if (mask & bit) throw std::invalid_argument("duplicate monomial index: " + std::to_string(i));
        mask |= bit;
    }
    return Monomial{mask};
}

Monomial lcm(Monomial f, Monomial g) { return Monomial{f.mask | g.mask}; }
Monomial gcd(Monomial f, Monomial g) { return Monomial{f.mask & g.mask}; }
bool divides(Monomial f, Monomial g) { return (f.mask & ~g.mask) == 0; }

int max_index(Monomial f) {
    if (f.mask == 0) return -1;
    return 63 - std::countl_zero(f.mask);
}

std::string to_string(Monomial f) {
    if (f.mask == 0) return "1";
    std::string out;
    for (int i : indices(f)) {
        if (!out.empty()) out += '*';
        out += 'x';
        out += std::to_string(i);
    }
    return out;
}

namespace {

void skip_ws(const std::string& s, size_t& pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

// Parses one monomial starting at pos; stops before '+' or end.
Monomial parse_monomial_at(const std::string& s, size_t& pos) {
    std::uint64_t mask = 0;
    bool constant_one = false;
    bool first = true;
    for (;;) {
        skip_ws(s, pos);
        if (pos >= s.size()) break;
        if (s[pos] == '1') {
            ++pos;
            constant_one = true;
        } else if (s[pos] == 'x' || s[pos] == 'X') {
            ++pos;
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == start) throw std::invalid_argument("expected variable index after 'x' in: " + s);
            int idx = std::stoi(s.substr(start, pos - start));
            if (idx >= kMaxVars) throw std::invalid_argument("variable index out of range: x" + std::to_string(idx));
            std::uint64_t bit = std::uint64_t{1} << idx;
            if (mask & bit) throw std::invalid_argument("repeated variable x" + std::to_string(idx) + " in monomial");
            mask |= bit;
        } else if (first) {
            throw std::invalid_argument("expected monomial at '" + s.substr(pos) + "'");
        } else {
            break;
        }
        first = false;
        skip_ws(s, pos);
        if (pos < s.size() && s[pos] == '*') {
            ++pos;
            continue;
        }
        break;
    }
    if (first) throw std::invalid_argument("empty monomial in: " + s);
    if (constant_one && mask != 0) throw std::invalid_argument("'1' mixed with variables in monomial: " + s);
    return Monomial{mask};
}

}  // namespace

Monomial parse_monomial(const std::string& text) {
    size_t pos = 0;
    Monomial f = parse_monomial_at(text, pos);
    skip_ws(text, pos);
    if (pos != text.size()) throw std::invalid_argument("trailing input after monomial: " + text);
    return f;
}

Poly make_poly(int m, std::vector<std::uint64_t> terms) {
    if (m < 1 || m > kMaxVars) throw std::invalid_argument("ambient m out of range: " + std::to_string(m));
    std::uint64_t ambient = (m == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1);
    for (std::uint64_t t : terms)
        if (t & ~ambient) throw std::invalid_argument("term uses variable >= m");
    std::sort(terms.begin(), terms.end());
    // XOR semantics: pairs of equal terms cancel.
    std::vector<std::uint64_t> out;
    out.reserve(terms.size());
    for (size_t i = 0; i < terms.size();) {
        size_t j = i;
        while (j < terms.size() && terms[j] == terms[i]) ++j;
        if ((j - i) & 1) out.push_back(terms[i]);
        i = j;
    }
    return Poly{m, std::move(out)};
}

Poly poly_from_monomials(int m, const std::vector<Monomial>& ms) {
    std::vector<std::uint64_t> t;
    t.reserve(ms.size());
    for (Monomial f : ms) t.push_back(f.mask);
    return make_poly(m, std::move(t));
}

int degree(const Poly& p) {
    int d = -1;
    for (std::uint64_t t : p.terms) d = std::max(d, std::popcount(t));
    return d;
}

Poly add(const Poly& p, const Poly& q) {
    if (p.m != q.m) throw std::invalid_argument("ambient mismatch in add");
    // merge two sorted unique lists, dropping terms present in both
    std::vector<std::uint64_t> out;
    out.reserve(p.terms.size() + q.terms.size());
    size_t i = 0, j = 0;
    while (i < p.terms.size() && j < q.terms.size()) {
        if (p.terms[i] < q.terms[j]) out.push_back(p.terms[i++]);
        else if (q.terms[j] < p.terms[i]) out.push_back(q.terms[j++]);
        else { ++i; ++j; }
    }
    out.insert(out.end(), p.terms.begin() + i, p.terms.end());
    out.insert(out.end(), q.terms.begin() + j, q.terms.end());
    return Poly{p.m, std::move(out)};
}

Poly mul(Monomial h, const Poly& p) {
    std::vector<std::uint64_t> t;
    t.reserve(p.terms.size());
    for (std::uint64_t term : p.terms) t.push_back(term | h.mask);
    return make_poly(p.m, std::move(t));
}

Poly mul(const Poly& p, const Poly& q) {
    if (p.m != q.m) throw std::invalid_argument("ambient mismatch in mul");
    std::vector<std::uint64_t> t;
    t.reserve(p.terms.size() * q.terms.size());
    for (std::uint64_t a : p.terms)
        for (std::uint64_t b : q.terms) t.push_back(a | b);
    return make_poly(p.m, std::move(t));
}

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::uint64_t t : p.terms) {
        if (!out.empty()) out += " + ";
        out += to_string(Monomial{t});
    }
    return out;
}

Poly parse_poly(const std::string& text, int m) {
    std::vector<std::uint64_t> terms;
    size_t pos = 0;
    skip_ws(text, pos);
    if (pos < text.size() && text[pos] == '0' && (pos + 1 == text.size() || text.find_first_not_of(" \t", pos + 1) == std::string::npos)) {
        return Poly{m, {}};
    }
    for (;;) {
        Monomial f = parse_monomial_at(text, pos);
        terms.push_back(f.mask);
        skip_ws(text, pos);
        if (pos >= text.size()) break;
        if (text[pos] != '+') throw std::invalid_argument("expected '+' at '" + text.substr(pos) + "'");
        ++pos;
    }
    return make_poly(m, std::move(terms));
}

}  // namespace mono
