// Squarefree monomials over F2[x_0..x_{m-1}]/(x_i^2+x_i) as 64-bit index masks,
// and polynomials as XOR-canonical sorted term lists.
//
// A monomial is identified by its index set: bit i set <=> x_i divides it.
// Mask 0 is the constant 1. Products are unions (idempotent variables), so
// lcm == product for monomials. The ambient variable count m is carried by
// Poly and checked at the boundaries; Monomial itself is m-free.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mono {

inline constexpr int kMaxVars = 64;  // index mask width; ambient m for symbolic ops may exceed this only if no index needs it

struct Monomial {
    std::uint64_t mask = 0;

    friend bool operator==(Monomial a, Monomial b) { return a.mask == b.mask; }
    friend bool operator!=(Monomial a, Monomial b) { return a.mask != b.mask; }
    friend bool operator<(Monomial a, Monomial b) { return a.mask < b.mask; }
};

int degree(Monomial f);                       // |ind(f)|
std::vector<int> indices(Monomial f);         // sorted ascending
Monomial make_monomial(const std::vector<int>& idx);  // rejects duplicates, out-of-range
Monomial lcm(Monomial f, Monomial g);         // union of index sets
Monomial gcd(Monomial f, Monomial g);         // intersection
bool divides(Monomial f, Monomial g);         // f | g
int max_index(Monomial f);                    // -1 for the constant 1

// Text form: "x3*x5*x7", constant is "1". Whitespace tolerated around tokens.
std::string to_string(Monomial f);
Monomial parse_monomial(const std::string& text);

// Polynomial in the quotient ring: canonical == terms sorted ascending by mask,
// no duplicates (duplicates cancel over F2). Zero polynomial == empty terms.
struct Poly {
    int m = 1;
    std::vector<std::uint64_t> terms;  // sorted, unique

    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const Poly& a, const Poly& b) { return a.m == b.m && a.terms == b.terms; }
};

Poly make_poly(int m, std::vector<std::uint64_t> terms);  // canonicalizes; XOR-collapses duplicate pairs
Poly poly_from_monomials(int m, const std::vector<Monomial>& ms);
int degree(const Poly& p);                    // max term degree; -1 for the zero polynomial
Poly add(const Poly& p, const Poly& q);       // XOR of term sets
Poly mul(Monomial h, const Poly& p);          // h*t = h|t termwise; colliding products cancel: x0*(x0 + 1) == 0
Poly mul(const Poly& p, const Poly& q);

std::string to_string(const Poly& p);         // terms joined by " + ", zero is "0"
Poly parse_poly(const std::string& text, int m);

}  // namespace mono
