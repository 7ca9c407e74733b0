#pragma once

#include <string>
#include <vector>

#include "galeq/core.hpp"

namespace galeq {

/// The value r * (q^{1/2})^k of an unramified character at a uniformizer.
struct Coord {
    Rational r{1};
    Int k = 0;

    bool operator==(const Coord&) const = default;
    bool operator<(const Coord& o) const;
    Coord operator*(const Coord& o) const;
    Coord inverse() const;
};

std::string format(const Coord& c);

enum class Side { unitary, general_linear };

/// Unramified character of the diagonal torus. On the unitary side the
/// group is U(rank) and there are rank/2 coordinates (rounded down); on the
/// general linear side there are rank coordinates.
struct UnramChar {
    Side side = Side::general_linear;
    Int rank = 0;
    std::vector<Coord> coords;

    void validate() const;
    bool operator==(const UnramChar&) const = default;
};

UnramChar operator*(const UnramChar& a, const UnramChar& b);
std::string format(const UnramChar& c);

/// Exponents of the square root of the modulus character of the Siegel
/// parabolic of U(2m): (2m-1)/2, ..., 1/2.
std::vector<Rational> modulus_exponents_U(Int m);
/// Same for U(2m+1): m, ..., 1. Experimental.
std::vector<Rational> modulus_exponents_U_odd(Int m);
/// Borel of GL_N: (N-1)/2, ..., -(N-1)/2.
std::vector<Rational> modulus_exponents_GL(Int N);

/// Twist T_sigma for sigma(q^{1/2}) = eps q^{1/2}: coordinate i is
/// eps^{2 e_i}. Odd unitary rank requires experimental_odd.
UnramChar galois_twist(Side side, Int rank, int eps, bool experimental_odd = false);
/// sigma applied to the values: (r, k) -> (r eps^k, k)
UnramChar galois_on_values(const UnramChar& chi, int eps);
/// sigma o (induced from chi) is induced from this character.
UnramChar conjugate_char(const UnramChar& chi, int eps, bool experimental_odd = false);

enum class Alignment {
    paired,    // (c_1..c_m, c_1^{-1}..c_m^{-1})
    reversed,  // (c_1..c_m, c_m^{-1}..c_1^{-1})
};

UnramChar base_change_char(const UnramChar& chi, Alignment align = Alignment::paired,
                           bool experimental_odd = false);

/// Multiset equality on GL; signed permutations on the unitary side.
bool weyl_equivalent(const UnramChar& a, const UnramChar& b);
/// Canonical representative of the Weyl orbit.
UnramChar weyl_normal_form(const UnramChar& a);

struct CommutativityReport {
    bool holds = false;           // Weyl-equivalent
    bool tuple_equal = false;     // equal coordinate by coordinate
    UnramChar lhs;                // T_{sigma,l} * sigma(chi_l)
    UnramChar rhs;                // (T_sigma * sigma(chi))_l
    std::vector<Rational> twist_exponents_lhs;
    std::vector<Rational> twist_exponents_rhs;
    bool exponents_tuple_equal = false;
    bool exponents_multiset_equal = false;
};

CommutativityReport commutativity_check(const UnramChar& chi, int eps, Alignment align = Alignment::paired,
                                        bool experimental_odd = false);

}  // namespace galeq
