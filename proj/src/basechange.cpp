#include "galeq/basechange.hpp"

#include <algorithm>

namespace galeq {

bool Coord::operator<(const Coord& o) const
{
    if (r != o.r)
        return r < o.r;
    return k < o.k;
}

Coord Coord::operator*(const Coord& o) const { return Coord{r * o.r, checked_add(k, o.k)}; }

Coord Coord::inverse() const { return Coord{Rational(1) / r, -k}; }

std::string format(const Coord& c) { return "(" + format(c.r) + "," + std::to_string(c.k) + ")"; }

void UnramChar::validate() const
{
    if (rank < 0)
        raise(ErrorCode::invalid_argument, "negative rank");
    const Int expected = side == Side::unitary ? rank / 2 : rank;
    if (static_cast<Int>(coords.size()) != expected)
        raise(ErrorCode::invalid_argument, "wrong number of coordinates for the group");
    for (const auto& c : coords)
        if (c.r == 0)
            raise(ErrorCode::invalid_argument, "character coordinate must be nonzero");
}

UnramChar operator*(const UnramChar& a, const UnramChar& b)
{
    a.validate();
    b.validate();
    if (a.side != b.side || a.rank != b.rank)
        raise(ErrorCode::wrong_side, "multiplying characters of different groups");
    UnramChar out{a.side, a.rank, {}};
    for (std::size_t i = 0; i < a.coords.size(); ++i)
        out.coords.push_back(a.coords[i] * b.coords[i]);
    return out;
}

std::string format(const UnramChar& c)
{
    std::string s = c.side == Side::unitary ? "U" : "GL";
    s += std::to_string(c.rank) + "[";
    for (std::size_t i = 0; i < c.coords.size(); ++i)
        s += (i ? " " : "") + format(c.coords[i]);
    return s + "]";
}

std::vector<Rational> modulus_exponents_U(Int m)
{
    std::vector<Rational> e;
    for (Int i = 1; i <= m; ++i)
        e.push_back(Rational(2 * m - 1, 2) - Rational(i - 1));
    return e;
}

std::vector<Rational> modulus_exponents_U_odd(Int m)
{
    std::vector<Rational> e;
    for (Int i = 1; i <= m; ++i)
        e.push_back(Rational(m - i + 1));
    return e;
}

std::vector<Rational> modulus_exponents_GL(Int N)
{
    std::vector<Rational> e;
    for (Int i = 1; i <= N; ++i)
        e.push_back(Rational(N - 1, 2) - Rational(i - 1));
    return e;
}

static std::vector<Rational> twist_exponents(Side side, Int rank, bool experimental_odd)
{
    if (side == Side::general_linear)
        return modulus_exponents_GL(rank);
    if (rank % 2 != 0) {
        if (!experimental_odd)
            raise(ErrorCode::invalid_argument, "odd unitary rank needs the experimental flag");
        return modulus_exponents_U_odd(rank / 2);
    }
    return modulus_exponents_U(rank / 2);
}

static Rational sign_power(int eps, Int k)
{
    return (eps == -1 && k % 2 != 0) ? Rational(-1) : Rational(1);
}

UnramChar galois_twist(Side side, Int rank, int eps, bool experimental_odd)
{
    if (eps != 1 && eps != -1)
        raise(ErrorCode::invalid_argument, "sigma must send q^(1/2) to +-q^(1/2)");
    UnramChar out{side, rank, {}};
    for (const auto& e : twist_exponents(side, rank, experimental_odd))
        out.coords.push_back(Coord{sign_power(eps, (2 * e).numerator()), 0});
    return out;
}

UnramChar galois_on_values(const UnramChar& chi, int eps)
{
    chi.validate();
    UnramChar out = chi;
    for (auto& c : out.coords)
        c.r *= sign_power(eps, c.k);
    return out;
}

UnramChar conjugate_char(const UnramChar& chi, int eps, bool experimental_odd)
{
    return galois_twist(chi.side, chi.rank, eps, experimental_odd) * galois_on_values(chi, eps);
}

UnramChar base_change_char(const UnramChar& chi, Alignment align, bool experimental_odd)
{
    chi.validate();
    if (chi.side != Side::unitary)
        raise(ErrorCode::wrong_side, "base change takes a unitary-side character");
    const bool odd = chi.rank % 2 != 0;
    if (odd && !experimental_odd)
        raise(ErrorCode::invalid_argument, "odd unitary rank needs the experimental flag");
    UnramChar out{Side::general_linear, chi.rank, chi.coords};
    if (odd)
        out.coords.push_back(Coord{});
    std::vector<Coord> inv;
    for (const auto& c : chi.coords)
        inv.push_back(c.inverse());
    if (align == Alignment::reversed)
        std::reverse(inv.begin(), inv.end());
    out.coords.insert(out.coords.end(), inv.begin(), inv.end());
    return out;
}

UnramChar weyl_normal_form(const UnramChar& a)
{
    a.validate();
    UnramChar out = a;
    if (a.side == Side::unitary)
        for (auto& c : out.coords)
            c = std::min(c, c.inverse());
    std::sort(out.coords.begin(), out.coords.end());
    return out;
}

bool weyl_equivalent(const UnramChar& a, const UnramChar& b)
{
    if (a.side != b.side || a.rank != b.rank)
        raise(ErrorCode::wrong_side, "comparing characters of different groups");
    return weyl_normal_form(a) == weyl_normal_form(b);
}

static std::vector<Rational> base_change_exponents(const std::vector<Rational>& e, Int rank, Alignment align)
{
    std::vector<Rational> out = e;
    if (rank % 2 != 0)
        out.push_back(Rational(0));
    std::vector<Rational> neg;
    for (const auto& x : e)
        neg.push_back(-x);
    if (align == Alignment::reversed)
        std::reverse(neg.begin(), neg.end());
    out.insert(out.end(), neg.begin(), neg.end());
    return out;
}

CommutativityReport commutativity_check(const UnramChar& chi, int eps, Alignment align, bool experimental_odd)
{
    chi.validate();
    if (chi.side != Side::unitary)
        raise(ErrorCode::wrong_side, "commutativity check takes a unitary-side character");
    CommutativityReport rep;
    const UnramChar chi_l = base_change_char(chi, align, experimental_odd);
    rep.lhs = conjugate_char(chi_l, eps);
    rep.rhs = base_change_char(conjugate_char(chi, eps, experimental_odd), align, experimental_odd);
    rep.tuple_equal = rep.lhs == rep.rhs;
    rep.holds = weyl_equivalent(rep.lhs, rep.rhs);

    rep.twist_exponents_lhs = modulus_exponents_GL(chi.rank);
    rep.twist_exponents_rhs =
        base_change_exponents(twist_exponents(Side::unitary, chi.rank, experimental_odd), chi.rank, align);
    rep.exponents_tuple_equal = rep.twist_exponents_lhs == rep.twist_exponents_rhs;
    auto a = rep.twist_exponents_lhs, b = rep.twist_exponents_rhs;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    rep.exponents_multiset_equal = a == b;
    return rep;
}

}  // namespace galeq
