#pragma once

// Fixtures and brute-force oracles shared by the test binaries. The oracles
// are written from the defining formulas and deliberately avoid calling the
// library routine they are used to check.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "galeq/basechange.hpp"
#include "galeq/cmfield.hpp"
#include "galeq/hecke.hpp"
#include "galeq/hodge.hpp"
#include "galeq/lattice.hpp"
#include "galeq/weights.hpp"

namespace fx {

using namespace galeq;

// t1 -> t2 -> ct1 -> ct2 -> t1 on {t1, t2, ct1, ct2}
inline CMFieldModel four_cycle_model() { return standard_model(2, {Perm{1, 2, 3, 0}}).field; }

// one conjugate pair, group {1, conj}
inline CMFieldModel quadratic_model() { return standard_model(1, hyperoctahedral_generators(1)).field; }

inline GroupElem element_acting_as(const CMFieldModel& model, const Perm& p)
{
    for (auto g : model.group().elements())
        if (model.action(g) == p)
            return g;
    raise(ErrorCode::invalid_argument, "no such element");
}

inline CMType cm_type(const CMFieldModel& model, std::initializer_list<const char*> names)
{
    std::vector<Emb> mem;
    for (auto s : names)
        mem.push_back(model.find(s));
    return CMType(model, mem);
}

inline InfinityType zexp_type(std::vector<Int> z) { return InfinityType::from_zexp(std::move(z)); }

inline ArchParams arch(const CMFieldModel& model, const CMType& phi, std::vector<Rational> A)
{
    ArchParams ap{static_cast<Int>(A.size()), {}};
    for (auto t : phi.members())
        ap.at[t] = A;
    (void)model;
    return ap;
}

inline EtaDecomposition trivial_eta(const CMFieldModel& model, const CMType& phi)
{
    std::map<Emb, Int> diff;
    for (auto t : phi.members())
        diff[t] = 0;
    return decomposition_from_diff(model, phi, diff, 0);
}

// ---- oracles ------------------------------------------------------------

/// (-1)^{#(phi minus g phi)}, read straight off the permutation.
inline int sign_by_count(const CMFieldModel& model, const CMType& phi, GroupElem g)
{
    std::set<std::size_t> image;
    for (auto t : phi.members())
        image.insert(model.action(g)[t.index]);
    int missing = 0;
    for (auto t : phi.members())
        missing += image.count(t.index) ? 0 : 1;
    return missing % 2 ? -1 : 1;
}

/// Critical integers from the archimedean factors: a pair (p, q) with p < q
/// contributes Gamma_C(s - p) on one side and Gamma_C(1 - s + q) after the
/// functional equation, so m is critical iff p < m <= q for every pair.
inline std::vector<Int> critical_by_gamma(const std::vector<Int>& T, Int w)
{
    Int lo = -1000, hi = 1000;
    for (auto p : T) {
        const Int a = std::min(p, w - p), b = std::max(p, w - p);
        lo = std::max(lo, a);
        hi = std::min(hi, b);
    }
    std::vector<Int> out;
    for (Int m = lo - 5; m <= hi + 5; ++m) {
        bool ok = true;
        for (auto p : T) {
            const Int a = std::min(p, w - p), b = std::max(p, w - p);
            ok = ok && a < m && m <= b;
        }
        if (ok)
            out.push_back(m);
    }
    return out;
}

/// The inequality evaluated term by term with a 1-indexed accessor; a term
/// touching a_{s+1} (s = n) or a_s (s = 0) is dropped.
inline bool inequality_by_hand(Int m, const WeightParam& mu, const EtaDecomposition& dec, const Signature& sig,
                               const CMFieldModel& model)
{
    const Int n = mu.n;
    if (Rational(2 * m) < Rational(n - dec.kappa))
        return false;
    for (auto t : dec.phi.members()) {
        const Int r = sig.at(t).r, s = sig.at(t).s;
        auto a = [&](Int i) { return mu.at(t)[static_cast<std::size_t>(i - 1)]; };
        const Int mt = dec.psi.m(t), mct = dec.psi.m(model.conj(t));
        if (s + 1 <= n && m > -a(s + 1) + s + mt - mct - dec.kappa)
            return false;
        if (s >= 1 && m > a(s) + r + mct - mt)
            return false;
    }
    return true;
}

/// Lattice membership by trying every coefficient vector with entries in
/// [-bound, bound].
inline bool member_by_search(const std::vector<std::vector<Int>>& rows, const std::vector<Int>& v, Int bound)
{
    const std::size_t k = rows.size();
    std::vector<Int> c(k, -bound);
    for (;;) {
        std::vector<Int> s(v.size(), 0);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < v.size(); ++j)
                s[j] += c[i] * rows[i][j];
        if (s == v)
            return true;
        std::size_t i = 0;
        while (i < k && c[i] == bound)
            c[i++] = -bound;
        if (i == k)
            return false;
        ++c[i];
    }
}

/// rho = half the sum of positive roots weighted by multiplicity; roots are
/// coefficient vectors on the torus coordinates.
inline std::vector<Rational> half_root_sum(const std::vector<std::pair<std::vector<Int>, Int>>& roots, std::size_t rank)
{
    std::vector<Rational> rho(rank, Rational(0));
    for (const auto& [root, mult] : roots)
        for (std::size_t i = 0; i < rank; ++i)
            rho[i] += Rational(root[i] * mult, 2);
    return rho;
}

inline std::vector<Int> unit(std::size_t rank, std::size_t i, Int c = 1)
{
    std::vector<Int> v(rank, 0);
    v[i] = c;
    return v;
}

/// GL_N over the residue field: roots e_i - e_j, i < j.
inline std::vector<Rational> rho_GL(Int N)
{
    std::vector<std::pair<std::vector<Int>, Int>> roots;
    const auto n = static_cast<std::size_t>(N);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            auto r = unit(n, i);
            r[j] = -1;
            roots.push_back({r, 1});
        }
    return half_root_sum(roots, n);
}

/// Unramified U(2m) (odd = false, relative type C_m) or U(2m+1) (odd = true,
/// type BC_m). Short roots e_i +- e_j have multiplicity 2 (they come from
/// the quadratic extension), 2e_i multiplicity 1, e_i multiplicity 2. The
/// result is in powers of q; dividing by 2 gives powers of q_E = q^2.
inline std::vector<Rational> rho_unitary_in_qE(Int m, bool odd)
{
    const auto k = static_cast<std::size_t>(m);
    std::vector<std::pair<std::vector<Int>, Int>> roots;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            auto a = unit(k, i), b = unit(k, i);
            a[j] = -1;
            b[j] = 1;
            roots.push_back({a, 2});
            roots.push_back({b, 2});
        }
        roots.push_back({unit(k, i, 2), 1});
        if (odd)
            roots.push_back({unit(k, i, 1), 2});
    }
    auto rho = half_root_sum(roots, k);
    for (auto& x : rho)
        x /= 2;
    return rho;
}

/// Value of a coordinate as (rational, power of q^{1/2}) after sigma with
/// sigma(q^{1/2}) = eps q^{1/2}; used to rebuild both sides of the base
/// change square from scratch.
inline Coord sigma_value(const Coord& c, int eps)
{
    Coord out = c;
    if (eps == -1 && (c.k % 2 + 2) % 2 == 1)
        out.r = -out.r;
    return out;
}

}  // namespace fx
