#ifndef NCGEODE_NCSF_HPP
#define NCGEODE_NCSF_HPP

// Truncated series in the algebra of noncommutative symmetric functions over
// a coefficient ring C. The complete basis S is the computational basis: the
// product is concatenation of compositions, S^I S^J = S^{IJ}. The ribbon (R)
// and elementary (Lambda) bases are reached through convert_basis.
//
// A series carries the degree through which it is exact ("truncation").
// Operations that need more headroom than their inputs provide throw
// insufficient_truncation instead of silently returning fewer degrees.

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "coeffring.hpp"
#include "combinat.hpp"

namespace ncgeode {

enum class Basis { S, R, Lambda };

inline const char* basis_name(Basis b)
{
    switch (b) {
    case Basis::S:
        return "S";
    case Basis::R:
        return "R";
    case Basis::Lambda:
        return "L";
    }
    return "?";
}

inline Basis parse_basis(const std::string& s)
{
    if (s == "S")
        return Basis::S;
    if (s == "R")
        return Basis::R;
    if (s == "L" || s == "Lambda")
        return Basis::Lambda;
    throw parse_error("unknown basis '" + s + "'");
}

class insufficient_truncation : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class basis_mismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Homogeneous element: composition -> coefficient, all of the same weight.
template <class C>
using Homogeneous = std::map<Composition, C>;

template <class C>
void add_term(Homogeneous<C>& h, const Composition& c, const std::type_identity_t<C>& v)
{
    if (ring_traits<C>::is_zero(v))
        return;
    auto [it, inserted] = h.try_emplace(c, v);
    if (!inserted) {
        it->second = it->second + v;
        if (ring_traits<C>::is_zero(it->second))
            h.erase(it);
    }
}

template <class C>
Homogeneous<C> hom_mul(const Homogeneous<C>& a, const Homogeneous<C>& b)
{
    Homogeneous<C> out;
    for (const auto& [ca, va] : a)
        for (const auto& [cb, vb] : b)
            add_term(out, ca + cb, va * vb);
    return out;
}

template <class C>
class Series {
public:
    using coefficient_type = C;

    Series() : Series(Basis::S, 0) {}
    Series(Basis basis, int truncation) : basis_(basis), components_(truncation + 1)
    {
        if (truncation < 0)
            throw std::invalid_argument("negative truncation");
    }

    static Series one(int truncation, Basis basis = Basis::S)
    {
        Series s(basis, truncation);
        s.add(Composition{}, C(1));
        return s;
    }

    // sigma_1 = 1 + S_1 + S_2 + ...
    static Series sigma(int truncation)
    {
        Series s(Basis::S, truncation);
        s.add(Composition{}, C(1));
        for (int n = 1; n <= truncation; ++n)
            s.add(Composition{n}, C(1));
        return s;
    }

    static Series monomial(const Composition& c, const C& v, int truncation, Basis basis = Basis::S)
    {
        Series s(basis, truncation);
        s.add(c, v);
        return s;
    }

    Basis basis() const { return basis_; }
    int truncation() const { return static_cast<int>(components_.size()) - 1; }

    const Homogeneous<C>& operator[](int degree) const
    {
        if (degree < 0 || degree > truncation())
            throw insufficient_truncation("degree " + std::to_string(degree) + " beyond truncation " +
                                          std::to_string(truncation()));
        return components_[degree];
    }
    Homogeneous<C>& component(int degree)
    {
        if (degree < 0 || degree > truncation())
            throw insufficient_truncation("degree " + std::to_string(degree) + " beyond truncation " +
                                          std::to_string(truncation()));
        return components_[degree];
    }

    C coefficient(const Composition& c) const
    {
        int d = c.weight();
        if (d > truncation())
            throw insufficient_truncation("coefficient requested beyond truncation");
        auto it = components_[d].find(c);
        return it == components_[d].end() ? C(0) : it->second;
    }

    C constant_term() const { return coefficient(Composition{}); }

    // Terms beyond the truncation are dropped.
    void add(const Composition& c, const C& v)
    {
        int d = c.weight();
        if (d <= truncation())
            add_term(components_[d], c, v);
    }

    Series truncated(int n) const
    {
        if (n > truncation())
            throw insufficient_truncation("cannot extend truncation " + std::to_string(truncation()) +
                                          " to " + std::to_string(n));
        Series r(basis_, n);
        std::copy(components_.begin(), components_.begin() + n + 1, r.components_.begin());
        return r;
    }

    std::size_t term_count() const
    {
        std::size_t n = 0;
        for (const auto& h : components_)
            n += h.size();
        return n;
    }

    template <class F>
    auto map_coefficients(F&& f) const -> Series<std::decay_t<decltype(f(std::declval<const C&>()))>>
    {
        using D = std::decay_t<decltype(f(std::declval<const C&>()))>;
        Series<D> r(basis_, truncation());
        for (int d = 0; d <= truncation(); ++d)
            for (const auto& [c, v] : components_[d])
                r.add(c, f(v));
        return r;
    }

    Series operator-() const
    {
        Series r = *this;
        for (auto& h : r.components_)
            for (auto& [c, v] : h)
                v = -v;
        return r;
    }

    friend Series operator+(const Series& a, const Series& b)
    {
        check_basis(a, b);
        Series r(a.basis_, std::min(a.truncation(), b.truncation()));
        for (int d = 0; d <= r.truncation(); ++d) {
            r.components_[d] = a.components_[d];
            for (const auto& [c, v] : b.components_[d])
                add_term(r.components_[d], c, v);
        }
        return r;
    }
    friend Series operator-(const Series& a, const Series& b) { return a + (-b); }

    // Graded Cauchy product; requires the S (or Lambda) basis, where the
    // product is concatenation.
    friend Series operator*(const Series& a, const Series& b)
    {
        check_basis(a, b);
        if (a.basis_ == Basis::R)
            throw basis_mismatch("ribbon-basis products are not supported; convert to S first");
        Series r(a.basis_, std::min(a.truncation(), b.truncation()));
        for (int n = 0; n <= r.truncation(); ++n)
            for (int i = 0; i <= n; ++i) {
                const auto& x = a.components_[i];
                const auto& y = b.components_[n - i];
                if (x.empty() || y.empty())
                    continue;
                for (const auto& [ca, va] : x)
                    for (const auto& [cb, vb] : y)
                        add_term(r.components_[n], ca + cb, va * vb);
            }
        return r;
    }

    friend Series operator*(const C& s, const Series& a)
    {
        Series r(a.basis_, a.truncation());
        for (int d = 0; d <= a.truncation(); ++d)
            for (const auto& [c, v] : a.components_[d])
                r.add(c, s * v);
        return r;
    }

    friend bool operator==(const Series& a, const Series& b)
    {
        return a.basis_ == b.basis_ && a.components_ == b.components_;
    }

private:
    static void check_basis(const Series& a, const Series& b)
    {
        if (a.basis_ != b.basis_)
            throw basis_mismatch(std::string("basis mismatch: ") + basis_name(a.basis_) + " vs " +
                                 basis_name(b.basis_));
    }

    Basis basis_;
    std::vector<Homogeneous<C>> components_;
};

// True when a and b coincide through degree n (both must reach n).
template <class C>
bool agree_through(const Series<C>& a, const Series<C>& b, int n)
{
    return a.truncated(n) == b.truncated(n);
}

template <class D, class C>
Series<D> series_cast(const Series<C>& s)
{
    return s.map_coefficients([](const C& v) { return D(v); });
}

// Homogeneous component of degree n as a series of the given truncation.
template <class C>
Series<C> component_series(const Series<C>& s, int n, int truncation)
{
    Series<C> r(s.basis(), truncation);
    for (const auto& [c, v] : s[n])
        r.add(c, v);
    return r;
}

template <class C>
Series<C> inverse(const Series<C>& u)
{
    if (u.basis() != Basis::S && u.basis() != Basis::Lambda)
        throw basis_mismatch("inverse needs a multiplicative basis");
    auto c0 = ring_traits<C>::unit_inverse(u.constant_term());
    if (!c0)
        throw arithmetic_error("series constant term is not invertible");
    int N = u.truncation();
    Series<C> w(u.basis(), N);
    w.add(Composition{}, *c0);
    // w_n = -c0^{-1} sum_{m>=1} u_m w_{n-m}
    for (int n = 1; n <= N; ++n) {
        Homogeneous<C> acc;
        for (int m = 1; m <= n; ++m) {
            if (u[m].empty() || w[n - m].empty())
                continue;
            for (const auto& [cu, vu] : u[m])
                for (const auto& [cw, vw] : w[n - m])
                    add_term(acc, cu + cw, vu * vw);
        }
        C scale = -*c0;
        for (const auto& [c, v] : acc)
            w.add(c, scale * v);
    }
    return w;
}

template <class C>
Series<C> power(const Series<C>& u, long k)
{
    if (k < 0)
        return power(inverse(u), -k);
    Series<C> result = Series<C>::one(u.truncation(), u.basis());
    Series<C> base = u;
    while (k > 0) {
        if (k & 1)
            result = result * base;
        k >>= 1;
        if (k > 0)
            base = base * base;
    }
    return result;
}

// u^p = sum_j binom(p, j) (u - 1)^j for constant term 1 and a polynomial
// exponent p; finite in each degree.
inline Series<PolyT> power_binomial(const Series<PolyT>& u, const PolyT& p)
{
    if (u.constant_term() != PolyT(1))
        throw arithmetic_error("binomial power needs constant term 1");
    int N = u.truncation();
    Series<PolyT> x = u - Series<PolyT>::one(N, u.basis());
    Series<PolyT> result = Series<PolyT>::one(N, u.basis());
    Series<PolyT> xj = Series<PolyT>::one(N, u.basis());
    for (int j = 1; j <= N; ++j) {
        xj = xj * x;
        result = result + binomial_polynomial(p, j) * xj;
    }
    return result;
}

template <class C>
Series<C> convert_basis(const Series<C>& u, Basis target);

// Right action of S_n^{-1}: S^{I n} -> S^I, everything else to 0. In the R
// basis R_{I 1} -> R_I is used directly; for n >= 2 that rule disagrees with
// the S-basis action (S^{111} S_2^{-1} = 0 but R_{12} -> R_1), so the series
// goes through S. In the Lambda basis only n = 1 is defined: the last part is
// decremented (and dropped at 0).
template <class C>
Series<C> annihilate(const Series<C>& u, int n)
{
    if (n < 1)
        throw std::invalid_argument("annihilation index must be positive");
    if (u.basis() == Basis::Lambda && n != 1)
        throw basis_mismatch("Lambda-basis annihilation is only defined for S_1^{-1}");
    if (u.truncation() < n)
        throw insufficient_truncation("annihilation by S_" + std::to_string(n) + " needs truncation >= " +
                                      std::to_string(n));
    if (u.basis() == Basis::R && n > 1)
        return convert_basis(annihilate(convert_basis(u, Basis::S), n), Basis::R);
    Series<C> r(u.basis(), u.truncation() - n);
    for (int d = n; d <= u.truncation(); ++d)
        for (const auto& [c, v] : u[d]) {
            if (c.empty())
                continue;
            if (u.basis() == Basis::Lambda) {
                std::vector<int> parts = c.parts();
                if (--parts.back() == 0)
                    parts.pop_back();
                r.add(Composition(std::move(parts)), v);
            } else if (c.back() == n) {
                r.add(c.without_last(), v);
            }
        }
    return r;
}

// Expansion of one basis element of `from` in the basis `to`, as
// (composition, sign) pairs. Only the direct S<->R and S<->Lambda rules.
inline std::vector<std::pair<Composition, int>> basis_change_rule(const Composition& c, Basis from, Basis to)
{
    std::vector<std::pair<Composition, int>> out;
    auto sign = [](int e) { return e % 2 == 0 ? 1 : -1; };
    if (from == Basis::S && to == Basis::R) {
        for (auto& j : coarsenings(c))
            out.emplace_back(j, 1);
    } else if (from == Basis::R && to == Basis::S) {
        for (auto& j : coarsenings(c))
            out.emplace_back(j, sign(c.length() - j.length()));
    } else if ((from == Basis::S && to == Basis::Lambda) || (from == Basis::Lambda && to == Basis::S)) {
        for (auto& j : refinements(c))
            out.emplace_back(j, sign(c.weight() - j.length()));
    } else {
        throw std::logic_error("no direct basis-change rule");
    }
    return out;
}

template <class C>
Series<C> convert_basis(const Series<C>& u, Basis target)
{
    if (u.basis() == target)
        return u;
    if (u.basis() != Basis::S && target != Basis::S)
        return convert_basis(convert_basis(u, Basis::S), target);
    Series<C> r(target, u.truncation());
    for (int d = 0; d <= u.truncation(); ++d)
        for (const auto& [c, v] : u[d])
            for (const auto& [j, s] : basis_change_rule(c, u.basis(), target))
                r.add(j, s > 0 ? v : C(-v));
    return r;
}

// The morphism A -> -A: S_n -> (-1)^n Lambda_n = sum_{I |= n} (-1)^{l(I)} S^I.
template <class C>
Series<C> negate_alphabet(const Series<C>& u)
{
    if (u.basis() != Basis::S)
        throw basis_mismatch("negate_alphabet expects the S basis");
    Series<C> r(Basis::S, u.truncation());
    for (int d = 0; d <= u.truncation(); ++d)
        for (const auto& [c, v] : u[d])
            for (const auto& j : refinements(c))
                r.add(j, j.length() % 2 == 0 ? v : C(-v));
    return r;
}

// phi_k: S_n -> S_{n/k} when k | n, 0 otherwise.
template <class C>
Series<C> phi(const Series<C>& u, int k)
{
    if (u.basis() != Basis::S)
        throw basis_mismatch("phi_k expects the S basis");
    if (k < 1)
        throw std::invalid_argument("phi_k needs k >= 1");
    Series<C> r(Basis::S, u.truncation() / k);
    for (int d = 0; d <= r.truncation(); ++d)
        for (const auto& [c, v] : u[d * k]) {
            std::vector<int> parts;
            bool ok = true;
            for (int p : c.parts()) {
                if (p % k != 0) {
                    ok = false;
                    break;
                }
                parts.push_back(p / k);
            }
            if (ok)
                r.add(Composition(std::move(parts)), v);
        }
    return r;
}

// The algebra morphism S_n -> g_n applied to u; g must reach u's truncation.
template <class C>
Series<C> lagrange_transform(const Series<C>& g, const Series<C>& u)
{
    if (g.basis() != Basis::S || u.basis() != Basis::S)
        throw basis_mismatch("lagrange_transform expects the S basis");
    if (g.truncation() < u.truncation())
        throw insufficient_truncation("lagrange_transform needs g through degree " +
                                      std::to_string(u.truncation()));
    Series<C> r(Basis::S, u.truncation());
    std::map<Composition, Homogeneous<C>> images;
    std::function<const Homogeneous<C>&(const Composition&)> image = [&](const Composition& c)
        -> const Homogeneous<C>& {
        if (auto it = images.find(c); it != images.end())
            return it->second;
        Homogeneous<C> value;
        if (c.empty()) {
            value.emplace(Composition{}, C(1));
        } else {
            value = hom_mul(image(c.without_last()), g[c.back()]);
        }
        return images.emplace(c, std::move(value)).first->second;
    };
    for (int d = 0; d <= u.truncation(); ++d)
        for (const auto& [c, v] : u[d])
            for (const auto& [j, w] : image(c))
                r.add(j, v * w);
    return r;
}

// theta with theta * u = v, for v_0 = u_0 = 0 and u_1 = c S_1, c a unit.
// Solved degree by degree: theta_{n-1} u_1 = v_n - sum_{m>=2} theta_{n-m} u_m.
// Throws not_divisible when a residual term does not end in the part 1.
template <class C>
Series<C> right_divide(const Series<C>& v, const Series<C>& u)
{
    if (v.basis() != Basis::S || u.basis() != Basis::S)
        throw basis_mismatch("right_divide expects the S basis");
    int N = std::min(v.truncation(), u.truncation());
    if (N < 1)
        throw insufficient_truncation("right_divide needs truncation >= 1");
    if (!ring_traits<C>::is_zero(v.constant_term()) || !ring_traits<C>::is_zero(u.constant_term()))
        throw arithmetic_error("right_divide needs vanishing constant terms");
    if (u[1].size() != 1 || u[1].begin()->first != Composition{1})
        throw arithmetic_error("right_divide needs a degree-1 divisor term c*S_1");
    auto cinv = ring_traits<C>::unit_inverse(u[1].begin()->second);
    if (!cinv)
        throw arithmetic_error("right_divide: S_1 coefficient is not a unit");

    Series<C> theta(Basis::S, N - 1);
    for (int n = 1; n <= N; ++n) {
        Homogeneous<C> residual = v[n];
        for (int m = 2; m <= n; ++m)
            for (const auto& [ct, vt] : theta[n - m])
                for (const auto& [cu, vu] : u[m])
                    add_term(residual, ct + cu, C(-(vt * vu)));
        for (const auto& [c, val] : residual) {
            if (c.back() != 1)
                throw not_divisible("right_divide: residual term S^{" + c.label() + "} does not end in 1");
            theta.add(c.without_last(), *cinv * val);
        }
    }
    return theta;
}

} // namespace ncgeode

#endif
