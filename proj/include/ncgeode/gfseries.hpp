#ifndef NCGEODE_GFSERIES_HPP
#define NCGEODE_GFSERIES_HPP

// Truncated commutative power series over the rationals, in one or two
// variables, plus the specializations that map NCSF series onto them and
// the closed-form generating functions they are compared against.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coeffring.hpp"
#include "ncsf.hpp"

namespace ncgeode {

class UniSeries {
public:
    explicit UniSeries(int order = 0) : coeffs_(order + 1)
    {
        if (order < 0)
            throw std::invalid_argument("negative series order");
    }
    UniSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty())
            coeffs_.resize(1);
    }

    static UniSeries constant(const Rational& c, int order)
    {
        UniSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }
    // x^k, truncated.
    static UniSeries monomial(int k, const Rational& c, int order)
    {
        UniSeries s(order);
        if (k <= order)
            s.coeffs_[k] = c;
        return s;
    }
    // 1 + x + x^2 + ...
    static UniSeries geometric(int order) { return UniSeries(std::vector<Rational>(order + 1, Rational(1))); }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational operator[](int k) const { return k >= 0 && k <= order() ? coeffs_[k] : Rational(0); }
    Rational constant_term() const { return coeffs_[0]; }

    void add(int k, const Rational& c)
    {
        if (k >= 0 && k <= order())
            coeffs_[k] += c;
    }

    UniSeries truncated(int n) const
    {
        if (n > order())
            throw insufficient_truncation("series order too small");
        return UniSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + n + 1));
    }

    UniSeries operator-() const
    {
        UniSeries r = *this;
        for (auto& c : r.coeffs_)
            c = -c;
        return r;
    }
    friend UniSeries operator+(const UniSeries& a, const UniSeries& b)
    {
        UniSeries r(std::min(a.order(), b.order()));
        for (int k = 0; k <= r.order(); ++k)
            r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
        return r;
    }
    friend UniSeries operator-(const UniSeries& a, const UniSeries& b) { return a + (-b); }
    friend UniSeries operator*(const UniSeries& a, const UniSeries& b)
    {
        UniSeries r(std::min(a.order(), b.order()));
        for (int i = 0; i <= r.order(); ++i) {
            if (a.coeffs_[i] == 0)
                continue;
            for (int j = 0; i + j <= r.order(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return r;
    }
    friend UniSeries operator*(const Rational& s, UniSeries a)
    {
        for (auto& c : a.coeffs_)
            c *= s;
        return a;
    }
    friend bool operator==(const UniSeries&, const UniSeries&) = default;

    // Exact division by x^k: the first k coefficients must vanish.
    UniSeries divide_by_x(int k) const
    {
        if (k > order())
            throw insufficient_truncation("not enough terms to divide by x^" + std::to_string(k));
        for (int i = 0; i < k; ++i)
            if (coeffs_[i] != 0)
                throw not_divisible("series does not vanish to order " + std::to_string(k));
        return UniSeries(std::vector<Rational>(coeffs_.begin() + k, coeffs_.end()));
    }

    // Weighted-degree view used by the Newton helpers.
    bool degree_zero_is_constant() const { return true; }

private:
    std::vector<Rational> coeffs_;
};

// Bivariate series, truncated either by total degree or by the degree in
// the first variable alone (for series whose second-variable degree is
// bounded by the first, such as the (x, u) ribbon specialization).
class BiSeries {
public:
    enum class Grading { Total, First };
    using Key = std::pair<int, int>;

    explicit BiSeries(int order = 0, Grading grading = Grading::Total) : order_(order), grading_(grading)
    {
        if (order < 0)
            throw std::invalid_argument("negative series order");
    }

    static BiSeries constant(const Rational& c, int order, Grading grading = Grading::Total)
    {
        BiSeries s(order, grading);
        s.add(0, 0, c);
        return s;
    }
    static BiSeries monomial(int a, int b, const Rational& c, int order, Grading grading = Grading::Total)
    {
        BiSeries s(order, grading);
        s.add(a, b, c);
        return s;
    }

    int order() const { return order_; }
    Grading grading() const { return grading_; }
    int degree_of(int a, int b) const { return grading_ == Grading::Total ? a + b : a; }
    const std::map<Key, Rational>& terms() const { return terms_; }

    Rational coefficient(int a, int b) const
    {
        auto it = terms_.find({a, b});
        return it == terms_.end() ? Rational(0) : it->second;
    }
    Rational constant_term() const { return coefficient(0, 0); }

    void add(int a, int b, const Rational& c)
    {
        if (c == 0 || degree_of(a, b) > order_)
            return;
        auto [it, inserted] = terms_.try_emplace(Key{a, b}, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    bool degree_zero_is_constant() const
    {
        for (const auto& [k, c] : terms_)
            if (degree_of(k.first, k.second) == 0 && k != Key{0, 0})
                return false;
        return true;
    }

    BiSeries truncated(int n) const
    {
        if (n > order_)
            throw insufficient_truncation("series order too small");
        BiSeries r(n, grading_);
        for (const auto& [k, c] : terms_)
            r.add(k.first, k.second, c);
        return r;
    }

    BiSeries operator-() const
    {
        BiSeries r = *this;
        for (auto& [k, c] : r.terms_)
            c = -c;
        return r;
    }
    friend BiSeries operator+(const BiSeries& a, const BiSeries& b)
    {
        check(a, b);
        BiSeries r(std::min(a.order_, b.order_), a.grading_);
        for (const auto& [k, c] : a.terms_)
            r.add(k.first, k.second, c);
        for (const auto& [k, c] : b.terms_)
            r.add(k.first, k.second, c);
        return r;
    }
    friend BiSeries operator-(const BiSeries& a, const BiSeries& b) { return a + (-b); }
    friend BiSeries operator*(const BiSeries& a, const BiSeries& b)
    {
        check(a, b);
        BiSeries r(std::min(a.order_, b.order_), a.grading_);
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return r;
    }
    friend BiSeries operator*(const Rational& s, const BiSeries& a)
    {
        BiSeries r(a.order_, a.grading_);
        for (const auto& [k, c] : a.terms_)
            r.add(k.first, k.second, s * c);
        return r;
    }
    friend bool operator==(const BiSeries& a, const BiSeries& b)
    {
        return a.order_ == b.order_ && a.grading_ == b.grading_ && a.terms_ == b.terms_;
    }

    // Exact division by the monomial v1^a v2^b; the order drops by its degree.
    BiSeries divide_by_monomial(int a, int b) const
    {
        int drop = degree_of(a, b);
        if (drop > order_)
            throw insufficient_truncation("not enough terms to divide by a monomial");
        BiSeries r(order_ - drop, grading_);
        for (const auto& [k, c] : terms_) {
            if (k.first < a || k.second < b)
                throw not_divisible("series is not divisible by the monomial");
            r.add(k.first - a, k.second - b, c);
        }
        return r;
    }

    // Homomorphism to a univariate series: v1 -> x, v2 -> value.
    UniSeries evaluate_second(const Rational& value) const
    {
        if (grading_ != Grading::First)
            throw std::logic_error("evaluate_second needs first-variable grading");
        UniSeries r(order_);
        for (const auto& [k, c] : terms_) {
            Rational p = 1;
            for (int i = 0; i < k.second; ++i)
                p *= value;
            r.add(k.first, c * p);
        }
        return r;
    }

private:
    static void check(const BiSeries& a, const BiSeries& b)
    {
        if (a.grading_ != b.grading_)
            throw std::invalid_argument("bivariate series with different gradings");
    }

    int order_;
    Grading grading_;
    std::map<Key, Rational> terms_;
};

namespace detail {

template <class T>
T constant_like(const T& s, const Rational& c);

template <>
inline UniSeries constant_like(const UniSeries& s, const Rational& c)
{
    return UniSeries::constant(c, s.order());
}

template <>
inline BiSeries constant_like(const BiSeries& s, const Rational& c)
{
    return BiSeries::constant(c, s.order(), s.grading());
}

inline int newton_steps(int order)
{
    int steps = 1;
    for (int correct = 1; correct <= order; correct *= 2)
        ++steps;
    return steps;
}

} // namespace detail

// Newton iteration w <- w (2 - s w); the degree-0 part must be a nonzero constant.
template <class T>
T series_inverse(const T& s)
{
    if (s.constant_term() == 0 || !s.degree_zero_is_constant())
        throw arithmetic_error("series is not invertible");
    T w = detail::constant_like(s, Rational(1) / s.constant_term());
    T two = detail::constant_like(s, Rational(2));
    for (int i = 0; i < detail::newton_steps(s.order()); ++i)
        w = w * (two - s * w);
    return w;
}

template <class T>
T series_divide(const T& a, const T& b)
{
    return a * series_inverse(b);
}

// Newton iteration y <- (y + s / y) / 2 from y = 1; constant term must be 1.
template <class T>
T series_sqrt(const T& s)
{
    if (s.constant_term() != 1 || !s.degree_zero_is_constant())
        throw arithmetic_error("series square root needs constant term 1");
    T y = detail::constant_like(s, Rational(1));
    for (int i = 0; i < detail::newton_steps(s.order()); ++i)
        y = Rational(1, 2) * (y + s * series_inverse(y));
    if (!(y * y == s))
        throw std::logic_error("square root iteration did not converge");
    return y;
}

// ---------------------------------------------------------------------------
// Closed forms

enum class ClosedForm {
    Catalan,      // (1 - sqrt(1 - 4x)) / (2x)
    Geode,        // (C(x) - 1)(1 - x) / x
    RibbonSums,   // 1 + ((x - 1) sqrt(x^2 - 6x + 1) - x^2 - 4x + 1) / (8x^2)
    LambdaSums,   // 1 + (1 - 5x + 2x^2 + (2x - 1) sqrt(x^2 - 6x + 1)) / (4x^2)
};

inline UniSeries closed_form(ClosedForm form, int order)
{
    auto poly = [](std::vector<Rational> c, int n) {
        UniSeries s(n);
        for (std::size_t k = 0; k < c.size(); ++k)
            s.add(static_cast<int>(k), c[k]);
        return s;
    };
    switch (form) {
    case ClosedForm::Catalan: {
        int n = order + 1;
        UniSeries num = poly({1}, n) - series_sqrt(poly({1, -4}, n));
        return Rational(1, 2) * num.divide_by_x(1);
    }
    case ClosedForm::Geode: {
        int n = order + 1;
        UniSeries c = closed_form(ClosedForm::Catalan, n);
        return ((c - poly({1}, n)) * poly({1, -1}, n)).divide_by_x(1);
    }
    case ClosedForm::RibbonSums: {
        int n = order + 2;
        UniSeries root = series_sqrt(poly({1, -6, 1}, n));
        UniSeries num = poly({-1, 1}, n) * root - poly({-1, 4, 1}, n);
        return poly({1}, order) + Rational(1, 8) * num.divide_by_x(2);
    }
    case ClosedForm::LambdaSums: {
        int n = order + 2;
        UniSeries root = series_sqrt(poly({1, -6, 1}, n));
        UniSeries num = poly({1, -5, 2}, n) + poly({-1, 2}, n) * root;
        return poly({1}, order) + Rational(1, 4) * num.divide_by_x(2);
    }
    }
    throw std::logic_error("unknown closed form");
}

// (1 - z - sqrt(1 - 2(1 + 2q) z + z^2)) / (2q), variables (z, q), total
// degree. The expression has no constant term: it equals g^[e] - 1 under
// S_n -> z^n, e_k -> q^k.
inline BiSeries closed_form_zq(int order)
{
    int n = order + 1;
    using G = BiSeries::Grading;
    BiSeries disc(n, G::Total);
    disc.add(0, 0, 1);
    disc.add(1, 0, -2);
    disc.add(1, 1, -4);
    disc.add(2, 0, 1);
    BiSeries num = BiSeries::constant(1, n) - BiSeries::monomial(1, 0, 1, n) - series_sqrt(disc);
    return Rational(1, 2) * num.divide_by_monomial(0, 1);
}

// ---------------------------------------------------------------------------
// Specializations of NCSF series (S basis)

enum class UniMap {
    Catalan,   // S_n -> x^n
    CoeffSum,  // S^I -> x^|I|
    RibbonU,   // S_n -> u x^n, then g_n(u)/u at u = 2 (degree 0 kept as is)
    LambdaAbs, // S^I -> 2^{|I| - l(I)} x^|I|
};

inline UniMap parse_unimap(const std::string& name)
{
    if (name == "catalan")
        return UniMap::Catalan;
    if (name == "coeff-sum")
        return UniMap::CoeffSum;
    if (name == "ribbon-u")
        return UniMap::RibbonU;
    if (name == "lambda-abs")
        return UniMap::LambdaAbs;
    throw parse_error("unknown specialization '" + name + "'");
}

// S_n -> u x^n, i.e. S^I -> u^{l(I)} x^{|I|}; graded by the x-degree.
template <class C>
BiSeries specialize_xu(const Series<C>& s)
{
    if (s.basis() != Basis::S)
        throw basis_mismatch("specializations act on the S basis");
    BiSeries r(s.truncation(), BiSeries::Grading::First);
    for (int d = 0; d <= s.truncation(); ++d)
        for (const auto& [c, v] : s[d])
            r.add(d, c.length(), Rational(v));
    return r;
}

// a_n = g_n(u)/u at u = 2 for n >= 1; a_0 = g_0.
inline UniSeries ribbon_sums(const BiSeries& xu)
{
    UniSeries r(xu.order());
    for (const auto& [k, c] : xu.terms()) {
        if (k.first == 0) {
            if (k.second != 0)
                throw not_divisible("degree-0 part must be a constant");
            r.add(0, c);
            continue;
        }
        if (k.second < 1)
            throw not_divisible("degree-" + std::to_string(k.first) + " part is not divisible by u");
        Rational p = 1;
        for (int i = 1; i < k.second; ++i)
            p *= 2;
        r.add(k.first, c * p);
    }
    return r;
}

template <class C>
UniSeries specialize(const Series<C>& s, UniMap map)
{
    if (s.basis() != Basis::S)
        throw basis_mismatch("specializations act on the S basis");
    if (map == UniMap::RibbonU)
        return ribbon_sums(specialize_xu(s));
    UniSeries r(s.truncation());
    for (int d = 0; d <= s.truncation(); ++d)
        for (const auto& [c, v] : s[d]) {
            Rational w = 1;
            if (map == UniMap::LambdaAbs)
                for (int i = 0; i < d - c.length(); ++i)
                    w *= 2;
            r.add(d, Rational(v) * w);
        }
    return r;
}

// S_n -> z^n and e_k -> q^k; total-degree truncation. Terms are exact
// through total degree s.truncation().
inline BiSeries specialize_zq(const Series<EPoly>& s)
{
    if (s.basis() != Basis::S)
        throw basis_mismatch("specializations act on the S basis");
    BiSeries r(s.truncation(), BiSeries::Grading::Total);
    for (int d = 0; d <= s.truncation(); ++d)
        for (const auto& [c, v] : s[d])
            for (const auto& [p, coeff] : v.terms())
                r.add(d, p.weight(), Rational(coeff));
    return r;
}

// Sum of absolute values of the coefficients of each homogeneous component.
template <class C>
UniSeries absolute_sums(const Series<C>& s)
{
    UniSeries r(s.truncation());
    for (int d = 0; d <= s.truncation(); ++d)
        for (const auto& [c, v] : s[d])
            r.add(d, v < 0 ? Rational(-v) : Rational(v));
    return r;
}

struct PrefixReport {
    bool ok = true;
    int first_mismatch = -1;
    Rational expected = 0;
    Rational actual = 0;
};

inline PrefixReport prefix_check(const UniSeries& s, const std::vector<Integer>& expected)
{
    if (static_cast<int>(expected.size()) > s.order() + 1)
        throw insufficient_truncation("expected prefix longer than the series");
    PrefixReport r;
    for (std::size_t i = 0; i < expected.size(); ++i)
        if (s[static_cast<int>(i)] != Rational(expected[i])) {
            r.ok = false;
            r.first_mismatch = static_cast<int>(i);
            r.expected = Rational(expected[i]);
            r.actual = s[static_cast<int>(i)];
            break;
        }
    return r;
}

} // namespace ncgeode

#endif
