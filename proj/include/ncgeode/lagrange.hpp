#ifndef NCGEODE_LAGRANGE_HPP
#define NCGEODE_LAGRANGE_HPP

// The noncommutative Lagrange series g = sum_n S_n g^n and the geode family
// built on it: gamma, h, eta, the k- and t-Lagrange series, gamma^(t),
// theta^(t), h^(t), eta^(t) and free cumulants. Most quantities are
// available by two or more independent routes so that they can be checked
// against each other.

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "coeffring.hpp"
#include "combinat.hpp"
#include "ncsf.hpp"

namespace ncgeode {

namespace detail {

// Copy of s with a larger truncation; the new degrees are zero. Only for
// series known to vanish there (or for partial solutions being extended).
template <class C>
Series<C> padded(const Series<C>& s, int n)
{
    Series<C> r(s.basis(), n);
    for (int d = 0; d <= std::min(n, s.truncation()); ++d)
        for (const auto& [c, v] : s[d])
            r.add(c, v);
    return r;
}

} // namespace detail

// g through degree N, from g_n = sum_{m=1}^n S_m (g^m)_{n-m}. The powers of g
// are maintained incrementally: (g^m)_n = sum_a g_a (g^{m-1})_{n-a}.
inline Series<Integer> lagrange_series(int N)
{
    if (N < 0)
        throw std::invalid_argument("negative truncation");
    Series<Integer> g(Basis::S, N);
    g.add(Composition{}, 1);
    // pw[m][d] = (g^m)_d, needed for d <= N - m
    std::vector<std::vector<Homogeneous<Integer>>> pw(N + 1, std::vector<Homogeneous<Integer>>(N + 1));
    for (int m = 0; m <= N; ++m)
        pw[m][0].emplace(Composition{}, 1);
    // pw[0][d] = 0 for d > 0
    for (int n = 1; n <= N; ++n) {
        for (int m = 1; m <= n; ++m)
            for (const auto& [c, v] : pw[m][n - m])
                g.add(Composition{m} + c, v);
        for (int m = 1; m + n <= N; ++m) {
            Homogeneous<Integer> acc = pw[m - 1][n]; // a = 0 term, g_0 = 1
            for (int a = 1; a <= n; ++a) {
                const auto& left = g[a];
                const auto& right = pw[m - 1][n - a];
                for (const auto& [ca, va] : left)
                    for (const auto& [cb, vb] : right)
                        add_term(acc, ca + cb, va * vb);
            }
            pw[m][n] = std::move(acc);
        }
    }
    return g;
}

// gamma_n = g_{n+k} S_k^{-1}; the result is exact through g.truncation() - k.
template <class C>
Series<C> geode(const Series<C>& g, int k = 1)
{
    return annihilate(g, k);
}

inline Series<Integer> geode(int N, int k = 1) { return geode(lagrange_series(N + k), k); }

// gamma as the right quotient (g - 1) / (sigma_1 - 1).
template <class C>
Series<C> geode_by_division(const Series<C>& g)
{
    int N = g.truncation();
    return right_divide(g - Series<C>::one(N), Series<C>::sigma(N) - Series<C>::one(N));
}

template <class C>
struct PrimeSeries {
    Series<C> h;   // 1 - g^{-1}
    Series<C> eta; // h S_1^{-1}, one degree shorter
};

template <class C>
PrimeSeries<C> prime_series(const Series<C>& g)
{
    Series<C> h = Series<C>::one(g.truncation()) - inverse(g);
    Series<C> eta = annihilate(h, 1);
    return {std::move(h), std::move(eta)};
}

// gamma = (1 - sum_{n>=1} S_n (1 + g + ... + g^{n-1}))^{-1}
inline Series<Integer> gessel_gamma(const Series<Integer>& g)
{
    int N = g.truncation();
    using S = Series<Integer>;
    S geometric = S::one(N); // 1 + g + ... + g^{n-1}
    S gpow = S::one(N);
    S inner(Basis::S, N);
    for (int n = 1; n <= N; ++n) {
        inner = inner + S::monomial(Composition{n}, 1, N) * geometric;
        gpow = gpow * g;
        geometric = geometric + gpow;
    }
    return inverse(S::one(N) - inner);
}

inline Series<Integer> gessel_gamma(int N) { return gessel_gamma(lagrange_series(N)); }

struct EtaIdentities {
    bool gamma_is_g_eta = false;         // gamma = g eta
    bool eta_sigma_is_h = false;         // eta (sigma_1 - 1) = h
    bool eta_is_ginverse_gamma = false;  // eta = g^{-1} gamma
    bool all() const { return gamma_is_g_eta && eta_sigma_is_h && eta_is_ginverse_gamma; }
};

inline EtaIdentities eta_identities(int N)
{
    using S = Series<Integer>;
    S g = lagrange_series(N + 1);
    auto [h, eta] = prime_series(g);
    S gamma = geode(g, 1);
    S gN = g.truncated(N);
    EtaIdentities r;
    r.gamma_is_g_eta = agree_through(gamma, gN * eta, N);
    r.eta_sigma_is_h = agree_through(eta * (S::sigma(N) - S::one(N)), h.truncated(N), N);
    r.eta_is_ginverse_gamma = agree_through(eta, inverse(gN) * gamma, N);
    return r;
}

// ---------------------------------------------------------------------------
// Combinatorial routes

// [S^I]gamma_n as the sum, over plane trees with nonzero-arity sequence I, of
// the number of trailing zeros of the code.
inline Series<Integer> geode_from_trees(int N)
{
    Series<Integer> r(Basis::S, N);
    for (int n = 0; n <= N; ++n)
        for (const auto& code : enumerate_lukasiewicz(n))
            r.add(nonzero_letters(code), trailing_zeros(code));
    return r;
}

// Same quantity counted through the shifted parking words of each code.
inline Series<Integer> geode_from_shift_words(int N)
{
    Series<Integer> r(Basis::S, N);
    for (int n = 0; n <= N; ++n)
        for (const auto& code : enumerate_lukasiewicz(n))
            r.add(nonzero_letters(code), static_cast<int>(shift_words(code).size()));
    return r;
}

// Multiset {d_k(c) : c a code of size n + k}.
inline std::map<Word, int> corolla_removal_multiset(int n, int k)
{
    std::map<Word, int> out;
    for (const auto& code : enumerate_lukasiewicz(n + k))
        if (auto w = remove_last_corolla(code, k))
            ++out[*w];
    return out;
}

// ---------------------------------------------------------------------------
// k- and t-Lagrange series

// Solves g = sum_n S_n g^{k n} degree by degree; negative k uses inverses.
template <class C = Integer>
Series<C> k_lagrange_direct(int k, int N)
{
    Series<C> g = Series<C>::one(0);
    for (int n = 1; n <= N; ++n) {
        // g is exact through n-1; (g^{k m})_{n-m} only depends on that part
        Series<C> base = power(g, k);
        Series<C> next = detail::padded(g, n);
        Series<C> pw = Series<C>::one(n - 1);
        for (int m = 1; m <= n; ++m) {
            pw = pw * base;
            for (const auto& [c, v] : pw[n - m])
                next.add(Composition{m} + c, v);
        }
        g = std::move(next);
    }
    return g;
}

namespace detail {

inline const std::vector<Word>& cached_tree_codes(int p)
{
    static std::mutex mu;
    static std::map<int, std::vector<Word>> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(p);
    if (it == cache.end())
        it = cache.emplace(p, plane_tree_codes_with_nodes(p)).first;
    return it->second;
}

} // namespace detail

// [S^I] g^(t) = sum over codes a of plane trees with l(I) nodes of
// prod_{j < l(I)} binom(i_j t, a_j).
inline PolyT delta_coefficient(const Composition& c)
{
    if (c.empty())
        throw std::invalid_argument("delta_coefficient needs a nonempty composition");
    int p = c.length();
    PolyT total;
    for (const auto& a : detail::cached_tree_codes(p)) {
        PolyT term(1);
        for (int j = 0; j + 1 < p && !term.is_zero(); ++j)
            term *= binomial_polynomial(c[j], a[j]);
        total += term;
    }
    return total;
}

inline Series<PolyT> t_lagrange_series(int N)
{
    Series<PolyT> g(Basis::S, N);
    g.add(Composition{}, PolyT(1));
    for (int n = 1; n <= N; ++n)
        for (const auto& c : compositions(n))
            g.add(c, delta_coefficient(c));
    return g;
}

inline Series<Rational> evaluate_t(const Series<PolyT>& s, const Rational& t)
{
    return s.map_coefficients([&](const PolyT& p) { return p.evaluate(t); });
}

// t -> t + shift in every coefficient.
inline Series<PolyT> shift_t(const Series<PolyT>& s, const Rational& shift)
{
    return s.map_coefficients([&](const PolyT& p) { return p.shifted(shift); });
}

inline Series<Integer> to_integer_series(const Series<Rational>& s)
{
    return s.map_coefficients([](const Rational& r) {
        if (boost::multiprecision::denominator(r) != 1)
            throw not_divisible("coefficient " + to_string(r) + " is not an integer");
        return Integer(boost::multiprecision::numerator(r));
    });
}

inline Series<Integer> t_lagrange_at(const Series<PolyT>& gt, int k)
{
    return to_integer_series(evaluate_t(gt, k));
}

// gamma^(t) = (g^(t) - 1) / (sigma_1 - 1)
inline Series<PolyT> gamma_t(const Series<PolyT>& gt) { return geode_by_division(gt); }

// theta^(t) = (g^(t) - 1) / (g^(t-1) - 1)
inline Series<PolyT> theta_t(const Series<PolyT>& gt)
{
    int N = gt.truncation();
    auto one = Series<PolyT>::one(N);
    return right_divide(gt - one, shift_t(gt, -1) - one);
}

// h^(t) = sum_{n>=1} S_n (g^(t))^{t(n-1)} = (g^(t) - 1) (g^(t))^{-t}
inline Series<PolyT> h_t(const Series<PolyT>& gt)
{
    int N = gt.truncation();
    return (gt - Series<PolyT>::one(N)) * power_binomial(gt, -PolyT::t());
}

inline Series<PolyT> eta_t(const Series<PolyT>& gt) { return annihilate(h_t(gt), 1); }

// L^{k-1}(gamma); g must reach gamma's truncation.
template <class C>
Series<C> theta_by_transform(const Series<C>& g, const Series<C>& gamma, int k)
{
    Series<C> r = gamma;
    for (int i = 1; i < k; ++i)
        r = lagrange_transform(g, r);
    return r;
}

// ---------------------------------------------------------------------------
// Free cumulants

// K = g(-A)^{-1}
template <class C>
Series<C> free_cumulants(const Series<C>& g)
{
    return inverse(negate_alphabet(g));
}

// sum_{n>=0} K_n sigma_1^n, which equals sigma_1 when K is the cumulant series.
template <class C>
Series<C> cumulant_moment_sum(const Series<C>& K)
{
    int N = K.truncation();
    Series<C> sigma = Series<C>::sigma(N);
    Series<C> out(Basis::S, N);
    Series<C> spow = Series<C>::one(N);
    for (int n = 0; n <= N; ++n) {
        out = out + component_series(K, n, N) * spow;
        spow = spow * sigma;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Divisibility of g^(k) - 1 by g^(k-1) - 1

struct DivisibilityResult {
    int k = 0;
    Series<Integer> quotient;
    bool nonnegative = false;
};

inline bool all_nonnegative(const Series<Integer>& s)
{
    for (int d = 0; d <= s.truncation(); ++d)
        for (const auto& [c, v] : s[d])
            if (v < 0)
                return false;
    return true;
}

// Quotients for k = 1..k_max through degree N, with g^(k) taken from the
// t-series at t = k (g^(0) = sigma_1).
inline std::vector<DivisibilityResult> divisibility_check(int k_max, int N)
{
    Series<PolyT> gt = t_lagrange_series(N + 1);
    auto one = Series<Integer>::one(N + 1);
    std::vector<DivisibilityResult> out;
    Series<Integer> previous = t_lagrange_at(gt, 0);
    for (int k = 1; k <= k_max; ++k) {
        Series<Integer> current = t_lagrange_at(gt, k);
        DivisibilityResult r;
        r.k = k;
        r.quotient = right_divide(current - one, previous - one);
        r.nonnegative = all_nonnegative(r.quotient);
        out.push_back(std::move(r));
        previous = std::move(current);
    }
    return out;
}

// Cached g (integers) and g^(t) (polynomials in t) through degree N.
class LagrangeContext {
public:
    explicit LagrangeContext(int N) : N_(N), g_(lagrange_series(N)), gt_(t_lagrange_series(N)) {}

    int truncation() const { return N_; }
    const Series<Integer>& g() const { return g_; }
    const Series<PolyT>& g_t() const { return gt_; }

private:
    int N_;
    Series<Integer> g_;
    Series<PolyT> gt_;
};

} // namespace ncgeode

#endif
