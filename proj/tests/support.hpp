#ifndef NCGEODE_TESTS_SUPPORT_HPP
#define NCGEODE_TESTS_SUPPORT_HPP

// Brute-force oracles and random inputs shared by the test binaries. None of
// these call into the library's algorithms beyond the basic containers.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include <ncgeode/coeffring.hpp>
#include <ncgeode/combinat.hpp>
#include <ncgeode/ncsf.hpp>

namespace oracle {

using ncgeode::Composition;
using ncgeode::Integer;
using ncgeode::Word;

inline Integer binom(long long n, long long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    std::vector<Integer> row(1, 1);
    for (long long i = 1; i <= n; ++i) {
        std::vector<Integer> next(i + 1, 1);
        for (long long j = 1; j < i; ++j)
            next[j] = row[j - 1] + row[j];
        row = std::move(next);
    }
    return row[k];
}

inline std::vector<Integer> catalan_numbers(int n)
{
    std::vector<Integer> c(n + 1, 0);
    c[0] = 1;
    for (int m = 1; m <= n; ++m)
        for (int i = 0; i < m; ++i)
            c[m] += c[i] * c[m - 1 - i];
    return c;
}

// Large Schroeder numbers s_n = s_{n-1} + sum_k s_k s_{n-1-k}.
inline std::vector<Integer> large_schroeder(int n)
{
    std::vector<Integer> s(n + 1, 0);
    s[0] = 1;
    for (int m = 1; m <= n; ++m) {
        s[m] = s[m - 1];
        for (int k = 0; k < m; ++k)
            s[m] += s[k] * s[m - 1 - k];
    }
    return s;
}

// All words of length len over 0..max_letter with the given sum.
inline void words_with_sum(int len, int sum, int max_letter, const std::function<void(const Word&)>& visit)
{
    Word w;
    std::function<void(int, int)> rec = [&](int left, int remaining) {
        if (left == 0) {
            if (remaining == 0)
                visit(w);
            return;
        }
        for (int x = 0; x <= std::min(max_letter, remaining); ++x) {
            w.push_back(x);
            rec(left - 1, remaining - x);
            w.pop_back();
        }
    };
    rec(len, sum);
}

// Prefix test: partial sums of (letter - 1) stay >= 0 until the final letter.
inline bool is_tree_code(const Word& w)
{
    long long open = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (open <= 0)
            return false;
        open += w[i] - 1;
    }
    return open == 0;
}

// Plane tree codes of size n (n+1 letters), by filtering all words.
inline std::vector<Word> tree_codes(int n)
{
    std::vector<Word> out;
    words_with_sum(n + 1, n, n, [&](const Word& w) {
        if (is_tree_code(w))
            out.push_back(w);
    });
    return out;
}

inline Composition nonzero_part(const Word& w)
{
    std::vector<int> p;
    for (int x : w)
        if (x)
            p.push_back(x);
    return Composition(p);
}

inline int trailing_zero_count(const Word& w)
{
    int z = 0;
    for (auto it = w.rbegin(); it != w.rend() && *it == 0; ++it)
        ++z;
    return z;
}

// Descent set of a composition of n as a bitmask over positions 1..n-1.
inline std::uint32_t descent_mask(const Composition& c)
{
    std::uint32_t m = 0;
    int s = 0;
    for (int i = 0; i + 1 < c.length(); ++i) {
        s += c[i];
        m |= 1u << (s - 1);
    }
    return m;
}

inline Composition from_mask(int n, std::uint32_t mask)
{
    std::vector<int> parts;
    int last = 0;
    for (int i = 1; i < n; ++i)
        if (mask & (1u << (i - 1))) {
            parts.push_back(i - last);
            last = i;
        }
    parts.push_back(n - last);
    return Composition(parts);
}

// [R_J]u from the S-expansion: S^I = sum of R_J over J coarser than I.
template <class C>
std::map<Composition, C> ribbon_coefficients(const ncgeode::Homogeneous<C>& s_terms, int n)
{
    std::map<Composition, C> out;
    for (const auto& [I, v] : s_terms) {
        std::uint32_t mi = descent_mask(I);
        for (std::uint32_t sub = mi;; sub = (sub - 1) & mi) {
            auto [it, ins] = out.try_emplace(from_mask(n, sub), v);
            if (!ins)
                it->second = it->second + v;
            if (sub == 0)
                break;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = ncgeode::ring_traits<C>::is_zero(it->second) ? out.erase(it) : std::next(it);
    return out;
}

inline std::vector<Composition> all_compositions(int n)
{
    std::vector<Composition> out;
    if (n == 0)
        return {Composition{}};
    for (std::uint32_t m = 0; m < (1u << (n - 1)); ++m)
        out.push_back(from_mask(n, m));
    return out;
}

// Random S-basis series with small integer coefficients; constant term 1
// when unit is set.
inline ncgeode::Series<Integer> random_series(std::mt19937& rng, int N, bool unit = false, int density = 2)
{
    std::uniform_int_distribution<int> coeff(-3, 3), keep(0, density);
    ncgeode::Series<Integer> s(ncgeode::Basis::S, N);
    s.add(Composition{}, unit ? 1 : coeff(rng));
    for (int n = 1; n <= N; ++n)
        for (const auto& c : all_compositions(n))
            if (keep(rng) == 0)
                s.add(c, coeff(rng));
    return s;
}

} // namespace oracle

#endif
