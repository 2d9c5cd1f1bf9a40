#ifndef NCGEODE_SCHROEDER_HPP
#define NCGEODE_SCHROEDER_HPP

// Schroeder trees and the e-Lagrange series
//
//   g = sum_n S_n (sum_k e_k g^k)^n
//
// computed three ways: through the lifted X/Y/G system (words keep their
// leaf letters 0 until the projection S_0 -> 1), by summing prime Schroeder
// trees weighted by right-branch partitions, and by the coefficient formula
// [S^I] g = sum_a prod_j e_{a_j}(i_j A).
//
// A Schroeder code lists node labels in prefix order: label i >= 1 is an
// internal node with i+1 children, 0 is a leaf. A tree of size n has n+1
// leaves, so its labels sum to n.

#include <map>
#include <stdexcept>
#include <vector>

#include "coeffring.hpp"
#include "combinat.hpp"
#include "lagrange.hpp"
#include "ncsf.hpp"

namespace ncgeode {

using SchroederCode = Word;

inline int schroeder_arity(int label) { return label == 0 ? 0 : label + 1; }

inline bool is_schroeder_code(const SchroederCode& code)
{
    long need = 1;
    for (std::size_t i = 0; i < code.size(); ++i) {
        if (need <= 0 || code[i] < 0)
            return false;
        need += schroeder_arity(code[i]) - 1;
    }
    return need == 0;
}

inline int schroeder_size(const SchroederCode& code)
{
    int n = 0;
    for (int x : code)
        n += x;
    return n;
}

// Children lists of the tree encoded by a valid code (node = position).
inline std::vector<std::vector<std::size_t>> schroeder_children(const SchroederCode& code)
{
    if (!is_schroeder_code(code))
        throw std::invalid_argument("not a Schroeder code: " + word_label(code));
    std::vector<std::vector<std::size_t>> children(code.size());
    std::vector<std::size_t> stack; // internal nodes still accepting children
    for (std::size_t i = 0; i < code.size(); ++i) {
        if (!stack.empty()) {
            std::size_t parent = stack.back();
            children[parent].push_back(i);
            if (static_cast<int>(children[parent].size()) == schroeder_arity(code[parent]))
                stack.pop_back();
        }
        if (code[i] != 0)
            stack.push_back(i);
    }
    return children;
}

// All codes of size n (n+1 leaves), in decreasing lexicographic order.
inline std::vector<SchroederCode> enumerate_schroeder(int n)
{
    if (n < 1)
        throw std::invalid_argument("Schroeder trees have size >= 1");
    std::vector<SchroederCode> out;
    SchroederCode w;
    auto rec = [&](auto&& self, long need, int remaining) -> void {
        if (need == 0) {
            if (remaining == 0)
                out.push_back(w);
            return;
        }
        if (remaining == 0) {
            w.insert(w.end(), static_cast<std::size_t>(need), 0);
            out.push_back(w);
            w.resize(w.size() - static_cast<std::size_t>(need));
            return;
        }
        for (int label = remaining; label >= 0; --label) {
            w.push_back(label);
            self(self, need - 1 + schroeder_arity(label), remaining - label);
            w.pop_back();
        }
    };
    rec(rec, 1, n);
    return out;
}

inline bool is_prime_schroeder(const SchroederCode& code)
{
    auto children = schroeder_children(code);
    return !children[0].empty() && code[children[0].back()] == 0;
}

inline std::vector<SchroederCode> enumerate_prime_schroeder(int n)
{
    std::vector<SchroederCode> out;
    for (auto& c : enumerate_schroeder(n))
        if (is_prime_schroeder(c))
            out.push_back(std::move(c));
    return out;
}

namespace detail {

// Right-branch lengths of the subtree rooted at `root`.
inline std::vector<int> right_branches(const SchroederCode& code,
                                       const std::vector<std::vector<std::size_t>>& children, std::size_t root)
{
    std::vector<int> lengths;
    // every internal node that is not the last child of its parent starts a chain
    std::vector<std::size_t> starts{root};
    while (!starts.empty()) {
        std::size_t v = starts.back();
        starts.pop_back();
        if (code[v] == 0)
            continue;
        int len = 0;
        std::size_t cur = v;
        while (code[cur] != 0) {
            ++len;
            const auto& ch = children[cur];
            for (std::size_t i = 0; i + 1 < ch.size(); ++i)
                starts.push_back(ch[i]);
            cur = ch.back();
        }
        lengths.push_back(len);
    }
    return lengths;
}

} // namespace detail

// Lengths of the maximal chains of internal nodes linked by last-child edges.
inline Partition right_branch_partition(const SchroederCode& code)
{
    auto children = schroeder_children(code);
    return Partition(detail::right_branches(code, children, 0));
}

// prod over the root's subtrees t_i of e_{lambda(t_i)}, as a single monomial.
inline Partition prime_weight(const SchroederCode& code)
{
    auto children = schroeder_children(code);
    std::vector<int> parts;
    for (std::size_t c : children[0]) {
        auto sub = detail::right_branches(code, children, c);
        parts.insert(parts.end(), sub.begin(), sub.end());
    }
    return Partition(std::move(parts));
}

// ---------------------------------------------------------------------------
// Series over words with letters >= 0 (S_0 kept as a degree-0 letter)

class WordSeries {
public:
    using Component = std::map<Word, EPoly>;

    explicit WordSeries(int truncation = 0) : comps_(truncation + 1) {}

    int truncation() const { return static_cast<int>(comps_.size()) - 1; }
    const Component& operator[](int d) const
    {
        if (d < 0 || d > truncation())
            throw insufficient_truncation("word series degree out of range");
        return comps_[d];
    }

    void add(const Word& w, const EPoly& v)
    {
        int d = 0;
        for (int x : w)
            d += x;
        if (d > truncation() || v.is_zero())
            return;
        auto [it, inserted] = comps_[d].try_emplace(w, v);
        if (!inserted) {
            it->second += v;
            if (it->second.is_zero())
                comps_[d].erase(it);
        }
    }

    WordSeries truncated(int n) const
    {
        WordSeries r(n);
        for (int d = 0; d <= std::min(n, truncation()); ++d)
            r.comps_[d] = comps_[d];
        return r;
    }

    friend WordSeries operator*(const WordSeries& a, const WordSeries& b)
    {
        WordSeries r(std::min(a.truncation(), b.truncation()));
        for (int n = 0; n <= r.truncation(); ++n)
            for (int i = 0; i <= n; ++i)
                for (const auto& [wa, va] : a.comps_[i])
                    for (const auto& [wb, vb] : b.comps_[n - i]) {
                        Word w = wa;
                        w.insert(w.end(), wb.begin(), wb.end());
                        r.add(w, va * vb);
                    }
        return r;
    }

    static WordSeries unit(int truncation)
    {
        WordSeries r(truncation);
        r.add({}, EPoly(1));
        return r;
    }

private:
    std::vector<Component> comps_;
};

struct SystemState {
    WordSeries X, Y, G;
};

// X = sum_{n>=1} S_n Y^n,  Y = S_0 + sum_{n>=1} e_n X^n S_0,  G = (1 + X) S_0,
// solved degree by degree: X_n uses Y_{<n}, then Y_n uses X_{<=n}.
inline SystemState solve_xy_system(int N)
{
    if (N < 0)
        throw std::invalid_argument("negative truncation");
    WordSeries X(N), Y(N);
    Y.add({0}, EPoly(1));
    auto append_leaf = [](Word w) {
        w.push_back(0);
        return w;
    };
    for (int n = 1; n <= N; ++n) {
        WordSeries ylow = Y.truncated(n - 1);
        WordSeries pw = WordSeries::unit(n - 1);
        for (int m = 1; m <= n; ++m) {
            pw = pw * ylow;
            for (const auto& [w, v] : pw[n - m]) {
                Word x{m};
                x.insert(x.end(), w.begin(), w.end());
                X.add(x, v);
            }
        }
        WordSeries xlow = X.truncated(n);
        WordSeries xp = WordSeries::unit(n);
        for (int m = 1; m <= n; ++m) {
            xp = xp * xlow;
            for (const auto& [w, v] : xp[n])
                Y.add(append_leaf(w), EPoly::e(m) * v);
        }
    }
    WordSeries G(N);
    G.add({0}, EPoly(1));
    for (int n = 1; n <= N; ++n)
        for (const auto& [w, v] : X[n])
            G.add(append_leaf(w), v);
    return {std::move(X), std::move(Y), std::move(G)};
}

// S_0 -> 1: zeros are deleted and the resulting compositions merged.
inline Series<EPoly> project_leaves(const WordSeries& s)
{
    Series<EPoly> r(Basis::S, s.truncation());
    for (int d = 0; d <= s.truncation(); ++d)
        for (const auto& [w, v] : s[d])
            r.add(nonzero_letters(w), v);
    return r;
}

inline Series<EPoly> e_lagrange_system(int N) { return project_leaves(solve_xy_system(N).G); }

inline Series<EPoly> e_lagrange_trees(int N)
{
    Series<EPoly> r(Basis::S, N);
    r.add(Composition{}, EPoly(1));
    for (int n = 1; n <= N; ++n)
        for (const auto& t : enumerate_prime_schroeder(n))
            r.add(nonzero_letters(t), EPoly(prime_weight(t)));
    return r;
}

// [S^I] g^[e] = sum over plane-tree codes a with l(I) nodes of
// prod_{j < l(I)} e_{a_j}(i_j A).
inline EPoly e_delta_coefficient(const Composition& c)
{
    if (c.empty())
        throw std::invalid_argument("e_delta_coefficient needs a nonempty composition");
    int p = c.length();
    EPoly total;
    for (const auto& a : detail::cached_tree_codes(p)) {
        EPoly term(1);
        for (int j = 0; j + 1 < p && !term.is_zero(); ++j)
            term *= elementary_of_multiple(a[j], c[j]);
        total += term;
    }
    return total;
}

inline Series<EPoly> e_lagrange_formula(int N)
{
    Series<EPoly> r(Basis::S, N);
    r.add(Composition{}, EPoly(1));
    for (int n = 1; n <= N; ++n)
        for (const auto& c : compositions(n))
            r.add(c, e_delta_coefficient(c));
    return r;
}

enum class ERoute { System, Trees, Formula };

inline Series<EPoly> e_lagrange_series(int N, ERoute route = ERoute::Formula)
{
    switch (route) {
    case ERoute::System:
        return e_lagrange_system(N);
    case ERoute::Trees:
        return e_lagrange_trees(N);
    case ERoute::Formula:
        break;
    }
    return e_lagrange_formula(N);
}

// gamma^[e] = g^[e] S_k^{-1}
inline Series<EPoly> e_geode(int N, int k = 1) { return annihilate(e_lagrange_formula(N + k), k); }

inline Series<Integer> specialize_alternating(const Series<EPoly>& s)
{
    return s.map_coefficients([](const EPoly& p) { return evaluate_alternating(p); });
}

inline Series<Integer> specialize_ones(const Series<EPoly>& s)
{
    return s.map_coefficients([](const EPoly& p) { return evaluate_at_one(p); });
}

// e_1 -> 1, e_n -> 0 for n >= 2.
inline Series<Integer> specialize_first_only(const Series<EPoly>& s)
{
    return s.map_coefficients(
        [](const EPoly& p) { return p.evaluate<Integer>([](int n) { return Integer(n == 1 ? 1 : 0); }); });
}

} // namespace ncgeode

#endif
