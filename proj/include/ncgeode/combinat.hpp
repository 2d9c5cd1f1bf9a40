#ifndef NCGEODE_COMBINAT_HPP
#define NCGEODE_COMBINAT_HPP

// Compositions, Lukasiewicz words (Polish codes of plane trees) and the
// objects they encode: Dyck words, nondecreasing parking words, noncrossing
// partitions, shifted parking words and parking quasi-ribbons.
//
// Trees are never materialized as pointer structures; every operation here
// is a rewrite of the code word.

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coeffring.hpp"

namespace ncgeode {

// Finite sequence of positive integers. Ordered by weight, then
// lexicographically decreasing; within a fixed weight n this is the order of
// the descent-set encoding sum_{d in Des(I)} 2^(n-1-d), so S_3 < S^{21} <
// S^{12} < S^{111}.
class Composition {
public:
    Composition() = default;
    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (int p : parts_)
            if (p <= 0)
                throw std::invalid_argument("composition parts must be positive");
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int weight() const
    {
        int w = 0;
        for (int p : parts_)
            w += p;
        return w;
    }
    int back() const { return parts_.back(); }
    int operator[](std::size_t i) const { return parts_[i]; }

    Composition without_last() const
    {
        return Composition(std::vector<int>(parts_.begin(), parts_.end() - 1));
    }

    friend Composition operator+(const Composition& a, const Composition& b)
    {
        Composition r = a;
        r.parts_.insert(r.parts_.end(), b.parts_.begin(), b.parts_.end());
        return r;
    }

    friend bool operator==(const Composition&, const Composition&) = default;
    friend std::strong_ordering operator<=>(const Composition& a, const Composition& b)
    {
        if (auto c = a.weight() <=> b.weight(); c != 0)
            return c;
        return std::lexicographical_compare_three_way(b.parts_.begin(), b.parts_.end(),
                                                      a.parts_.begin(), a.parts_.end());
    }

    // "21", or "10,2" when a part exceeds 9.
    std::string label() const
    {
        bool wide = std::any_of(parts_.begin(), parts_.end(), [](int x) { return x > 9; });
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (wide && i > 0)
                out += ',';
            out += std::to_string(parts_[i]);
        }
        return out;
    }

private:
    std::vector<int> parts_;
};

// Letters are nonnegative integers; used for tree codes and parking words.
using Word = std::vector<int>;

inline std::string word_label(const Word& w)
{
    bool wide = std::any_of(w.begin(), w.end(), [](int x) { return x > 9; });
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (wide && i > 0)
            out += ',';
        out += std::to_string(w[i]);
    }
    return out;
}

inline Word parse_word(const std::string& text)
{
    Word w;
    if (text.find(',') != std::string::npos) {
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t comma = text.find(',', start);
            std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            w.push_back(std::stoi(item));
            if (comma == std::string::npos)
                break;
            start = comma + 1;
        }
    } else {
        for (char ch : text) {
            if (ch < '0' || ch > '9')
                throw parse_error("bad word: '" + text + "'");
            w.push_back(ch - '0');
        }
    }
    return w;
}

inline Integer catalan(int n)
{
    return exact_divide(binomial(Integer(2 * n), n), Integer(n + 1));
}

// ---------------------------------------------------------------------------
// Compositions

inline std::vector<int> descent_set(const Composition& c)
{
    std::vector<int> d;
    int s = 0;
    for (int i = 0; i + 1 < c.length(); ++i) {
        s += c[i];
        d.push_back(s);
    }
    return d;
}

inline Composition from_descent_set(int n, const std::vector<int>& descents)
{
    std::vector<int> parts;
    int prev = 0;
    for (int d : descents) {
        parts.push_back(d - prev);
        prev = d;
    }
    if (n > 0)
        parts.push_back(n - prev);
    return Composition(std::move(parts));
}

// All compositions of n in the canonical order (descent-set encoding
// ascending). compositions(0) = { () }.
inline std::vector<Composition> compositions(int n)
{
    if (n == 0)
        return {Composition{}};
    std::vector<Composition> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(parts);
            return;
        }
        for (int p = remaining; p >= 1; --p) {
            parts.push_back(p);
            self(self, remaining - p);
            parts.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

// Compositions J obtained from I by summing adjacent blocks (I included).
inline std::vector<Composition> coarsenings(const Composition& c)
{
    if (c.empty())
        return {c};
    std::vector<Composition> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int i, int acc) -> void {
        acc += c[i];
        if (i + 1 == c.length()) {
            parts.push_back(acc);
            out.emplace_back(parts);
            parts.pop_back();
            return;
        }
        parts.push_back(acc);
        self(self, i + 1, 0);
        parts.pop_back();
        self(self, i + 1, acc);
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

// Compositions J obtained by splitting each part of I into a composition.
inline std::vector<Composition> refinements(const Composition& c)
{
    std::vector<Composition> out{Composition{}};
    for (int p : c.parts()) {
        std::vector<Composition> next;
        for (const auto& head : out)
            for (const auto& tail : compositions(p))
                next.push_back(head + tail);
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Reverse of the composition whose descent set complements Des(I).
inline Composition conjugate(const Composition& c)
{
    int n = c.weight();
    if (n == 0)
        return c;
    std::vector<int> des = descent_set(c);
    std::vector<int> comp;
    for (int i = 1; i < n; ++i)
        if (!std::binary_search(des.begin(), des.end(), i))
            comp.push_back(i);
    std::vector<int> parts = from_descent_set(n, comp).parts();
    std::reverse(parts.begin(), parts.end());
    return Composition(std::move(parts));
}

inline Composition nonzero_letters(const Word& w)
{
    std::vector<int> parts;
    for (int x : w)
        if (x != 0)
            parts.push_back(x);
    return Composition(std::move(parts));
}

// ---------------------------------------------------------------------------
// Lukasiewicz words

inline bool is_lukasiewicz(const Word& w)
{
    if (w.empty())
        return false;
    long sum = 0;
    for (std::size_t j = 0; j < w.size(); ++j) {
        if (w[j] < 0)
            return false;
        sum += w[j];
        if (j + 1 < w.size() && sum < static_cast<long>(j + 1))
            return false;
    }
    return sum == static_cast<long>(w.size()) - 1;
}

// All plane-tree codes with n+1 nodes (length n+1, sum n), in decreasing
// lexicographic order.
inline std::vector<Word> enumerate_lukasiewicz(int n)
{
    std::vector<Word> out;
    Word w(n + 1, 0);
    auto rec = [&](auto&& self, int j, int sum) -> void {
        if (j == n) {
            if (sum == n) {
                w[j] = 0;
                out.push_back(w);
            }
            return;
        }
        // proper prefix of length j+1 needs sum >= j+1
        int lo = std::max(0, j + 1 - sum);
        for (int letter = n - sum; letter >= lo; --letter) {
            w[j] = letter;
            self(self, j + 1, sum + letter);
        }
    };
    rec(rec, 0, 0);
    return out;
}

// Codes of all plane trees with p nodes.
inline std::vector<Word> plane_tree_codes_with_nodes(int p)
{
    if (p < 1)
        throw std::invalid_argument("a plane tree has at least one node");
    return enumerate_lukasiewicz(p - 1);
}

// Each letter i becomes a^i b.
inline std::string code_to_dyck(const Word& code)
{
    std::string out;
    for (int letter : code) {
        out.append(static_cast<std::size_t>(letter), 'a');
        out.push_back('b');
    }
    return out;
}

// (i_1, ..., i_r, 0...) -> 1^{i_1} 2^{i_2} ... r^{i_r}
inline Word code_to_ndpf(const Word& code)
{
    Word out;
    for (std::size_t j = 0; j < code.size(); ++j)
        out.insert(out.end(), static_cast<std::size_t>(code[j]), static_cast<int>(j + 1));
    return out;
}

inline bool is_nondecreasing_parking(const Word& w)
{
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] < 1 || w[i] > static_cast<int>(i + 1))
            return false;
        if (i > 0 && w[i] < w[i - 1])
            return false;
    }
    return true;
}

// Inverse of code_to_ndpf: the evaluation vector of w, followed by a 0.
inline Word ndpf_to_code(const Word& w)
{
    if (!is_nondecreasing_parking(w))
        throw std::invalid_argument("not a nondecreasing parking word: " + word_label(w));
    Word code(w.size() + 1, 0);
    for (int x : w)
        ++code[x - 1];
    return code;
}

using SetPartition = std::vector<std::vector<int>>;

// Blocks are encoded by their minimum repeated block-size times. Non-minimum
// elements join the most recently opened block that is still incomplete.
inline SetPartition ndpf_to_noncrossing(const Word& w)
{
    if (!is_nondecreasing_parking(w))
        throw std::invalid_argument("not a nondecreasing parking word: " + word_label(w));
    int n = static_cast<int>(w.size());
    std::map<int, int> size;
    for (int x : w)
        ++size[x];
    SetPartition blocks;
    std::vector<std::pair<std::size_t, int>> open; // (block index, still needed)
    for (int i = 1; i <= n; ++i) {
        if (auto it = size.find(i); it != size.end()) {
            blocks.push_back({i});
            if (it->second > 1)
                open.emplace_back(blocks.size() - 1, it->second - 1);
        } else {
            if (open.empty())
                throw std::logic_error("parking word left an element unassigned");
            blocks[open.back().first].push_back(i);
            if (--open.back().second == 0)
                open.pop_back();
        }
    }
    return blocks;
}

inline Word noncrossing_to_ndpf(const SetPartition& blocks)
{
    Word out;
    for (const auto& b : blocks)
        out.insert(out.end(), b.size(), *std::min_element(b.begin(), b.end()));
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_noncrossing(const SetPartition& blocks)
{
    for (std::size_t x = 0; x < blocks.size(); ++x)
        for (std::size_t y = 0; y < blocks.size(); ++y) {
            if (x == y)
                continue;
            for (int a : blocks[x])
                for (int c : blocks[x])
                    for (int b : blocks[y])
                        for (int d : blocks[y])
                            if (a < b && b < c && c < d)
                                return false;
        }
    return true;
}

inline std::string set_partition_label(const SetPartition& blocks)
{
    std::string out;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i > 0)
            out += '|';
        for (int x : blocks[i])
            out += std::to_string(x);
    }
    return out;
}

// The map d_k: if the last nonzero letter equals k, the corolla "k 0^k" it
// heads is replaced by a single leaf.
inline std::optional<Word> remove_last_corolla(const Word& code, int k)
{
    auto it = std::find_if(code.rbegin(), code.rend(), [](int x) { return x != 0; });
    if (it == code.rend() || *it != k)
        return std::nullopt;
    std::size_t pos = static_cast<std::size_t>(code.rend() - it - 1);
    if (pos + static_cast<std::size_t>(k) >= code.size())
        throw std::invalid_argument("not a valid tree code: " + word_label(code));
    Word out(code.begin(), code.begin() + pos);
    out.push_back(0);
    out.insert(out.end(), code.begin() + pos + k + 1, code.end());
    return out;
}

inline int trailing_zeros(const Word& w)
{
    int z = 0;
    for (auto it = w.rbegin(); it != w.rend() && *it == 0; ++it)
        ++z;
    return z;
}

// Nondecreasing words on [n] whose evaluation vector is the code shifted
// right by s = 0 .. z-1, z the number of trailing zeros.
inline std::vector<Word> shift_words(const Word& code)
{
    int n = static_cast<int>(code.size()) - 1;
    int z = trailing_zeros(code);
    std::vector<Word> out;
    for (int s = 0; s < z; ++s) {
        Word w;
        for (int j = 0; j < n; ++j)
            w.insert(w.end(), static_cast<std::size_t>(code[j]), j + 1 + s);
        out.push_back(std::move(w));
    }
    return out;
}

// A filling of a ribbon shape, one weakly increasing segment per part.
using QuasiRibbon = std::vector<Word>;

inline std::string quasi_ribbon_label(const QuasiRibbon& f)
{
    std::string out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i > 0)
            out += '|';
        out += word_label(f[i]);
    }
    return out;
}

// Fillings with segment sizes I_1..I_l: segments weakly increasing, strict
// increase across segment boundaries, sorted content a parking word. The
// concatenation is then itself a nondecreasing parking word, so we enumerate
// those with a strict ascent at every boundary. Lexicographic order.
inline std::vector<QuasiRibbon> parking_quasi_ribbons(const Composition& shape)
{
    if (shape.empty())
        throw std::invalid_argument("quasi-ribbon shape must be nonempty");
    int n = shape.weight();
    std::vector<bool> boundary(n, false); // boundary[i]: strict ascent between i-1 and i
    for (int d : descent_set(shape))
        boundary[d] = true;
    std::vector<QuasiRibbon> out;
    Word w(n);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            QuasiRibbon f;
            int pos = 0;
            for (int part : shape.parts()) {
                f.emplace_back(w.begin() + pos, w.begin() + pos + part);
                pos += part;
            }
            out.push_back(std::move(f));
            return;
        }
        int lo = i == 0 ? 1 : w[i - 1] + (boundary[i] ? 1 : 0);
        for (int x = lo; x <= i + 1; ++x) {
            w[i] = x;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace ncgeode

#endif
