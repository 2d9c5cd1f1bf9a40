#ifndef NCGEODE_IO_HPP
#define NCGEODE_IO_HPP

// Text form of NCSF elements: "S_3 + 2S^{21} + S^{12} + S^{111}",
// "9R_{3} + 4R_{21}", "3L^{3} - 6L^{21}". Coefficients that are not a single
// signed monomial are parenthesized: "((3t^2-t)/2)S^{211}",
// "(e_{2}+e_{11})S^{111}". parse_component reads the same syntax back and
// also tolerates a '*' between coefficient and basis element.

#include <map>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coeffring.hpp"
#include "combinat.hpp"
#include "ncsf.hpp"

namespace ncgeode {

inline std::string basis_symbol(Basis b, const Composition& c)
{
    switch (b) {
    case Basis::S:
        if (c.length() == 1)
            return "S_" + c.label();
        return "S^{" + c.label() + "}";
    case Basis::R:
        return "R_{" + c.label() + "}";
    case Basis::Lambda:
        return "L^{" + c.label() + "}";
    }
    return "?";
}

namespace detail {

// No '+' or '-' after the first character.
inline bool is_atomic(std::string_view s)
{
    return s.substr(s.empty() ? 0 : 1).find_first_of("+-") == std::string_view::npos;
}

inline std::string trim(std::string_view s)
{
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos)
        return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

// True when s is "( ... )" with the outer pair matching.
inline bool wrapped_in_parens(std::string_view s)
{
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        return false;
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(')
            ++depth;
        else if (s[i] == ')' && --depth == 0 && i + 1 < s.size())
            return false;
    }
    return true;
}

} // namespace detail

template <class C>
std::string render_component(const Homogeneous<C>& h, Basis basis)
{
    if (h.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [c, v] : h) {
        std::string s = ring_traits<C>::str(v);
        bool negative = false;
        if (s.size() > 1 && s[0] == '-' && detail::is_atomic(s)) {
            negative = true;
            s.erase(0, 1);
        }
        bool needs_parens = !detail::is_atomic(s) || s.find('/') != std::string::npos;
        std::string term;
        if (c.empty())
            term = needs_parens ? "(" + s + ")" : s;
        else if (s == "1")
            term = basis_symbol(basis, c);
        else
            term = (needs_parens ? "(" + s + ")" : s) + basis_symbol(basis, c);
        if (first)
            out += negative ? "-" + term : term;
        else
            out += (negative ? " - " : " + ") + term;
        first = false;
    }
    return out;
}

// One line per degree: "<name>_<d> = <component>".
template <class C>
std::string render_series(const Series<C>& s, const std::string& name)
{
    std::ostringstream os;
    for (int d = 0; d <= s.truncation(); ++d)
        os << name << '_' << d << " = " << render_component(s[d], s.basis()) << '\n';
    return os.str();
}

inline Composition parse_composition(const std::string& label)
{
    if (label.empty())
        return Composition{};
    Word w = parse_word(label);
    for (int x : w)
        if (x < 1)
            throw parse_error("composition parts must be positive: '" + label + "'");
    return Composition(std::vector<int>(w.begin(), w.end()));
}

// Splits on '+'/'-' outside parentheses and braces; each piece keeps its sign.
inline std::vector<std::string> split_terms(std::string_view text)
{
    std::vector<std::string> terms;
    std::string cur;
    int depth = 0;
    for (char ch : text) {
        if (ch == '(' || ch == '{')
            ++depth;
        else if (ch == ')' || ch == '}')
            --depth;
        if (depth < 0)
            throw parse_error("unbalanced brackets in '" + std::string(text) + "'");
        if (depth == 0 && (ch == '+' || ch == '-') && !detail::trim(cur).empty()) {
            terms.push_back(detail::trim(cur));
            cur.clear();
        }
        cur += ch;
    }
    if (depth != 0)
        throw parse_error("unbalanced brackets in '" + std::string(text) + "'");
    if (!detail::trim(cur).empty())
        terms.push_back(detail::trim(cur));
    return terms;
}

template <class C>
struct ParsedComponent {
    Basis basis = Basis::S;
    Homogeneous<C> terms;
};

namespace detail {

template <class C>
struct RawTerm {
    std::optional<Basis> basis;
    std::string label; // index of the basis element, empty for a constant
    C value;
};

template <class C>
std::vector<RawTerm<C>> parse_terms(std::string_view text)
{
    std::string body(text);
    if (auto eq = body.find('='); eq != std::string::npos)
        body = body.substr(eq + 1);
    body = trim(body);
    if (body.empty())
        throw parse_error("empty component");
    std::vector<RawTerm<C>> out;
    if (body == "0")
        return out;

    static const std::regex symbol(R"(([SRL])(?:_\{([0-9,]+)\}|_([0-9])|\^\{([0-9,]*)\}|\^([0-9]))$)");
    std::optional<Basis> seen;
    for (const auto& raw : split_terms(body)) {
        std::string term = raw;
        bool negative = false;
        if (term[0] == '+' || term[0] == '-') {
            negative = term[0] == '-';
            term = trim(term.substr(1));
        }
        RawTerm<C> t{std::nullopt, "", C(0)};
        std::string coeff = term;
        std::smatch m;
        if (std::regex_search(term, m, symbol)) {
            Basis b = parse_basis(m[1].str());
            if (seen && *seen != b)
                throw parse_error("mixed bases in '" + body + "'");
            seen = t.basis = b;
            for (int g = 2; g <= 5; ++g)
                if (m[g].matched)
                    t.label = m[g].str();
            coeff = trim(term.substr(0, static_cast<std::size_t>(m.position(0))));
            if (!coeff.empty() && coeff.back() == '*')
                coeff = trim(coeff.substr(0, coeff.size() - 1));
        }
        if (wrapped_in_parens(coeff))
            coeff = trim(coeff.substr(1, coeff.size() - 2));
        t.value = coeff.empty() ? C(1) : ring_traits<C>::parse(coeff);
        if (negative)
            t.value = -t.value;
        out.push_back(std::move(t));
    }
    return out;
}

} // namespace detail

// Parses "<component>" or "<name>_<d> = <component>". A component without
// basis symbols (a constant) is reported in the S basis.
template <class C>
ParsedComponent<C> parse_component(std::string_view text)
{
    ParsedComponent<C> out;
    for (auto& t : detail::parse_terms<C>(text)) {
        if (t.basis)
            out.basis = *t.basis;
        add_term(out.terms, parse_composition(t.label), t.value);
    }
    return out;
}

// Same syntax over words that may contain the letter 0 ("e_1^2S^{11000}").
template <class C>
std::map<Word, C> parse_word_component(std::string_view text)
{
    std::map<Word, C> out;
    for (auto& t : detail::parse_terms<C>(text)) {
        Word w = t.label.empty() ? Word{} : parse_word(t.label);
        auto [it, inserted] = out.try_emplace(w, t.value);
        if (!inserted) {
            it->second = it->second + t.value;
            if (ring_traits<C>::is_zero(it->second))
                out.erase(it);
        }
    }
    return out;
}

// Parses lines written by render_series back into a series.
template <class C>
Series<C> parse_series(const std::string& text, Basis basis)
{
    std::vector<std::string> lines;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);)
        if (!detail::trim(line).empty())
            lines.push_back(line);
    if (lines.empty())
        throw parse_error("no series lines");
    Series<C> s(basis, static_cast<int>(lines.size()) - 1);
    for (std::size_t d = 0; d < lines.size(); ++d) {
        auto parsed = parse_component<C>(lines[d]);
        if (!parsed.terms.empty() && parsed.basis != basis && !(parsed.terms.size() == 1 && parsed.terms.begin()->first.empty()))
            throw basis_mismatch("line " + std::to_string(d) + " is not in the requested basis");
        for (const auto& [c, v] : parsed.terms) {
            if (c.weight() != static_cast<int>(d))
                throw parse_error("term of weight " + std::to_string(c.weight()) + " on line " + std::to_string(d));
            s.add(c, v);
        }
    }
    return s;
}

} // namespace ncgeode

#endif
