#ifndef NCGEODE_COEFFRING_HPP
#define NCGEODE_COEFFRING_HPP

// Exact coefficient rings: big integers, rationals, univariate polynomials
// over the rationals (PolyT), and polynomials in the elementary generators
// e_1, e_2, ... with partition-indexed monomials (EPoly).

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ncgeode {

// Expression templates are disabled so results of a*b have the value type,
// which keeps the generic series code free of conversions.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

class arithmetic_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class not_divisible : public arithmetic_error {
public:
    using arithmetic_error::arithmetic_error;
};

class parse_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline Integer exact_divide(const Integer& a, const Integer& b)
{
    if (b == 0)
        throw arithmetic_error("division by zero");
    Integer q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0)
        throw not_divisible(a.str() + " is not divisible by " + b.str());
    return q;
}

inline Rational exact_divide(const Rational& a, const Rational& b)
{
    if (b == 0)
        throw arithmetic_error("division by zero");
    return a / b;
}

inline std::string to_string(const Integer& v) { return v.str(); }

inline std::string to_string(const Rational& v)
{
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(v) == 1)
        return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

namespace detail {

inline void skip_spaces(std::string_view s, std::size_t& pos)
{
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
        ++pos;
}

inline bool read_unsigned(std::string_view s, std::size_t& pos, Integer& out)
{
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        ++pos;
    if (pos == start)
        return false;
    out = Integer(std::string(s.substr(start, pos - start)));
    return true;
}

inline std::string strip(std::string_view s)
{
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return std::string(s.substr(b, e - b));
}

// Strips one pair of parentheses enclosing the whole string, if present.
inline std::string strip_parens(std::string_view s)
{
    std::string t = strip(s);
    if (t.size() < 2 || t.front() != '(' || t.back() != ')')
        return t;
    int depth = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] == '(')
            ++depth;
        else if (t[i] == ')' && --depth == 0 && i + 1 != t.size())
            return t;
    }
    return strip(std::string_view(t).substr(1, t.size() - 2));
}

} // namespace detail

inline Rational parse_rational(std::string_view text)
{
    std::string s = detail::strip(text);
    std::size_t pos = 0;
    bool negative = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+'))
        negative = s[pos++] == '-';
    Integer num, den = 1;
    if (!detail::read_unsigned(s, pos, num))
        throw parse_error("bad rational: '" + s + "'");
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        if (!detail::read_unsigned(s, pos, den) || den == 0)
            throw parse_error("bad rational: '" + s + "'");
    }
    if (pos != s.size())
        throw parse_error("bad rational: '" + s + "'");
    Rational r(num, den);
    return negative ? Rational(-r) : r;
}

inline Integer parse_integer(std::string_view text)
{
    Rational r = parse_rational(text);
    if (boost::multiprecision::denominator(r) != 1)
        throw parse_error("not an integer: '" + std::string(text) + "'");
    return boost::multiprecision::numerator(r);
}

// Polynomials in one indeterminate over the rationals, coefficients stored by
// ascending power. Invariant: no trailing zero coefficient.
class PolyT {
public:
    PolyT() = default;
    PolyT(int c) : PolyT(Rational(c)) {}
    PolyT(const Integer& c) : PolyT(Rational(c)) {}
    PolyT(const Rational& c)
    {
        if (c != 0)
            coeffs_.push_back(c);
    }
    explicit PolyT(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static PolyT t() { return PolyT(std::vector<Rational>{0, 1}); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(int power) const
    {
        return power >= 0 && power < static_cast<int>(coeffs_.size()) ? coeffs_[power] : Rational(0);
    }

    bool is_constant() const { return coeffs_.size() <= 1; }

    Rational evaluate(const Rational& x) const
    {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    // p(t) -> p(t + shift), via Horner in the polynomial ring.
    PolyT shifted(const Rational& shift) const
    {
        PolyT lin(std::vector<Rational>{shift, 1});
        PolyT acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * lin + PolyT(*it);
        return acc;
    }

    // p(t) -> p(q(t))
    PolyT compose(const PolyT& inner) const
    {
        PolyT acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * inner + PolyT(*it);
        return acc;
    }

    PolyT operator-() const
    {
        PolyT r = *this;
        for (auto& c : r.coeffs_)
            c = -c;
        return r;
    }

    PolyT& operator+=(const PolyT& o)
    {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] += o.coeffs_[i];
        normalize();
        return *this;
    }
    PolyT& operator-=(const PolyT& o) { return *this += -o; }
    PolyT& operator*=(const PolyT& o) { return *this = *this * o; }

    friend PolyT operator+(PolyT a, const PolyT& b) { return a += b; }
    friend PolyT operator-(PolyT a, const PolyT& b) { return a -= b; }
    friend PolyT operator*(const PolyT& a, const PolyT& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return PolyT(std::move(out));
    }
    friend PolyT operator/(PolyT a, const Rational& d)
    {
        if (d == 0)
            throw arithmetic_error("division by zero");
        for (auto& c : a.coeffs_)
            c /= d;
        return a;
    }

    friend bool operator==(const PolyT&, const PolyT&) = default;

    // Exact polynomial division; signals not_divisible on nonzero remainder.
    friend PolyT exact_divide(const PolyT& a, const PolyT& b)
    {
        if (b.is_zero())
            throw arithmetic_error("division by the zero polynomial");
        std::vector<Rational> rem = a.coeffs_;
        int db = b.degree();
        if (a.degree() < db) {
            if (a.is_zero())
                return {};
            throw not_divisible("polynomial remainder is nonzero");
        }
        std::vector<Rational> quot(a.degree() - db + 1);
        for (int i = a.degree() - db; i >= 0; --i) {
            Rational q = rem[i + db] / b.coeffs_[db];
            quot[i] = q;
            for (int j = 0; j <= db; ++j)
                rem[i + j] -= q * b.coeffs_[j];
        }
        for (const auto& r : rem)
            if (r != 0)
                throw not_divisible("polynomial remainder is nonzero");
        return PolyT(std::move(quot));
    }

    // Renders with a common denominator, e.g. "(3t^2-t)/2", "4t^2-t", "2t", "-1".
    std::string to_string(char var = 't') const;

    // Accepts the to_string format plus rational coefficients on each term,
    // e.g. "(8t^3-6t^2+t)/3", "3/2t^2 - 1/2t", "2t", "-1".
    static PolyT parse(std::string_view text, char var = 't');

private:
    void normalize()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0)
            coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

inline std::string PolyT::to_string(char var) const
{
    using boost::multiprecision::denominator;
    using boost::multiprecision::lcm;
    using boost::multiprecision::numerator;
    if (is_zero())
        return "0";
    Integer den = 1;
    for (const auto& c : coeffs_)
        den = lcm(den, Integer(denominator(c)));
    std::ostringstream os;
    bool first = true;
    int terms = 0;
    for (int p = degree(); p >= 0; --p) {
        Rational c = coeffs_[p] * den;
        if (c == 0)
            continue;
        ++terms;
        Integer n = numerator(c);
        if (n < 0) {
            os << '-';
            n = -n;
        } else if (!first) {
            os << '+';
        }
        first = false;
        if (n != 1 || p == 0)
            os << n.str();
        if (p >= 1)
            os << var;
        if (p >= 2)
            os << '^' << p;
    }
    if (den == 1)
        return os.str();
    if (terms == 1)
        return os.str() + "/" + den.str();
    return "(" + os.str() + ")/" + den.str();
}

inline PolyT PolyT::parse(std::string_view text, char var)
{
    std::string s = detail::strip(text);
    Rational scale = 1;
    // trailing "/den" applying to a parenthesized numerator
    if (!s.empty() && s.front() == '(') {
        int depth = 0;
        std::size_t close = std::string::npos;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '(')
                ++depth;
            else if (s[i] == ')' && --depth == 0) {
                close = i;
                break;
            }
        }
        if (close == std::string::npos)
            throw parse_error("unbalanced parentheses: '" + s + "'");
        std::string rest = detail::strip(std::string_view(s).substr(close + 1));
        if (!rest.empty()) {
            if (rest.front() != '/')
                throw parse_error("bad polynomial: '" + s + "'");
            scale = Rational(1) / parse_rational(std::string_view(rest).substr(1));
        }
        s = s.substr(1, close - 1);
    }
    std::vector<Rational> coeffs;
    std::size_t pos = 0;
    bool any = false;
    while (true) {
        detail::skip_spaces(s, pos);
        if (pos >= s.size())
            break;
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
            detail::skip_spaces(s, pos);
        } else if (any) {
            throw parse_error("expected sign in polynomial: '" + s + "'");
        }
        Rational c = 1;
        Integer num;
        bool has_number = detail::read_unsigned(s, pos, num);
        if (has_number) {
            Integer den = 1;
            if (pos < s.size() && s[pos] == '/') {
                ++pos;
                if (!detail::read_unsigned(s, pos, den) || den == 0)
                    throw parse_error("bad coefficient in '" + s + "'");
            }
            c = Rational(num, den);
        }
        detail::skip_spaces(s, pos);
        if (pos < s.size() && s[pos] == '*')
            ++pos;
        detail::skip_spaces(s, pos);
        int power = 0;
        if (pos < s.size() && s[pos] == var) {
            ++pos;
            power = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                Integer e;
                if (!detail::read_unsigned(s, pos, e))
                    throw parse_error("bad exponent in '" + s + "'");
                power = static_cast<int>(e);
            }
        } else if (!has_number) {
            throw parse_error("bad polynomial term in '" + s + "'");
        }
        if (static_cast<int>(coeffs.size()) <= power)
            coeffs.resize(power + 1);
        coeffs[power] += negative ? Rational(-c) : c;
        any = true;
    }
    if (!any)
        throw parse_error("empty polynomial");
    return PolyT(std::move(coeffs)) * PolyT(scale);
}

// Integer partition; parts weakly decreasing. Ordered by weight, then
// reverse-lexicographically (larger first part first).
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (int p : parts_)
            if (p <= 0)
                throw std::invalid_argument("partition parts must be positive");
        std::sort(parts_.begin(), parts_.end(), std::greater<>());
    }

    const std::vector<int>& parts() const { return parts_; }
    int weight() const
    {
        int w = 0;
        for (int p : parts_)
            w += p;
        return w;
    }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // Multiset union: the monomial product e_lambda * e_mu.
    friend Partition operator*(const Partition& a, const Partition& b)
    {
        std::vector<int> parts = a.parts_;
        parts.insert(parts.end(), b.parts_.begin(), b.parts_.end());
        return Partition(std::move(parts));
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b)
    {
        if (auto c = a.weight() <=> b.weight(); c != 0)
            return c;
        return std::lexicographical_compare_three_way(b.parts_.begin(), b.parts_.end(),
                                                      a.parts_.begin(), a.parts_.end());
    }

private:
    std::vector<int> parts_;
};

// Polynomial in the commuting generators e_1, e_2, ... with integer
// coefficients. The empty partition is the unit monomial.
class EPoly {
public:
    using Terms = std::map<Partition, Integer>;

    EPoly() = default;
    EPoly(int c) : EPoly(Integer(c)) {}
    EPoly(const Integer& c)
    {
        if (c != 0)
            terms_.emplace(Partition{}, c);
    }
    EPoly(const Partition& mono, const Integer& c = 1)
    {
        if (c != 0)
            terms_.emplace(mono, c);
    }

    // e_n, with e_0 = 1.
    static EPoly e(int n)
    {
        if (n < 0)
            return {};
        if (n == 0)
            return EPoly(1);
        return EPoly(Partition{n});
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Integer coefficient(const Partition& p) const
    {
        auto it = terms_.find(p);
        return it == terms_.end() ? Integer(0) : it->second;
    }
    std::optional<Integer> constant_value() const
    {
        if (terms_.empty())
            return Integer(0);
        if (terms_.size() == 1 && terms_.begin()->first.empty())
            return terms_.begin()->second;
        return std::nullopt;
    }

    void add_term(const Partition& p, const Integer& c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(p, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    EPoly operator-() const
    {
        EPoly r = *this;
        for (auto& [p, c] : r.terms_)
            c = -c;
        return r;
    }
    EPoly& operator+=(const EPoly& o)
    {
        for (const auto& [p, c] : o.terms_)
            add_term(p, c);
        return *this;
    }
    EPoly& operator-=(const EPoly& o)
    {
        for (const auto& [p, c] : o.terms_)
            add_term(p, -c);
        return *this;
    }
    EPoly& operator*=(const EPoly& o) { return *this = *this * o; }
    friend EPoly operator+(EPoly a, const EPoly& b) { return a += b; }
    friend EPoly operator-(EPoly a, const EPoly& b) { return a -= b; }
    friend EPoly operator*(const EPoly& a, const EPoly& b)
    {
        EPoly r;
        for (const auto& [pa, ca] : a.terms_)
            for (const auto& [pb, cb] : b.terms_)
                r.add_term(pa * pb, ca * cb);
        return r;
    }
    friend bool operator==(const EPoly&, const EPoly&) = default;

    // Exact division by an integer scalar.
    friend EPoly exact_divide(const EPoly& a, const Integer& d)
    {
        EPoly r;
        for (const auto& [p, c] : a.terms_)
            r.add_term(p, exact_divide(c, d));
        return r;
    }

    // Ring homomorphism e_n -> image(n), extended to the target ring R.
    template <class R, class F>
    R evaluate(F&& image) const
    {
        R total(0);
        for (const auto& [p, c] : terms_) {
            R mono(1);
            for (int part : p.parts())
                mono = mono * image(part);
            total = total + R(c) * mono;
        }
        return total;
    }

    // Renders as e.g. "e_{111}+3e_{21}+e_{3}"; multi-digit parts are
    // comma separated: "e_{10,2}".
    std::string to_string() const;
    static EPoly parse(std::string_view text);

private:
    Terms terms_;
};

inline std::string partition_label(const Partition& p)
{
    bool wide = std::any_of(p.parts().begin(), p.parts().end(), [](int x) { return x > 9; });
    std::string out;
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (wide && i > 0)
            out += ',';
        out += std::to_string(p.parts()[i]);
    }
    return out;
}

inline std::string EPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        Integer a = c;
        if (a < 0) {
            out += '-';
            a = -a;
        } else if (!first) {
            out += '+';
        }
        first = false;
        if (p.empty()) {
            out += a.str();
            continue;
        }
        if (a != 1)
            out += a.str();
        out += "e_{" + partition_label(p) + "}";
    }
    return out;
}

inline EPoly EPoly::parse(std::string_view text)
{
    std::string s = detail::strip_parens(text);
    EPoly result;
    std::size_t pos = 0;
    bool any = false;
    auto read_parts = [&](std::vector<int>& parts) {
        // "e_{21}", "e_{10,2}", "e_3", "e21", "e_1^2"
        std::vector<int> local;
        if (pos < s.size() && s[pos] == '_')
            ++pos;
        if (pos < s.size() && s[pos] == '{') {
            ++pos;
            std::size_t close = s.find('}', pos);
            if (close == std::string::npos)
                throw parse_error("unterminated e_{...} in '" + s + "'");
            std::string body = s.substr(pos, close - pos);
            pos = close + 1;
            if (body.find(',') != std::string::npos) {
                std::stringstream ss(body);
                std::string item;
                while (std::getline(ss, item, ','))
                    local.push_back(std::stoi(item));
            } else {
                for (char ch : body) {
                    if (!std::isdigit(static_cast<unsigned char>(ch)))
                        throw parse_error("bad partition in '" + s + "'");
                    local.push_back(ch - '0');
                }
            }
        } else {
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                local.push_back(s[pos++] - '0');
            if (pos == start)
                throw parse_error("expected partition after 'e' in '" + s + "'");
        }
        int power = 1;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            bool braced = pos < s.size() && s[pos] == '{';
            if (braced)
                ++pos;
            Integer e;
            if (!detail::read_unsigned(s, pos, e) || (braced && (pos >= s.size() || s[pos++] != '}')))
                throw parse_error("bad exponent in '" + s + "'");
            power = static_cast<int>(e);
        }
        for (int k = 0; k < power; ++k)
            parts.insert(parts.end(), local.begin(), local.end());
    };
    while (true) {
        detail::skip_spaces(s, pos);
        if (pos >= s.size())
            break;
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
            detail::skip_spaces(s, pos);
        } else if (any) {
            throw parse_error("expected sign in '" + s + "'");
        }
        Integer c = 1;
        bool has_number = detail::read_unsigned(s, pos, c);
        std::vector<int> parts;
        bool has_e = false;
        while (true) {
            detail::skip_spaces(s, pos);
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                continue;
            }
            if (pos < s.size() && s[pos] == 'e') {
                ++pos;
                read_parts(parts);
                has_e = true;
                continue;
            }
            break;
        }
        if (!has_number && !has_e)
            throw parse_error("bad EPoly term in '" + s + "'");
        result.add_term(Partition(std::move(parts)), negative ? Integer(-c) : c);
        any = true;
    }
    if (!any)
        throw parse_error("empty EPoly");
    return result;
}

// Uniform access to the coefficient rings used by the generic series code.
template <class C>
struct ring_traits;

template <>
struct ring_traits<Integer> {
    static bool is_zero(const Integer& c) { return c == 0; }
    static std::optional<Integer> unit_inverse(const Integer& c)
    {
        if (c == 1 || c == -1)
            return c;
        return std::nullopt;
    }
    static std::string str(const Integer& c) { return c.str(); }
    static Integer parse(std::string_view text) { return parse_integer(text); }
};

template <>
struct ring_traits<Rational> {
    static bool is_zero(const Rational& c) { return c == 0; }
    static std::optional<Rational> unit_inverse(const Rational& c)
    {
        if (c == 0)
            return std::nullopt;
        return Rational(1) / c;
    }
    static std::string str(const Rational& c) { return ncgeode::to_string(c); }
    static Rational parse(std::string_view text) { return parse_rational(text); }
};

template <>
struct ring_traits<PolyT> {
    static bool is_zero(const PolyT& c) { return c.is_zero(); }
    static std::optional<PolyT> unit_inverse(const PolyT& c)
    {
        if (c.is_zero() || !c.is_constant())
            return std::nullopt;
        return PolyT(Rational(1) / c.coefficient(0));
    }
    static std::string str(const PolyT& c) { return c.to_string(); }
    static PolyT parse(std::string_view text) { return PolyT::parse(text); }
};

template <>
struct ring_traits<EPoly> {
    static bool is_zero(const EPoly& c) { return c.is_zero(); }
    static std::optional<EPoly> unit_inverse(const EPoly& c)
    {
        auto v = c.constant_value();
        if (v && (*v == 1 || *v == -1))
            return EPoly(*v);
        return std::nullopt;
    }
    static std::string str(const EPoly& c) { return c.to_string(); }
    static EPoly parse(std::string_view text) { return EPoly::parse(text); }
};

template <class C>
concept Coefficient = requires(const C& a, const C& b) {
    { a + b } -> std::convertible_to<C>;
    { a - b } -> std::convertible_to<C>;
    { a * b } -> std::convertible_to<C>;
    { -a } -> std::convertible_to<C>;
    { C(0) };
    { C(1) };
    { ring_traits<C>::is_zero(a) } -> std::convertible_to<bool>;
};

inline Integer factorial(int n)
{
    Integer r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

inline Integer binomial(const Integer& n, int k)
{
    if (k < 0)
        return 0;
    Integer num = 1;
    for (int i = 0; i < k; ++i)
        num *= (n - i);
    return exact_divide(num, factorial(k));
}

// binom(p, j) = p(p-1)...(p-j+1)/j! for a polynomial p.
inline PolyT binomial_polynomial(const PolyT& p, int j)
{
    if (j < 0)
        return {};
    PolyT acc(1);
    for (int i = 0; i < j; ++i)
        acc *= p - PolyT(i);
    return acc / Rational(factorial(j));
}

// binom(m t, a) as a polynomial in t.
inline PolyT binomial_polynomial(int m, int a)
{
    static std::mutex mu;
    static std::map<std::pair<int, int>, PolyT> cache;
    std::lock_guard lock(mu);
    auto key = std::make_pair(m, a);
    if (auto it = cache.find(key); it != cache.end())
        return it->second;
    PolyT value = binomial_polynomial(PolyT(m) * PolyT::t(), a);
    cache.emplace(key, value);
    return value;
}

// e_k(j A) = sum over weak compositions (i_1..i_j) of k of e_{i_1}...e_{i_j}.
// Counted per partition: mu of length <= j contributes the number of
// distinct arrangements of mu padded with zeros to length j.
inline EPoly elementary_of_multiple(int k, int j)
{
    if (k < 0 || j < 0)
        return {};
    if (k == 0)
        return EPoly(1);
    if (j == 0)
        return {};
    static std::mutex mu;
    static std::map<std::pair<int, int>, EPoly> cache;
    std::lock_guard lock(mu);
    auto key = std::make_pair(k, j);
    if (auto it = cache.find(key); it != cache.end())
        return it->second;

    EPoly out;
    std::vector<int> parts;
    // partitions of k with at most j parts, parts bounded by `limit`
    auto rec = [&](auto&& self, int remaining, int limit) -> void {
        if (remaining == 0) {
            // multinomial j! / ((j - l)! * prod mult!)
            Integer count = factorial(j) / factorial(j - static_cast<int>(parts.size()));
            std::map<int, int> mult;
            for (int p : parts)
                ++mult[p];
            for (const auto& [v, m] : mult)
                count /= factorial(m);
            out.add_term(Partition(parts), count);
            return;
        }
        if (static_cast<int>(parts.size()) == j)
            return;
        for (int p = std::min(remaining, limit); p >= 1; --p) {
            parts.push_back(p);
            self(self, remaining - p, p);
            parts.pop_back();
        }
    };
    rec(rec, k, k);
    cache.emplace(key, out);
    return out;
}

// Named substitutions for the e_n.
inline Integer evaluate_alternating(const EPoly& p)
{
    return p.evaluate<Integer>([](int n) { return n % 2 == 0 ? Integer(1) : Integer(-1); });
}

inline Integer evaluate_at_one(const EPoly& p)
{
    return p.evaluate<Integer>([](int) { return Integer(1); });
}

// e_n -> q^n; the result is a polynomial in q.
inline PolyT evaluate_powers(const EPoly& p)
{
    return p.evaluate<PolyT>([](int n) {
        std::vector<Rational> c(n + 1);
        c[n] = 1;
        return PolyT(std::move(c));
    });
}

} // namespace ncgeode

#endif
