#ifndef NCGEODE_JSON_IO_HPP
#define NCGEODE_JSON_IO_HPP

// JSON form of a truncated series:
//   {"series": name, "ring": "int|rational|polyt|epoly", "basis": "S|R|L",
//    "truncation": N,
//    "components": [{"degree": d, "terms": [{"composition": [..], "coeff": ..}]}]}
// Coefficients: Integer and Rational as strings, PolyT as the ascending list
// of its rational coefficients, EPoly as [{"partition": [..], "coeff": ".."}].

#include <string>
#include <vector>

#include <json.hpp>

#include "coeffring.hpp"
#include "ncsf.hpp"

namespace ncgeode {

using json = nlohmann::json;

template <class C>
struct json_coeff;

template <>
struct json_coeff<Integer> {
    static constexpr const char* ring = "int";
    static json encode(const Integer& c) { return c.str(); }
    static Integer decode(const json& j) { return parse_integer(j.get<std::string>()); }
};

template <>
struct json_coeff<Rational> {
    static constexpr const char* ring = "rational";
    static json encode(const Rational& c) { return to_string(c); }
    static Rational decode(const json& j) { return parse_rational(j.get<std::string>()); }
};

template <>
struct json_coeff<PolyT> {
    static constexpr const char* ring = "polyt";
    static json encode(const PolyT& p)
    {
        json a = json::array();
        for (int i = 0; i <= p.degree(); ++i)
            a.push_back(to_string(p.coefficient(i)));
        return a;
    }
    static PolyT decode(const json& j)
    {
        std::vector<Rational> c;
        for (const auto& x : j)
            c.push_back(parse_rational(x.get<std::string>()));
        return PolyT(std::move(c));
    }
};

template <>
struct json_coeff<EPoly> {
    static constexpr const char* ring = "epoly";
    static json encode(const EPoly& p)
    {
        json a = json::array();
        for (const auto& [part, c] : p.terms())
            a.push_back({{"partition", part.parts()}, {"coeff", c.str()}});
        return a;
    }
    static EPoly decode(const json& j)
    {
        EPoly p;
        for (const auto& t : j)
            p.add_term(Partition(t.at("partition").get<std::vector<int>>()), parse_integer(t.at("coeff").get<std::string>()));
        return p;
    }
};

template <class C>
json series_to_json(const Series<C>& s, const std::string& name)
{
    json comps = json::array();
    for (int d = 0; d <= s.truncation(); ++d) {
        json terms = json::array();
        for (const auto& [c, v] : s[d])
            terms.push_back({{"composition", c.parts()}, {"coeff", json_coeff<C>::encode(v)}});
        comps.push_back({{"degree", d}, {"terms", terms}});
    }
    return {{"series", name},
            {"ring", json_coeff<C>::ring},
            {"basis", basis_name(s.basis())},
            {"truncation", s.truncation()},
            {"components", comps}};
}

template <class C>
Series<C> series_from_json(const json& j)
{
    if (j.at("ring").get<std::string>() != json_coeff<C>::ring)
        throw parse_error("ring mismatch: expected " + std::string(json_coeff<C>::ring));
    Series<C> s(parse_basis(j.at("basis").get<std::string>()), j.at("truncation").get<int>());
    for (const auto& comp : j.at("components")) {
        int d = comp.at("degree").get<int>();
        for (const auto& t : comp.at("terms")) {
            Composition c(t.at("composition").get<std::vector<int>>());
            if (c.weight() != d)
                throw parse_error("composition weight does not match its degree");
            s.add(c, json_coeff<C>::decode(t.at("coeff")));
        }
    }
    return s;
}

} // namespace ncgeode

#endif
