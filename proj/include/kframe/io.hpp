#ifndef KFRAME_IO_HPP
#define KFRAME_IO_HPP

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include <kframe/expansion.hpp>
#include <kframe/mcg.hpp>
#include <kframe/qform.hpp>
#include <kframe/relf.hpp>

namespace kframe
{

using Json = nlohmann::ordered_json;

/// Largest a/b index and largest d index mentioned in some text.
struct SigHint {
    int g = 0;
    int n = 0;

    void merge(const SigHint &o)
    {
        g = std::max(g, o.g);
        n = std::max(n, o.n);
    }
};

/// Scans generator tokens (`a3`, `B2'`, `d1`, ...) without validating ranges.
inline SigHint scan_generators(std::string_view text)
{
    SigHint h;
    for (std::size_t p = 0; p < text.size(); ++p) {
        char c = text[p];
        bool starts = p == 0 || !(std::isalnum(static_cast<unsigned char>(text[p - 1])) || text[p - 1] == '_');
        if (!starts || (c != 'a' && c != 'b' && c != 'd' && c != 'A' && c != 'B' && c != 'D')) {
            continue;
        }
        std::size_t q = p + 1;
        int k = 0;
        while (q < text.size() && std::isdigit(static_cast<unsigned char>(text[q])) && k < 100000) {
            k = 10 * k + (text[q] - '0');
            ++q;
        }
        if (q == p + 1) {
            continue;
        }
        if (c == 'd' || c == 'D') {
            h.n = std::max(h.n, k);
        } else {
            h.g = std::max(h.g, k);
        }
    }
    return h;
}

inline std::string read_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Json parse_json(const std::string &text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
    }
}

namespace detail
{

inline const Json &member(const Json &j, const char *key)
{
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("missing field '") + key + "'", 0);
    }
    return j.at(key);
}

inline int int_member(const Json &j, const char *key)
{
    const Json &v = member(j, key);
    if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 1000) {
        throw ParseError(std::string("field '") + key + "' must be a small non-negative integer", 0);
    }
    return v.get<int>();
}

inline std::string string_member(const Json &j, const char *key)
{
    const Json &v = member(j, key);
    if (!v.is_string()) {
        throw ParseError(std::string("field '") + key + "' must be a string", 0);
    }
    return v.get<std::string>();
}

inline Scalar json_scalar(const RingSpec &ring, const Json &v)
{
    if (v.is_string()) {
        return parse_scalar(ring, v.get<std::string>());
    }
    if (v.is_number_integer()) {
        return Scalar::from_integer(ring, v.get<long long>());
    }
    throw ParseError("ring element must be a string or an integer", 0);
}

} // namespace detail

// ---- expansions

inline Json to_json(const Expansion &theta)
{
    const SurfaceSig &sig = theta.sig();
    Json j;
    j["ring"] = theta.space().ring.to_string();
    j["g"] = sig.g;
    if (sig.n != 0) {
        j["n"] = sig.n;
    }
    j["N"] = theta.truncation();
    Json gens = Json::object();
    std::vector<Tensor> higher = theta.higher_terms();
    for (int x = 0; x < sig.rank(); ++x) {
        Json terms = Json::array();
        for (const auto &[idx, c] : higher[static_cast<std::size_t>(x)].terms()) {
            Json names = Json::array();
            for (int e : idx) {
                names.push_back(sig.basis_name(e));
            }
            terms.push_back({{"deg", idx.size()}, {"idx", names}, {"coef", c.to_string()}});
        }
        gens[sig.generator_name(x)] = terms;
    }
    j["theta"] = gens;
    return j;
}

/// Reads `{ "ring", "g", "N", "theta": { "a1": [ {"deg", "idx", "coef"}, ... ] } }`.
/// Generators absent from "theta" have no higher terms.
inline Expansion expansion_from_json(const Json &j)
{
    RingSpec ring = ring_from_string(detail::string_member(j, "ring"));
    SurfaceSig sig{detail::int_member(j, "g"), j.contains("n") ? detail::int_member(j, "n") : 0};
    int trunc = detail::int_member(j, "N");
    if (trunc < 2) {
        throw TruncationMismatch("expansion files need N >= 2");
    }
    Space sp{sig, ring};
    std::vector<Tensor> higher(static_cast<std::size_t>(sig.rank()), Tensor(sp, trunc));
    const Json &theta = detail::member(j, "theta");
    if (!theta.is_object()) {
        throw ParseError("field 'theta' must be an object", 0);
    }
    for (const auto &[name, terms] : theta.items()) {
        int x = sig.index_of(name);
        if (!terms.is_array()) {
            throw ParseError("theta entry '" + name + "' must be an array", 0);
        }
        for (const Json &t : terms) {
            const Json &idx = detail::member(t, "idx");
            if (!idx.is_array()) {
                throw ParseError("'idx' must be an array", 0);
            }
            MultiIndex mi;
            for (const Json &e : idx) {
                if (!e.is_string()) {
                    throw ParseError("'idx' entries must be basis names", 0);
                }
                mi.push_back(sig.index_of(e.get<std::string>()));
            }
            if (detail::int_member(t, "deg") != static_cast<int>(mi.size())) {
                throw InvalidExpansion("'deg' disagrees with the length of 'idx' in '" + name + "'");
            }
            if (static_cast<int>(mi.size()) > trunc) {
                throw TruncationMismatch("term of degree " + std::to_string(mi.size()) + " exceeds N");
            }
            higher[static_cast<std::size_t>(x)].add_term(mi, detail::json_scalar(ring, detail::member(t, "coef")));
        }
    }
    return Expansion::from_higher_terms(sp, trunc, higher);
}

// ---- quadratic forms

inline Json to_json(const QuadraticForm &q)
{
    Json j;
    j["ring"] = q.ring().to_string();
    j["g"] = q.sig().g;
    j["n"] = q.sig().n;
    Json values = Json::object();
    for (int x = 0; x < q.sig().rank(); ++x) {
        values[q.sig().generator_name(x)] = q.generator_value(x).to_string();
    }
    j["values"] = values;
    return j;
}

/// Reads `{ "ring", "g", "n", "values": {"a1": "...", ...} }`; every generator needs a value.
inline QuadraticForm qform_from_json(const Json &j)
{
    RingSpec ring = ring_from_string(detail::string_member(j, "ring"));
    SurfaceSig sig{detail::int_member(j, "g"), j.contains("n") ? detail::int_member(j, "n") : 0};
    Space sp{sig, ring};
    const Json &values = detail::member(j, "values");
    std::vector<Scalar> v(static_cast<std::size_t>(sig.rank()), sp.zero());
    std::vector<bool> seen(v.size(), false);
    for (const auto &[name, val] : values.items()) {
        int x = sig.index_of(name);
        v[static_cast<std::size_t>(x)] = detail::json_scalar(ring, val);
        seen[static_cast<std::size_t>(x)] = true;
    }
    for (int x = 0; x < sig.rank(); ++x) {
        if (!seen[static_cast<std::size_t>(x)]) {
            throw ParseError("no value for generator " + sig.generator_name(x), 0);
        }
    }
    return QuadraticForm(sp, std::move(v));
}

// ---- mapping classes

inline Json to_json(const MappingClass &phi)
{
    Json fwd = Json::object(), bwd = Json::object();
    for (int x = 0; x < phi.sig().rank(); ++x) {
        fwd[phi.sig().generator_name(x)] = phi.image(x).to_string();
        bwd[phi.sig().generator_name(x)] = phi.preimage(x).to_string();
    }
    return {{"fwd", fwd}, {"bwd", bwd}};
}

/// Reads `{ "fwd": {"a1": "a1", "b1": "b1 a1"}, "bwd": {...} }`. Generators
/// absent from a map are fixed. Without explicit "g"/"n" fields the surface is
/// the smallest one mentioning every generator, enlarged to `at_least`.
inline MappingClass mapping_class_from_json(const Json &j, SigHint at_least = {})
{
    const Json &fwd = detail::member(j, "fwd");
    const Json &bwd = detail::member(j, "bwd");
    SigHint h = at_least;
    for (const Json *m : {&fwd, &bwd}) {
        if (!m->is_object()) {
            throw ParseError("'fwd' and 'bwd' must be objects", 0);
        }
        for (const auto &[name, w] : m->items()) {
            if (!w.is_string()) {
                throw ParseError("image of '" + name + "' must be a word string", 0);
            }
            h.merge(scan_generators(name));
            h.merge(scan_generators(w.get<std::string>()));
        }
    }
    SurfaceSig sig{j.contains("g") ? detail::int_member(j, "g") : h.g, j.contains("n") ? detail::int_member(j, "n") : h.n};
    std::vector<Word> f, b;
    for (int x = 0; x < sig.rank(); ++x) {
        f.push_back(Word::generator(sig, x));
        b.push_back(Word::generator(sig, x));
    }
    for (const auto &[name, w] : fwd.items()) {
        f[static_cast<std::size_t>(sig.index_of(name))] = parse_word(sig, w.get<std::string>());
    }
    for (const auto &[name, w] : bwd.items()) {
        b[static_cast<std::size_t>(sig.index_of(name))] = parse_word(sig, w.get<std::string>());
    }
    return MappingClass::create(sig, std::move(f), std::move(b));
}

/// Parses `twist_a:1 * twist_b:2^-1 * slide:1 * id`, applied right to left as
/// a composition of maps (the rightmost factor acts first).
inline MappingClass parse_phi(const SurfaceSig &sig, std::string_view text)
{
    MappingClass out = MappingClass::identity(sig);
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
    };
    auto number = [&](bool allow_sign) {
        std::size_t start = pos;
        bool neg = false;
        if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            neg = text[pos] == '-';
            ++pos;
        }
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
            throw ParseError("expected a number", pos);
        }
        long long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = 10 * v + (text[pos] - '0');
            if (v > 100000) {
                throw ParseError("number too large", start);
            }
            ++pos;
        }
        return static_cast<int>(neg ? -v : v);
    };
    bool first = true;
    skip();
    if (pos == text.size()) {
        throw ParseError("empty mapping class expression", 0);
    }
    while (pos < text.size()) {
        if (!first) {
            if (text[pos] != '*') {
                throw ParseError("expected '*'", pos);
            }
            ++pos;
            skip();
        }
        first = false;
        std::size_t start = pos;
        while (pos < text.size() && (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
            ++pos;
        }
        std::string name(text.substr(start, pos - start));
        MappingClass f;
        if (name == "id") {
            f = MappingClass::identity(sig);
        } else if (name == "twist_a" || name == "twist_b" || name == "slide") {
            if (pos >= text.size() || text[pos] != ':') {
                throw ParseError("expected ':' after '" + name + "'", pos);
            }
            ++pos;
            std::size_t at = pos;
            int i = number(false);
            try {
                f = name == "twist_a" ? twist_a(sig, i) : name == "twist_b" ? twist_b(sig, i) : handle_slide(sig, i);
            } catch (const IndexOutOfRange &e) {
                throw ParseError(e.what(), at);
            }
        } else {
            throw ParseError("unknown mapping class '" + name + "'", start);
        }
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            int k = number(true);
            MappingClass base = k < 0 ? f.inverse() : f;
            f = MappingClass::identity(sig);
            for (int r = 0; r < (k < 0 ? -k : k); ++r) {
                f = compose(f, base);
            }
        }
        out = compose(out, f);
        skip();
    }
    return out;
}

// ---- values

inline Json to_json(const RotVector &r)
{
    Json a = Json::array();
    for (const auto &x : r.rho) {
        a.push_back(x.to_string());
    }
    return a;
}

inline RotVector rot_vector_from_json(const RingSpec &ring, const Json &j)
{
    if (!j.is_array()) {
        throw ParseError("rotation vector must be an array", 0);
    }
    RotVector r;
    for (const Json &v : j) {
        r.rho.push_back(detail::json_scalar(ring, v));
    }
    return r;
}

} // namespace kframe

#endif
