#ifndef KFRAME_WORD_HPP
#define KFRAME_WORD_HPP

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <kframe/homology.hpp>
#include <kframe/surface.hpp>

namespace kframe
{

/// A generator or its inverse.
struct Letter {
    int gen = 0;
    bool inverse = false;

    Letter inv() const noexcept { return {gen, !inverse}; }
    int sign() const noexcept { return inverse ? -1 : 1; }

    friend bool operator==(const Letter &, const Letter &) = default;
};

/// A freely reduced word in the free group pi_1 of a SurfaceSig.
///
/// Words are always stored reduced, so equality is structural.
class Word
{
public:
    Word() = default;
    explicit Word(const SurfaceSig &sig) : sig_(sig) {}

    static Word reduce(const SurfaceSig &sig, std::span<const Letter> letters)
    {
        Word w(sig);
        w.letters_.reserve(letters.size());
        for (const Letter &l : letters) {
            sig.check_index(l.gen);
            w.push(l);
        }
        return w;
    }

    static Word generator(const SurfaceSig &sig, int gen, bool inverse = false)
    {
        Letter l{gen, inverse};
        return reduce(sig, std::span<const Letter>(&l, 1));
    }

    const SurfaceSig &sig() const noexcept { return sig_; }
    const std::vector<Letter> &letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    Word &operator*=(const Word &o)
    {
        check_sig(o);
        for (const Letter &l : o.letters_) {
            push(l);
        }
        return *this;
    }
    friend Word operator*(Word u, const Word &v) { return u *= v; }

    Word inverse() const
    {
        Word w(sig_);
        w.letters_.reserve(letters_.size());
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
            w.letters_.push_back(it->inv());
        }
        return w;
    }

    std::string to_string() const
    {
        std::string out;
        for (const Letter &l : letters_) {
            if (!out.empty()) {
                out += ' ';
            }
            out += sig_.generator_name(l.gen);
            if (l.inverse) {
                out += '\'';
            }
        }
        return out;
    }

    friend bool operator==(const Word &a, const Word &b) { return a.sig_ == b.sig_ && a.letters_ == b.letters_; }

private:
    void check_sig(const Word &o) const
    {
        if (!(sig_ == o.sig_)) {
            throw SignatureMismatch("word signature mismatch: " + sig_.to_string() + " vs " + o.sig_.to_string());
        }
    }

    void push(const Letter &l)
    {
        if (!letters_.empty() && letters_.back() == l.inv()) {
            letters_.pop_back();
        } else {
            letters_.push_back(l);
        }
    }

    SurfaceSig sig_;
    std::vector<Letter> letters_;
};

/// u v u^-1 v^-1
inline Word commutator(const Word &u, const Word &v) { return u * v * u.inverse() * v.inverse(); }

inline Word power(const Word &u, int k)
{
    Word base = k < 0 ? u.inverse() : u;
    Word out(u.sig());
    for (int i = 0; i < (k < 0 ? -k : k); ++i) {
        out *= base;
    }
    return out;
}

/// Parses whitespace-separated tokens `a<i>`, `b<i>`, `d<j>`, each optionally
/// followed by `'` for the inverse. The empty string is the identity.
inline std::vector<Letter> parse_letters(const SurfaceSig &sig, std::string_view text)
{
    std::vector<Letter> letters;
    std::size_t pos = 0;
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
    while (pos < text.size()) {
        if (is_space(text[pos])) {
            ++pos;
            continue;
        }
        std::size_t start = pos;
        char kind = text[pos];
        if (kind != 'a' && kind != 'b' && kind != 'd') {
            throw ParseError(std::string("expected a, b or d, got '") + kind + "'", pos);
        }
        ++pos;
        if (pos >= text.size() || text[pos] < '0' || text[pos] > '9') {
            throw ParseError("expected an index after '" + std::string(1, kind) + "'", pos);
        }
        long long idx = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            idx = 10 * idx + (text[pos] - '0');
            if (idx > 1'000'000) {
                throw ParseError("generator index too large", start);
            }
            ++pos;
        }
        bool inverse = false;
        if (pos < text.size() && text[pos] == '\'') {
            inverse = true;
            ++pos;
        }
        if (pos < text.size() && !is_space(text[pos])) {
            throw ParseError(std::string("unexpected character '") + text[pos] + "'", pos);
        }
        int i = static_cast<int>(idx);
        int gen = kind == 'a' ? sig.a(i) : kind == 'b' ? sig.b(i) : sig.d(i);
        letters.push_back({gen, inverse});
    }
    return letters;
}

inline Word parse_word(const SurfaceSig &sig, std::string_view text)
{
    auto letters = parse_letters(sig, text);
    return Word::reduce(sig, letters);
}

/// [a1,b1]...[ag,bg] d1...dn. For n = 0 this is the inverse boundary loop zeta.
inline Word boundary_word(const SurfaceSig &sig)
{
    Word w(sig);
    for (int i = 1; i <= sig.g; ++i) {
        w *= commutator(Word::generator(sig, sig.a(i)), Word::generator(sig, sig.b(i)));
    }
    for (int j = 1; j <= sig.n; ++j) {
        w *= Word::generator(sig, sig.d(j));
    }
    return w;
}

/// Abelianization: signed letter counts mapped into K.
inline HVec homology_class(std::span<const Letter> letters, const Space &space)
{
    std::vector<long long> counts(static_cast<std::size_t>(space.dim()), 0);
    for (const Letter &l : letters) {
        space.sig.check_index(l.gen);
        counts[static_cast<std::size_t>(l.gen)] += l.sign();
    }
    HVec v(space);
    for (int i = 0; i < space.dim(); ++i) {
        v[i] = space.integer(counts[static_cast<std::size_t>(i)]);
    }
    return v;
}

inline HVec homology_class(const Word &w, const RingSpec &ring)
{
    return homology_class(w.letters(), Space{w.sig(), ring});
}

} // namespace kframe

#endif
