#pragma once

// Brute-force reference computations used only by the tests.

#include "jfilt/lie.hpp"

#include <map>
#include <random>

namespace oracle {

using jfilt::Integer;
using Poly = std::map<std::vector<int>, Integer>;

inline void add(Poly& p, const std::vector<int>& m, const Integer& c)
{
    Integer& v = p[m];
    v += c;
    if (sgn(v) == 0)
        p.erase(m);
}

inline Poly mul(const Poly& a, const Poly& b, int cutoff)
{
    Poly out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            if (static_cast<int>(ma.size() + mb.size()) >= cutoff)
                continue;
            std::vector<int> m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            add(out, m, ca * cb);
        }
    return out;
}

// Magnus image by expanding every letter separately: x -> 1+X and
// x^-1 -> sum_j (-X)^j, multiplied one letter at a time.
inline Poly magnus(const jfilt::GroupWord& w, int cutoff)
{
    Poly acc{{{}, Integer(1)}};
    for (const auto& l : w.letters()) {
        Poly letter;
        if (l.exp > 0) {
            letter[{}] = 1;
            letter[{l.gen}] = 1;
        } else {
            std::vector<int> m;
            Integer s = 1;
            for (int j = 0; j < cutoff; ++j) {
                letter[m] = s;
                m.push_back(l.gen);
                s = -s;
            }
        }
        for (std::int64_t r = 0; r < (l.exp > 0 ? l.exp : -l.exp); ++r)
            acc = mul(acc, letter, cutoff);
    }
    return acc;
}

// Homogeneous part of degree d.
inline Poly part(const Poly& p, int d)
{
    Poly out;
    for (const auto& [m, c] : p)
        if (static_cast<int>(m.size()) == d)
            out[m] = c;
    return out;
}

inline Poly lie_commutator(const Poly& a, const Poly& b)
{
    Poly out = mul(a, b, 1 << 20);
    for (const auto& [m, c] : mul(b, a, 1 << 20))
        add(out, m, -c);
    return out;
}

// Dynkin map: word a_1...a_k -> [...[a_1,a_2],...,a_k].
inline Poly dynkin(const Poly& p)
{
    Poly out;
    for (const auto& [m, c] : p) {
        Poly acc{{{m[0]}, Integer(1)}};
        for (std::size_t i = 1; i < m.size(); ++i)
            acc = lie_commutator(acc, Poly{{{m[i]}, Integer(1)}});
        for (const auto& [mm, cc] : acc)
            add(out, mm, c * cc);
    }
    return out;
}

// Lyndon test by comparing with all rotations.
inline bool lyndon(const std::vector<int>& w)
{
    for (std::size_t s = 1; s < w.size(); ++s) {
        std::vector<int> r(w.begin() + s, w.end());
        r.insert(r.end(), w.begin(), w.begin() + s);
        if (!(w < r))
            return false;
    }
    return true;
}

inline std::int64_t count_lyndon(int n, int k)
{
    std::vector<int> w(k, 0);
    std::int64_t count = 0;
    for (;;) {
        count += lyndon(w) ? 1 : 0;
        int i = k - 1;
        while (i >= 0 && ++w[i] == n)
            w[i--] = 0;
        if (i < 0)
            return count;
    }
}

// Expansion of a Lie element as a Poly (tensor algebra).
inline Poly expand(const jfilt::LieElement& u)
{
    Poly out;
    const int n = u.generators(), k = u.degree();
    for (const auto& [idx, c] : u.expand()) {
        std::vector<int> m(k);
        std::uint64_t r = idx;
        for (int i = k - 1; i >= 0; --i) {
            m[i] = static_cast<int>(r % n);
            r /= n;
        }
        out[m] = c;
    }
    return out;
}

inline jfilt::GroupWord random_word(const jfilt::Alphabet& a, int length, std::mt19937_64& rng)
{
    std::vector<jfilt::Letter> letters;
    std::uniform_int_distribution<int> gen(0, a.size() - 1);
    std::uniform_int_distribution<int> exp(-2, 2);
    for (int i = 0; i < length; ++i)
        letters.push_back({gen(rng), exp(rng)});
    return jfilt::GroupWord::reduce(a, letters);
}

} // namespace oracle
