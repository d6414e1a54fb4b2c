#pragma once

// Sparse polynomials with exact rational coefficients in the four variables
// (a, b, c, p).

#include "hexatile/exactmath.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <vector>

namespace hexatile {

using Exponents = std::array<int, 4>; // powers of a, b, c, p

class MultiPoly {
public:
    static constexpr const char* names[4] = {"a", "b", "c", "p"};

    MultiPoly() = default;

    static MultiPoly constant(const Rational& v)
    {
        MultiPoly m;
        m.add_term({0, 0, 0, 0}, v);
        return m;
    }

    static MultiPoly variable(int var)
    {
        MultiPoly m;
        Exponents e{0, 0, 0, 0};
        e.at(static_cast<size_t>(var)) = 1;
        m.add_term(e, Rational(1));
        return m;
    }

    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    Rational coefficient(const Exponents& e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Exponents& e, const Rational& v)
    {
        if (v == 0)
            return;
        auto [it, inserted] = terms_.emplace(e, v);
        if (!inserted) {
            it->second += v;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    Rational eval(const Rational& a, const Rational& b, const Rational& c, const Rational& p) const
    {
        const std::array<const Rational*, 4> x{&a, &b, &c, &p};
        Rational sum(0);
        for (const auto& [e, coef] : terms_) {
            Rational t = coef;
            for (size_t i = 0; i < 4; ++i)
                for (int k = 0; k < e[i]; ++k)
                    t *= *x[i];
            sum += t;
        }
        return sum;
    }

    Rational eval(long a, long b, long c, long p) const
    {
        return eval(Rational(a), Rational(b), Rational(c), Rational(p));
    }

    int total_degree() const
    {
        int d = -1;
        for (const auto& [e, coef] : terms_)
            d = std::max(d, e[0] + e[1] + e[2] + e[3]);
        return d;
    }

    int degree_in(int var) const
    {
        int d = -1;
        for (const auto& [e, coef] : terms_)
            d = std::max(d, e.at(static_cast<size_t>(var)));
        return d;
    }

    MultiPoly& operator+=(const MultiPoly& o)
    {
        for (const auto& [e, coef] : o.terms_)
            add_term(e, coef);
        return *this;
    }

    MultiPoly& operator-=(const MultiPoly& o)
    {
        for (const auto& [e, coef] : o.terms_)
            add_term(e, -coef);
        return *this;
    }

    MultiPoly& operator*=(const Rational& s)
    {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, coef] : terms_)
            coef *= s;
        return *this;
    }

    friend MultiPoly operator+(MultiPoly x, const MultiPoly& y) { return x += y; }
    friend MultiPoly operator-(MultiPoly x, const MultiPoly& y) { return x -= y; }
    friend MultiPoly operator*(MultiPoly x, const Rational& s) { return x *= s; }

    friend MultiPoly operator*(const MultiPoly& x, const MultiPoly& y)
    {
        MultiPoly out;
        for (const auto& [ex, cx] : x.terms_)
            for (const auto& [ey, cy] : y.terms_) {
                Exponents e;
                for (size_t i = 0; i < 4; ++i)
                    e[i] = ex[i] + ey[i];
                out.add_term(e, cx * cy);
            }
        return out;
    }

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

    /// Like "b*a - b*p + 2*a*p - 2", higher total degree first.
    std::string to_string() const
    {
        if (terms_.empty())
            return "0";
        std::vector<std::pair<Exponents, Rational>> sorted(terms_.begin(), terms_.end());
        std::stable_sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
            const int dx = x.first[0] + x.first[1] + x.first[2] + x.first[3];
            const int dy = y.first[0] + y.first[1] + y.first[2] + y.first[3];
            if (dx != dy)
                return dx > dy;
            return x.first > y.first;
        });
        std::string s;
        for (const auto& [e, coef] : sorted) {
            Rational mag = abs(coef);
            const bool neg = coef < 0;
            s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
            std::string mono;
            for (size_t i = 0; i < 4; ++i) {
                if (e[i] == 0)
                    continue;
                if (!mono.empty())
                    mono += "*";
                mono += names[i];
                if (e[i] > 1)
                    mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty())
                s += mag.get_str();
            else if (mag == 1)
                s += mono;
            else
                s += mag.get_str() + "*" + mono;
        }
        return s;
    }

private:
    std::map<Exponents, Rational> terms_;
};

/// Substitutes polynomial expressions for the four variables of f.
inline MultiPoly compose(const MultiPoly& f, const std::array<MultiPoly, 4>& subs)
{
    std::array<std::vector<MultiPoly>, 4> powers;
    for (size_t i = 0; i < 4; ++i)
        powers[i].push_back(MultiPoly::constant(1));
    MultiPoly out;
    for (const auto& [e, coef] : f.terms()) {
        MultiPoly t = MultiPoly::constant(coef);
        for (size_t i = 0; i < 4; ++i) {
            while (static_cast<int>(powers[i].size()) <= e[i])
                powers[i].push_back(powers[i].back() * subs[i]);
            t = t * powers[i][static_cast<size_t>(e[i])];
        }
        out += t;
    }
    return out;
}

} // namespace hexatile
