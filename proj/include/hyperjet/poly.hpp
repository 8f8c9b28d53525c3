#ifndef HYPERJET_POLY_HPP
#define HYPERJET_POLY_HPP

// Dense univariate polynomials with exact rational coefficients.
// Degrees stay tiny (<= n+1 for degree polynomials in d), so no sparsity.

#include <cstddef>
#include <string>
#include <vector>

#include "hyperjet/rational.hpp"

namespace hyperjet {

class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(const Rat& a) { return Poly(std::vector<Rat>{a}); }
    static Poly monomial(const Rat& a, std::size_t k)
    {
        std::vector<Rat> v(k + 1, Rat(0));
        v[k] = a;
        return Poly(std::move(v));
    }

    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }

    Rat eval(const Rat& x) const
    {
        Rat acc(0);
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
        return acc;
    }

    Poly& operator+=(const Poly& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }

    Poly& operator-=(const Poly& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }

    friend Poly operator*(const Poly& a, const Poly& b)
    {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }

    friend Poly operator*(const Rat& s, Poly p)
    {
        for (auto& a : p.c_) a *= s;
        p.trim();
        return p;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly compose(const Poly& inner) const
    {
        Poly acc;
        for (std::size_t k = c_.size(); k-- > 0;)
            acc = acc * inner + Poly::constant(c_[k]);
        return acc;
    }

    Poly pow(long e) const
    {
        Poly r = Poly::constant(Rat(1));
        for (long i = 0; i < e; ++i) r = r * (*this);
        return r;
    }

    // Human-readable form in the given variable, lowest degree first.
    std::string str(const std::string& var = "d") const
    {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k] == 0) continue;
            if (!s.empty()) s += " + ";
            s += rat_str(c_[k]);
            if (k >= 1) s += "*" + var + (k > 1 ? "^" + std::to_string(k) : "");
        }
        return s;
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rat> c_;   // c_[k] multiplies x^k; no trailing zeros
};

}  // namespace hyperjet

#endif
