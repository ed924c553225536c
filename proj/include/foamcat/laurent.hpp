#pragma once

#include <map>
#include <stdexcept>
#include <sstream>
#include <string>

#include "foamcat/zint.hpp"

namespace foamcat {

// Integer Laurent polynomial in q. Zero coefficients are never stored.
class Laurent {
public:
    Laurent() = default;
    Laurent(long c) { if (c != 0) coeffs_[0] = c; }
    Laurent(const Zint& c) { if (c != 0) coeffs_[0] = c; }

    static Laurent q(int e, Zint c = 1) {
        Laurent p;
        if (c != 0) p.coeffs_[e] = std::move(c);
        return p;
    }

    const std::map<int, Zint>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Zint coeff(int e) const {
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? Zint(0) : it->second;
    }

    void set_coeff(int e, Zint c) {
        if (c == 0) coeffs_.erase(e);
        else coeffs_[e] = std::move(c);
    }

    Laurent& operator+=(const Laurent& o) {
        for (auto& [e, c] : o.coeffs_) {
            Zint& t = coeffs_[e];
            t += c;
            if (t == 0) coeffs_.erase(e);
        }
        return *this;
    }
    Laurent& operator-=(const Laurent& o) {
        for (auto& [e, c] : o.coeffs_) {
            Zint& t = coeffs_[e];
            t -= c;
            if (t == 0) coeffs_.erase(e);
        }
        return *this;
    }
    friend Laurent operator+(Laurent a, const Laurent& b) { a += b; return a; }
    friend Laurent operator-(Laurent a, const Laurent& b) { a -= b; return a; }
    friend Laurent operator-(const Laurent& a) {
        Laurent r;
        for (auto& [e, c] : a.coeffs_) r.coeffs_[e] = -c;
        return r;
    }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (auto& [ea, ca] : a.coeffs_)
            for (auto& [eb, cb] : b.coeffs_) {
                Zint& t = r.coeffs_[ea + eb];
                t += ca * cb;
                if (t == 0) r.coeffs_.erase(ea + eb);
            }
        return r;
    }
    Laurent& operator*=(const Laurent& o) { *this = *this * o; return *this; }

    // Multiply by q^e.
    Laurent shifted(int e) const {
        Laurent r;
        for (auto& [k, c] : coeffs_) r.coeffs_[k + e] = c;
        return r;
    }

    // Exact division; throws if the quotient is not a Laurent polynomial.
    friend Laurent operator/(const Laurent& a, const Laurent& b) {
        if (b.is_zero()) throw std::domain_error("Laurent: division by zero");
        Laurent rem = a, quot;
        int eb = b.coeffs_.rbegin()->first;
        const Zint& cb = b.coeffs_.rbegin()->second;
        while (!rem.is_zero()) {
            int ea = rem.coeffs_.rbegin()->first;
            const Zint& ca = rem.coeffs_.rbegin()->second;
            if (ca % cb != 0) throw std::domain_error("Laurent: inexact division");
            Zint q0 = ca / cb;
            Laurent t = Laurent::q(ea - eb, q0);
            quot += t;
            rem -= t * b;
        }
        return quot;
    }

    bool operator==(const Laurent& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }
    bool operator<(const Laurent& o) const { return coeffs_ < o.coeffs_; }

    Zint eval_at_one() const {
        Zint s = 0;
        for (auto& [e, c] : coeffs_) s += c;
        return s;
    }

    // Substitute q -> q^-1.
    Laurent bar() const {
        Laurent r;
        for (auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
        return r;
    }

    int min_deg() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
    int max_deg() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

    bool nonneg_coeffs() const {
        for (auto& [e, c] : coeffs_) if (c < 0) return false;
        return true;
    }

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            Zint c = it->second;
            int e = it->first;
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            Zint ac = zabs(c);
            if (ac != 1 || e == 0) os << ac.get_str();
            if (e != 0) {
                if (ac != 1) os << "*";
                os << "q";
                if (e != 1) os << "^" << e;
            }
            first = false;
        }
        return os.str();
    }

private:
    std::map<int, Zint> coeffs_;
};

// Balanced quantum integer [k] = (q^k - q^-k)/(q - q^-1).
inline Laurent qint(int k) {
    if (k < 0) throw std::domain_error("qint: negative argument");
    Laurent r;
    for (int e = k - 1; e >= -(k - 1); e -= 2) r += Laurent::q(e);
    return r;
}

inline Laurent qfactorial(int k) {
    Laurent r(1);
    for (int j = 1; j <= k; ++j) r *= qint(j);
    return r;
}

// Quantum binomial [n choose k]; always a genuine polynomial.
inline Laurent qbinom(int n, int k) {
    if (k < 0 || k > n) throw std::domain_error("qbinom: k out of range");
    Laurent num(1);
    for (int j = 0; j < k; ++j) num *= qint(n - j);
    return num / qfactorial(k);
}

}  // namespace foamcat
