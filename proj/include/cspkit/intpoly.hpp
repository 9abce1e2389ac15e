#pragma once

/*
  Dense univariate polynomials in the formal variable q, with
  arbitrary-precision integer coefficients.  All arithmetic is exact;
  there is no floating point anywhere in this library.

  Canonical form: coeffs[i] holds the coefficient of q^i, the highest
  stored coefficient is nonzero, and the zero polynomial is the empty
  sequence.
*/

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cspkit {

using Int = boost::multiprecision::cpp_int;

class IntPoly {
public:
    IntPoly() = default;

    explicit IntPoly(Int constant) {
        if (constant != 0) coeffs_.push_back(std::move(constant));
    }

    explicit IntPoly(long constant) : IntPoly(Int(constant)) {}

    explicit IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    IntPoly(std::initializer_list<long> coeffs) {
        coeffs_.reserve(coeffs.size());
        for (long c : coeffs) coeffs_.emplace_back(c);
        trim();
    }

    static IntPoly zero() { return IntPoly(); }
    static IntPoly one() { return IntPoly(Int(1)); }

    /// q^k
    static IntPoly q_power(long k) {
        if (k < 0) throw std::invalid_argument("q_power: negative exponent");
        IntPoly p;
        p.coeffs_.assign(static_cast<std::size_t>(k) + 1, Int(0));
        p.coeffs_.back() = 1;
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree of the polynomial, -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    /// Lowest index with a nonzero coefficient, -1 for the zero polynomial.
    long low_degree() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return static_cast<long>(i);
        return -1;
    }

    const Int& coeff(long i) const {
        static const Int kZero = 0;
        if (i < 0 || i >= static_cast<long>(coeffs_.size())) return kZero;
        return coeffs_[static_cast<std::size_t>(i)];
    }

    const std::vector<Int>& coeffs() const { return coeffs_; }

    bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const IntPoly& o) const { return !(*this == o); }

    IntPoly operator+(const IntPoly& o) const {
        std::vector<Int> r(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] = coeffs_[i];
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) r[i] += o.coeffs_[i];
        return IntPoly(std::move(r));
    }

    IntPoly operator-() const {
        std::vector<Int> r(coeffs_);
        for (auto& c : r) c = -c;
        IntPoly p;
        p.coeffs_ = std::move(r);
        return p;
    }

    IntPoly operator-(const IntPoly& o) const {
        std::vector<Int> r(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] = coeffs_[i];
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) r[i] -= o.coeffs_[i];
        return IntPoly(std::move(r));
    }

    IntPoly operator*(const IntPoly& o) const {
        if (is_zero() || o.is_zero()) return IntPoly();
        std::vector<Int> r(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
                r[i + j] += coeffs_[i] * o.coeffs_[j];
        }
        return IntPoly(std::move(r));
    }

    IntPoly operator*(const Int& s) const {
        if (s == 0) return IntPoly();
        std::vector<Int> r(coeffs_);
        for (auto& c : r) c *= s;
        IntPoly p;
        p.coeffs_ = std::move(r);
        return p;
    }

    IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }
    IntPoly& operator-=(const IntPoly& o) { return *this = *this - o; }
    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

    /// Multiply by q^k.
    IntPoly shifted(long k) const {
        if (is_zero()) return IntPoly();
        if (k < 0) {
            if (low_degree() < -k) throw std::invalid_argument("shifted: negative exponent underflow");
            IntPoly p;
            p.coeffs_.assign(coeffs_.begin() + static_cast<std::ptrdiff_t>(-k), coeffs_.end());
            return p;
        }
        IntPoly p;
        p.coeffs_.assign(static_cast<std::size_t>(k), Int(0));
        p.coeffs_.insert(p.coeffs_.end(), coeffs_.begin(), coeffs_.end());
        return p;
    }

    Int eval(const Int& x) const {
        Int acc = 0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    Int eval_at_one() const {
        Int acc = 0;
        for (const auto& c : coeffs_) acc += c;
        return acc;
    }

    /// Quotient and remainder with respect to a monic divisor.
    std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& d) const {
        if (d.is_zero() || d.coeffs_.back() != 1)
            throw std::invalid_argument("divmod_monic: divisor must be monic");
        if (degree() < d.degree()) return {IntPoly(), *this};
        std::vector<Int> rem(coeffs_);
        std::vector<Int> quo(static_cast<std::size_t>(degree() - d.degree()) + 1, Int(0));
        const long dd = d.degree();
        for (long i = degree(); i >= dd; --i) {
            Int c = rem[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            quo[static_cast<std::size_t>(i - dd)] = c;
            for (long j = 0; j <= dd; ++j)
                rem[static_cast<std::size_t>(i - dd + j)] -= c * d.coeffs_[static_cast<std::size_t>(j)];
        }
        return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
    }

    /// Exact division by a monic divisor; a nonzero remainder signals a
    /// transcription bug in a formula and must be loud.
    IntPoly divexact_monic(const IntPoly& d) const {
        auto [q, r] = divmod_monic(d);
        if (!r.is_zero()) throw std::logic_error("divexact_monic: nonzero remainder");
        return q;
    }

    IntPoly mod_monic(const IntPoly& d) const { return divmod_monic(d).second; }

    /// True iff the coefficients between the lowest and highest nonzero
    /// terms form a palindrome.  The zero polynomial is palindromic.
    bool is_palindromic() const {
        long lo = low_degree(), hi = degree();
        for (long i = lo, j = hi; i < j; ++i, --j)
            if (coeff(i) != coeff(j)) return false;
        return true;
    }

    /// Human-readable form, lowest degree first: "1 + q^4 + 2q^5".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (long i = 0; i <= degree(); ++i) {
            const Int& c = coeff(i);
            if (c == 0) continue;
            Int a = c < 0 ? Int(-c) : c;
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            if (a != 1 || i == 0) os << a.str();
            if (i == 1) os << "q";
            else if (i > 1) os << "q^" << i;
        }
        return os.str();
    }

    /// JSON wire form: array of decimal strings, lowest degree first.
    std::vector<std::string> coeff_strings() const {
        std::vector<std::string> v;
        v.reserve(coeffs_.size());
        for (const auto& c : coeffs_) v.push_back(c.str());
        return v;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Int> coeffs_;
};

} // namespace cspkit
