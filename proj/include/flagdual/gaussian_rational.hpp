#pragma once

#include <gmpxx.h>

#include <cctype>
#include <complex>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "flagdual/errors.hpp"

namespace flagdual
{

/**
 * @brief Exact element of Q(i), stored as a pair of GMP rationals
 *
 * Arithmetic is closed; division by zero throws DegenerateInput.
 * Text form is "a/b" or "a/b+c/d*i" with both parts in lowest terms.
 */
class GaussianRational
{
public:
    GaussianRational() = default;
    GaussianRational(long v) : re_{v}, im_{0} {}  // NOLINT(implicit)
    GaussianRational(mpq_class re, mpq_class im = 0)
        : re_{std::move(re)}, im_{std::move(im)}
    {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussianRational i() { return {mpq_class{0}, mpq_class{1}}; }

    const mpq_class& real() const noexcept { return re_; }
    const mpq_class& imag() const noexcept { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }

    /** |z|^2 */
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational conj() const { return {re_, -im_}; }

    std::complex<double> to_complex() const
    {
        return {re_.get_d(), im_.get_d()};
    }

    GaussianRational& operator+=(const GaussianRational& o)
    {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o)
    {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o)
    {
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        mpq_class m = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(m);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o)
    {
        if (o.is_zero()) {
            throw DegenerateInput("division by zero in Q(i)");
        }
        const mpq_class n = o.norm();
        mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
        mpq_class m = (im_ * o.re_ - re_ * o.im_) / n;
        re_ = std::move(r);
        im_ = std::move(m);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b)
    {
        return a += b;
    }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b)
    {
        return a -= b;
    }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b)
    {
        return a *= b;
    }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b)
    {
        return a /= b;
    }
    friend GaussianRational operator-(const GaussianRational& a)
    {
        return {-a.re_, -a.im_};
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b)
    {
        return !(a == b);
    }

    /**
     * Total order on (re numerator, re denominator, im numerator, im
     * denominator); used only for deterministic canonical choices.
     */
    friend bool canonical_less(const GaussianRational& a, const GaussianRational& b)
    {
        const mpz_class* ka[4] = {&a.re_.get_num(), &a.re_.get_den(),
                                  &a.im_.get_num(), &a.im_.get_den()};
        const mpz_class* kb[4] = {&b.re_.get_num(), &b.re_.get_den(),
                                  &b.im_.get_num(), &b.im_.get_den()};
        for (int n = 0; n < 4; ++n) {
            const int c = cmp(*ka[n], *kb[n]);
            if (c != 0) {
                return c < 0;
            }
        }
        return false;
    }

    std::string to_string() const
    {
        std::string s = rational_text(re_);
        if (sgn(im_) != 0) {
            s += sgn(im_) > 0 ? "+" : "-";
            s += rational_text(abs(im_));
            s += "*i";
        }
        return s;
    }

    /** Accepts "3", "-1/2", "i", "2*i", "1/2-3/4*i", "-i+1" and similar. */
    static GaussianRational parse(std::string_view text)
    {
        std::string s;
        for (char c : text) {
            if (!std::isspace(static_cast<unsigned char>(c))) {
                s.push_back(c);
            }
        }
        if (s.empty()) {
            throw ParseError("empty Gaussian rational");
        }
        GaussianRational out;
        std::size_t pos = 0;
        while (pos < s.size()) {
            std::size_t end = pos + 1;
            while (end < s.size() && s[end] != '+' && s[end] != '-') {
                ++end;
            }
            out += parse_term(s.substr(pos, end - pos), text);
            pos = end;
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z)
    {
        return os << z.to_string();
    }

private:
    static std::string rational_text(const mpq_class& q)
    {
        return q.get_num().get_str() + "/" + q.get_den().get_str();
    }

    static mpq_class parse_rational(const std::string& t, std::string_view whole)
    {
        if (t.empty()) {
            return 1;
        }
        for (char c : t) {
            if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/') {
                throw ParseError("invalid Gaussian rational: " + std::string(whole));
            }
        }
        mpq_class q;
        if (q.set_str(t, 10) != 0 || t.front() == '/' || t.back() == '/') {
            throw ParseError("invalid Gaussian rational: " + std::string(whole));
        }
        if (sgn(q.get_den()) == 0) {
            throw ParseError("zero denominator: " + std::string(whole));
        }
        q.canonicalize();
        return q;
    }

    static GaussianRational parse_term(std::string term, std::string_view whole)
    {
        int sign = 1;
        if (term.front() == '+' || term.front() == '-') {
            sign = term.front() == '-' ? -1 : 1;
            term.erase(0, 1);
        }
        if (term.empty()) {
            throw ParseError("dangling sign in: " + std::string(whole));
        }
        bool imaginary = false;
        if (term.back() == 'i') {
            imaginary = true;
            term.pop_back();
            if (!term.empty() && term.back() == '*') {
                term.pop_back();
                if (term.empty()) {
                    throw ParseError("invalid Gaussian rational: " + std::string(whole));
                }
            }
        }
        mpq_class q = parse_rational(term, whole) * sign;
        return imaginary ? GaussianRational{0, q} : GaussianRational{q, 0};
    }

    mpq_class re_{0};
    mpq_class im_{0};
};

}  // namespace flagdual
