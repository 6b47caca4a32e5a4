#ifndef SGDIM_FIELD_HPP
#define SGDIM_FIELD_HPP

// Exact coefficient arithmetic: the rationals (GMP-backed) and prime fields
// F_p with p < 2^31. A Coeff carries its field so mixed-field arithmetic is
// caught at run time instead of producing garbage.

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "sgdim/error.hpp"

namespace sgdim {

enum class field_kind { rationals, prime };

struct CoefficientField {
    field_kind kind = field_kind::rationals;
    std::uint64_t p = 0; // modulus when kind == prime

    static CoefficientField rationals() { return CoefficientField{}; }

    static CoefficientField prime(std::uint64_t p) {
        if (p < 2 || p >= (std::uint64_t(1) << 31))
            fail(errc::invalid_presentation,
                 "prime field modulus must satisfy 2 <= p < 2^31");
        for (std::uint64_t q = 2; q * q <= p; ++q)
            if (p % q == 0)
                fail(errc::invalid_presentation,
                     "modulus " + std::to_string(p) + " is not prime");
        CoefficientField f;
        f.kind = field_kind::prime;
        f.p = p;
        return f;
    }

    bool is_rational() const { return kind == field_kind::rationals; }
    std::uint64_t characteristic() const { return is_rational() ? 0 : p; }

    std::string name() const {
        return is_rational() ? "QQ" : "F" + std::to_string(p);
    }

    friend bool operator==(const CoefficientField& a, const CoefficientField& b) {
        return a.kind == b.kind && a.p == b.p;
    }
    friend bool operator!=(const CoefficientField& a, const CoefficientField& b) {
        return !(a == b);
    }
};

inline void check_same_field(const CoefficientField& a, const CoefficientField& b) {
    if (a != b)
        fail(errc::field_mismatch,
             "coefficient fields differ: " + a.name() + " vs " + b.name());
}

inline void check_same_field(const CoefficientField& a, const CoefficientField& b,
                             const std::string& what) {
    if (a != b)
        fail(errc::field_mismatch, "coefficient field of the " + what + " is " +
                                       a.name() + ", expected " + b.name());
}

// Modular inverse by extended Euclid; a must be nonzero mod p.
inline std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    std::int64_t t = 0, nt = 1;
    std::int64_t r = std::int64_t(p), nr = std::int64_t(a % p);
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
        tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (r != 1) fail(errc::internal, "division by zero residue");
    if (t < 0) t += std::int64_t(p);
    return std::uint64_t(t);
}

// One field element. For the rationals the value is an arbitrary-precision
// canonical fraction; for F_p it is the integer residue in [0, p) stored in
// the same slot (denominator 1).
class Coeff {
public:
    Coeff() = default; // rational zero

    static Coeff zero(const CoefficientField& f) { return Coeff(f, mpq_class(0)); }
    static Coeff one(const CoefficientField& f) { return of_int(f, 1); }

    static Coeff of_int(const CoefficientField& f, long v) {
        return of_integer(f, mpz_class(v));
    }

    static Coeff of_integer(const CoefficientField& f, const mpz_class& v) {
        if (f.is_rational()) return Coeff(f, mpq_class(v));
        mpz_class r = v % mpz_class(static_cast<unsigned long>(f.p));
        if (r < 0) r += static_cast<unsigned long>(f.p);
        return Coeff(f, mpq_class(r));
    }

    static Coeff of_rational(const mpq_class& q) {
        mpq_class v(q);
        v.canonicalize();
        return Coeff(CoefficientField::rationals(), v);
    }

    const CoefficientField& field() const { return field_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    // Rational view (any field; for F_p this is the residue over 1).
    const mpq_class& rat() const { return v_; }
    std::uint64_t residue() const {
        if (field_.is_rational()) fail(errc::internal, "residue() on a rational");
        return v_.get_num().get_ui();
    }

    Coeff operator-() const {
        if (is_zero()) return *this;
        if (field_.is_rational()) return Coeff(field_, -v_);
        return Coeff(field_, mpq_class(static_cast<unsigned long>(field_.p) - residue()));
    }

    Coeff inv() const {
        if (is_zero()) fail(errc::internal, "inverse of zero");
        if (field_.is_rational()) return Coeff(field_, 1 / v_);
        return Coeff(field_, mpq_class(mod_inverse(residue(), field_.p)));
    }

    friend Coeff operator+(const Coeff& a, const Coeff& b) {
        check_same_field(a.field_, b.field_);
        if (a.field_.is_rational()) return Coeff(a.field_, mpq_class(a.v_ + b.v_));
        return Coeff(a.field_, mpq_class((a.residue() + b.residue()) % a.field_.p));
    }
    friend Coeff operator-(const Coeff& a, const Coeff& b) { return a + (-b); }
    friend Coeff operator*(const Coeff& a, const Coeff& b) {
        check_same_field(a.field_, b.field_);
        if (a.field_.is_rational()) return Coeff(a.field_, mpq_class(a.v_ * b.v_));
        return Coeff(a.field_, mpq_class((a.residue() * b.residue()) % a.field_.p));
    }
    friend Coeff operator/(const Coeff& a, const Coeff& b) { return a * b.inv(); }

    friend bool operator==(const Coeff& a, const Coeff& b) {
        return a.field_ == b.field_ && a.v_ == b.v_;
    }
    friend bool operator!=(const Coeff& a, const Coeff& b) { return !(a == b); }

    // Canonical printing: "2", "-1/3", residues as plain integers.
    std::string str() const { return v_.get_str(); }

private:
    Coeff(const CoefficientField& f, mpq_class v) : field_(f), v_(std::move(v)) {}

    CoefficientField field_;
    mpq_class v_; // prime fields: integer residue in [0, p)
};

} // namespace sgdim

#endif
