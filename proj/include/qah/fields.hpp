#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <concepts>
#include <cstdint>
#include <string>

#include "qah/errors.hpp"

namespace qah {

/// Runtime description of the scalar field, as it appears in task files.
struct FieldSpec {
    enum class Kind { rationals, prime };
    Kind kind = Kind::rationals;
    std::uint64_t p = 0; // modulus when kind == prime

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// The field Q with arbitrary-precision rational scalars.
struct Rationals {
    using Elem = boost::multiprecision::cpp_rational;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long long v) const { return Elem(v); }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw error("division by zero in Q");
        return Elem(1) / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    std::string to_string(const Elem& a) const { return a.str(); }

    Elem parse(const std::string& s) const {
        try {
            Elem v(s);
            return v;
        } catch (const std::exception&) {
            throw parse_error("not a rational scalar: '" + s + "'");
        }
    }

    FieldSpec spec() const { return {FieldSpec::Kind::rationals, 0}; }
    std::string name() const { return "Q"; }

    friend bool operator==(const Rationals&, const Rationals&) { return true; }
};

/// The prime field F_p with a runtime modulus. Elements are canonical
/// representatives in [0, p).
struct PrimeField {
    using Elem = std::uint64_t;

    std::uint64_t p = 2;

    explicit PrimeField(std::uint64_t modulus = 2) : p(modulus) {
        if (!is_prime_u64(p)) throw validation_error("not a prime modulus: " + std::to_string(p));
        if (p > (1ull << 31)) throw validation_error("prime modulus too large");
    }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    Elem from_int(long long v) const {
        long long r = v % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        return static_cast<Elem>(r);
    }

    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        return s >= p ? s - p : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem inv(Elem a) const {
        if (a == 0) throw error("division by zero in F_" + std::to_string(p));
        // extended Euclid
        std::int64_t t = 0, newt = 1;
        std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a);
        while (newr != 0) {
            std::int64_t q = r / newr;
            std::int64_t tmp = t - q * newt;
            t = newt;
            newt = tmp;
            tmp = r - q * newr;
            r = newr;
            newr = tmp;
        }
        if (t < 0) t += static_cast<std::int64_t>(p);
        return static_cast<Elem>(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }

    std::string to_string(Elem a) const { return std::to_string(a); }

    Elem parse(const std::string& s) const {
        if (s.empty()) throw parse_error("empty scalar");
        std::size_t i = 0;
        bool negative = false;
        if (s[0] == '-' || s[0] == '+') {
            negative = s[0] == '-';
            i = 1;
        }
        if (i == s.size()) throw parse_error("not an integer scalar: '" + s + "'");
        Elem v = 0;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw parse_error("not an integer scalar over F_" + std::to_string(p) + ": '" + s + "'");
            v = (v * 10 + static_cast<Elem>(s[i] - '0')) % p;
        }
        return negative ? neg(v) : v;
    }

    FieldSpec spec() const { return {FieldSpec::Kind::prime, p}; }
    std::string name() const { return "F_" + std::to_string(p); }

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p == b.p; }
};

template <typename F>
concept field = requires(const F f, typename F::Elem a) {
    { f.zero() } -> std::convertible_to<typename F::Elem>;
    { f.one() } -> std::convertible_to<typename F::Elem>;
    { f.add(a, a) } -> std::convertible_to<typename F::Elem>;
    { f.sub(a, a) } -> std::convertible_to<typename F::Elem>;
    { f.mul(a, a) } -> std::convertible_to<typename F::Elem>;
    { f.neg(a) } -> std::convertible_to<typename F::Elem>;
    { f.inv(a) } -> std::convertible_to<typename F::Elem>;
    { f.is_zero(a) } -> std::convertible_to<bool>;
    { f.eq(a, a) } -> std::convertible_to<bool>;
    { f.to_string(a) } -> std::convertible_to<std::string>;
    { f.spec() } -> std::convertible_to<FieldSpec>;
    { f == f } -> std::convertible_to<bool>;
};

template <field F>
void require_same_field(const F& a, const F& b, const char* where) {
    if (!(a == b)) throw field_mismatch(std::string(where) + ": operands over different fields");
}

} // namespace qah
